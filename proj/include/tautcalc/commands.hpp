#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tautcalc/report.hpp"
#include "tautcalc/star.hpp"

namespace tautcalc {

/// Thrown for invalid parameters and exceeded resource guards; the CLI maps
/// it to exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Limits {
  bool force = false;
  int max_arity = 5;      // taut table
  int max_matching_k = 4;  // gram
  int max_chern_i = 40;
  int max_fano_n = 30;
};

/// Per-codimension basis sizes and pairing ranks of the presented ring of Y^m.
Report cmd_taut_table(int n, int d, int m, const Limits& limits = {});
Report cmd_verify_mck(int n, int d, bool control = true);
/// parity 0 (n = 2) or 1 (n = 1), d = 3, b_pr = b.
Report cmd_gram(int parity, long b, int k, const Limits& limits = {});
Report cmd_fano(int n_min, int n_max, const Limits& limits = {});
Report cmd_chern(int max_i, const std::vector<int>& certificates, const Limits& limits = {});
Report cmd_star(int N, int d, int r, StarMode mode, std::uint64_t seed, const std::string& points);

/// Full command-line front end. Returns the process exit code: 0 when every
/// check passed, 1 when one failed, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tautcalc
