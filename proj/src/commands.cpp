#include "tautcalc/commands.hpp"

#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "tautcalc/chern.hpp"
#include "tautcalc/correspondence.hpp"
#include "tautcalc/hypersurface.hpp"
#include "tautcalc/motive.hpp"
#include "tautcalc/serialize.hpp"
#include "tautcalc/taut_ring.hpp"

namespace tautcalc {

namespace {

void guard(bool exceeded, const Limits& limits, const std::string& what) {
  if (exceeded && !limits.force) throw UsageError(what + " exceeds the default resource guard (use --force)");
}

HypersurfaceContext context_or_usage(int n, int d) {
  try {
    return HypersurfaceContext::from_degree(n, d);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

}  // namespace

Report cmd_taut_table(int n, int d, int m, const Limits& limits) {
  if (m < 1) throw UsageError("m must be at least 1");
  guard(m > limits.max_arity, limits, "m = " + std::to_string(m));
  auto ctx = context_or_usage(n, d);
  auto p = Presentation::standard(ctx);
  Report r;
  r.command = "taut";
  r.context = to_json(ctx);
  r.context["m"] = m;
  const int t = x4_threshold(*p);
  r.context["relation_threshold"] = t;
  for (int c = 0; c <= m * n; ++c) {
    auto g = pairing_gram(p, m, c);
    std::string num = std::to_string(c);
    if (num.size() < 2) num = "0" + num;
    Json data{{"codim", c},
              {"basis_size", g.gram.rows()},
              {"dual_basis_size", g.gram.cols()},
              {"gram_rank", g.rank}};
    std::string name = "codim " + num;
    if (m >= t) {
      Entry e = Entry::skipped(name, "tautological-pairing",
                               "the finite-dimensionality relation lives in this arity");
      e.data.update(data);
      r.entries.push_back(std::move(e));
    } else {
      r.entries.push_back(Entry::check(name, "tautological-pairing", g.nondegenerate,
                                       "rank " + std::to_string(g.rank) + " on " +
                                           std::to_string(g.gram.rows()) + "x" + std::to_string(g.gram.cols()),
                                       data));
    }
  }
  return r;
}

Report cmd_verify_mck(int n, int d, bool control) {
  auto ctx = context_or_usage(n, d);
  auto r = verify_mck(Presentation::standard(ctx), control);
  r.sort_entries();
  return r;
}

Report cmd_gram(int parity, long b, int k, const Limits& limits) {
  if (parity != 0 && parity != 1) throw UsageError("parity must be even or odd");
  if (b < 0) throw UsageError("b must be non-negative");
  if (parity == 1 && b % 2 != 0) throw UsageError("odd parity needs an even b");
  if (k < 1) throw UsageError("k must be at least 1");
  guard(k > limits.max_matching_k, limits, "k = " + std::to_string(k));
  const int n = parity == 0 ? 2 : 1;
  auto ctx = HypersurfaceContext::with_primitive_rank(n, 3, BigInt(b));
  auto p = Presentation::standard(ctx);
  auto g = matching_gram(p, k);
  Report r;
  r.command = "gram";
  r.context = Json{{"parity", parity == 0 ? "even" : "odd"}, {"n", n}, {"b", b}, {"k", k},
                   {"tau_square", to_string(p->tau_square)}, {"relation_threshold", x4_threshold(*p)}};
  Json data{{"matchings", g.gram.rows()}, {"rank", g.rank}, {"kernel_dim", g.kernel_dim},
            {"orbit_dim", g.orbit_dim}};
  r.entries.push_back(Entry::check("cycle formula", "matching-pairing", g.cycle_formula_ok,
                                   "an entry differs from c^#cycles", Json{{"gram", to_json(g.gram)}}));
  r.entries.push_back(Entry::check("symmetric", "matching-pairing", g.symmetric, "Gram matrix not symmetric"));
  if (!g.orbit_available) {
    Entry e = Entry::skipped("kernel equals relation orbit", "finite-dimensionality-relation",
                             "relation too large to expand");
    e.data.update(data);
    r.entries.push_back(std::move(e));
  } else {
    r.entries.push_back(Entry::check("kernel equals relation orbit", "finite-dimensionality-relation",
                                     g.kernels_equal,
                                     "kernel dim " + std::to_string(g.kernel_dim) + ", orbit dim " +
                                         std::to_string(g.orbit_dim),
                                     data));
  }
  r.sort_entries();
  return r;
}

Report cmd_fano(int n_min, int n_max, const Limits& limits) {
  if (n_min < 2 || n_max < n_min) throw UsageError("need 2 <= n-min <= n-max");
  guard(n_max > limits.max_fano_n, limits, "n-max = " + std::to_string(n_max));
  Report r;
  r.command = "fano";
  r.context = Json{{"n_min", n_min}, {"n_max", n_max}, {"d", 3}};
  for (int n = n_min; n <= n_max; ++n) r.append(verify_fano_identities(n));
  r.sort_entries();
  return r;
}

Report cmd_chern(int max_i, const std::vector<int>& certificates, const Limits& limits) {
  if (max_i < 2) throw UsageError("max-i must be at least 2");
  guard(max_i > limits.max_chern_i, limits, "max-i = " + std::to_string(max_i));
  Report r = chern_report(max_i);
  r.context["certificates"] = certificates;
  for (int m : certificates) {
    if (m < 1) throw UsageError("certificate m must be at least 1");
    guard(2 * m > limits.max_chern_i, limits, "m = " + std::to_string(m));
    r.append(certificate_report(m));
  }
  r.command = "chern";
  r.sort_entries();
  return r;
}

Report cmd_star(int N, int d, int r, StarMode mode, std::uint64_t seed, const std::string& points) {
  if (N < 1 || d < 0) throw UsageError("need ambient-dim >= 1 and degree >= 0");
  try {
    if (mode == StarMode::User) {
      if (points.empty()) throw UsageError("user mode needs --points");
      auto config = parse_points(N, points);
      if (r > 0 && static_cast<int>(config.points.size()) != r)
        throw UsageError("--r disagrees with the number of points");
      return star_report(check_star(N, d, config));
    }
    if (r < 1) throw UsageError("r must be at least 1");
    return star_report(check_star(N, d, r, mode, seed));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of tautological-ring identities for hypersurfaces"};
  app.require_subcommand(1);

  std::string format = "json";
  if (const char* env = std::getenv("TAUTCALC_FORMAT")) format = env;
  app.add_option("--format", format, "Output format (json or markdown); default from TAUTCALC_FORMAT")
      ->check(CLI::IsMember({"json", "markdown"}));
  Limits limits;
  app.add_flag("--force", limits.force, "Lift the default resource guards");

  int n = 4, d = 3, m = 2;
  auto* taut = app.add_subcommand("taut", "Basis sizes and pairing ranks of the presented ring of Y^m");
  taut->alias("taut-table");
  taut->add_option("--n", n, "Dimension of Y")->required();
  taut->add_option("--d", d, "Degree of Y")->required();
  taut->add_option("--m", m, "Number of factors")->required();

  bool no_control = false;
  auto* mck = app.add_subcommand("mck", "Multiplicativity of the Chow-Kuenneth decomposition");
  mck->alias("verify-mck");
  mck->add_option("--n", n, "Dimension of Y")->required();
  mck->add_option("--d", d, "Degree of Y")->required();
  mck->add_flag("--no-control", no_control, "Skip the ring without the contraction rule");

  std::string parity;
  long b = 1;
  int k = 2;
  auto* gram = app.add_subcommand("gram", "Perfect-matching Gram matrix against the finite-dimensionality relation");
  gram->add_option("--parity", parity, "Parity of n")->required()->check(CLI::IsMember({"even", "odd"}));
  gram->add_option("--b", b, "Primitive middle Betti rank")->required();
  gram->add_option("--k", k, "Half the number of factors")->required();

  int n_min = 2, n_max = 10;
  auto* fano = app.add_subcommand("fano", "Motive of the Fano variety of lines of a cubic");
  fano->add_option("--n-min", n_min, "Smallest n");
  fano->add_option("--n-max", n_max, "Largest n");

  int max_i = 24;
  std::vector<int> certs{1, 4, 5};
  auto* chern = app.add_subcommand("chern", "Chern character expansion and the filtration bound");
  chern->add_option("--max-i", max_i, "Largest index i");
  chern->add_option("--m", certs, "Certificates c_2m in I_m to emit");

  auto* star = app.add_subcommand("star", "Evaluation surjectivity for O(d) on P^N");
  star->require_subcommand(1);
  auto* star_check = star->add_subcommand("check", "Check one configuration");
  int N = 5, r = 4;
  std::string mode_name = "random", points;
  std::uint64_t seed = 20240601;
  star_check->add_option("--ambient-dim", N, "N for P^N")->required();
  star_check->add_option("--degree", d, "Degree of the line bundle")->required();
  star_check->add_option("--r", r, "Number of points");
  star_check->add_option("--mode", mode_name, "random, collinear or user")
      ->check(CLI::IsMember({"random", "collinear", "user"}));
  star_check->add_option("--seed", seed, "Seed for random and collinear modes");
  star_check->add_option("--points", points, "Points for user mode: \"x0,x1,...;y0,...\"");

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  Report report;
  try {
    if (*taut) report = cmd_taut_table(n, d, m, limits);
    else if (*mck) report = cmd_verify_mck(n, d, !no_control);
    else if (*gram) report = cmd_gram(parity == "even" ? 0 : 1, b, k, limits);
    else if (*fano) report = cmd_fano(n_min, n_max, limits);
    else if (*chern) report = cmd_chern(max_i, certs, limits);
    else if (*star_check) report = cmd_star(N, d, star_check->count("--r") ? r : (mode_name == "user" ? 0 : r),
                                            parse_star_mode(mode_name), seed, points);
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::length_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  if (format == "markdown") out << report.to_markdown();
  else out << report.to_json().dump(2) << "\n";
  return report.exit_code();
}

}  // namespace tautcalc
