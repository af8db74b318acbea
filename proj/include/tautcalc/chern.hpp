#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"

namespace tautcalc {

/// Exponent vector (d_1, d_2, ...) of c_1^{d_1} c_2^{d_2} ..., trailing
/// zeros trimmed.
using ChernMonomial = std::vector<int>;

int weighted_degree(const ChernMonomial& m);
/// sum_j floor(j/2) d_j
int filtration_weight(const ChernMonomial& m);
std::string to_string(const ChernMonomial& m);

/// Q-linear combination of Chern monomials.
class SymPolynomial {
 public:
  static SymPolynomial c(int j);
  static SymPolynomial constant(const Rational& a);

  const std::map<ChernMonomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const ChernMonomial& m) const;
  void add(const ChernMonomial& m, const Rational& a);

  SymPolynomial& operator+=(const SymPolynomial& o);
  SymPolynomial& operator*=(const Rational& a);
  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b);
  bool operator==(const SymPolynomial&) const = default;

  std::string to_string() const;

 private:
  std::map<ChernMonomial, Rational> terms_;
};

/// ch_1..ch_{i_max} through the Newton recursion
/// p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k, ch_k = p_k / k!.
/// Throws std::invalid_argument when i_max < 1.
std::vector<SymPolynomial> chern_character_expansion(int i_max);

/// Same expansion through the formal logarithm of c(t) = 1 + c_1 t + ...:
/// ch_k = (-1)^{k-1} [t^k] log c(t) / (k-1)!.
std::vector<SymPolynomial> chern_character_via_log(int i_max);

struct NewtonRow {
  int i = 0;
  Rational leading;        // coefficient of c_i in ch_i
  std::size_t monomials = 0;
  int max_weight = 0;      // over monomials of Q (0 when Q is empty)
  bool homogeneous = true;
  bool leading_ok = true;
  bool bound_ok = true;
  std::string first_violation;
};

/// One row per i in 1..i_max. Throws std::invalid_argument when i_max < 2.
std::vector<NewtonRow> verify_filtration_bound(int i_max);

/// Rows plus the oracle comparison, as report entries.
Report chern_report(int i_max);

/// Text derivation of c_{2m} in I_m. Throws std::invalid_argument when m < 1.
std::vector<std::string> filtration_certificate(int m);
Report certificate_report(int m);

}  // namespace tautcalc
