#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "tautcalc/rational.hpp"
#include "tautcalc/report.hpp"

namespace tautcalc {

/// Polynomial in the symbol b (the primitive middle Betti rank).
class BPoly {
 public:
  BPoly() = default;
  BPoly(long c);  // NOLINT: constants convert implicitly
  static BPoly b();

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  Rational eval(const Rational& b) const;
  std::string to_string() const;

  BPoly& operator+=(const BPoly& o);
  BPoly& operator-=(const BPoly& o);
  BPoly& operator*=(const BPoly& o);
  friend BPoly operator+(BPoly a, const BPoly& o) { return a += o; }
  friend BPoly operator-(BPoly a, const BPoly& o) { return a -= o; }
  friend BPoly operator*(BPoly a, const BPoly& o) { return a *= o; }
  friend BPoly operator*(const Rational& c, BPoly a);
  bool operator==(const BPoly&) const = default;

 private:
  void trim();
  std::vector<Rational> c_;  // c_[k] is the coefficient of b^k
};

/// Cohomological degree -> b-polynomial dimension.
using PoincarePoly = std::map<int, BPoly>;

PoincarePoly& add_into(PoincarePoly& acc, const PoincarePoly& p, long times = 1);
bool same_poincare(const PoincarePoly& a, const PoincarePoly& b);
/// Sum of all coefficients.
BPoly poincare_total(const PoincarePoly& p);
/// Super-symmetric square: (P(t)^2 + sum_k (-1)^k c_k t^{2k}) / 2.
PoincarePoly sym2_poincare(const PoincarePoly& p);
std::string to_string(const PoincarePoly& p);

/// UNIT(t) = 1(t), PRIM(t) = T(t) with T the primitive middle motive of an
/// n-fold, SYM2PRIM(t) = (Sym^2 T)(t). FANO(t) is an opaque symbol for the
/// motive of the Fano variety of lines, used only while cancelling.
enum class MotiveKind { Unit = 0, Prim = 1, Sym2Prim = 2, Fano = 3 };

struct MotiveSymbol {
  MotiveKind kind;
  int twist;
  auto operator<=>(const MotiveSymbol&) const = default;
};

/// Formal Z-combination of motive symbols for an n-fold; multiplicities may
/// go negative only inside cancellation.
class Motive {
 public:
  explicit Motive(int n) : n_(n) {}
  static Motive unit(int n, int twist = 0);
  static Motive prim(int n, int twist = 0);
  static Motive fano_symbol(int n, int twist = 0);
  /// h(Y) = T + sum_{j=0}^n 1(-j).
  static Motive of_hypersurface(int n);

  int n() const { return n_; }
  const std::map<MotiveSymbol, long>& terms() const { return terms_; }
  long multiplicity(MotiveKind k, int twist) const;
  bool is_zero() const { return terms_.empty(); }
  bool effective() const;
  bool contains_fano() const;

  void add(MotiveSymbol s, long mult);
  Motive twisted(int t) const;
  /// Summands of cohomological degree k.
  Motive degree_part(int k) const;
  int degree_of(const MotiveSymbol& s) const;

  Motive& operator+=(const Motive& o);
  Motive& operator-=(const Motive& o);
  Motive times(long c) const;
  friend Motive operator+(Motive a, const Motive& b) { return a += b; }
  friend Motive operator-(Motive a, const Motive& b) { return a -= b; }
  bool operator==(const Motive&) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::map<MotiveSymbol, long> terms_;
};

/// Realization with symbolic b. FANO symbols are realized through
/// fano_motive(n).
PoincarePoly poincare(const Motive& m);

/// Throws std::invalid_argument for non-effective input, Sym^2 or FANO
/// summands, or when T (x) T would be needed (T of multiplicity >= 2).
Motive sym2(const Motive& m);

/// Multiplicity a_k of 1(-k) in the Fano motive of a cubic n-fold.
long fano_unit_multiplicity(int n, int k);
/// h(F) = Sym^2 T(2) + sum_{i=1}^{n-1} T(2-i) + sum_k 1(-k)^{a_k}. Throws
/// std::invalid_argument for n < 2.
Motive fano_motive(int n);

struct CancelResult {
  Motive common;
  Motive lhs;
  Motive rhs;
};
/// Removes the largest common summand of both sides.
CancelResult cancel(const Motive& lhs, const Motive& rhs);

/// Solves the Fano/Hilbert-square decomposition of h(Y^[2]) for h(F) by cancellation,
/// using h(Y^[2]) = Sym^2 h(Y) + sum_{j=1}^{n-1} h(Y)(-j). Throws
/// std::runtime_error when the remainder is not of the form F(-2) ~ effective.
Motive fano_from_gsv(int n);

/// All Fano-motive identities for one n (d = 3 implied).
Report verify_fano_identities(int n);

}  // namespace tautcalc
