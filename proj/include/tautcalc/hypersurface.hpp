#pragma once

#include <string>
#include <vector>

#include "tautcalc/rational.hpp"

namespace tautcalc {

/// Discrete data of a smooth degree-d hypersurface Y in P^{n+1}.
///
/// The Euler characteristic is derived from the Chern class of the tangent
/// bundle, c(T_Y) = (1+h)^{n+2} / (1+dh), together with deg h^n = d. The
/// primitive middle Betti rank follows from chi = n + 1 + (-1)^n b_pr.
class HypersurfaceContext {
 public:
  /// Derives chi and b_pr from (n, d). Throws std::invalid_argument when
  /// n < 1, d < 1, or the derived b_pr is negative.
  static HypersurfaceContext from_degree(int n, int d);

  /// Pins b_pr directly (abstract presentations, Gram experiments); chi is
  /// then derived from b_pr so the defining identity still holds.
  static HypersurfaceContext with_primitive_rank(int n, int d, const BigInt& b_pr);

  int n() const { return n_; }
  int d() const { return d_; }
  const BigInt& chi() const { return chi_; }
  const BigInt& b_pr() const { return b_pr_; }
  int parity() const { return n_ % 2; }
  bool even() const { return n_ % 2 == 0; }

  /// (-1)^n b_pr: the coefficient of o_i o_j in tau_{ij}^2.
  Rational signed_primitive_rank() const;

  std::string describe() const;

  bool operator==(const HypersurfaceContext&) const = default;

 private:
  HypersurfaceContext(int n, int d, BigInt chi, BigInt b_pr)
      : n_(n), d_(d), chi_(std::move(chi)), b_pr_(std::move(b_pr)) {}

  int n_;
  int d_;
  BigInt chi_;
  BigInt b_pr_;
};

BigInt euler_characteristic(int n, int d);

/// b_pr = (-1)^n (chi - n - 1); may be negative for parameter pairs that are
/// not smooth hypersurfaces, which from_degree rejects.
BigInt primitive_rank(int n, const BigInt& chi);

/// Orthogonal Hodge classes l^s in the primitive middle cohomology of a
/// cubic fourfold, given by their self-intersection degrees.
struct HodgeClass {
  std::string label;
  Rational self_degree;  // deg(l^s . l^s), nonzero

  bool operator==(const HodgeClass&) const = default;
};

class FourfoldExtension {
 public:
  /// Requires ctx.n() == 4, nonzero degrees, and b_tr = b_pr - #classes >= 0.
  FourfoldExtension(const HypersurfaceContext& ctx, std::vector<HodgeClass> classes);

  const std::vector<HodgeClass>& hodge_classes() const { return classes_; }
  const BigInt& b_tr() const { return b_tr_; }

 private:
  std::vector<HodgeClass> classes_;
  BigInt b_tr_;
};

}  // namespace tautcalc
