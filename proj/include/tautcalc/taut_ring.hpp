#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tautcalc/hypersurface.hpp"
#include "tautcalc/qmatrix.hpp"
#include "tautcalc/rational.hpp"

namespace tautcalc {

/// Relation data for the graded Q-algebra generated by o_i, h_i, tau_{ij}
/// (and l^s_i for a cubic fourfold with Hodge classes) on Y^m.
///
/// Rewrite rules applied by normalize:
///   h_i^n = d o_i,  h_i o_i = 0,  o_i^2 = 0
///   tau_{ij} h_i = 0,  tau_{ij} o_i = 0,  tau_{ij}^2 = c o_i o_j
///   tau_{ij} tau_{ik} = o_i tau_{jk}                      (contraction)
///   l^s_i h_i = 0,  l^s_i l^s_i = deg_s o_i,  l^s_i l^t_i = 0,  tau_{ij} l^s_i = 0
/// with c = (-1)^n b_pr, or c = b_tr when Hodge classes are split off.
/// The finite-dimensionality relation is never a rewrite rule; it is
/// handled by linear algebra (x4_relation_elements, matching_gram).
struct Presentation {
  HypersurfaceContext ctx;
  Rational tau_square;
  BigInt tau_rank;  // b_pr, or b_tr in Hodge-extended mode
  std::vector<HodgeClass> hodge;
  bool contract_tau = true;

  int n() const { return ctx.n(); }
  int d() const { return ctx.d(); }

  /// The ring of a hypersurface with all relations.
  static std::shared_ptr<const Presentation> standard(const HypersurfaceContext& ctx);
  /// The cubic fourfold ring extended by orthogonal Hodge classes.
  static std::shared_ptr<const Presentation> fourfold(const HypersurfaceContext& ctx,
                                                      const FourfoldExtension& ext);
  /// Same relations minus the tau contraction rule. Used as a control: in
  /// that ring the MCK identity must fail.
  std::shared_ptr<const Presentation> without_contraction() const;

  bool operator==(const Presentation&) const = default;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

enum class GenKind : std::uint8_t { O = 0, H = 1, Tau = 2, L = 3 };

/// One generator. Indices are 1-based. Tau keeps i < j; L stores the factor
/// index in i and the Hodge-class position in j; H carries its exponent.
struct Generator {
  GenKind kind;
  std::uint8_t i;
  std::uint8_t j;
  std::uint8_t exp;

  static Generator o(int i);
  static Generator h(int i, int exponent = 1);
  static Generator tau(int i, int j);
  static Generator l(int s, int i);

  auto operator<=>(const Generator&) const = default;
};

/// A product of generators kept sorted by (kind, indices, exponent). After
/// normalization every factor index occurs in at most one generator.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Generator> gens);

  const std::vector<Generator>& generators() const { return gens_; }
  bool is_unit() const { return gens_.empty(); }

  int codim(const Presentation& p) const;
  /// Every index in 1..m used at most once, H exponents < n.
  bool is_normal(const Presentation& p, int m) const;
  std::string to_string(const Presentation& p) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Generator> gens_;
};

class TautClass {
 public:
  TautClass(PresentationPtr p, int arity);

  static TautClass one(PresentationPtr p, int arity);
  static TautClass scalar(PresentationPtr p, int arity, const Rational& c);
  static TautClass of(PresentationPtr p, int arity, Generator g);

  int arity() const { return arity_; }
  const Presentation& presentation() const { return *pres_; }
  const PresentationPtr& presentation_ptr() const { return pres_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * m; m must already be a normal form.
  void add_term(const Monomial& m, const Rational& c);

  TautClass homogeneous_component(int codim) const;
  bool is_homogeneous(int codim) const;

  TautClass& operator+=(const TautClass& other);
  TautClass& operator-=(const TautClass& other);
  TautClass& operator*=(const Rational& c);

  std::string to_string() const;

  bool operator==(const TautClass& other) const;

 private:
  void check_compatible(const TautClass& other) const;

  PresentationPtr pres_;
  int arity_;
  std::map<Monomial, Rational> terms_;
};

TautClass operator+(TautClass a, const TautClass& b);
TautClass operator-(TautClass a, const TautClass& b);
TautClass operator*(const Rational& c, TautClass a);
TautClass operator*(const TautClass& a, const TautClass& b);

/// Reduces a raw product of generators to normal form. Throws
/// std::out_of_range on an index outside 1..m (or an unknown Hodge class).
TautClass normalize(PresentationPtr p, int m, std::span<const Generator> raw);

/// Product of classes; throws std::invalid_argument on arity or
/// presentation mismatch.
TautClass mul(const TautClass& a, const TautClass& b);

/// phi : {1..source} -> {1..target}, encoding f : Y^target -> Y^source,
/// (y_j) -> (y_{phi(i)})_i.
class FiniteSetMap {
 public:
  FiniteSetMap(int target_size, std::vector<int> images);

  /// Y^total -> Y^{kept.size()}, forgetting the other factors.
  static FiniteSetMap projection(int total, const std::vector<int>& kept);
  /// Y^{target} -> Y^{source} along the given surjection.
  static FiniteSetMap diagonal(int target, const std::vector<int>& images);

  int source_size() const { return static_cast<int>(images_.size()); }
  int target_size() const { return target_; }
  int operator()(int i) const { return images_.at(i - 1); }
  const std::vector<int>& images() const { return images_; }

  bool injective() const;
  bool surjective() const;

 private:
  int target_;
  std::vector<int> images_;
};

/// f^* : R(Y^source) -> R(Y^target). Throws std::invalid_argument on arity
/// mismatch and std::domain_error when phi identifies both indices of some
/// tau (self-intersection of the diagonal is not part of the presentation).
TautClass pullback(const FiniteSetMap& f, const TautClass& a);

/// f_* : R(Y^target) -> R(Y^source). Projections integrate out forgotten
/// factors (only o survives, with value 1); partial diagonals use
/// f_*(a) = p^*(a) . f_*(1). Requires the contraction rule.
TautClass pushforward(const FiniteSetMap& f, const TautClass& a);

/// Coefficient of o_1 ... o_m.
Rational integrate(const TautClass& a);

/// p_{ij}^* of the diagonal class on Y^m:
/// (1/d) sum_{a+b=n} h_i^a h_j^b + sum_s l^s_i l^s_j / deg_s + tau_{ij}.
TautClass diagonal_class(PresentationPtr p, int m, int i, int j);

/// All normal-form monomials of the given codimension, sorted.
std::vector<Monomial> admissible_basis(const Presentation& p, int m, int codim);

struct GramReport {
  int k = 0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  QMatrix gram{0, 0};
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t orbit_dim = 0;
  bool orbit_available = true;  // false when the relation was too large to expand
  bool kernels_equal = false;
  bool symmetric = false;
  bool nondegenerate = false;
  bool cycle_formula_ok = true;
};

/// Pairing R^codim x R^{mn-codim} -> Q on admissible bases.
GramReport pairing_gram(PresentationPtr p, int m, int codim);

/// Gram matrix on the (2k-1)!! perfect-matching monomials of Y^{2k}, with
/// its kernel compared against the orbit span of the finite-dimensionality
/// relation (when 2k reaches the threshold).
GramReport matching_gram(PresentationPtr p, int k);

/// Smallest arity in which the finite-dimensionality relation lives:
/// 2 b + 2 for n even, b + 2 for n odd.
int x4_threshold(const Presentation& p);

/// The literal alternating (n even) or symmetrized (n odd) sums of tau
/// matchings, with all images under injections {1..t} -> {1..m}, deduplicated
/// up to scalar. Empty when m is below the threshold.
std::vector<TautClass> x4_relation_elements(PresentationPtr p, int m);

/// All perfect matchings of {1..2k}, in sorted monomial order.
std::vector<Monomial> perfect_matchings(int k);

}  // namespace tautcalc
