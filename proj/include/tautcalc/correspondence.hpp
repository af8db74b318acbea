#pragma once

#include <vector>

#include "tautcalc/report.hpp"
#include "tautcalc/taut_ring.hpp"

namespace tautcalc {

/// A correspondence Y^source -> Y^target, stored as a class on
/// Y^(source+target): factors 1..source, then the target factors.
class Correspondence {
 public:
  Correspondence(int source, int target, TautClass body);

  int source() const { return source_; }
  int target() const { return target_; }
  const TautClass& body() const { return body_; }
  const PresentationPtr& presentation_ptr() const { return body_.presentation_ptr(); }

  Correspondence& operator+=(const Correspondence& other);
  Correspondence& operator-=(const Correspondence& other);
  bool operator==(const Correspondence& other) const = default;

 private:
  int source_;
  int target_;
  TautClass body_;
};

Correspondence operator+(Correspondence a, const Correspondence& b);
Correspondence operator-(Correspondence a, const Correspondence& b);
Correspondence operator*(const Rational& c, const Correspondence& a);

/// Delta_Y as a 1 -> 1 correspondence.
Correspondence diagonal(PresentationPtr p);
/// Diagonal of Y^a, a -> a.
Correspondence identity(PresentationPtr p, int a);
/// p_{13*}(p_{12}^* f . p_{23}^* g). Throws std::invalid_argument when the
/// target of f is not the source of g.
Correspondence compose(const Correspondence& g, const Correspondence& f);
/// f (x) g : Y^(a+c) -> Y^(b+e) for f : a -> b, g : c -> e.
Correspondence tensor(const Correspondence& f, const Correspondence& g);
/// delta_Y = p_{12}^* Delta . p_{13}^* Delta, read as Y^2 -> Y.
Correspondence small_diagonal(PresentationPtr p);
/// (1/d) h_1^{n-i} h_2^i for 0 <= i <= n.
Correspondence pi_alg(PresentationPtr p, int i);

/// Canonical Chow-Kuenneth projectors pi^0..pi^{2n} (odd slots other than
/// n are zero), the diagonal and the primitive projector.
struct CKFamily {
  std::vector<Correspondence> pi;
  Correspondence delta;
  Correspondence tau;
};

CKFamily ck_family(PresentationPtr p);

/// The MCK identities for the ring of p:
///   mck-relation: delta_Y against the explicit three-term formula,
///   alg-mck: the algebraic projectors through delta_Y, both branches,
///   ck-vanishing: pi^k o delta_Y o (pi^i (x) pi^j) = 0 for k != i + j.
/// With control = true a copy of the relation check is also run in the ring
/// without the tau contraction rule and recorded (as data only) in the
/// mck-relation entry.
Report verify_mck(PresentationPtr p, bool control = true);

}  // namespace tautcalc
