#include <sstream>
#include <stdexcept>

#include "tautcalc/hypersurface.hpp"

namespace tautcalc {

BigInt euler_characteristic(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("euler_characteristic needs n >= 1, d >= 1");
  // Coefficients of (1+h)^{n+2} and (1+dh)^{-1}, both truncated at h^n.
  std::vector<BigInt> binom(n + 1), inverse(n + 1);
  BigInt c = 1;
  for (int k = 0; k <= n; ++k) {
    binom[k] = c;
    c = c * (n + 2 - k) / (k + 1);
  }
  BigInt p = 1;
  for (int k = 0; k <= n; ++k) {
    inverse[k] = p;
    p *= -d;
  }
  BigInt top = 0;
  for (int k = 0; k <= n; ++k) top += binom[k] * inverse[n - k];
  return top * d;
}

BigInt primitive_rank(int n, const BigInt& chi) {
  BigInt diff = chi - (n + 1);
  return n % 2 == 0 ? diff : BigInt(-diff);
}

HypersurfaceContext HypersurfaceContext::from_degree(int n, int d) {
  BigInt chi = euler_characteristic(n, d);
  BigInt b = primitive_rank(n, chi);
  if (b < 0) {
    std::ostringstream msg;
    msg << "negative primitive rank " << b << " for (n=" << n << ", d=" << d << ")";
    throw std::invalid_argument(msg.str());
  }
  return HypersurfaceContext(n, d, chi, b);
}

HypersurfaceContext HypersurfaceContext::with_primitive_rank(int n, int d, const BigInt& b_pr) {
  if (n < 1 || d < 1) throw std::invalid_argument("context needs n >= 1, d >= 1");
  if (b_pr < 0) throw std::invalid_argument("primitive rank must be non-negative");
  BigInt chi = n % 2 == 0 ? BigInt(n + 1 + b_pr) : BigInt(n + 1 - b_pr);
  return HypersurfaceContext(n, d, chi, b_pr);
}

Rational HypersurfaceContext::signed_primitive_rank() const {
  return even() ? Rational(b_pr_) : Rational(-b_pr_);
}

std::string HypersurfaceContext::describe() const {
  std::ostringstream out;
  out << "n=" << n_ << " d=" << d_ << " chi=" << chi_ << " b_pr=" << b_pr_;
  return out.str();
}

FourfoldExtension::FourfoldExtension(const HypersurfaceContext& ctx, std::vector<HodgeClass> classes)
    : classes_(std::move(classes)) {
  if (ctx.n() != 4) throw std::invalid_argument("Hodge-class extension needs n = 4");
  for (const auto& c : classes_)
    if (is_zero(c.self_degree))
      throw std::invalid_argument("Hodge class " + c.label + " has zero self-intersection");
  b_tr_ = ctx.b_pr() - static_cast<long>(classes_.size());
  if (b_tr_ < 0) throw std::invalid_argument("more Hodge classes than primitive rank");
}

}  // namespace tautcalc
