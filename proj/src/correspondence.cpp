#include "tautcalc/correspondence.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "tautcalc/serialize.hpp"

namespace tautcalc {

Correspondence::Correspondence(int source, int target, TautClass body)
    : source_(source), target_(target), body_(std::move(body)) {
  if (source_ < 0 || target_ < 0 || body_.arity() != source_ + target_)
    throw std::invalid_argument("correspondence body arity must be source + target");
}

Correspondence& Correspondence::operator+=(const Correspondence& other) {
  if (source_ != other.source_ || target_ != other.target_)
    throw std::invalid_argument("correspondence shape mismatch");
  body_ += other.body_;
  return *this;
}

Correspondence& Correspondence::operator-=(const Correspondence& other) {
  if (source_ != other.source_ || target_ != other.target_)
    throw std::invalid_argument("correspondence shape mismatch");
  body_ -= other.body_;
  return *this;
}

Correspondence operator+(Correspondence a, const Correspondence& b) { return a += b; }
Correspondence operator-(Correspondence a, const Correspondence& b) { return a -= b; }
Correspondence operator*(const Rational& c, const Correspondence& a) {
  return Correspondence(a.source(), a.target(), c * a.body());
}

namespace {

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

TautClass h_power(const PresentationPtr& p, int m, int i, int e) {
  if (e == 0) return TautClass::one(p, m);
  return TautClass::of(p, m, Generator::h(i, e));
}

}  // namespace

Correspondence diagonal(PresentationPtr p) { return Correspondence(1, 1, diagonal_class(p, 2, 1, 2)); }

Correspondence identity(PresentationPtr p, int a) {
  TautClass body = TautClass::one(p, 2 * a);
  for (int i = 1; i <= a; ++i) body = mul(body, diagonal_class(p, 2 * a, i, a + i));
  return Correspondence(a, a, body);
}

Correspondence compose(const Correspondence& g, const Correspondence& f) {
  if (f.target() != g.source()) throw std::invalid_argument("cannot compose: arity mismatch");
  const int a = f.source(), m = f.target(), b = g.target();
  const int total = a + m + b;
  auto f_up = pullback(FiniteSetMap(total, range(1, a + m)), f.body());
  auto g_up = pullback(FiniteSetMap(total, range(a + 1, total)), g.body());
  std::vector<int> kept = range(1, a);
  for (int i = a + m + 1; i <= total; ++i) kept.push_back(i);
  return Correspondence(a, b, pushforward(FiniteSetMap::projection(total, kept), mul(f_up, g_up)));
}

Correspondence tensor(const Correspondence& f, const Correspondence& g) {
  const int a = f.source(), b = f.target(), c = g.source(), e = g.target();
  const int total = a + b + c + e;
  // f: sources 1..a, targets a+c+1..a+c+b; g: sources a+1..a+c, targets a+c+b+1..total.
  std::vector<int> f_map = range(1, a), g_map = range(a + 1, a + c);
  for (int i = 1; i <= b; ++i) f_map.push_back(a + c + i);
  for (int i = 1; i <= e; ++i) g_map.push_back(a + c + b + i);
  auto body = mul(pullback(FiniteSetMap(total, f_map), f.body()),
                  pullback(FiniteSetMap(total, g_map), g.body()));
  return Correspondence(a + c, b + e, body);
}

Correspondence small_diagonal(PresentationPtr p) {
  return Correspondence(2, 1, mul(diagonal_class(p, 3, 1, 2), diagonal_class(p, 3, 1, 3)));
}

Correspondence pi_alg(PresentationPtr p, int i) {
  const int n = p->n();
  if (i < 0 || i > n) throw std::out_of_range("pi_alg index outside 0..n");
  auto body = mul(h_power(p, 2, 1, n - i), h_power(p, 2, 2, i));
  return Correspondence(1, 1, Rational(1, p->d()) * body);
}

CKFamily ck_family(PresentationPtr p) {
  const int n = p->n();
  CKFamily fam{{}, diagonal(p), Correspondence(1, 1, TautClass(p, 2))};
  Correspondence rest = fam.delta;
  for (int k = 0; k <= 2 * n; ++k) fam.pi.emplace_back(1, 1, TautClass(p, 2));
  for (int i = 0; i <= n; ++i) {
    if (2 * i == n) continue;
    fam.pi[2 * i] = pi_alg(p, i);
    rest -= fam.pi[2 * i];
  }
  fam.pi[n] = rest;
  fam.tau = n % 2 == 0 ? rest - pi_alg(p, n / 2) : rest;
  return fam;
}

namespace {

// Right-hand side of the MCK relation on Y^3.
TautClass mck_rhs(const PresentationPtr& p) {
  const int n = p->n();
  const Rational inv_d(1, p->d());
  auto hn = [&](int i) { return h_power(p, 3, i, n); };
  TautClass rhs(p, 3);
  rhs += inv_d * (mul(diagonal_class(p, 3, 1, 2), hn(3)) + mul(diagonal_class(p, 3, 1, 3), hn(2)) +
                  mul(diagonal_class(p, 3, 2, 3), hn(1)));
  rhs -= inv_d * inv_d * (mul(hn(1), hn(2)) + mul(hn(1), hn(3)) + mul(hn(2), hn(3)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      int k = 2 * n - i - j;
      if (k <= 0 || k >= n) continue;
      rhs += inv_d * inv_d * mul(mul(h_power(p, 3, 1, i), h_power(p, 3, 2, j)), h_power(p, 3, 3, k));
    }
  return rhs;
}

Json class_json(const TautClass& t) { return to_json(t); }

}  // namespace

Report verify_mck(PresentationPtr p, bool control) {
  const int n = p->n();
  Report report;
  report.command = "mck";
  report.context = to_json(p->ctx);

  // mck-relation
  {
    auto delta = small_diagonal(p).body();
    auto defect = mck_rhs(p) - delta;
    Json data;
    data["terms_in_delta"] = delta.terms().size();
    if (control) {
      auto q = p->without_contraction();
      auto control_defect = mck_rhs(q) - mul(diagonal_class(q, 3, 1, 2), diagonal_class(q, 3, 1, 3));
      data["control_without_contraction"] = {
          {"holds", control_defect.is_zero()},
          {"defect", control_defect.is_zero() ? Json(nullptr) : class_json(control_defect)}};
    }
    report.entries.push_back(Entry::check("mck-relation", "mck-relation", defect.is_zero(),
                                          defect.to_string(), data));
  }

  const auto delta = small_diagonal(p);

  // alg-mck: pi_alg^{2k} o delta o (pi_alg^{2i} (x) pi_alg^{2j}).
  {
    bool ok = true;
    std::string witness;
    int checked = 0;
    const Rational inv_d2(1, p->d() * p->d());
    for (int i = 0; i <= n && ok; ++i)
      for (int j = 0; j <= n && ok; ++j) {
        auto inner = compose(delta, tensor(pi_alg(p, i), pi_alg(p, j)));
        for (int k = 0; k <= n && ok; ++k) {
          auto lhs = compose(pi_alg(p, k), inner).body();
          TautClass expected(p, 3);
          if (k == i + j)
            expected = inv_d2 * mul(mul(h_power(p, 3, 1, n - i), h_power(p, 3, 2, n - j)),
                                    h_power(p, 3, 3, k));
          ++checked;
          if (!(lhs == expected)) {
            ok = false;
            witness = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "): " + (lhs - expected).to_string();
          }
        }
      }
    report.entries.push_back(
        Entry::check("alg-mck", "alg-mck-projectors", ok, witness, Json{{"triples", checked}}));
  }

  // ck-vanishing over all triples; the inner composite is shared across k.
  {
    auto fam = ck_family(p);
    bool ok = true;
    std::string witness;
    int checked = 0;
    for (int i = 0; i <= 2 * n && ok; ++i) {
      for (int j = 0; j <= 2 * n && ok; ++j) {
        auto inner = compose(delta, tensor(fam.pi[i], fam.pi[j]));
        for (int k = 0; k <= 2 * n && ok; ++k) {
          if (k == i + j) continue;
          ++checked;
          auto c = compose(fam.pi[k], inner).body();
          if (!c.is_zero()) {
            ok = false;
            witness = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                      std::to_string(k) + "): " + c.to_string();
          }
        }
      }
    }
    report.entries.push_back(
        Entry::check("ck-vanishing", "ck-product-vanishing", ok, witness, Json{{"triples", checked}}));
  }
  return report;
}

}  // namespace tautcalc
