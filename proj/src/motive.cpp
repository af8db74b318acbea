#include "tautcalc/motive.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tautcalc/hypersurface.hpp"

namespace tautcalc {

// ---------------------------------------------------------------------------
// BPoly

BPoly::BPoly(long c) {
  if (c != 0) c_.push_back(Rational(c));
}

BPoly BPoly::b() {
  BPoly p;
  p.c_ = {Rational(0), Rational(1)};
  return p;
}

void BPoly::trim() {
  while (!c_.empty() && tautcalc::is_zero(c_.back())) c_.pop_back();
}

Rational BPoly::eval(const Rational& b) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * b + *it;
  return acc;
}

std::string BPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    Rational a = c_[k];
    if (tautcalc::is_zero(a)) continue;
    if (!first) out << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) out << '-';
    first = false;
    a = abs(a);
    if (k == 0 || a != 1) out << to_pretty(a);
    if (k > 0) out << 'b';
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

BPoly& BPoly::operator+=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

BPoly& BPoly::operator-=(const BPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

BPoly& BPoly::operator*=(const BPoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  trim();
  return *this;
}

BPoly operator*(const Rational& c, BPoly a) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

// ---------------------------------------------------------------------------
// Poincare polynomials

PoincarePoly& add_into(PoincarePoly& acc, const PoincarePoly& p, long times) {
  for (const auto& [deg, c] : p) {
    acc[deg] += BPoly(times) * c;
    if (acc[deg].is_zero()) acc.erase(deg);
  }
  return acc;
}

bool same_poincare(const PoincarePoly& a, const PoincarePoly& b) {
  PoincarePoly diff = a;
  add_into(diff, b, -1);
  return diff.empty();
}

BPoly poincare_total(const PoincarePoly& p) {
  BPoly t;
  for (const auto& [deg, c] : p) t += c;
  return t;
}

PoincarePoly sym2_poincare(const PoincarePoly& p) {
  PoincarePoly out;
  for (const auto& [d1, c1] : p)
    for (const auto& [d2, c2] : p) out[d1 + d2] += c1 * c2;
  for (const auto& [deg, c] : p) out[2 * deg] += BPoly(deg % 2 == 0 ? 1 : -1) * c;
  PoincarePoly half;
  for (auto& [deg, c] : out)
    if (!c.is_zero()) half[deg] = Rational(1, 2) * c;
  return half;
}

std::string to_string(const PoincarePoly& p) {
  if (p.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [deg, c] : p) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ")t^" << deg;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Motives

Motive Motive::unit(int n, int twist) {
  Motive m(n);
  m.add({MotiveKind::Unit, twist}, 1);
  return m;
}

Motive Motive::prim(int n, int twist) {
  Motive m(n);
  m.add({MotiveKind::Prim, twist}, 1);
  return m;
}

Motive Motive::fano_symbol(int n, int twist) {
  Motive m(n);
  m.add({MotiveKind::Fano, twist}, 1);
  return m;
}

Motive Motive::of_hypersurface(int n) {
  Motive m = prim(n);
  for (int j = 0; j <= n; ++j) m.add({MotiveKind::Unit, -j}, 1);
  return m;
}

long Motive::multiplicity(MotiveKind k, int twist) const {
  auto it = terms_.find({k, twist});
  return it == terms_.end() ? 0 : it->second;
}

bool Motive::effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

bool Motive::contains_fano() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.kind == MotiveKind::Fano; });
}

void Motive::add(MotiveSymbol s, long mult) {
  if (mult == 0) return;
  long& v = terms_[s];
  v += mult;
  if (v == 0) terms_.erase(s);
}

Motive Motive::twisted(int t) const {
  Motive m(n_);
  for (const auto& [s, c] : terms_) m.add({s.kind, s.twist + t}, c);
  return m;
}

int Motive::degree_of(const MotiveSymbol& s) const {
  switch (s.kind) {
    case MotiveKind::Unit:
      return -2 * s.twist;
    case MotiveKind::Prim:
      return n_ - 2 * s.twist;
    case MotiveKind::Sym2Prim:
      return 2 * n_ - 2 * s.twist;
    case MotiveKind::Fano:
      break;
  }
  throw std::invalid_argument("the Fano symbol has no single degree");
}

Motive Motive::degree_part(int k) const {
  Motive m(n_);
  for (const auto& [s, c] : terms_)
    if (degree_of(s) == k) m.add(s, c);
  return m;
}

Motive& Motive::operator+=(const Motive& o) {
  if (n_ != o.n_) throw std::invalid_argument("motives of different dimensions");
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

Motive& Motive::operator-=(const Motive& o) {
  if (n_ != o.n_) throw std::invalid_argument("motives of different dimensions");
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

Motive Motive::times(long c) const {
  Motive m(n_);
  for (const auto& [s, x] : terms_) m.add(s, x * c);
  return m;
}

std::string Motive::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (c != 1) out << c << '*';
    switch (s.kind) {
      case MotiveKind::Unit:
        out << "1";
        break;
      case MotiveKind::Prim:
        out << "T";
        break;
      case MotiveKind::Sym2Prim:
        out << "Sym2T";
        break;
      case MotiveKind::Fano:
        out << "F";
        break;
    }
    out << '(' << s.twist << ')';
  }
  return out.str();
}

PoincarePoly poincare(const Motive& m) {
  const int n = m.n();
  const BPoly b = BPoly::b();
  const BPoly sym2_dim = n % 2 == 0 ? Rational(1, 2) * (b * (b + BPoly(1)))
                                    : Rational(1, 2) * (b * (b - BPoly(1)));
  PoincarePoly out;
  for (const auto& [s, c] : m.terms()) {
    PoincarePoly piece;
    switch (s.kind) {
      case MotiveKind::Unit:
        piece[m.degree_of(s)] = BPoly(1);
        break;
      case MotiveKind::Prim:
        piece[m.degree_of(s)] = b;
        break;
      case MotiveKind::Sym2Prim:
        piece[m.degree_of(s)] = sym2_dim;
        break;
      case MotiveKind::Fano:
        for (const auto& [deg, x] : poincare(fano_motive(n))) piece[deg - 2 * s.twist] = x;
        break;
    }
    add_into(out, piece, c);
  }
  return out;
}

namespace {

// Tensor product of two symbols, for the cases Sym^2 needs.
MotiveSymbol tensor_symbols(const MotiveSymbol& x, const MotiveSymbol& y) {
  if (x.kind == MotiveKind::Unit) return {y.kind, x.twist + y.twist};
  if (y.kind == MotiveKind::Unit) return {x.kind, x.twist + y.twist};
  throw std::invalid_argument("T (x) T is outside the motive semiring");
}

}  // namespace

Motive sym2(const Motive& m) {
  if (!m.effective()) throw std::invalid_argument("Sym^2 of a non-effective motive");
  Motive out(m.n());
  std::vector<std::pair<MotiveSymbol, long>> items(m.terms().begin(), m.terms().end());
  for (const auto& [s, c] : items) {
    if (s.kind == MotiveKind::Sym2Prim) throw std::invalid_argument("nested Sym^2");
    if (s.kind == MotiveKind::Fano) throw std::invalid_argument("Sym^2 of the Fano symbol");
    if (s.kind == MotiveKind::Prim && c > 1) throw std::invalid_argument("T (x) T is outside the motive semiring");
  }
  for (std::size_t a = 0; a < items.size(); ++a) {
    const auto& [s, c] = items[a];
    out.add({s.kind == MotiveKind::Prim ? MotiveKind::Sym2Prim : MotiveKind::Unit, 2 * s.twist}, c);
    if (c > 1) out.add({s.kind, 2 * s.twist}, c * (c - 1) / 2);
    for (std::size_t b = a + 1; b < items.size(); ++b)
      out.add(tensor_symbols(s, items[b].first), c * items[b].second);
  }
  return out;
}

long fano_unit_multiplicity(int n, int k) {
  if (k < 0 || k > 2 * n - 4) return 0;
  if (k < n - 2) return (k + 2) / 2;
  if (k == n - 2) return (n - 2) / 2;
  return (2 * n - 2 - k) / 2;
}

Motive fano_motive(int n) {
  if (n < 2) throw std::invalid_argument("Fano variety of lines needs n >= 2");
  Motive m(n);
  m.add({MotiveKind::Sym2Prim, 2}, 1);
  for (int i = 1; i <= n - 1; ++i) m.add({MotiveKind::Prim, 2 - i}, 1);
  for (int k = 0; k <= 2 * n - 4; ++k) m.add({MotiveKind::Unit, -k}, fano_unit_multiplicity(n, k));
  return m;
}

CancelResult cancel(const Motive& lhs, const Motive& rhs) {
  if (lhs.n() != rhs.n()) throw std::invalid_argument("motives of different dimensions");
  CancelResult r{Motive(lhs.n()), lhs, rhs};
  for (const auto& [s, c] : lhs.terms()) {
    long common = std::min(c, rhs.multiplicity(s.kind, s.twist));
    if (common > 0) r.common.add(s, common);
  }
  r.lhs -= r.common;
  r.rhs -= r.common;
  return r;
}

namespace {

Motive hilbert_square(int n) {
  Motive hy = Motive::of_hypersurface(n);
  Motive out = sym2(hy);
  for (int j = 1; j <= n - 1; ++j) out += hy.twisted(-j);
  return out;
}

}  // namespace

Motive fano_from_gsv(int n) {
  if (n < 2) throw std::invalid_argument("Fano variety of lines needs n >= 2");
  Motive hy = Motive::of_hypersurface(n);
  Motive lhs(n), rhs = hilbert_square(n);
  for (int i = 0; i <= n; ++i) lhs += hy.twisted(-i);
  lhs += Motive::fano_symbol(n, -3) + Motive::fano_symbol(n, -2).times(2) + Motive::fano_symbol(n, -1);
  rhs += Motive::fano_symbol(n, -3) + Motive::fano_symbol(n, -2) + Motive::fano_symbol(n, -1);

  auto c = cancel(lhs, rhs);
  if (!(c.lhs == Motive::fano_symbol(n, -2)) || c.rhs.contains_fano() || !c.rhs.effective())
    throw std::runtime_error("cancellation did not isolate h(F)(-2): " + c.lhs.to_string() +
                             " ~ " + c.rhs.to_string());
  return c.rhs.twisted(2);
}

// ---------------------------------------------------------------------------
// Identity report

namespace {

PoincarePoly restrict_degree(const PoincarePoly& p, int deg) {
  PoincarePoly out;
  if (auto it = p.find(deg); it != p.end()) out[deg] = it->second;
  return out;
}

PoincarePoly shift(const PoincarePoly& p, int by) {
  PoincarePoly out;
  for (const auto& [deg, c] : p) out[deg + by] = c;
  return out;
}

std::string tag(int n, const std::string& what) {
  std::string num = std::to_string(n);
  if (num.size() < 2) num = "0" + num;
  return "n=" + num + " " + what;
}

std::string motive_mismatch(const Motive& a, const Motive& b) {
  return (Motive(a) - b).to_string();
}

std::string poincare_mismatch(const PoincarePoly& a, const PoincarePoly& b) {
  PoincarePoly d = a;
  add_into(d, b, -1);
  return to_string(d);
}

}  // namespace

Report verify_fano_identities(int n) {
  if (n < 2) throw std::invalid_argument("Fano identities need n >= 2");
  Report r;
  r.command = "fano";
  r.context = Json{{"n", n}, {"d", 3}};
  auto& e = r.entries;

  const Motive fano = fano_motive(n);
  const PoincarePoly pf = poincare(fano);
  const Motive hy = Motive::of_hypersurface(n);
  const PoincarePoly phy = poincare(hy);
  const BPoly b = BPoly::b();

  Json a_k = Json::array();
  for (int k = 0; k <= 2 * n - 4; ++k) a_k.push_back(fano_unit_multiplicity(n, k));

  e.push_back(Entry::check(tag(n, "gs effective"), "fano-motive-decomposition", fano.effective(),
                           fano.to_string(), Json{{"motive", fano.to_string()}, {"a_k", a_k}}));

  // (gs) through the blow-up/projective-bundle decomposition, cancelled.
  {
    Motive derived(n);
    std::string error;
    try {
      derived = fano_from_gsv(n);
    } catch (const std::runtime_error& ex) {
      error = ex.what();
    }
    bool ok = error.empty() && derived == fano;
    e.push_back(Entry::check(tag(n, "gs from cancellation"), "gsv-cancellation", ok,
                             error.empty() ? motive_mismatch(derived, fano) : error,
                             Json{{"derived", derived.to_string()},
                                  {"assumption", "h(Y^[2]) = Sym2 h(Y) + sum_{j=1}^{n-1} h(Y)(-j)"}}));

    PoincarePoly hilb = sym2_poincare(phy);
    for (int j = 1; j <= n - 1; ++j) add_into(hilb, shift(phy, 2 * j));
    for (int i = 0; i <= n; ++i) add_into(hilb, shift(phy, 2 * i), -1);
    PoincarePoly via_gsv = shift(hilb, -4);
    e.push_back(Entry::check(tag(n, "gs poincare"), "gsv-cancellation",
                             same_poincare(via_gsv, pf), poincare_mismatch(via_gsv, pf)));
  }

  // (ii) h(F) + 1(2-n) ~ Sym^2(N(1)).
  {
    Motive nn = Motive::prim(n);
    for (int j = 1; j <= n - 1; ++j) nn.add({MotiveKind::Unit, -j}, 1);
    Motive lhs = fano + Motive::unit(n, 2 - n);
    Motive rhs = sym2(nn.twisted(1));
    e.push_back(Entry::check(tag(n, "ii motive"), "fano-sym2-reduced", lhs == rhs,
                             motive_mismatch(lhs, rhs)));
    PoincarePoly pl = poincare(lhs), pr = sym2_poincare(poincare(nn.twisted(1)));
    e.push_back(Entry::check(tag(n, "ii poincare"), "fano-sym2-reduced", same_poincare(pl, pr),
                             poincare_mismatch(pl, pr)));
  }

  // (iii) h(F)(-2) + h(Y) + h(Y)(-n) ~ Sym^2 h(Y).
  {
    Motive lhs = fano.twisted(-2) + hy + hy.twisted(-n);
    Motive rhs = sym2(hy);
    e.push_back(Entry::check(tag(n, "iii motive"), "fano-sym2-hypersurface", lhs == rhs,
                             motive_mismatch(lhs, rhs)));
    PoincarePoly pl = poincare(lhs), pr = sym2_poincare(phy);
    e.push_back(Entry::check(tag(n, "iii poincare"), "fano-sym2-hypersurface", same_poincare(pl, pr),
                             poincare_mismatch(pl, pr)));
  }

  // (iv) degree n-2 part.
  if (n == 2) {
    e.push_back(Entry::skipped(tag(n, "iv motive"), "fano-degree-n-minus-2",
                               "Sym2 T(2) also lands in degree 0 when n = 2"));
    e.push_back(Entry::skipped(tag(n, "iv poincare"), "fano-degree-n-minus-2",
                               "Sym2 T(2) also lands in degree 0 when n = 2"));
  } else {
    Motive expected = Motive::prim(n, 1);
    long copies = 0;
    if (n % 2 == 0) {
      copies = (n + 2) / 4;
      expected.add({MotiveKind::Unit, -(n - 2) / 2}, copies);
    }
    Motive got = fano.degree_part(n - 2);
    e.push_back(Entry::check(tag(n, "iv motive"), "fano-degree-n-minus-2", got == expected,
                             motive_mismatch(got, expected), Json{{"unit_copies", copies}}));
    PoincarePoly want;
    want[n - 2] = b + BPoly(copies);
    PoincarePoly have = restrict_degree(pf, n - 2);
    e.push_back(Entry::check(tag(n, "iv poincare"), "fano-degree-n-minus-2", same_poincare(have, want),
                             poincare_mismatch(have, want)));
  }

  // (v) Sym^2 h^2(F) ~ h^4(F), fourfolds only.
  if (n == 4) {
    Motive lhs = sym2(fano.degree_part(2));
    Motive rhs = fano.degree_part(4);
    e.push_back(Entry::check(tag(n, "v motive"), "fano-sym2-h2", lhs == rhs, motive_mismatch(lhs, rhs)));
    PoincarePoly pl = sym2_poincare(restrict_degree(pf, 2)), pr = restrict_degree(pf, 4);
    e.push_back(Entry::check(tag(n, "v poincare"), "fano-sym2-h2", same_poincare(pl, pr),
                             poincare_mismatch(pl, pr)));
  } else {
    e.push_back(Entry::skipped(tag(n, "v motive"), "fano-sym2-h2", "only stated for n = 4"));
    e.push_back(Entry::skipped(tag(n, "v poincare"), "fano-sym2-h2", "only stated for n = 4"));
  }

  // Poincare duality on F (complex dimension 2n-4).
  {
    bool ok = true;
    std::string witness;
    for (const auto& [deg, c] : pf) {
      auto it = pf.find(4 * n - 8 - deg);
      if (it == pf.end() || !(it->second == c)) {
        ok = false;
        witness = "degree " + std::to_string(deg) + ": " + c.to_string();
        break;
      }
    }
    e.push_back(Entry::check(tag(n, "palindromic"), "fano-poincare-duality", ok, witness));
  }

  // Totals: sum a_k + (n-1) b + dim Sym^2 T, and Euler additivity of the
  // decomposition after cancellation.
  {
    long units = 0;
    for (int k = 0; k <= 2 * n - 4; ++k) units += fano_unit_multiplicity(n, k);
    BPoly sym2_dim = n % 2 == 0 ? Rational(1, 2) * (b * (b + BPoly(1))) : Rational(1, 2) * (b * (b - BPoly(1)));
    BPoly closed = BPoly(units) + BPoly(n - 1) * b + sym2_dim;
    BPoly total = poincare_total(pf);
    BPoly hy_total = poincare_total(phy);
    BPoly additivity = poincare_total(sym2_poincare(phy)) + BPoly(n - 1) * hy_total - BPoly(n + 1) * hy_total;
    bool ok = total == closed && total == additivity;
    e.push_back(Entry::check(tag(n, "total dimension"), "fano-total-dimension", ok,
                             total.to_string() + " vs " + closed.to_string() + " vs " + additivity.to_string(),
                             Json{{"total", total.to_string()}}));
  }

  // Specialize at the cubic's b_pr.
  {
    BigInt bpr = HypersurfaceContext::from_degree(n, 3).b_pr();
    Json betti = Json::object();
    bool ok = true;
    Rational sum = 0;
    for (const auto& [deg, c] : pf) {
      Rational v = c.eval(Rational(bpr));
      ok = ok && sgn(v) >= 0 && v.get_den() == 1;
      betti[std::to_string(deg)] = to_pretty(v);
      sum += v;
    }
    Json data{{"b_pr", bpr.get_str()}, {"betti", betti}, {"total", to_pretty(sum)}};
    if (n == 4) {
      ok = ok && pf.at(2).eval(22) == 23 && pf.at(4).eval(22) == 276 && sum == 324;
    }
    e.push_back(Entry::check(tag(n, "specialization"), "fano-betti-numbers", ok, data.dump(), data));
  }
  return r;
}

}  // namespace tautcalc
