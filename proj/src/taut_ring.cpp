#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tautcalc/taut_ring.hpp"

namespace tautcalc {

// ---------------------------------------------------------------------------
// Presentation

PresentationPtr Presentation::standard(const HypersurfaceContext& ctx) {
  auto p = std::make_shared<Presentation>(Presentation{ctx, ctx.signed_primitive_rank(), ctx.b_pr(), {}, true});
  return p;
}

PresentationPtr Presentation::fourfold(const HypersurfaceContext& ctx, const FourfoldExtension& ext) {
  if (ctx.n() != 4) throw std::invalid_argument("Hodge-extended presentation needs n = 4");
  return std::make_shared<Presentation>(
      Presentation{ctx, Rational(ext.b_tr()), ext.b_tr(), ext.hodge_classes(), true});
}

PresentationPtr Presentation::without_contraction() const {
  auto p = std::make_shared<Presentation>(*this);
  p->contract_tau = false;
  return p;
}

// ---------------------------------------------------------------------------
// Generators and monomials

Generator Generator::o(int i) { return {GenKind::O, static_cast<std::uint8_t>(i), 0, 1}; }

Generator Generator::h(int i, int exponent) {
  if (exponent < 1 || exponent > 255) throw std::out_of_range("h exponent out of range");
  return {GenKind::H, static_cast<std::uint8_t>(i), 0, static_cast<std::uint8_t>(exponent)};
}

Generator Generator::tau(int i, int j) {
  if (i == j) throw std::invalid_argument("tau needs two distinct indices");
  if (i > j) std::swap(i, j);
  return {GenKind::Tau, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j), 1};
}

Generator Generator::l(int s, int i) {
  return {GenKind::L, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(s), 1};
}

Monomial::Monomial(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end());
}

namespace {

int generator_codim(const Presentation& p, const Generator& g) {
  switch (g.kind) {
    case GenKind::O:
    case GenKind::Tau:
      return p.n();
    case GenKind::H:
      return g.exp;
    case GenKind::L:
      return 2;
  }
  return 0;
}

bool touches(const Generator& g, int i) { return g.i == i || (g.kind == GenKind::Tau && g.j == i); }

}  // namespace

int Monomial::codim(const Presentation& p) const {
  int c = 0;
  for (const auto& g : gens_) c += generator_codim(p, g);
  return c;
}

bool Monomial::is_normal(const Presentation& p, int m) const {
  std::vector<int> uses(m + 1, 0);
  for (const auto& g : gens_) {
    if (g.i < 1 || g.i > m) return false;
    ++uses[g.i];
    if (g.kind == GenKind::Tau) {
      if (g.j <= g.i || g.j > m) return false;
      ++uses[g.j];
    }
    if (g.kind == GenKind::H && (g.exp < 1 || g.exp >= p.n())) return false;
    if (g.kind == GenKind::L && g.j >= p.hodge.size()) return false;
  }
  return std::all_of(uses.begin(), uses.end(), [](int u) { return u <= 1; });
}

std::string Monomial::to_string(const Presentation& p) const {
  if (gens_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& g : gens_) {
    if (!first) out << '*';
    first = false;
    switch (g.kind) {
      case GenKind::O:
        out << 'o' << int(g.i);
        break;
      case GenKind::H:
        out << 'h' << int(g.i);
        if (g.exp != 1) out << '^' << int(g.exp);
        break;
      case GenKind::Tau:
        out << "t(" << int(g.i) << ',' << int(g.j) << ')';
        break;
      case GenKind::L:
        out << "l(" << (g.j < p.hodge.size() ? p.hodge[g.j].label : std::to_string(g.j)) << ','
            << int(g.i) << ')';
        break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Rewriting

namespace {

int find_decoration(const std::vector<Generator>& g, int i) {
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k].kind != GenKind::Tau && g[k].i == i) return static_cast<int>(k);
  return -1;
}

std::vector<int> edges_at(const std::vector<Generator>& g, int i) {
  std::vector<int> out;
  for (std::size_t k = 0; k < g.size(); ++k)
    if (g[k].kind == GenKind::Tau && touches(g[k], i)) out.push_back(static_cast<int>(k));
  return out;
}

int other_end(const Generator& t, int i) { return t.i == i ? t.j : t.i; }

void erase_positions(std::vector<Generator>& g, std::vector<int> pos) {
  std::sort(pos.rbegin(), pos.rend());
  for (int k : pos) g.erase(g.begin() + k);
}

// Multiplies a normal-form product (unsorted is fine) by one generator.
// Returns false when the product vanishes.
bool multiply_generator(const Presentation& p, std::vector<Generator>& g, const Generator& x,
                        Rational& coeff) {
  const int n = p.n();
  switch (x.kind) {
    case GenKind::H: {
      if (!edges_at(g, x.i).empty()) return false;
      int dec = find_decoration(g, x.i);
      int cur = 0;
      if (dec >= 0) {
        if (g[dec].kind != GenKind::H) return false;
        cur = g[dec].exp;
      }
      int total = cur + x.exp;
      if (total > n) return false;
      if (total == n) {
        coeff *= p.d();
        if (dec >= 0) g.erase(g.begin() + dec);
        g.push_back(Generator::o(x.i));
      } else if (dec >= 0) {
        g[dec].exp = static_cast<std::uint8_t>(total);
      } else {
        g.push_back(Generator::h(x.i, total));
      }
      return true;
    }
    case GenKind::O: {
      if (!edges_at(g, x.i).empty() || find_decoration(g, x.i) >= 0) return false;
      g.push_back(x);
      return true;
    }
    case GenKind::L: {
      if (!edges_at(g, x.i).empty()) return false;
      int dec = find_decoration(g, x.i);
      if (dec < 0) {
        g.push_back(x);
        return true;
      }
      if (g[dec].kind != GenKind::L || g[dec].j != x.j) return false;
      coeff *= p.hodge[x.j].self_degree;
      g.erase(g.begin() + dec);
      g.push_back(Generator::o(x.i));
      return true;
    }
    case GenKind::Tau: {
      const int i = x.i, j = x.j;
      if (find_decoration(g, i) >= 0 || find_decoration(g, j) >= 0) return false;
      auto ei = edges_at(g, i);
      auto ej = edges_at(g, j);
      auto same = std::find_if(ei.begin(), ei.end(), [&](int k) { return other_end(g[k], i) == j; });
      if (same != ei.end()) {
        // tau_{ij}^2; any further tau at i or j is killed by the resulting o.
        if (ei.size() != 1 || ej.size() != 1 || is_zero(p.tau_square)) return false;
        coeff *= p.tau_square;
        g.erase(g.begin() + *same);
        g.push_back(Generator::o(i));
        g.push_back(Generator::o(j));
        return true;
      }
      if (!p.contract_tau || (ei.empty() && ej.empty())) {
        g.push_back(x);
        return true;
      }
      // tau_{ik} tau_{ij} = o_i tau_{kj}, applied at each shared end.
      int a = ei.empty() ? i : other_end(g[ei[0]], i);
      int b = ej.empty() ? j : other_end(g[ej[0]], j);
      std::vector<int> drop = ei;
      drop.insert(drop.end(), ej.begin(), ej.end());
      erase_positions(g, drop);
      if (!ei.empty()) g.push_back(Generator::o(i));
      if (!ej.empty()) g.push_back(Generator::o(j));
      g.push_back(Generator::tau(a, b));
      return true;
    }
  }
  return false;
}

void check_generator(const Presentation& p, int m, const Generator& g) {
  auto bad = [&](int i) { return i < 1 || i > m; };
  if (bad(g.i) || (g.kind == GenKind::Tau && (bad(g.j) || g.i == g.j)))
    throw std::out_of_range("generator index outside 1.." + std::to_string(m));
  if (g.kind == GenKind::L && g.j >= p.hodge.size())
    throw std::out_of_range("unknown Hodge class in generator");
}

}  // namespace

TautClass normalize(PresentationPtr p, int m, std::span<const Generator> raw) {
  TautClass out(p, m);
  std::vector<Generator> g;
  Rational coeff = 1;
  for (auto x : raw) {
    check_generator(*p, m, x);
    if (x.kind == GenKind::Tau && x.i > x.j) std::swap(x.i, x.j);
    if (x.kind == GenKind::H && x.exp == 0) continue;
    if (!multiply_generator(*p, g, x, coeff)) return out;
  }
  out.add_term(Monomial(std::move(g)), coeff);
  return out;
}

// ---------------------------------------------------------------------------
// TautClass

TautClass::TautClass(PresentationPtr p, int arity) : pres_(std::move(p)), arity_(arity) {
  if (!pres_) throw std::invalid_argument("null presentation");
  if (arity_ < 0 || arity_ > 255) throw std::out_of_range("arity out of range");
}

TautClass TautClass::one(PresentationPtr p, int arity) { return scalar(std::move(p), arity, 1); }

TautClass TautClass::scalar(PresentationPtr p, int arity, const Rational& c) {
  TautClass t(std::move(p), arity);
  t.add_term(Monomial{}, c);
  return t;
}

TautClass TautClass::of(PresentationPtr p, int arity, Generator g) {
  return normalize(std::move(p), arity, std::span<const Generator>(&g, 1));
}

void TautClass::add_term(const Monomial& m, const Rational& c) {
  if (tautcalc::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (tautcalc::is_zero(it->second)) terms_.erase(it);
  }
}

TautClass TautClass::homogeneous_component(int codim) const {
  TautClass out(pres_, arity_);
  for (const auto& [m, c] : terms_)
    if (m.codim(*pres_) == codim) out.terms_.emplace(m, c);
  return out;
}

bool TautClass::is_homogeneous(int codim) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.codim(*pres_) == codim; });
}

void TautClass::check_compatible(const TautClass& other) const {
  if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
  if (pres_ != other.pres_ && !(*pres_ == *other.pres_))
    throw std::invalid_argument("presentation mismatch");
}

TautClass& TautClass::operator+=(const TautClass& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& c) {
  if (tautcalc::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool TautClass::operator==(const TautClass& other) const {
  if (arity_ != other.arity_) return false;
  if (pres_ != other.pres_ && !(*pres_ == *other.pres_)) return false;
  return terms_ == other.terms_;
}

std::string TautClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (sgn(a) < 0) out << '-';
    } else {
      out << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    a = abs(a);
    if (m.is_unit()) {
      out << to_pretty(a);
    } else {
      if (a != 1) out << to_pretty(a) << '*';
      out << m.to_string(*pres_);
    }
  }
  return out.str();
}

TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
TautClass operator*(const Rational& c, TautClass a) { return a *= c; }
TautClass operator*(const TautClass& a, const TautClass& b) { return mul(a, b); }

TautClass mul(const TautClass& a, const TautClass& b) {
  if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch in mul");
  if (a.presentation_ptr() != b.presentation_ptr() && !(a.presentation() == b.presentation()))
    throw std::invalid_argument("presentation mismatch in mul");
  const Presentation& p = a.presentation();
  TautClass out(a.presentation_ptr(), a.arity());
  std::vector<Generator> g;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      g = ma.generators();
      Rational coeff = ca * cb;
      bool alive = true;
      for (const auto& x : mb.generators())
        if (!(alive = multiply_generator(p, g, x, coeff))) break;
      if (alive) out.add_term(Monomial(g), coeff);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Functoriality

FiniteSetMap::FiniteSetMap(int target_size, std::vector<int> images)
    : target_(target_size), images_(std::move(images)) {
  for (int v : images_)
    if (v < 1 || v > target_) throw std::out_of_range("finite set map image out of range");
}

FiniteSetMap FiniteSetMap::projection(int total, const std::vector<int>& kept) {
  return FiniteSetMap(total, kept);
}

FiniteSetMap FiniteSetMap::diagonal(int target, const std::vector<int>& images) {
  FiniteSetMap f(target, images);
  if (!f.surjective()) throw std::invalid_argument("diagonal map must be surjective");
  return f;
}

bool FiniteSetMap::injective() const {
  std::set<int> seen(images_.begin(), images_.end());
  return seen.size() == images_.size();
}

bool FiniteSetMap::surjective() const {
  std::set<int> seen(images_.begin(), images_.end());
  return static_cast<int>(seen.size()) == target_;
}

TautClass pullback(const FiniteSetMap& f, const TautClass& a) {
  if (a.arity() != f.source_size()) throw std::invalid_argument("arity mismatch in pullback");
  TautClass out(a.presentation_ptr(), f.target_size());
  std::vector<Generator> raw;
  for (const auto& [m, c] : a.terms()) {
    raw.clear();
    for (auto g : m.generators()) {
      if (g.kind == GenKind::Tau) {
        int i = f(g.i), j = f(g.j);
        if (i == j)
          throw std::domain_error("pullback identifies both indices of a tau (diagonal self-intersection)");
        raw.push_back(Generator::tau(i, j));
      } else {
        g.i = static_cast<std::uint8_t>(f(g.i));
        raw.push_back(g);
      }
    }
    auto term = normalize(a.presentation_ptr(), f.target_size(), raw);
    term *= c;
    out += term;
  }
  return out;
}

TautClass pushforward(const FiniteSetMap& f, const TautClass& a) {
  if (a.arity() != f.target_size()) throw std::invalid_argument("arity mismatch in pushforward");
  const auto& pp = a.presentation_ptr();
  if (!pp->contract_tau) throw std::logic_error("pushforward needs the tau contraction rule");

  // Projection onto the image: every forgotten factor must carry o.
  std::vector<int> image(f.images());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  const int s = static_cast<int>(image.size());
  std::vector<int> position(f.target_size() + 1, 0);
  for (int t = 0; t < s; ++t) position[image[t]] = t + 1;

  TautClass projected(pp, s);
  for (const auto& [m, c] : a.terms()) {
    std::vector<Generator> kept;
    int integrated = 0;
    bool alive = true;
    for (auto g : m.generators()) {
      bool keep_i = position[g.i] != 0;
      bool keep_j = g.kind == GenKind::Tau && position[g.j] != 0;
      if (g.kind == GenKind::Tau) {
        if (!keep_i || !keep_j) {
          alive = false;
          break;
        }
        kept.push_back(Generator::tau(position[g.i], position[g.j]));
      } else if (!keep_i) {
        if (g.kind != GenKind::O) {
          alive = false;
          break;
        }
        ++integrated;
      } else {
        g.i = static_cast<std::uint8_t>(position[g.i]);
        kept.push_back(g);
      }
    }
    if (alive && integrated == f.target_size() - s) projected.add_term(Monomial(std::move(kept)), c);
  }

  // Partial diagonal Y^s -> Y^source: f_*(x) = p^*(x) . f_*(1), with p the
  // projection onto the first member of each fibre.
  const int source = f.source_size();
  std::vector<int> rep(s, 0);
  std::vector<int> fibre_of(source + 1, 0);
  for (int i = 1; i <= source; ++i) {
    int t = position[f(i)];
    fibre_of[i] = t;
    if (rep[t - 1] == 0) rep[t - 1] = i;
  }
  TautClass out = pullback(FiniteSetMap(source, rep), projected);
  for (int i = 1; i <= source; ++i) {
    int r = rep[fibre_of[i] - 1];
    if (r != i) out = mul(out, diagonal_class(pp, source, r, i));
  }
  return out;
}

Rational integrate(const TautClass& a) {
  std::vector<Generator> top;
  for (int i = 1; i <= a.arity(); ++i) top.push_back(Generator::o(i));
  auto it = a.terms().find(Monomial(std::move(top)));
  return it == a.terms().end() ? Rational(0) : it->second;
}

TautClass diagonal_class(PresentationPtr p, int m, int i, int j) {
  const int n = p->n();
  TautClass out(p, m);
  const Rational inv_d(1, p->d());
  for (int a = 0; a <= n; ++a) {
    std::vector<Generator> raw;
    if (a > 0) raw.push_back(Generator::h(i, a));
    if (n - a > 0) raw.push_back(Generator::h(j, n - a));
    out += inv_d * normalize(p, m, raw);
  }
  for (std::size_t s = 0; s < p->hodge.size(); ++s) {
    Generator raw[] = {Generator::l(static_cast<int>(s), i), Generator::l(static_cast<int>(s), j)};
    out += Rational(Rational(1) / p->hodge[s].self_degree) * normalize(p, m, raw);
  }
  out += TautClass::of(p, m, Generator::tau(i, j));
  return out;
}

// ---------------------------------------------------------------------------
// Bases and Gram matrices

namespace {

void enumerate_basis(const Presentation& p, int m, int codim, int index, std::vector<bool>& used,
                     std::vector<Generator>& gens, int current, std::set<Monomial>& out) {
  if (current > codim) return;
  if (index > m) {
    if (current == codim) out.insert(Monomial(gens));
    return;
  }
  if (used[index]) {
    enumerate_basis(p, m, codim, index + 1, used, gens, current, out);
    return;
  }
  const int n = p.n();
  auto recurse_with = [&](Generator g, int cost) {
    gens.push_back(g);
    enumerate_basis(p, m, codim, index + 1, used, gens, current + cost, out);
    gens.pop_back();
  };
  enumerate_basis(p, m, codim, index + 1, used, gens, current, out);
  recurse_with(Generator::o(index), n);
  for (int k = 1; k < n; ++k) recurse_with(Generator::h(index, k), k);
  for (std::size_t s = 0; s < p.hodge.size(); ++s) recurse_with(Generator::l(static_cast<int>(s), index), 2);
  for (int j = index + 1; j <= m; ++j) {
    if (used[j]) continue;
    used[j] = true;
    recurse_with(Generator::tau(index, j), n);
    used[j] = false;
  }
}

TautClass monomial_class(const PresentationPtr& p, int m, const Monomial& mono) {
  TautClass t(p, m);
  t.add_term(mono, 1);
  return t;
}

Rational power(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

using Partners = std::vector<std::uint8_t>;  // partner[i] for i in 1..2k, slot 0 unused

Partners partners_of(const Monomial& m, int size) {
  Partners out(size + 1, 0);
  for (const auto& g : m.generators()) {
    out[g.i] = g.j;
    out[g.j] = g.i;
  }
  return out;
}

int count_cycles(const Partners& a, const Partners& b) {
  const int size = static_cast<int>(a.size()) - 1;
  std::vector<bool> seen(size + 1, false);
  int cycles = 0;
  for (int start = 1; start <= size; ++start) {
    if (seen[start]) continue;
    ++cycles;
    int v = start;
    do {
      seen[v] = true;
      int w = a[v];
      seen[w] = true;
      v = b[w];
    } while (v != start);
  }
  return cycles;
}

void fill_rank(GramReport& r) {
  r.rank = rank(r.gram);
  r.kernel_dim = r.gram.cols() - r.rank;
  r.symmetric = r.gram.rows() == r.gram.cols() && r.gram == r.gram.transpose();
  r.nondegenerate = r.rank == r.gram.rows() && r.rank == r.gram.cols();
}

// Literal finite-dimensionality element on indices 1..t as a map from
// matchings (partner arrays) to integer coefficients.
std::map<Partners, long> x4_base(const Presentation& p, int t) {
  const long b = p.tau_rank.get_si();
  std::map<Partners, long> out;
  if (p.ctx.even()) {
    const int half = static_cast<int>(b) + 1;
    std::vector<int> sigma(half);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      int inversions = 0;
      for (int x = 0; x < half; ++x)
        for (int y = x + 1; y < half; ++y)
          if (sigma[x] > sigma[y]) ++inversions;
      Partners pa(t + 1, 0);
      for (int i = 1; i <= half; ++i) {
        int j = half + 1 + sigma[i - 1];
        pa[i] = static_cast<std::uint8_t>(j);
        pa[j] = static_cast<std::uint8_t>(i);
      }
      out[pa] += inversions % 2 == 0 ? 1 : -1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    std::vector<int> sigma(t);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
      Partners pa(t + 1, 0);
      for (int i = 0; i < t; i += 2) {
        pa[sigma[i]] = static_cast<std::uint8_t>(sigma[i + 1]);
        pa[sigma[i + 1]] = static_cast<std::uint8_t>(sigma[i]);
      }
      out[pa] += 1;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

constexpr int kMaxLiteralThreshold = 10;

}  // namespace

std::vector<Monomial> admissible_basis(const Presentation& p, int m, int codim) {
  if (!p.contract_tau) throw std::logic_error("admissible basis needs the tau contraction rule");
  std::set<Monomial> out;
  if (codim < 0 || codim > m * p.n()) return {};
  std::vector<bool> used(m + 1, false);
  std::vector<Generator> gens;
  enumerate_basis(p, m, codim, 1, used, gens, 0, out);
  return {out.begin(), out.end()};
}

GramReport pairing_gram(PresentationPtr p, int m, int codim) {
  auto rows = admissible_basis(*p, m, codim);
  auto cols = admissible_basis(*p, m, m * p->n() - codim);
  GramReport r;
  r.gram = QMatrix(rows.size(), cols.size());
  for (const auto& x : rows) r.row_labels.push_back(x.to_string(*p));
  for (const auto& y : cols) r.col_labels.push_back(y.to_string(*p));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    auto xa = monomial_class(p, m, rows[a]);
    for (std::size_t b = 0; b < cols.size(); ++b)
      r.gram.set(a, b, integrate(mul(xa, monomial_class(p, m, cols[b]))));
  }
  fill_rank(r);
  return r;
}

std::vector<Monomial> perfect_matchings(int k) {
  std::vector<Monomial> out;
  std::vector<bool> used(2 * k + 1, false);
  std::vector<Generator> gens;
  auto rec = [&](auto&& self) -> void {
    int first = 1;
    while (first <= 2 * k && used[first]) ++first;
    if (first > 2 * k) {
      out.emplace_back(gens);
      return;
    }
    used[first] = true;
    for (int j = first + 1; j <= 2 * k; ++j) {
      if (used[j]) continue;
      used[j] = true;
      gens.push_back(Generator::tau(first, j));
      self(self);
      gens.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

int x4_threshold(const Presentation& p) {
  long b = p.tau_rank.get_si();
  return p.ctx.even() ? static_cast<int>(2 * b + 2) : static_cast<int>(b + 2);
}

GramReport matching_gram(PresentationPtr p, int k) {
  if (k < 1) throw std::invalid_argument("matching_gram needs k >= 1");
  const int m = 2 * k;
  auto basis = perfect_matchings(k);
  const std::size_t size = basis.size();
  GramReport r;
  r.k = k;
  r.gram = QMatrix(size, size);
  std::vector<Partners> partners;
  std::map<Partners, std::size_t> index_of;
  for (std::size_t a = 0; a < size; ++a) {
    r.row_labels.push_back(basis[a].to_string(*p));
    partners.push_back(partners_of(basis[a], m));
    index_of[partners.back()] = a;
  }
  r.col_labels = r.row_labels;
  for (std::size_t a = 0; a < size; ++a) {
    auto xa = monomial_class(p, m, basis[a]);
    for (std::size_t b = 0; b < size; ++b) {
      Rational entry = integrate(mul(xa, monomial_class(p, m, basis[b])));
      r.gram.set(a, b, entry);
      if (entry != power(p->tau_square, count_cycles(partners[a], partners[b])))
        r.cycle_formula_ok = false;
    }
  }
  fill_rank(r);

  const int t = x4_threshold(*p);
  std::vector<QVector> orbit;
  if (m >= t && t <= kMaxLiteralThreshold) {
    // Base element on 1..t, padded with tau_{t+1,t+2} ... tau_{m-1,m}.
    QVector base(size, Rational(0));
    for (const auto& [base_pa, c] : x4_base(*p, t)) {
      Partners pa = base_pa;
      pa.resize(m + 1, 0);
      for (int i = t + 1; i <= m; i += 2) {
        pa[i] = static_cast<std::uint8_t>(i + 1);
        pa[i + 1] = static_cast<std::uint8_t>(i);
      }
      base[index_of.at(pa)] += c;
    }
    // The orbit span is the smallest S_m-stable subspace containing the base
    // vector; close it under the adjacent transpositions.
    SpanBuilder span(size);
    std::vector<QVector> queue{base};
    span.add(base);
    while (!queue.empty()) {
      QVector v = std::move(queue.back());
      queue.pop_back();
      for (int s = 1; s < m; ++s) {
        QVector w(size, Rational(0));
        for (std::size_t a = 0; a < size; ++a) {
          if (is_zero(v[a])) continue;
          Partners img(m + 1, 0);
          auto swap_index = [&](int i) { return i == s ? s + 1 : i == s + 1 ? s : i; };
          for (int i = 1; i <= m; ++i)
            img[swap_index(i)] = static_cast<std::uint8_t>(swap_index(partners[a][i]));
          w[index_of.at(img)] += v[a];
        }
        if (span.add(w)) queue.push_back(std::move(w));
      }
    }
    orbit = span.basis();
  }
  r.orbit_available = m < t || t <= kMaxLiteralThreshold;
  r.orbit_dim = orbit.size();
  auto kernel = kernel_basis(r.gram);
  r.kernels_equal = same_span(kernel, orbit);
  return r;
}

std::vector<TautClass> x4_relation_elements(PresentationPtr p, int m) {
  const int t = x4_threshold(*p);
  if (m < t) return {};
  if (t > kMaxLiteralThreshold) throw std::length_error("finite-dimensionality relation too large to expand");
  // Number of injections {1..t} -> {1..m}.
  long count = 1;
  for (int i = 0; i < t; ++i) count *= (m - i);
  if (count > 500000) throw std::length_error("too many embeddings of the finite-dimensionality relation");

  auto base = x4_base(*p, t);
  std::set<std::map<Monomial, Rational>> seen;
  std::vector<TautClass> out;
  // Enumerate injections as the first t entries of each arrangement.
  std::vector<int> pick(m);
  std::iota(pick.begin(), pick.end(), 1);
  std::set<std::vector<int>> done;
  do {
    std::vector<int> head(pick.begin(), pick.begin() + t);
    if (!done.insert(head).second) continue;
    TautClass cls(p, m);
    for (const auto& [pa, c] : base) {
      std::vector<Generator> gens;
      for (int i = 1; i <= t; ++i)
        if (i < pa[i]) gens.push_back(Generator::tau(head[i - 1], head[pa[i] - 1]));
      cls.add_term(Monomial(std::move(gens)), c);
    }
    if (cls.is_zero()) continue;
    Rational lead = cls.terms().begin()->second;
    auto key = cls.terms();
    for (auto& [mono, c] : key) c /= lead;
    if (seen.insert(key).second) out.push_back(std::move(cls));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace tautcalc
