// Randomized property suites. Generators are hand-rolled and seeded so
// failures reproduce.
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "tautcalc/correspondence.hpp"
#include "tautcalc/report.hpp"
#include "tautcalc/serialize.hpp"
#include "tautcalc/taut_ring.hpp"

using namespace tautcalc;

namespace {

std::vector<PresentationPtr> fuzz_rings() {
  std::vector<PresentationPtr> out;
  for (int n = 1; n <= 4; ++n)
    for (int d = 2; d <= 4; ++d) out.push_back(Presentation::standard(HypersurfaceContext::from_degree(n, d)));
  auto ctx = HypersurfaceContext::from_degree(4, 3);
  out.push_back(Presentation::fourfold(ctx, FourfoldExtension(ctx, {{"a", 3}, {"b", Rational(5, 2)}})));
  return out;
}

Generator random_generator(std::mt19937_64& rng, const Presentation& p, int m) {
  int i = 1 + rng() % m;
  switch (rng() % (p.hodge.empty() ? 3 : 4)) {
    case 0:
      return Generator::h(i, 1 + rng() % p.n());
    case 1:
      return Generator::o(i);
    case 2: {
      if (m == 1) return Generator::h(i, 1);
      int j = 1 + rng() % m;
      while (j == i) j = 1 + rng() % m;
      return Generator::tau(i, j);
    }
    default:
      return Generator::l(static_cast<int>(rng() % p.hodge.size()), i);
  }
}

std::vector<Generator> random_word(std::mt19937_64& rng, const Presentation& p, int m, int max_len) {
  std::vector<Generator> w;
  int len = rng() % (max_len + 1);
  for (int k = 0; k < len; ++k) w.push_back(random_generator(rng, p, m));
  return w;
}

TautClass random_class(std::mt19937_64& rng, const PresentationPtr& p, int m) {
  TautClass out(p, m);
  int terms = 1 + rng() % 3;
  for (int t = 0; t < terms; ++t)
    out += make_rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)) *
           normalize(p, m, random_word(rng, *p, m, 3));
  return out;
}

}  // namespace

TEST_CASE("confluence: normal forms do not depend on multiplication order") {
  std::mt19937_64 rng(2024);
  auto rings = fuzz_rings();
  rings.push_back(rings[9]->without_contraction());
  int products = 0;
  for (int trial = 0; trial < 12000; ++trial) {
    const auto& p = rings[trial % rings.size()];
    int m = 1 + rng() % 4;
    auto w = random_word(rng, *p, m, 6);
    auto reference = normalize(p, m, w);
    auto shuffled = w;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(normalize(p, m, shuffled) == reference);
    std::size_t cut = w.empty() ? 0 : rng() % (w.size() + 1);
    std::vector<Generator> left(w.begin(), w.begin() + cut), right(w.begin() + cut, w.end());
    CHECK(mul(normalize(p, m, left), normalize(p, m, right)) == reference);
    // without contraction, tau chains sharing an index are irreducible
    if (p->contract_tau)
      for (const auto& [mono, c] : reference.terms()) CHECK(mono.is_normal(*p, m));
    ++products;
  }
  CHECK(products >= 10000);
}

TEST_CASE("ring axioms on random classes") {
  std::mt19937_64 rng(99);
  auto rings = fuzz_rings();
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& p = rings[trial % rings.size()];
    int m = 1 + rng() % 3;
    auto a = random_class(rng, p, m), b = random_class(rng, p, m), c = random_class(rng, p, m);
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
    CHECK(mul(a, TautClass::one(p, m)) == a);
  }
}

TEST_CASE("projection formula for projections and partial diagonals") {
  std::mt19937_64 rng(7);
  auto rings = fuzz_rings();
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& p = rings[trial % rings.size()];
    int t = 1 + rng() % 3;       // target arity (domain of f)
    int s = 1 + rng() % 3;       // source arity
    std::vector<int> images(s);
    for (auto& x : images) x = 1 + rng() % t;
    FiniteSetMap f(t, images);
    auto a = random_class(rng, p, s);
    auto b = random_class(rng, p, t);
    try {
      auto lhs = pushforward(f, mul(pullback(f, a), b));
      auto rhs = mul(a, pushforward(f, b));
      CHECK(lhs == rhs);
      ++checked;
    } catch (const std::domain_error&) {
      // pullback of a tau along a map that identifies its indices
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("functoriality of pullback and pushforward") {
  std::mt19937_64 rng(17);
  auto rings = fuzz_rings();
  int checked = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const auto& p = rings[trial % rings.size()];
    int a = 1 + rng() % 3, b = 1 + rng() % 3, c = 1 + rng() % 3;
    std::vector<int> fi(a), gi(b);
    for (auto& x : fi) x = 1 + rng() % b;
    for (auto& x : gi) x = 1 + rng() % c;
    FiniteSetMap f(b, fi), g(c, gi);  // f: Y^b -> Y^a, g: Y^c -> Y^b
    std::vector<int> composite(a);
    for (int i = 1; i <= a; ++i) composite[i - 1] = g(f(i));
    FiniteSetMap fg(c, composite);  // f o g : Y^c -> Y^a
    auto x = random_class(rng, p, a);
    auto z = random_class(rng, p, c);
    CHECK(pushforward(fg, z) == pushforward(f, pushforward(g, z)));
    try {
      auto direct = pullback(fg, x);
      auto stepwise = pullback(g, pullback(f, x));
      CHECK(direct == stepwise);
      ++checked;
    } catch (const std::domain_error&) {
    }
  }
  CHECK(checked >= 500);
}

TEST_CASE("Gram matrices are symmetric") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    int parity = rng() % 2;
    long b = parity == 0 ? rng() % 4 : 2 * (rng() % 3);
    int k = 1 + rng() % 3;
    auto p = Presentation::standard(HypersurfaceContext::with_primitive_rank(parity == 0 ? 2 : 1, 3, b));
    auto g = matching_gram(p, k);
    CHECK(g.symmetric);
    CHECK(g.cycle_formula_ok);
    CHECK(g.kernels_equal);
  }
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m) {
      if ((n * m) % 2 != 0) continue;
      auto p = Presentation::standard(HypersurfaceContext::from_degree(n, 3));
      auto g = pairing_gram(p, m, n * m / 2);
      CHECK(g.symmetric);
    }
}

TEST_CASE("report round trip on random reports") {
  std::mt19937_64 rng(5);
  auto word = [&](int len) {
    std::string s;
    for (int i = 0; i < len; ++i) s += static_cast<char>("ab|c d\n*^/-_"[rng() % 12]);
    return s;
  };
  for (int trial = 0; trial < 500; ++trial) {
    Report r;
    r.command = word(1 + rng() % 6);
    r.context = Json{{"n", static_cast<int>(rng() % 9)}, {"x", word(3)}};
    int entries = rng() % 6;
    for (int e = 0; e < entries; ++e) {
      switch (rng() % 3) {
        case 0:
          r.entries.push_back(Entry::check(word(5), word(4), true, "", Json{{"v", word(2)}}));
          break;
        case 1:
          r.entries.push_back(Entry::check(word(5), word(4), false, word(6)));
          break;
        default:
          r.entries.push_back(Entry::skipped(word(5), word(4), word(3)));
      }
    }
    CHECK(Report::from_json(Json::parse(r.to_json().dump())) == r);
    CHECK(r.exit_code() == (r.passed() ? 0 : 1));
  }
}

TEST_CASE("class JSON round trip on random classes") {
  std::mt19937_64 rng(8);
  auto rings = fuzz_rings();
  for (int trial = 0; trial < 500; ++trial) {
    const auto& p = rings[trial % rings.size()];
    int m = 1 + rng() % 4;
    auto x = random_class(rng, p, m);
    CHECK(tautclass_from_json(p, Json::parse(to_json(x).dump())) == x);
  }
}

TEST_CASE("rank is invariant under row and column permutations") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (rng() % 2) m.set(i, j, static_cast<long>(rng() % 5) - 2);
    std::vector<std::size_t> rp(r), cp(c);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    QMatrix q(r, c);
    for (const auto& [rc, v] : m.entries()) q.set(rp[rc.first], cp[rc.second], v);
    CHECK(rank(q) == rank(m));
    CHECK(rank(m) + kernel_basis(m).size() == c);
  }
}
