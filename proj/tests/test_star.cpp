#include <random>

#include "doctest.h"
#include "tautcalc/star.hpp"

using namespace tautcalc;

namespace {

Rational vandermonde(const std::vector<Rational>& t) {
  Rational v = 1;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) v *= t[j] - t[i];
  return v;
}

QMatrix random_invertible(std::mt19937_64& rng, int size) {
  while (true) {
    QMatrix g(size, size);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) g.set(i, j, static_cast<long>(rng() % 9) - 4);
    if (rank(g) == static_cast<std::size_t>(size)) return g;
  }
}

}  // namespace

TEST_CASE("monomials") {
  CHECK(monomial_exponents(1, 3).size() == 4);
  CHECK(monomial_exponents(5, 3).size() == 56);
  CHECK(monomial_exponents(2, 0).size() == 1);
}

TEST_CASE("projective line: evaluation is a Vandermonde matrix") {
  std::vector<Rational> t{0, 1, 3, -2};
  PointConfig c{1, {}, StarMode::User, 0, {}, {}, {}};
  for (const auto& x : t) c.points.push_back({1, x});
  auto m = evaluation_matrix(1, 3, c);
  CHECK(m.rows() == 4);
  CHECK(m.cols() == 4);
  CHECK(!is_zero(vandermonde(t)));
  CHECK(rank(m) == 4);
  c.points.push_back({0, 1});
  CHECK(rank(evaluation_matrix(1, 3, c)) == 4);
  CHECK_FALSE(check_star(1, 3, c).surjective);
}

TEST_CASE("star condition for cubics") {
  for (std::uint64_t seed : {1u, 2u, 3u, 42u}) {
    CHECK(check_star(5, 3, 4, StarMode::Random, seed).surjective);
    CHECK(check_star(5, 3, 4, StarMode::Collinear, seed).surjective);
    CHECK_FALSE(check_star(5, 3, 5, StarMode::Collinear, seed).surjective);
    CHECK(check_star(1, 3, 4, StarMode::Random, seed).surjective);
    CHECK_FALSE(check_star(1, 3, 5, StarMode::Random, seed).surjective);
  }
  auto s = check_star(5, 3, 4, StarMode::Collinear, 9);
  CHECK(s.h0_dim == 56);
  CHECK(s.kernel_codim == 4);
}

TEST_CASE("determinism") {
  auto a = check_star(5, 3, 4, StarMode::Random, 77).to_json().dump();
  auto b = check_star(5, 3, 4, StarMode::Random, 77).to_json().dump();
  CHECK(a == b);
  CHECK(a != check_star(5, 3, 4, StarMode::Random, 78).to_json().dump());
}

TEST_CASE("subconfigurations and coordinate changes") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    int N = 1 + rng() % 4, d = 1 + rng() % 3, r = 1 + rng() % 6;
    auto c = rng() % 2 ? random_points(N, r, rng()) : collinear_points(N, r, rng());
    auto full = check_star(N, d, c);
    if (full.surjective)
      for (int drop = 0; drop < r; ++drop) {
        auto sub = c;
        sub.points.erase(sub.points.begin() + drop);
        if (!sub.points.empty()) CHECK(check_star(N, d, sub).surjective);
      }
    auto moved = transform(c, random_invertible(rng, N + 1));
    CHECK(check_star(N, d, moved).rank == full.rank);
  }
}

TEST_CASE("configuration errors") {
  CHECK_THROWS_AS(parse_points(1, "1,0;2,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_points(1, "0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_points(2, "1,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_points(1, "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_star_mode("sideways"), std::invalid_argument);
  CHECK_THROWS_AS(check_star(5, 3, 4, StarMode::User, 1), std::invalid_argument);
  auto c = parse_points(2, "1,0,0; 0,1/2,0 ;0,0,3");
  CHECK(c.points.size() == 3);
  CHECK(check_star(2, 1, c).surjective);
}
