#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tautcalc/qmatrix.hpp"
#include "tautcalc/report.hpp"

namespace tautcalc {

enum class StarMode { Random, Collinear, User };

std::string to_string(StarMode m);
/// Throws std::invalid_argument on an unknown name.
StarMode parse_star_mode(const std::string& s);

struct PointConfig {
  int ambient_dim = 0;  // N, points live in P^N
  std::vector<QVector> points;
  StarMode mode = StarMode::User;
  std::uint64_t seed = 0;
  // Collinear mode: points are base + t_i * direction.
  QVector line_base, line_direction;
  std::vector<Rational> parameters;
};

/// r pairwise distinct points with coordinates in [-box, box].
PointConfig random_points(int N, int r, std::uint64_t seed, int box = 9);
/// r points on a random line through two seeded points, at distinct
/// integer parameters.
PointConfig collinear_points(int N, int r, std::uint64_t seed, int box = 9);
/// "x0,x1,...;y0,y1,..." with integer or p/q entries. Throws
/// std::invalid_argument on malformed text or wrong dimension.
PointConfig parse_points(int N, const std::string& text);

/// Throws std::invalid_argument on a zero vector, wrong length, or two
/// points that agree projectively.
void validate(const PointConfig& c);

/// Degree-d monomials in N+1 variables, each as an exponent vector, in
/// lexicographically decreasing order.
std::vector<std::vector<int>> monomial_exponents(int N, int d);

/// r x C(N+d, d) matrix of monomial values; each point is first scaled so
/// its first nonzero coordinate is 1.
QMatrix evaluation_matrix(int N, int d, const PointConfig& config);

/// Applies the invertible linear change of coordinates g to every point.
PointConfig transform(const PointConfig& c, const QMatrix& g);

struct StarReport {
  int N = 0, d = 0, r = 0;
  StarMode mode = StarMode::User;
  std::uint64_t seed = 0;
  std::size_t h0_dim = 0;
  std::size_t rank = 0;
  bool surjective = false;
  std::size_t kernel_codim = 0;  // equals rank; compare with r * rank(E)
  std::vector<std::string> points;

  Json to_json() const;
};

StarReport check_star(int N, int d, const PointConfig& config);
/// Builds the configuration for mode (Random or Collinear) and checks it.
StarReport check_star(int N, int d, int r, StarMode mode, std::uint64_t seed);

Report star_report(const StarReport& s);

}  // namespace tautcalc
