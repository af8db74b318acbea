#include "tautcalc/star.hpp"

#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tautcalc {

std::string to_string(StarMode m) {
  switch (m) {
    case StarMode::Random:
      return "random";
    case StarMode::Collinear:
      return "collinear";
    case StarMode::User:
      return "user";
  }
  return "user";
}

StarMode parse_star_mode(const std::string& s) {
  if (s == "random") return StarMode::Random;
  if (s == "collinear") return StarMode::Collinear;
  if (s == "user") return StarMode::User;
  throw std::invalid_argument("unknown star mode '" + s + "'");
}

namespace {

bool proportional(const QVector& a, const QVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  return true;
}

bool is_zero_vector(const QVector& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

class Draw {
 public:
  Draw(std::uint64_t seed, int box) : rng_(seed), box_(box) {}
  long next() { return static_cast<long>(rng_() % (2 * box_ + 1)) - box_; }
  QVector point(int N) {
    QVector v(N + 1);
    do {
      for (auto& x : v) x = next();
    } while (is_zero_vector(v));
    return v;
  }

 private:
  std::mt19937_64 rng_;
  long box_;
};

std::string point_string(const QVector& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << to_pretty(p[i]);
  out << ']';
  return out.str();
}

}  // namespace

void validate(const PointConfig& c) {
  for (std::size_t a = 0; a < c.points.size(); ++a) {
    if (static_cast<int>(c.points[a].size()) != c.ambient_dim + 1)
      throw std::invalid_argument("point has the wrong number of coordinates");
    if (is_zero_vector(c.points[a])) throw std::invalid_argument("zero coordinate vector");
    for (std::size_t b = 0; b < a; ++b)
      if (proportional(c.points[a], c.points[b]))
        throw std::invalid_argument("points " + std::to_string(b) + " and " + std::to_string(a) +
                                    " coincide projectively");
  }
}

PointConfig random_points(int N, int r, std::uint64_t seed, int box) {
  if (N < 1 || r < 1) throw std::invalid_argument("need N >= 1 and r >= 1");
  PointConfig c{N, {}, StarMode::Random, seed, {}, {}, {}};
  Draw draw(seed, box);
  while (static_cast<int>(c.points.size()) < r) {
    QVector p = draw.point(N);
    bool fresh = true;
    for (const auto& q : c.points) fresh = fresh && !proportional(p, q);
    if (fresh) c.points.push_back(std::move(p));
  }
  return c;
}

PointConfig collinear_points(int N, int r, std::uint64_t seed, int box) {
  if (N < 1 || r < 1) throw std::invalid_argument("need N >= 1 and r >= 1");
  if (2 * box + 1 < r) throw std::invalid_argument("parameter box too small for r distinct points");
  PointConfig c{N, {}, StarMode::Collinear, seed, {}, {}, {}};
  Draw draw(seed, box);
  c.line_base = draw.point(N);
  do {
    c.line_direction = draw.point(N);
  } while (proportional(c.line_base, c.line_direction));
  std::set<long> used;
  while (static_cast<int>(c.parameters.size()) < r) {
    long t = draw.next();
    if (!used.insert(t).second) continue;
    c.parameters.emplace_back(t);
    QVector p(N + 1);
    for (int i = 0; i <= N; ++i) p[i] = c.line_base[i] + Rational(t) * c.line_direction[i];
    c.points.push_back(std::move(p));
  }
  return c;
}

PointConfig parse_points(int N, const std::string& text) {
  PointConfig c{N, {}, StarMode::User, 0, {}, {}, {}};
  std::stringstream all(text);
  std::string point;
  while (std::getline(all, point, ';')) {
    QVector v;
    std::stringstream coords(point);
    std::string x;
    while (std::getline(coords, x, ',')) {
      auto first = x.find_first_not_of(" \t");
      auto last = x.find_last_not_of(" \t");
      if (first == std::string::npos) throw std::invalid_argument("empty coordinate");
      v.push_back(parse_rational(x.substr(first, last - first + 1)));
    }
    c.points.push_back(std::move(v));
  }
  if (c.points.empty()) throw std::invalid_argument("no points given");
  validate(c);
  return c;
}

std::vector<std::vector<int>> monomial_exponents(int N, int d) {
  if (N < 0 || d < 0) throw std::invalid_argument("need N >= 0 and d >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> e(N + 1, 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == N) {
      e[var] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

QMatrix evaluation_matrix(int N, int d, const PointConfig& config) {
  validate(config);
  if (config.ambient_dim != N) throw std::invalid_argument("configuration lives in a different P^N");
  auto monos = monomial_exponents(N, d);
  QMatrix m(config.points.size(), monos.size());
  for (std::size_t a = 0; a < config.points.size(); ++a) {
    QVector p = config.points[a];
    std::size_t lead = 0;
    while (is_zero(p[lead])) ++lead;
    Rational scale = p[lead];
    for (auto& x : p) x /= scale;
    for (std::size_t col = 0; col < monos.size(); ++col) {
      Rational v = 1;
      for (int i = 0; i <= N; ++i)
        for (int k = 0; k < monos[col][i]; ++k) v *= p[i];
      m.set(a, col, v);
    }
  }
  return m;
}

PointConfig transform(const PointConfig& c, const QMatrix& g) {
  if (g.rows() != static_cast<std::size_t>(c.ambient_dim + 1) || g.cols() != g.rows())
    throw std::invalid_argument("coordinate change has the wrong shape");
  if (rank(g) != g.rows()) throw std::invalid_argument("coordinate change is not invertible");
  PointConfig out = c;
  out.mode = StarMode::User;
  out.line_base.clear();
  out.line_direction.clear();
  out.parameters.clear();
  for (auto& p : out.points) p = g.apply(p);
  return out;
}

Json StarReport::to_json() const {
  return Json{{"N", N},
              {"d", d},
              {"r", r},
              {"mode", tautcalc::to_string(mode)},
              {"seed", seed},
              {"h0_dim", h0_dim},
              {"rank", rank},
              {"surjective", surjective},
              {"kernel_codim", kernel_codim},
              {"expected_codim", r},
              {"points", points}};
}

StarReport check_star(int N, int d, const PointConfig& config) {
  StarReport s;
  s.N = N;
  s.d = d;
  s.r = static_cast<int>(config.points.size());
  s.mode = config.mode;
  s.seed = config.seed;
  auto m = evaluation_matrix(N, d, config);
  s.h0_dim = m.cols();
  s.rank = rank(m);
  s.kernel_codim = s.rank;
  s.surjective = s.rank == static_cast<std::size_t>(s.r);
  for (const auto& p : config.points) s.points.push_back(point_string(p));
  return s;
}

StarReport check_star(int N, int d, int r, StarMode mode, std::uint64_t seed) {
  switch (mode) {
    case StarMode::Random:
      return check_star(N, d, random_points(N, r, seed));
    case StarMode::Collinear:
      return check_star(N, d, collinear_points(N, r, seed));
    case StarMode::User:
      break;
  }
  throw std::invalid_argument("user mode needs explicit points");
}

Report star_report(const StarReport& s) {
  Report r;
  r.command = "star";
  r.context = Json{{"N", s.N}, {"d", s.d}, {"r", s.r}, {"mode", to_string(s.mode)}, {"seed", s.seed}};
  std::string name = "star_" + std::to_string(s.r) + " " + to_string(s.mode);
  r.entries.push_back(Entry::check(name, "star-condition", s.surjective,
                                   "rank " + std::to_string(s.rank) + " < " + std::to_string(s.r),
                                   s.to_json()));
  return r;
}

}  // namespace tautcalc
