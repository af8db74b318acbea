#include "tautcalc/chern.hpp"

#include <sstream>
#include <stdexcept>

namespace tautcalc {

int weighted_degree(const ChernMonomial& m) {
  int d = 0;
  for (std::size_t j = 0; j < m.size(); ++j) d += static_cast<int>(j + 1) * m[j];
  return d;
}

int filtration_weight(const ChernMonomial& m) {
  int w = 0;
  for (std::size_t j = 0; j < m.size(); ++j) w += static_cast<int>((j + 1) / 2) * m[j];
  return w;
}

std::string to_string(const ChernMonomial& m) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'c' << j + 1;
    if (m[j] > 1) out << '^' << m[j];
  }
  return first ? "1" : out.str();
}

SymPolynomial SymPolynomial::c(int j) {
  if (j < 1) throw std::invalid_argument("Chern symbols start at c_1");
  SymPolynomial p;
  ChernMonomial m(j, 0);
  m[j - 1] = 1;
  p.terms_[m] = 1;
  return p;
}

SymPolynomial SymPolynomial::constant(const Rational& a) {
  SymPolynomial p;
  p.add({}, a);
  return p;
}

Rational SymPolynomial::coefficient(const ChernMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPolynomial::add(const ChernMonomial& m, const Rational& a) {
  if (is_zero(a)) return;
  auto [it, inserted] = terms_.try_emplace(m, a);
  if (!inserted) {
    it->second += a;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

SymPolynomial& SymPolynomial::operator+=(const SymPolynomial& o) {
  for (const auto& [m, a] : o.terms_) add(m, a);
  return *this;
}

SymPolynomial& SymPolynomial::operator*=(const Rational& a) {
  if (is_zero(a)) terms_.clear();
  for (auto& [m, x] : terms_) x *= a;
  return *this;
}

SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
  SymPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      ChernMonomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t j = 0; j < ma.size(); ++j) m[j] += ma[j];
      for (std::size_t j = 0; j < mb.size(); ++j) m[j] += mb[j];
      out.add(m, ca * cb);
    }
  return out;
}

std::string SymPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, a] : terms_) {
    if (!first) out << (sgn(a) < 0 ? " - " : " + ");
    else if (sgn(a) < 0) out << '-';
    first = false;
    Rational x = abs(a);
    if (m.empty()) {
      out << to_pretty(x);
      continue;
    }
    if (x != 1) out << to_pretty(x) << '*';
    out << tautcalc::to_string(m);
  }
  return out.str();
}

std::vector<SymPolynomial> chern_character_expansion(int i_max) {
  if (i_max < 1) throw std::invalid_argument("i_max must be at least 1");
  std::vector<SymPolynomial> p(i_max + 1);
  std::vector<SymPolynomial> ch;
  Rational factorial = 1;
  for (int k = 1; k <= i_max; ++k) {
    SymPolynomial pk = SymPolynomial::c(k);
    pk *= Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      SymPolynomial term = SymPolynomial::c(i) * p[k - i];
      term *= Rational(i % 2 == 1 ? 1 : -1);
      pk += term;
    }
    p[k] = pk;
    factorial *= k;
    SymPolynomial c = pk;
    c *= 1 / factorial;
    ch.push_back(std::move(c));
  }
  return ch;
}

std::vector<SymPolynomial> chern_character_via_log(int i_max) {
  if (i_max < 1) throw std::invalid_argument("i_max must be at least 1");
  // u = c(t) - 1 as a truncated series; power[k] is the t^k coefficient.
  using Series = std::vector<SymPolynomial>;
  Series u(i_max + 1);
  for (int k = 1; k <= i_max; ++k) u[k] = SymPolynomial::c(k);
  Series log(i_max + 1), power = u;
  for (int m = 1; m <= i_max; ++m) {
    for (int k = m; k <= i_max; ++k) {
      SymPolynomial term = power[k];
      term *= Rational(m % 2 == 1 ? 1 : -1, m);
      log[k] += term;
    }
    Series next(i_max + 1);
    for (int k = m + 1; k <= i_max; ++k)
      for (int i = 1; i <= k - m; ++i) next[k] += u[i] * power[k - i];
    power = std::move(next);
  }
  std::vector<SymPolynomial> ch;
  Rational factorial = 1;  // (k-1)!
  for (int k = 1; k <= i_max; ++k) {
    if (k > 1) factorial *= k - 1;
    SymPolynomial c = log[k];
    c *= Rational(k % 2 == 1 ? 1 : -1) / factorial;
    ch.push_back(std::move(c));
  }
  return ch;
}

std::vector<NewtonRow> verify_filtration_bound(int i_max) {
  if (i_max < 2) throw std::invalid_argument("i_max must be at least 2");
  auto ch = chern_character_expansion(i_max);
  std::vector<NewtonRow> rows;
  Rational factorial = 1;  // (i-1)!
  for (int i = 1; i <= i_max; ++i) {
    if (i > 1) factorial *= i - 1;
    NewtonRow row;
    row.i = i;
    ChernMonomial ci(i, 0);
    ci[i - 1] = 1;
    row.leading = ch[i - 1].coefficient(ci);
    row.leading_ok = row.leading == Rational(i % 2 == 1 ? 1 : -1) / factorial;
    for (const auto& [m, a] : ch[i - 1].terms()) {
      if (weighted_degree(m) != i) row.homogeneous = false;
      if (m == ci) continue;
      ++row.monomials;
      int w = filtration_weight(m);
      row.max_weight = std::max(row.max_weight, w);
      if (w > i / 2 && row.bound_ok) {
        row.bound_ok = false;
        row.first_violation = to_string(m);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Report chern_report(int i_max) {
  Report r;
  r.command = "chern";
  r.context = Json{{"max_i", i_max}};
  auto rows = verify_filtration_bound(i_max);
  auto newton = chern_character_expansion(i_max);
  auto log = chern_character_via_log(i_max);
  for (const auto& row : rows) {
    std::string num = std::to_string(row.i);
    if (num.size() < 2) num = "0" + num;
    Json data{{"leading", to_string(row.leading)},
              {"q_monomials", row.monomials},
              {"max_weight", row.max_weight},
              {"bound", row.i / 2}};
    std::string witness;
    if (!row.homogeneous) witness = "not weighted-homogeneous";
    else if (!row.leading_ok) witness = "leading coefficient " + to_string(row.leading);
    else if (!row.bound_ok) witness = "monomial " + row.first_violation + " exceeds weight " + std::to_string(row.i / 2);
    r.entries.push_back(Entry::check("ch_" + num + " bound", "chern-index-bound",
                                     row.homogeneous && row.leading_ok && row.bound_ok, witness, data));
    const auto& a = newton[row.i - 1];
    const auto& b = log[row.i - 1];
    SymPolynomial diff = a;
    SymPolynomial neg = b;
    neg *= -1;
    diff += neg;
    r.entries.push_back(Entry::check("ch_" + num + " log oracle", "chern-character-expansion", a == b,
                                     diff.to_string()));
  }
  return r;
}

std::vector<std::string> filtration_certificate(int m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const int top = 2 * m;
  auto rows = verify_filtration_bound(std::max(top, 2));
  std::vector<std::string> lines;
  lines.push_back("Inputs: c_0, c_1 in I_0 (divisors are decomposable); ch_i in I_1 for all i; I_a I_b in I_{a+b}.");
  for (const auto& row : rows) {
    if (row.i > top || row.i < 2) continue;
    if (!(row.homogeneous && row.leading_ok && row.bound_ok)) {
      lines.push_back("step i=" + std::to_string(row.i) + " FAILED");
      return lines;
    }
    lines.push_back("i=" + std::to_string(row.i) + ": ch_" + std::to_string(row.i) + " = " +
                    to_pretty(row.leading) + " c_" + std::to_string(row.i) + " + Q, Q has " +
                    std::to_string(row.monomials) + " monomials of weight <= " +
                    std::to_string(row.max_weight) + " <= " + std::to_string(row.i / 2) + ", so c_" +
                    std::to_string(row.i) + " in I_" + std::to_string(row.i / 2));
  }
  lines.push_back("Hence c_" + std::to_string(top) + " ∈ I_" + std::to_string(m));
  return lines;
}

Report certificate_report(int m) {
  Report r;
  r.command = "chern-certificate";
  r.context = Json{{"m", m}};
  auto lines = filtration_certificate(m);
  std::string conclusion = "c_" + std::to_string(2 * m) + " ∈ I_" + std::to_string(m);
  bool ok = lines.back() == "Hence " + conclusion;
  r.entries.push_back(Entry::check("certificate m=" + std::to_string(m), "chern-filtration-certificate",
                                   ok, lines.back(), Json{{"conclusion", conclusion}, {"steps", lines}}));
  return r;
}

}  // namespace tautcalc
