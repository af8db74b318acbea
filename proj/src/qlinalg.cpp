#include <stdexcept>
#include <string>

#include "tautcalc/qmatrix.hpp"
#include "tautcalc/rational.hpp"

namespace tautcalc {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_pretty(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    BigInt z;
    std::string buf(s);
    if (buf.empty() || z.set_str(buf, 10) != 0)
      throw std::invalid_argument("malformed rational: " + std::string(text));
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Rational QMatrix::at(std::size_t r, std::size_t c) const {
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Rational(0) : it->second;
}

void QMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("QMatrix index out of range");
  if (is_zero(value))
    entries_.erase({r, c});
  else
    entries_[{r, c}] = value;
}

std::vector<QVector> QMatrix::dense() const {
  std::vector<QVector> out(rows_, QVector(cols_, Rational(0)));
  for (const auto& [rc, v] : entries_) out[rc.first][rc.second] = v;
  return out;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in QMatrix::apply");
  QVector out(rows_, Rational(0));
  for (const auto& [rc, x] : entries_) out[rc.first] += x * v[rc.second];
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns in order.
std::vector<std::size_t> rref(std::vector<QVector>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && is_zero(a[p][col])) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || is_zero(a[r][col])) continue;
      Rational f = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (!is_zero(a[row][c])) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

void check_lengths(const std::vector<QVector>& vs, std::size_t len) {
  for (const auto& v : vs)
    if (v.size() != len) throw std::invalid_argument("dimension mismatch");
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  auto a = m.dense();
  return rref(a, m.cols()).size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  auto a = m.dense();
  auto pivots = rref(a, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_rank(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return 0;
  std::size_t len = vectors.front().size();
  check_lengths(vectors, len);
  auto a = vectors;
  return rref(a, len).size();
}

bool span_membership(const std::vector<QVector>& vectors, const QVector& candidate) {
  check_lengths(vectors, candidate.size());
  auto extended = vectors;
  extended.push_back(candidate);
  return span_rank(extended) == span_rank(vectors);
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b) {
  std::size_t ra = span_rank(a), rb = span_rank(b);
  if (ra != rb) return false;
  if (a.empty() || b.empty()) return ra == 0 && rb == 0;
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(both) == ra;
}

QVector SpanBuilder::reduce(QVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!is_zero(rows_[r][c])) v[c] -= f * rows_[r][c];
  }
  return v;
}

bool SpanBuilder::contains(const QVector& v) const {
  auto rest = reduce(v);
  for (const auto& x : rest)
    if (!is_zero(x)) return false;
  return true;
}

bool SpanBuilder::add(const QVector& v) {
  auto rest = reduce(v);
  std::size_t pivot = 0;
  while (pivot < dim_ && is_zero(rest[pivot])) ++pivot;
  if (pivot == dim_) return false;
  Rational inv = 1 / rest[pivot];
  for (auto& x : rest) x *= inv;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = rows_[r][pivot];
    if (is_zero(f)) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!is_zero(rest[c])) rows_[r][c] -= f * rest[c];
  }
  rows_.push_back(std::move(rest));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace tautcalc
