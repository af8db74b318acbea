#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tautcalc/rational.hpp"

namespace tautcalc {

using QVector = std::vector<Rational>;

/// Sparse matrix over Q. Absent entries are zero; the shape is fixed at
/// construction.
class QMatrix {
 public:
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix from_rows(const std::vector<QVector>& rows);
  static QMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);

  const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const {
    return entries_;
  }

  std::vector<QVector> dense() const;
  QMatrix transpose() const;
  QVector apply(const QVector& v) const;

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

std::size_t rank(const QMatrix& m);

/// Basis of the right null space, one vector per free column of the
/// reduced row echelon form. Empty iff the matrix has full column rank.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// Rank of the span of the given vectors (all of equal length).
std::size_t span_rank(const std::vector<QVector>& vectors);

/// True iff candidate lies in the Q-span of vectors. Throws
/// std::invalid_argument when lengths differ.
bool span_membership(const std::vector<QVector>& vectors, const QVector& candidate);

/// Incrementally grown subspace of Q^dim kept in reduced echelon form.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  /// Adds v to the span; returns false when v was already in it.
  bool add(const QVector& v);
  bool contains(const QVector& v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<QVector>& basis() const { return rows_; }

 private:
  QVector reduce(QVector v) const;

  std::size_t dim_;
  std::vector<QVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// True iff the two families span the same subspace.
bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b);

}  // namespace tautcalc
