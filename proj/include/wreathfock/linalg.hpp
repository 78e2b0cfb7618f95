#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wreathfock/rational.hpp"

namespace wreathfock {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);
  /// Builds a matrix whose rows are the given vectors (all of equal length).
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;
  RationalMatrix transposed() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning down each column, so the result is deterministic.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);
Rational determinant(RationalMatrix m);

/// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

/// Rank of a family of vectors together with the indices of a greedy
/// basis (each kept vector is independent of the earlier kept ones).
struct SpanInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> basis_indices;
};
SpanInfo span_of(const std::vector<std::vector<Rational>>& vectors);

}  // namespace wreathfock
