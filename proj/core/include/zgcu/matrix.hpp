#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zgcu/rational.hpp"

namespace zgcu {

/// Dense exact-rational matrix, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Rational trace() const;
  RationalMatrix operator*(const RationalMatrix& other) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Unique solution of a x = b for square a, or nullopt when a is singular.
std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b);

std::size_t rank(RationalMatrix a);

/// Z-span of finitely many rational vectors, kept as an integer echelon basis.
class IntegerLattice {
 public:
  static IntegerLattice span(const std::vector<std::vector<Rational>>& generators, std::size_t dim);

  bool contains(const std::vector<Rational>& v) const;
  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  std::size_t dim_ = 0;
  Integer denominator_ = 1;
  std::vector<std::vector<Integer>> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace zgcu
