#include "zgcu/matrix.hpp"

#include <algorithm>
#include <utility>

#include "zgcu/error.hpp"

namespace zgcu {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::InvalidInput, "matrix dimension mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) fail(ErrorKind::InvalidInput, "matrix dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (sgn((*this)(i, k)) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) fail(ErrorKind::InvalidInput, "solve: shape mismatch");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(b[pivot], b[col]);
    }
    const Rational inv = 1 / a(col, col);
    for (std::size_t j = col; j < n; ++j) a(col, j) *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::size_t rank(RationalMatrix a) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t pivot = r;
    while (pivot < a.rows() && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

IntegerLattice IntegerLattice::span(const std::vector<std::vector<Rational>>& generators,
                                    std::size_t dim) {
  IntegerLattice lat;
  lat.dim_ = dim;
  for (const auto& v : generators) {
    if (v.size() != dim) fail(ErrorKind::InvalidInput, "lattice generator has wrong dimension");
    for (const auto& q : v) lat.denominator_ = lcm(lat.denominator_, q.get_den());
  }
  std::vector<std::vector<Integer>> rows;
  for (const auto& v : generators) {
    std::vector<Integer> row(dim);
    bool nonzero = false;
    for (std::size_t j = 0; j < dim; ++j) {
      Rational scaled = v[j] * Rational(lat.denominator_);
      row[j] = scaled.get_num();
      nonzero = nonzero || sgn(row[j]) != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  // Integer row echelon form via repeated Euclidean reduction per column.
  std::size_t top = 0;
  for (std::size_t col = 0; col < dim && top < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool reduced_all = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t j = col; j < dim; ++j) rows[i][j] -= q * rows[top][j];
        if (sgn(rows[i][col]) != 0) reduced_all = false;
      }
      if (reduced_all) {
        lat.pivots_.push_back(col);
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  lat.basis_ = std::move(rows);
  return lat;
}

bool IntegerLattice::contains(const std::vector<Rational>& v) const {
  if (v.size() != dim_) fail(ErrorKind::InvalidInput, "lattice vector has wrong dimension");
  std::vector<Integer> w(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Rational scaled = v[j] * Rational(denominator_);
    if (scaled.get_den() != 1) return false;
    w[j] = scaled.get_num();
  }
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    const std::size_t col = pivots_[r];
    for (std::size_t j = (r == 0 ? 0 : pivots_[r - 1] + 1); j < col; ++j)
      if (sgn(w[j]) != 0) return false;
    if (sgn(w[col]) == 0) continue;
    if (!mpz_divisible_p(w[col].get_mpz_t(), basis_[r][col].get_mpz_t())) return false;
    const Integer q = w[col] / basis_[r][col];
    for (std::size_t j = col; j < dim_; ++j) w[j] -= q * basis_[r][j];
  }
  return std::all_of(w.begin(), w.end(), [](const Integer& x) { return sgn(x) == 0; });
}

}  // namespace zgcu
