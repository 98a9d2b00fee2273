#pragma once

#include <stdexcept>
#include <vector>

#include "ncrank/rational.hpp"

namespace ncrank {

/// Ring of arbitrary-precision integers (no inv); Val-Det works here.
struct IntRing {
  using Elem = Int;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool operator==(const IntRing&) const { return true; }
};

/// Field of exact rationals.
struct RatField {
  using Elem = Rat;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("RatField::inv of zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool operator==(const RatField&) const { return true; }
};

/// Dense rectangular matrix over one ring context. Values are immutable in
/// spirit: operations return new matrices; at() mutation is for construction.
template <class Ring>
class Matrix {
public:
  using Elem = typename Ring::Elem;

  Matrix(Ring ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, ring_.zero()) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
  }

  static Matrix identity(Ring ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = m.ring_.one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Ring& ring() const { return ring_; }

  Elem& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Elem& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Matrix transpose() const {
    Matrix t(ring_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
    if (!(ring_ == o.ring_)) throw std::invalid_argument("Matrix::mul: ring mismatch");
    Matrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (ring_.is_zero(a)) continue;
        for (int j = 0; j < o.cols_; ++j)
          r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(a, o.at(k, j)));
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix::add: shape mismatch");
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      r.data_[i] = ring_.add(data_[i], o.data_[i]);
    return r;
  }

  Matrix scaled(const Elem& c) const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = ring_.mul(c, data_[i]);
    return r;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("Matrix::vstack: shape mismatch");
    Matrix r(a.ring_, a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows_; ++i)
      for (int j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
  }

  Matrix row(int i) const {
    Matrix r(ring_, 1, cols_);
    for (int j = 0; j < cols_; ++j) r.at(0, j) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!ring_.is_zero(e)) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!ring_.eq(data_[i], o.data_[i])) return false;
    return true;
  }

private:
  Ring ring_;
  int rows_, cols_;
  std::vector<Elem> data_;
};

template <class Field>
struct RrefResult {
  Matrix<Field> mat;
  int rank;
  std::vector<int> pivots;
};

/// Unique reduced row-echelon form over a field: pivots 1, zeros above and
/// below, zero rows at the bottom.
template <class Field>
RrefResult<Field> rref(Matrix<Field> m) {
  const Field& F = m.ring();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!F.is_zero(m.at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    auto inv = F.inv(m.at(r, c));
    for (int j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(inv, m.at(r, j));
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || F.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult<Field>{std::move(m), r, std::move(pivots)};
}

template <class Field>
int rank(const Matrix<Field>& m) {
  return rref(m).rank;
}

/// Rows span {y : M y = 0}; output in RREF (canonical).
template <class Field>
Matrix<Field> kernel_basis(const Matrix<Field>& m) {
  const Field& F = m.ring();
  auto rr = rref(m);
  int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : rr.pivots) is_pivot[c] = true;
  Matrix<Field> k(F, n - rr.rank, n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    k.at(row, c) = F.one();
    for (int i = 0; i < rr.rank; ++i)
      k.at(row, rr.pivots[i]) = F.neg(rr.mat.at(i, c));
    ++row;
  }
  return rref(std::move(k)).mat;
}

/// Rows span {x : x^T M = 0}.
template <class Field>
Matrix<Field> left_kernel_basis(const Matrix<Field>& m) {
  return kernel_basis(m.transpose());
}

}  // namespace ncrank
