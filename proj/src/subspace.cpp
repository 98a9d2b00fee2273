#include "ncrank/subspace.hpp"

#include <stdexcept>

namespace ncrank {

Subspace::Subspace(GfpMatrix basis) : basis_(std::move(basis)) {
  auto rr = rref(basis_);
  // trim zero rows so dim == row count
  GfpMatrix trimmed(basis_.ring(), rr.rank, basis_.cols());
  for (int i = 0; i < rr.rank; ++i)
    for (int j = 0; j < basis_.cols(); ++j) trimmed.at(i, j) = rr.mat.at(i, j);
  basis_ = std::move(trimmed);
  pivots_ = std::move(rr.pivots);
}

Subspace Subspace::from_rows(const GfpMatrix& rows) { return Subspace(rows); }

bool Subspace::contains_vector(const GfpMatrix& v) const {
  if (v.cols() != ambient() || v.rows() != 1)
    throw std::invalid_argument("Subspace::contains_vector: shape mismatch");
  const GfpField& F = field();
  GfpMatrix w = v;
  for (int i = 0; i < dim(); ++i) {
    auto c = w.at(0, pivots_[i]);
    if (F.is_zero(c)) continue;
    for (int j = 0; j < ambient(); ++j)
      w.at(0, j) = F.sub(w.at(0, j), F.mul(c, basis_.at(i, j)));
  }
  return w.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient() != ambient())
    throw std::invalid_argument("Subspace::contains: ambient mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains_vector(other.basis_.row(i))) return false;
  return true;
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
  if (auto c = ambient() <=> o.ambient(); c != 0) return c;
  if (auto c = dim() <=> o.dim(); c != 0) return c;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < ambient(); ++j)
      if (auto c = basis_.at(i, j) <=> o.basis_.at(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

Subspace kernel_space(const GfpMatrix& m) {
  return Subspace::from_rows(kernel_basis(m));
}

Subspace left_kernel_space(const GfpMatrix& m) {
  return Subspace::from_rows(left_kernel_basis(m));
}

Subspace annihilator(const Subspace& x) { return kernel_space(x.basis()); }

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("join: ambient mismatch");
  return Subspace::from_rows(GfpMatrix::vstack(a.basis(), b.basis()));
}

Subspace meet(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("meet: ambient mismatch");
  return kernel_space(
      GfpMatrix::vstack(annihilator(a).basis(), annihilator(b).basis()));
}

}  // namespace ncrank
