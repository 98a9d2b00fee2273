#pragma once

#include <compare>
#include <vector>

#include "ncrank/gfp.hpp"
#include "ncrank/matrix.hpp"

namespace ncrank {

using GfpMatrix = Matrix<GfpField>;

/// A subspace of GF(p)^n in canonical form: the unique reduced row-echelon
/// basis. Two Subspace values are equal iff they are equal as sets of vectors
/// iff their stored matrices are identical.
class Subspace {
public:
  static Subspace zero(const GfpField& f, int n) { return Subspace(GfpMatrix(f, 0, n)); }
  static Subspace full(const GfpField& f, int n) {
    return Subspace(GfpMatrix::identity(f, n));
  }
  /// Canonicalizes an arbitrary generating set (rows need not be independent).
  static Subspace from_rows(const GfpMatrix& rows);
  /// Span of a single vector given as a 1×n matrix.
  static Subspace from_vector(const GfpMatrix& v) { return from_rows(v); }

  int ambient() const { return basis_.cols(); }
  int dim() const { return basis_.rows(); }
  const GfpField& field() const { return basis_.ring(); }
  const GfpMatrix& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains_vector(const GfpMatrix& v) const;
  bool contains(const Subspace& other) const;
  bool is_zero_space() const { return dim() == 0; }
  bool is_full_space() const { return dim() == ambient(); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  /// Total order (dim, then entries row-major): used for canonical tie-breaks
  /// and ordered registries.
  std::strong_ordering operator<=>(const Subspace& o) const;

private:
  explicit Subspace(GfpMatrix basis);
  GfpMatrix basis_;
  std::vector<int> pivots_;
};

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
/// {c : c·x = 0 for all x in X}, canonical.
Subspace annihilator(const Subspace& x);
/// {y : M y = 0} as a Subspace.
Subspace kernel_space(const GfpMatrix& m);
/// {x : x^T M = 0} as a Subspace.
Subspace left_kernel_space(const GfpMatrix& m);

/// An element of the reverse-ordered lattice 𝓜, stored by its annihilator so
/// that 𝓜-side order, meet, join, chains, and frames are the 𝓛-side code on
/// the stored matrices. Atoms of 𝓜 are hyperplanes, i.e. single covectors.
class CoSubspace {
public:
  static CoSubspace from_primal(const Subspace& y) { return CoSubspace(annihilator(y)); }
  static CoSubspace from_annihilator(Subspace ann) { return CoSubspace(std::move(ann)); }
  static CoSubspace bottom(const GfpField& f, int n) {  // primal K^n
    return CoSubspace(Subspace::zero(f, n));
  }
  static CoSubspace top(const GfpField& f, int n) {  // primal {0}
    return CoSubspace(Subspace::full(f, n));
  }

  const Subspace& ann() const { return ann_; }
  Subspace primal() const { return annihilator(ann_); }
  int ambient() const { return ann_.ambient(); }
  /// Lattice rank in 𝓜 (= n − primal dimension).
  int rank() const { return ann_.dim(); }
  int primal_dim() const { return ambient() - ann_.dim(); }

  bool operator==(const CoSubspace& o) const { return ann_ == o.ann_; }
  std::strong_ordering operator<=>(const CoSubspace& o) const { return ann_ <=> o.ann_; }

private:
  explicit CoSubspace(Subspace ann) : ann_(std::move(ann)) {}
  Subspace ann_;
};

}  // namespace ncrank
