#pragma once

#include <stdexcept>
#include <vector>

#include "ncrank/subspace.hpp"

namespace ncrank {

/// A linear symbolic matrix A = A_1 x_1 + ... + A_m x_m: the tuple of square
/// coefficient matrices over one ring.
template <class Ring>
struct SymbolicMatrix {
  int n = 0;
  std::vector<Matrix<Ring>> mats;

  SymbolicMatrix(int n_, std::vector<Matrix<Ring>> mats_)
      : n(n_), mats(std::move(mats_)) {
    if (mats.empty()) throw std::invalid_argument("SymbolicMatrix: m must be >= 1");
    for (const auto& a : mats)
      if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("SymbolicMatrix: non-square summand");
  }

  int m() const { return static_cast<int>(mats.size()); }
};

using SymbolicGfp = SymbolicMatrix<GfpField>;
using SymbolicInt = SymbolicMatrix<IntRing>;

/// rank of the bilinear form A_i restricted to X × Y (Y given as a primal
/// subspace): rank(B_X · A_i · B_Y^T).
int restricted_rank(const GfpMatrix& ai, const Subspace& x, const Subspace& y_primal);

/// X^⊥ = {y : A_i(x,y) = 0 for all x in X} as an 𝓜-element; its annihilator
/// is the row space of B_X·A_i, so no kernel computation is needed.
CoSubspace orth_right(const GfpMatrix& ai, const Subspace& x);

/// Y^⊥ = {x : A_i(x,y) = 0 for all y in Y} in 𝓛.
Subspace orth_left(const GfpMatrix& ai, const CoSubspace& y);

/// Left kernel U_0 of A_i (an 𝓛-element) and right kernel V_0 (an 𝓜-element).
Subspace left_kernel_u0(const GfpMatrix& ai);
CoSubspace right_kernel_v0(const GfpMatrix& ai);

/// Test utility for the rank formula
/// R(X,Y) = dim Y − dim(Y ∩ X^⊥) = dim X − dim(X ∩ Y^⊥).
bool check_rank_formula(const GfpMatrix& ai, const Subspace& x, const Subspace& y_primal);

/// A pair (X, Y) with its MVSP objective value 2n − dim X − dim Y; feasible
/// iff every A_i vanishes on X × Y.
struct VanishingPair {
  Subspace x;
  CoSubspace y;
  int value;

  VanishingPair(Subspace x_, CoSubspace y_)
      : x(std::move(x_)), y(std::move(y_)),
        value(2 * x.ambient() - x.dim() - y.primal_dim()) {}
};

template <class Ring>
bool is_feasible(const VanishingPair& pr, const SymbolicMatrix<Ring>& a);

bool is_feasible(const VanishingPair& pr, const SymbolicGfp& a);

/// d-blow-up A^{d} = Σ A_i ⊗ X_i with d×d variable matrices X_i: the
/// materialized nd×nd symbolic matrix with m·d² summands, summand (i,j,k)
/// being A_i ⊗ E_{jk}; ordered i-major, then j, then k.
template <class Ring>
SymbolicMatrix<Ring> blowup(const SymbolicMatrix<Ring>& a, int d) {
  if (d < 1) throw std::invalid_argument("blowup: d must be >= 1");
  const int n = a.n, nd = n * d;
  std::vector<Matrix<Ring>> out;
  out.reserve(static_cast<std::size_t>(a.m()) * d * d);
  for (const auto& ai : a.mats)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Matrix<Ring> s(ai.ring(), nd, nd);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) s.at(r * d + j, c * d + k) = ai.at(r, c);
        out.push_back(std::move(s));
      }
  return SymbolicMatrix<Ring>(nd, std::move(out));
}

}  // namespace ncrank
