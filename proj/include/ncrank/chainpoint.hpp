#pragma once

#include <utility>
#include <vector>

#include "ncrank/subspace.hpp"

namespace ncrank {

/// Which lattice a chain lives in. Both sides store Subspace values: on 𝓛 they
/// are the subspaces themselves, on 𝓜 they are annihilators, so inclusion of
/// stored bases is the lattice order on either side and all chain/frame code
/// is shared.
enum class Side { L, M };

inline int lattice_rank(const Subspace& s) { return s.dim(); }

inline int primal_dim(Side side, const Subspace& s) {
  return side == Side::L ? s.dim() : s.ambient() - s.dim();
}

/// A point of K(𝓛) or K(𝓜): a strictly increasing chain of lattice elements
/// with positive rational coefficients summing to 1. Zero-coefficient support
/// elements are never stored.
class ChainPoint {
public:
  ChainPoint(Side side, std::vector<Subspace> support, std::vector<Rat> coeff);

  /// The point concentrated on the lattice minimum (stored basis empty on
  /// either side).
  static ChainPoint bottom(Side side, const GfpField& f, int n);
  static ChainPoint vertex(Side side, Subspace s);

  Side side() const { return side_; }
  int ambient() const { return n_; }
  const GfpField& field() const { return support_.front().field(); }
  int size() const { return static_cast<int>(support_.size()); }
  const std::vector<Subspace>& support() const { return support_; }
  const std::vector<Rat>& coeff() const { return coeff_; }

  bool operator==(const ChainPoint& o) const {
    return side_ == o.side_ && support_ == o.support_ && coeff_ == o.coeff_;
  }

private:
  Side side_;
  int n_;
  std::vector<Subspace> support_;
  std::vector<Rat> coeff_;
};

struct ProductPoint {
  ChainPoint x;  // on 𝓛
  ChainPoint y;  // on 𝓜
};

/// A maximal chain, elements of every rank 0..n in order.
struct MaximalChain {
  std::vector<Subspace> elems;
  int n() const { return static_cast<int>(elems.size()) - 1; }
};

/// Greedy completion of a chain to a maximal one: each gap is filled by
/// adjoining standard-basis vectors (lowest index first) that fit strictly
/// inside the gap, falling back to basis rows of the gap's upper end.
MaximalChain maximalize(const std::vector<Subspace>& chain, const GfpField& f, int n);

/// Chain coordinates u_j = Σ_{i>=j} λ_i of a point whose support lies in the
/// given maximal chain; u is weakly decreasing with entries in [0,1].
std::vector<Rat> chain_coordinates(const ChainPoint& z, const MaximalChain& chain);

/// Inverse within one simplex: u must be weakly decreasing; coefficients are
/// consecutive differences and zero-coefficient elements are pruned.
ChainPoint from_chain_coordinates(Side side, const MaximalChain& chain,
                                  const std::vector<Rat>& u);

/// Lovász extension value Σ λ_i f(p_i).
template <class F>
Rat lovasz_eval(const ChainPoint& z, F&& f) {
  Rat v = 0;
  for (int i = 0; i < z.size(); ++i) v += z.coeff()[i] * f(z.support()[i]);
  return v;
}

/// Σ λ_i · (primal dimension), the extension of the MVSP dim term.
Rat dim_bar(const ChainPoint& z);

/// Exact squared orthoscheme distance d(𝟎, z)²; frame independent.
Rat sq_distance_to_bottom(const ChainPoint& z);

/// A point of K(𝓛 × 𝓜): a chain in the product order with convex weights.
struct ZippedPoint {
  std::vector<std::pair<Subspace, Subspace>> support;  // increasing in both
  std::vector<Rat> coeff;
  int size() const { return static_cast<int>(support.size()); }
};

/// Greedy top-down merge of two chain points into one product chain point;
/// componentwise marginals of the result reproduce the inputs.
ZippedPoint zip(const ChainPoint& x, const ChainPoint& y);
std::pair<ChainPoint, ChainPoint> unzip(Side sx, Side sy, const ZippedPoint& z);

template <class F>
Rat lovasz_eval(const ZippedPoint& z, F&& f) {
  Rat v = 0;
  for (int i = 0; i < z.size(); ++i) v += z.coeff[i] * f(z.support[i]);
  return v;
}

}  // namespace ncrank
