#pragma once

#include <cstdint>
#include <map>

#include "ncrank/bilinear.hpp"
#include "ncrank/chainpoint.hpp"

namespace ncrank {

/// A frame: n ordered atoms of 𝓛 (or 𝓜, as covector atoms) that join to 𝟏,
/// generating a maximal Boolean sublattice. Registered elements carry the
/// atom subset whose join reproduces them, as a bitmask over atom indices.
class Frame {
public:
  Frame(Side side, std::vector<Subspace> atoms);

  Side side() const { return side_; }
  int n() const { return n_; }
  const GfpField& field() const { return atoms_.front().field(); }
  const Subspace& atom(int i) const { return atoms_[i]; }
  /// Generator vector of atom i as a 1×n matrix.
  GfpMatrix atom_generator(int i) const { return atoms_[i].basis().row(0); }

  /// Atom subset of an element expressible in this frame; throws otherwise.
  std::uint64_t membership(const Subspace& s) const;
  /// Membership plus caching; chains register every element.
  std::uint64_t register_element(const Subspace& s);
  void register_chain(const std::vector<Subspace>& chain);

  /// Join of an atom subset, materialized canonically.
  Subspace element(std::uint64_t mask) const;

private:
  Side side_;
  int n_;
  std::vector<Subspace> atoms_;
  std::map<Subspace, std::uint64_t> registry_;
};

/// A common frame for two chains (maximalized internally), both registered.
Frame common_frame(Side side, const std::vector<Subspace>& c,
                   const std::vector<Subspace>& d, const GfpField& field, int n);

/// The canonical rank- and order-preserving retraction onto the frame with its
/// atom ordering: ∨{a_i : p ∧ (a_1∨…∨a_i) covers p ∧ (a_1∨…∨a_{i−1})}.
Subspace retraction(const Subspace& p, const Frame& frame);

/// A frame of 𝓛 × 𝓜 adapted to the bilinear form A_i: e-atoms beyond rank(A_i)
/// span the left kernel, f_i = e_i^⊥ for i < rank(A_i), and the first k f-atoms
/// join to the right kernel.
struct OrthogonalFrame {
  Frame e;  // 𝓛 side
  Frame f;  // 𝓜 side
  int k;    // rank of A_i
};

/// Builds an orthogonal frame whose e-frame contains 𝓧 ∪ 𝓨^⊥ and whose f-frame
/// contains 𝓧^⊥ ∪ 𝓨; all four chains are registered.
OrthogonalFrame orthogonal_frame(const GfpMatrix& ai, const MaximalChain& xchain,
                                 const MaximalChain& ychain);

}  // namespace ncrank
