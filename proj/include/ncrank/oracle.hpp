#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncrank/bilinear.hpp"
#include "ncrank/gfpe.hpp"

namespace ncrank {

/// Every subspace of GF(p)^n, canonical and grouped by dimension; per-dimension
/// counts are the Gaussian binomial coefficients.
struct SubspaceCatalog {
  GfpField field;
  int n;
  std::vector<std::vector<Subspace>> by_dim;

  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& g : by_dim) t += g.size();
    return t;
  }
};

Int gaussian_binomial(int n, int r, std::int64_t p);
Int count_subspaces(std::int64_t p, int n);

/// Guarded exhaustive enumeration (at most 10^5 subspaces).
SubspaceCatalog enumerate_subspaces(const GfpField& f, int n);

struct BruteForceResult {
  VanishingPair best;
  int nc_rank;
};

/// Exhaustive scan of all (X, Y) pairs; ties broken by lexicographically
/// smallest canonical bases (X first, then Y).
BruteForceResult brute_force_mvsp(const SymbolicGfp& a);

/// Minimum over all vertex pairs of the perturbed objective
/// g̃ = −dim X − dim Y + penalty·ΣR_i + pert·(dim X + (n − dim Y)).
Rat brute_force_perturbed_optimum(const SymbolicGfp& a, const Int& penalty,
                                  const Rat& pert);

/// One random-substitution certificate: rank of A^{d} under an assignment of
/// GF(p^e) values, implying nc-rank >= ceil(rank/d).
struct RankWitness {
  int d;
  int e;
  std::vector<std::vector<std::int64_t>> substitution;  // m·d² values, best trial
  int achieved_rank;
  int bound;
  int trials;
  std::uint64_t seed;
};

/// Substitutes independent uniform GF(p^e) values (p^e > 2nd) into the m·d²
/// blow-up variables without materializing the summands; keeps the best trial.
RankWitness blowup_rank_bound(const SymbolicGfp& a, int d, int trials,
                              std::uint64_t seed, int threads = 1);

/// Best blow-up bound over d = 1..dmax.
RankWitness certified_lower_bound(const SymbolicGfp& a, int dmax, int trials,
                                  std::uint64_t seed, int threads = 1);

/// A feasible pair with dim X + dim Y > n if one exists (i.e. a witness that
/// A is nc-singular), found by scanning X and taking Y = ∩_i ker(B_X A_i).
std::optional<VanishingPair> singularity_witness(const SymbolicGfp& a);

}  // namespace ncrank
