#pragma once

#include <optional>

#include "ncrank/oracle.hpp"
#include "ncrank/orthoscheme.hpp"

namespace ncrank {

struct SolverConfig {
  Rat epsilon_sc;    // strong-convexity parameter of the step schedule
  Rat perturbation;  // coefficient of d(𝟎,·)² per side
  Int penalty;       // must be >= 2n+1
  int max_cycles = 4000;
  int certify_dmax = 1;
  int trials = 24;
  int threads = 1;
  std::uint64_t seed = 0;

  static SolverConfig defaults(int n);
  void validate(int n) const;
};

struct CycleStats {
  int cycle;  // 0 = initial point
  Rat g_tilde;
  int best_value;
  int max_denom_bits;
};

struct SolverState {
  ProductPoint z;
  int cycles = 0;
  std::optional<VanishingPair> best;
  int lower_bound = 0;
  RankWitness lb_witness;
  bool certified = false;
  std::vector<CycleStats> trace;
};

/// Resolvent of the dimension term −dim̄ + ε·d(𝟎,·)² at step λ. The support is
/// extended to a maximal chain and each chain coordinate moves to
/// clamp01((u + λ)/(1 + 2ελ)) on 𝓛, clamp01((u − λ)/(1 + 2ελ)) on 𝓜 (where
/// dim̄(y) = n − Σ y_i flips the sign). Output stays in the input's simplex.
ChainPoint resolvent_dim(const ChainPoint& z, const Rat& lambda, const Rat& eps_pert);

/// Resolvent of penalty·R̄_i at step λ, via the orthogonal frame of the two
/// maximalized support chains and the coordinatewise penalty prox with effective
/// step λ′ = penalty·λ.
ProductPoint resolvent_penalty(const ProductPoint& z, const GfpMatrix& ai,
                               const Rat& lambda, const Int& penalty);

/// Exact minimizer of max{0, x−y} + ((x−x⁰)² + (y−y⁰)²)/(2λ′) over [0,1]²,
/// picked from the finite candidate set (inactive, active-linear, ridge, and
/// the four edge minimizers); ties break toward the lexicographically smaller
/// point.
std::pair<Rat, Rat> solve_penalty_coordinate(const Rat& x0, const Rat& y0,
                                        const Rat& lambda_eff);

/// All feasible pairs in support(x) × support(y).
std::vector<VanishingPair> extract_candidates(const ProductPoint& z,
                                              const SymbolicGfp& a);

/// Lovász-extension value of the penalized objective g at z (zip-evaluated),
/// and of its perturbed variant g̃.
Rat g_value(const SymbolicGfp& a, const ProductPoint& z, const Int& penalty);
Rat g_tilde_value(const SymbolicGfp& a, const ProductPoint& z, const Int& penalty,
                  const Rat& pert);

/// Transformation certificate in the Fortin–Reutenauer form: S·A_i·T has an
/// r×s zero block in the upper-left corner for every i.
struct FrCertificate {
  GfpMatrix s_mat;
  GfpMatrix t_mat;
  int r;
  int s;
};

FrCertificate mvsp_to_fr(const VanishingPair& pair, const SymbolicGfp& a);

/// The certified splitting proximal point loop: cycles of m penalty resolvents
/// and the two dimension resolvents with λ_k = 1/(ε_sc·(k+1)), candidate
/// extraction each cycle, and the sandwich + gap stopping rule.
SolverState sppa_run(const SymbolicGfp& a, const SolverConfig& cfg);

}  // namespace ncrank
