#pragma once

#include <functional>

#include "ncrank/sppa.hpp"

namespace ncrank {

enum class NcVerdict { Regular, Singular, Inconclusive };

/// Outcome of one GF(p) nc-rank solve used inside the descent. The witness is
/// the blow-up substitution certifying the lower bound (regularity evidence
/// when nc_rank = n).
struct GfpSolveResult {
  bool certified;
  int nc_rank;
  std::optional<VanishingPair> best;
  std::optional<RankWitness> witness;
};

using GfpSolver = std::function<GfpSolveResult(const SymbolicGfp&)>;

/// Descent state in the transformed-A form: the integer matrices after the
/// accumulated (P,Q) transformations, with the MVMP objective tracked
/// incrementally. Entries stay integral after every step.
struct ValDetState {
  SymbolicInt a;
  std::int64_t p;
  Int objective = 0;
  Int bound;
  int iterations = 0;

  ValDetState(SymbolicInt a_, std::int64_t p_);
};

struct ValDetStep {
  int r;
  int s;
  Int objective_after;
};

struct ValDetResult {
  NcVerdict verdict;
  Int vp_det;  // v_p Det′ A when regular, else meaningless
  Int bound;
  std::vector<ValDetStep> transcript;
  SymbolicInt final_a;
  // regular case: evidence that the final leading matrix is nc-regular
  std::optional<RankWitness> regularity_witness;
};

/// Entrywise order-0 p-adic digits, i.e. entries mod p, regarded over GF(p).
SymbolicGfp leading_matrix(const SymbolicInt& a, std::int64_t p);

/// Explicit stopping bound from the Hadamard estimate |a_z| <= n^{3nd/2} D^{nd}
/// with v_p(z) <= log_p|z|, rounded up in integer arithmetic.
Int valdet_stop_bound(const SymbolicInt& a, std::int64_t p);

/// One descent step: A_i <- diag(p^{-1} on rows < r) · S·A_i·T · diag(p on
/// cols >= s); requires the r×s block of each S·A_i·T divisible by p, which an
/// Fortin–Reutenauer certificate of the leading matrix guarantees.
void valdet_step(ValDetState& st, const GfpMatrix& s_mat, const GfpMatrix& t_mat,
                 int r, int s);

/// The Val-Det loop: leading matrix -> GF(p) solve -> regular verdict, or an
/// zero-block step; singular once the objective would exceed the stopping bound. An
/// uncertified inner solve yields Inconclusive rather than a guess.
ValDetResult valdet_run(SymbolicInt a, std::int64_t p, const GfpSolver& solver);

/// The default inner solver: a certified SPPA run configured per dimension.
GfpSolver sppa_gfp_solver(const std::function<SolverConfig(int)>& config_for_n);

}  // namespace ncrank
