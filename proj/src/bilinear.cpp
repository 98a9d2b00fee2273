#include "ncrank/bilinear.hpp"

namespace ncrank {

int restricted_rank(const GfpMatrix& ai, const Subspace& x, const Subspace& y_primal) {
  if (x.ambient() != ai.rows() || y_primal.ambient() != ai.cols())
    throw std::invalid_argument("restricted_rank: dimension mismatch");
  return rank(x.basis() * ai * y_primal.basis().transpose());
}

CoSubspace orth_right(const GfpMatrix& ai, const Subspace& x) {
  return CoSubspace::from_annihilator(Subspace::from_rows(x.basis() * ai));
}

Subspace orth_left(const GfpMatrix& ai, const CoSubspace& y) {
  // x^T A_i B_Y^T = 0  <=>  (B_Y A_i^T) x = 0
  return kernel_space(y.primal().basis() * ai.transpose());
}

Subspace left_kernel_u0(const GfpMatrix& ai) { return left_kernel_space(ai); }

CoSubspace right_kernel_v0(const GfpMatrix& ai) {
  return CoSubspace::from_annihilator(Subspace::from_rows(ai));
}

bool check_rank_formula(const GfpMatrix& ai, const Subspace& x, const Subspace& y_primal) {
  int r = restricted_rank(ai, x, y_primal);
  Subspace xbot = orth_right(ai, x).primal();
  Subspace ybot = orth_left(ai, CoSubspace::from_primal(y_primal));
  int via_y = y_primal.dim() - meet(y_primal, xbot).dim();
  int via_x = x.dim() - meet(x, ybot).dim();
  return r == via_y && r == via_x;
}

bool is_feasible(const VanishingPair& pr, const SymbolicGfp& a) {
  Subspace yp = pr.y.primal();
  for (const auto& ai : a.mats)
    if (restricted_rank(ai, pr.x, yp) != 0) return false;
  return true;
}

}  // namespace ncrank
