#include "ncrank/sppa.hpp"

#include <stdexcept>

namespace ncrank {

SolverConfig SolverConfig::defaults(int n) {
  SolverConfig c;
  c.epsilon_sc = Rat(1, 2 * n);
  c.perturbation = Rat(1, 8 * n);
  c.penalty = 2 * n + 1;
  c.max_cycles = 4000;
  c.certify_dmax = std::max(1, n - 1);
  return c;
}

void SolverConfig::validate(int n) const {
  if (epsilon_sc <= 0 || perturbation <= 0)
    throw std::invalid_argument("SolverConfig: parameters must be positive");
  if (penalty < 2 * n + 1)
    throw std::invalid_argument("SolverConfig: penalty must be >= 2n+1");
  if (max_cycles < 1 || trials < 1 || certify_dmax < 1 || threads < 1)
    throw std::invalid_argument("SolverConfig: counts must be >= 1");
}

ChainPoint resolvent_dim(const ChainPoint& z, const Rat& lambda, const Rat& eps_pert) {
  MaximalChain chain = maximalize(z.support(), z.field(), z.ambient());
  std::vector<Rat> u = chain_coordinates(z, chain);
  Rat denom = 1 + 2 * eps_pert * lambda;
  for (auto& ui : u) {
    Rat shifted = z.side() == Side::L ? Rat(ui + lambda) : Rat(ui - lambda);
    ui = clamp01(shifted / denom);
  }
  return from_chain_coordinates(z.side(), chain, u);
}

std::pair<Rat, Rat> solve_penalty_coordinate(const Rat& x0, const Rat& y0,
                                        const Rat& lambda_eff) {
  if (lambda_eff <= 0) throw std::invalid_argument("solve_penalty_coordinate: λ' <= 0");
  // explicit Rat return: a deduced return type would hand back an expression
  // template referencing dead locals
  auto objective = [&](const Rat& x, const Rat& y) -> Rat {
    Rat pen = x > y ? Rat(x - y) : Rat(0);
    Rat dx = x - x0, dy = y - y0;
    return pen + (dx * dx + dy * dy) / (2 * lambda_eff);
  };
  std::vector<std::pair<Rat, Rat>> cands;
  Rat cx = clamp01(x0), cy = clamp01(y0);
  if (cx <= cy) cands.emplace_back(cx, cy);  // inactive regime
  Rat ax = clamp01(x0 - lambda_eff), ay = clamp01(y0 + lambda_eff);
  if (ax >= ay) cands.emplace_back(ax, ay);  // active-linear regime
  Rat ridge = clamp01((x0 + y0) / 2);
  cands.emplace_back(ridge, ridge);
  cands.emplace_back(Rat(0), clamp01(y0));
  cands.emplace_back(Rat(1), clamp01(y0 + lambda_eff));
  cands.emplace_back(clamp01(x0 - lambda_eff), Rat(0));
  cands.emplace_back(clamp01(x0), Rat(1));

  std::pair<Rat, Rat> best = cands.front();
  Rat best_val = objective(best.first, best.second);
  for (std::size_t i = 1; i < cands.size(); ++i) {
    Rat v = objective(cands[i].first, cands[i].second);
    if (v < best_val || (v == best_val && cands[i] < best)) {
      best = cands[i];
      best_val = v;
    }
  }
  return best;
}

ProductPoint resolvent_penalty(const ProductPoint& z, const GfpMatrix& ai,
                               const Rat& lambda, const Int& penalty) {
  // resolvent scaling: J_λ of penalty·R̄ is J_{penalty·λ} of R̄
  Rat lambda_eff = Rat(penalty) * lambda;
  MaximalChain xchain = maximalize(z.x.support(), z.x.field(), z.x.ambient());
  MaximalChain ychain = maximalize(z.y.support(), z.y.field(), z.y.ambient());
  OrthogonalFrame of = orthogonal_frame(ai, xchain, ychain);
  FCoordinates cx = f_coordinates(z.x, of.e);
  FCoordinates cy = f_coordinates(z.y, of.f);
  for (int i = 0; i < of.k; ++i)
    std::tie(cx.v[i], cy.v[i]) = solve_penalty_coordinate(cx.v[i], cy.v[i], lambda_eff);
  return ProductPoint{recover(cx), recover(cy)};
}

std::vector<VanishingPair> extract_candidates(const ProductPoint& z,
                                              const SymbolicGfp& a) {
  std::vector<VanishingPair> out;
  for (const auto& x : z.x.support())
    for (const auto& yann : z.y.support()) {
      VanishingPair pr(x, CoSubspace::from_annihilator(yann));
      if (is_feasible(pr, a)) out.push_back(std::move(pr));
    }
  return out;
}

Rat g_value(const SymbolicGfp& a, const ProductPoint& z, const Int& penalty) {
  Rat v = -dim_bar(z.x) - dim_bar(z.y);
  ZippedPoint zp = zip(z.x, z.y);
  std::vector<Subspace> yprimal;
  yprimal.reserve(zp.size());
  for (const auto& [p, q] : zp.support)
    yprimal.push_back(CoSubspace::from_annihilator(q).primal());
  for (const auto& ai : a.mats) {
    Rat ri = 0;
    for (int i = 0; i < zp.size(); ++i)
      ri += zp.coeff[i] * restricted_rank(ai, zp.support[i].first, yprimal[i]);
    v += Rat(penalty) * ri;
  }
  return v;
}

Rat g_tilde_value(const SymbolicGfp& a, const ProductPoint& z, const Int& penalty,
                  const Rat& pert) {
  return g_value(a, z, penalty) +
         pert * (sq_distance_to_bottom(z.x) + sq_distance_to_bottom(z.y));
}

FrCertificate mvsp_to_fr(const VanishingPair& pair, const SymbolicGfp& a) {
  if (!is_feasible(pair, a))
    throw std::invalid_argument("mvsp_to_fr: pair is not feasible");
  const GfpField& F = a.mats.front().ring();
  const int n = a.n;
  auto complete = [&](const Subspace& base) {
    GfpMatrix rows = base.basis();
    Subspace span = base;
    for (int i = 0; i < n && span.dim() < n; ++i) {
      GfpMatrix v(F, 1, n);
      v.at(0, i) = F.one();
      if (span.contains_vector(v)) continue;
      rows = GfpMatrix::vstack(rows, v);
      span = join(span, Subspace::from_vector(v));
    }
    return rows;
  };
  GfpMatrix s_mat = complete(pair.x);
  GfpMatrix t_rows = complete(pair.y.primal());
  GfpMatrix t_mat = t_rows.transpose();
  int r = pair.x.dim(), s = pair.y.primal_dim();
  if (rank(s_mat) != n || rank(t_mat) != n)
    throw std::logic_error("mvsp_to_fr: completion is singular");
  for (const auto& ai : a.mats) {
    GfpMatrix prod = s_mat * ai * t_mat;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j)
        if (prod.at(i, j) != 0)
          throw std::logic_error("mvsp_to_fr: zero block verification failed");
  }
  return FrCertificate{std::move(s_mat), std::move(t_mat), r, s};
}

namespace {

int max_denominator_bits(const ProductPoint& z) {
  int bits = 0;
  for (const auto* cp : {&z.x, &z.y})
    for (const auto& c : cp->coeff()) bits = std::max(bits, bit_length(rat_den(c)));
  return bits;
}

void absorb_candidates(std::optional<VanishingPair>& best, const ProductPoint& z,
                       const SymbolicGfp& a) {
  for (auto& pr : extract_candidates(z, a))
    if (!best || pr.value < best->value) best = std::move(pr);
}

}  // namespace

SolverState sppa_run(const SymbolicGfp& a, const SolverConfig& cfg) {
  const int n = a.n;
  cfg.validate(n);
  const GfpField& F = a.mats.front().ring();

  SolverState st{ProductPoint{ChainPoint::bottom(Side::L, F, n),
                              ChainPoint::bottom(Side::M, F, n)},
                 0,
                 std::nullopt,
                 0,
                 RankWitness{},
                 false,
                 {}};
  st.lb_witness =
      certified_lower_bound(a, cfg.certify_dmax, cfg.trials, cfg.seed, cfg.threads);
  st.lower_bound = st.lb_witness.bound;

  absorb_candidates(st.best, st.z, a);
  auto record = [&](int cycle) {
    st.trace.push_back(CycleStats{cycle,
                                  g_tilde_value(a, st.z, cfg.penalty, cfg.perturbation),
                                  st.best ? st.best->value : 2 * n,
                                  max_denominator_bits(st.z)});
  };
  auto stop_certified = [&]() {
    if (!st.best || st.best->value != st.lower_bound) return false;
    // keep iterating until the perturbed objective is within 1/2 of the
    // optimum; g* = best.value − 2n bounds the perturbed optimum from below
    return st.trace.back().g_tilde - Rat(st.best->value - 2 * n) < Rat(1, 2);
  };

  record(0);
  if (stop_certified()) {
    st.certified = true;
    return st;
  }
  for (int k = 0; k < cfg.max_cycles; ++k) {
    Rat lambda = 1 / (cfg.epsilon_sc * (k + 1));
    for (const auto& ai : a.mats)
      st.z = resolvent_penalty(st.z, ai, lambda, cfg.penalty);
    st.z.x = resolvent_dim(st.z.x, lambda, cfg.perturbation);
    st.z.y = resolvent_dim(st.z.y, lambda, cfg.perturbation);
    st.cycles = k + 1;
    absorb_candidates(st.best, st.z, a);
    record(k + 1);
    if (stop_certified()) {
      st.certified = true;
      break;
    }
  }
  return st;
}

}  // namespace ncrank
