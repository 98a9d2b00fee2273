#include "ncrank/oracle.hpp"

#include <random>
#include <stdexcept>
#include <thread>

namespace ncrank {

Int gaussian_binomial(int n, int r, std::int64_t p) {
  if (r < 0 || r > n) return 0;
  Int num = 1, den = 1;
  for (int i = 0; i < r; ++i) {
    Int pn = 1, pd = 1;
    for (int t = 0; t < n - i; ++t) pn *= p;
    for (int t = 0; t < i + 1; ++t) pd *= p;
    num *= pn - 1;
    den *= pd - 1;
  }
  return num / den;
}

Int count_subspaces(std::int64_t p, int n) {
  Int total = 0;
  for (int r = 0; r <= n; ++r) total += gaussian_binomial(n, r, p);
  return total;
}

SubspaceCatalog enumerate_subspaces(const GfpField& f, int n) {
  if (count_subspaces(f.modulus(), n) > 100000)
    throw std::invalid_argument(
        "enumerate_subspaces: catalog guard exceeded; use the blow-up oracle");
  SubspaceCatalog cat{f, n, std::vector<std::vector<Subspace>>(n + 1)};
  const std::int64_t p = f.modulus();
  for (int r = 0; r <= n; ++r) {
    // iterate pivot column sets as sorted combinations
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
      // free entries: (i, j) with j > piv[i] and j not a pivot
      std::vector<std::pair<int, int>> free_pos;
      std::vector<bool> is_piv(n, false);
      for (int c : piv) is_piv[c] = true;
      for (int i = 0; i < r; ++i)
        for (int j = piv[i] + 1; j < n; ++j)
          if (!is_piv[j]) free_pos.emplace_back(i, j);
      std::vector<std::int64_t> vals(free_pos.size(), 0);
      while (true) {
        GfpMatrix m(f, r, n);
        for (int i = 0; i < r; ++i) m.at(i, piv[i]) = f.one();
        for (std::size_t t = 0; t < free_pos.size(); ++t)
          m.at(free_pos[t].first, free_pos[t].second) = vals[t];
        cat.by_dim[r].push_back(Subspace::from_rows(m));
        // odometer
        std::size_t t = 0;
        for (; t < vals.size(); ++t) {
          if (++vals[t] < p) break;
          vals[t] = 0;
        }
        if (t == vals.size()) break;
      }
      if (r == 0) break;
      // next combination
      int i = r - 1;
      while (i >= 0 && piv[i] == n - r + i) --i;
      if (i < 0) break;
      ++piv[i];
      for (int j = i + 1; j < r; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(cat.by_dim[r].begin(), cat.by_dim[r].end());
  }
  return cat;
}

BruteForceResult brute_force_mvsp(const SymbolicGfp& a) {
  SubspaceCatalog cat = enumerate_subspaces(a.mats.front().ring(), a.n);
  std::optional<VanishingPair> best;
  for (const auto& xs : cat.by_dim)
    for (const auto& x : xs)
      for (const auto& ys : cat.by_dim)
        for (const auto& y : ys) {
          bool ok = true;
          for (const auto& ai : a.mats)
            if (restricted_rank(ai, x, y) != 0) {
              ok = false;
              break;
            }
          if (!ok) continue;
          VanishingPair pr(x, CoSubspace::from_primal(y));
          if (!best || pr.value < best->value ||
              (pr.value == best->value &&
               (pr.x < best->x || (pr.x == best->x && pr.y < best->y))))
            best = std::move(pr);
        }
  return BruteForceResult{*best, best->value};
}

Rat brute_force_perturbed_optimum(const SymbolicGfp& a, const Int& penalty,
                                  const Rat& pert) {
  SubspaceCatalog cat = enumerate_subspaces(a.mats.front().ring(), a.n);
  std::optional<Rat> best;
  for (const auto& xs : cat.by_dim)
    for (const auto& x : xs)
      for (const auto& ys : cat.by_dim)
        for (const auto& y : ys) {
          Int rsum = 0;
          for (const auto& ai : a.mats) rsum += restricted_rank(ai, x, y);
          Rat v = Rat(-x.dim() - y.dim()) + Rat(penalty * rsum) +
                  pert * Rat(x.dim() + (a.n - y.dim()));
          if (!best || v < *best) best = v;
        }
  return *best;
}

namespace {

GfpeField::Elem uniform_elem(const GfpeField& fe, std::mt19937_64& rng) {
  Int size = fe.field_size();
  // size fits in 64 bits at the scales the oracle guards allow
  std::uint64_t s = static_cast<std::uint64_t>(size);
  return fe.from_index(Int(rng() % s));
}

int substitution_rank(const SymbolicGfp& a, int d, const GfpeField& fe,
                      const std::vector<std::vector<std::int64_t>>& vals) {
  const int n = a.n, nd = n * d;
  Matrix<GfpeField> m(fe, nd, nd);
  int idx = 0;
  for (const auto& ai : a.mats)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k, ++idx) {
        const auto& v = vals[idx];
        if (fe.is_zero(v)) continue;
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) {
            if (ai.at(r, c) == 0) continue;
            auto term = fe.mul(v, fe.from_base(ai.at(r, c)));
            m.at(r * d + j, c * d + k) = fe.add(m.at(r * d + j, c * d + k), term);
          }
      }
  return rank(m);
}

}  // namespace

RankWitness blowup_rank_bound(const SymbolicGfp& a, int d, int trials,
                              std::uint64_t seed, int threads) {
  if (d < 1) throw std::invalid_argument("blowup_rank_bound: d must be >= 1");
  const std::int64_t p = a.mats.front().ring().modulus();
  int e = 1;
  Int size = p;
  while (size <= 2 * a.n * d) {  // Schwartz–Zippel margin p^e > 2nd
    size *= p;
    ++e;
  }
  GfpeField fe(p, e, seed);
  // substitutions are drawn serially so results do not depend on thread count
  std::mt19937_64 rng(seed);
  const int vars = a.m() * d * d;
  std::vector<std::vector<std::vector<std::int64_t>>> subs(trials);
  for (int t = 0; t < trials; ++t) {
    subs[t].reserve(vars);
    for (int v = 0; v < vars; ++v) subs[t].push_back(uniform_elem(fe, rng));
  }
  std::vector<int> ranks(trials, 0);
  auto work = [&](int lo, int hi) {
    for (int t = lo; t < hi; ++t) ranks[t] = substitution_rank(a, d, fe, subs[t]);
  };
  if (threads <= 1 || trials <= 1) {
    work(0, trials);
  } else {
    int nw = std::min(threads, trials);
    std::vector<std::thread> pool;
    int chunk = (trials + nw - 1) / nw;
    for (int w = 0; w < nw; ++w)
      pool.emplace_back(work, w * chunk, std::min(trials, (w + 1) * chunk));
    for (auto& th : pool) th.join();
  }
  int best = 0;
  for (int t = 0; t < trials; ++t)
    if (ranks[t] > ranks[best]) best = t;
  int achieved = trials > 0 ? ranks[best] : 0;
  return RankWitness{d,
                     e,
                     trials > 0 ? subs[best] : std::vector<std::vector<std::int64_t>>{},
                     achieved,
                     (achieved + d - 1) / d,
                     trials,
                     seed};
}

RankWitness certified_lower_bound(const SymbolicGfp& a, int dmax, int trials,
                                  std::uint64_t seed, int threads) {
  std::optional<RankWitness> best;
  for (int d = 1; d <= std::max(1, dmax); ++d) {
    RankWitness w = blowup_rank_bound(a, d, trials, seed, threads);
    if (!best || w.bound > best->bound) best = std::move(w);
  }
  return *best;
}

std::optional<VanishingPair> singularity_witness(const SymbolicGfp& a) {
  SubspaceCatalog cat = enumerate_subspaces(a.mats.front().ring(), a.n);
  for (int dx = a.n; dx >= 0; --dx)
    for (const auto& x : cat.by_dim[dx]) {
      // the largest Y annihilating X is ∩_i ker(B_X A_i)
      Subspace w = Subspace::full(cat.field, a.n);
      for (const auto& ai : a.mats) {
        w = meet(w, kernel_space(x.basis() * ai));
        if (x.dim() + w.dim() <= a.n) break;
      }
      if (x.dim() + w.dim() > a.n)
        return VanishingPair(x, CoSubspace::from_primal(w));
    }
  return std::nullopt;
}

}  // namespace ncrank
