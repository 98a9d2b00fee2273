#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncrank/oracle.hpp"
#include "test_util.hpp"

using namespace ncrank;
using namespace ncrank::testutil;

namespace {

GfpMatrix mat(const GfpField& f, std::vector<std::vector<std::int64_t>> rows) {
  GfpMatrix m(f, static_cast<int>(rows.size()),
              static_cast<int>(rows.empty() ? 0 : rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = f.from_int(rows[i][j]);
  return m;
}

SymbolicGfp skew3(const GfpField& f) {
  return SymbolicGfp(3, {mat(f, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
                         mat(f, {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}),
                         mat(f, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}})});
}

}  // namespace

TEST_CASE("catalog counts match Gaussian binomials") {
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(2, 1, 3) == 4);

  GfpField f2(2), f3(3);
  auto c22 = enumerate_subspaces(f2, 2);
  CHECK(c22.total() == 5);
  auto c23 = enumerate_subspaces(f2, 3);
  CHECK(c23.total() == 16);
  auto c32 = enumerate_subspaces(f3, 2);
  CHECK(c32.total() == 6);
  for (int r = 0; r <= 3; ++r)
    CHECK(Int(c23.by_dim[r].size()) == gaussian_binomial(3, r, 2));
  // canonical and deduplicated
  for (const auto& grp : c23.by_dim)
    for (std::size_t i = 0; i + 1 < grp.size(); ++i) CHECK(grp[i] < grp[i + 1]);
}

TEST_CASE("catalog guard") {
  GfpField f101(101);
  CHECK_THROWS_AS(enumerate_subspaces(f101, 4), std::invalid_argument);
  CHECK_NOTHROW(enumerate_subspaces(f101, 3));
}

TEST_CASE("brute force examples") {
  GfpField f2(2);
  SymbolicGfp zero2(2, {GfpMatrix(f2, 2, 2)});
  auto r0 = brute_force_mvsp(zero2);
  CHECK(r0.nc_rank == 0);
  CHECK(r0.best.x == Subspace::full(f2, 2));
  CHECK(r0.best.y.primal() == Subspace::full(f2, 2));

  SymbolicGfp ident(2, {GfpMatrix::identity(f2, 2)});
  CHECK(brute_force_mvsp(ident).nc_rank == 2);

  CHECK(brute_force_mvsp(skew3(f2)).nc_rank == 3);
}

TEST_CASE("optimal set closed under lattice combinations") {
  std::mt19937_64 rng(61);
  GfpField f2(2);
  for (int t = 0; t < 60; ++t) {
    SymbolicGfp a = random_symbolic(f2, 3, 1 + static_cast<int>(rng() % 2), rng);
    auto bf = brute_force_mvsp(a);
    auto cat = enumerate_subspaces(f2, 3);
    std::vector<VanishingPair> opt;
    for (const auto& xs : cat.by_dim)
      for (const auto& x : xs)
        for (const auto& ys : cat.by_dim)
          for (const auto& y : ys) {
            VanishingPair pr(x, CoSubspace::from_primal(y));
            if (pr.value == bf.nc_rank && is_feasible(pr, a)) opt.push_back(pr);
          }
    auto is_opt = [&](const VanishingPair& pr) {
      return pr.value == bf.nc_rank && is_feasible(pr, a);
    };
    for (std::size_t i = 0; i < opt.size(); ++i)
      for (std::size_t j = 0; j < opt.size(); ++j) {
        VanishingPair meet_pair(meet(opt[i].x, opt[j].x),
                                CoSubspace::from_primal(
                                    join(opt[i].y.primal(), opt[j].y.primal())));
        VanishingPair join_pair(join(opt[i].x, opt[j].x),
                                CoSubspace::from_primal(
                                    meet(opt[i].y.primal(), opt[j].y.primal())));
        CHECK(is_opt(meet_pair));
        CHECK(is_opt(join_pair));
      }
  }
}

TEST_CASE("blow-up bounds") {
  GfpField f2(2);
  SymbolicGfp ident(3, {GfpMatrix::identity(f2, 3)});
  auto w = blowup_rank_bound(ident, 1, 8, 0);
  CHECK(w.achieved_rank == 3);
  CHECK(w.bound == 3);

  SymbolicGfp zero(2, {GfpMatrix(f2, 2, 2)});
  CHECK(blowup_rank_bound(zero, 1, 4, 0).bound == 0);

  auto sk = skew3(f2);
  auto w1 = blowup_rank_bound(sk, 1, 16, 1);
  CHECK(w1.achieved_rank == 2);  // generic skew 3×3 has commutative rank 2
  auto w2 = blowup_rank_bound(sk, 2, 16, 1);
  CHECK(w2.achieved_rank == 6);
  CHECK(w2.bound == 3);
  // reproducible with the seed
  auto w2b = blowup_rank_bound(sk, 2, 16, 1);
  CHECK(w2b.achieved_rank == w2.achieved_rank);
  CHECK(w2b.substitution == w2.substitution);
  // thread count does not change the result
  auto w2c = blowup_rank_bound(sk, 2, 16, 1, 4);
  CHECK(w2c.achieved_rank == w2.achieved_rank);
  CHECK(w2c.substitution == w2.substitution);
}

TEST_CASE("blow-up bound below brute force, tight for some d <= n-1") {
  std::mt19937_64 rng(62);
  for (std::int64_t p : {2, 3}) {
    GfpField f(p);
    for (int t = 0; t < 40; ++t) {
      int n = 2 + static_cast<int>(rng() % 2);
      SymbolicGfp a = random_symbolic(f, n, 1 + static_cast<int>(rng() % 3), rng);
      int truth = brute_force_mvsp(a).nc_rank;
      int best = 0;
      for (int d = 1; d <= std::max(1, n - 1); ++d) {
        auto w = blowup_rank_bound(a, d, 24, t);
        CHECK(w.bound <= truth);
        best = std::max(best, w.bound);
        // regularity sanity: at a tight blow-up size the achieved rank is
        // divisible by d (observed, with enough trials to hit generic rank)
        if (w.bound == truth) CHECK(w.achieved_rank % d == 0);
      }
      CHECK(best == truth);
    }
  }
}

TEST_CASE("singularity witness") {
  GfpField f2(2);
  // zero first column: Y = span{e1} annihilates everything
  SymbolicGfp a(3, {mat(f2, {{0, 1, 0}, {0, 0, 1}, {0, 1, 1}})});
  auto w = singularity_witness(a);
  REQUIRE(w.has_value());
  CHECK(w->x.dim() + w->y.primal_dim() > 3);
  CHECK(is_feasible(*w, a));

  SymbolicGfp ident(3, {GfpMatrix::identity(f2, 3)});
  CHECK(!singularity_witness(ident).has_value());
}
