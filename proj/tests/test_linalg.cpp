#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

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

}  // namespace

TEST_CASE("rref basics") {
  GfpField f2(2);
  auto id = GfpMatrix::identity(f2, 2);
  auto rr = rref(id);
  CHECK(rr.mat == id);
  CHECK(rr.rank == 2);

  auto ones = mat(f2, {{1, 1}, {1, 1}});
  auto rr2 = rref(ones);
  CHECK(rr2.rank == 1);
  CHECK(rr2.mat == mat(f2, {{1, 1}, {0, 0}}));

  // third row is the sum of the first two over GF(2)
  auto circ = mat(f2, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(rank(circ) == 2);
}

TEST_CASE("rref idempotent, rank of transpose") {
  GfpField f3(3);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    auto m = random_matrix(f3, 1 + static_cast<int>(rng() % 4),
                           1 + static_cast<int>(rng() % 4), rng);
    auto rr = rref(m);
    CHECK(rref(rr.mat).mat == rr.mat);
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("kernel bases") {
  GfpField f2(2);
  CHECK(kernel_space(GfpMatrix::identity(f2, 3)) == Subspace::zero(f2, 3));
  CHECK(kernel_space(GfpMatrix(f2, 3, 3)) == Subspace::full(f2, 3));
  auto k = kernel_space(mat(f2, {{1, 1}}));
  CHECK(k.dim() == 1);
  CHECK(k.contains_vector(mat(f2, {{1, 1}})));
}

TEST_CASE("meet and join examples") {
  GfpField f2(2);
  Subspace e1 = Subspace::from_rows(mat(f2, {{1, 0, 0}}));
  Subspace e2 = Subspace::from_rows(mat(f2, {{0, 1, 0}}));
  CHECK(meet(e1, e2) == Subspace::zero(f2, 3));
  CHECK(join(e1, e2) == Subspace::from_rows(mat(f2, {{1, 0, 0}, {0, 1, 0}})));
  CHECK(meet(e1, e1) == e1);
  CHECK(join(e1, e1) == e1);
  Subspace v = Subspace::from_rows(mat(f2, {{1, 1, 0}}));
  Subspace w = Subspace::from_rows(mat(f2, {{1, 1, 0}, {0, 0, 1}}));
  CHECK(meet(v, w) == v);
  CHECK(join(v, w) == w);
  CHECK_THROWS_AS(meet(e1, Subspace::zero(f2, 2)), std::invalid_argument);
}

TEST_CASE("dim") {
  GfpField f3(3);
  CHECK(Subspace::full(f3, 4).dim() == 4);
  CHECK(Subspace::zero(f3, 4).dim() == 0);
  CHECK(Subspace::from_rows(mat(f3, {{1, 0, 0, 0}, {0, 1, 0, 0}})).dim() == 2);
}

TEST_CASE("modular identity on random pairs") {
  std::mt19937_64 rng(22);
  for (std::int64_t p : {2, 3}) {
    GfpField f(p);
    for (int t = 0; t < 300; ++t) {
      Subspace x = random_subspace(f, 4, rng), y = random_subspace(f, 4, rng);
      CHECK(x.dim() + y.dim() == meet(x, y).dim() + join(x, y).dim());
    }
  }
}

TEST_CASE("canonical form is basis independent") {
  GfpField f3(3);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    Subspace x = random_subspace(f3, 4, rng);
    // re-generate from scaled and shuffled combinations of the basis rows
    GfpMatrix g(f3, 2 * x.dim(), 4);
    for (int i = 0; i < x.dim(); ++i) {
      std::int64_t c = 1 + static_cast<std::int64_t>(rng() % 2);
      int other = static_cast<int>(rng() % x.dim());
      for (int j = 0; j < 4; ++j) {
        g.at(2 * i, j) = f3.mul(c, x.basis().at(i, j));
        g.at(2 * i + 1, j) = f3.add(x.basis().at(i, j), x.basis().at(other, j));
      }
    }
    if (x.dim() == 0) continue;
    CHECK(Subspace::from_rows(g) == x);
  }
}

TEST_CASE("CoSubspace duality") {
  std::mt19937_64 rng(24);
  GfpField f2(2);
  for (int t = 0; t < 200; ++t) {
    Subspace y = random_subspace(f2, 4, rng);
    CoSubspace co = CoSubspace::from_primal(y);
    CHECK(co.primal() == y);
    CHECK(co.rank() == 4 - y.dim());
    Subspace y2 = random_subspace(f2, 4, rng);
    if (y.contains(y2)) {
      // inclusion reverses on annihilators
      CHECK(CoSubspace::from_primal(y2).ann().contains(co.ann()));
    }
  }
  CHECK(CoSubspace::bottom(f2, 3).primal() == Subspace::full(f2, 3));
  CHECK(CoSubspace::top(f2, 3).primal() == Subspace::zero(f2, 3));
}
