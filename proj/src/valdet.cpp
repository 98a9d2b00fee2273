#include "ncrank/valdet.hpp"

namespace ncrank {

namespace {

// smallest t >= 0 with p^t >= x
Int ceil_log(const Int& x, std::int64_t p) {
  Int t = 0, pw = 1;
  while (pw < x) {
    pw *= p;
    ++t;
  }
  return t;
}

Int max_abs_entry(const SymbolicInt& a) {
  Int d = 0;
  for (const auto& ai : a.mats)
    for (int i = 0; i < ai.rows(); ++i)
      for (int j = 0; j < ai.cols(); ++j) d = std::max(d, Int(abs(ai.at(i, j))));
  return d;
}

}  // namespace

Int valdet_stop_bound(const SymbolicInt& a, std::int64_t p) {
  Int d = std::max(Int(1), max_abs_entry(a));
  Int n = a.n;
  // n·(1.5·log_p n + log_p D) <= ceil(n·(3·clog(n) + 2·clog(D))/2)
  Int raw = n * (3 * ceil_log(n, p) + 2 * ceil_log(d, p));
  return (raw + 1) / 2 + 1;
}

ValDetState::ValDetState(SymbolicInt a_, std::int64_t p_)
    : a(std::move(a_)), p(p_), bound(valdet_stop_bound(a, p_)) {
  if (!is_prime(p_)) throw std::invalid_argument("ValDetState: p is not prime");
}

SymbolicGfp leading_matrix(const SymbolicInt& a, std::int64_t p) {
  GfpField f(p);
  std::vector<GfpMatrix> mats;
  mats.reserve(a.mats.size());
  for (const auto& ai : a.mats) {
    GfpMatrix m(f, a.n, a.n);
    for (int i = 0; i < a.n; ++i)
      for (int j = 0; j < a.n; ++j) m.at(i, j) = f.from_bigint(ai.at(i, j));
    mats.push_back(std::move(m));
  }
  return SymbolicGfp(a.n, std::move(mats));
}

void valdet_step(ValDetState& st, const GfpMatrix& s_mat, const GfpMatrix& t_mat,
                 int r, int s) {
  const int n = st.a.n;
  IntRing zr;
  auto lift = [&](const GfpMatrix& m) {
    Matrix<IntRing> out(zr, m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Int(m.at(i, j));
    return out;
  };
  Matrix<IntRing> sz = lift(s_mat), tz = lift(t_mat);
  for (auto& ai : st.a.mats) {
    Matrix<IntRing> m = sz * ai * tz;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i < r && j < s) {
          if (m.at(i, j) % st.p != 0)
            throw std::logic_error("valdet_step: zero block not divisible by p "
                                   "(invalid zero-block certificate)");
          m.at(i, j) /= st.p;
        } else if (i >= r && j >= s) {
          m.at(i, j) *= st.p;
        }
      }
    ai = std::move(m);
  }
  st.objective += r + s - n;
  ++st.iterations;
}

ValDetResult valdet_run(SymbolicInt a, std::int64_t p, const GfpSolver& solver) {
  ValDetState st(std::move(a), p);
  std::vector<ValDetStep> transcript;
  while (true) {
    SymbolicGfp lead = leading_matrix(st.a, p);
    GfpSolveResult res = solver(lead);
    if (!res.certified)
      return ValDetResult{NcVerdict::Inconclusive, 0, st.bound, std::move(transcript),
                          std::move(st.a), std::nullopt};
    if (res.nc_rank == st.a.n)
      return ValDetResult{NcVerdict::Regular, st.objective, st.bound,
                          std::move(transcript), std::move(st.a), res.witness};
    FrCertificate cert = mvsp_to_fr(*res.best, lead);
    if (st.objective + (cert.r + cert.s - st.a.n) > st.bound)
      return ValDetResult{NcVerdict::Singular, 0, st.bound, std::move(transcript),
                          std::move(st.a), std::nullopt};
    valdet_step(st, cert.s_mat, cert.t_mat, cert.r, cert.s);
    transcript.push_back(ValDetStep{cert.r, cert.s, st.objective});
  }
}

GfpSolver sppa_gfp_solver(const std::function<SolverConfig(int)>& config_for_n) {
  return [config_for_n](const SymbolicGfp& a) {
    SolverState st = sppa_run(a, config_for_n(a.n));
    return GfpSolveResult{st.certified, st.best ? st.best->value : -1, st.best,
                          st.lb_witness};
  };
}

}  // namespace ncrank
