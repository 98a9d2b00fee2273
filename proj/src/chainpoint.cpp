#include "ncrank/chainpoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncrank {

ChainPoint::ChainPoint(Side side, std::vector<Subspace> support, std::vector<Rat> coeff)
    : side_(side), support_(std::move(support)), coeff_(std::move(coeff)) {
  if (support_.empty() || support_.size() != coeff_.size())
    throw std::invalid_argument("ChainPoint: empty or mismatched support");
  n_ = support_.front().ambient();
  Rat total = 0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].ambient() != n_)
      throw std::invalid_argument("ChainPoint: ambient mismatch");
    if (coeff_[i] <= 0) throw std::invalid_argument("ChainPoint: nonpositive coefficient");
    total += coeff_[i];
    if (i > 0 && !(support_[i].dim() > support_[i - 1].dim() &&
                   support_[i].contains(support_[i - 1])))
      throw std::invalid_argument("ChainPoint: support is not a strict chain");
  }
  if (total != 1) throw std::invalid_argument("ChainPoint: coefficients must sum to 1");
}

ChainPoint ChainPoint::bottom(Side side, const GfpField& f, int n) {
  return ChainPoint(side, {Subspace::zero(f, n)}, {Rat(1)});
}

ChainPoint ChainPoint::vertex(Side side, Subspace s) {
  return ChainPoint(side, {std::move(s)}, {Rat(1)});
}

MaximalChain maximalize(const std::vector<Subspace>& chain, const GfpField& f, int n) {
  MaximalChain out;
  Subspace cur = Subspace::zero(f, n);
  out.elems.push_back(cur);
  auto fill_to = [&](const Subspace& target) {
    while (cur.dim() < target.dim()) {
      bool stepped = false;
      // standard basis vectors first, then the target's own basis rows
      for (int cand = 0; cand < n + target.dim() && !stepped; ++cand) {
        GfpMatrix v(f, 1, n);
        if (cand < n)
          v.at(0, cand) = f.one();
        else
          v = target.basis().row(cand - n);
        if (!target.contains_vector(v) || cur.contains_vector(v)) continue;
        cur = join(cur, Subspace::from_vector(v));
        stepped = true;
      }
      if (!stepped) throw std::logic_error("maximalize: no extension step found");
      out.elems.push_back(cur);
    }
  };
  for (const auto& s : chain) {
    if (s.ambient() != n) throw std::invalid_argument("maximalize: ambient mismatch");
    if (s.dim() == cur.dim()) {
      if (!(s == cur)) throw std::invalid_argument("maximalize: input not a chain");
      continue;
    }
    if (!s.contains(cur)) throw std::invalid_argument("maximalize: input not a chain");
    fill_to(s);
  }
  fill_to(Subspace::full(f, n));
  return out;
}

std::vector<Rat> chain_coordinates(const ChainPoint& z, const MaximalChain& chain) {
  int n = chain.n();
  std::vector<Rat> lambda(n + 1, Rat(0));
  for (int i = 0; i < z.size(); ++i) {
    int r = lattice_rank(z.support()[i]);
    if (!(chain.elems[r] == z.support()[i]))
      throw std::invalid_argument("chain_coordinates: support not in chain");
    lambda[r] = z.coeff()[i];
  }
  std::vector<Rat> u(n);
  Rat suffix = 0;
  for (int j = n; j >= 1; --j) {
    suffix += lambda[j];
    u[j - 1] = suffix;
  }
  return u;
}

ChainPoint from_chain_coordinates(Side side, const MaximalChain& chain,
                                  const std::vector<Rat>& u) {
  int n = chain.n();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("from_chain_coordinates: size mismatch");
  for (int j = 0; j + 1 < n; ++j)
    if (u[j] < u[j + 1])
      throw std::invalid_argument("from_chain_coordinates: coordinates not sorted");
  std::vector<Subspace> support;
  std::vector<Rat> coeff;
  Rat top = n > 0 ? u[0] : Rat(0);
  if (1 - top > 0) {
    support.push_back(chain.elems[0]);
    coeff.push_back(1 - top);
  }
  for (int j = 1; j <= n; ++j) {
    Rat next = j < n ? u[j] : Rat(0);
    Rat lam = u[j - 1] - next;
    if (lam > 0) {
      support.push_back(chain.elems[j]);
      coeff.push_back(lam);
    }
  }
  if (support.empty()) {  // all coordinates zero
    support.push_back(chain.elems[0]);
    coeff.push_back(Rat(1));
  }
  return ChainPoint(side, std::move(support), std::move(coeff));
}

Rat dim_bar(const ChainPoint& z) {
  Rat v = 0;
  for (int i = 0; i < z.size(); ++i)
    v += z.coeff()[i] * primal_dim(z.side(), z.support()[i]);
  return v;
}

Rat sq_distance_to_bottom(const ChainPoint& z) {
  Rat total = 0, suffix = 0;
  for (int i = z.size() - 1; i >= 0; --i) {
    suffix += z.coeff()[i];
    int below = i > 0 ? lattice_rank(z.support()[i - 1]) : 0;
    total += (lattice_rank(z.support()[i]) - below) * suffix * suffix;
  }
  return total;
}

ZippedPoint zip(const ChainPoint& x, const ChainPoint& y) {
  ZippedPoint z;
  int i = x.size() - 1, j = y.size() - 1;
  Rat rx = x.coeff()[i], ry = y.coeff()[j];
  while (i >= 0 && j >= 0) {
    Rat w = rx < ry ? rx : ry;
    z.support.emplace_back(x.support()[i], y.support()[j]);
    z.coeff.push_back(w);
    rx -= w;
    ry -= w;
    if (rx == 0) {
      --i;
      if (i >= 0) rx = x.coeff()[i];
    }
    if (ry == 0) {
      --j;
      if (j >= 0) ry = y.coeff()[j];
    }
  }
  std::reverse(z.support.begin(), z.support.end());
  std::reverse(z.coeff.begin(), z.coeff.end());
  return z;
}

std::pair<ChainPoint, ChainPoint> unzip(Side sx, Side sy, const ZippedPoint& z) {
  std::vector<Subspace> xs, ys;
  std::vector<Rat> xc, yc;
  for (int i = 0; i < z.size(); ++i) {
    const auto& [p, q] = z.support[i];
    if (!xs.empty() && xs.back() == p)
      xc.back() += z.coeff[i];
    else {
      xs.push_back(p);
      xc.push_back(z.coeff[i]);
    }
    if (!ys.empty() && ys.back() == q)
      yc.back() += z.coeff[i];
    else {
      ys.push_back(q);
      yc.push_back(z.coeff[i]);
    }
  }
  return {ChainPoint(sx, std::move(xs), std::move(xc)),
          ChainPoint(sy, std::move(ys), std::move(yc))};
}

}  // namespace ncrank
