#include "ncrank/orthoscheme.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ncrank {

FCoordinates f_coordinates(const ChainPoint& z, const Frame& frame) {
  if (z.side() != frame.side())
    throw std::invalid_argument("f_coordinates: side mismatch");
  FCoordinates c{std::vector<Rat>(frame.n(), Rat(0)), &frame};
  for (int i = 0; i < z.size(); ++i) {
    std::uint64_t mask = frame.membership(z.support()[i]);
    for (int j = 0; j < frame.n(); ++j)
      if (mask >> j & 1) c.v[j] += z.coeff()[i];
  }
  return c;
}

ChainPoint recover(const FCoordinates& c) {
  const Frame& fr = *c.frame;
  const int n = fr.n();
  for (const auto& x : c.v)
    if (x < 0 || x > 1) throw std::invalid_argument("recover: coordinate outside [0,1]");
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.v[a] > c.v[b]; });

  std::vector<Subspace> support;
  std::vector<Rat> coeff;
  Rat top = n > 0 ? c.v[order[0]] : Rat(0);
  if (1 - top > 0) {
    support.push_back(fr.element(0));
    coeff.push_back(1 - top);
  }
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    mask |= std::uint64_t{1} << order[i];
    Rat next = i + 1 < n ? c.v[order[i + 1]] : Rat(0);
    Rat lam = c.v[order[i]] - next;
    if (lam > 0) {
      support.push_back(fr.element(mask));
      coeff.push_back(lam);
    }
  }
  if (support.empty()) {
    support.push_back(fr.element(0));
    coeff.push_back(Rat(1));
  }
  return ChainPoint(fr.side(), std::move(support), std::move(coeff));
}

Rat distance_in_frame_sq(const FCoordinates& a, const FCoordinates& b) {
  if (a.frame != b.frame) throw std::invalid_argument("distance_in_frame: frame mismatch");
  Rat total = 0;
  for (std::size_t i = 0; i < a.v.size(); ++i) {
    Rat d = a.v[i] - b.v[i];
    total += d * d;
  }
  return total;
}

}  // namespace ncrank
