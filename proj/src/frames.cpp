#include "ncrank/frames.hpp"

#include <bit>
#include <stdexcept>

namespace ncrank {

Frame::Frame(Side side, std::vector<Subspace> atoms)
    : side_(side), n_(static_cast<int>(atoms.size())), atoms_(std::move(atoms)) {
  if (n_ == 0) throw std::invalid_argument("Frame: no atoms");
  if (n_ > 64) throw std::invalid_argument("Frame: ambient dimension above 64");
  const int amb = atoms_.front().ambient();
  if (amb != n_) throw std::invalid_argument("Frame: atom count must equal ambient dim");
  GfpMatrix rows(atoms_.front().field(), n_, n_);
  for (int i = 0; i < n_; ++i) {
    if (atoms_[i].dim() != 1 || atoms_[i].ambient() != amb)
      throw std::invalid_argument("Frame: atoms must be rank-1");
    for (int j = 0; j < amb; ++j) rows.at(i, j) = atoms_[i].basis().at(0, j);
  }
  if (rank(rows) != n_)
    throw std::invalid_argument("Frame: atoms do not jointly span");
}

std::uint64_t Frame::membership(const Subspace& s) const {
  if (auto it = registry_.find(s); it != registry_.end()) return it->second;
  std::uint64_t mask = 0;
  for (int i = 0; i < n_; ++i)
    if (s.contains_vector(atoms_[i].basis().row(0))) mask |= std::uint64_t{1} << i;
  if (std::popcount(mask) != s.dim())
    throw std::invalid_argument("Frame: element not expressible in frame");
  return mask;
}

std::uint64_t Frame::register_element(const Subspace& s) {
  std::uint64_t mask = membership(s);
  registry_.emplace(s, mask);
  return mask;
}

void Frame::register_chain(const std::vector<Subspace>& chain) {
  std::uint64_t prev = 0;
  bool first = true;
  for (const auto& s : chain) {
    std::uint64_t mask = register_element(s);
    if (!first && (prev & ~mask) != 0)
      throw std::invalid_argument("Frame: chain memberships are not nested");
    prev = mask;
    first = false;
  }
}

Subspace Frame::element(std::uint64_t mask) const {
  GfpMatrix rows(field(), std::popcount(mask), n_);
  int r = 0;
  for (int i = 0; i < n_; ++i)
    if (mask >> i & 1) {
      for (int j = 0; j < n_; ++j) rows.at(r, j) = atoms_[i].basis().at(0, j);
      ++r;
    }
  return Subspace::from_rows(rows);
}

namespace {

// Inductive construction from two maximal chains sharing top C[k] == D[k]:
// recurse into [0, C[k-1]], then adjoin one atom witnessing the first step of
// D that leaves C[k-1].
void build_atoms(const std::vector<Subspace>& c, const std::vector<Subspace>& d,
                 std::vector<Subspace>& atoms) {
  int k = static_cast<int>(c.size()) - 1;
  if (k == 0) return;
  const Subspace& wp = c[k - 1];
  std::vector<Subspace> dp;
  dp.reserve(k);
  for (int i = 0; i <= k; ++i) {
    Subspace q = meet(d[i], wp);
    if (dp.empty() || !(dp.back() == q)) dp.push_back(q);
  }
  if (static_cast<int>(dp.size()) != k)
    throw std::logic_error("common_frame: collapsed chain has wrong length");
  std::vector<Subspace> cp(c.begin(), c.end() - 1);
  build_atoms(cp, dp, atoms);

  int j = -1;
  for (int i = 0; i <= k; ++i)
    if (!wp.contains(d[i])) {
      j = i;
      break;
    }
  if (j <= 0) throw std::logic_error("common_frame: no escaping chain step");
  for (int r = 0; r < d[j].dim(); ++r) {
    GfpMatrix v = d[j].basis().row(r);
    if (!d[j - 1].contains_vector(v)) {
      atoms.push_back(Subspace::from_vector(v));
      return;
    }
  }
  throw std::logic_error("common_frame: cover step has no witness row");
}

Frame common_frame_maximal(Side side, const MaximalChain& c, const MaximalChain& d) {
  std::vector<Subspace> atoms;
  build_atoms(c.elems, d.elems, atoms);
  Frame fr(side, std::move(atoms));
  fr.register_chain(c.elems);
  fr.register_chain(d.elems);
  return fr;
}

}  // namespace

Frame common_frame(Side side, const std::vector<Subspace>& c,
                   const std::vector<Subspace>& d, const GfpField& field, int n) {
  return common_frame_maximal(side, maximalize(c, field, n), maximalize(d, field, n));
}

Subspace retraction(const Subspace& p, const Frame& frame) {
  std::uint64_t mask = 0;
  Subspace prefix = Subspace::zero(frame.field(), frame.n());
  int prev = 0;
  for (int i = 0; i < frame.n(); ++i) {
    prefix = join(prefix, frame.atom(i));
    int cur = meet(p, prefix).dim();
    if (cur == prev + 1) mask |= std::uint64_t{1} << i;
    prev = cur;
  }
  return frame.element(mask);
}

OrthogonalFrame orthogonal_frame(const GfpMatrix& ai, const MaximalChain& xchain,
                                 const MaximalChain& ychain) {
  const GfpField& F = ai.ring();
  const int n = ai.rows();
  const int k = rank(ai);

  // per-index chains Y_j^⊥ (in 𝓛) and Y_j^⊥⊥ (in 𝓜, stored annihilators)
  std::vector<Subspace> ybot, ybotbot;
  ybot.reserve(n + 1);
  for (const auto& ann : ychain.elems) {
    Subspace b = orth_left(ai, CoSubspace::from_annihilator(ann));
    ybotbot.push_back(orth_right(ai, b).ann());
    ybot.push_back(std::move(b));
  }
  std::vector<Subspace> ybot_dedup;
  for (const auto& s : ybot)
    if (ybot_dedup.empty() || !(ybot_dedup.back() == s)) ybot_dedup.push_back(s);

  // e-frame: common frame of 𝓧 and 𝓨^⊥, atoms reordered so the U_0 block comes last
  Frame prelim = common_frame(Side::L, xchain.elems, ybot_dedup, F, n);
  const Subspace& u0 = ybot.front();
  std::uint64_t u0mask = prelim.membership(u0);
  std::vector<Subspace> eatoms;
  eatoms.reserve(n);
  for (int i = 0; i < n; ++i)
    if (!(u0mask >> i & 1)) eatoms.push_back(prelim.atom(i));
  for (int i = 0; i < n; ++i)
    if (u0mask >> i & 1) eatoms.push_back(prelim.atom(i));
  Frame eframe(Side::L, std::move(eatoms));
  eframe.register_chain(xchain.elems);
  eframe.register_chain(ybot_dedup);

  // f_i := e_i^⊥ for i < k (covector atoms e_i^T A_i)
  std::vector<Subspace> fatoms;
  fatoms.reserve(n);
  for (int i = 0; i < k; ++i) {
    Subspace fi = Subspace::from_rows(eframe.atom_generator(i) * ai);
    if (fi.dim() != 1) throw std::logic_error("orthogonal_frame: e_i^⊥ not an atom");
    fatoms.push_back(std::move(fi));
  }

  // walk 𝓨; a step where 𝓨^⊥⊥ jumps consumes the f-atom the jump adjoins, a
  // stalled step contributes a fresh atom covering ann(Y_{j-1}) in ann(Y_j)
  auto partial_mask = [&](const Subspace& s) {
    std::uint64_t mask = 0;
    for (int t = 0; t < k; ++t)
      if (s.contains_vector(fatoms[t].basis().row(0))) mask |= std::uint64_t{1} << t;
    return mask;
  };
  std::uint64_t bbprev = partial_mask(ybotbot.front());
  for (int j = 1; j <= n; ++j) {
    const Subspace& cur = ychain.elems[j];
    const Subspace& prev = ychain.elems[j - 1];
    if (!(ybotbot[j] == ybotbot[j - 1])) {
      std::uint64_t bbcur = partial_mask(ybotbot[j]);
      std::uint64_t fresh = bbcur & ~bbprev;
      if (std::popcount(fresh) != 1)
        throw std::logic_error("orthogonal_frame: ⊥⊥ jump is not a single atom");
      int t = std::countr_zero(fresh);
      if (!cur.contains_vector(fatoms[t].basis().row(0)) ||
          prev.contains_vector(fatoms[t].basis().row(0)))
        throw std::logic_error("orthogonal_frame: jump atom does not cover the step");
      bbprev = bbcur;
    } else {
      bool added = false;
      for (int r = 0; r < cur.dim() && !added; ++r) {
        GfpMatrix v = cur.basis().row(r);
        if (!prev.contains_vector(v)) {
          fatoms.push_back(Subspace::from_vector(v));
          added = true;
        }
      }
      if (!added) throw std::logic_error("orthogonal_frame: stalled step has no witness");
    }
  }
  if (static_cast<int>(fatoms.size()) != n)
    throw std::logic_error("orthogonal_frame: wrong f-atom count");

  Frame fframe(Side::M, std::move(fatoms));
  fframe.register_chain(ychain.elems);
  for (const auto& x : xchain.elems) fframe.register_element(orth_right(ai, x).ann());

  return OrthogonalFrame{std::move(eframe), std::move(fframe), k};
}

}  // namespace ncrank
