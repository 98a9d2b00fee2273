#include "ncrank/gfpe.hpp"

#include <stdexcept>

namespace ncrank {

namespace {

using Poly = std::vector<std::int64_t>;  // little-endian, may carry leading zeros

int deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// remainder of a by monic b
Poly poly_mod(Poly a, const Poly& b, const GfpField& F) {
  int db = deg(b);
  for (int i = deg(a); i >= db && i >= 0; i = deg(a)) {
    std::int64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const GfpField& F) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return r;
}

bool divides(const Poly& g, const Poly& f, const GfpField& F) {
  return deg(poly_mod(f, g, F)) < 0;
}

// enumerates all monic polynomials of degree d over GF(p) via base-p digits
bool has_factor_of_degree(const Poly& f, int d, const GfpField& F) {
  std::int64_t p = F.modulus();
  Int total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (Int idx = 0; idx < total; ++idx) {
    Poly g(d + 1, 0);
    g[d] = 1;
    Int t = idx;
    for (int i = 0; i < d; ++i) {
      g[i] = static_cast<std::int64_t>(t % p);
      t /= p;
    }
    if (divides(g, f, F)) return true;
  }
  return false;
}

bool is_irreducible(const Poly& f, int e, const GfpField& F) {
  for (int d = 1; d <= e / 2; ++d)
    if (has_factor_of_degree(f, d, F)) return false;
  return true;
}

}  // namespace

GfpeField::GfpeField(std::int64_t p, int e, std::uint64_t seed) : base_(p), e_(e) {
  if (e < 1) throw std::invalid_argument("GfpeField: degree must be >= 1");
  Int space = 1;
  for (int i = 0; i < e; ++i) space *= p;
  Int start = Int(seed) % space;
  for (Int t = 0; t < space; ++t) {
    Int idx = (start + t) % space;
    Poly f(e + 1, 0);
    f[e] = 1;
    Int v = idx;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<std::int64_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, e, base_)) {
      modulus_ = f;
      return;
    }
  }
  throw std::logic_error("GfpeField: no irreducible polynomial found");  // unreachable
}

Int GfpeField::field_size() const {
  Int s = 1;
  for (int i = 0; i < e_; ++i) s *= p();
  return s;
}

GfpeField::Elem GfpeField::one() const {
  Elem r(e_, 0);
  r[0] = base_.one();
  return r;
}

GfpeField::Elem GfpeField::from_base(std::int64_t v) const {
  Elem r(e_, 0);
  r[0] = base_.from_int(v);
  return r;
}

GfpeField::Elem GfpeField::from_index(const Int& idx) const {
  Elem r(e_, 0);
  Int v = idx % field_size();
  if (v < 0) v += field_size();
  for (int i = 0; i < e_; ++i) {
    r[i] = static_cast<std::int64_t>(v % p());
    v /= p();
  }
  return r;
}

GfpeField::Elem GfpeField::add(const Elem& a, const Elem& b) const {
  Elem r(e_);
  for (int i = 0; i < e_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

GfpeField::Elem GfpeField::sub(const Elem& a, const Elem& b) const {
  Elem r(e_);
  for (int i = 0; i < e_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

GfpeField::Elem GfpeField::neg(const Elem& a) const {
  Elem r(e_);
  for (int i = 0; i < e_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

bool GfpeField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

GfpeField::Elem GfpeField::mul(const Elem& a, const Elem& b) const {
  Poly prod = poly_mod(poly_mul(a, b, base_), modulus_, base_);
  prod.resize(e_, 0);
  return prod;
}

GfpeField::Elem GfpeField::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("GfpeField::inv of zero");
  // extended Euclid on (modulus, a); gcd is a nonzero constant
  Poly r0 = modulus_, r1 = a;
  r1.resize(e_ + 1, 0);
  Poly t0(e_ + 1, 0), t1(e_ + 1, 0);
  t1[0] = 1;
  while (deg(r1) > 0) {
    // one division step: r0 = q*r1 + r2
    Poly q(e_ + 1, 0);
    Poly rem = r0;
    int d1 = deg(r1);
    std::int64_t lead_inv = base_.inv(r1[d1]);
    for (int i = deg(rem); i >= d1; i = deg(rem)) {
      if (i < 0 || rem[i] == 0) break;
      std::int64_t c = base_.mul(rem[i], lead_inv);
      q[i - d1] = base_.add(q[i - d1], c);
      for (int j = 0; j <= d1; ++j)
        rem[i - d1 + j] = base_.sub(rem[i - d1 + j], base_.mul(c, r1[j]));
    }
    Poly qt = poly_mul(q, t1, base_);
    qt.resize(std::max(qt.size(), t0.size()), 0);
    Poly t2(qt.size(), 0);
    for (std::size_t i = 0; i < t2.size(); ++i) {
      std::int64_t t0i = i < t0.size() ? t0[i] : 0;
      t2[i] = base_.sub(t0i, qt[i]);
    }
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = t2;
  }
  if (deg(r1) != 0) throw std::logic_error("GfpeField::inv: modulus not irreducible");
  std::int64_t c = base_.inv(r1[0]);
  Poly res = poly_mod(t1, modulus_, base_);
  res.resize(e_, 0);
  for (auto& x : res) x = base_.mul(x, c);
  return res;
}

}  // namespace ncrank
