#pragma once

#include <cstdint>
#include <stdexcept>

#include "ncrank/rational.hpp"

namespace ncrank {

/// Prime field GF(p) for a runtime prime p. Elements are canonical residues
/// in [0, p) carried as plain int64; all operations go through the context.
class GfpField {
public:
  using Elem = std::int64_t;

  explicit GfpField(std::int64_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("GfpField: modulus is not prime");
    if (p > (std::int64_t{1} << 31))
      throw std::invalid_argument("GfpField: modulus too large");
  }

  std::int64_t modulus() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % p_;
    return r < 0 ? r + p_ : r;
  }
  Elem from_bigint(const Int& v) const {
    Int r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a - b + p_) % p_; }
  Elem mul(Elem a, Elem b) const { return a * b % p_; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GfpField::inv of zero");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return t < 0 ? t + p_ : t;
  }

  bool operator==(const GfpField& o) const { return p_ == o.p_; }

private:
  std::int64_t p_;
};

}  // namespace ncrank
