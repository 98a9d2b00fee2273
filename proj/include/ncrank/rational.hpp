#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncrank {

/// Arbitrary-precision integer and rational. Rationals are kept reduced with a
/// positive denominator by the backing type, so equality is plain value equality.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(num, den);
}

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline Rat clamp01(const Rat& v) {
  if (v < 0) return Rat(0);
  if (v > 1) return Rat(1);
  return v;
}

/// Bit length of |v| (0 for v = 0); used by the bit-growth guards.
inline int bit_length(const Int& v) {
  if (v == 0) return 0;
  return static_cast<int>(msb(abs(v))) + 1;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Value of the p-adic valuation v_p: an integer or +infinity (v_p(0)).
class PadicValue {
public:
  static PadicValue infinity() { return PadicValue(true, 0); }
  static PadicValue finite(Int k) { return PadicValue(false, std::move(k)); }

  bool is_infinite() const { return infinite_; }
  const Int& value() const {
    if (infinite_) throw std::logic_error("value() on infinite p-adic valuation");
    return k_;
  }

  PadicValue operator+(const PadicValue& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return finite(k_ + o.k_);
  }
  bool operator==(const PadicValue& o) const {
    return infinite_ == o.infinite_ && (infinite_ || k_ == o.k_);
  }
  bool operator<(const PadicValue& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return k_ < o.k_;
  }
  bool operator>=(const PadicValue& o) const { return !(*this < o); }

  std::string str() const { return infinite_ ? "inf" : k_.str(); }

private:
  PadicValue(bool inf, Int k) : infinite_(inf), k_(std::move(k)) {}
  bool infinite_;
  Int k_;
};

inline PadicValue vp(const Int& u, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("vp: modulus is not prime");
  if (u == 0) return PadicValue::infinity();
  Int v = u, k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return PadicValue::finite(k);
}

inline PadicValue vp(const Rat& u, std::int64_t p) {
  if (u == 0) return vp(Int(0), p);
  PadicValue a = vp(rat_num(u), p), b = vp(rat_den(u), p);
  return PadicValue::finite(a.value() - b.value());
}

/// Order-0 digit of the p-adic expansion of u (requires v_p(u) >= 0): the
/// unique a0 in [0,p) with v_p(u - a0) >= 1. Solves a = b·x mod p for u = a/b.
inline std::int64_t padic_leading_digit(const Rat& u, std::int64_t p) {
  PadicValue v = vp(u, p);
  if (v.is_infinite()) return 0;
  if (v.value() < 0)
    throw std::invalid_argument("padic_leading_digit: v_p(u) < 0");
  if (v.value() > 0) return 0;
  Int a = rat_num(u) % p, b = rat_den(u) % p;
  if (a < 0) a += p;
  if (b < 0) b += p;
  // b^(p-2) mod p is b^{-1} (p prime, b nonzero mod p)
  Int binv = 1, base = b, e = p - 2;
  while (e > 0) {
    if (e % 2 == 1) binv = binv * base % p;
    base = base * base % p;
    e /= 2;
  }
  return static_cast<std::int64_t>(a * binv % p);
}

}  // namespace ncrank
