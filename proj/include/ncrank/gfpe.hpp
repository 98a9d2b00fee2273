#pragma once

#include <cstdint>
#include <vector>

#include "ncrank/gfp.hpp"

namespace ncrank {

/// Extension field GF(p^e) = GF(p)[x]/(f) for a monic irreducible f of degree e.
/// Elements are coefficient vectors of length e, little-endian in x. Only the
/// blow-up oracle uses this field; it is never a user-facing input field.
class GfpeField {
public:
  using Elem = std::vector<std::int64_t>;

  /// Builds the context, searching candidates deterministically from `seed`
  /// in lexicographic coefficient order and verifying irreducibility by trial
  /// division against every monic polynomial of degree <= e/2.
  GfpeField(std::int64_t p, int e, std::uint64_t seed = 0);

  std::int64_t p() const { return base_.modulus(); }
  int degree() const { return e_; }
  const GfpField& base() const { return base_; }
  /// Monic modulus, little-endian, size e+1 (top coefficient 1).
  const std::vector<std::int64_t>& modulus_poly() const { return modulus_; }
  Int field_size() const;

  Elem zero() const { return Elem(e_, 0); }
  Elem one() const;
  Elem from_base(std::int64_t v) const;
  /// Element from a residue index in [0, p^e), base-p little-endian digits.
  Elem from_index(const Int& idx) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

private:
  GfpField base_;
  int e_;
  std::vector<std::int64_t> modulus_;
};

}  // namespace ncrank
