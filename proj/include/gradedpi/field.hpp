#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace gradedpi {

// An element of GF(p) or GF(p^2).  The value is stored as the single code
// c0 + p*c1 where c0 + c1*t is its representation in the basis {1, t}.
// Codes enumerate the field in canonical ascending order.  Elements do not
// know their field; every operation goes through a FieldContext.
struct FieldElement {
  std::uint32_t code = 0;

  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

// GF(q), q = p^k with k in {1, 2} and p > 3 prime.  For k = 2 the modulus
// is t^2 - c with c the smallest quadratic non-residue mod p.
class FieldContext {
 public:
  FieldContext(std::uint32_t p, int k);

  std::uint32_t p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  // The constant c of the modulus t^2 - c; 0 when k = 1.
  std::uint32_t nonresidue() const noexcept { return c_; }

  FieldElement zero() const noexcept { return {0}; }
  FieldElement one() const noexcept { return {1}; }
  FieldElement from_int(long long v) const noexcept;
  FieldElement from_coeffs(std::uint32_t c0, std::uint32_t c1) const;
  std::array<std::uint32_t, 2> coeffs(FieldElement a) const noexcept {
    return {a.code % p_, a.code / p_};
  }
  // i-th element in canonical order, 0 <= i < q.
  FieldElement element(std::uint32_t i) const noexcept { return {i}; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    if (add_) return {add_[a.code * q_ + b.code]};
    return add_slow(a, b);
  }
  FieldElement neg(FieldElement a) const noexcept;
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (mul_) return {mul_[a.code * q_ + b.code]};
    return mul_slow(a, b);
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  // a^e by square-and-multiply; 0^0 = 1.
  FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;

  // "3" for prime fields, "1+2t", "4t" etc. for GF(p^2).
  std::string to_string(FieldElement a) const;
  // "5" or "5^2".
  std::string spec() const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_;
  }

 private:
  FieldElement add_slow(FieldElement a, FieldElement b) const noexcept;
  FieldElement mul_slow(FieldElement a, FieldElement b) const noexcept;

  std::uint32_t p_;
  int k_;
  std::uint32_t q_;
  std::uint32_t c_ = 0;
  std::shared_ptr<const std::vector<std::uint32_t>> tables_;
  const std::uint32_t* add_ = nullptr;
  const std::uint32_t* mul_ = nullptr;
};

bool is_prime(std::uint64_t n) noexcept;

// Validates p prime, p > 3, k in {1, 2}; throws Error(InvalidField).
FieldContext make_field(std::uint32_t p, int k);
// Parses "p", "p^2" or the square "p*p" written out (e.g. "25").
FieldContext parse_field_spec(std::string_view spec);

// First omega != 1 with omega^3 = 1 in canonical order.
// Throws Error(NotPresent) when 3 does not divide q - 1.
FieldElement primitive_cube_root(const FieldContext& ctx);

}  // namespace gradedpi
