#include "gradedpi/field.hpp"

#include <charconv>

#include "gradedpi/error.hpp"

namespace gradedpi {

namespace {

constexpr std::uint32_t kTableLimit = 512;

bool is_square_mod(std::uint32_t c, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x)
    if ((x * x) % p == c) return true;
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldContext::FieldContext(std::uint32_t p, int k) : p_(p), k_(k), q_(k == 2 ? p * p : p) {
  if (k_ == 2) {
    c_ = 2;
    while (is_square_mod(c_, p_)) ++c_;
  }
  if (q_ <= kTableLimit) {
    auto tables = std::make_shared<std::vector<std::uint32_t>>(2 * std::size_t{q_} * q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      for (std::uint32_t b = 0; b < q_; ++b) {
        (*tables)[a * q_ + b] = add_slow({a}, {b}).code;
        (*tables)[q_ * q_ + a * q_ + b] = mul_slow({a}, {b}).code;
      }
    }
    add_ = tables->data();
    mul_ = tables->data() + std::size_t{q_} * q_;
    tables_ = std::move(tables);
  }
}

FieldElement FieldContext::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement FieldContext::from_coeffs(std::uint32_t c0, std::uint32_t c1) const {
  if (c0 >= p_ || c1 >= p_ || (k_ == 1 && c1 != 0))
    throw Error(ErrorCode::InvalidArgument, "coefficient out of range for GF(" + spec() + ")");
  return {c0 + p_ * c1};
}

FieldElement FieldContext::add_slow(FieldElement a, FieldElement b) const noexcept {
  auto [a0, a1] = coeffs(a);
  auto [b0, b1] = coeffs(b);
  return {(a0 + b0) % p_ + p_ * ((a1 + b1) % p_)};
}

FieldElement FieldContext::mul_slow(FieldElement a, FieldElement b) const noexcept {
  auto [a0, a1] = coeffs(a);
  auto [b0, b1] = coeffs(b);
  const std::uint64_t p = p_;
  // (a0 + a1 t)(b0 + b1 t) with t^2 = c
  const std::uint64_t r0 = (std::uint64_t{a0} * b0 + (std::uint64_t{a1} * b1 % p) * c_) % p;
  const std::uint64_t r1 = (std::uint64_t{a0} * b1 + std::uint64_t{a1} * b0) % p;
  return {static_cast<std::uint32_t>(r0 + p * r1)};
}

FieldElement FieldContext::neg(FieldElement a) const noexcept {
  auto [a0, a1] = coeffs(a);
  return {(p_ - a0) % p_ + p_ * ((p_ - a1) % p_)};
}

FieldElement FieldContext::pow(FieldElement a, std::uint64_t e) const noexcept {
  FieldElement result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElement FieldContext::inv(FieldElement a) const {
  if (a.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in GF(" + spec() + ")");
  return pow(a, q_ - 2);
}

std::string FieldContext::to_string(FieldElement a) const {
  auto [c0, c1] = coeffs(a);
  if (c1 == 0) return std::to_string(c0);
  std::string t = c1 == 1 ? "t" : std::to_string(c1) + "t";
  if (c0 == 0) return t;
  return std::to_string(c0) + "+" + t;
}

std::string FieldContext::spec() const {
  return k_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^2";
}

FieldContext make_field(std::uint32_t p, int k) {
  if (k != 1 && k != 2)
    throw Error(ErrorCode::InvalidField, "extension degree must be 1 or 2, got " + std::to_string(k));
  if (p <= 3) throw Error(ErrorCode::InvalidField, "characteristic must exceed 3, got " + std::to_string(p));
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, std::to_string(p) + " is not prime");
  if (p > 46340) throw Error(ErrorCode::InvalidField, "prime too large: " + std::to_string(p));
  return FieldContext(p, k);
}

FieldContext parse_field_spec(std::string_view spec) {
  auto bad = [&] { return Error(ErrorCode::InvalidField, "bad field spec '" + std::string(spec) + "'"); };
  std::uint32_t p = 0;
  int k = 1;
  const char* first = spec.data();
  const char* last = spec.data() + spec.size();
  auto [ptr, ec] = std::from_chars(first, last, p);
  if (ec != std::errc() || ptr == first) throw bad();
  if (ptr != last) {
    if (*ptr != '^') throw bad();
    auto [ptr2, ec2] = std::from_chars(ptr + 1, last, k);
    if (ec2 != std::errc() || ptr2 != last) throw bad();
  } else if (!is_prime(p)) {
    // "25" is accepted for 5^2.
    for (std::uint32_t r = 2; r * r <= p; ++r)
      if (r * r == p && is_prime(r)) return make_field(r, 2);
  }
  return make_field(p, k);
}

FieldElement primitive_cube_root(const FieldContext& ctx) {
  if ((ctx.q() - 1) % 3 != 0)
    throw Error(ErrorCode::NotPresent,
                "GF(" + ctx.spec() + ") has no primitive cube root of unity (3 does not divide q-1)");
  for (std::uint32_t i = 2; i < ctx.q(); ++i) {
    FieldElement w = ctx.element(i);
    if (ctx.pow(w, 3) == ctx.one()) return w;
  }
  throw Error(ErrorCode::NotPresent, "no primitive cube root found");
}

}  // namespace gradedpi
