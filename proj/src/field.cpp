#include "ecdlp/field.hpp"

#include <algorithm>
#include <cassert>

#include "ecdlp/errors.hpp"

namespace ecdlp {

namespace detail {

std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp,
                          std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod_u64(result, base, m);
    base = mul_mod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace {

// Extended Euclid on 64-bit values; coefficients stay within int64 because
// they are bounded by the modulus, which callers keep below 2^32.
std::uint64_t inv_mod_small(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(m);
  std::int64_t r = static_cast<std::int64_t>(a);
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  assert(old_r == 1);
  return old_t < 0 ? static_cast<std::uint64_t>(old_t + static_cast<std::int64_t>(m))
                   : static_cast<std::uint64_t>(old_t);
}

std::uint64_t inv_mod_u64(std::uint64_t a, std::uint64_t p) {
  if (p < (1ull << 32)) return inv_mod_small(a, p);
  // larger moduli are rare (never on benchmark curves): Fermat inverse
  return pow_mod_u64(a, p - 2, p);
}

}  // namespace

std::optional<std::uint64_t> sqrt_mod_u64(std::uint64_t a, std::uint64_t p) {
  if (a == 0) return 0;
  if (pow_mod_u64(a, (p - 1) / 2, p) != 1) return std::nullopt;

  // Tonelli-Shanks. p - 1 = q * 2^s with q odd.
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t r;
  if (s == 1) {
    r = pow_mod_u64(a, (p + 1) / 4, p);
  } else {
    std::uint64_t z = 2;
    while (pow_mod_u64(z, (p - 1) / 2, p) == 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = pow_mod_u64(z, q, p);
    std::uint64_t t = pow_mod_u64(a, q, p);
    r = pow_mod_u64(a, (q + 1) / 2, p);
    while (t != 1) {
      std::uint64_t i = 0;
      std::uint64_t probe = t;
      while (probe != 1) {
        probe = mul_mod_u64(probe, probe, p);
        ++i;
      }
      std::uint64_t b = c;
      for (std::uint64_t k = 0; k + i + 1 < m; ++k) b = mul_mod_u64(b, b, p);
      m = i;
      c = mul_mod_u64(b, b, p);
      t = mul_mod_u64(t, c, p);
      r = mul_mod_u64(r, b, p);
    }
  }
  return std::min(r, p - r);
}

}  // namespace detail

PrimeModulus::PrimeModulus(const BigUint& p) : p_(p) {
  if (!p.fits_u64())
    throw CapExceeded("modulus " + p.to_decimal() +
                      " exceeds the primality checker cap of 2^64");
  p64_ = p.to_u64();
  if (p64_ <= 3)
    throw ModulusTooSmall("modulus must exceed 3, got " + p.to_decimal());
  if (!detail::is_prime_u64(p64_))
    throw NotPrime(p.to_decimal() + " is not prime");
}

FieldElement::FieldElement(const BigUint& value, const PrimeModulus& m)
    : v_(value.mod_u64(m.value_u64())), modulus_(m) {}

FieldElement::FieldElement(std::uint64_t value, const PrimeModulus& m)
    : v_(value % m.value_u64()), modulus_(m) {}

namespace {
void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (!(a.modulus() == b.modulus()))
    throw ModulusMismatch("operands live in F_" + a.modulus().value().to_decimal() +
                          " and F_" + b.modulus().value().to_decimal());
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  std::uint64_t p = a.modulus().value_u64();
  unsigned __int128 sum =
      static_cast<unsigned __int128>(a.value_u64()) + b.value_u64();
  if (sum >= p) sum -= p;
  return FieldElement(static_cast<std::uint64_t>(sum), a.modulus(), 0);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  std::uint64_t p = a.modulus().value_u64();
  std::uint64_t av = a.value_u64(), bv = b.value_u64();
  return FieldElement(av >= bv ? av - bv : av + (p - bv), a.modulus(), 0);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  std::uint64_t p = a.modulus().value_u64();
  return FieldElement(detail::mul_mod_u64(a.value_u64(), b.value_u64(), p),
                      a.modulus(), 0);
}

FieldElement FieldElement::operator-() const {
  std::uint64_t p = modulus_.value_u64();
  return FieldElement(v_ == 0 ? 0 : p - v_, modulus_, 0);
}

FieldElement fe_inv(const FieldElement& a) {
  if (a.is_zero()) throw DivisionByZero("zero has no inverse in F_p");
  std::uint64_t p = a.modulus().value_u64();
  return FieldElement(detail::inv_mod_u64(a.value_u64(), p), a.modulus(), 0);
}

std::optional<FieldElement> fe_sqrt(const FieldElement& a) {
  auto r = detail::sqrt_mod_u64(a.value_u64(), a.modulus().value_u64());
  if (!r) return std::nullopt;
  return FieldElement(*r, a.modulus(), 0);
}

}  // namespace ecdlp
