#pragma once

// Arithmetic in the prime field F_p. Elements are canonical residues in
// [0, p); every operation reduces eagerly, so equality is structural.
// All values are immutable and all operations are pure functions.

#include <cstdint>
#include <optional>

#include "ecdlp/bigint.hpp"

namespace ecdlp {

// A prime modulus, verified at construction by trial division up to sqrt(p).
// The checker is deliberately desk-scale: it rejects p > 2^64 (CapExceeded)
// and p <= 3 (ModulusTooSmall, which would degenerate the group law).
class PrimeModulus {
 public:
  explicit PrimeModulus(const BigUint& p);
  explicit PrimeModulus(std::uint64_t p) : PrimeModulus(BigUint(p)) {}

  const BigUint& value() const { return p_; }
  std::uint64_t value_u64() const { return p64_; }

  friend bool operator==(const PrimeModulus& a, const PrimeModulus& b) {
    return a.p64_ == b.p64_;
  }

 private:
  BigUint p_;
  std::uint64_t p64_;
};

class FieldElement {
 public:
  // Reduces `value` mod p; any nonnegative integer is accepted.
  FieldElement(const BigUint& value, const PrimeModulus& m);
  FieldElement(std::uint64_t value, const PrimeModulus& m);

  BigUint value() const { return BigUint(v_); }
  std::uint64_t value_u64() const { return v_; }
  const PrimeModulus& modulus() const { return modulus_; }
  bool is_zero() const { return v_ == 0; }

  // Binary operations require equal moduli and throw ModulusMismatch otherwise.
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.v_ == b.v_ && a.modulus_ == b.modulus_;
  }

 private:
  friend FieldElement fe_inv(const FieldElement& a);
  friend std::optional<FieldElement> fe_sqrt(const FieldElement& a);

  FieldElement(std::uint64_t reduced, const PrimeModulus& m, int /*tag*/)
      : v_(reduced), modulus_(m) {}

  std::uint64_t v_;  // canonical residue; always < p < 2^64
  PrimeModulus modulus_;
};

// Multiplicative inverse; throws DivisionByZero on the zero element.
FieldElement fe_inv(const FieldElement& a);

// Modular square root (Tonelli-Shanks, any odd prime). Returns the smaller
// of the two roots, or absent when `a` is a non-residue.
std::optional<FieldElement> fe_sqrt(const FieldElement& a);

namespace detail {
// 64-bit helpers shared with the enumeration code in params.
std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);
std::optional<std::uint64_t> sqrt_mod_u64(std::uint64_t a, std::uint64_t p);
}  // namespace detail

}  // namespace ecdlp
