#pragma once

// Unbounded nonnegative integer. Values up to 256 bits live inline, so the
// field and group hot paths never touch the heap; anything larger spills to
// an owned buffer. Decimal strings are the canonical external form.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ecdlp {

class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // NOLINT: implicit by design, mirrors integer literals
  BigUint(const BigUint& other);
  BigUint(BigUint&& other) noexcept;
  BigUint& operator=(const BigUint& other);
  BigUint& operator=(BigUint&& other) noexcept;
  ~BigUint();

  // Throws ParseError unless `text` is a nonempty string of ASCII digits.
  static BigUint from_decimal(std::string_view text);
  std::string to_decimal() const;

  bool is_zero() const { return size_ == 0; }
  bool is_odd() const { return size_ != 0 && (limbs()[0] & 1u); }
  bool fits_u64() const { return size_ <= 2; }
  std::uint64_t to_u64() const;  // value must fit in 64 bits

  std::size_t bit_length() const;       // 0 for zero
  bool bit(std::size_t index) const;    // false beyond the top bit

  std::uint64_t mod_u64(std::uint64_t m) const;  // m must be nonzero

  BigUint& operator+=(std::uint64_t v);

  friend BigUint operator+(const BigUint& a, const BigUint& b);
  // Requires a >= b; underflow is a programming error, not a domain error.
  friend BigUint operator-(const BigUint& a, const BigUint& b);
  friend BigUint operator*(const BigUint& a, const BigUint& b);

  friend bool operator==(const BigUint& a, const BigUint& b);
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b);

 private:
  static constexpr std::uint32_t kInlineLimbs = 8;

  const std::uint32_t* limbs() const { return heap_ ? heap_ : inline_; }
  std::uint32_t* limbs() { return heap_ ? heap_ : inline_; }
  void ensure_capacity(std::uint32_t limb_count);
  void trim();
  void assign(const std::uint32_t* src, std::uint32_t count);
  // *this = *this * factor + addend, used by decimal parsing
  void mul_add_small(std::uint32_t factor, std::uint32_t addend);
  // divides in place by a small divisor, returns the remainder
  std::uint32_t div_small(std::uint32_t divisor);

  // little-endian base-2^32 limbs; top limb nonzero when size_ > 0
  std::uint32_t inline_[kInlineLimbs] = {};
  std::uint32_t* heap_ = nullptr;
  std::uint32_t size_ = 0;
  std::uint32_t capacity_ = kInlineLimbs;
};

}  // namespace ecdlp
