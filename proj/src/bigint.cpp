#include "ecdlp/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <cstring>

#include "ecdlp/errors.hpp"

namespace ecdlp {

namespace {
constexpr std::uint64_t kLimbBase = 1ull << 32;
}

BigUint::BigUint(std::uint64_t value) {
  inline_[0] = static_cast<std::uint32_t>(value);
  inline_[1] = static_cast<std::uint32_t>(value >> 32);
  size_ = inline_[1] ? 2 : (inline_[0] ? 1 : 0);
}

BigUint::BigUint(const BigUint& other) {
  assign(other.limbs(), other.size_);
}

BigUint::BigUint(BigUint&& other) noexcept {
  std::memcpy(inline_, other.inline_, sizeof(inline_));
  heap_ = other.heap_;
  size_ = other.size_;
  capacity_ = other.capacity_;
  other.heap_ = nullptr;
  other.size_ = 0;
  other.capacity_ = kInlineLimbs;
}

BigUint& BigUint::operator=(const BigUint& other) {
  if (this != &other) assign(other.limbs(), other.size_);
  return *this;
}

BigUint& BigUint::operator=(BigUint&& other) noexcept {
  if (this != &other) {
    delete[] heap_;
    std::memcpy(inline_, other.inline_, sizeof(inline_));
    heap_ = other.heap_;
    size_ = other.size_;
    capacity_ = other.capacity_;
    other.heap_ = nullptr;
    other.size_ = 0;
    other.capacity_ = kInlineLimbs;
  }
  return *this;
}

BigUint::~BigUint() { delete[] heap_; }

void BigUint::ensure_capacity(std::uint32_t limb_count) {
  if (limb_count <= capacity_) return;
  std::uint32_t new_cap = std::max(limb_count, capacity_ * 2);
  auto* buf = new std::uint32_t[new_cap];
  std::memcpy(buf, limbs(), size_ * sizeof(std::uint32_t));
  delete[] heap_;
  heap_ = buf;
  capacity_ = new_cap;
}

void BigUint::trim() {
  while (size_ > 0 && limbs()[size_ - 1] == 0) --size_;
}

void BigUint::assign(const std::uint32_t* src, std::uint32_t count) {
  if (count <= kInlineLimbs && heap_) {
    delete[] heap_;
    heap_ = nullptr;
    capacity_ = kInlineLimbs;
  }
  ensure_capacity(count);
  std::memmove(limbs(), src, count * sizeof(std::uint32_t));
  size_ = count;
}

std::uint64_t BigUint::to_u64() const {
  assert(fits_u64());
  std::uint64_t v = 0;
  const std::uint32_t* d = limbs();
  if (size_ > 1) v = static_cast<std::uint64_t>(d[1]) << 32;
  if (size_ > 0) v |= d[0];
  return v;
}

std::size_t BigUint::bit_length() const {
  if (size_ == 0) return 0;
  std::uint32_t top = limbs()[size_ - 1];
  std::size_t bits = (size_ - 1) * 32u;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigUint::bit(std::size_t index) const {
  std::size_t limb = index / 32;
  if (limb >= size_) return false;
  return (limbs()[limb] >> (index % 32)) & 1u;
}

std::uint64_t BigUint::mod_u64(std::uint64_t m) const {
  if (m == 0) throw DivisionByZero("modulus is zero");
  unsigned __int128 rem = 0;
  const std::uint32_t* d = limbs();
  for (std::uint32_t i = size_; i > 0; --i) {
    rem = ((rem << 32) | d[i - 1]) % m;
  }
  return static_cast<std::uint64_t>(rem);
}

void BigUint::mul_add_small(std::uint32_t factor, std::uint32_t addend) {
  std::uint64_t carry = addend;
  std::uint32_t* d = limbs();
  for (std::uint32_t i = 0; i < size_; ++i) {
    std::uint64_t cur = static_cast<std::uint64_t>(d[i]) * factor + carry;
    d[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  while (carry) {
    ensure_capacity(size_ + 1);
    limbs()[size_++] = static_cast<std::uint32_t>(carry);
    carry >>= 32;
  }
}

std::uint32_t BigUint::div_small(std::uint32_t divisor) {
  std::uint64_t rem = 0;
  std::uint32_t* d = limbs();
  for (std::uint32_t i = size_; i > 0; --i) {
    std::uint64_t cur = (rem << 32) | d[i - 1];
    d[i - 1] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

BigUint BigUint::from_decimal(std::string_view text) {
  if (text.empty()) throw ParseError("empty decimal integer");
  BigUint out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t chunk = 0;
    std::uint32_t scale = 1;
    // consume up to 9 digits at a time
    std::size_t stop = std::min(text.size(), i + 9);
    for (; i < stop; ++i) {
      char c = text[i];
      if (c < '0' || c > '9')
        throw ParseError("invalid decimal integer: '" + std::string(text) + "'");
      chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
      scale *= 10;
    }
    out.mul_add_small(scale, chunk);
  }
  return out;
}

std::string BigUint::to_decimal() const {
  if (size_ == 0) return "0";
  BigUint scratch(*this);
  std::string out;
  while (!scratch.is_zero()) {
    std::uint32_t chunk = scratch.div_small(1000000000u);
    if (scratch.is_zero()) {
      out.insert(0, std::to_string(chunk));
    } else {
      char buf[10];
      std::snprintf(buf, sizeof(buf), "%09u", chunk);
      out.insert(0, buf, 9);
    }
  }
  return out;
}

BigUint& BigUint::operator+=(std::uint64_t v) {
  std::uint64_t carry = v;
  std::uint32_t* d = limbs();
  for (std::uint32_t i = 0; i < size_ && carry; ++i) {
    std::uint64_t cur = d[i] + (carry & 0xffffffffull);
    d[i] = static_cast<std::uint32_t>(cur);
    carry = (carry >> 32) + (cur >> 32);
  }
  while (carry) {
    ensure_capacity(size_ + 1);
    limbs()[size_++] = static_cast<std::uint32_t>(carry);
    carry >>= 32;
  }
  return *this;
}

BigUint operator+(const BigUint& a, const BigUint& b) {
  const BigUint& hi = a.size_ >= b.size_ ? a : b;
  const BigUint& lo = a.size_ >= b.size_ ? b : a;
  BigUint out;
  out.ensure_capacity(hi.size_ + 1);
  std::uint64_t carry = 0;
  std::uint32_t* d = out.limbs();
  for (std::uint32_t i = 0; i < hi.size_; ++i) {
    std::uint64_t cur = carry + hi.limbs()[i] + (i < lo.size_ ? lo.limbs()[i] : 0u);
    d[i] = static_cast<std::uint32_t>(cur);
    carry = cur >> 32;
  }
  out.size_ = hi.size_;
  if (carry) d[out.size_++] = static_cast<std::uint32_t>(carry);
  return out;
}

BigUint operator-(const BigUint& a, const BigUint& b) {
  if (a < b) throw std::logic_error("BigUint subtraction underflow");
  BigUint out;
  out.ensure_capacity(a.size_);
  std::int64_t borrow = 0;
  std::uint32_t* d = out.limbs();
  for (std::uint32_t i = 0; i < a.size_; ++i) {
    std::int64_t cur = static_cast<std::int64_t>(a.limbs()[i]) -
                       (i < b.size_ ? b.limbs()[i] : 0u) - borrow;
    borrow = cur < 0 ? 1 : 0;
    if (cur < 0) cur += static_cast<std::int64_t>(kLimbBase);
    d[i] = static_cast<std::uint32_t>(cur);
  }
  out.size_ = a.size_;
  out.trim();
  return out;
}

BigUint operator*(const BigUint& a, const BigUint& b) {
  if (a.is_zero() || b.is_zero()) return BigUint();
  BigUint out;
  out.ensure_capacity(a.size_ + b.size_);
  std::uint32_t* d = out.limbs();
  std::memset(d, 0, (a.size_ + b.size_) * sizeof(std::uint32_t));
  for (std::uint32_t i = 0; i < a.size_; ++i) {
    std::uint64_t carry = 0;
    std::uint64_t ai = a.limbs()[i];
    for (std::uint32_t j = 0; j < b.size_; ++j) {
      std::uint64_t cur = ai * b.limbs()[j] + d[i + j] + carry;
      d[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    d[i + b.size_] += static_cast<std::uint32_t>(carry);
  }
  out.size_ = a.size_ + b.size_;
  out.trim();
  return out;
}

bool operator==(const BigUint& a, const BigUint& b) {
  if (a.size_ != b.size_) return false;
  return std::memcmp(a.limbs(), b.limbs(), a.size_ * sizeof(std::uint32_t)) == 0;
}

std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
  if (a.size_ != b.size_)
    return a.size_ < b.size_ ? std::strong_ordering::less
                             : std::strong_ordering::greater;
  for (std::uint32_t i = a.size_; i > 0; --i) {
    std::uint32_t x = a.limbs()[i - 1];
    std::uint32_t y = b.limbs()[i - 1];
    if (x != y)
      return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace ecdlp
