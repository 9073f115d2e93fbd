#include "ecdlp/params.hpp"

#include <cassert>

#include "ecdlp/errors.hpp"
#include "ecdlp/rng.hpp"

namespace ecdlp {

namespace {

std::uint64_t largest_prime_factor(std::uint64_t n) {
  std::uint64_t largest = 0;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    while (n % d == 0) {
      largest = d;
      n /= d;
    }
  }
  if (n > 1) largest = n;
  return largest;
}

}  // namespace

QrTable::QrTable(const PrimeModulus& p, std::uint64_t cap) : p_(p.value_u64()) {
  if (p_ > cap)
    throw CapExceeded("p = " + p.value().to_decimal() +
                      " exceeds the enumeration cap " + std::to_string(cap));
  if (p_ >= (1ull << 32))
    throw CapExceeded("enumeration supports 32-bit primes only");
  is_square_.assign(p_, false);
  for (std::uint64_t y = 0; y < p_; ++y) is_square_[y * y % p_] = true;
}

std::uint64_t QrTable::count_curve(std::uint64_t a, std::uint64_t b) const {
  std::uint64_t count = 1;  // the point at infinity
  for (std::uint64_t x = 0; x < p_; ++x) {
    std::uint64_t rhs = ((x * x % p_) * x % p_ + a * x % p_ + b % p_) % p_;
    if (rhs == 0)
      count += 1;
    else if (is_square_[rhs])
      count += 2;
  }
  return count;
}

std::uint64_t count_points(const CurveParams& c, std::uint64_t cap) {
  QrTable table(c.p, cap);
  return table.count_curve(c.a.value_u64(), c.b.value_u64());
}

std::uint64_t point_order(const CurveParams& c, const Point& pt,
                          std::uint64_t cap) {
  if (!is_on_curve(c, pt)) throw NotOnCurve("point is not on the curve");
  if (pt.is_infinity()) return 1;
  std::uint64_t bound = count_points(c, cap);
  Point acc = pt;
  std::uint64_t order = 1;
  while (!acc.is_infinity()) {
    acc = point_add(c, acc, pt);
    ++order;
    assert(order <= bound);
  }
  return order;
}

DomainParams build_domain_params(const CurveParams& c,
                                 std::uint64_t /*seed*/, std::uint64_t cap) {
  validate_curve(c);
  std::uint64_t group_size = count_points(c, cap);
  std::uint64_t n = largest_prime_factor(group_size);
  if (n < 2)
    throw NoPrimeOrderSubgroup("group of size " + std::to_string(group_size) +
                               " has no prime factor");
  std::uint64_t cofactor = group_size / n;

  // Deterministic candidate scan: ascending x, smaller root first. Cofactor
  // clearing maps any candidate whose h-multiple survives onto a point of
  // exact order n.
  std::uint64_t p = c.p.value_u64();
  BigUint h_big(cofactor);
  for (std::uint64_t x = 0; x < p; ++x) {
    FieldElement fx(x, c.p);
    FieldElement rhs = fx * fx * fx + c.a * fx + c.b;
    auto root = fe_sqrt(rhs);
    if (!root) continue;
    std::uint64_t r = root->value_u64();
    std::uint64_t ys[2] = {r, r == 0 ? 0 : p - r};
    for (int i = 0; i < (ys[0] == ys[1] ? 1 : 2); ++i) {
      Point candidate = Point::affine(fx, FieldElement(ys[i], c.p));
      Point g = scalar_mul(c, h_big, candidate);
      if (!g.is_infinity())
        return DomainParams{c, g, BigUint(n), h_big};
    }
  }
  throw NoPrimeOrderSubgroup(
      "no candidate point survives cofactor clearing (group size " +
      std::to_string(group_size) + ")");
}

DomainParams validate_params(const DomainParams& d, std::uint64_t cap) {
  // The enumeration is the gate: curves beyond the cap are refused before
  // any other check runs.
  std::uint64_t group_size = count_points(d.curve, cap);

  if (!d.n.fits_u64())
    throw CapExceeded("claimed order " + d.n.to_decimal() +
                      " exceeds the primality checker cap of 2^64");

  std::vector<std::string> violations;
  bool generator_ok = !d.g.is_infinity() && is_on_curve(d.curve, d.g);
  if (!generator_ok) violations.push_back("OffCurveGenerator");
  // n*G is only meaningful for a genuine curve point
  if (generator_ok && !(scalar_mul(d.curve, d.n, d.g) == Point::infinity()))
    violations.push_back("WrongOrder");
  if (!detail::is_prime_u64(d.n.to_u64()))
    violations.push_back("CompositeOrder");
  if (!(d.n * d.h == BigUint(group_size)))
    violations.push_back("CofactorMismatch");

  // Hasse: |#E - (p + 1)| <= 2*sqrt(p), checked exactly as
  // (#E - (p+1))^2 <= 4p.
  BigUint count_big(group_size);
  BigUint p_plus_1 = d.curve.p.value() + BigUint(1);
  BigUint diff = count_big > p_plus_1 ? count_big - p_plus_1 : p_plus_1 - count_big;
  if (diff * diff > BigUint(4) * d.curve.p.value())
    violations.push_back("HasseViolation");

  if (!violations.empty()) throw ValidationError(std::move(violations));
  return d;
}

Point random_point(const CurveParams& c, std::uint64_t seed) {
  SplitMix64 gen(seed);
  std::uint64_t p = c.p.value_u64();
  for (;;) {
    std::uint64_t x = uniform_in(gen, 0, p - 1);
    FieldElement fx(x, c.p);
    FieldElement rhs = fx * fx * fx + c.a * fx + c.b;
    if (auto root = fe_sqrt(rhs))
      return Point::affine(fx, *root);
  }
}

std::vector<DomainParams> curve_search(std::uint64_t p_min, std::uint64_t p_max,
                                       bool want_prime_order,
                                       std::uint64_t cap) {
  if (p_max > cap)
    throw CapExceeded("p_max " + std::to_string(p_max) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  std::vector<DomainParams> found;
  for (std::uint64_t p = std::max<std::uint64_t>(p_min, 5); p <= p_max; ++p) {
    if (!detail::is_prime_u64(p)) continue;
    PrimeModulus modulus{BigUint(p)};
    QrTable table(modulus, cap);
    bool done = false;
    // Diagonal scan (ascending a+b, then ascending a): whole families can be
    // dead for the order predicate at fixed a (every a = 0 curve over
    // p = 2 mod 3 has exactly p+1 points), so both coefficients must vary
    // early for the scan to terminate quickly.
    for (std::uint64_t s = 0; s <= 2 * (p - 1) && !done; ++s) {
      std::uint64_t a_lo = s >= p ? s - (p - 1) : 0;
      std::uint64_t a_hi = std::min(s, p - 1);
      for (std::uint64_t a = a_lo; a <= a_hi && !done; ++a) {
        std::uint64_t b = s - a;
        CurveParams c(modulus, BigUint(a), BigUint(b));
        FieldElement disc = FieldElement(4, modulus) * c.a * c.a * c.a +
                            FieldElement(27, modulus) * c.b * c.b;
        if (disc.is_zero()) continue;
        std::uint64_t group_size = table.count_curve(a, b);
        if (want_prime_order && !detail::is_prime_u64(group_size)) continue;
        try {
          found.push_back(build_domain_params(c, 0, cap));
          done = true;
        } catch (const NoPrimeOrderSubgroup&) {
          // candidate scan failed; keep looking at this prime
        }
      }
    }
  }
  return found;
}

}  // namespace ecdlp
