#pragma once

// Construction and validation of the shared domain tuple (p, a, b, G, n, h)
// for desk-scale curves. Point counting is a naive O(p) enumeration with a
// hard cap; everything here is meant for curves small enough to verify
// exhaustively.

#include <cstdint>
#include <vector>

#include "ecdlp/bigint.hpp"
#include "ecdlp/curve.hpp"

namespace ecdlp {

inline constexpr std::uint64_t kEnumerationCap = 10'000'000;

struct DomainParams {
  CurveParams curve;
  Point g;    // base point, never the identity
  BigUint n;  // prime order of g
  BigUint h;  // cofactor: group size / n
};

// Quadratic-residue table for one prime, reusable across all (a, b) pairs at
// that prime. Construction is O(p) and throws CapExceeded above `cap`.
class QrTable {
 public:
  explicit QrTable(const PrimeModulus& p, std::uint64_t cap = kEnumerationCap);

  // #E(F_p) for y^2 = x^3 + ax + b: one x-sweep with residue lookups,
  // plus the point at infinity.
  std::uint64_t count_curve(std::uint64_t a, std::uint64_t b) const;

 private:
  std::uint64_t p_;
  std::vector<bool> is_square_;
};

// #E(F_p) by exhaustive enumeration over x with quadratic-residue testing:
// 2 points for a square rhs != 0, 1 for rhs = 0, 0 for a non-residue.
std::uint64_t count_points(const CurveParams& c,
                           std::uint64_t cap = kEnumerationCap);

// Smallest m >= 1 with m*P = infinity, found by repeated addition. Costs
// one point enumeration (for the iteration cap) plus an O(order) walk.
std::uint64_t point_order(const CurveParams& c, const Point& pt,
                          std::uint64_t cap = kEnumerationCap);

// Builds the full tuple: counts the group, takes n = largest prime factor,
// h = #E / n, and clears the cofactor off the first point (ascending x,
// smaller y first) that survives: G = h*P with G != infinity. The scan is
// fully deterministic; `seed` is accepted for interface symmetry with the
// other constructors but the policy never consults it.
DomainParams build_domain_params(const CurveParams& c, std::uint64_t seed,
                                 std::uint64_t cap = kEnumerationCap);

// Checks every invariant of the tuple and reports all failures at once via
// ValidationError: OffCurveGenerator, WrongOrder, CompositeOrder,
// CofactorMismatch, HasseViolation.
DomainParams validate_params(const DomainParams& d,
                             std::uint64_t cap = kEnumerationCap);

// Seeded point sampling: draws x uniformly until x^3 + ax + b is a square,
// returns (x, smaller root). Same seed, same point.
Point random_point(const CurveParams& c, std::uint64_t seed);

// For each prime p in [p_min, p_max], scans (a, b) pairs in a fixed
// deterministic order (ascending a+b, then ascending a) and keeps the first
// non-singular curve whose group order satisfies the predicate (prime #E
// when want_prime_order). Results come back in ascending-p order; primes
// where no curve qualifies are skipped.
std::vector<DomainParams> curve_search(std::uint64_t p_min, std::uint64_t p_max,
                                       bool want_prime_order,
                                       std::uint64_t cap = kEnumerationCap);

}  // namespace ecdlp
