#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "ecdlp/errors.hpp"
#include "ecdlp/params.hpp"
#include "ecdlp/rng.hpp"
#include "test_support.hpp"

using namespace ecdlp;
using test::e17_curve;
using test::e17_params;
using test::e17_point;
using test::f5_curve;
using test::make_point;

namespace {

// Independent oracle: count by enumerating every (x, y) pair.
std::uint64_t count_by_pairs(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  std::uint64_t count = 1;
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y)
      if (y * y % p == ((x * x % p) * x + a * x + b) % p) ++count;
  return count;
}

bool has_violation(const ValidationError& e, const std::string& name) {
  const auto& v = e.violations();
  return std::find(v.begin(), v.end(), name) != v.end();
}

}  // namespace

TEST_CASE("point counting matches hand-enumerated curves") {
  CHECK(count_points(e17_curve()) == 19);
  CHECK(count_points(f5_curve()) == 9);
}

TEST_CASE("x-sweep counting agrees with full pair enumeration") {
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull, 97ull, 101ull}) {
    PrimeModulus m(p);
    SplitMix64 gen(p);
    for (int i = 0; i < 12; ++i) {
      std::uint64_t a = gen.next() % p;
      std::uint64_t b = gen.next() % p;
      CurveParams c(m, BigUint(a), BigUint(b));
      CHECK(count_points(c) == count_by_pairs(p, a, b));
    }
  }
}

TEST_CASE("point counts sit inside the Hasse interval") {
  for (std::uint64_t p : {17ull, 101ull, 1009ull, 10007ull}) {
    PrimeModulus m(p);
    SplitMix64 gen(p ^ 0x51);
    for (int i = 0; i < 6; ++i) {
      CurveParams c(m, BigUint(gen.next() % p), BigUint(gen.next() % p));
      std::uint64_t n = count_points(c);
      std::int64_t diff = static_cast<std::int64_t>(n) -
                          static_cast<std::int64_t>(p + 1);
      CHECK(static_cast<std::uint64_t>(diff * diff) <= 4 * p);
    }
  }
}

TEST_CASE("counting refuses beyond the enumeration cap") {
  CurveParams c(PrimeModulus(10000019), BigUint(1), BigUint(1));
  CHECK_THROWS_AS(count_points(c), CapExceeded);
  CHECK_NOTHROW(count_points(c, 10000019));  // explicit larger cap
}

TEST_CASE("point order by iteration") {
  CHECK(point_order(e17_curve(), e17_point(5, 1)) == 19);
  CHECK(point_order(e17_curve(), Point::infinity()) == 1);
  CHECK_THROWS_AS(point_order(e17_curve(), e17_point(5, 2)), NotOnCurve);

  // on the 9-point F_5 curve every order divides 9
  CurveParams c = f5_curve();
  std::uint64_t group_size = count_points(c);
  for (std::uint64_t x = 0; x < 5; ++x)
    for (std::uint64_t y = 0; y < 5; ++y) {
      Point pt = make_point(c, x, y);
      if (!is_on_curve(c, pt)) continue;
      std::uint64_t order = point_order(c, pt);
      CHECK((order == 1 || order == 3 || order == 9));
      CHECK(group_size % order == 0);
    }
}

TEST_CASE("tuple construction on E17") {
  DomainParams d = build_domain_params(e17_curve(), 0);
  // N = 19 is prime, so h = 1 and the first point of the deterministic scan
  // wins: x = 0 has rhs = 2, whose smaller root mod 17 is 6.
  CHECK(d.n == BigUint(19));
  CHECK(d.h == BigUint(1));
  CHECK(d.g == e17_point(0, 6));
  CHECK_NOTHROW(validate_params(d));
  CHECK(point_order(d.curve, d.g) == 19);
}

TEST_CASE("tuple construction clears the cofactor on the F_5 curve") {
  DomainParams d = build_domain_params(f5_curve(), 123);
  CHECK(d.n == BigUint(3));
  CHECK(d.h == BigUint(3));
  CHECK(d.g == make_point(f5_curve(), 2, 1));  // 3*(0,1)
  CHECK(point_order(d.curve, d.g) == 3);
  CHECK_NOTHROW(validate_params(d));
}

TEST_CASE("rebuilding yields an identical tuple") {
  DomainParams a = build_domain_params(e17_curve(), 42);
  DomainParams b = build_domain_params(e17_curve(), 42);
  CHECK(a.g == b.g);
  CHECK(a.n == b.n);
  CHECK(a.h == b.h);
}

TEST_CASE("validation accepts the canonical E17 tuple") {
  CHECK_NOTHROW(validate_params(e17_params()));
}

TEST_CASE("validation reports every failed invariant") {
  DomainParams bad = e17_params();
  bad.n = BigUint(18);
  try {
    validate_params(bad);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, "CompositeOrder"));
    CHECK(has_violation(e, "WrongOrder"));
    CHECK(has_violation(e, "CofactorMismatch"));
    CHECK_FALSE(has_violation(e, "OffCurveGenerator"));
    CHECK_FALSE(has_violation(e, "HasseViolation"));
  }

  DomainParams off = e17_params();
  off.g = e17_point(5, 2);
  try {
    validate_params(off);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(has_violation(e, "OffCurveGenerator"));
  }

  DomainParams identity = e17_params();
  identity.g = Point::infinity();
  CHECK_THROWS_AS(validate_params(identity), ValidationError);

  DomainParams wrong_h = e17_params();
  wrong_h.h = BigUint(2);
  try {
    validate_params(wrong_h);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(e.violations() == std::vector<std::string>{"CofactorMismatch"});
  }
}

TEST_CASE("random points are on the curve and seed-stable") {
  CurveParams c = e17_curve();
  Point first = random_point(c, 7);
  CHECK(random_point(c, 7) == first);
  CHECK_FALSE(first.is_infinity());
  std::set<std::uint64_t> xs;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Point pt = random_point(c, seed);
    CHECK(is_on_curve(c, pt));
    CHECK_FALSE(pt.is_infinity());
    xs.insert(pt.x().value_u64());
  }
  CHECK(xs.size() > 3);  // draws actually move around

  CurveParams big(PrimeModulus(10007), BigUint(1), BigUint(6));
  for (std::uint64_t seed = 0; seed < 25; ++seed)
    CHECK(is_on_curve(big, random_point(big, seed)));
}

TEST_CASE("curve search finds prime-order tuples") {
  auto found = curve_search(17, 17, true);
  REQUIRE_FALSE(found.empty());
  for (const auto& d : found) {
    CHECK(d.curve.p.value_u64() == 17);
    CHECK(d.h == BigUint(1));
    CHECK(detail::is_prime_u64(d.n.to_u64()));
    CHECK_NOTHROW(validate_params(d));
  }

  auto tiny = curve_search(5, 5, true);
  for (const auto& d : tiny) {
    CHECK(d.h == BigUint(1));
    CHECK(detail::is_prime_u64(d.n.to_u64()));
    CHECK_NOTHROW(validate_params(d));
  }
}

TEST_CASE("curve search returns ascending validated tuples") {
  auto found = curve_search(5, 40, false);
  REQUIRE_FALSE(found.empty());
  std::uint64_t last_p = 0;
  for (const auto& d : found) {
    CHECK(d.curve.p.value_u64() > last_p);
    last_p = d.curve.p.value_u64();
    CHECK_NOTHROW(validate_params(d));
  }
  CHECK_THROWS_AS(curve_search(5, kEnumerationCap + 1, true), CapExceeded);
}
