#include "ecdlp/dlp.hpp"

#include <chrono>
#include <cmath>
#include <unordered_map>

#include "ecdlp/errors.hpp"

namespace ecdlp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t isqrt_ceil(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

struct CoordKey {
  std::uint64_t x, y;
  bool operator==(const CoordKey&) const = default;
};

struct CoordKeyHash {
  std::size_t operator()(const CoordKey& k) const {
    std::uint64_t h = k.x * 0x9e3779b97f4a7c15ull;
    h ^= k.y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

CoordKey key_of(const Point& pt) {
  return CoordKey{pt.x().value_u64(), pt.y().value_u64()};
}

}  // namespace

const char* attack_method_name(AttackMethod m) {
  return m == AttackMethod::linear_walk ? "linear_walk" : "bsgs";
}

AttackResult linear_walk(const DomainParams& params, const Point& q,
                         std::optional<std::uint64_t> cap) {
  if (q.is_infinity())
    throw IdentityTarget("public key is the identity; no d in [1, n-1] exists");
  if (!params.n.fits_u64())
    throw CapExceeded("group order " + params.n.to_decimal() +
                      " is far beyond any walkable size");
  std::uint64_t limit = cap.value_or(kDefaultWalkCap);
  std::uint64_t n = params.n.to_u64();

  auto start = Clock::now();
  OpCountScope ops;
  Point acc = params.g;
  std::uint64_t k = 1;
  while (!(acc == q) && k < n) {
    if (k > limit)
      throw CapExceeded("walk exceeded the safety cap of " +
                        std::to_string(limit) + " additions");
    acc = point_add(params.curve, acc, params.g);
    ++k;
  }
  if (!(acc == q))
    throw NotInSubgroup("no k in [1, n-1] reaches the target; Q is outside <G>");
  return AttackResult{BigUint(k), AttackMethod::linear_walk, ops.point_adds(),
                      k, seconds_since(start)};
}

AttackResult bsgs(const DomainParams& params, const Point& q) {
  if (q.is_infinity())
    throw IdentityTarget("public key is the identity; no d in [1, n-1] exists");
  if (!params.n.fits_u64())
    throw CapExceeded("group order " + params.n.to_decimal() +
                      " is far beyond any tabulable size");
  std::uint64_t n = params.n.to_u64();
  std::uint64_t m = isqrt_ceil(n);

  auto start = Clock::now();
  OpCountScope ops;

  // Baby steps: j*G for j in [0, m), built incrementally.
  std::unordered_map<CoordKey, std::uint64_t, CoordKeyHash> baby;
  baby.reserve(m);
  Point step = params.g;
  for (std::uint64_t j = 1; j < m; ++j) {
    baby.emplace(key_of(step), j);
    if (j + 1 < m) step = point_add(params.curve, step, params.g);
  }

  // One more addition completes m*G; its negation is the giant stride.
  Point stride = m > 1 ? point_add(params.curve, step, params.g) : params.g;
  if (!stride.is_infinity())
    stride = Point::affine(stride.x(), -stride.y());

  Point giant = q;
  for (std::uint64_t i = 0; i <= m; ++i) {
    std::uint64_t j_match = 0;
    bool hit = false;
    if (giant.is_infinity()) {
      // Q = i*m*G exactly
      j_match = 0;
      hit = true;
    } else if (auto it = baby.find(key_of(giant)); it != baby.end()) {
      j_match = it->second;
      hit = true;
    }
    if (hit) {
      std::uint64_t d = (i * m + j_match) % n;
      if (d == 0) break;  // would mean Q = identity; already excluded
      std::uint64_t spent = ops.point_adds();
      BigUint d_big(d);
      if (!verify_solution(params, q, d_big))
        throw NotInSubgroup("collision index does not solve Q = d*G");
      return AttackResult{std::move(d_big), AttackMethod::bsgs, spent, i + 1,
                          seconds_since(start)};
    }
    giant = point_add(params.curve, giant, stride);
  }
  throw NotInSubgroup("no collision after all giant steps; Q is outside <G>");
}

bool verify_solution(const DomainParams& params, const Point& q,
                     const BigUint& d) {
  if (d.is_zero() || d >= params.n) return false;
  return scalar_mul(params.curve, d, params.g) == q;
}

}  // namespace ecdlp
