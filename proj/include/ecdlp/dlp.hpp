#pragma once

// Discrete-log solvers. linear_walk is the attack under study: accumulate G,
// counting iterations, until the accumulator equals Q — worst case n-2 group
// additions, i.e. recovering d is never harder than computing Q the naive
// way. bsgs is the independent meet-in-the-middle oracle at ~2*sqrt(n)
// operations. Both are internally sequential; distinct invocations are
// independent and may run concurrently.

#include <cstdint>
#include <optional>

#include "ecdlp/bigint.hpp"
#include "ecdlp/opcount.hpp"
#include "ecdlp/params.hpp"

namespace ecdlp {

enum class AttackMethod { linear_walk, bsgs };

const char* attack_method_name(AttackMethod m);

struct AttackResult {
  BigUint d_recovered;
  AttackMethod method;
  std::uint64_t group_ops;   // exact group-law evaluations spent
  std::uint64_t iterations;  // walk: final k; bsgs: giant-step probes
  double wall_seconds;
};

inline constexpr std::uint64_t kDefaultWalkCap = 100'000'000;

// The walk: accumulator = G, k = 1; add G and bump k until accumulator = Q
// or k = n. Success returns d = k after exactly d-1 additions.
//   IdentityTarget   Q is the identity (no d in [1, n-1] exists)
//   NotInSubgroup    k reached n without a match (Q outside <G>)
//   CapExceeded      the safety cap was hit first (default 10^8 additions)
AttackResult linear_walk(const DomainParams& params, const Point& q,
                         std::optional<std::uint64_t> cap = std::nullopt);

// Baby-step giant-step: m = ceil(sqrt(n)) baby steps j*G hashed by canonical
// coordinates, then giant steps Q - i*m*G; d = i*m + j reduced into [1, n-1].
// At most 2m + 1 group operations.
AttackResult bsgs(const DomainParams& params, const Point& q);

// True iff 1 <= d <= n-1 and d*G = Q. Total: never throws.
bool verify_solution(const DomainParams& params, const Point& q,
                     const BigUint& d);

}  // namespace ecdlp
