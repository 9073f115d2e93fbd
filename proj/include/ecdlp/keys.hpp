#pragma once

// Key-pair generation over a validated domain tuple: private scalar d drawn
// uniformly from [1, n-1], public point Q = d*G.

#include <cstdint>

#include "ecdlp/bigint.hpp"
#include "ecdlp/params.hpp"

namespace ecdlp {

struct KeyPair {
  BigUint d;  // private key, 1 <= d <= n-1
  Point q;    // public key, d*G, never the identity
};

// Rejection sampling over the minimal bit width of n-1 keeps d exactly
// uniform. The generator is splitmix64 seeded by `seed`: reproducible, and
// explicitly not cryptographically secure.
KeyPair keygen(const DomainParams& params, std::uint64_t seed);

// Q = d*G by double-and-add. Run under an OpCountScope to observe the
// O(log d) group-operation cost that attack walks are compared against.
// Throws KeyOutOfRange unless 1 <= d <= n-1.
Point derive_public(const DomainParams& params, const BigUint& d);

}  // namespace ecdlp
