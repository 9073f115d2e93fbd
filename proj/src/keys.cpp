#include "ecdlp/keys.hpp"

#include "ecdlp/errors.hpp"
#include "ecdlp/rng.hpp"

namespace ecdlp {

KeyPair keygen(const DomainParams& params, std::uint64_t seed) {
  SplitMix64 gen(seed);
  std::uint64_t n = params.n.to_u64();
  std::uint64_t d = uniform_in(gen, 1, n - 1);
  BigUint d_big(d);
  return KeyPair{d_big, scalar_mul(params.curve, d_big, params.g)};
}

Point derive_public(const DomainParams& params, const BigUint& d) {
  if (d.is_zero() || d >= params.n)
    throw KeyOutOfRange("private key must lie in [1, n-1], got " +
                        d.to_decimal());
  return scalar_mul(params.curve, d, params.g);
}

}  // namespace ecdlp
