#pragma once

// Exact group-operation instrumentation. Every evaluation of the group law
// bumps a thread-local counter; an OpCountScope reads the number of
// evaluations that happened while it was alive. Doublings go through the
// same entry point as general additions, so they are counted identically.
// Scopes nest, and each solver invocation owns its own scope, so counts are
// never shared across threads.

#include <cstdint>

namespace ecdlp {

struct OpCounter {
  std::uint64_t point_adds = 0;
  bool doublings_included = true;
};

namespace detail {
inline std::uint64_t& group_op_total() {
  thread_local std::uint64_t total = 0;
  return total;
}
inline void tick_group_op() { ++group_op_total(); }
}  // namespace detail

class OpCountScope {
 public:
  OpCountScope() : start_(detail::group_op_total()) {}

  std::uint64_t point_adds() const { return detail::group_op_total() - start_; }
  OpCounter counter() const { return OpCounter{point_adds(), true}; }

 private:
  std::uint64_t start_;
};

}  // namespace ecdlp
