#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "socksort/core.hpp"
#include "socksort/patterns.hpp"

namespace socksort {

/// Raised when an exhaustive search would exceed its configured size bound.
class BoundError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kDefaultPreimageBound = 10;

struct PreimageReport {
  SockSeq target;  // standardized
  PatternSet map_spec;
  std::vector<SockSeq> preimages;  // standardized, lexicographic
  std::size_t count() const { return preimages.size(); }
};

/**
 * All standardized q over the target's sock multiset with
 * standardize(phi(q, pats)) == standardize(target). Factorial in the target
 * length; throws BoundError past `bound`.
 */
PreimageReport preimages_of(const SockSeq& target, const PatternSet& pats,
                            std::size_t bound = kDefaultPreimageBound);

/// a1 a2^m a3 a4 ... a(n-m+1). Throws std::invalid_argument unless 1 <= m <= n-1.
SockSeq fertility_witness_cons(std::size_t m, std::size_t n);
/// a1 ... a(n-1) with a_m doubled. Throws std::invalid_argument unless 1 <= m <= n-1.
SockSeq fertility_witness_aba(std::size_t m, std::size_t n);

/// a1 a2 ... an a(n+1)^k, standardized.
SockSeq staircase_target(std::size_t n, std::size_t k);
/// Preimage count of staircase_target(n, k). Throws std::invalid_argument for
/// n or k of zero and BoundError when n + k exceeds `bound`.
std::uint64_t staircase_preimage_count(std::size_t n, std::size_t k, const PatternSet& pats,
                                       std::size_t bound = kDefaultPreimageBound);

}  // namespace socksort
