#include "socksort/preimage_fertility.hpp"

#include <string>

#include "socksort/stack_machine.hpp"

namespace socksort {

PreimageReport preimages_of(const SockSeq& target, const PatternSet& pats, std::size_t bound) {
  if (target.size() > bound) {
    throw BoundError("preimage search is limited to length " + std::to_string(bound) +
                     ", target has length " + std::to_string(target.size()));
  }
  PreimageReport report{standardize(target), pats, {}};
  for (SockSeq& q : enumerate_multiset_arrangements(SockMultiset::of(report.target))) {
    if (standardize(phi(q, pats)) == report.target) report.preimages.push_back(std::move(q));
  }
  return report;
}

namespace {
void check_fertility_args(std::size_t m, std::size_t n) {
  if (m < 1 || m + 1 > n) {
    throw std::invalid_argument("fertility witness needs 1 <= m <= n-1 (m=" + std::to_string(m) +
                                ", n=" + std::to_string(n) + ")");
  }
}
}  // namespace

SockSeq fertility_witness_cons(std::size_t m, std::size_t n) {
  check_fertility_args(m, n);
  SockSeq q{0};
  q.append(repeat(1, m));
  for (std::size_t s = 2; q.size() < n; ++s) q.push_back(static_cast<Sock>(s));
  return q;
}

SockSeq fertility_witness_aba(std::size_t m, std::size_t n) {
  check_fertility_args(m, n);
  SockSeq q;
  for (Sock s = 0; s + 1 < n; ++s) {
    q.push_back(s);
    if (s + 1 == m) q.push_back(s);
  }
  return q;
}

SockSeq staircase_target(std::size_t n, std::size_t k) {
  SockSeq q;
  for (Sock s = 0; s < n; ++s) q.push_back(s);
  q.append(repeat(static_cast<Sock>(n), k));
  return q;
}

std::uint64_t staircase_preimage_count(std::size_t n, std::size_t k, const PatternSet& pats,
                                       std::size_t bound) {
  if (n == 0 || k == 0) throw std::invalid_argument("staircase needs n >= 1 and k >= 1");
  if (n + k > bound) {
    throw BoundError("staircase n + k = " + std::to_string(n + k) + " exceeds bound " +
                     std::to_string(bound));
  }
  return preimages_of(staircase_target(n, k), pats, bound).count();
}

}  // namespace socksort
