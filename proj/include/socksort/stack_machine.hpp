#pragma once

#include <optional>
#include <vector>

#include "socksort/core.hpp"
#include "socksort/patterns.hpp"

namespace socksort {

struct SortEvent {
  enum class Kind { Push, Pop };
  Kind kind;
  Sock sock;
  /// Input index for a push, output index for a pop.
  std::size_t index;

  friend bool operator==(const SortEvent&, const SortEvent&) = default;
};

/// Event log of one pass through a pattern-avoiding stack.
struct SortTrace {
  std::vector<SortEvent> events;
  SockSeq output;
};

/**
 * One pass of the pattern-avoiding stack. Each input sock pops the top while
 * pushing it would create an occurrence of a pattern in `pats` (read bottom
 * to top), then is pushed; the remaining stack is flushed at the end.
 */
SockSeq phi(const SockSeq& p, const PatternSet& pats);
SortTrace phi_traced(const SockSeq& p, const PatternSet& pats);

enum class IterateVerdict {
  Sorted,           // sorted after `passes` passes
  NeverSorts,       // an equivalence class repeated before sorting
  NotSortedWithin,  // budget exhausted
};

struct IterateResult {
  IterateVerdict verdict;
  /// Passes applied; equals the smallest k with is_sorted(phi^k(p)) when Sorted.
  std::size_t passes = 0;
  SockSeq final;
  /// phi^0(p), phi^1(p), ..., phi^passes(p).
  std::vector<SockSeq> history;
};

/// Throws std::invalid_argument when max_k is 0.
IterateResult phi_iterate(const SockSeq& p, const PatternSet& pats, std::size_t max_k);

bool is_one_stack_sortable(const SockSeq& p, const PatternSet& pats);

const char* to_string(IterateVerdict v);
const char* to_string(SortEvent::Kind k);

}  // namespace socksort
