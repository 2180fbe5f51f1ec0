#include "socksort/stack_machine.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace socksort {

namespace {

template <typename OnEvent>
SockSeq run_stack(const SockSeq& p, const PatternSet& pats, OnEvent&& on_event) {
  std::vector<Sock> stack;
  stack.reserve(p.size());
  std::vector<Sock> out;
  out.reserve(p.size());
  auto emit_pop = [&](Sock s) {
    on_event(SortEvent{SortEvent::Kind::Pop, s, out.size()});
    out.push_back(s);
  };
  auto top_violates = [&] {
    return std::any_of(pats.begin(), pats.end(),
                       [&](const Pattern& pat) { return contains_ending_at_last(stack, pat); });
  };
  // The candidate sits tentatively on top; the element under it is what a
  // pop would remove.
  for (std::size_t i = 0; i < p.size(); ++i) {
    stack.push_back(p[i]);
    while (stack.size() > 1 && top_violates()) {
      Sock popped = stack[stack.size() - 2];
      stack.erase(stack.end() - 2);
      emit_pop(popped);
    }
    on_event(SortEvent{SortEvent::Kind::Push, p[i], i});
  }
  while (!stack.empty()) {
    emit_pop(stack.back());
    stack.pop_back();
  }
  return SockSeq{std::move(out)};
}

}  // namespace

SockSeq phi(const SockSeq& p, const PatternSet& pats) {
  return run_stack(p, pats, [](const SortEvent&) {});
}

SortTrace phi_traced(const SockSeq& p, const PatternSet& pats) {
  SortTrace trace;
  trace.output = run_stack(p, pats, [&](const SortEvent& e) { trace.events.push_back(e); });
  return trace;
}

IterateResult phi_iterate(const SockSeq& p, const PatternSet& pats, std::size_t max_k) {
  if (max_k == 0) throw std::invalid_argument("phi_iterate needs max_k >= 1");
  IterateResult r{IterateVerdict::NotSortedWithin, 0, p, {p}};
  std::unordered_set<SockSeq, SockSeqHash> seen{standardize(p)};
  if (is_sorted(p)) {
    r.verdict = IterateVerdict::Sorted;
    return r;
  }
  while (r.passes < max_k) {
    r.final = phi(r.final, pats);
    ++r.passes;
    r.history.push_back(r.final);
    if (is_sorted(r.final)) {
      r.verdict = IterateVerdict::Sorted;
      return r;
    }
    if (!seen.insert(standardize(r.final)).second) {
      r.verdict = IterateVerdict::NeverSorts;
      return r;
    }
  }
  return r;
}

bool is_one_stack_sortable(const SockSeq& p, const PatternSet& pats) {
  return is_sorted(phi(p, pats));
}

const char* to_string(IterateVerdict v) {
  switch (v) {
    case IterateVerdict::Sorted: return "Sorted";
    case IterateVerdict::NeverSorts: return "NeverSorts";
    case IterateVerdict::NotSortedWithin: return "NotSortedWithin";
  }
  return "?";
}

const char* to_string(SortEvent::Kind k) {
  return k == SortEvent::Kind::Push ? "push" : "pop";
}

}  // namespace socksort
