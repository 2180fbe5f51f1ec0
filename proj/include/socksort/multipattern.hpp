#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "socksort/core.hpp"
#include "socksort/patterns.hpp"
#include "socksort/stack_machine.hpp"

namespace socksort {

inline constexpr std::size_t kMaxCountLength = 12;

/// s(n) and s(n, r) for 1 <= r <= n <= n_max.
struct CountTable {
  std::size_t n_max = 0;
  PatternSet pats = maps::aba_aab();
  std::vector<std::uint64_t> s_n;                // s_n[n-1] = s(n)
  std::vector<std::vector<std::uint64_t>> s_nr;  // s_nr[n-1][r-1] = s(n, r)

  bool matches_power_of_two(std::size_t n) const;      // s(n) == 2^(n-1)
  bool matches_pascal(std::size_t n, std::size_t r) const;  // s(n, r) == C(n-1, r-1)
  bool matches_shifted(std::size_t n, std::size_t r) const; // s(n, r) == C(n, r-1)
  bool rows_sum() const;
};

/// Brute-force classification over every standardized sequence. Throws
/// BoundError unless 1 <= n_max <= kMaxCountLength.
CountTable count_one_stack_sortable(std::size_t n_max, const PatternSet& pats = maps::aba_aab());

/// Sequences of the form x s1 x^l (x fresh, s1 generated recursively, l >= 0),
/// standardized, in lexicographic order.
std::vector<SockSeq> build_one_stack_sortable(std::size_t n);

/// Which of the four mode combinations of {aba, aab} yield s(n) = 2^(n-1)
/// for every n <= n_max.
struct ModeSurveyRow {
  PatternSet pats;
  std::vector<std::uint64_t> s_n;
  bool reproduces_power_of_two;
};
std::vector<ModeSurveyRow> survey_aba_aab_modes(std::size_t n_max);

// --- unsortability --------------------------------------------------------

/// Shapes a...aba...a (one b flanked by at least one a on each side).
bool is_flanked_aba_shape(const SockSeq& shape);

enum class WitnessCase { Case1, Case2 };
enum class WitnessVerdict {
  NeverSorts,       // witness confirmed by cycle detection
  Case2Failed,      // the alternating witness sorted or did not cycle
  SearchExhausted,  // bounded search found nothing
};

struct UnsortableWitness {
  WitnessCase which;
  WitnessVerdict verdict;
  std::optional<SockSeq> witness;
  std::optional<IterateResult> iterate;
};

/// a1 a2 a1 a3 a1 ... a1 am a1.
SockSeq alternating_witness(std::size_t m);

/// Patterns containing (classically) an occurrence of abba or abca.
bool contains_abba_or_abca(const Pattern& pat);
WitnessCase classify(const PatternSet& g);

/**
 * Case 2 (mixed G): checks the alternating witness. Case 1: exhaustive
 * search over standardized sequences of length <= search_length for one
 * that never sorts. Throws std::invalid_argument when G has an a...aba...a
 * shape or m < 2.
 */
UnsortableWitness unsortable_witness(const PatternSet& g, std::size_t m,
                                     std::size_t search_length = 6, std::size_t max_k = 20);

const char* to_string(WitnessCase c);
const char* to_string(WitnessVerdict v);

}  // namespace socksort
