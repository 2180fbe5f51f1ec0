#include "socksort/multipattern.hpp"

#include <algorithm>

#include "socksort/preimage_fertility.hpp"

namespace socksort {

bool CountTable::matches_power_of_two(std::size_t n) const {
  return s_n[n - 1] == (std::uint64_t{1} << (n - 1));
}

bool CountTable::matches_pascal(std::size_t n, std::size_t r) const {
  return s_nr[n - 1][r - 1] == binomial(n - 1, r - 1);
}

bool CountTable::matches_shifted(std::size_t n, std::size_t r) const {
  return s_nr[n - 1][r - 1] == binomial(n, r - 1);
}

bool CountTable::rows_sum() const {
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::uint64_t sum = 0;
    for (std::uint64_t c : s_nr[n - 1]) sum += c;
    if (sum != s_n[n - 1]) return false;
  }
  return true;
}

CountTable count_one_stack_sortable(std::size_t n_max, const PatternSet& pats) {
  if (n_max < 1 || n_max > kMaxCountLength) {
    throw BoundError("count_one_stack_sortable needs 1 <= n_max <= " +
                     std::to_string(kMaxCountLength));
  }
  CountTable t;
  t.n_max = n_max;
  t.pats = pats;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> row(n, 0);
    for_each_standardized(n, [&](const SockSeq& p) {
      if (is_one_stack_sortable(p, pats)) ++row[p.max_id()];
    });
    std::uint64_t total = 0;
    for (std::uint64_t c : row) total += c;
    t.s_n.push_back(total);
    t.s_nr.push_back(std::move(row));
  }
  return t;
}

std::vector<SockSeq> build_one_stack_sortable(std::size_t n) {
  // by_length[len] holds every generated sequence of that length
  std::vector<std::vector<SockSeq>> by_length(n + 1);
  by_length[0].push_back(SockSeq{});
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t inner = 0; inner < len; ++inner) {
      const std::size_t tail = len - 1 - inner;
      for (const SockSeq& s1 : by_length[inner]) {
        // x is fresh: shift s1 up by one and let x be 0
        SockSeq p{0};
        for (Sock s : s1) p.push_back(s + 1);
        p.append(repeat(0, tail));
        by_length[len].push_back(standardize(p));
      }
    }
    std::sort(by_length[len].begin(), by_length[len].end());
  }
  return by_length[n];
}

std::vector<ModeSurveyRow> survey_aba_aab_modes(std::size_t n_max) {
  std::vector<ModeSurveyRow> rows;
  for (Mode aba_mode : {Mode::Classical, Mode::Consecutive}) {
    for (Mode aab_mode : {Mode::Classical, Mode::Consecutive}) {
      PatternSet pats{{Pattern{SockSeq{0, 1, 0}, aba_mode}, Pattern{SockSeq{0, 0, 1}, aab_mode}}};
      CountTable t = count_one_stack_sortable(n_max, pats);
      bool all = true;
      for (std::size_t n = 1; n <= n_max; ++n) all = all && t.matches_power_of_two(n);
      rows.push_back({pats, t.s_n, all});
    }
  }
  return rows;
}

bool is_flanked_aba_shape(const SockSeq& shape) {
  // standardized, so the a's are 0 and the single b is 1
  std::size_t ones = 0, where = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (shape[i] == 1) {
      ++ones;
      where = i;
    } else if (shape[i] != 0) {
      return false;
    }
  }
  return ones == 1 && where > 0 && where + 1 < shape.size();
}

SockSeq alternating_witness(std::size_t m) {
  SockSeq p;
  for (Sock s = 1; s < m; ++s) {
    p.push_back(0);
    p.push_back(s);
  }
  p.push_back(0);
  return p;
}

bool contains_abba_or_abca(const Pattern& pat) {
  return contains(pat.shape, Pattern{SockSeq{0, 1, 1, 0}, Mode::Classical}) ||
         contains(pat.shape, Pattern{SockSeq{0, 1, 2, 0}, Mode::Classical});
}

WitnessCase classify(const PatternSet& g) {
  std::size_t with = 0;
  for (const Pattern& p : g) with += contains_abba_or_abca(p) ? 1 : 0;
  return (with == 0 || with == g.size()) ? WitnessCase::Case1 : WitnessCase::Case2;
}

UnsortableWitness unsortable_witness(const PatternSet& g, std::size_t m,
                                     std::size_t search_length, std::size_t max_k) {
  for (const Pattern& p : g) {
    if (is_flanked_aba_shape(p.shape)) {
      throw std::invalid_argument("pattern " + p.str() + " has the excluded shape a...aba...a");
    }
  }
  if (m < 2) throw std::invalid_argument("unsortable_witness needs m >= 2");

  UnsortableWitness out{classify(g), WitnessVerdict::SearchExhausted, std::nullopt, std::nullopt};
  if (out.which == WitnessCase::Case2) {
    SockSeq p = alternating_witness(m);
    IterateResult it = phi_iterate(p, g, max_k);
    out.verdict = it.verdict == IterateVerdict::NeverSorts ? WitnessVerdict::NeverSorts
                                                           : WitnessVerdict::Case2Failed;
    out.witness = std::move(p);
    out.iterate = std::move(it);
    return out;
  }
  for (std::size_t len = 1; len <= search_length; ++len) {
    StandardizedEnumerator e(len);
    while (e.next()) {
      const SockSeq& p = e.current();
      if (is_sorted(p)) continue;
      IterateResult it = phi_iterate(p, g, max_k);
      if (it.verdict == IterateVerdict::NeverSorts) {
        out.verdict = WitnessVerdict::NeverSorts;
        out.witness = p;
        out.iterate = std::move(it);
        return out;
      }
    }
  }
  return out;
}

const char* to_string(WitnessCase c) { return c == WitnessCase::Case1 ? "Case1" : "Case2"; }

const char* to_string(WitnessVerdict v) {
  switch (v) {
    case WitnessVerdict::NeverSorts: return "NeverSorts";
    case WitnessVerdict::Case2Failed: return "Case2Failed";
    case WitnessVerdict::SearchExhausted: return "SearchExhausted";
  }
  return "?";
}

}  // namespace socksort
