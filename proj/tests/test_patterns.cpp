#include <gtest/gtest.h>

#include <functional>
#include <stdexcept>

#include "socksort/patterns.hpp"

using namespace socksort;

namespace {

// Direct subsequence / factor search over all index tuples.
bool contains_oracle(const SockSeq& seq, const Pattern& pat) {
  const std::size_t k = pat.shape.size();
  if (k > seq.size()) return false;
  std::vector<std::size_t> idx(k);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
    if (depth == k) {
      SockSeq picked;
      for (std::size_t i : idx) picked.push_back(seq[i]);
      return standardize(picked) == pat.shape;
    }
    for (std::size_t i = from; i < seq.size(); ++i) {
      if (pat.mode == Mode::Consecutive && depth > 0 && i != idx[depth - 1] + 1) break;
      idx[depth] = i;
      if (rec(depth + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

TEST(Pattern, ParseAndRender) {
  Pattern p = Pattern::parse("~aba");
  EXPECT_EQ(p.mode, Mode::Consecutive);
  EXPECT_EQ(p.shape, SockSeq::parse("aba"));
  EXPECT_EQ(p.str(), "~aba");
  EXPECT_EQ(Pattern::parse("abca").str(), "abca");
}

TEST(Pattern, RejectsNonStandardizedOrEmpty) {
  EXPECT_THROW(Pattern::parse("bab"), std::invalid_argument);
  EXPECT_THROW(Pattern::parse(""), std::invalid_argument);
  EXPECT_THROW(Pattern::parse("~"), std::invalid_argument);
}

TEST(PatternSet, SortedAndDeduplicated) {
  PatternSet s = PatternSet::parse("~aba,aab");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(PatternSet::parse("aab,~aba"), s);
  EXPECT_THROW(PatternSet::parse("aba,aba"), std::invalid_argument);
  EXPECT_THROW(PatternSet(std::vector<Pattern>{}), std::invalid_argument);
}

TEST(Contains, Examples) {
  const Pattern aba = Pattern::parse("aba");
  const Pattern cons = Pattern::parse("~aba");
  EXPECT_TRUE(contains(SockSeq::parse("abca"), aba));
  EXPECT_FALSE(contains(SockSeq::parse("abca"), cons));
  EXPECT_TRUE(contains(SockSeq::parse("cabab"), cons));
  EXPECT_FALSE(contains(SockSeq::parse("aabbcc"), aba));
  // Letters bound injectively: aaa has no aba.
  EXPECT_FALSE(contains(SockSeq::parse("aaa"), aba));
  EXPECT_TRUE(contains(SockSeq::parse("abcba"), Pattern::parse("abba")));
  EXPECT_FALSE(contains(SockSeq::parse("ab"), aba));
  EXPECT_FALSE(contains(SockSeq::parse("bccdd"), aba));
  EXPECT_TRUE(contains(SockSeq::parse("bcb"), aba));
  EXPECT_FALSE(contains(SockSeq::parse("baab"), cons));
  EXPECT_TRUE(contains(SockSeq::parse("bab"), cons));
}

TEST(Contains, AgreesWithOracle) {
  const std::vector<std::string> shapes{"aba", "aab", "abba", "abca", "abab", "abc"};
  for (const std::string& s : shapes) {
    for (Mode mode : {Mode::Classical, Mode::Consecutive}) {
      Pattern pat(SockSeq::parse(s), mode);
      for (std::size_t n = 0; n <= 7; ++n) {
        for_each_standardized(n, [&](const SockSeq& q) {
          EXPECT_EQ(contains(q, pat), contains_oracle(q, pat)) << pat.str() << " " << q.str();
        });
      }
    }
  }
}

TEST(Contains, ConsecutiveImpliesClassical) {
  for (const std::string& s : {"aba", "abba", "abca", "aab"}) {
    Pattern c(SockSeq::parse(s), Mode::Consecutive);
    Pattern k(SockSeq::parse(s), Mode::Classical);
    for_each_standardized(7, [&](const SockSeq& q) {
      if (contains(q, c)) EXPECT_TRUE(contains(q, k)) << s << " " << q.str();
    });
  }
}

TEST(Contains, InvariantUnderRelabeling) {
  const Pattern pat = Pattern::parse("abca");
  for_each_standardized(6, [&](const SockSeq& q) {
    std::vector<Sock> relabeled;
    for (Sock s : q) relabeled.push_back(9 - s);
    EXPECT_EQ(contains(SockSeq(relabeled), pat), contains(q, pat));
  });
}

TEST(Contains, EndingAtLast) {
  const Pattern aba = Pattern::parse("aba");
  EXPECT_TRUE(contains_ending_at_last(SockSeq::parse("abca").view(), aba));
  EXPECT_FALSE(contains_ending_at_last(SockSeq::parse("abac").view(), aba));
}

TEST(PushWouldViolate, Examples) {
  EXPECT_TRUE(push_would_violate(SockSeq::parse("ab").view(), 0, maps::cons_aba()));
  EXPECT_TRUE(push_would_violate(SockSeq::parse("aa").view(), 1, PatternSet::parse("~aab")));
  EXPECT_FALSE(push_would_violate(SockSeq{}.view(), 0, maps::aba()));
  EXPECT_FALSE(push_would_violate(SockSeq::parse("abb").view(), 0, maps::cons_aba()));
  EXPECT_TRUE(push_would_violate(SockSeq::parse("abb").view(), 0, maps::aba()));
}

TEST(PushWouldViolate, MatchesFullContainmentOnAvoidingStacks) {
  const std::vector<PatternSet> sets{maps::aba(), maps::cons_aba(), maps::aba_aab(),
                                     PatternSet::parse("abba,~abab")};
  for (const PatternSet& pats : sets) {
    for (std::size_t n = 0; n <= 6; ++n) {
      for_each_standardized(n, [&](const SockSeq& stack) {
        if (contains_any(stack.view(), pats)) return;
        for (Sock c = 0; c <= stack.max_id() + 1; ++c) {
          SockSeq pushed = stack;
          pushed.push_back(c);
          EXPECT_EQ(push_would_violate(stack.view(), c, pats), contains_any(pushed.view(), pats))
              << pats.str() << " " << pushed.str();
        }
      });
    }
  }
}

TEST(Maps, Definitions) {
  EXPECT_EQ(maps::aba().str(), "aba");
  EXPECT_EQ(maps::cons_aba().str(), "~aba");
  EXPECT_EQ(maps::aba_aab(), PatternSet::parse("aba,aab"));
}
