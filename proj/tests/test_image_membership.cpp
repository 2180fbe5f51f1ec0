#include <gtest/gtest.h>

#include <stdexcept>
#include <unordered_set>

#include "socksort/image_membership.hpp"
#include "socksort/stack_machine.hpp"

using namespace socksort;

namespace {

using ImageSet = std::unordered_set<SockSeq, SockSeqHash>;

ImageSet image_of(std::size_t n, const PatternSet& pats) {
  ImageSet img;
  for_each_standardized(n, [&](const SockSeq& q) { img.insert(standardize(phi(q, pats))); });
  return img;
}

std::vector<long> gammas(const GammaTrace& t) {
  std::vector<long> out;
  for (const GammaCheckpoint& c : t.checkpoints()) out.push_back(c.gamma);
  return out;
}

}  // namespace

TEST(Sandwich, Examples) {
  SandwichDecomposition d = sandwich_decompose(SockSeq::parse("aba"));
  EXPECT_EQ(d.sandwich, (std::vector<SandwichEntry>{{1, 1}}));
  EXPECT_EQ(d.residual, SockSeq::parse("aa"));

  d = sandwich_decompose(SockSeq::parse("aabb"));
  EXPECT_TRUE(d.sandwich.empty());
  EXPECT_EQ(d.residual, SockSeq::parse("aabb"));

  d = sandwich_decompose(SockSeq::parse("ababa"));
  EXPECT_EQ(d.sandwich, (std::vector<SandwichEntry>{{1, 1}, {1, 3}}));
  EXPECT_EQ(d.residual, SockSeq::parse("aaa"));
}

TEST(Sandwich, EvaluatorExamples) {
  EXPECT_EQ(phi_cons_via_sandwich(SockSeq::parse("aba")), SockSeq::parse("baa"));
  EXPECT_EQ(phi_cons_via_sandwich(SockSeq::parse("ababa")), SockSeq::parse("bbaaa"));
  EXPECT_EQ(phi_cons_via_sandwich(SockSeq::parse("aabbc")), SockSeq::parse("cbbaa"));
  EXPECT_EQ(phi_cons_via_sandwich(SockSeq::parse("abcb")), SockSeq::parse("cbba"));
}

TEST(Sandwich, AgreesWithStackOnAllShortSequences) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_standardized(n, [](const SockSeq& p) {
      EXPECT_EQ(phi_cons_via_sandwich(p), phi(p, maps::cons_aba())) << p.str();
    });
  }
}

TEST(AbaDecomposition, Examples) {
  AbaDecomposition d = aba_decompose(SockSeq::parse("abaca"));
  EXPECT_EQ(d.x, 0u);
  EXPECT_EQ(d.runs, (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(d.gaps, (std::vector<SockSeq>{SockSeq::parse("b"), SockSeq::parse("c")}));

  d = aba_decompose(SockSeq::parse("aaa"));
  EXPECT_EQ(d.runs, (std::vector<std::size_t>{3}));
  EXPECT_TRUE(d.gaps.empty());

  d = aba_decompose(SockSeq::parse("abbaa"));
  EXPECT_EQ(d.runs, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(d.gaps, (std::vector<SockSeq>{SockSeq::parse("bb")}));

  d = aba_decompose(SockSeq::parse("abab"));
  EXPECT_EQ(d.runs, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(d.gaps.size(), 2u);

  EXPECT_THROW(aba_decompose(SockSeq{}), std::invalid_argument);
}

TEST(AbaDecomposition, ReconcatenatesToInput) {
  for_each_standardized(7, [](const SockSeq& p) {
    if (p.empty()) return;
    AbaDecomposition d = aba_decompose(p);
    ASSERT_EQ(d.runs.size(), d.gaps.size() + 1);
    SockSeq back;
    for (std::size_t i = 0; i < d.gaps.size(); ++i) {
      back.append(repeat(d.x, d.runs[i]));
      back.append(d.gaps[i]);
    }
    back.append(repeat(d.x, d.runs.back()));
    EXPECT_EQ(back, p);
  });
}

TEST(AbaDecomposition, EvaluatorMatchesStack) {
  EXPECT_EQ(phi_aba_via_decomposition(SockSeq::parse("abaca")), SockSeq::parse("bcaaa"));
  EXPECT_EQ(phi_aba_via_decomposition(SockSeq::parse("a")), SockSeq::parse("a"));
  EXPECT_EQ(phi_aba_via_decomposition(SockSeq::parse("abab")), SockSeq::parse("bbaa"));
  for (std::size_t n = 0; n <= 8; ++n) {
    for_each_standardized(n, [](const SockSeq& p) {
      EXPECT_EQ(phi_aba_via_decomposition(p), phi(p, maps::aba())) << p.str();
    });
  }
}

TEST(ConsImage, Examples) {
  ConsMembership r = in_image_cons(SockSeq::parse("baa"));
  EXPECT_TRUE(r.member);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(phi(*r.witness, maps::cons_aba()), SockSeq::parse("baa"));

  r = in_image_cons(SockSeq::parse("aabbc"));
  EXPECT_TRUE(r.member);
  EXPECT_EQ(*r.witness, SockSeq::parse("cbbaa"));

  EXPECT_FALSE(in_image_cons(SockSeq::parse("aba")).member);
  EXPECT_TRUE(in_image_cons(SockSeq{}).member);
}

TEST(ConsImage, KeepsInputLabels) {
  ConsMembership r = in_image_cons(SockSeq::parse("cbb"));
  ASSERT_TRUE(r.member);
  EXPECT_EQ(phi(*r.witness, maps::cons_aba()), SockSeq::parse("cbb"));
}

TEST(ConsImage, ImageSizes) {
  const std::size_t expected[] = {1, 1, 2, 4, 10, 30, 104, 400, 1703};
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t members = 0;
    for_each_standardized(n, [&](const SockSeq& p) { members += in_image_cons(p).member; });
    EXPECT_EQ(members, expected[n]) << n;
  }
}

TEST(ConsImage, AgreesWithBruteForceImageAndWitnessesAreExact) {
  for (std::size_t n = 0; n <= 8; ++n) {
    ImageSet img = image_of(n, maps::cons_aba());
    for_each_standardized(n, [&](const SockSeq& p) {
      ConsMembership r = in_image_cons(p);
      ASSERT_EQ(r.member, img.count(p) != 0) << p.str();
      if (r.member) {
        ASSERT_TRUE(r.witness);
        EXPECT_EQ(phi(*r.witness, maps::cons_aba()), p) << p.str();
      }
    });
  }
}

TEST(ConsImage, ImageOfEveryOutputIsMember) {
  for_each_standardized(8, [](const SockSeq& q) {
    EXPECT_TRUE(in_image_cons(phi(q, maps::cons_aba())).member) << q.str();
  });
}

TEST(ConsImage, LiteralProcedureIsNotExact) {
  std::size_t disagreements = 0;
  ImageSet img = image_of(6, maps::cons_aba());
  for_each_standardized(6, [&](const SockSeq& p) {
    disagreements += in_image_cons_literal(p).member != (img.count(p) != 0);
  });
  EXPECT_GT(disagreements, 0u);
}

TEST(AbaImage, FirstTraceTable) {
  const SockSeq p = SockSeq::parse("bcbabccdd");
  AbaMembership r = in_image_aba(p);
  EXPECT_TRUE(r.member);
  EXPECT_EQ(render_dividers(p, r.trace.initial_dividers), "bc‖ba‖bccdd");
  EXPECT_EQ(gammas(r.trace), (std::vector<long>{0, -1, -2, -1, 0}));
  EXPECT_EQ(r.trace.final_gamma, 0);
}

TEST(AbaImage, SecondTraceTable) {
  const SockSeq p = SockSeq::parse("bcbcbaabcccdd");
  AbaMembership r = in_image_aba(p);
  EXPECT_FALSE(r.member);
  EXPECT_EQ(render_dividers(p, r.trace.initial_dividers), "bc‖bc‖baa‖bcccdd");
  EXPECT_EQ(gammas(r.trace), (std::vector<long>{0, -1, -2, -1, -2, -2, -1}));
  std::vector<GammaCheckpoint> rows = r.trace.checkpoints();
  EXPECT_EQ(render_dividers(p, rows.back().dividers, rows.back().position),
            "bc‖bcbaabcccd[d]");
}

TEST(AbaImage, SortedSequencesAreMembers) {
  for (const char* s : {"", "a", "aabbb", "abcd", "aaabbbcc"}) {
    AbaMembership r = in_image_aba(SockSeq::parse(s));
    EXPECT_TRUE(r.member) << s;
    EXPECT_TRUE(r.trace.initial_dividers.empty()) << s;
    for (const GammaStep& st : r.trace.steps) {
      if (st.event == GammaEvent::RunScored) EXPECT_GE(st.k, 0) << s;
    }
  }
}

TEST(AbaImage, InitialDividers) {
  EXPECT_TRUE(initial_dividers(SockSeq::parse("aabb")).empty());
  EXPECT_EQ(initial_dividers(SockSeq::parse("aba")), (std::vector<std::size_t>{2}));
}

TEST(AbaImage, ImageSizes) {
  const std::size_t expected[] = {1, 1, 2, 4, 8, 17, 41, 115, 368};
  for (std::size_t n = 0; n <= 8; ++n) {
    std::size_t members = 0;
    for_each_standardized(n, [&](const SockSeq& p) { members += in_image_aba(p).member; });
    EXPECT_EQ(members, expected[n]) << n;
  }
}

TEST(AbaImage, AgreesWithBruteForceImage) {
  for (std::size_t n = 0; n <= 8; ++n) {
    ImageSet img = image_of(n, maps::aba());
    for_each_standardized(n, [&](const SockSeq& p) {
      EXPECT_EQ(in_image_aba(p).member, img.count(p) != 0) << p.str();
    });
  }
}

TEST(AbaImage, LiteralRuleMissesReseatCases) {
  for (const char* s : {"abaccbadd", "abaccbcdd"}) {
    const SockSeq p = SockSeq::parse(s);
    EXPECT_TRUE(in_image_aba(p, DividerRule::Reseat).member) << s;
    EXPECT_FALSE(in_image_aba(p, DividerRule::Literal).member) << s;
  }
}

TEST(AbaImage, StandardizesInput) {
  EXPECT_EQ(in_image_aba(SockSeq::parse("cdcbcddee")).member,
            in_image_aba(SockSeq::parse("bcbabccdd")).member);
}

TEST(AbaImage, RenderWithCursor) {
  const SockSeq p = SockSeq::parse("abc");
  EXPECT_EQ(render_dividers(p, {1}, 2), "a‖b[c]");
  EXPECT_EQ(render_dividers(p, {}), "abc");
}
