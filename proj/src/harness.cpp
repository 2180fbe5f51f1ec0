#include "socksort/harness.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <unordered_set>

#include "socksort/image_membership.hpp"
#include "socksort/multipattern.hpp"
#include "socksort/preimage_fertility.hpp"
#include "socksort/stack_machine.hpp"

namespace socksort {

namespace {

using Json = nlohmann::ordered_json;
using ImageSet = std::unordered_set<SockSeq, SockSeqHash>;

const char* status(bool ok) { return ok ? "PASS" : "FAIL"; }

class SuiteBuilder {
 public:
  explicit SuiteBuilder(std::string name) { result_.name = std::move(name); }

  void line(std::string text, Json record) {
    Json r;
    r["suite"] = result_.name;
    for (auto& [k, v] : record.items()) r[k] = v;
    result_.lines.push_back({std::move(text), std::move(r)});
  }
  void check(bool ok) { result_.passed = result_.passed && ok; }
  SuiteResult finish() { return std::move(result_); }

 private:
  SuiteResult result_;
};

ImageSet brute_force_image(std::size_t n, const PatternSet& pats) {
  ImageSet img;
  for_each_standardized(n, [&](const SockSeq& q) { img.insert(standardize(phi(q, pats))); });
  return img;
}

SuiteResult suite_evaluators(std::size_t max_n) {
  SuiteBuilder b("evaluators");
  const PatternSet cons = maps::cons_aba();
  const PatternSet aba = maps::aba();
  for (std::size_t n = 0; n <= max_n; ++n) {
    std::uint64_t sandwich_bad = 0, decomposition_bad = 0;
    std::uint64_t seen = for_each_standardized(n, [&](const SockSeq& p) {
      if (phi_cons_via_sandwich(p) != phi(p, cons)) ++sandwich_bad;
      if (phi_aba_via_decomposition(p) != phi(p, aba)) ++decomposition_bad;
    });
    b.check(sandwich_bad == 0 && decomposition_bad == 0 && seen == bell_number(n));
    std::ostringstream t;
    t << "n=" << n << " sequences=" << seen << " sandwich_mismatch=" << sandwich_bad
      << " decomposition_mismatch=" << decomposition_bad;
    b.line(t.str(), Json{{"n", n},
                         {"sequences", seen},
                         {"sandwich_mismatch", sandwich_bad},
                         {"decomposition_mismatch", decomposition_bad}});
  }
  return b.finish();
}

SuiteResult suite_image_cons(std::size_t max_n) {
  SuiteBuilder b("image-cons-aba");
  const PatternSet cons = maps::cons_aba();
  for (std::size_t n = 0; n <= max_n; ++n) {
    ImageSet img = brute_force_image(n, cons);
    std::uint64_t bad = 0, literal_bad = 0, bad_witness = 0, members = 0;
    std::uint64_t seen = for_each_standardized(n, [&](const SockSeq& p) {
      const bool truth = img.count(p) != 0;
      ConsMembership got = in_image_cons(p);
      if (got.member != truth) ++bad;
      if (got.member) {
        ++members;
        if (!got.witness || phi(*got.witness, cons) != p) ++bad_witness;
      }
      if (in_image_cons_literal(p).member != truth) ++literal_bad;
    });
    b.check(bad == 0 && bad_witness == 0 && members == img.size());
    std::ostringstream t;
    t << "n=" << n << " sequences=" << seen << " image=" << img.size()
      << " disagreements=" << bad << " bad_witnesses=" << bad_witness
      << " literal_procedure_disagreements=" << literal_bad;
    b.line(t.str(), Json{{"n", n},
                         {"sequences", seen},
                         {"image", img.size()},
                         {"disagreements", bad},
                         {"bad_witnesses", bad_witness},
                         {"literal_procedure_disagreements", literal_bad}});
  }
  return b.finish();
}

// True when the trace keeps its bookkeeping invariants.
bool gamma_trace_consistent(const SockSeq& p, const GammaTrace& trace) {
  long gamma = 0;
  for (const GammaStep& st : trace.steps) {
    long delta = st.event == GammaEvent::DividerHit ? -1
                 : st.event == GammaEvent::RunScored ? st.k
                                                     : 0;
    if (st.gamma_after != gamma + delta) return false;
    gamma = st.gamma_after;
    if (st.event == GammaEvent::RunScored) {
      long expect = std::min<long>(static_cast<long>(st.run_length) - 1,
                                   static_cast<long>(st.block) - static_cast<long>(st.prev_block) - 1);
      if (st.k != expect) return false;
    }
    for (std::size_t d : st.dividers) {
      if (d == 0 || d >= p.size() || p[d - 1] == p[d]) return false;
    }
  }
  return gamma == trace.final_gamma;
}

SuiteResult suite_image_aba(std::size_t max_n) {
  SuiteBuilder b("image-aba");
  const PatternSet aba = maps::aba();
  std::vector<std::string> literal_cases;
  for (std::size_t n = 0; n <= max_n; ++n) {
    ImageSet img = brute_force_image(n, aba);
    std::uint64_t bad = 0, literal_bad = 0, inconsistent = 0;
    std::uint64_t seen = for_each_standardized(n, [&](const SockSeq& p) {
      const bool truth = img.count(p) != 0;
      AbaMembership got = in_image_aba(p, DividerRule::Reseat);
      if (got.member != truth) ++bad;
      if (!gamma_trace_consistent(p, got.trace)) ++inconsistent;
      if (in_image_aba(p, DividerRule::Literal).member != truth) {
        ++literal_bad;
        literal_cases.push_back(p.str());
      }
    });
    b.check(bad == 0 && inconsistent == 0);
    std::ostringstream t;
    t << "n=" << n << " sequences=" << seen << " image=" << img.size()
      << " disagreements=" << bad << " trace_violations=" << inconsistent
      << " literal_rule_disagreements=" << literal_bad;
    b.line(t.str(), Json{{"n", n},
                         {"sequences", seen},
                         {"image", img.size()},
                         {"disagreements", bad},
                         {"trace_violations", inconsistent},
                         {"literal_rule_disagreements", literal_bad}});
  }
  for (const std::string& s : literal_cases) {
    b.line("literal k=-1 rule disagrees with the oracle on " + s,
           Json{{"literal_rule_disagreement", s}});
  }
  return b.finish();
}

SuiteResult suite_preimage_agreement(std::size_t max_n) {
  SuiteBuilder b("preimage-agreement");
  const std::size_t top = std::min<std::size_t>(max_n, 6);
  struct MapCase {
    const char* name;
    PatternSet pats;
    std::function<bool(const SockSeq&)> member;
  };
  std::vector<MapCase> cases{
      {"aba", maps::aba(), [](const SockSeq& p) { return in_image_aba(p).member; }},
      {"cons-aba", maps::cons_aba(), [](const SockSeq& p) { return in_image_cons(p).member; }}};
  for (const MapCase& c : cases) {
    for (std::size_t n = 1; n <= top; ++n) {
      std::uint64_t bad = 0, invalid = 0;
      for_each_standardized(n, [&](const SockSeq& t) {
        PreimageReport r = preimages_of(t, c.pats);
        for (const SockSeq& q : r.preimages) {
          if (standardize(phi(q, c.pats)) != r.target) ++invalid;
        }
        if (c.member(t) != (r.count() > 0)) ++bad;
      });
      b.check(bad == 0 && invalid == 0);
      std::ostringstream t;
      t << "map=" << c.name << " n=" << n << " disagreements=" << bad
        << " invalid_preimages=" << invalid;
      b.line(t.str(), Json{{"map", c.name}, {"n", n}, {"disagreements", bad},
                           {"invalid_preimages", invalid}});
    }
  }
  return b.finish();
}

SuiteResult suite_fertility(std::size_t max_n) {
  SuiteBuilder b("fertility");
  const std::size_t top = std::min<std::size_t>(max_n, 7);
  for (std::size_t n = 2; n <= top; ++n) {
    for (std::size_t m = 1; m < n; ++m) {
      std::size_t cons = preimages_of(fertility_witness_cons(m, n), maps::cons_aba()).count();
      std::size_t aba = preimages_of(fertility_witness_aba(m, n), maps::aba()).count();
      b.check(cons == m && aba == m);
      std::ostringstream t;
      t << "n=" << n << " m=" << m << " cons-aba=" << cons << " aba=" << aba << " expected=" << m;
      b.line(t.str(), Json{{"n", n}, {"m", m}, {"cons_aba", cons}, {"aba", aba}, {"expected", m}});
    }
  }
  return b.finish();
}

SuiteResult suite_staircase(std::size_t max_n, const char* name, const PatternSet& pats) {
  SuiteBuilder b(std::string("staircase-") + name);
  const std::size_t top = std::min<std::size_t>(max_n, 8);
  for (std::size_t n = 1; n < top; ++n) {
    for (std::size_t k = 1; n + k <= top; ++k) {
      std::uint64_t got = staircase_preimage_count(n, k, pats);
      std::uint64_t expected = binomial(k + n - 1, k - 1);
      b.check(got == expected);
      std::ostringstream t;
      t << "n=" << n << " k=" << k << " preimages=" << got << " C(k+n-1,k-1)=" << expected
        << " " << status(got == expected);
      b.line(t.str(), Json{{"n", n}, {"k", k}, {"preimages", got}, {"binomial", expected}});
    }
  }
  return b.finish();
}

SuiteResult suite_count(std::size_t max_n) {
  SuiteBuilder b("count-1ss");
  for (const ModeSurveyRow& row : survey_aba_aab_modes(std::min<std::size_t>(max_n, 8))) {
    std::ostringstream t;
    t << "modes " << row.pats.str() << " s(n)=";
    Json counts = Json::array();
    for (std::size_t i = 0; i < row.s_n.size(); ++i) {
      t << (i ? "," : "") << row.s_n[i];
      counts.push_back(row.s_n[i]);
    }
    t << " reproduces 2^(n-1): " << (row.reproduces_power_of_two ? "yes" : "no");
    b.line(t.str(), Json{{"modes", row.pats.str()}, {"s_n", counts},
                         {"reproduces_power_of_two", row.reproduces_power_of_two}});
  }
  CountTable table = count_one_stack_sortable(max_n);
  bool pascal_all = true, shifted_all = true;
  for (std::size_t n = 1; n <= max_n; ++n) {
    bool pow2 = table.matches_power_of_two(n);
    bool built = build_one_stack_sortable(n).size() == table.s_n[n - 1];
    bool pascal = true, shifted = true;
    for (std::size_t r = 1; r <= n; ++r) {
      pascal = pascal && table.matches_pascal(n, r);
      shifted = shifted && table.matches_shifted(n, r);
    }
    pascal_all = pascal_all && pascal;
    shifted_all = shifted_all && shifted;
    b.check(pow2 && built && pascal);
    std::ostringstream t;
    t << "n=" << n << " s(n)=" << table.s_n[n - 1] << " 2^(n-1)=" << (1ull << (n - 1))
      << " s(n,r)=";
    for (std::size_t r = 1; r <= n; ++r) t << (r > 1 ? "," : "") << table.s_nr[n - 1][r - 1];
    t << " C(n-1,r-1):" << (pascal ? "match" : "differ") << " C(n,r-1):"
      << (shifted ? "match" : "differ");
    b.line(t.str(), Json{{"n", n}, {"s_n", table.s_n[n - 1]}, {"s_nr", table.s_nr[n - 1]},
                         {"power_of_two", pow2}, {"constructive_count_matches", built},
                         {"pascal_match", pascal}, {"shifted_match", shifted}});
  }
  b.check(table.rows_sum());
  std::string verdict = pascal_all ? "C(n-1,r-1)" : (shifted_all ? "C(n,r-1)" : "neither");
  b.line("pinned map " + table.pats.str() + ": s(n,r) matches " + verdict,
         Json{{"pinned_map", table.pats.str()}, {"s_nr_binomial", verdict},
              {"rows_sum", table.rows_sum()}});
  return b.finish();
}

SuiteResult suite_unsortable() {
  SuiteBuilder b("unsortability");
  for (const char* spec : {"abba,abab", "abca,abac"}) {
    PatternSet g = PatternSet::parse(spec);
    for (std::size_t m = 2; m <= 6; ++m) {
      UnsortableWitness w = unsortable_witness(g, m, 0, 3);
      const SockSeq& p = *w.witness;
      bool cycle = equivalent(phi(p, g), p);
      bool ok = w.which == WitnessCase::Case2 && w.verdict == WitnessVerdict::NeverSorts && cycle;
      b.check(ok);
      std::ostringstream t;
      t << "G=" << spec << " m=" << m << " p=" << p.str() << " phi(p)=" << phi(p, g).str()
        << " verdict=" << to_string(w.verdict);
      b.line(t.str(), Json{{"G", spec}, {"m", m}, {"witness", p.str()},
                           {"image", phi(p, g).str()}, {"verdict", to_string(w.verdict)}});
    }
  }
  return b.finish();
}

}  // namespace

bool VerifyReport::passed() const {
  for (const SuiteResult& s : suites) {
    if (!s.passed) return false;
  }
  return true;
}

VerifyReport verify(std::size_t max_n) {
  if (max_n < kVerifyMinN || max_n > kVerifyMaxN) {
    throw BoundError("verify needs " + std::to_string(kVerifyMinN) + " <= max_n <= " +
                     std::to_string(kVerifyMaxN));
  }
  std::vector<std::function<SuiteResult()>> jobs{
      [=] { return suite_evaluators(max_n); },
      [=] { return suite_image_cons(max_n); },
      [=] { return suite_image_aba(max_n); },
      [=] { return suite_preimage_agreement(max_n); },
      [=] { return suite_fertility(max_n); },
      [=] { return suite_staircase(max_n, "aba", maps::aba()); },
      [=] { return suite_staircase(max_n, "cons-aba", maps::cons_aba()); },
      [=] { return suite_count(max_n); },
      [] { return suite_unsortable(); },
  };
  std::vector<std::future<SuiteResult>> running;
  for (auto& job : jobs) running.push_back(std::async(std::launch::async, job));
  VerifyReport report{max_n, {}};
  for (auto& f : running) report.suites.push_back(f.get());
  return report;
}

void write_report(std::ostream& os, const VerifyReport& report, OutputFormat format) {
  std::size_t passed = 0;
  for (const SuiteResult& s : report.suites) {
    passed += s.passed ? 1 : 0;
    if (format == OutputFormat::Text) {
      os << "[" << status(s.passed) << "] " << s.name << "\n";
      for (const ReportLine& l : s.lines) os << "    " << l.text << "\n";
    } else {
      for (const ReportLine& l : s.lines) os << l.record.dump() << "\n";
      os << Json{{"suite", s.name}, {"status", status(s.passed)}}.dump() << "\n";
    }
  }
  if (format == OutputFormat::Text) {
    os << "verify max_n=" << report.max_n << ": " << status(report.passed()) << " (" << passed
       << "/" << report.suites.size() << " suites passed)\n";
  } else {
    os << Json{{"summary", status(report.passed())},
               {"max_n", report.max_n},
               {"suites_passed", passed},
               {"suites", report.suites.size()}}
              .dump()
       << "\n";
  }
}

// --- benchmark ------------------------------------------------------------

SockSeq random_standardized(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SockSeq p;
  Sock fresh = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<Sock> pick(0, fresh);
    Sock s = pick(rng);
    if (s == fresh) ++fresh;
    p.push_back(s);
  }
  return p;
}

std::vector<BenchRow> bench(const std::vector<std::size_t>& lengths, std::uint64_t seed) {
  for (std::size_t len : lengths) {
    if (len > kBenchMaxLength) {
      throw BoundError("bench lengths are limited to " + std::to_string(kBenchMaxLength));
    }
  }
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point a, Clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };
  std::vector<BenchRow> rows;
  for (std::size_t idx = 0; idx < lengths.size(); ++idx) {
    BenchRow row;
    row.length = lengths[idx];
    const SockSeq p = random_standardized(row.length, seed + idx);

    auto t0 = Clock::now();
    row.aba_member = in_image_aba(p).member;
    auto t1 = Clock::now();
    row.cons_member = in_image_cons(p).member;
    auto t2 = Clock::now();
    row.aba_seconds = seconds(t0, t1);
    row.cons_seconds = seconds(t1, t2);

    const SockSeq aba_image = phi(p, maps::aba());
    const SockSeq cons_image = phi(p, maps::cons_aba());
    auto t4 = Clock::now();
    bool aba_ok = in_image_aba(aba_image).member;
    auto t5 = Clock::now();
    bool cons_ok = in_image_cons(cons_image).member;
    auto t6 = Clock::now();
    row.aba_image_seconds = seconds(t4, t5);
    row.cons_image_seconds = seconds(t5, t6);
    row.image_inputs_accepted = aba_ok && cons_ok;

    if (row.length <= kBruteForceCap) {
      const PatternSet aba = maps::aba();
      const PatternSet cons = maps::cons_aba();
      bool aba_hit = false, cons_hit = false;
      auto t3 = Clock::now();
      row.brute_force_sequences = for_each_standardized(row.length, [&](const SockSeq& q) {
        aba_hit = aba_hit || standardize(phi(q, aba)) == p;
        cons_hit = cons_hit || standardize(phi(q, cons)) == p;
      });
      row.brute_force_seconds = seconds(t3, Clock::now());
      row.brute_force_ran = true;
      row.brute_force_agrees = aba_hit == row.aba_member && cons_hit == row.cons_member;
    }
    rows.push_back(row);
  }
  return rows;
}

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Text) {
    os << "length  aba_member  aba_s       aba_img_s   cons_member  cons_s      cons_img_s  "
          "brute_sequences  brute_s     agrees\n";
  }
  for (const BenchRow& r : rows) {
    if (format == OutputFormat::JsonLines) {
      Json j{{"length", r.length},
             {"aba_member", r.aba_member},
             {"aba_seconds", r.aba_seconds},
             {"cons_member", r.cons_member},
             {"cons_seconds", r.cons_seconds},
             {"aba_image_seconds", r.aba_image_seconds},
             {"cons_image_seconds", r.cons_image_seconds},
             {"image_inputs_accepted", r.image_inputs_accepted}};
      if (r.brute_force_ran) {
        j["brute_force_sequences"] = r.brute_force_sequences;
        j["brute_force_seconds"] = r.brute_force_seconds;
        j["brute_force_agrees"] = r.brute_force_agrees;
      } else {
        j["brute_force"] = "skipped";
      }
      os << j.dump() << "\n";
      continue;
    }
    char buf[256];
    if (r.brute_force_ran) {
      std::snprintf(buf, sizeof buf,
                    "%-7zu %-11s %-11.6f %-11.6f %-12s %-11.6f %-11.6f %-16llu %-11.4f %s\n",
                    r.length, r.aba_member ? "yes" : "no", r.aba_seconds, r.aba_image_seconds,
                    r.cons_member ? "yes" : "no", r.cons_seconds, r.cons_image_seconds,
                    static_cast<unsigned long long>(r.brute_force_sequences),
                    r.brute_force_seconds, r.brute_force_agrees ? "yes" : "NO");
    } else {
      std::snprintf(buf, sizeof buf,
                    "%-7zu %-11s %-11.6f %-11.6f %-12s %-11.6f %-11.6f %-16s %-11s %s\n",
                    r.length, r.aba_member ? "yes" : "no", r.aba_seconds, r.aba_image_seconds,
                    r.cons_member ? "yes" : "no", r.cons_seconds, r.cons_image_seconds, "skipped",
                    "-", "-");
    }
    os << buf;
  }
}

}  // namespace socksort
