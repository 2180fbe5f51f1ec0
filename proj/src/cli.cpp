#include "socksort/cli.hpp"

#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "socksort/harness.hpp"
#include "socksort/image_membership.hpp"
#include "socksort/multipattern.hpp"
#include "socksort/preimage_fertility.hpp"
#include "socksort/stack_machine.hpp"

namespace socksort {

namespace {

using Json = nlohmann::ordered_json;

// Known map names, otherwise a pattern-set spec such as `~aba,~aab`.
PatternSet parse_map(const std::string& text) {
  if (text == "aba") return maps::aba();
  if (text == "cons-aba") return maps::cons_aba();
  if (text == "aba-aab") return maps::aba_aab();
  return PatternSet::parse(text);
}

struct Options {
  std::string format = "text";
  // sort
  std::string pattern = "aba";
  std::size_t k = 1;
  bool trace = false;
  std::string seq;
  // image-check
  std::string map = "aba";
  bool witness = false;
  std::string rule = "reseat";
  bool literal = false;
  // preimages / fertility / staircase
  std::size_t bound = kDefaultPreimageBound;
  std::size_t m = 1;
  std::size_t n = 2;
  // count-1ss
  std::size_t n_max = 10;
  // witness
  std::string patterns;
  std::size_t search_length = 6;
  std::size_t max_k = 20;
  // verify
  std::size_t max_n = 8;
  // bench
  std::vector<std::size_t> lengths{0, 6, 9, 12, 100, 1000, 2000, 10000};
  std::uint64_t seed = kDefaultBenchSeed;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json() const { return o_.format == "json-lines"; }
  void emit(const Json& j) { out_ << j.dump() << "\n"; }

  int sort() {
    const PatternSet pats = parse_map(o_.pattern);
    const SockSeq p = SockSeq::parse(o_.seq);
    if (o_.trace) {
      SortTrace t = phi_traced(p, pats);
      for (const SortEvent& e : t.events) {
        std::string sock = p.max_id() <= 25 ? std::string(1, static_cast<char>('a' + e.sock))
                                            : std::to_string(e.sock);
        if (json()) {
          emit(Json{{"kind", to_string(e.kind)}, {"sock", sock}, {"index", e.index}});
        } else {
          out_ << to_string(e.kind) << " " << sock << " " << e.index << "\n";
        }
      }
    }
    if (o_.k == 1) {
      SockSeq q = phi(p, pats);
      if (json()) emit(Json{{"input", p.str()}, {"output", q.str()}, {"sorted", is_sorted(q)}});
      else out_ << q.str() << "\n";
      return kExitOk;
    }
    IterateResult r = phi_iterate(p, pats, o_.k);
    if (json()) {
      Json hist = Json::array();
      for (const SockSeq& s : r.history) hist.push_back(s.str());
      emit(Json{{"input", p.str()}, {"verdict", to_string(r.verdict)}, {"passes", r.passes},
                {"final", r.final.str()}, {"history", hist}});
    } else {
      for (std::size_t i = 0; i < r.history.size(); ++i) {
        out_ << "pass " << i << ": " << r.history[i].str() << "\n";
      }
      out_ << to_string(r.verdict) << " after " << r.passes << " pass(es)\n";
    }
    return kExitOk;
  }

  int image_check() {
    const SockSeq p = SockSeq::parse(o_.seq);
    if (o_.map == "cons-aba") {
      ConsMembership r = o_.literal ? in_image_cons_literal(p) : in_image_cons(p);
      if (json()) {
        Json j{{"sequence", p.str()}, {"map", o_.map}, {"member", r.member}};
        if (r.split) j["split"] = *r.split;
        if (o_.witness && r.witness) j["witness"] = r.witness->str();
        emit(j);
      } else {
        out_ << (r.member ? "MEMBER" : "NON-MEMBER") << "\n";
        if (o_.witness && r.witness) out_ << "witness " << r.witness->str() << "\n";
      }
      return kExitOk;
    }
    if (o_.map != "aba") throw CLI::ValidationError("--map", "expected aba or cons-aba");
    const DividerRule rule = o_.rule == "literal" ? DividerRule::Literal : DividerRule::Reseat;
    AbaMembership r = in_image_aba(p, rule);
    const SockSeq shown = p;
    if (o_.trace) {
      if (json()) {
        for (const GammaStep& st : r.trace.steps) {
          Json j{{"position", st.position}, {"event", to_string(st.event)}};
          if (st.event == GammaEvent::RunScored) {
            j["l"] = st.run_length;
            j["j"] = st.block;
            j["m"] = st.prev_block;
            j["k"] = st.k;
          }
          if (st.event == GammaEvent::DividersRemoved || st.event == GammaEvent::DividerInserted) {
            j["count"] = st.count;
          }
          j["gamma"] = st.gamma_after;
          j["layout"] = render_dividers(shown, st.dividers);
          emit(j);
        }
      } else {
        out_ << "initial " << render_dividers(shown, r.trace.initial_dividers) << "\n";
        for (const GammaCheckpoint& c : r.trace.checkpoints()) {
          out_ << render_dividers(shown, c.dividers, c.position) << "\t" << c.gamma << "\n";
        }
      }
    }
    if (json()) {
      emit(Json{{"sequence", p.str()}, {"map", o_.map}, {"rule", to_string(rule)},
                {"initial", render_dividers(shown, r.trace.initial_dividers)},
                {"gamma", r.trace.final_gamma}, {"member", r.member}});
    } else {
      out_ << (r.member ? "MEMBER" : "NON-MEMBER") << "\n";
    }
    return kExitOk;
  }

  int preimages() {
    PreimageReport r = preimages_of(standardize(SockSeq::parse(o_.seq)), parse_map(o_.map), o_.bound);
    if (json()) {
      for (const SockSeq& q : r.preimages) emit(Json{{"preimage", q.str()}});
      emit(Json{{"target", r.target.str()}, {"map", r.map_spec.str()}, {"count", r.count()}});
    } else {
      for (const SockSeq& q : r.preimages) out_ << q.str() << "\n";
      out_ << "count " << r.count() << "\n";
    }
    return kExitOk;
  }

  int fertility() {
    const PatternSet pats = parse_map(o_.map);
    SockSeq q;
    if (o_.map == "cons-aba") q = fertility_witness_cons(o_.m, o_.n);
    else if (o_.map == "aba") q = fertility_witness_aba(o_.m, o_.n);
    else throw CLI::ValidationError("--map", "expected aba or cons-aba");
    std::size_t count = preimages_of(q, pats, o_.bound).count();
    bool ok = count == o_.m;
    if (json()) {
      emit(Json{{"map", o_.map}, {"m", o_.m}, {"n", o_.n}, {"witness", q.str()},
                {"preimages", count}, {"status", ok ? "PASS" : "FAIL"}});
    } else {
      out_ << q.str() << " preimages=" << count << " expected=" << o_.m << " "
           << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitFail;
  }

  int staircase() {
    const PatternSet pats = parse_map(o_.map);
    std::uint64_t count = staircase_preimage_count(o_.n, o_.k, pats, o_.bound);
    std::uint64_t expected = binomial(o_.k + o_.n - 1, o_.k - 1);
    bool ok = count == expected;
    if (json()) {
      emit(Json{{"map", o_.map}, {"n", o_.n}, {"k", o_.k},
                {"target", staircase_target(o_.n, o_.k).str()}, {"preimages", count},
                {"binomial", expected}, {"status", ok ? "PASS" : "FAIL"}});
    } else {
      out_ << staircase_target(o_.n, o_.k).str() << " preimages=" << count
           << " C(k+n-1,k-1)=" << expected << " " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? kExitOk : kExitFail;
  }

  int count() {
    CountTable t = count_one_stack_sortable(o_.n_max);
    bool all = t.rows_sum();
    for (std::size_t n = 1; n <= t.n_max; ++n) {
      bool pow2 = t.matches_power_of_two(n);
      all = all && pow2;
      if (json()) {
        emit(Json{{"n", n}, {"s_n", t.s_n[n - 1]}, {"power_of_two", 1ull << (n - 1)},
                  {"status", pow2 ? "PASS" : "FAIL"}});
      } else {
        out_ << "s(" << n << ") = " << t.s_n[n - 1] << "  2^(n-1) = " << (1ull << (n - 1)) << "  "
             << (pow2 ? "PASS" : "FAIL") << "\n";
      }
    }
    for (std::size_t n = 1; n <= t.n_max; ++n) {
      for (std::size_t r = 1; r <= n; ++r) {
        bool pascal = t.matches_pascal(n, r);
        all = all && pascal;
        if (json()) {
          emit(Json{{"n", n}, {"r", r}, {"s_nr", t.s_nr[n - 1][r - 1]},
                    {"C(n-1,r-1)", binomial(n - 1, r - 1)}, {"C(n,r-1)", binomial(n, r - 1)},
                    {"status", pascal ? "PASS" : "FAIL"}});
        } else {
          out_ << "s(" << n << "," << r << ") = " << t.s_nr[n - 1][r - 1]
               << "  C(n-1,r-1) = " << binomial(n - 1, r - 1) << " " << (pascal ? "PASS" : "FAIL")
               << "  C(n,r-1) = " << binomial(n, r - 1) << " "
               << (t.matches_shifted(n, r) ? "match" : "differ") << "\n";
        }
      }
    }
    return all ? kExitOk : kExitFail;
  }

  int witness() {
    UnsortableWitness w = unsortable_witness(PatternSet::parse(o_.patterns), o_.m,
                                             o_.search_length, o_.max_k);
    if (json()) {
      Json j{{"patterns", o_.patterns}, {"case", to_string(w.which)},
             {"verdict", to_string(w.verdict)}};
      if (w.witness) j["witness"] = w.witness->str();
      if (w.iterate) {
        Json hist = Json::array();
        for (const SockSeq& s : w.iterate->history) hist.push_back(s.str());
        j["history"] = hist;
      }
      emit(j);
    } else {
      out_ << to_string(w.which) << " " << to_string(w.verdict) << "\n";
      if (w.witness) out_ << "witness " << w.witness->str() << "\n";
      if (w.iterate) {
        for (std::size_t i = 0; i < w.iterate->history.size(); ++i) {
          out_ << "pass " << i << ": " << w.iterate->history[i].str() << "\n";
        }
      }
    }
    return w.verdict == WitnessVerdict::NeverSorts ? kExitOk : kExitFail;
  }

  int verify_cmd() {
    VerifyReport r = verify(o_.max_n);
    write_report(out_, r, json() ? OutputFormat::JsonLines : OutputFormat::Text);
    return r.passed() ? kExitOk : kExitFail;
  }

  int bench_cmd() {
    std::vector<BenchRow> rows = bench(o_.lengths, o_.seed);
    write_bench(out_, rows, json() ? OutputFormat::JsonLines : OutputFormat::Text);
    for (const BenchRow& r : rows) {
      if (!r.brute_force_agrees || !r.image_inputs_accepted) return kExitFail;
    }
    return kExitOk;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Pattern-avoiding stack sorting for sock sequences"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}))
      ->capture_default_str();

  auto* sort = app.add_subcommand("sort", "Run sequences through a pattern-avoiding stack");
  sort->add_option("--pattern", o.pattern, "Pattern set, e.g. ~aba,~aab or aba")->capture_default_str();
  sort->add_option("--k", o.k, "Number of passes (iterates with cycle detection when > 1)")
      ->check(CLI::PositiveNumber);
  sort->add_flag("--trace", o.trace, "Print push/pop events of the first pass");
  sort->add_option("seq", o.seq, "Sock sequence (letters or comma-separated ids)")->required();

  auto* image = app.add_subcommand("image-check", "Decide image membership in polynomial time");
  image->add_option("--map", o.map, "aba or cons-aba")
      ->check(CLI::IsMember({"aba", "cons-aba"}))
      ->capture_default_str();
  image->add_flag("--trace", o.trace, "Print the divider/gamma table (aba map)");
  image->add_flag("--witness", o.witness, "Print a constructed preimage (cons-aba map)");
  image->add_option("--rule", o.rule, "k = -1 divider rule for the aba map")
      ->check(CLI::IsMember({"reseat", "literal"}))
      ->capture_default_str();
  image->add_flag("--literal", o.literal, "Use the sorted-suffix split procedure (cons-aba map)");
  image->add_option("seq", o.seq, "Sock sequence")->required();

  auto* pre = app.add_subcommand("preimages", "List preimages by exhaustive search");
  pre->add_option("--map", o.map, "aba, cons-aba, aba-aab or a pattern-set spec")->capture_default_str();
  pre->add_option("--bound", o.bound, "Maximum target length")->capture_default_str();
  pre->add_option("seq", o.seq, "Target sequence")->required();

  auto* fert = app.add_subcommand("fertility", "Emit a fertility witness and its preimage count");
  fert->add_option("--map", o.map, "aba or cons-aba")
      ->check(CLI::IsMember({"aba", "cons-aba"}))
      ->capture_default_str();
  fert->add_option("--m", o.m, "Required preimage count")->required();
  fert->add_option("--n", o.n, "Sequence length")->required();
  fert->add_option("--bound", o.bound, "Maximum search length")->capture_default_str();

  auto* stair = app.add_subcommand("staircase", "Count preimages of a1...an a(n+1)^k");
  stair->add_option("--n", o.n, "Number of singleton socks")->required()->check(CLI::PositiveNumber);
  stair->add_option("--k", o.k, "Length of the final run")->required()->check(CLI::PositiveNumber);
  stair->add_option("--map", o.map, "aba or cons-aba")
      ->check(CLI::IsMember({"aba", "cons-aba"}))
      ->capture_default_str();
  stair->add_option("--bound", o.bound, "Maximum n + k")->capture_default_str();

  auto* count = app.add_subcommand("count-1ss", "Tabulate 1-stack-sortable sequences under {aba, aab}");
  count->add_option("--n-max", o.n_max, "Largest length")
      ->check(CLI::Range(std::size_t{1}, kMaxCountLength))
      ->capture_default_str();

  auto* wit = app.add_subcommand("witness", "Find a sequence a multi-pattern stack never sorts");
  wit->add_option("--patterns", o.patterns, "Pattern set, e.g. abba,abab")->required();
  wit->add_option("--m", o.m, "Number of distinct socks in the alternating witness")
      ->required()
      ->check(CLI::Range(std::size_t{2}, std::size_t{26}));
  wit->add_option("--search-length", o.search_length, "Bound for the exhaustive search")
      ->check(CLI::Range(std::size_t{1}, std::size_t{10}))
      ->capture_default_str();
  wit->add_option("--max-k", o.max_k, "Pass budget")->check(CLI::PositiveNumber)->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Run every cross-check up to a length bound");
  ver->add_option("max_n", o.max_n, "Largest length swept")
      ->check(CLI::Range(kVerifyMinN, kVerifyMaxN))
      ->capture_default_str();

  auto* ben = app.add_subcommand("bench", "Time polynomial membership against brute force");
  ben->add_option("--lengths", o.lengths, "Sequence lengths")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{0}, kBenchMaxLength));
  ben->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  Runner run(o, out);
  try {
    if (*sort) return run.sort();
    if (*image) return run.image_check();
    if (*pre) return run.preimages();
    if (*fert) return run.fertility();
    if (*stair) return run.staircase();
    if (*count) return run.count();
    if (*wit) return run.witness();
    if (*ver) return run.verify_cmd();
    if (*ben) return run.bench_cmd();
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace socksort
