#include "socksort/image_membership.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <list>
#include <set>
#include <stdexcept>

namespace socksort {

SandwichDecomposition sandwich_decompose(const SockSeq& p) {
  struct Item {
    Sock sock;
    std::size_t index;
  };
  std::vector<Item> cur;
  cur.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) cur.push_back({p[i], i});

  SandwichDecomposition out;
  for (;;) {
    std::size_t hit = cur.size();
    for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
      if (cur[i - 1].sock == cur[i + 1].sock && cur[i].sock != cur[i - 1].sock) {
        hit = i;
        break;
      }
    }
    if (hit == cur.size()) break;
    out.sandwich.push_back({cur[hit].sock, cur[hit].index});
    cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(hit));
  }
  std::sort(out.sandwich.begin(), out.sandwich.end(),
            [](const SandwichEntry& a, const SandwichEntry& b) { return a.index < b.index; });
  for (const Item& it : cur) out.residual.push_back(it.sock);
  return out;
}

SockSeq phi_cons_via_sandwich(const SockSeq& p) {
  SandwichDecomposition d = sandwich_decompose(p);
  SockSeq out;
  for (const SandwichEntry& e : d.sandwich) out.push_back(e.sock);
  out.append(rev(d.residual));
  return out;
}

AbaDecomposition aba_decompose(const SockSeq& p) {
  if (p.empty()) throw std::invalid_argument("aba_decompose needs a non-empty sequence");
  AbaDecomposition d{p[0], {}, {}};
  std::size_t i = 0;
  while (i < p.size()) {
    std::size_t run = 0;
    while (i < p.size() && p[i] == d.x) {
      ++run;
      ++i;
    }
    d.runs.push_back(run);
    if (i == p.size()) break;
    SockSeq gap;
    while (i < p.size() && p[i] != d.x) gap.push_back(p[i++]);
    d.gaps.push_back(std::move(gap));
    if (i == p.size()) d.runs.push_back(0);
  }
  return d;
}

SockSeq phi_aba_via_decomposition(const SockSeq& p) {
  if (p.empty()) return p;
  AbaDecomposition d = aba_decompose(p);
  SockSeq out;
  std::size_t total = 0;
  for (std::size_t l : d.runs) total += l;
  for (const SockSeq& s : d.gaps) out.append(phi_aba_via_decomposition(s));
  out.append(repeat(d.x, total));
  return out;
}

// --- consecutive-aba membership -------------------------------------------

namespace {

bool has_xyx_factor(std::span<const Sock> r) {
  for (std::size_t i = 0; i + 2 < r.size(); ++i) {
    if (r[i] == r[i + 2] && r[i] != r[i + 1]) return true;
  }
  return false;
}

// First index s such that q[s..] satisfies `ok_suffix`, assuming suffix
// closure (every suffix of an acceptable suffix is acceptable).
template <typename Pred>
std::size_t first_good_split(const SockSeq& q, Pred ok_suffix) {
  std::size_t lo = 0, hi = q.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (ok_suffix(q.view().subspan(mid))) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// rev(R) with left[j] inserted after reversed position of pair j.
SockSeq build_cons_witness(std::span<const Sock> left, std::span<const Sock> right,
                           const std::vector<std::size_t>& pair_right_ends) {
  const std::size_t L = right.size();
  std::vector<std::ptrdiff_t> insert_after(L, -1);
  for (std::size_t j = 0; j < left.size(); ++j) {
    // R[t-1] R[t] becomes r[L-1-t] r[L-t]
    insert_after[L - 1 - pair_right_ends[j]] = static_cast<std::ptrdiff_t>(j);
  }
  SockSeq w;
  for (std::size_t i = 0; i < L; ++i) {
    w.push_back(right[L - 1 - i]);
    if (insert_after[i] >= 0) w.push_back(left[insert_after[i]]);
  }
  return w;
}

}  // namespace

ConsMembership in_image_cons(const SockSeq& q) {
  const std::size_t n = q.size();
  std::size_t s0 = first_good_split(q, [](std::span<const Sock> r) { return !has_xyx_factor(r); });
  std::vector<std::size_t> ends;
  for (std::size_t s = s0; s <= n; ++s) {
    std::span<const Sock> left = q.view().first(s);
    std::span<const Sock> right = q.view().subspan(s);
    ends.clear();
    std::size_t t = right.size();  // scan cursor; candidate right ends are < t
    bool ok = true;
    for (Sock e : left) {
      bool found = false;
      while (t-- > 1) {
        if (right[t] == right[t - 1] && right[t] != e &&
            (t + 1 == right.size() || right[t + 1] != e)) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
      ends.push_back(t);
      // the next pair may reuse R[t-1] as its right end
    }
    if (ok) return {true, build_cons_witness(left, right, ends), s};
  }
  return {};
}

ConsMembership in_image_cons_literal(const SockSeq& q) {
  const std::size_t n = q.size();
  std::size_t s0 = first_good_split(q, [](std::span<const Sock> r) { return is_sorted(r); });
  std::vector<std::size_t> ends;
  for (std::size_t s = s0; s <= n; ++s) {
    std::span<const Sock> left = q.view().first(s);
    std::span<const Sock> right = q.view().subspan(s);
    ends.clear();
    std::size_t t = right.size();
    bool ok = true;
    for (Sock e : left) {
      bool found = false;
      while (t-- > 1) {
        if (right[t] == right[t - 1] && right[t] != e) {
          found = true;
          break;
        }
      }
      if (!found) {
        ok = false;
        break;
      }
      ends.push_back(t);
      --t;  // pairs are disjoint
    }
    if (ok) return {true, build_cons_witness(left, right, ends), s};
  }
  return {};
}

// --- classical-aba membership ---------------------------------------------

namespace {

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i, int delta) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  // sum over [0, i]
  int prefix(std::size_t i) const {
    int s = 0;
    for (++i; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<int> tree_;
};

// Greedy dividers for the region starting at `start`, appended to `out`.
void greedy_dividers(const SockSeq& p, std::size_t start, std::vector<std::size_t>& out) {
  if (start >= p.size()) return;
  std::vector<std::size_t> stamp(p.max_id() + 1, 0);
  std::size_t region = 1;
  stamp[p[start]] = region;
  for (std::size_t k = start + 1; k < p.size(); ++k) {
    if (stamp[p[k]] == region && p[k - 1] != p[k]) {
      out.push_back(k);
      ++region;
    }
    stamp[p[k]] = region;
  }
}

class DividerLayout {
 public:
  explicit DividerLayout(std::size_t n) : fenwick_(n) {}
  void insert(std::size_t d) {
    if (set_.insert(d).second) fenwick_.add(d, 1);
  }
  void erase(std::size_t d) {
    if (set_.erase(d)) fenwick_.add(d, -1);
  }
  bool has(std::size_t d) const { return set_.count(d) != 0; }
  /// 1-based block holding position `pos`.
  std::size_t block_of(std::size_t pos) const {
    return 1 + static_cast<std::size_t>(fenwick_.prefix(pos));
  }
  /// The `k` largest dividers at or before `pos`.
  std::vector<std::size_t> last_before(std::size_t pos, std::size_t k) const {
    std::vector<std::size_t> out;
    auto it = set_.upper_bound(pos);
    while (out.size() < k && it != set_.begin()) out.push_back(*--it);
    return out;
  }
  std::vector<std::size_t> after(std::size_t pos) const {
    return {set_.upper_bound(pos), set_.end()};
  }
  std::vector<std::size_t> snapshot() const { return {set_.begin(), set_.end()}; }

 private:
  std::set<std::size_t> set_;
  Fenwick fenwick_;
};

}  // namespace

std::vector<std::size_t> initial_dividers(const SockSeq& p) {
  std::vector<std::size_t> out;
  greedy_dividers(standardize(p), 0, out);
  return out;
}

AbaMembership in_image_aba(const SockSeq& input, DividerRule rule) {
  const SockSeq p = standardize(input);
  const std::size_t n = p.size();
  AbaMembership result;
  GammaTrace& trace = result.trace;
  greedy_dividers(p, 0, trace.initial_dividers);

  DividerLayout layout(n);
  for (std::size_t d : trace.initial_dividers) layout.insert(d);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> last_seen(n == 0 ? 0 : p.max_id() + 1, kNone);
  long gamma = 0;
  auto record = [&](GammaStep step) {
    step.gamma_after = gamma;
    step.dividers = layout.snapshot();
    trace.steps.push_back(std::move(step));
  };

  std::size_t i = 0;
  while (i < n) {
    if (i > 0 && layout.has(i)) {
      --gamma;
      GammaStep hit;
      hit.position = i;
      hit.event = GammaEvent::DividerHit;
      record(std::move(hit));
    }
    std::size_t end = i;
    while (end + 1 < n && p[end + 1] == p[i]) ++end;
    const Sock a = p[i];
    const std::size_t l = end - i + 1;
    const std::size_t j = layout.block_of(i);
    const std::size_t m = last_seen[a] == kNone ? 0 : layout.block_of(last_seen[a]);
    const long k = std::min<long>(static_cast<long>(l) - 1,
                                  static_cast<long>(j) - static_cast<long>(m) - 1);
    gamma += k;
    GammaStep scored;
    scored.position = end;
    scored.event = GammaEvent::RunScored;
    scored.run_length = l;
    scored.block = j;
    scored.prev_block = m;
    scored.k = k;
    record(std::move(scored));

    if (k > 0) {
      for (std::size_t d : layout.last_before(i, static_cast<std::size_t>(k))) layout.erase(d);
      GammaStep removed;
      removed.position = end;
      removed.event = GammaEvent::DividersRemoved;
      removed.count = static_cast<std::size_t>(k);
      record(std::move(removed));
    } else if (k == -1) {
      layout.insert(i);
      std::size_t inserted = 1;
      if (rule == DividerRule::Reseat) {
        for (std::size_t d : layout.after(i)) layout.erase(d);
        std::vector<std::size_t> fresh;
        greedy_dividers(p, i, fresh);
        for (std::size_t d : fresh) layout.insert(d);
        inserted += fresh.size();
      }
      GammaStep added;
      added.position = end;
      added.event = GammaEvent::DividerInserted;
      added.count = inserted;
      record(std::move(added));
    }
    last_seen[a] = end;
    i = end + 1;
  }
  trace.final_gamma = gamma;
  result.member = gamma >= 0;
  return result;
}

std::vector<GammaCheckpoint> GammaTrace::checkpoints() const {
  std::vector<GammaCheckpoint> rows;
  if (steps.empty()) return rows;
  rows.push_back({0, 0, initial_dividers});
  for (std::size_t s = 0; s < steps.size(); ++s) {
    const GammaStep& st = steps[s];
    if (st.event == GammaEvent::DividerHit) {
      rows.push_back({st.position, st.gamma_after, st.dividers});
    } else if (st.event == GammaEvent::RunScored && (st.run_length >= 2 || st.k != 0)) {
      const GammaStep& layout_src =
          (s + 1 < steps.size() && steps[s + 1].event != GammaEvent::DividerHit &&
           steps[s + 1].event != GammaEvent::RunScored)
              ? steps[s + 1]
              : st;
      rows.push_back({st.position, st.gamma_after, layout_src.dividers});
    }
  }
  return rows;
}

std::string render_dividers(const SockSeq& p, const std::vector<std::size_t>& dividers,
                            std::optional<std::size_t> cursor) {
  const bool letters = p.max_id() <= 25;
  std::string out;
  std::size_t next = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool divided = next < dividers.size() && dividers[next] == i;
    if (divided) {
      out += "‖";
      ++next;
    } else if (i > 0 && !letters) {
      out += ",";
    }
    std::string tok = letters ? std::string(1, static_cast<char>('a' + p[i])) : std::to_string(p[i]);
    if (cursor && *cursor == i) tok = "[" + tok + "]";
    out += tok;
  }
  return out;
}

const char* to_string(GammaEvent e) {
  switch (e) {
    case GammaEvent::DividerHit: return "DividerHit";
    case GammaEvent::RunScored: return "RunScored";
    case GammaEvent::DividerInserted: return "DividerInserted";
    case GammaEvent::DividersRemoved: return "DividersRemoved";
  }
  return "?";
}

const char* to_string(DividerRule r) {
  return r == DividerRule::Literal ? "literal" : "reseat";
}

}  // namespace socksort
