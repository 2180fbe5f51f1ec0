#include "socksort/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace socksort {

namespace {

constexpr Sock kUnbound = static_cast<Sock>(-1);

// Pattern-prefix search. `bind[v]` is the sock assigned to pattern letter v;
// injectivity is checked against the other bindings (patterns are short).
struct Matcher {
  std::span<const Sock> seq;
  const SockSeq& shape;
  std::vector<Sock> bind;

  Matcher(std::span<const Sock> s, const SockSeq& sh)
      : seq(s), shape(sh), bind(sh.max_id() + 1, kUnbound) {}

  bool compatible(std::size_t pi, Sock sock) const {
    Sock letter = shape[pi];
    if (bind[letter] != kUnbound) return bind[letter] == sock;
    return std::find(bind.begin(), bind.end(), sock) == bind.end();
  }

  // match shape[pi..] using seq positions >= start (forward)
  bool forward(std::size_t pi, std::size_t start) {
    if (pi == shape.size()) return true;
    std::size_t remaining = shape.size() - pi;
    for (std::size_t i = start; i + remaining <= seq.size(); ++i) {
      if (!compatible(pi, seq[i])) continue;
      Sock letter = shape[pi];
      bool fresh = bind[letter] == kUnbound;
      bind[letter] = seq[i];
      if (forward(pi + 1, i + 1)) return true;
      if (fresh) bind[letter] = kUnbound;
    }
    return false;
  }

  // match shape[0..=pi] using seq positions < end (backward)
  bool backward(std::size_t pi, std::size_t end) {
    for (std::size_t i = end; i-- > pi;) {
      if (!compatible(pi, seq[i])) continue;
      Sock letter = shape[pi];
      bool fresh = bind[letter] == kUnbound;
      bind[letter] = seq[i];
      if (pi == 0 || backward(pi - 1, i)) return true;
      if (fresh) bind[letter] = kUnbound;
    }
    return false;
  }
};

bool window_matches(std::span<const Sock> window, const SockSeq& shape) {
  for (std::size_t i = 0; i < shape.size(); ++i) {
    for (std::size_t j = i + 1; j < shape.size(); ++j) {
      if ((window[i] == window[j]) != (shape[i] == shape[j])) return false;
    }
  }
  return true;
}

}  // namespace

Pattern::Pattern(SockSeq s, Mode m) : shape(std::move(s)), mode(m) {
  if (shape.empty()) throw std::invalid_argument("pattern shape is empty");
  if (!is_standardized(shape)) {
    throw std::invalid_argument("pattern shape '" + shape.str() + "' is not standardized");
  }
}

Pattern Pattern::parse(std::string_view text) {
  Mode mode = Mode::Classical;
  if (!text.empty() && text.front() == '~') {
    mode = Mode::Consecutive;
    text.remove_prefix(1);
  }
  return Pattern{SockSeq::parse(text), mode};
}

std::string Pattern::str() const {
  return (mode == Mode::Consecutive ? "~" : "") + shape.str();
}

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  if (patterns_.empty()) throw std::invalid_argument("pattern set is empty");
  std::sort(patterns_.begin(), patterns_.end());
  auto dup = std::adjacent_find(patterns_.begin(), patterns_.end());
  if (dup != patterns_.end()) {
    throw std::invalid_argument("duplicate pattern '" + dup->str() + "'");
  }
}

PatternSet PatternSet::parse(std::string_view text) {
  std::vector<Pattern> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    out.push_back(Pattern::parse(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return PatternSet{std::move(out)};
}

std::string PatternSet::str() const {
  std::string out;
  for (const Pattern& p : patterns_) {
    if (!out.empty()) out.push_back(',');
    out += p.str();
  }
  return out;
}

bool contains(std::span<const Sock> seq, const Pattern& pat) {
  const std::size_t k = pat.shape.size();
  if (seq.size() < k) return false;
  if (pat.mode == Mode::Consecutive) {
    for (std::size_t i = 0; i + k <= seq.size(); ++i) {
      if (window_matches(seq.subspan(i, k), pat.shape)) return true;
    }
    return false;
  }
  Matcher m(seq, pat.shape);
  return m.forward(0, 0);
}

bool contains_any(std::span<const Sock> seq, const PatternSet& pats) {
  return std::any_of(pats.begin(), pats.end(),
                     [&](const Pattern& p) { return contains(seq, p); });
}

bool contains_ending_at_last(std::span<const Sock> seq, const Pattern& pat) {
  const std::size_t k = pat.shape.size();
  if (seq.size() < k) return false;
  if (pat.mode == Mode::Consecutive) {
    return window_matches(seq.subspan(seq.size() - k, k), pat.shape);
  }
  Matcher m(seq, pat.shape);
  Sock letter = pat.shape.back();
  m.bind[letter] = seq.back();
  return k == 1 || m.backward(k - 2, seq.size() - 1);
}

bool push_would_violate(std::span<const Sock> stack_bottom_to_top, Sock candidate,
                        const PatternSet& pats) {
  if (stack_bottom_to_top.empty()) {
    // a lone sock only matches single-letter patterns
    return std::any_of(pats.begin(), pats.end(),
                       [](const Pattern& p) { return p.shape.size() == 1; });
  }
  std::vector<Sock> grown(stack_bottom_to_top.begin(), stack_bottom_to_top.end());
  grown.push_back(candidate);
  return std::any_of(pats.begin(), pats.end(),
                     [&](const Pattern& p) { return contains_ending_at_last(grown, p); });
}

namespace maps {
PatternSet aba() { return PatternSet{{Pattern{SockSeq{0, 1, 0}, Mode::Classical}}}; }
PatternSet cons_aba() { return PatternSet{{Pattern{SockSeq{0, 1, 0}, Mode::Consecutive}}}; }
PatternSet aba_aab() {
  return PatternSet{{Pattern{SockSeq{0, 1, 0}, Mode::Classical},
                     Pattern{SockSeq{0, 0, 1}, Mode::Classical}}};
}
}  // namespace maps

}  // namespace socksort
