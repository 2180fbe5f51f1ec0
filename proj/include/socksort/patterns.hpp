#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "socksort/core.hpp"

namespace socksort {

enum class Mode { Classical, Consecutive };

/**
 * A sock pattern with its avoidance mode. Text form is the shape in letters,
 * prefixed with `~` for consecutive mode (`~aba`).
 */
struct Pattern {
  SockSeq shape;
  Mode mode = Mode::Classical;

  /// Throws std::invalid_argument unless `shape` is standardized and non-empty.
  Pattern(SockSeq shape, Mode mode);
  static Pattern parse(std::string_view text);
  std::string str() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
  friend bool operator==(const Pattern&, const Pattern&) = default;
};

/// Non-empty, duplicate-free, kept in sorted order.
class PatternSet {
 public:
  /// Throws std::invalid_argument on an empty list or a duplicate entry.
  explicit PatternSet(std::vector<Pattern> patterns);
  /// Comma-separated list: `~aba,~aab`.
  static PatternSet parse(std::string_view text);

  const std::vector<Pattern>& patterns() const { return patterns_; }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }
  std::size_t size() const { return patterns_.size(); }
  std::string str() const;

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Pattern> patterns_;
};

/// Some positions of `seq` (adjacent ones in consecutive mode) carry exactly
/// the equality pattern of `pat.shape`.
bool contains(std::span<const Sock> seq, const Pattern& pat);
inline bool contains(const SockSeq& seq, const Pattern& pat) {
  return contains(seq.view(), pat);
}
bool contains_any(std::span<const Sock> seq, const PatternSet& pats);

/// Like contains, restricted to occurrences that use the last position.
bool contains_ending_at_last(std::span<const Sock> seq, const Pattern& pat);

/**
 * Whether pushing `candidate` onto a stack read bottom-to-top creates an
 * occurrence of some pattern. Only occurrences through the new top are
 * examined, which agrees with full containment whenever the stack itself
 * avoids `pats` (the stack machine maintains that invariant).
 */
bool push_would_violate(std::span<const Sock> stack_bottom_to_top, Sock candidate,
                        const PatternSet& pats);

/// Pattern sets for the maps used throughout the library.
namespace maps {
PatternSet aba();             // {aba}
PatternSet cons_aba();        // {~aba}
PatternSet aba_aab();         // {aba, aab}, the pinned multi-pattern map
}  // namespace maps

}  // namespace socksort
