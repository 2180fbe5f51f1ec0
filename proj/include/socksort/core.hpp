#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace socksort {

/// Sock identifier. Ids are 0-based; `a` is 0, `b` is 1 and so on.
using Sock = std::uint32_t;

/**
 * An ordered sequence of socks.
 *
 * Two positions carry the same sock iff the corresponding elements of the
 * underlying set partition share a block. Equivalence classes are always
 * represented by their standardized member (a restricted growth string).
 */
class SockSeq {
 public:
  using value_type = Sock;
  using const_iterator = std::vector<Sock>::const_iterator;

  SockSeq() = default;
  SockSeq(std::initializer_list<Sock> socks) : socks_(socks) {}
  explicit SockSeq(std::vector<Sock> socks) : socks_(std::move(socks)) {}

  /// Parses `abacb` or `0,1,0,2,1`. Throws std::invalid_argument.
  static SockSeq parse(std::string_view text);

  std::size_t size() const { return socks_.size(); }
  bool empty() const { return socks_.empty(); }
  Sock operator[](std::size_t i) const { return socks_[i]; }
  Sock front() const { return socks_.front(); }
  Sock back() const { return socks_.back(); }
  const_iterator begin() const { return socks_.begin(); }
  const_iterator end() const { return socks_.end(); }
  std::span<const Sock> view() const { return socks_; }
  const std::vector<Sock>& socks() const { return socks_; }

  void push_back(Sock s) { socks_.push_back(s); }
  void pop_back() { socks_.pop_back(); }
  void append(const SockSeq& other) {
    socks_.insert(socks_.end(), other.begin(), other.end());
  }

  /// Number of distinct socks.
  std::size_t distinct() const;
  /// Largest id, or 0 for the empty sequence.
  Sock max_id() const;

  /// Letters when every id is at most 25, comma-separated integers otherwise.
  std::string str() const;

  friend auto operator<=>(const SockSeq&, const SockSeq&) = default;
  friend bool operator==(const SockSeq&, const SockSeq&) = default;

 private:
  std::vector<Sock> socks_;
};

struct SockSeqHash {
  std::size_t operator()(const SockSeq& s) const noexcept;
};

/// Concatenation.
SockSeq operator+(SockSeq lhs, const SockSeq& rhs);

/// `count` copies of `sock`.
SockSeq repeat(Sock sock, std::size_t count);

SockSeq standardize(const SockSeq& p);
bool is_standardized(const SockSeq& p);
bool equivalent(const SockSeq& p, const SockSeq& q);

/// Every sock's occurrences form one contiguous run.
bool is_sorted(std::span<const Sock> p);
inline bool is_sorted(const SockSeq& p) { return is_sorted(p.view()); }

SockSeq rev(const SockSeq& p);

// --- set partitions -------------------------------------------------------

/// Blocks of {1,...,n}, each sorted ascending, blocks ordered by minimum.
class SetPartition {
 public:
  SetPartition() = default;
  /// Validates and canonicalizes. Throws std::invalid_argument on overlap,
  /// gaps, empty blocks or elements outside {1,...,n}.
  explicit SetPartition(std::vector<std::vector<int>> blocks);

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  std::size_t size() const { return n_; }

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  std::vector<std::vector<int>> blocks_;
  std::size_t n_ = 0;
};

SockSeq partition_to_seq(const SetPartition& sp);
SetPartition seq_to_partition(const SockSeq& p);

// --- multisets ------------------------------------------------------------

class SockMultiset {
 public:
  SockMultiset() = default;
  /// Throws std::invalid_argument on a zero multiplicity.
  explicit SockMultiset(std::map<Sock, std::size_t> counts);
  static SockMultiset of(const SockSeq& p);

  const std::map<Sock, std::size_t>& counts() const { return counts_; }
  std::size_t total() const { return total_; }

 private:
  std::map<Sock, std::size_t> counts_;
  std::size_t total_ = 0;
};

// --- enumeration ----------------------------------------------------------

/**
 * Restricted-growth-string enumerator: yields each standardized sequence of
 * length n exactly once, in lexicographic order.
 */
class StandardizedEnumerator {
 public:
  explicit StandardizedEnumerator(std::size_t n);
  /// Advances to the next sequence; false once exhausted.
  bool next();
  const SockSeq& current() const { return current_; }

 private:
  std::size_t n_;
  SockSeq current_;
  std::vector<Sock> prefix_max_;
  bool started_ = false;
  bool done_ = false;
};

/// Calls `visit` on every standardized sequence of length n. Returns the count.
std::uint64_t for_each_standardized(std::size_t n,
                                    const std::function<void(const SockSeq&)>& visit);
std::vector<SockSeq> enumerate_standardized(std::size_t n);

/// Every arrangement of `m` exactly once up to equivalence, each as its
/// standardized representative, in lexicographic order.
std::vector<SockSeq> enumerate_multiset_arrangements(const SockMultiset& m);

/// Bell number via the Bell triangle. Throws std::out_of_range above 25.
std::uint64_t bell_number(std::size_t n);
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace socksort
