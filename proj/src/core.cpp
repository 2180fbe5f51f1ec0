#include "socksort/core.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace socksort {

SockSeq SockSeq::parse(std::string_view text) {
  std::vector<Sock> socks;
  if (text.empty()) return SockSeq{};
  if (text.find(',') != std::string_view::npos ||
      std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view tok = text.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      Sock value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad sock token '" + std::string(tok) + "'");
      }
      socks.push_back(value);
      pos = comma + 1;
    }
    return SockSeq{std::move(socks)};
  }
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("bad sock letter '") + c + "'");
    }
    socks.push_back(static_cast<Sock>(c - 'a'));
  }
  return SockSeq{std::move(socks)};
}

std::size_t SockSeq::distinct() const {
  std::unordered_set<Sock> seen(socks_.begin(), socks_.end());
  return seen.size();
}

Sock SockSeq::max_id() const {
  return socks_.empty() ? 0 : *std::max_element(socks_.begin(), socks_.end());
}

std::string SockSeq::str() const {
  std::string out;
  if (max_id() <= 25) {
    for (Sock s : socks_) out.push_back(static_cast<char>('a' + s));
    return out;
  }
  for (std::size_t i = 0; i < socks_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(socks_[i]);
  }
  return out;
}

std::size_t SockSeqHash::operator()(const SockSeq& s) const noexcept {
  // FNV-1a over the ids
  std::uint64_t h = 1469598103934665603ull;
  for (Sock x : s) {
    h ^= x + 0x9e3779b9u;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h ^ s.size());
}

SockSeq operator+(SockSeq lhs, const SockSeq& rhs) {
  lhs.append(rhs);
  return lhs;
}

SockSeq repeat(Sock sock, std::size_t count) {
  return SockSeq{std::vector<Sock>(count, sock)};
}

SockSeq standardize(const SockSeq& p) {
  std::unordered_map<Sock, Sock> rename;
  std::vector<Sock> out;
  out.reserve(p.size());
  for (Sock s : p) {
    auto [it, fresh] = rename.try_emplace(s, static_cast<Sock>(rename.size()));
    out.push_back(it->second);
  }
  return SockSeq{std::move(out)};
}

bool is_standardized(const SockSeq& p) {
  Sock next = 0;
  for (Sock s : p) {
    if (s > next) return false;
    if (s == next) ++next;
  }
  return true;
}

bool equivalent(const SockSeq& p, const SockSeq& q) {
  return p.size() == q.size() && standardize(p) == standardize(q);
}

bool is_sorted(std::span<const Sock> p) {
  std::unordered_set<Sock> closed;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0 && p[i] == p[i - 1]) continue;
    if (!closed.insert(p[i]).second) return false;
  }
  return true;
}

SockSeq rev(const SockSeq& p) {
  return SockSeq{std::vector<Sock>(p.socks().rbegin(), p.socks().rend())};
}

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) {
  std::size_t n = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("set partition has an empty block");
    std::sort(block.begin(), block.end());
    n += block.size();
  }
  std::vector<bool> seen(n + 1, false);
  for (const auto& block : blocks) {
    for (int x : block) {
      if (x < 1 || static_cast<std::size_t>(x) > n) {
        throw std::invalid_argument("set partition element " + std::to_string(x) +
                                    " outside 1.." + std::to_string(n));
      }
      if (seen[x]) {
        throw std::invalid_argument("set partition blocks overlap at " + std::to_string(x));
      }
      seen[x] = true;
    }
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  blocks_ = std::move(blocks);
  n_ = n;
}

SockSeq partition_to_seq(const SetPartition& sp) {
  std::vector<Sock> out(sp.size(), 0);
  for (std::size_t b = 0; b < sp.blocks().size(); ++b) {
    for (int x : sp.blocks()[b]) out[x - 1] = static_cast<Sock>(b);
  }
  return SockSeq{std::move(out)};
}

SetPartition seq_to_partition(const SockSeq& p) {
  SockSeq s = standardize(p);
  std::vector<std::vector<int>> blocks(s.empty() ? 0 : s.max_id() + 1);
  for (std::size_t i = 0; i < s.size(); ++i) blocks[s[i]].push_back(static_cast<int>(i + 1));
  return SetPartition{std::move(blocks)};
}

SockMultiset::SockMultiset(std::map<Sock, std::size_t> counts) : counts_(std::move(counts)) {
  for (const auto& [sock, count] : counts_) {
    if (count == 0) {
      throw std::invalid_argument("multiset count for sock " + std::to_string(sock) + " is zero");
    }
    total_ += count;
  }
}

SockMultiset SockMultiset::of(const SockSeq& p) {
  std::map<Sock, std::size_t> counts;
  for (Sock s : p) ++counts[s];
  return SockMultiset{std::move(counts)};
}

StandardizedEnumerator::StandardizedEnumerator(std::size_t n)
    : n_(n), current_(std::vector<Sock>(n, 0)), prefix_max_(n, 0) {}

bool StandardizedEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  // prefix_max_[i] is the max over positions [0, i)
  std::vector<Sock> s = current_.socks();
  for (std::size_t i = n_; i-- > 1;) {
    if (s[i] <= prefix_max_[i]) {
      ++s[i];
      for (std::size_t j = i + 1; j < n_; ++j) {
        s[j] = 0;
        prefix_max_[j] = std::max(prefix_max_[j - 1], s[j - 1]);
      }
      current_ = SockSeq{std::move(s)};
      return true;
    }
  }
  done_ = true;
  return false;
}

std::uint64_t for_each_standardized(std::size_t n,
                                    const std::function<void(const SockSeq&)>& visit) {
  StandardizedEnumerator it(n);
  std::uint64_t count = 0;
  while (it.next()) {
    visit(it.current());
    ++count;
  }
  return count;
}

std::vector<SockSeq> enumerate_standardized(std::size_t n) {
  std::vector<SockSeq> out;
  for_each_standardized(n, [&](const SockSeq& s) { out.push_back(s); });
  return out;
}

std::vector<SockSeq> enumerate_multiset_arrangements(const SockMultiset& m) {
  std::vector<Sock> perm;
  perm.reserve(m.total());
  for (const auto& [sock, count] : m.counts()) perm.insert(perm.end(), count, sock);
  std::unordered_set<SockSeq, SockSeqHash> seen;
  std::vector<SockSeq> out;
  do {
    SockSeq s = standardize(SockSeq{perm});
    if (seen.insert(s).second) out.push_back(std::move(s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t bell_number(std::size_t n) {
  if (n > 25) throw std::out_of_range("Bell numbers are tabulated up to n = 25");
  if (n == 0) return 1;
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.back();
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace socksort
