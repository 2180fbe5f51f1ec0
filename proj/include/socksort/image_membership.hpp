#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socksort/core.hpp"

namespace socksort {

// --- evaluators -----------------------------------------------------------

struct SandwichEntry {
  Sock sock;
  std::size_t index;  // 0-based position in the original sequence
  friend bool operator==(const SandwichEntry&, const SandwichEntry&) = default;
};

/// Sandwich set (ordered by original index) and the residual left behind.
struct SandwichDecomposition {
  std::vector<SandwichEntry> sandwich;
  SockSeq residual;
};

/// Repeatedly removes the leftmost sock whose two current neighbours are
/// equal to each other and differ from it.
SandwichDecomposition sandwich_decompose(const SockSeq& p);

/// Sandwich socks in order, then the reversed residual. Agrees with
/// phi(p, {~aba}).
SockSeq phi_cons_via_sandwich(const SockSeq& p);

/// p = x^l1 s1 x^l2 s2 ... x^lm sm x^l(m+1) with x = p[0].
struct AbaDecomposition {
  Sock x;
  std::vector<std::size_t> runs;  // l1..l(m+1); the last entry may be 0
  std::vector<SockSeq> gaps;      // s1..sm, non-empty and x-free
};

/// Throws std::invalid_argument on an empty sequence.
AbaDecomposition aba_decompose(const SockSeq& p);
SockSeq phi_aba_via_decomposition(const SockSeq& p);

// --- membership for the consecutive-aba map -------------------------------

struct ConsMembership {
  bool member = false;
  /// A preimage under phi(., {~aba}), in the input's labels.
  std::optional<SockSeq> witness;
  /// Length of the left part at the certifying split.
  std::optional<std::size_t> split;
};

/**
 * Exact membership test for the image of phi(., {~aba}), O(n^2).
 *
 * A split q = E.R certifies membership when R has no xyx factor and the
 * socks of E, taken left to right, can be matched to equal adjacent pairs of
 * R found scanning right to left. Pair `R[t-1] R[t]` accepts sock e when
 * `R[t] != e` and the sock following the pair, if any, also differs from e.
 * Consecutive pairs may share a sock. The witness is rev(R) with each e
 * inserted between its pair.
 */
ConsMembership in_image_cons(const SockSeq& q);

/**
 * The split/pair procedure taken verbatim: R must be sorted, pairs are
 * disjoint and need only differ from the matched sock. Kept as a reference
 * point; it does not characterize the image (see `verify`).
 */
ConsMembership in_image_cons_literal(const SockSeq& q);

// --- membership for the classical-aba map ---------------------------------

enum class GammaEvent { DividerHit, RunScored, DividerInserted, DividersRemoved };

struct GammaStep {
  /// Cursor: the sock after the divider for DividerHit, the last sock of the
  /// run otherwise.
  std::size_t position = 0;
  GammaEvent event = GammaEvent::DividerHit;
  // RunScored fields
  std::size_t run_length = 0;  // l
  std::size_t block = 0;       // j
  std::size_t prev_block = 0;  // m
  long k = 0;
  /// Dividers removed or inserted by this step.
  std::size_t count = 0;
  long gamma_after = 0;
  /// Divider layout after the step; divider d sits immediately before index d.
  std::vector<std::size_t> dividers;
};

struct GammaCheckpoint {
  std::size_t position;
  long gamma;
  std::vector<std::size_t> dividers;
};

struct GammaTrace {
  std::vector<std::size_t> initial_dividers;
  std::vector<GammaStep> steps;
  long final_gamma = 0;

  /// The rows a hand-worked table shows: the starting position, every
  /// divider encountered, and every run that could merge (l >= 2) or that
  /// scored k != 0.
  std::vector<GammaCheckpoint> checkpoints() const;
};

/**
 * What happens to dividers to the right of a k = -1 insertion. `Literal`
 * only inserts the new divider. `Reseat` also re-places every divider after
 * it with the greedy rule, starting a fresh region at the new divider; this
 * is the variant that matches the brute-force image.
 */
enum class DividerRule { Literal, Reseat };

struct AbaMembership {
  bool member = false;
  GammaTrace trace;
};

/// Greedy initial dividers: each region ends right before the sock that first
/// completes an aba occurrence inside it.
std::vector<std::size_t> initial_dividers(const SockSeq& p);

AbaMembership in_image_aba(const SockSeq& p, DividerRule rule = DividerRule::Reseat);

/// `bc‖ba‖bccdd`, with the cursor sock optionally bracketed.
std::string render_dividers(const SockSeq& p, const std::vector<std::size_t>& dividers,
                            std::optional<std::size_t> cursor = std::nullopt);

const char* to_string(GammaEvent e);
const char* to_string(DividerRule r);

}  // namespace socksort
