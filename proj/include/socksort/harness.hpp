#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "socksort/core.hpp"

namespace socksort {

enum class OutputFormat { Text, JsonLines };

/// One line of a report: a text rendering plus the equivalent record.
struct ReportLine {
  std::string text;
  nlohmann::ordered_json record;
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<ReportLine> lines;
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

inline constexpr std::size_t kVerifyMinN = 3;
inline constexpr std::size_t kVerifyMaxN = 9;

/**
 * Runs every cross-check in a fixed order: evaluator identities, image
 * oracle equivalence for both maps, witness validity, preimage/membership
 * agreement, fertility and staircase counts, the s(n) and s(n, r) tables and
 * the alternating unsortability witness. Suites run concurrently but the
 * report is assembled in order and contains no timings, so identical calls
 * yield identical reports. Throws BoundError outside [3, 9].
 */
VerifyReport verify(std::size_t max_n);

void write_report(std::ostream& os, const VerifyReport& report, OutputFormat format);

// --- benchmark ------------------------------------------------------------

inline constexpr std::uint64_t kDefaultBenchSeed = 0x50C55EEDull;
inline constexpr std::size_t kBruteForceCap = 12;
inline constexpr std::size_t kBenchMaxLength = 10000;

struct BenchRow {
  std::size_t length = 0;
  bool aba_member = false;
  bool cons_member = false;
  double aba_seconds = 0;
  double cons_seconds = 0;
  // Same timings on phi(p) for each map, which is always a member.
  double aba_image_seconds = 0;
  double cons_image_seconds = 0;
  bool image_inputs_accepted = true;
  bool brute_force_ran = false;
  std::uint64_t brute_force_sequences = 0;
  double brute_force_seconds = 0;
  bool brute_force_agrees = true;
};

/// Random standardized sequence: each sock is drawn uniformly from the ids
/// already used plus one fresh id.
SockSeq random_standardized(std::size_t n, std::uint64_t seed);

/// Throws BoundError for lengths above kBenchMaxLength.
std::vector<BenchRow> bench(const std::vector<std::size_t>& lengths,
                            std::uint64_t seed = kDefaultBenchSeed);

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, OutputFormat format);

}  // namespace socksort
