#pragma once

// Exhaustive scan over all connected valency-6 classes of small orders:
// decide next to an independent search, with an agreement matrix.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circmagic/decide.h"
#include "circmagic/families.h"
#include "circmagic/oracle.h"

namespace circmagic {

struct ScanOptions {
  Int n_min = 7;
  Int n_max = 16;
  SearchBudget budget{kDefaultSearchNodes, 0};  // per search, for decide and the oracle
  int jobs = 1;         // worker threads; 0 = hardware concurrency
  bool search = true;   // run the oracle search next to decide
  SearchOptions search_options;  // the oracle always runs with the prefilter off
};

enum class Agreement {
  kAgree,         // decide and search give the same existence answer
  kDisagree,      // yes vs exhausted, or no vs found
  kInconclusive,  // either side unknown / over budget / skipped
};

std::string to_string(Agreement a);

struct ScanRecord {
  ConnectionSet set;
  FilterResult filter;
  TagProfile profile;
  std::vector<Int> admissible;   // j values
  std::vector<Family> families;  // every recognized family label
  DmVerdict verdict;
  std::optional<SearchOutcome> search;
  Agreement agreement = Agreement::kInconclusive;
};

// counts[verdict][search kind], with a fourth column for "not searched".
struct AgreementMatrix {
  std::array<std::array<std::uint64_t, 4>, 3> counts{};
  std::uint64_t agree = 0, disagree = 0, inconclusive = 0;

  void add(const ScanRecord& r);
};

struct ScanReport {
  std::vector<ScanRecord> records;  // ordered by (n, canonical set)
  AgreementMatrix matrix;
  double seconds = 0;
};

// Throws DomainError when n_max exceeds the hard cap of options.search_options
// (CIRCMAGIC_HARD_CAP when unset) or n_min > n_max.
ScanReport exhaustive_scan(const ScanOptions& options);

// Scans a single order with no cap check; used for reporting rows such as
// n = 24 where only Found / over-budget results are meaningful.
std::vector<ScanRecord> scan_order(Int n, const ScanOptions& options);

// One JSON object per record, no trailing newline.
std::string to_json_line(const ScanRecord& r);
std::string to_json(const AgreementMatrix& m);

}  // namespace circmagic
