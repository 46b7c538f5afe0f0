#pragma once

// Command layer behind the circmagic executable. Each command returns its
// rendered output and exit code instead of printing, so tests can drive it.
//
// Exit codes: 0 success / yes, 1 no / failure, 2 usage error,
// 3 unknown / over budget.

#include <optional>
#include <string>

#include "circmagic/oracle.h"

namespace circmagic::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnknown = 3;

std::string version();

enum class Format { kJson, kTable };

struct Options {
  SearchBudget budget{kDefaultSearchNodes, 0};
  int jobs = 1;
  Format format = Format::kJson;
  Int nmax = 16;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string out;  // JSON lines or table text, newline-terminated
  std::string err;  // diagnostics for stderr
};

Outcome cmd_admissible(const std::string& set, const Options& opts);
Outcome cmd_decide(const std::string& set, const Options& opts);
Outcome cmd_recognize(const std::string& set, const Options& opts);
// `spec` is a family ("T1b[5,7,11]") or a set ("24:1,2,3").
Outcome cmd_label(const std::string& spec, const Options& opts);
// `set` may have any even valency; `labeling` is JSON array or CSV text.
Outcome cmd_verify(const std::string& set, const std::string& labeling, const Options& opts);

struct SearchFlags {
  bool pairing = false;
  bool parity_block = false;
  bool symmetry_breaking = true;
  bool prefilter = true;
};
Outcome cmd_search(const std::string& set, const SearchFlags& flags, const Options& opts);

// Classes of order n, or the family instances of order n when `families`.
Outcome cmd_enumerate(Int n, bool families, const Options& opts);

// exhaustive_scan up to opts.nmax; one record per class plus a summary.
Outcome cmd_scan(Int nmin, const Options& opts);

// Runs the fixture suite. `tamper` corrupts the embedded Gamma_3 table, as a
// negative control that must make the suite fail.
Outcome cmd_selftest(const Options& opts, bool tamper = false);

}  // namespace circmagic::cli
