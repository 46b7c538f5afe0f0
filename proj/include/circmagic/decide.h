#pragma once

// Decision procedure for distance magicness of a valency-6 circulant: the
// spectral filter, the type-1 and type-2 classifications, the type-3
// necessary conditions, and search for the remaining mixed profiles.

#include <optional>
#include <string>

#include "circmagic/families.h"
#include "circmagic/labeling.h"
#include "circmagic/oracle.h"
#include "circmagic/spectra.h"

namespace circmagic {

enum class Verdict { kYes, kNo, kUnknown };

enum class NoReason {
  kNone,
  kEmptyKernel,
  kCommonDivisor,
  kTheoremType1,
  kTheoremType2,
  kType3Necessary,
  kSearchExhausted,
};

std::string to_string(Verdict v);    // "yes", "no", "unknown"
std::string to_string(NoReason r);   // "empty-kernel", "common-divisor", ...

struct DecideOptions {
  SearchBudget budget{kDefaultSearchNodes, 0};
  SearchOptions search;  // prefilter is redundant here and is switched off
};

struct DmVerdict {
  Verdict status = Verdict::kUnknown;
  NoReason reason = NoReason::kNone;
  int step = 0;  // 1..6, the cascade step that decided

  FilterResult filter;
  TagProfile profile;
  std::optional<Recognition> family;     // Yes by family
  std::optional<Labeling> labeling;      // Yes by search
  std::optional<Type3Check> type3;       // when step 5 ran
  std::optional<SearchStats> search;     // when step 6 searched
};

// Throws DomainError if s is disconnected.
DmVerdict decide(const ConnectionSet& s, const DecideOptions& options = {});

}  // namespace circmagic
