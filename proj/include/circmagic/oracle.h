#pragma once

// Exact backtracking search for distance magic labelings at desk scale.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "circmagic/circulant.h"
#include "circmagic/labeling.h"
#include "circmagic/spectra.h"

namespace circmagic {

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  double max_seconds = 0;       // 0 = unlimited
};

// Budget used by decide for the search step when the caller gives none.
inline constexpr std::uint64_t kDefaultSearchNodes = 2'000'000;

struct SearchStats {
  std::uint64_t nodes = 0;  // value choices tried
  int max_depth = 0;        // deepest branching level reached
  double seconds = 0;
  bool covered = false;      // the whole (symmetry-reduced) space was explored
  bool prefiltered = false;  // decided by candidate_filter before any search
};

struct SearchOutcome {
  enum class Kind { kFound, kExhausted, kBudgetExceeded };
  Kind kind = Kind::kBudgetExceeded;
  std::optional<Labeling> labeling;  // kFound only
  SearchStats stats;

  bool found() const { return kind == Kind::kFound; }
};

std::string to_string(SearchOutcome::Kind k);  // "found", "exhausted", "budget"

struct SearchOptions {
  bool prefilter = true;          // consult candidate_filter first (valency 6 only)
  bool symmetry_breaking = true;  // anchor label at vertex 0 + stabilizer orbits
  // Also propagate the difference of every two neighbourhoods sharing at
  // least two vertices.
  bool implied_constraints = true;
  // Also propagate residue-class sums forced by the 0-eigenspace.
  bool coset_constraints = true;
  // Exhaustion above this order is reported as kBudgetExceeded with
  // stats.covered set. Negative means "read CIRCMAGIC_HARD_CAP, default 16".
  Int hard_cap = -1;
};

// CIRCMAGIC_HARD_CAP if set to a positive integer, else 16.
Int default_hard_cap();

// Structural restrictions for search_constrained.
struct SearchConstraints {
  bool pairing = false;       // l(v) + l(v + n/2) = n + 1
  bool parity_block = false;  // even vertices receive {1, ..., n/2}
};

SearchOutcome search_labeling(const ConnectionSet& s, const SearchBudget& budget,
                              const SearchOptions& options = {});

// Any even valency; no spectral prefilter.
SearchOutcome search_labeling(const Circulant& g, const SearchBudget& budget,
                              const SearchOptions& options = {});

// Throws DomainError for odd n, or when pairing and parity_block are both
// requested but n/2 is even (paired vertices would share a parity class).
SearchOutcome search_constrained(const Circulant& g, const SearchConstraints& constraints,
                                 const SearchBudget& budget, const SearchOptions& options = {});

}  // namespace circmagic
