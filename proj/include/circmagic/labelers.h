#pragma once

// Explicit distance magic labelings for the classified families, plus the
// tetravalent sub-labeling that the first type-1 construction consumes.

#include <optional>
#include <stdexcept>
#include <string>

#include "circmagic/families.h"
#include "circmagic/labeling.h"
#include "circmagic/oracle.h"

namespace circmagic {

// A search-backed construction ran out of budget or exhausted its space.
class SearchFailure : public std::runtime_error {
 public:
  explicit SearchFailure(const std::string& what) : std::runtime_error(what) {}
};

// Ml[m] or Pr[m]: vertex x < 2m gets x + 1, vertex x + 2m gets 4m - x.
Labeling label_lex_pair(const Family& f);

// How the second type-1 construction labels H = <4> with {1..n0}, where
// lambda = b' + d + 2 n0 and mu = c' + d + 2 n0.
enum class Case2Coordinates {
  // 1 + zeta + xi d d' for x = zeta lambda + xi mu. This respects the group
  // structure only when d = 1; for d > 1 the result does not verify.
  kScaffold,
  // 1 + (t mod d') + d' (t mod d'') + d' d'' (t mod d) for x = 4t: a sum of
  // functions that are periodic under mu, lambda and lambda + mu.
  kQuotient,
};

// Label values of the construction for the given coordinates, unverified.
std::vector<Int> t1_case2_values(const T1Case2& f, Case2Coordinates coords);

// T1b[d,d',d'']: the scaffold coordinates for d = 1, the quotient
// coordinates otherwise.
Labeling label_t1_case2(const T1Case2& f);

// T2[d,d'] with d, d' odd; throws DomainError for an even parameter.
Labeling label_t2(const T2Family& f);

enum class SublabelingMethod {
  kAuto,           // constrained search, then residue split if over budget
  kSearch,         // constrained search only
  kResidueSplit,   // closed form below
};

struct Sublabeling {
  Labeling labeling;
  SublabelingMethod method;  // the method that produced it (never kAuto)
  std::optional<SearchStats> search;
};

struct SublabelingOptions {
  SublabelingMethod method = SublabelingMethod::kAuto;
  SearchBudget budget{500'000, 0};
  // kAuto only: further caps nodes at auto_work / n0, since a node costs
  // O(n0). Keeps the give-up cost flat across orders. 0 disables.
  std::uint64_t auto_work = 5'000'000;
};

// Labeling of Circ(2 n0; {±1, ±c0}) with
//   (i)   neighbour sums 2(2 n0 + 1),
//   (ii)  labels {1..n0} on even vertices,
//   (iii) l(y) + l(y + n0) = 2 n0 + 1.
// Requires n0 odd, c0 even, n0 | c0^2 - 1 and c0 != ±1 (mod 2 n0).
//
// The residue split writes n0 = d1 d2 with d1 = gcd(c0 - 1, n0) and
// d2 = gcd(c0 + 1, n0), sets G(t) = 1 + (t mod d1) + d1 (t mod d2) on Z_n0,
// and labels y with G(y mod n0) for even y and 2 n0 + 1 - G(y mod n0) for
// odd y. Shifting t by c0 moves t mod d1 like +1 and t mod d2 like -1, so
// G(t + c0) + G(t - c0) = G(t + 1) + G(t - 1), which is (i) after (iii).
//
// Throws SearchFailure when the search alone is requested and fails.
Sublabeling tetravalent_sublabeling(Int n0, Int c0, const SublabelingOptions& options = {});

// Whether l satisfies (i)-(iii) above.
bool satisfies_sublabeling_contract(const Labeling& l, Int n0, Int c0);

// T1a[d,d'], assembled from the sub-labeling for (dd', c/2).
Labeling label_t1_case1(const T1Case1& f, const SublabelingOptions& options = {});

// C3K[m]. Reuses the T2 labeling when m = dd' with 1 < d < d' coprime and
// prime to 6 (its triple sums over cosets of <m> are constant); otherwise
// searches. Throws DomainError for m = 2 (mod 4), SearchFailure when the
// search does not succeed.
Labeling label_cycle_lex(Int m, const SearchBudget& budget = {kDefaultSearchNodes, 0});

// Labeling of family_connection_set(f). Throws DomainError for family
// members that are not distance magic.
Labeling label_family(const Family& f, const SearchBudget& budget = {kDefaultSearchNodes, 0});

// A labeling for an arbitrary valency-6 set: via a recognized family and
// transport along the multiplier, else via search.
struct SetLabeling {
  Labeling labeling;
  std::optional<Recognition> family;  // absent when found by search
  std::optional<SearchStats> search;
};
// Throws SearchFailure when no family applies and the search fails, and
// DomainError for a recognized family known not to be distance magic.
SetLabeling label_connection_set(const ConnectionSet& s,
                                 const SearchBudget& budget = {kDefaultSearchNodes, 0});

}  // namespace circmagic
