#pragma once

// The six parametric families of valency-6 circulants with known distance
// magic status: three lexicographic products (Ml_m[2K1], Pr_m[2K1],
// C_m[3K1]) and three CRT-defined families.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "circmagic/circulant.h"
#include "circmagic/spectra.h"

namespace circmagic {

// n = 4m (m >= 2), {±1, ±m, ±(2m-1)}
struct MobiusLadderLex {
  Int m;
  friend bool operator==(const MobiusLadderLex&, const MobiusLadderLex&) = default;
};
// n = 4m (m odd), {±2, ±m, ±(2m-2)}
struct PrismLex {
  Int m;
  friend bool operator==(const PrismLex&, const PrismLex&) = default;
};
// n = 3m, {±1, ±(m-1), ±(m+1)}
struct CycleLex {
  Int m;
  friend bool operator==(const CycleLex&, const CycleLex&) = default;
};
// n = 4 d d', {±2, ±n0, ±c'} with c' = 0 (4), 2 (d), -2 (d').
struct T1Case1 {
  Int d, d1;
  friend bool operator==(const T1Case1&, const T1Case1&) = default;
};
// n = 4 d d' d'', {±d, ±b', ±c'}.
struct T1Case2 {
  Int d, d1, d2;
  friend bool operator==(const T1Case2&, const T1Case2&) = default;
};
// n = 3 d d', {±1, ±(n0 + delta), ±c'}.
struct T2Family {
  Int d, d1;
  friend bool operator==(const T2Family&, const T2Family&) = default;
};

using Family = std::variant<MobiusLadderLex, PrismLex, CycleLex, T1Case1, T1Case2, T2Family>;

// Throws DomainError if the parameters violate the family's constraints.
void validate(const Family& f);

Int family_order(const Family& f);

// "Ml[m]", "Pr[m]", "C3K[m]", "T1a[d,d']", "T1b[d,d',d'']", "T2[d,d']".
std::string to_string(const Family& f);
// Inverse of to_string; validates. Throws std::invalid_argument on syntax
// errors and DomainError on bad parameters.
Family parse_family(std::string_view text);

bool is_trivial(const Family& f);       // the three lexicographic products
bool is_type1_family(const Family& f);  // Ml, Pr, T1a, T1b
bool is_type2_family(const Family& f);  // C3K, T2

// Known distance magic status: always true except C3K[m] with m = 2 (mod 4)
// and T2[d,d'] with an even parameter.
bool family_is_distance_magic(const Family& f);

// The defining elements before normalization, e.g. (d, b', c') for T1b.
std::array<Int, 3> family_raw_elements(const Family& f);

// Validates, then builds the normalized connection set.
ConnectionSet family_connection_set(const Family& f);

// delta in {-1, 1} with n0 = delta modulo `modulus` (3 or 4).
Int unit_residue_sign(Int n0, Int modulus);

// Every valid family instance of order n: trivial families (Ml, Pr, C3K),
// then T1a, T1b, T2, parameters ascending.
std::vector<Family> enumerate_families(Int n);

struct Recognition {
  Family family;
  Int q;  // multiply(S, q) == family_connection_set(family)
};

enum class FamilyFilter { kAll, kTrivial, kType1, kType2 };

// First (family, q) in enumeration order with units q ascending.
std::optional<Recognition> recognize(const ConnectionSet& s,
                                     FamilyFilter filter = FamilyFilter::kAll);

// One entry per matching family instance.
std::vector<Recognition> recognize_all(const ConnectionSet& s,
                                       FamilyFilter filter = FamilyFilter::kAll);

// Necessary conditions for a distance magic set with a type-3 character.
struct Type3Check {
  enum class Bullet {
    kNone,              // all conditions hold
    kDivisibility,      // 60 | n
    kThreePart,         // 3-part of n is 3
    kFivePart,          // 5-part of n is 5
    kFiveMultiple,      // unique s with 5 | s, and s in {n/12, 5n/12}
    kNeedsType1,        // some T1 character
    kHasType2,          // no T2 character
    kType1Residues,     // T1 characters odd and divisible by 15
    kType3Residues,     // T3 characters even and coprime to 15
  };
  Bullet failed = Bullet::kNone;
  std::optional<Int> five_multiple;  // the s of the fourth condition when unique

  bool passed() const { return failed == Bullet::kNone; }
};

std::string to_string(Type3Check::Bullet b);

// Throws DomainError unless some admissible character carries T3.
Type3Check type3_necessary(const ConnectionSet& s);
Type3Check type3_necessary(const ConnectionSet& s, std::span<const AdmissibleChar> chars);

}  // namespace circmagic
