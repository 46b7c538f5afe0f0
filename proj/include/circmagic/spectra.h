#pragma once

// Admissible characters of valency-6 circulants.
//
// A character index j is admissible for S when chi_j(S) = sum_{s in S}
// zeta_n^{js} vanishes. Two exact engines decide this:
//
//   * the congruence engine (type1_test / type2_test / type3_test), which
//     matches the three families of rational zeros of
//     cos(r1 pi) + cos(r2 pi) + cos(r3 pi) against j and S, and
//   * the cyclotomic engine (char_sum_is_zero / CharacterOracle), which tests
//     whether Phi_n divides sum_{s in S} x^{(js) mod n}.
//
// Neither engine touches floating point.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "circmagic/circulant.h"

namespace circmagic {

using BigInt = boost::multiprecision::cpp_int;

// Coefficient of x^i stored at index i.
using Polynomial = std::vector<BigInt>;

// n-th cyclotomic polynomial, by exact division of x^n - 1 by Phi_d for the
// proper divisors d of n. Results are memoized; safe to call concurrently.
const Polynomial& cyclotomic_poly(Int n);

// Remainder of p modulo the monic polynomial m (exact, integer arithmetic).
Polynomial poly_mod_monic(Polynomial p, const Polynomial& m);

// chi_j(S) == 0, by a direct polynomial remainder against Phi_n.
bool char_sum_is_zero(const ConnectionSet& s, Int j);

// Precomputed residues x^e mod Phi_n (0 <= e < n) for bulk zero tests on one
// order. Coefficients are held in 64-bit words with checked arithmetic;
// construction throws std::overflow_error if a residue leaves that range.
class CharacterOracle {
 public:
  explicit CharacterOracle(Int n);

  Int n() const { return n_; }

  // Whether sum_e x^{e mod n} is divisible by Phi_n.
  bool vanishes(std::span<const Int> exponents) const;

  bool char_sum_is_zero(const ConnectionSet& s, Int j) const;

  // All j in [1, n) with chi_j(S) == 0.
  std::vector<Int> zero_set(const ConnectionSet& s) const;

 private:
  Int n_;
  size_t degree_;
  std::vector<std::int64_t> rows_;  // n_ rows of degree_ coefficients
};

enum class TypeTag { T1 = 1, T2 = 2, T3 = 3 };

std::string to_string(TypeTag t);

// Integer witness for one type test. `assignment` is the signed triple
// (s1, s2, s3), a permutation of {±a, ±b, ±c} with one sign per element.
//
//   T1: j*s2 = n0 (1 + 2 k1),  j*(s1 + s3) = 2 n0 (1 + 2 k2),  n0 = n/4
//   T2: j*(s2 - s1) = n0 (1 + 3 k1),  j*(s3 - s1) = n0 (2 + 3 k2),  n0 = n/3
//   T3, variant 1: 10 j s1 = n (1 + 10 k1), 10 j s2 = n (3 + 10 k2),
//                  3 j s3 = n (1 + 3 k3)
//   T3, variant 2: 6 j s1 = n (1 + 6 k1), 5 j s2 = n (1 + 5 k2),
//                  5 j s3 = n (2 + 5 k3)
struct TypeWitness {
  TypeTag type = TypeTag::T1;
  std::array<Int, 3> assignment{};
  std::vector<Int> ks;
  std::optional<Int> j0;  // T3 only: j / (n/30) when divisible
  int variant = 0;        // T3 only: 1 or 2

  friend bool operator==(const TypeWitness&, const TypeWitness&) = default;
};

std::optional<TypeWitness> type1_test(const ConnectionSet& s, Int j);
std::optional<TypeWitness> type2_test(const ConnectionSet& s, Int j);
std::optional<TypeWitness> type3_test(const ConnectionSet& s, Int j);

// Re-substitutes the witness into its defining integer identities.
bool witness_holds(const ConnectionSet& s, Int j, const TypeWitness& w);

struct AdmissibleChar {
  Int j = 0;
  std::vector<TypeTag> types;  // ascending, never empty
  std::vector<TypeWitness> witnesses;

  bool has(TypeTag t) const;
};

// All j in [1, n) for which some type test succeeds, ascending.
std::vector<AdmissibleChar> admissible_set(const ConnectionSet& s);

struct TagProfile {
  bool empty = true;
  bool all_t1 = false;  // every character carries T1 (possibly also T2)
  bool all_t2 = false;
  bool any_t1 = false;
  bool any_t2 = false;
  bool any_t3 = false;
};

TagProfile tag_profile(std::span<const AdmissibleChar> chars);

struct FilterResult {
  enum class Kind { kPass, kEmpty, kCommonDivisor };
  Kind kind = Kind::kPass;
  Int divisor = 1;  // for kCommonDivisor

  bool passed() const { return kind == Kind::kPass; }
  std::string reason() const;  // "pass", "empty" or "gcd"
};

// Necessary conditions from the 0-eigenspace: fails when no character is
// admissible, or when some 1 < d < n divides every admissible j.
FilterResult candidate_filter(const ConnectionSet& s);
FilterResult candidate_filter(const ConnectionSet& s, std::span<const AdmissibleChar> chars);

}  // namespace circmagic
