#pragma once

// Exact residue arithmetic on machine integers.
//
// Values are stored as 64-bit signed integers; every product that can leave
// the 64-bit range is formed in 128-bit intermediates before reduction. The
// supported graph orders are n <= 10^6, so residues and moduli stay far below
// 2^62.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circmagic {

using Int = std::int64_t;

// Raised for violated mathematical preconditions (non-unit inverses,
// degenerate connection sets, invalid family parameters, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Least non-negative residue of x modulo m (m >= 1).
constexpr Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

// (a * b) mod m without overflow.
constexpr Int mul_mod(Int a, Int b, Int m) {
  __int128 p = static_cast<__int128>(a) * static_cast<__int128>(b);
  __int128 r = p % m;
  if (r < 0) r += m;
  return static_cast<Int>(r);
}

Int gcd(Int a, Int b);

struct ExtendedGcd {
  Int g;  // gcd(a, b) >= 0
  Int x;  // a*x + b*y == g
  Int y;
};

ExtendedGcd extended_gcd(Int a, Int b);

bool is_prime(Int p);

// Prime factorization by trial division, ascending primes with exponents.
struct PrimePower {
  Int prime;
  int exponent;
  Int value() const;
};
std::vector<PrimePower> factorize(Int m);

// Positive divisors of m, ascending.
std::vector<Int> divisors(Int m);

// Units of Z_m in ascending order.
std::vector<Int> units(Int m);

// Largest power of prime p dividing m.
Int p_part(Int m, Int p);

// b in [0, m) with a*b == 1 (mod m).
Int mod_inverse(Int a, Int m);

// A single congruence x == residue (mod modulus). The residue is normalized
// into [0, modulus) on construction.
class Congruence {
 public:
  Congruence(Int residue, Int modulus);

  Int residue() const { return residue_; }
  Int modulus() const { return modulus_; }

  bool holds(Int x) const { return mod(x, modulus_) == residue_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  Int residue_;
  Int modulus_;
};

struct CrtSolution {
  Int value;    // unique solution in [0, modulus)
  Int modulus;  // product of the input moduli
};

// Solves a system with pairwise coprime moduli. Moduli equal to 1 are
// ignored; an empty system yields {0, 1}.
CrtSolution crt_solve(std::span<const Congruence> system);

inline CrtSolution crt_solve(std::initializer_list<Congruence> system) {
  return crt_solve(std::span<const Congruence>(system.begin(), system.size()));
}

}  // namespace circmagic
