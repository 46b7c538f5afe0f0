#pragma once

// Circulant graphs Circ(n; S) with S = -S, 0 not in S.
//
// ConnectionSet is the valency-6 case S = {±a, ±b, ±c} that the rest of the
// library classifies. Circulant is the general even-valency view used by the
// verifier and the search engine (the tetravalent sub-labelings live there).

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "circmagic/modular.h"

namespace circmagic {

class ConnectionSet {
 public:
  // Normalizes each element to min(s mod n, n - s mod n) and sorts.
  // Throws DomainError when n < 7, an element is 0 or n/2 modulo n, or two
  // elements collide after normalization.
  ConnectionSet(Int n, std::array<Int, 3> elems);

  Int n() const { return n_; }
  const std::array<Int, 3>& reps() const { return reps_; }
  Int a() const { return reps_[0]; }
  Int b() const { return reps_[1]; }
  Int c() const { return reps_[2]; }

  // gcd(a, b, c, n) == 1.
  bool connected() const { return connected_; }

  // {a, -a, b, -b, c, -c} reduced into [0, n).
  std::array<Int, 6> elements() const;

  // {v+a, v-a, v+b, v-b, v+c, v-c} reduced into [0, n).
  std::array<Int, 6> neighbors(Int v) const;

  bool contains(Int s) const;

  // "n:a,b,c"
  std::string to_string() const;

  // Accepts "n:a,b,c" with arbitrary (unnormalized, possibly negative) residues.
  static ConnectionSet parse(std::string_view text);

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  friend auto operator<=>(const ConnectionSet& x, const ConnectionSet& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.reps_ <=> y.reps_;
  }

 private:
  Int n_;
  std::array<Int, 3> reps_;
  bool connected_;
};

inline ConnectionSet make_connection_set(Int n, std::array<Int, 3> elems) {
  return ConnectionSet(n, elems);
}

// qS for a unit q of Z_n.
ConnectionSet multiply(const ConnectionSet& s, Int q);

// Lexicographically smallest representative triple over {qS : q unit}.
ConnectionSet canonical_form(const ConnectionSet& s);

bool multiplier_equivalent(const ConnectionSet& x, const ConnectionSet& y);

// Units q with qS == S, ascending (always contains 1 and n-1).
std::vector<Int> stabilizer(const ConnectionSet& s);

// One canonical representative per multiplier class of connected valency-6
// connection sets on Z_n, in lexicographic order of (a, b, c).
std::vector<ConnectionSet> enumerate_sets(Int n);

// Circulant of arbitrary even valency, described by half-set representatives.
class Circulant {
 public:
  Circulant(Int n, std::vector<Int> reps);
  Circulant(const ConnectionSet& s);  // NOLINT(google-explicit-constructor)

  Int n() const { return n_; }
  const std::vector<Int>& reps() const { return reps_; }
  int valency() const { return static_cast<int>(2 * reps_.size()); }

  // {s, -s} for each representative, in representative order.
  std::vector<Int> offsets() const;
  std::vector<Int> neighbors(Int v) const;

  std::string to_string() const;
  static Circulant parse(std::string_view text);

  friend bool operator==(const Circulant&, const Circulant&) = default;

 private:
  Int n_;
  std::vector<Int> reps_;
};

// Parses "n:x,y,..." into n and the raw element list.
struct ParsedSet {
  Int n;
  std::vector<Int> elems;
};
ParsedSet parse_set_text(std::string_view text);

}  // namespace circmagic
