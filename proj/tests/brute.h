#pragma once

// Independent reference computations for tests: plain loops, floating-point
// character sums and adjacency matrices, with no use of the library's
// number theory.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <set>
#include <vector>

namespace brute {

using I = std::int64_t;

inline I md(I x, I m) { return ((x % m) + m) % m; }

inline I gcd(I a, I b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const I t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Smallest x >= 0 meeting every (residue, modulus), by stepping.
inline std::optional<I> crt(const std::vector<std::pair<I, I>>& sys) {
  I m = 1;
  for (auto [r, q] : sys) m *= q;
  for (I x = 0; x < m; ++x) {
    bool ok = true;
    for (auto [r, q] : sys) ok = ok && md(x - r, q) == 0;
    if (ok) return x;
  }
  return std::nullopt;
}

inline std::optional<I> inverse(I a, I m) {
  for (I b = 0; b < m; ++b) {
    if (md(a * b, m) == 1 % m) return b;
  }
  return std::nullopt;
}

inline std::vector<I> units(I n) {
  std::vector<I> u;
  for (I q = 1; q < n; ++q) {
    if (gcd(q, n) == 1) u.push_back(q);
  }
  return u;
}

// The six elements ±a, ±b, ±c reduced into [0, n).
inline std::vector<I> elements(I n, std::array<I, 3> s) {
  std::vector<I> e;
  for (I x : s) {
    e.push_back(md(x, n));
    e.push_back(md(-x, n));
  }
  return e;
}

inline std::array<I, 3> reps(I n, std::vector<I> elems) {
  std::set<I> r;
  for (I x : elems) r.insert(std::min(md(x, n), n - md(x, n)));
  std::array<I, 3> out{};
  std::copy(r.begin(), r.end(), out.begin());
  return out;
}

// Lexicographically least representative triple of {qS}.
inline std::array<I, 3> canonical(I n, std::array<I, 3> s) {
  std::array<I, 3> best{n, n, n};
  for (I q : units(n)) {
    std::vector<I> img;
    for (I x : s) img.push_back(md(q * x, n));
    best = std::min(best, reps(n, img));
  }
  return best;
}

// Canonical triples of connected valency-6 sets on Z_n.
inline std::vector<std::array<I, 3>> classes(I n) {
  std::set<std::array<I, 3>> out;
  for (I a = 1; 2 * a < n; ++a) {
    for (I b = a + 1; 2 * b < n; ++b) {
      for (I c = b + 1; 2 * c < n; ++c) {
        if (gcd(gcd(a, b), gcd(c, n)) != 1) continue;
        out.insert(canonical(n, {a, b, c}));
      }
    }
  }
  return {out.begin(), out.end()};
}

// |chi_j(S)| by floating point, for any offset list.
inline double char_abs(I n, const std::vector<I>& offsets, I j) {
  std::complex<double> z = 0;
  for (I s : offsets) {
    const double t = 2 * std::numbers::pi * static_cast<double>(md(j * s, n)) / static_cast<double>(n);
    z += std::polar(1.0, t);
  }
  return std::abs(z);
}

inline std::vector<I> admissible(I n, const std::vector<I>& offsets) {
  std::vector<I> out;
  for (I j = 1; j < n; ++j) {
    if (char_abs(n, offsets, j) < 1e-9) out.push_back(j);
  }
  return out;
}

// Neighbour sums via an explicit adjacency matrix; nullopt when they differ.
inline std::optional<I> magic(I n, const std::vector<I>& offsets, const std::vector<I>& label) {
  std::vector<std::vector<char>> adj(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (I x = 0; x < n; ++x) {
    for (I s : offsets) adj[static_cast<size_t>(x)][static_cast<size_t>(md(x + s, n))] = 1;
  }
  std::optional<I> k;
  for (I x = 0; x < n; ++x) {
    I sum = 0;
    for (I y = 0; y < n; ++y) sum += adj[static_cast<size_t>(x)][static_cast<size_t>(y)] ? label[static_cast<size_t>(y)] : 0;
    if (k && *k != sum) return std::nullopt;
    k = sum;
  }
  return k;
}

// Whether any permutation labeling is magic, by trying all of them. Only
// for tiny n (n <= 10).
inline bool any_magic(I n, const std::vector<I>& offsets) {
  std::vector<I> p(static_cast<size_t>(n));
  for (I i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i + 1;
  do {
    if (magic(n, offsets, p)) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));  // label 1 at vertex 0 by translation
  return false;
}

}  // namespace brute
