#include "circmagic/modular.h"

#include <numeric>

namespace circmagic {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

bool is_prime(Int p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (Int f = 5; f * f <= p; f += 6) {
    if (p % f == 0 || p % (f + 2) == 0) return false;
  }
  return true;
}

Int PrimePower::value() const {
  Int v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::vector<PrimePower> factorize(Int m) {
  if (m < 1) throw DomainError("factorize: argument must be positive");
  std::vector<PrimePower> out;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

std::vector<Int> divisors(Int m) {
  if (m < 1) throw DomainError("divisors: argument must be positive");
  std::vector<Int> small, large;
  for (Int d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Int> units(Int m) {
  if (m < 1) throw DomainError("units: modulus must be positive");
  if (m == 1) return {0};
  std::vector<Int> out;
  for (Int q = 1; q < m; ++q) {
    if (std::gcd(q, m) == 1) out.push_back(q);
  }
  return out;
}

Int p_part(Int m, Int p) {
  if (m < 1) throw DomainError("p_part: m must be positive");
  if (!is_prime(p)) throw DomainError("p_part: " + std::to_string(p) + " is not prime");
  Int part = 1;
  while (m % p == 0) {
    m /= p;
    part *= p;
  }
  return part;
}

Int mod_inverse(Int a, Int m) {
  if (m < 1) throw DomainError("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  auto [g, x, y] = extended_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) {
    throw DomainError("mod_inverse: " + std::to_string(a) + " is not a unit modulo " +
                      std::to_string(m));
  }
  return mod(x, m);
}

Congruence::Congruence(Int residue, Int modulus) : residue_(0), modulus_(modulus) {
  if (modulus < 1) throw DomainError("congruence modulus must be >= 1");
  residue_ = mod(residue, modulus);
}

CrtSolution crt_solve(std::span<const Congruence> system) {
  Int x = 0;
  Int m = 1;
  for (const Congruence& c : system) {
    if (c.modulus() == 1) continue;
    if (std::gcd(m, c.modulus()) != 1) {
      throw DomainError("crt_solve: moduli are not pairwise coprime (" + std::to_string(m) +
                        ", " + std::to_string(c.modulus()) + ")");
    }
    // x' = x + m * t with t == (r - x) * m^{-1} (mod modulus)
    Int inv = mod_inverse(mod(m, c.modulus()), c.modulus());
    Int t = mul_mod(mod(c.residue() - x, c.modulus()), inv, c.modulus());
    Int next_m = m * c.modulus();
    x = mod(x + mul_mod(m, t, next_m), next_m);
    m = next_m;
  }
  return {x, m};
}

}  // namespace circmagic
