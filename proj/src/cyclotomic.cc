#include <map>
#include <mutex>
#include <stdexcept>

#include "circmagic/spectra.h"

namespace circmagic {
namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// std::map nodes are stable, so references handed out stay valid.
std::map<Int, Polynomial>& cache() {
  static std::map<Int, Polynomial> c;
  return c;
}

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of p by the monic polynomial m; throws if the division is
// not exact.
Polynomial divide_exact_monic(Polynomial p, const Polynomial& m) {
  const size_t dm = m.size() - 1;
  if (p.size() < m.size()) throw std::logic_error("divide_exact_monic: degree too small");
  Polynomial q(p.size() - dm);
  for (size_t i = p.size(); i-- > dm;) {
    const BigInt t = p[i];
    if (t == 0) continue;
    q[i - dm] = t;
    for (size_t k = 0; k <= dm; ++k) p[i - dm + k] -= t * m[k];
  }
  trim(p);
  if (!p.empty()) throw std::logic_error("divide_exact_monic: nonzero remainder");
  return q;
}

}  // namespace

Polynomial poly_mod_monic(Polynomial p, const Polynomial& m) {
  if (m.empty() || m.back() != 1) throw DomainError("poly_mod_monic: divisor must be monic");
  const size_t dm = m.size() - 1;
  for (size_t i = p.size(); i-- > dm;) {
    const BigInt t = p[i];
    if (t == 0) continue;
    for (size_t k = 0; k <= dm; ++k) p[i - dm + k] -= t * m[k];
  }
  trim(p);
  return p;
}

const Polynomial& cyclotomic_poly(Int n) {
  if (n < 1) throw DomainError("cyclotomic_poly: n must be positive");
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache().find(n);
    if (it != cache().end()) return it->second;
  }
  Polynomial p(static_cast<size_t>(n) + 1);
  p[0] = -1;
  p[static_cast<size_t>(n)] = 1;
  for (Int d : divisors(n)) {
    if (d == n) break;
    p = divide_exact_monic(std::move(p), cyclotomic_poly(d));
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache().emplace(n, std::move(p)).first->second;
}

bool char_sum_is_zero(const ConnectionSet& s, Int j) {
  const Int n = s.n();
  Polynomial p(static_cast<size_t>(n));
  for (Int e : s.elements()) p[static_cast<size_t>(mul_mod(j, e, n))] += 1;
  return poly_mod_monic(std::move(p), cyclotomic_poly(n)).empty();
}

CharacterOracle::CharacterOracle(Int n) : n_(n), degree_(0) {
  if (n < 1) throw DomainError("CharacterOracle: n must be positive");
  const Polynomial& phi = cyclotomic_poly(n);
  degree_ = phi.size() - 1;
  std::vector<std::int64_t> low(degree_);
  for (size_t k = 0; k < degree_; ++k) {
    if (phi[k] > INT64_MAX || phi[k] < INT64_MIN) {
      throw std::overflow_error("CharacterOracle: cyclotomic coefficient out of range");
    }
    low[k] = static_cast<std::int64_t>(phi[k]);
  }
  rows_.assign(static_cast<size_t>(n) * degree_, 0);
  std::vector<std::int64_t> cur(degree_, 0);
  if (degree_ == 0) return;  // n == 1: Phi_1 = x - 1 has degree 1, never 0
  cur[0] = 1;
  for (Int e = 0; e < n; ++e) {
    std::copy(cur.begin(), cur.end(), rows_.begin() + static_cast<ptrdiff_t>(e * degree_));
    // cur <- x * cur mod Phi_n
    const std::int64_t top = cur[degree_ - 1];
    for (size_t k = degree_ - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0) {
      for (size_t k = 0; k < degree_; ++k) {
        std::int64_t prod;
        if (__builtin_mul_overflow(top, low[k], &prod) ||
            __builtin_sub_overflow(cur[k], prod, &cur[k])) {
          throw std::overflow_error("CharacterOracle: residue coefficient out of range");
        }
      }
    }
  }
}

bool CharacterOracle::vanishes(std::span<const Int> exponents) const {
  std::vector<std::int64_t> acc(degree_, 0);
  for (Int e : exponents) {
    const std::int64_t* row = rows_.data() + mod(e, n_) * static_cast<Int>(degree_);
    for (size_t k = 0; k < degree_; ++k) {
      if (__builtin_add_overflow(acc[k], row[k], &acc[k])) {
        throw std::overflow_error("CharacterOracle: accumulator overflow");
      }
    }
  }
  for (std::int64_t v : acc) {
    if (v != 0) return false;
  }
  return true;
}

bool CharacterOracle::char_sum_is_zero(const ConnectionSet& s, Int j) const {
  if (s.n() != n_) throw DomainError("CharacterOracle: order mismatch");
  std::array<Int, 6> ex{};
  const auto el = s.elements();
  for (int i = 0; i < 6; ++i) ex[i] = mul_mod(j, el[i], n_);
  return vanishes(ex);
}

std::vector<Int> CharacterOracle::zero_set(const ConnectionSet& s) const {
  std::vector<Int> out;
  for (Int j = 1; j < n_; ++j) {
    if (char_sum_is_zero(s, j)) out.push_back(j);
  }
  return out;
}

}  // namespace circmagic
