#include "circmagic/spectra.h"

#include <algorithm>
#include <numeric>

namespace circmagic {
namespace {

using I128 = __int128;

// Role permutations in lexicographic order: kPerms[p][role] = element index.
constexpr std::array<std::array<int, 3>, 6> kPerms{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

std::array<Int, 3> signed_assignment(const ConnectionSet& s, const std::array<int, 3>& perm,
                                     int signs) {
  std::array<Int, 3> out{};
  for (int role = 0; role < 3; ++role) {
    const bool negative = (signs >> (2 - role)) & 1;
    const Int v = s.reps()[perm[role]];
    out[role] = negative ? -v : v;
  }
  return out;
}

// Exact quotient (v - offset) / step, where the caller guarantees exactness.
Int exact_k(I128 v, I128 offset, I128 step) { return static_cast<Int>((v - offset) / step); }

bool is_signed_permutation(const ConnectionSet& s, const std::array<Int, 3>& a) {
  std::array<Int, 3> abs{};
  for (int i = 0; i < 3; ++i) abs[i] = a[i] < 0 ? -a[i] : a[i];
  std::sort(abs.begin(), abs.end());
  return abs == s.reps();
}

}  // namespace

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::T1:
      return "T1";
    case TypeTag::T2:
      return "T2";
    case TypeTag::T3:
      return "T3";
  }
  return "?";
}

std::optional<TypeWitness> type1_test(const ConnectionSet& s, Int j) {
  const Int n = s.n();
  if (n % 4 != 0) return std::nullopt;
  const Int n0 = n / 4;
  for (int role2 = 0; role2 < 3; ++role2) {
    const Int s2 = s.reps()[role2];
    if (mod(j * s2, 2 * n0) != n0) continue;
    int others[2];
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i != role2) others[k++] = i;
    }
    for (int signs = 0; signs < 4; ++signs) {
      const Int s1 = (signs & 2) ? -s.reps()[others[0]] : s.reps()[others[0]];
      const Int s3 = (signs & 1) ? -s.reps()[others[1]] : s.reps()[others[1]];
      if (mod(j * (s1 + s3), 4 * n0) != 2 * n0) continue;
      TypeWitness w;
      w.type = TypeTag::T1;
      w.assignment = {s1, s2, s3};
      w.ks = {exact_k(I128(j) * s2 / n0, 1, 2), exact_k(I128(j) * (s1 + s3) / (2 * n0), 1, 2)};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<TypeWitness> type2_test(const ConnectionSet& s, Int j) {
  const Int n = s.n();
  if (n % 3 != 0) return std::nullopt;
  const Int n0 = n / 3;
  for (const auto& perm : kPerms) {
    for (int signs = 0; signs < 8; ++signs) {
      const auto a = signed_assignment(s, perm, signs);
      if (mod(j * (a[1] - a[0]), n) != n0) continue;
      if (mod(j * (a[2] - a[0]), n) != 2 * n0) continue;
      TypeWitness w;
      w.type = TypeTag::T2;
      w.assignment = a;
      w.ks = {exact_k(I128(j) * (a[1] - a[0]) / n0, 1, 3),
              exact_k(I128(j) * (a[2] - a[0]) / n0, 2, 3)};
      return w;
    }
  }
  return std::nullopt;
}

std::optional<TypeWitness> type3_test(const ConnectionSet& s, Int j) {
  const Int n = s.n();
  if (n % 30 != 0) return std::nullopt;
  // Residues of j*s1, j*s2, j*s3 modulo n for the two exceptional solutions.
  const std::array<std::array<Int, 3>, 2> targets{{{n / 10, 3 * n / 10, n / 3},
                                                   {n / 6, n / 5, 2 * n / 5}}};
  for (int variant = 1; variant <= 2; ++variant) {
    const auto& t = targets[variant - 1];
    for (const auto& perm : kPerms) {
      for (int signs = 0; signs < 8; ++signs) {
        const auto a = signed_assignment(s, perm, signs);
        if (mod(j * a[0], n) != t[0] || mod(j * a[1], n) != t[1] || mod(j * a[2], n) != t[2]) {
          continue;
        }
        TypeWitness w;
        w.type = TypeTag::T3;
        w.assignment = a;
        w.variant = variant;
        if (variant == 1) {
          w.ks = {exact_k(I128(10) * j * a[0] / n, 1, 10), exact_k(I128(10) * j * a[1] / n, 3, 10),
                  exact_k(I128(3) * j * a[2] / n, 1, 3)};
        } else {
          w.ks = {exact_k(I128(6) * j * a[0] / n, 1, 6), exact_k(I128(5) * j * a[1] / n, 1, 5),
                  exact_k(I128(5) * j * a[2] / n, 2, 5)};
        }
        if (j % (n / 30) == 0) w.j0 = j / (n / 30);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool witness_holds(const ConnectionSet& s, Int j, const TypeWitness& w) {
  if (!is_signed_permutation(s, w.assignment)) return false;
  const I128 n = s.n();
  const I128 s1 = w.assignment[0], s2 = w.assignment[1], s3 = w.assignment[2];
  const I128 jj = j;
  switch (w.type) {
    case TypeTag::T1: {
      if (n % 4 != 0 || w.ks.size() != 2) return false;
      const I128 n0 = n / 4;
      return jj * s2 == n0 * (1 + 2 * I128(w.ks[0])) &&
             jj * (s1 + s3) == 2 * n0 * (1 + 2 * I128(w.ks[1]));
    }
    case TypeTag::T2: {
      if (n % 3 != 0 || w.ks.size() != 2) return false;
      const I128 n0 = n / 3;
      return jj * (s2 - s1) == n0 * (1 + 3 * I128(w.ks[0])) &&
             jj * (s3 - s1) == n0 * (2 + 3 * I128(w.ks[1]));
    }
    case TypeTag::T3: {
      if (n % 30 != 0 || w.ks.size() != 3) return false;
      bool ok;
      if (w.variant == 1) {
        ok = 10 * jj * s1 == n * (1 + 10 * I128(w.ks[0])) &&
             10 * jj * s2 == n * (3 + 10 * I128(w.ks[1])) &&
             3 * jj * s3 == n * (1 + 3 * I128(w.ks[2]));
      } else if (w.variant == 2) {
        ok = 6 * jj * s1 == n * (1 + 6 * I128(w.ks[0])) &&
             5 * jj * s2 == n * (1 + 5 * I128(w.ks[1])) &&
             5 * jj * s3 == n * (2 + 5 * I128(w.ks[2]));
      } else {
        return false;
      }
      if (!ok) return false;
      const I128 n0 = n / 30;
      if (w.j0.has_value()) return jj == I128(*w.j0) * n0;
      return jj % n0 != 0;
    }
  }
  return false;
}

bool AdmissibleChar::has(TypeTag t) const {
  return std::find(types.begin(), types.end(), t) != types.end();
}

std::vector<AdmissibleChar> admissible_set(const ConnectionSet& s) {
  std::vector<AdmissibleChar> out;
  for (Int j = 1; j < s.n(); ++j) {
    AdmissibleChar ch;
    ch.j = j;
    for (auto* test : {&type1_test, &type2_test, &type3_test}) {
      if (auto w = test(s, j)) {
        ch.types.push_back(w->type);
        ch.witnesses.push_back(std::move(*w));
      }
    }
    if (!ch.types.empty()) out.push_back(std::move(ch));
  }
  return out;
}

TagProfile tag_profile(std::span<const AdmissibleChar> chars) {
  TagProfile p;
  p.empty = chars.empty();
  p.all_t1 = !chars.empty();
  p.all_t2 = !chars.empty();
  for (const auto& ch : chars) {
    const bool t1 = ch.has(TypeTag::T1), t2 = ch.has(TypeTag::T2), t3 = ch.has(TypeTag::T3);
    p.any_t1 |= t1;
    p.any_t2 |= t2;
    p.any_t3 |= t3;
    p.all_t1 &= t1;
    p.all_t2 &= t2;
  }
  return p;
}

std::string FilterResult::reason() const {
  switch (kind) {
    case Kind::kPass:
      return "pass";
    case Kind::kEmpty:
      return "empty";
    case Kind::kCommonDivisor:
      return "gcd";
  }
  return "?";
}

FilterResult candidate_filter(const ConnectionSet& s, std::span<const AdmissibleChar> chars) {
  if (chars.empty()) return {FilterResult::Kind::kEmpty, 1};
  Int g = s.n();
  for (const auto& ch : chars) g = std::gcd(g, ch.j);
  if (g > 1 && g < s.n()) return {FilterResult::Kind::kCommonDivisor, g};
  return {FilterResult::Kind::kPass, 1};
}

FilterResult candidate_filter(const ConnectionSet& s) {
  const auto chars = admissible_set(s);
  return candidate_filter(s, chars);
}

}  // namespace circmagic
