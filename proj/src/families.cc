#include "circmagic/families.h"

#include <algorithm>
#include <charconv>

namespace circmagic {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void reject(const Family& f, const std::string& why) {
  throw DomainError("invalid family " + to_string(f) + ": " + why);
}

bool odd(Int x) { return x % 2 != 0; }

std::vector<Int> parse_params(std::string_view body) {
  std::vector<Int> out;
  size_t pos = 0;
  while (true) {
    size_t comma = body.find(',', pos);
    std::string_view tok = body.substr(pos, comma == std::string_view::npos ? body.npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    Int v = 0;
    auto r = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || r.ec != std::errc() || r.ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad family parameter '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// b' of the second type-1 family before normalization.
Int t1b_b(const T1Case2& f) {
  const auto base = crt_solve({{2 - f.d, 4}, {0, f.d1}, {-f.d, f.d2}});
  Int b = base.value;
  while (gcd(b, f.d) != 1) b += base.modulus;
  return b;
}

}  // namespace

void validate(const Family& f) {
  std::visit(Overloaded{
                 [&](const MobiusLadderLex& x) {
                   // m = 2 is K4[2K1] at n = 8, kept because it is distance magic.
                   if (x.m < 2) reject(f, "m must be at least 2");
                 },
                 [&](const PrismLex& x) {
                   if (x.m < 3 || !odd(x.m)) reject(f, "m must be odd and at least 3");
                 },
                 [&](const CycleLex& x) {
                   if (x.m < 3) reject(f, "m must be at least 3");
                 },
                 [&](const T1Case1& x) {
                   if (!(1 < x.d && x.d < x.d1)) reject(f, "need 1 < d < d'");
                   if (!odd(x.d) || !odd(x.d1)) reject(f, "d and d' must be odd");
                   if (gcd(x.d, x.d1) != 1) reject(f, "d and d' must be coprime");
                 },
                 [&](const T1Case2& x) {
                   if (!(1 <= x.d && x.d < x.d1 && x.d1 < x.d2)) reject(f, "need 1 <= d < d' < d''");
                   if (!odd(x.d) || !odd(x.d1) || !odd(x.d2)) reject(f, "parameters must be odd");
                   if (gcd(x.d, x.d1) != 1 || gcd(x.d, x.d2) != 1 || gcd(x.d1, x.d2) != 1) {
                     reject(f, "parameters must be pairwise coprime");
                   }
                 },
                 [&](const T2Family& x) {
                   if (!(1 < x.d && x.d < x.d1)) reject(f, "need 1 < d < d'");
                   if (gcd(x.d, x.d1) != 1) reject(f, "d and d' must be coprime");
                   if (x.d % 3 == 0 || x.d1 % 3 == 0) reject(f, "d and d' must be prime to 3");
                 },
             },
             f);
}

Int family_order(const Family& f) {
  return std::visit(Overloaded{
                        [](const MobiusLadderLex& x) { return 4 * x.m; },
                        [](const PrismLex& x) { return 4 * x.m; },
                        [](const CycleLex& x) { return 3 * x.m; },
                        [](const T1Case1& x) { return 4 * x.d * x.d1; },
                        [](const T1Case2& x) { return 4 * x.d * x.d1 * x.d2; },
                        [](const T2Family& x) { return 3 * x.d * x.d1; },
                    },
                    f);
}

std::string to_string(const Family& f) {
  auto s = [](Int v) { return std::to_string(v); };
  return std::visit(Overloaded{
                        [&](const MobiusLadderLex& x) { return "Ml[" + s(x.m) + "]"; },
                        [&](const PrismLex& x) { return "Pr[" + s(x.m) + "]"; },
                        [&](const CycleLex& x) { return "C3K[" + s(x.m) + "]"; },
                        [&](const T1Case1& x) { return "T1a[" + s(x.d) + "," + s(x.d1) + "]"; },
                        [&](const T1Case2& x) {
                          return "T1b[" + s(x.d) + "," + s(x.d1) + "," + s(x.d2) + "]";
                        },
                        [&](const T2Family& x) { return "T2[" + s(x.d) + "," + s(x.d1) + "]"; },
                    },
                    f);
}

Family parse_family(std::string_view text) {
  const auto open = text.find('[');
  if (open == std::string_view::npos || text.empty() || text.back() != ']') {
    throw std::invalid_argument("family must look like Name[p,...], got '" + std::string(text) +
                                "'");
  }
  const std::string name(text.substr(0, open));
  const auto p = parse_params(text.substr(open + 1, text.size() - open - 2));
  auto want = [&](size_t k) {
    if (p.size() != k) {
      throw std::invalid_argument(name + " takes " + std::to_string(k) + " parameter(s)");
    }
  };
  Family f;
  if (name == "Ml") {
    want(1);
    f = MobiusLadderLex{p[0]};
  } else if (name == "Pr") {
    want(1);
    f = PrismLex{p[0]};
  } else if (name == "C3K") {
    want(1);
    f = CycleLex{p[0]};
  } else if (name == "T1a") {
    want(2);
    f = T1Case1{p[0], p[1]};
  } else if (name == "T1b") {
    want(3);
    f = T1Case2{p[0], p[1], p[2]};
  } else if (name == "T2") {
    want(2);
    f = T2Family{p[0], p[1]};
  } else {
    throw std::invalid_argument("unknown family '" + name + "'");
  }
  validate(f);
  return f;
}

bool is_trivial(const Family& f) {
  return std::holds_alternative<MobiusLadderLex>(f) || std::holds_alternative<PrismLex>(f) ||
         std::holds_alternative<CycleLex>(f);
}

bool is_type1_family(const Family& f) {
  return std::holds_alternative<MobiusLadderLex>(f) || std::holds_alternative<PrismLex>(f) ||
         std::holds_alternative<T1Case1>(f) || std::holds_alternative<T1Case2>(f);
}

bool is_type2_family(const Family& f) {
  return std::holds_alternative<CycleLex>(f) || std::holds_alternative<T2Family>(f);
}

bool family_is_distance_magic(const Family& f) {
  if (const auto* c = std::get_if<CycleLex>(&f)) return c->m % 4 != 2;
  if (const auto* t = std::get_if<T2Family>(&f)) return odd(t->d) && odd(t->d1);
  return true;
}

Int unit_residue_sign(Int n0, Int modulus) {
  const Int r = mod(n0, modulus);
  if (r == 1) return 1;
  if (r == modulus - 1) return -1;
  throw DomainError("unit_residue_sign: " + std::to_string(n0) + " is not +-1 modulo " +
                    std::to_string(modulus));
}

std::array<Int, 3> family_raw_elements(const Family& f) {
  validate(f);
  return std::visit(
      Overloaded{
          [](const MobiusLadderLex& x) { return std::array<Int, 3>{1, x.m, 2 * x.m - 1}; },
          [](const PrismLex& x) { return std::array<Int, 3>{2, x.m, 2 * x.m - 2}; },
          [](const CycleLex& x) { return std::array<Int, 3>{1, x.m - 1, x.m + 1}; },
          [](const T1Case1& x) {
            const Int n0 = x.d * x.d1;
            const Int c = crt_solve({{0, 4}, {2, x.d}, {-2, x.d1}}).value;
            return std::array<Int, 3>{2, n0, c};
          },
          [](const T1Case2& x) {
            const Int b = t1b_b(x);
            const Int c = crt_solve({{2 - x.d, 4}, {-b, x.d}, {-x.d, x.d1}, {0, x.d2}}).value;
            return std::array<Int, 3>{x.d, b, c};
          },
          [](const T2Family& x) {
            const Int n0 = x.d * x.d1;
            const Int delta = unit_residue_sign(n0, 3);
            const Int c = crt_solve({{0, 3}, {1, x.d}, {-1, x.d1}}).value;
            return std::array<Int, 3>{1, n0 + delta, c};
          },
      },
      f);
}

ConnectionSet family_connection_set(const Family& f) {
  return ConnectionSet(family_order(f), family_raw_elements(f));
}

std::vector<Family> enumerate_families(Int n) {
  std::vector<Family> out;
  if (n % 4 == 0 && n / 4 >= 2) {
    out.push_back(MobiusLadderLex{n / 4});
    if (odd(n / 4) && n / 4 >= 3) out.push_back(PrismLex{n / 4});
  }
  if (n % 3 == 0 && n / 3 >= 3) out.push_back(CycleLex{n / 3});
  if (n % 4 == 0 && odd(n / 4)) {
    const Int n0 = n / 4;
    for (Int d : divisors(n0)) {
      const Int d1 = n0 / d;
      if (1 < d && d < d1 && gcd(d, d1) == 1) out.push_back(T1Case1{d, d1});
    }
    for (Int d : divisors(n0)) {
      for (Int d1 : divisors(n0 / d)) {
        const Int d2 = n0 / d / d1;
        if (d < d1 && d1 < d2 && gcd(d, d1) == 1 && gcd(d, d2) == 1 && gcd(d1, d2) == 1) {
          out.push_back(T1Case2{d, d1, d2});
        }
      }
    }
  }
  if (n % 3 == 0 && (n / 3) % 3 != 0) {
    const Int n0 = n / 3;
    for (Int d : divisors(n0)) {
      const Int d1 = n0 / d;
      if (1 < d && d < d1 && gcd(d, d1) == 1) out.push_back(T2Family{d, d1});
    }
  }
  return out;
}

namespace {

bool accepts(FamilyFilter filter, const Family& f) {
  switch (filter) {
    case FamilyFilter::kAll:
      return true;
    case FamilyFilter::kTrivial:
      return is_trivial(f);
    case FamilyFilter::kType1:
      return is_type1_family(f);
    case FamilyFilter::kType2:
      return is_type2_family(f);
  }
  return false;
}

std::vector<Recognition> recognize_impl(const ConnectionSet& s, FamilyFilter filter, bool first) {
  std::vector<Recognition> out;
  const auto families = enumerate_families(s.n());
  if (families.empty()) return out;
  const ConnectionSet canon = canonical_form(s);
  const auto qs = units(s.n());
  for (const Family& f : families) {
    if (!accepts(filter, f)) continue;
    const ConnectionSet target = family_connection_set(f);
    if (canonical_form(target) != canon) continue;
    for (Int q : qs) {
      if (multiply(s, q) == target) {
        out.push_back({f, q});
        break;
      }
    }
    if (first && !out.empty()) break;
  }
  return out;
}

}  // namespace

std::optional<Recognition> recognize(const ConnectionSet& s, FamilyFilter filter) {
  auto all = recognize_impl(s, filter, true);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::vector<Recognition> recognize_all(const ConnectionSet& s, FamilyFilter filter) {
  return recognize_impl(s, filter, false);
}

std::string to_string(Type3Check::Bullet b) {
  switch (b) {
    case Type3Check::Bullet::kNone:
      return "pass";
    case Type3Check::Bullet::kDivisibility:
      return "divisibility";
    case Type3Check::Bullet::kThreePart:
      return "three-part";
    case Type3Check::Bullet::kFivePart:
      return "five-part";
    case Type3Check::Bullet::kFiveMultiple:
      return "five-multiple";
    case Type3Check::Bullet::kNeedsType1:
      return "needs-type1";
    case Type3Check::Bullet::kHasType2:
      return "has-type2";
    case Type3Check::Bullet::kType1Residues:
      return "type1-residues";
    case Type3Check::Bullet::kType3Residues:
      return "type3-residues";
  }
  return "?";
}

Type3Check type3_necessary(const ConnectionSet& s) {
  const auto chars = admissible_set(s);
  return type3_necessary(s, chars);
}

Type3Check type3_necessary(const ConnectionSet& s, std::span<const AdmissibleChar> chars) {
  using B = Type3Check::Bullet;
  const bool has_t3 = std::any_of(chars.begin(), chars.end(),
                                  [](const AdmissibleChar& c) { return c.has(TypeTag::T3); });
  if (!has_t3) {
    throw DomainError("type3_necessary: " + s.to_string() + " has no type-3 character");
  }
  Type3Check r;
  auto fail = [&r](B b) {
    r.failed = b;
    return r;
  };
  const Int n = s.n();
  if (n % 60 != 0) return fail(B::kDivisibility);
  if (p_part(n, 3) != 3) return fail(B::kThreePart);
  if (p_part(n, 5) != 5) return fail(B::kFivePart);
  std::vector<Int> fives;
  for (Int x : s.reps()) {
    if (x % 5 == 0) fives.push_back(x);
  }
  if (fives.size() == 1) r.five_multiple = fives[0];
  if (fives.size() != 1 || (fives[0] != n / 12 && fives[0] != 5 * n / 12)) {
    return fail(B::kFiveMultiple);
  }
  bool any_t1 = false;
  for (const auto& c : chars) any_t1 |= c.has(TypeTag::T1);
  if (!any_t1) return fail(B::kNeedsType1);
  for (const auto& c : chars) {
    if (c.has(TypeTag::T2)) return fail(B::kHasType2);
  }
  for (const auto& c : chars) {
    if (c.has(TypeTag::T1) && !(odd(c.j) && c.j % 15 == 0)) return fail(B::kType1Residues);
  }
  for (const auto& c : chars) {
    if (c.has(TypeTag::T3) && !(!odd(c.j) && gcd(c.j, 15) == 1)) {
      return fail(B::kType3Residues);
    }
  }
  return r;
}

}  // namespace circmagic
