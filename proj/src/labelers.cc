#include "circmagic/labelers.h"

#include <functional>
#include <memory>
#include <variant>

namespace circmagic {
namespace {

Labeling checked(const ConnectionSet& s, Labeling l, const std::string& who) {
  const Circulant g(s);
  if (verify(g, l) != magic_constant(g)) {
    throw std::logic_error(who + " produced a labeling that does not verify on " + s.to_string());
  }
  return l;
}

}  // namespace

Labeling label_lex_pair(const Family& f) {
  Int m = 0;
  if (const auto* ml = std::get_if<MobiusLadderLex>(&f)) {
    m = ml->m;
  } else if (const auto* pr = std::get_if<PrismLex>(&f)) {
    m = pr->m;
  } else {
    throw DomainError("label_lex_pair: " + to_string(f) + " is not Ml or Pr");
  }
  validate(f);
  const Int n = 4 * m;
  std::vector<Int> v(static_cast<size_t>(n));
  for (Int x = 0; x < 2 * m; ++x) {
    v[static_cast<size_t>(x)] = x + 1;
    v[static_cast<size_t>(x + 2 * m)] = n - x;
  }
  return checked(family_connection_set(f), Labeling(std::move(v)), "label_lex_pair");
}

std::vector<Int> t1_case2_values(const T1Case2& f, Case2Coordinates coords) {
  const auto raw = family_raw_elements(f);
  const Int n0 = f.d * f.d1 * f.d2, n = 4 * n0;
  const Int b = raw[1], c = raw[2];
  const Int delta = unit_residue_sign(n0, 4);
  std::function<Int(Int)> ell_h;
  if (coords == Case2Coordinates::kScaffold) {
    auto sc = std::make_shared<CoordinateScaffold>(
        build_scaffold(n, 4, b + f.d + 2 * n0, c + f.d + 2 * n0, f.d * f.d1, f.d2));
    ell_h = [sc](Int x) { return sc->ell_h(x); };
  } else {
    // x = 4t; t mod d', t mod d'' and t mod d index H modulo <mu>, <lambda>
    // and <lambda + mu> respectively.
    ell_h = [f, n](Int x) {
      const Int t = mod(x, n) / 4;
      return 1 + t % f.d1 + f.d1 * (t % f.d2) + f.d1 * f.d2 * (t % f.d);
    };
  }
  std::vector<Int> v(static_cast<size_t>(n));
  for (Int x = 0; x < n; ++x) {
    Int l = 0;
    switch (x % 4) {
      case 0:
        l = ell_h(x);
        break;
      case 1:
        l = n0 + ell_h(x - delta * n0);
        break;
      case 2:
        l = 4 * n0 + 1 - ell_h(x + 2 * n0);
        break;
      default:
        l = 3 * n0 + 1 - ell_h(x + delta * n0);
        break;
    }
    v[static_cast<size_t>(x)] = l;
  }
  return v;
}

Labeling label_t1_case2(const T1Case2& f) {
  const auto coords = f.d == 1 ? Case2Coordinates::kScaffold : Case2Coordinates::kQuotient;
  return checked(family_connection_set(f), Labeling(t1_case2_values(f, coords)),
                 "label_t1_case2");
}

Labeling label_t2(const T2Family& f) {
  validate(f);
  if (f.d % 2 == 0 || f.d1 % 2 == 0) {
    throw DomainError("label_t2: " + to_string(Family(f)) +
                      " has an even parameter and is not distance magic");
  }
  const Int n0 = f.d * f.d1, n = 3 * n0;
  const Int c = family_raw_elements(f)[2];
  const Int delta = unit_residue_sign(n0, 3);
  const Int lambda = c + 1 - delta * n0, mu = c - 1 + delta * n0;
  const auto sc = build_scaffold(n, 3, lambda, mu, f.d, f.d1);
  std::vector<Int> v(static_cast<size_t>(n));
  for (Int x = 0; x < n; ++x) {
    Int l = 0;
    switch (x % 3) {
      case 0:
        l = sc.ell_h(x);
        break;
      case 1:
        l = n0 + sc.ell_h(x + lambda - 1);
        break;
      default:
        l = 2 * n0 + sc.ell_h(mul_mod(-2, mod(x + 2 * (lambda - 1), n), n));
        break;
    }
    v[static_cast<size_t>(x)] = l;
  }
  return checked(family_connection_set(f), Labeling(std::move(v)), "label_t2");
}

bool satisfies_sublabeling_contract(const Labeling& l, Int n0, Int c0) {
  if (l.n() != 2 * n0) return false;
  if (verify(Circulant(2 * n0, {1, c0}), l) != 2 * (2 * n0 + 1)) return false;
  for (Int y = 0; y < 2 * n0; ++y) {
    if (y % 2 == 0 && l(y) > n0) return false;
    if (l(y) + l(y + n0) != 2 * n0 + 1) return false;
  }
  return true;
}

Sublabeling tetravalent_sublabeling(Int n0, Int c0, const SublabelingOptions& options) {
  if (n0 < 3 || n0 % 2 == 0) {
    throw DomainError("tetravalent_sublabeling: n0 must be odd and at least 3");
  }
  if (c0 % 2 != 0) throw DomainError("tetravalent_sublabeling: c0 must be even");
  if (mul_mod(c0, c0, n0) != 1) {
    throw DomainError("tetravalent_sublabeling: n0 = " + std::to_string(n0) +
                      " must divide c0^2 - 1 for c0 = " + std::to_string(c0));
  }
  const Circulant g(2 * n0, {1, c0});

  if (options.method != SublabelingMethod::kResidueSplit) {
    SearchBudget budget = options.budget;
    if (options.method == SublabelingMethod::kAuto && options.auto_work > 0) {
      const std::uint64_t cap = options.auto_work / static_cast<std::uint64_t>(n0);
      budget.max_nodes = budget.max_nodes == 0 ? cap : std::min(budget.max_nodes, cap);
    }
    auto out = search_constrained(g, {true, true}, budget);
    if (out.found()) {
      if (!satisfies_sublabeling_contract(*out.labeling, n0, c0)) {
        throw std::logic_error("constrained search broke the sub-labeling contract");
      }
      return {std::move(*out.labeling), SublabelingMethod::kSearch, out.stats};
    }
    if (options.method == SublabelingMethod::kSearch) {
      throw SearchFailure("no contract labeling found for (" + std::to_string(n0) + ", " +
                          std::to_string(c0) + ") after " + std::to_string(out.stats.nodes) +
                          " nodes (" + to_string(out.kind) + ")");
    }
  }

  const Int d1 = gcd(c0 - 1, n0), d2 = gcd(c0 + 1, n0);
  std::vector<Int> v(static_cast<size_t>(2 * n0));
  for (Int y = 0; y < 2 * n0; ++y) {
    const Int t = y % n0;
    const Int gval = 1 + t % d1 + d1 * (t % d2);
    v[static_cast<size_t>(y)] = y % 2 == 0 ? gval : 2 * n0 + 1 - gval;
  }
  Labeling l(std::move(v));
  if (!satisfies_sublabeling_contract(l, n0, c0)) {
    throw std::logic_error("residue split broke the sub-labeling contract");
  }
  return {std::move(l), SublabelingMethod::kResidueSplit, std::nullopt};
}

Labeling label_t1_case1(const T1Case1& f, const SublabelingOptions& options) {
  const ConnectionSet s = family_connection_set(f);
  const Int n0 = f.d * f.d1, n = 4 * n0;
  const Int c = s.c() % 4 == 0 ? s.c() : s.b();  // the element divisible by 4
  const auto sub = tetravalent_sublabeling(n0, c / 2, options);
  const Labeling& ld = sub.labeling;
  std::vector<Int> v(static_cast<size_t>(n));
  for (Int x = 0; x < n; ++x) {
    Int l = 0;
    switch (x % 4) {
      case 0:
        l = ld(x / 2) + 2 * n0;
        break;
      case 1:
        l = ld((x - 1) / 2);
        break;
      case 2:
        l = ld(x / 2);
        break;
      default:
        l = ld((x - 1) / 2) + 2 * n0;
        break;
    }
    v[static_cast<size_t>(x)] = l;
  }
  return checked(s, Labeling(std::move(v)), "label_t1_case1");
}

Labeling label_cycle_lex(Int m, const SearchBudget& budget) {
  const Family f = CycleLex{m};
  validate(f);
  if (m % 4 == 2) {
    throw DomainError("C3K[" + std::to_string(m) + "] is not distance magic (m = 2 mod 4)");
  }
  const ConnectionSet s = family_connection_set(f);
  if (gcd(m, 6) == 1) {
    for (Int d : divisors(m)) {
      const Int d1 = m / d;
      if (d > 1 && d < d1 && gcd(d, d1) == 1) {
        return checked(s, label_t2(T2Family{d, d1}), "label_cycle_lex");
      }
    }
  }
  auto out = search_labeling(s, budget, {.prefilter = false});
  if (!out.found()) {
    throw SearchFailure("no labeling of " + s.to_string() + " found (" + to_string(out.kind) +
                        " after " + std::to_string(out.stats.nodes) + " nodes)");
  }
  return std::move(*out.labeling);
}

Labeling label_family(const Family& f, const SearchBudget& budget) {
  validate(f);
  if (!family_is_distance_magic(f)) {
    throw DomainError(to_string(f) + " is not distance magic");
  }
  if (std::holds_alternative<MobiusLadderLex>(f) || std::holds_alternative<PrismLex>(f)) {
    return label_lex_pair(f);
  }
  if (const auto* x = std::get_if<CycleLex>(&f)) return label_cycle_lex(x->m, budget);
  if (const auto* x = std::get_if<T1Case1>(&f)) return label_t1_case1(*x);
  if (const auto* x = std::get_if<T1Case2>(&f)) return label_t1_case2(*x);
  return label_t2(std::get<T2Family>(f));
}

SetLabeling label_connection_set(const ConnectionSet& s, const SearchBudget& budget) {
  for (auto& rec : recognize_all(s)) {
    if (!family_is_distance_magic(rec.family)) {
      throw DomainError(s.to_string() + " is " + to_string(rec.family) +
                        ", which is not distance magic");
    }
  }
  if (auto rec = recognize(s)) {
    const Labeling lt = label_family(rec->family, budget);
    Labeling ls = transport_labeling(lt, s, family_connection_set(rec->family), rec->q);
    return {checked(s, std::move(ls), "label_connection_set"), std::move(rec), std::nullopt};
  }
  auto out = search_labeling(s, budget);
  if (!out.found()) {
    throw SearchFailure("no labeling of " + s.to_string() + " found (" + to_string(out.kind) +
                        " after " + std::to_string(out.stats.nodes) + " nodes)");
  }
  return {std::move(*out.labeling), std::nullopt, out.stats};
}

}  // namespace circmagic
