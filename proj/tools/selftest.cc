#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "circmagic/decide.h"
#include "circmagic/labelers.h"
#include "circmagic/scan.h"
#include "commands.h"
#include "json.hpp"

namespace circmagic::cli {
namespace {

using nlohmann::json;

// Gamma_3 labeling of Circ(24; {±1, ±2, ±3}), vertex 0 first.
constexpr Int kGamma3Table[24] = {2,  7,  15, 5,  22, 18, 11, 19, 3, 8,  13, 6,
                                  23, 16, 12, 20, 1,  9,  14, 4,  24, 17, 10, 21};

struct Fixture {
  std::string name;
  // Empty string on success, else what went wrong.
  std::function<std::string()> run;
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

// x == ±v (mod n)
bool plus_minus(Int x, Int v, Int n) { return mod(x - v, n) == 0 || mod(x + v, n) == 0; }

template <typename T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + "]";
}

std::string check_admissible(const ConnectionSet& s, const std::vector<Int>& js,
                             const std::set<Int>& t1_only, TypeTag rest) {
  const auto chars = admissible_set(s);
  std::vector<Int> got;
  for (const auto& c : chars) {
    got.push_back(c.j);
    const std::vector<TypeTag> want =
        t1_only.contains(c.j) ? std::vector<TypeTag>{TypeTag::T1} : std::vector<TypeTag>{rest};
    if (c.types != want) return "wrong tags at j = " + std::to_string(c.j);
  }
  return expect(got == js, "admissible set " + show(got));
}

Int count_candidates(Int n) {
  Int k = 0;
  for (const auto& s : enumerate_sets(n)) k += candidate_filter(s).passed() ? 1 : 0;
  return k;
}

bool same_class(const ConnectionSet& s, std::array<Int, 3> elems) {
  return multiplier_equivalent(s, ConnectionSet(s.n(), elems));
}

std::string check_family_labeling(const Family& f, Int kappa) {
  const Labeling l = label_family(f);
  return expect(verify(Circulant(family_connection_set(f)), l) == kappa,
                to_string(f) + " labeling does not reach kappa " + std::to_string(kappa));
}

std::vector<Fixture> fixtures(bool tamper) {
  std::vector<Int> table(std::begin(kGamma3Table), std::end(kGamma3Table));
  if (tamper) std::swap(table[0], table[1]);
  const ConnectionSet g3(24, {1, 2, 3}), g4(24, {1, 3, 10}), g5(24, {1, 5, 6});
  const ConnectionSet s60(60, {5, 6, 12});

  std::vector<Fixture> fx;
  fx.push_back({"admissible 24:1,2,3", [=] {
                  return check_admissible(g3, {3, 8, 9, 15, 16, 21}, {3, 9, 15, 21}, TypeTag::T2);
                }});
  fx.push_back({"admissible 60:5,6,12", [=] {
                  return check_admissible(s60, {2, 14, 15, 22, 26, 34, 38, 45, 46, 58}, {15, 45},
                                          TypeTag::T3);
                }});
  fx.push_back({"type-1 witness 24:1,2,3 j=3", [=] {
                  const auto w = type1_test(g3, 3);
                  return expect(w && plus_minus(w->assignment[1], 2, 24) && witness_holds(g3, 3, *w),
                                "no type-1 witness with s2 = ±2");
                }});
  fx.push_back({"type-1 none 24:1,2,3 j=8",
                [=] { return expect(!type1_test(g3, 8), "unexpected type-1 witness"); }});
  fx.push_back({"type-2 witness 24:1,2,3 j=8",
                [=] { return expect(type2_test(g3, 8).has_value(), "no type-2 witness"); }});
  fx.push_back({"type-1 witness 60:5,6,12 j=15", [=] {
                  const auto w = type1_test(s60, 15);
                  return expect(w && plus_minus(w->assignment[1], 5, 60),
                                "no type-1 witness with s2 = ±5");
                }});
  fx.push_back({"types 1 and 2 at 60:1,5,9 j=5", [] {
                  const ConnectionSet s(60, {1, 5, 9});
                  return expect(type1_test(s, 5) && type2_test(s, 5), "expected both witnesses");
                }});
  fx.push_back({"type-3 witness 60:5,6,12 j=2", [=] {
                  const auto w = type3_test(s60, 2);
                  return expect(w && w->variant == 2 && plus_minus(2 * w->assignment[0], 10, 60),
                                "no second-form type-3 witness with 2 s1 = ±10");
                }});
  fx.push_back({"type-3 none 60:5,6,12 j=15",
                [=] { return expect(!type3_test(s60, 15), "unexpected type-3 witness"); }});
  fx.push_back({"5-part of 60", [] { return expect(p_part(60, 5) == 5, "p_part(60, 5) != 5"); }});
  fx.push_back({"CRT 0 (4), 2 (5), -2 (77)", [] {
                  return expect(crt_solve({{0, 4}, {2, 5}, {-2, 77}}).value == 152, "expected 152");
                }});
  fx.push_back({"CRT 0 (4), 2 (7), -2 (55)", [] {
                  return expect(crt_solve({{0, 4}, {2, 7}, {-2, 55}}).value == 548, "expected 548");
                }});
  fx.push_back({"filter passes 24:1,2,3",
                [=] { return expect(candidate_filter(g3).passed(), "filter rejected Gamma_3"); }});
  fx.push_back({"candidates at n = 12, 24, 60", [] {
                  const Int a = count_candidates(12), b = count_candidates(24), c = count_candidates(60);
                  return expect(a == 2 && b == 5 && c == 15,
                                "counts " + std::to_string(a) + "/" + std::to_string(b) + "/" +
                                    std::to_string(c));
                }});
  fx.push_back({"T1a[5,77] set", [] {
                  return expect(family_connection_set(T1Case1{5, 77}) == ConnectionSet(1540, {2, 152, 385}),
                                "wrong set");
                }});
  fx.push_back({"T1b[5,7,11] set", [] {
                  return expect(
                      family_connection_set(T1Case2{5, 7, 11}) == ConnectionSet(1540, {5, 413, 737}),
                      "wrong set");
                }});
  fx.push_back({"T1b[1,5,77] raw and set", [] {
                  const auto raw = family_raw_elements(T1Case2{1, 5, 77});
                  return expect(raw[1] == 1385 && raw[2] == 1309 &&
                                    family_connection_set(T1Case2{1, 5, 77}) ==
                                        ConnectionSet(1540, {1, 155, 231}),
                                "wrong raw elements or set");
                }});
  fx.push_back({"recognize 24:1,6,11 as Ml[6]", [] {
                  const auto r = recognize(ConnectionSet(24, {1, 6, 11}));
                  return expect(r && r->family == Family(MobiusLadderLex{6}), "not Ml[6]");
                }});
  fx.push_back({"recognize 24:1,7,9 as C3K[8]", [] {
                  const auto r = recognize(ConnectionSet(24, {1, 7, 9}));
                  return expect(r && r->family == Family(CycleLex{8}), "not C3K[8]");
                }});
  fx.push_back({"recognize 24:1,2,3 as nothing",
                [=] { return expect(!recognize(g3), "Gamma_3 recognized as a family"); }});
  fx.push_back({"type-3 conditions 60:5,6,12", [=] {
                  const auto t = type3_necessary(s60);
                  return expect(t.passed() && t.five_multiple == 5, "failed " + to_string(t.failed));
                }});
  fx.push_back({"decide 1540:2,152,385", [] {
                  const auto v = decide(ConnectionSet(1540, {2, 152, 385}));
                  return expect(v.status == Verdict::kYes && v.family &&
                                    v.family->family == Family(T1Case1{5, 77}),
                                "not yes via T1a[5,77]");
                }});
  fx.push_back({"decide 24:1,2,3", [=] {
                  const auto v = decide(g3);
                  return expect(v.status == Verdict::kYes && v.step == 6 && v.labeling,
                                "not yes by search at the last step");
                }});
  fx.push_back({"families of order 1540", [] {
                  const std::vector<std::array<Int, 3>> want = {
                      {1, 385, 769}, {2, 385, 768}, {2, 152, 385}, {2, 385, 548}, {2, 68, 385},
                      {1, 155, 231}, {1, 329, 715}, {1, 209, 595}, {5, 413, 737}};
                  const auto fams = enumerate_families(1540);
                  if (fams.size() != want.size()) return "got " + std::to_string(fams.size()) + " families";
                  for (size_t i = 0; i < fams.size(); ++i) {
                    if (!same_class(family_connection_set(fams[i]), want[i])) {
                      return to_string(fams[i]) + " does not match its expected set";
                    }
                  }
                  return std::string();
                }});
  fx.push_back({"families of order 12", [] {
                  const std::vector<Family> want = {MobiusLadderLex{3}, PrismLex{3}, CycleLex{4}};
                  return expect(enumerate_families(12) == want, "expected Ml[3], Pr[3], C3K[4]");
                }});
  fx.push_back({"Gamma_3 table", [=] {
                  return expect(verify(Circulant(g3), Labeling(table)) == 75, "table does not verify");
                }});
  fx.push_back({"Gamma_3 table on Gamma_4 and Gamma_5", [=] {
                  return expect(verify(Circulant(g4), Labeling(table)) == 75 &&
                                    verify(Circulant(g5), Labeling(table)) == 75,
                                "table does not carry over");
                }});
  fx.push_back({"Ml[3] pairing labeling",
                [] { return check_family_labeling(MobiusLadderLex{3}, 39); }});
  fx.push_back({"Pr[3] pairing labeling", [] { return check_family_labeling(PrismLex{3}, 39); }});
  fx.push_back({"T1b[5,7,11] labeling", [] {
                  const Labeling l = label_family(T1Case2{5, 7, 11});
                  for (Int x = 0; x < 1540; ++x) {
                    if (l(x) + l(x + 770) != 1541) return "antipodal sum fails at " + std::to_string(x);
                  }
                  return expect(verify(Circulant(ConnectionSet(1540, {5, 413, 737})), l) == 4623,
                                "kappa != 4623");
                }});
  fx.push_back({"T1a[5,77] labeling", [] { return check_family_labeling(T1Case1{5, 77}, 4623); }});
  fx.push_back({"T2[5,7] triple sums", [] {
                  const Labeling l = label_family(T2Family{5, 7});
                  const Int n0 = 35, delta = unit_residue_sign(n0, 3);
                  for (Int x = 0; x < 105; ++x) {
                    if (l(x) + l(x + delta * n0) + l(x - delta * n0) != 3 * 106 / 2) {
                      return "triple sum fails at " + std::to_string(x);
                    }
                  }
                  return std::string();
                }});
  fx.push_back({"T2[5,7] scaffold coordinates", [] {
                  const Int n = 105, n0 = 35, delta = unit_residue_sign(n0, 3);
                  const Int c = family_raw_elements(T2Family{5, 7})[2];
                  const Int lambda = c + 1 - delta * n0, mu = c - 1 + delta * n0;
                  const auto sc = build_scaffold(n, 3, lambda, mu, 5, 7);
                  return expect(sc.zeta(c) == 3 && sc.xi(c) == 4 && gcd(lambda, n) == 21 &&
                                    gcd(mu, n) == 15,
                                "coordinates of c or gcds differ");
                }});
  fx.push_back({"C3K[8] labeling", [] { return check_family_labeling(CycleLex{8}, 75); }});
  fx.push_back({"C3K[6] rejected", [] {
                  try {
                    label_cycle_lex(6);
                  } catch (const DomainError&) {
                    return std::string();
                  }
                  return std::string("C3K[6] was labeled");
                }});
  fx.push_back({"search 12:1,3,5", [] {
                  const auto o = search_labeling(ConnectionSet(12, {1, 3, 5}), {kDefaultSearchNodes, 0});
                  return expect(o.found() && verify(Circulant(12, {1, 3, 5}), *o.labeling) == 39,
                                "not found");
                }});
  fx.push_back({"search 24:1,2,3", [=] {
                  const auto o = search_labeling(g3, {kDefaultSearchNodes, 0});
                  return expect(o.found() && verify(Circulant(g3), *o.labeling) == 75, "not found");
                }});
  fx.push_back({"n = 24 scan row", [] {
                  ScanOptions so;
                  Int cands = 0, found = 0;
                  for (const auto& r : scan_order(24, so)) {
                    if (!r.filter.passed()) continue;
                    ++cands;
                    found += r.search && r.search->found() ? 1 : 0;
                  }
                  return expect(cands == 5 && found == 5,
                                std::to_string(found) + " of " + std::to_string(cands) + " found");
                }});
  fx.push_back({"n = 12 scan row", [] {
                  ScanOptions so;
                  Int cands = 0, trivial = 0;
                  for (const auto& r : scan_order(12, so)) {
                    if (!r.filter.passed()) continue;
                    ++cands;
                    bool t = !r.families.empty();
                    for (const auto& f : r.families) t = t && is_trivial(f);
                    trivial += t ? 1 : 0;
                  }
                  return expect(cands == 2 && trivial == 2, "expected two trivial candidates");
                }});
  return fx;
}

}  // namespace

Outcome cmd_selftest(const Options& opts, bool tamper) {
  const auto start = std::chrono::steady_clock::now();
  json failures = json::array();
  std::ostringstream table;
  size_t passed = 0;
  const auto fx = fixtures(tamper);
  for (const auto& f : fx) {
    std::string why;
    try {
      why = f.run();
    } catch (const std::exception& e) {
      why = std::string("threw: ") + e.what();
    }
    if (why.empty()) {
      ++passed;
      table << "PASS  " << f.name << "\n";
    } else {
      failures.push_back({{"fixture", f.name}, {"detail", why}});
      table << "FAIL  " << f.name << ": " << why << "\n";
    }
  }
  const bool ok = failures.empty();
  const int code = ok ? kExitOk : kExitNo;
  const std::string err = ok ? "" : table.str();
  if (opts.format == Format::kTable) {
    table << passed << "/" << fx.size() << " fixtures passed\n";
    return {code, table.str(), err};
  }
  const auto ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json j{{"kind", "selftest"},
         {"schema", kSchemaVersion},
         {"input", {{"tamper", tamper}}},
         {"result",
          {{"status", ok ? "passed" : "failed"},
           {"passed", passed},
           {"total", fx.size()},
           {"failures", failures}}},
         {"elapsed_ms", ms},
         {"version", version()}};
  return {code, j.dump() + "\n", err};
}

}  // namespace circmagic::cli
