#include "commands.h"

#include <chrono>
#include <functional>
#include <sstream>

#include "circmagic/decide.h"
#include "circmagic/labelers.h"
#include "circmagic/scan.h"
#include "json.hpp"

namespace circmagic::cli {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::string envelope(const std::string& kind, const json& input, const json& result,
                     Clock::time_point start) {
  const auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  json j{{"kind", kind},        {"schema", kSchemaVersion}, {"input", input},
         {"result", result},    {"elapsed_ms", ms},         {"version", version()}};
  return j.dump() + "\n";
}

// Runs body, mapping bad input to the usage exit code.
Outcome guarded(const std::function<Outcome()>& body, int input_error_code = kExitUsage) {
  try {
    return body();
  } catch (const SearchFailure& e) {
    return {kExitUnknown, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {input_error_code, "", std::string("error: ") + e.what() + "\n"};
  } catch (const DomainError& e) {
    return {input_error_code, "", std::string("error: ") + e.what() + "\n"};
  }
}

json witness_json(const TypeWitness& w) {
  json j{{"type", to_string(w.type)}, {"assignment", w.assignment}, {"ks", w.ks}};
  if (w.j0) j["j0"] = *w.j0;
  if (w.variant != 0) j["variant"] = w.variant;
  return j;
}

json tags_json(const AdmissibleChar& c) {
  json t = json::array();
  for (auto tag : c.types) t.push_back(to_string(tag));
  return t;
}

json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes},
          {"max_depth", s.max_depth},
          {"covered", s.covered},
          {"prefiltered", s.prefiltered}};
}

json recognition_json(const Recognition& r) {
  return {{"family", to_string(r.family)}, {"q", r.q}};
}

std::string join(const std::vector<Int>& v, const char* sep = " ") {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

// A set of any even valency; "n:a,b,c" with three elements gives a
// ConnectionSet as well.
struct AnySet {
  Circulant graph;
  std::optional<ConnectionSet> six;
};

AnySet parse_any(const std::string& text) {
  const auto parsed = parse_set_text(text);
  if (parsed.elems.size() == 3) {
    ConnectionSet s = ConnectionSet::parse(text);
    return {Circulant(s), s};
  }
  return {Circulant::parse(text), std::nullopt};
}

}  // namespace

std::string version() { return "0.1.0"; }

Outcome cmd_admissible(const std::string& text, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const ConnectionSet s = ConnectionSet::parse(text);
    const auto chars = admissible_set(s);
    if (opts.format == Format::kTable) {
      std::ostringstream os;
      os << s.to_string() << "  (" << chars.size() << " admissible)\n";
      for (const auto& c : chars) {
        os << "  j=" << c.j << "  ";
        for (size_t i = 0; i < c.types.size(); ++i) os << (i ? "," : "") << to_string(c.types[i]);
        os << "\n";
      }
      return Outcome{kExitOk, os.str(), ""};
    }
    json arr = json::array();
    for (const auto& c : chars) {
      json w = json::array();
      for (const auto& x : c.witnesses) w.push_back(witness_json(x));
      arr.push_back({{"j", c.j}, {"tags", tags_json(c)}, {"witnesses", w}});
    }
    json result{{"set", s.to_string()}, {"admissible", arr}};
    return Outcome{kExitOk, envelope("admissible", {{"set", text}}, result, start), ""};
  });
}

Outcome cmd_decide(const std::string& text, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const ConnectionSet s = ConnectionSet::parse(text);
    const DmVerdict v = decide(s, {opts.budget, {}});
    const int code = v.status == Verdict::kYes  ? kExitOk
                     : v.status == Verdict::kNo ? kExitNo
                                                : kExitUnknown;
    if (opts.format == Format::kTable) {
      std::ostringstream os;
      os << s.to_string() << "  " << to_string(v.status);
      if (v.status == Verdict::kNo) os << " (" << to_string(v.reason) << ")";
      os << "  step " << v.step;
      if (v.family) os << "  " << to_string(v.family->family) << " q=" << v.family->q;
      if (v.labeling) os << "  labeling by search";
      if (v.search) os << "  nodes=" << v.search->nodes;
      os << "\n";
      return Outcome{code, os.str(), ""};
    }
    json result{{"set", s.to_string()},
                {"status", to_string(v.status)},
                {"reason", to_string(v.reason)},
                {"step", v.step},
                {"filter", v.filter.reason()}};
    json tags = json::array();
    if (v.profile.any_t1) tags.push_back("T1");
    if (v.profile.any_t2) tags.push_back("T2");
    if (v.profile.any_t3) tags.push_back("T3");
    result["tags"] = tags;
    if (v.family) result["family"] = recognition_json(*v.family);
    if (v.labeling) {
      result["labeling"] = v.labeling->values();
      result["kappa"] = magic_constant(Circulant(s));
    }
    if (v.type3) {
      result["type3"] = {{"failed", to_string(v.type3->failed)}};
      if (v.type3->five_multiple) result["type3"]["five_multiple"] = *v.type3->five_multiple;
    }
    if (v.search) result["search"] = stats_json(*v.search);
    return Outcome{code,
                   envelope("classify", {{"set", text}, {"budget_nodes", opts.budget.max_nodes}},
                            result, start),
                   ""};
  });
}

Outcome cmd_recognize(const std::string& text, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const ConnectionSet s = ConnectionSet::parse(text);
    const auto recs = recognize_all(s);
    const int code = recs.empty() ? kExitNo : kExitOk;
    if (opts.format == Format::kTable) {
      std::ostringstream os;
      os << s.to_string() << "  ";
      if (recs.empty()) os << "no family";
      for (size_t i = 0; i < recs.size(); ++i) {
        os << (i ? ", " : "") << to_string(recs[i].family) << " q=" << recs[i].q;
      }
      os << "\n";
      return Outcome{code, os.str(), ""};
    }
    json arr = json::array();
    for (const auto& r : recs) {
      json x = recognition_json(r);
      x["distance_magic"] = family_is_distance_magic(r.family);
      arr.push_back(x);
    }
    return Outcome{code,
                   envelope("recognize", {{"set", text}}, {{"set", s.to_string()}, {"families", arr}},
                            start),
                   ""};
  });
}

Outcome cmd_label(const std::string& spec, const Options& opts) {
  return guarded(
      [&]() -> Outcome {
        const auto start = Clock::now();
        std::optional<ConnectionSet> s;
        std::optional<Labeling> l;
        json how;
        if (spec.find('[') != std::string::npos) {
          const Family f = parse_family(spec);
          if (!family_is_distance_magic(f)) {
            return {kExitNo, "", "error: " + to_string(f) + " is not distance magic\n"};
          }
          s = family_connection_set(f);
          l = label_family(f, opts.budget);
          how = {{"method", "family"}, {"family", to_string(f)}};
        } else {
          s = ConnectionSet::parse(spec);
          try {
            auto sl = label_connection_set(*s, opts.budget);
            l = std::move(sl.labeling);
            if (sl.family) {
              how = {{"method", "family"}, {"family", to_string(sl.family->family)},
                     {"q", sl.family->q}};
            } else {
              how = {{"method", "search"}, {"search", stats_json(*sl.search)}};
            }
          } catch (const DomainError& e) {
            return {kExitNo, "", std::string("error: ") + e.what() + "\n"};
          }
        }
        const Circulant g(*s);
        const auto kappa = verify(g, *l);
        if (kappa != magic_constant(g)) {
          return {kExitNo, "", "error: internal labeling failed verification\n"};
        }
        if (opts.format == Format::kTable) {
          std::ostringstream os;
          os << s->to_string() << "  kappa=" << *kappa << "  via " << how["method"].get<std::string>()
             << "\n";
          for (Int x = 0; x < l->n(); ++x) os << x << "\t" << (*l)(x) << "\n";
          return {kExitOk, os.str(), ""};
        }
        json result{{"set", s->to_string()}, {"kappa", *kappa}, {"labeling", l->values()}};
        result.update(how);
        return {kExitOk, envelope("label", {{"spec", spec}}, result, start), ""};
      },
      kExitUnknown);
}

Outcome cmd_verify(const std::string& text, const std::string& labeling, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const AnySet any = parse_any(text);
    const Labeling l = labeling_from_text(labeling);
    const auto kappa = verify(any.graph, l);
    const int code = kappa ? kExitOk : kExitNo;
    if (opts.format == Format::kTable) {
      std::ostringstream os;
      os << any.graph.to_string() << "  ";
      if (kappa) {
        os << "distance magic, kappa=" << *kappa << "\n";
      } else {
        os << "not distance magic\n";
      }
      return Outcome{code, os.str(), ""};
    }
    json result{{"set", any.graph.to_string()}, {"magic", kappa.has_value()}};
    result["kappa"] = kappa ? json(*kappa) : json(nullptr);
    return Outcome{code, envelope("verify", {{"set", text}, {"n", l.n()}}, result, start), ""};
  });
}

Outcome cmd_search(const std::string& text, const SearchFlags& flags, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    const AnySet any = parse_any(text);
    SearchOptions so;
    so.prefilter = flags.prefilter;
    so.symmetry_breaking = flags.symmetry_breaking;
    SearchOutcome out;
    if (flags.pairing || flags.parity_block) {
      out = search_constrained(any.graph, {flags.pairing, flags.parity_block}, opts.budget, so);
    } else if (any.six) {
      out = search_labeling(*any.six, opts.budget, so);
    } else {
      out = search_labeling(any.graph, opts.budget, so);
    }
    const int code = out.kind == SearchOutcome::Kind::kFound       ? kExitOk
                     : out.kind == SearchOutcome::Kind::kExhausted ? kExitNo
                                                                   : kExitUnknown;
    if (opts.format == Format::kTable) {
      std::ostringstream os;
      os << any.graph.to_string() << "  " << to_string(out.kind) << "  nodes=" << out.stats.nodes
         << (out.stats.covered ? "  covered" : "") << "\n";
      if (out.labeling) os << "  " << join(out.labeling->values()) << "\n";
      return Outcome{code, os.str(), ""};
    }
    json result{{"set", any.graph.to_string()},
                {"outcome", to_string(out.kind)},
                {"stats", stats_json(out.stats)}};
    if (out.labeling) {
      result["labeling"] = out.labeling->values();
      result["kappa"] = magic_constant(any.graph);
    }
    json input{{"set", text},
               {"pairing", flags.pairing},
               {"parity_block", flags.parity_block},
               {"symmetry_breaking", flags.symmetry_breaking},
               {"budget_nodes", opts.budget.max_nodes},
               {"budget_seconds", opts.budget.max_seconds}};
    return Outcome{code, envelope("search", input, result, start), ""};
  });
}

Outcome cmd_enumerate(Int n, bool families, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    if (n < 7) throw DomainError("enumerate: n must be at least 7");
    std::ostringstream os;
    if (families) {
      const auto fams = enumerate_families(n);
      json arr = json::array();
      for (const auto& f : fams) {
        const auto s = family_connection_set(f);
        arr.push_back({{"family", to_string(f)},
                       {"set", s.to_string()},
                       {"canonical", canonical_form(s).to_string()},
                       {"distance_magic", family_is_distance_magic(f)}});
        if (opts.format == Format::kTable) {
          os << to_string(f) << "\t" << s.to_string() << "\t" << canonical_form(s).to_string() << "\n";
        }
      }
      if (opts.format == Format::kTable) return Outcome{kExitOk, os.str(), ""};
      return Outcome{kExitOk,
                     envelope("enumerate", {{"n", n}, {"families", true}},
                              {{"n", n}, {"families", arr}}, start),
                     ""};
    }
    const auto sets = enumerate_sets(n);
    json arr = json::array();
    Int candidates = 0;
    for (const auto& s : sets) {
      const auto chars = admissible_set(s);
      const auto filter = candidate_filter(s, chars);
      const auto prof = tag_profile(chars);
      json tags = json::array();
      if (prof.any_t1) tags.push_back("T1");
      if (prof.any_t2) tags.push_back("T2");
      if (prof.any_t3) tags.push_back("T3");
      json fams = json::array();
      for (const auto& r : recognize_all(s)) fams.push_back(to_string(r.family));
      if (filter.passed()) ++candidates;
      arr.push_back({{"set", s.to_string()},
                     {"filter", filter.reason()},
                     {"tags", tags},
                     {"families", fams}});
      if (opts.format == Format::kTable) {
        os << s.to_string() << "\t" << filter.reason() << "\t" << tags.dump() << "\t" << fams.dump()
           << "\n";
      }
    }
    if (opts.format == Format::kTable) {
      os << sets.size() << " classes, " << candidates << " candidates\n";
      return Outcome{kExitOk, os.str(), ""};
    }
    return Outcome{kExitOk,
                   envelope("enumerate", {{"n", n}, {"families", false}},
                            {{"n", n},
                             {"classes", arr},
                             {"class_count", sets.size()},
                             {"candidate_count", candidates}},
                            start),
                   ""};
  });
}

Outcome cmd_scan(Int nmin, const Options& opts) {
  return guarded([&] {
    const auto start = Clock::now();
    ScanOptions so;
    so.n_min = nmin;
    so.n_max = opts.nmax;
    so.budget = opts.budget;
    so.jobs = opts.jobs;
    const ScanReport rep = exhaustive_scan(so);
    std::ostringstream os;
    const int code = rep.matrix.disagree == 0 ? kExitOk : kExitNo;
    if (opts.format == Format::kTable) {
      for (const auto& r : rep.records) {
        os << r.set.to_string() << "\t" << r.filter.reason() << "\t"
           << to_string(r.verdict.status) << "\t"
           << (r.search ? to_string(r.search->kind) : std::string("-")) << "\t"
           << to_string(r.agreement) << "\n";
      }
      os << "agree=" << rep.matrix.agree << " disagree=" << rep.matrix.disagree
         << " inconclusive=" << rep.matrix.inconclusive << "\n";
      return Outcome{code, os.str(), ""};
    }
    const json input{{"nmin", nmin}, {"nmax", opts.nmax}, {"budget_nodes", opts.budget.max_nodes}};
    for (const auto& r : rep.records) {
      os << envelope("scan", input, json::parse(to_json_line(r)), start);
    }
    os << envelope("scan-summary", input, json::parse(to_json(rep.matrix)), start);
    return Outcome{code, os.str(), ""};
  });
}

}  // namespace circmagic::cli
