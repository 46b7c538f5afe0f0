#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circmagic/decide.h"
#include "circmagic/labelers.h"

namespace py = pybind11;
using namespace circmagic;

namespace {

py::list tag_names(const std::vector<TypeTag>& tags) {
  py::list out;
  for (auto t : tags) out.append(to_string(t));
  return out;
}

py::dict stats_dict(const SearchStats& s) {
  py::dict d;
  d["nodes"] = s.nodes;
  d["max_depth"] = s.max_depth;
  d["covered"] = s.covered;
  d["prefiltered"] = s.prefiltered;
  return d;
}

Circulant parse_graph(const std::string& text) {
  if (parse_set_text(text).elems.size() == 3) return Circulant(ConnectionSet::parse(text));
  return Circulant::parse(text);
}

}  // namespace

PYBIND11_MODULE(_circmagic, m) {
  m.doc() = "Distance magic valency-6 circulants";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<SearchFailure>(m, "SearchFailure", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& set) {
    return canonical_form(ConnectionSet::parse(set)).to_string();
  }, py::arg("set"), "Canonical representative of the multiplier class, as n:a,b,c.");

  m.def("normalize", [](const std::string& set) { return ConnectionSet::parse(set).to_string(); },
        py::arg("set"));

  m.def("admissible", [](const std::string& set) {
    py::list out;
    for (const auto& c : admissible_set(ConnectionSet::parse(set))) {
      py::dict d;
      d["j"] = c.j;
      d["tags"] = tag_names(c.types);
      out.append(d);
    }
    return out;
  }, py::arg("set"), "Admissible characters as [{'j': int, 'tags': [...]}].");

  m.def("candidate_filter", [](const std::string& set) {
    return candidate_filter(ConnectionSet::parse(set)).reason();
  }, py::arg("set"), "'pass', 'empty' or 'gcd'.");

  m.def("decide", [](const std::string& set, std::uint64_t budget_nodes) {
    const auto v = decide(ConnectionSet::parse(set), {{budget_nodes, 0}, {}});
    py::dict d;
    d["status"] = to_string(v.status);
    d["reason"] = to_string(v.reason);
    d["step"] = v.step;
    d["family"] = v.family ? py::object(py::str(to_string(v.family->family))) : py::none();
    d["labeling"] = v.labeling ? py::object(py::cast(v.labeling->values())) : py::none();
    d["search"] = v.search ? py::object(stats_dict(*v.search)) : py::none();
    return d;
  }, py::arg("set"), py::arg("budget_nodes") = kDefaultSearchNodes);

  m.def("recognize", [](const std::string& set) {
    py::list out;
    for (const auto& r : recognize_all(ConnectionSet::parse(set))) {
      out.append(py::make_tuple(to_string(r.family), r.q));
    }
    return out;
  }, py::arg("set"), "Every (family, multiplier) match.");

  m.def("enumerate_sets", [](Int n) {
    std::vector<std::string> out;
    for (const auto& s : enumerate_sets(n)) out.push_back(s.to_string());
    return out;
  }, py::arg("n"));

  m.def("enumerate_families", [](Int n) {
    std::vector<std::string> out;
    for (const auto& f : enumerate_families(n)) out.push_back(to_string(f));
    return out;
  }, py::arg("n"));

  m.def("family_set", [](const std::string& family) {
    return family_connection_set(parse_family(family)).to_string();
  }, py::arg("family"));

  m.def("label", [](const std::string& spec, std::uint64_t budget_nodes) {
    const SearchBudget budget{budget_nodes, 0};
    if (spec.find('[') != std::string::npos) return label_family(parse_family(spec), budget).values();
    return label_connection_set(ConnectionSet::parse(spec), budget).labeling.values();
  }, py::arg("spec"), py::arg("budget_nodes") = kDefaultSearchNodes,
     "Verified labeling of a family ('T2[5,7]') or a set ('24:1,2,3').");

  m.def("verify", [](const std::string& set, const std::vector<Int>& labels) {
    return verify(parse_graph(set), Labeling(labels));
  }, py::arg("set"), py::arg("labels"), "Magic constant, or None.");

  m.def("search", [](const std::string& set, std::uint64_t budget_nodes, bool pairing,
                     bool parity_block, bool symmetry_breaking) {
    const Circulant g = parse_graph(set);
    SearchOptions so;
    so.symmetry_breaking = symmetry_breaking;
    SearchOutcome out;
    if (pairing || parity_block) {
      out = search_constrained(g, {pairing, parity_block}, {budget_nodes, 0}, so);
    } else if (g.valency() == 6) {
      out = search_labeling(ConnectionSet::parse(set), {budget_nodes, 0}, so);
    } else {
      out = search_labeling(g, {budget_nodes, 0}, so);
    }
    py::dict d;
    d["outcome"] = to_string(out.kind);
    d["labeling"] = out.labeling ? py::object(py::cast(out.labeling->values())) : py::none();
    d["stats"] = stats_dict(out.stats);
    return d;
  }, py::arg("set"), py::arg("budget_nodes") = kDefaultSearchNodes, py::arg("pairing") = false,
     py::arg("parity_block") = false, py::arg("symmetry_breaking") = true);

  m.def("tetravalent_sublabeling", [](Int n0, Int c0) {
    return tetravalent_sublabeling(n0, c0).labeling.values();
  }, py::arg("n0"), py::arg("c0"));
}
