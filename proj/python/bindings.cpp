#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>

#include "orthodim/certificates.hpp"
#include "orthodim/gen.hpp"
#include "orthodim/harness.hpp"
#include "orthodim/io.hpp"
#include "orthodim/kernels.hpp"
#include "orthodim/linalg.hpp"
#include "orthodim/reductions.hpp"
#include "orthodim/solver.hpp"

namespace py = pybind11;
using namespace orthodim;

namespace {

using Edges = std::vector<std::pair<int, int>>;

Graph make_graph(int n, const Edges& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

FieldSpec field_of(const std::string& s) {
  auto f = FieldSpec::parse(s);
  if (!f) throw std::invalid_argument("unknown field '" + s + "'");
  return *f;
}

FamilyTag family_of(const std::string& s) {
  auto t = parse_family(s);
  if (!t) throw std::invalid_argument("unknown family '" + s + "'");
  return *t;
}

SearchLimits limits_of(std::uint64_t budget) {
  SearchLimits lim;
  if (budget > 0) lim.node_budget = budget;
  return lim;
}

py::dict report_dict(const KernelReport& r) {
  py::dict d;
  d["algorithm"] = r.algorithm;
  d["n_in"] = r.n_in;
  d["m_in"] = r.m_in;
  d["k"] = r.k;
  d["d"] = r.d;
  d["n_out"] = r.n_out;
  d["m_out"] = r.m_out;
  d["bound"] = r.bound.str();
  d["within_bound"] = r.within_bound;
  return d;
}

py::dict graph_dict(const Graph& g, const std::vector<int>& modulator) {
  py::dict d;
  d["n"] = g.n();
  d["edges"] = g.edges();
  d["modulator"] = modulator;
  return d;
}

}  // namespace

PYBIND11_MODULE(_orthodim, m) {
  m.doc() = "orthogonality-dimension kernels, deciders, reductions and certificates";

  m.def(
      "decide_od",
      [](int n, const Edges& edges, int d, const std::string& field, std::uint64_t budget) {
        OdDecision dec = decide_od(make_graph(n, edges), d, field_of(field), limits_of(budget));
        py::object witness = py::none();
        if (dec.witness) witness = py::cast(dec.witness->vectors);
        return py::make_tuple(dec.yes, witness);
      },
      py::arg("n"), py::arg("edges"), py::arg("d"), py::arg("field"), py::arg("budget") = 0,
      "exhaustive od_F(G) <= d decision; returns (yes, witness_vectors_or_None)");

  m.def(
      "fpt_decide_vc",
      [](int n, const Edges& edges, const std::vector<int>& x, int d, const std::string& field,
         std::uint64_t budget) {
        return fpt_decide_vc(make_graph(n, edges), x, d, field_of(field), limits_of(budget));
      },
      py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("d"), py::arg("field"),
      py::arg("budget") = 0, "vertex-cover-parameterized decision, x must cover every edge");

  m.def(
      "compute_m",
      [](const std::string& field, int d) { return compute_m(field_of(field), d); },
      py::arg("field"), py::arg("d"),
      "largest m such that every subspace of dimension < m leaves a usable vector in its complement");

  m.def(
      "chromatic_number",
      [](int n, const Edges& edges) { return chromatic_number(make_graph(n, edges)); },
      py::arg("n"), py::arg("edges"));

  m.def(
      "emit_etr",
      [](int n, const Edges& edges, int d) { return emit_etr_system(make_graph(n, edges), d); },
      py::arg("n"), py::arg("edges"), py::arg("d"),
      "polynomial constraint system whose real solvability equals od_R(G) <= d");

  m.def(
      "kernel_general",
      [](int n, const Edges& edges, const std::vector<int>& x, int d) {
        GeneralKernel res = kernel_general(make_graph(n, edges), x, d);
        py::dict out = graph_dict(res.kg.graph, res.kg.modulator);
        out["report"] = report_dict(res.report);
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("d"),
      "any-field kernel: replacement graph on X plus one vertex per realized subset");

  m.def(
      "kernel_real",
      [](int n, const Edges& edges, const std::vector<int>& x, int d) {
        RealKernel res = kernel_real(make_graph(n, edges), x, d);
        py::dict out = graph_dict(res.graph, res.modulator);
        out["report"] = report_dict(res.report);
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("d"),
      "real-field kernel: polynomial rank basis trims the subset vertices");

  m.def(
      "kernel_hereditary",
      [](int n, const Edges& edges, const std::vector<int>& x, int d, const std::string& family,
         int g_of_d) {
        HereditaryKernel res =
            kernel_hereditary(make_graph(n, edges), x, d, family_of(family), g_of_d);
        py::dict out = graph_dict(res.graph, res.modulator);
        out["kept"] = res.kept_orig;
        out["report"] = report_dict(res.report);
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("d"), py::arg("family"),
      py::arg("g_of_d"), "marking kernel for modulators to a hereditary family");

  m.def(
      "reduce_coloring",
      [](int n, const Edges& edges, const std::vector<int>& x, int d, const std::string& variant) {
        Graph g = make_graph(n, edges);
        ReductionOutput ro =
            variant == "path" ? col_to_od_path(g, x) : col_to_od_vc(g, x, d);
        py::dict out = graph_dict(ro.graph, ro.modulator);
        out["d"] = ro.d;
        out["clique"] = ro.clique;
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("x"), py::arg("d") = 3,
      py::arg("variant") = "vc",
      "chi(G) <= d to od_F(G') <= d transformation ('vc' or 'path')");

  m.def(
      "verify_gadget",
      [](int d, const std::string& field) { return verify_gadget_property(d, field_of(field)); },
      py::arg("d"), py::arg("field"),
      "exhaustively confirm the orthogonal-or-proportional gadget dichotomy");

  m.def(
      "gen_instance",
      [](int n, int k, const std::string& family, double density, std::uint64_t seed,
         bool with_subspaces, int d, const std::string& field) {
        GenConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.family = family_of(family);
        cfg.density = density;
        cfg.seed = seed;
        cfg.with_subspaces = with_subspaces;
        cfg.d = d;
        if (with_subspaces) cfg.field = field_of(field);
        return serialize_instance(gen_random(cfg));
      },
      py::arg("n"), py::arg("k"), py::arg("family") = "empty", py::arg("density") = 0.5,
      py::arg("seed") = 1, py::arg("with_subspaces") = false, py::arg("d") = 3,
      py::arg("field") = "gf2", "random instance text with a planted modulator");

  m.def(
      "parse_instance",
      [](const std::string& text) {
        InstanceFile f = parse_instance(text);
        py::dict out;
        out["n"] = f.n;
        out["edges"] = f.edges;
        out["modulator"] = f.modulator;
        out["d"] = f.d ? py::cast(*f.d) : py::none();
        out["field"] = f.field ? py::cast(f.field->name()) : py::none();
        return out;
      },
      py::arg("text"), "parse instance text (1-based file, 0-based result)");

  m.def(
      "certify_no",
      [](const std::string& text, const std::string& kind, std::uint64_t budget) {
        SubChooseInstance sc = to_subchoose(parse_instance(text));
        SearchLimits lim = limits_of(budget);
        SubInstanceWitness w = kind == "cochordal" ? cochordal_no_certificate(sc, lim)
                               : kind == "split-anisotropic"
                                   ? split_no_certificate_anisotropic(sc, lim)
                                   : split_no_certificate(sc, lim);
        py::dict out;
        out["vertices"] = w.vertices;
        out["bound"] = w.bound.str();
        out["verified"] = w.verified;
        return out;
      },
      py::arg("text"), py::arg("kind") = "split", py::arg("budget") = 0,
      "NO certificate for a subspace-constrained instance given as text");

  m.def(
      "run_suite",
      [](const std::string& name, int trials, std::uint64_t seed) {
        SuiteResult r = run_suite(name, trials, seed);
        py::dict out;
        out["name"] = r.name;
        out["total"] = r.total;
        out["passed"] = r.passed;
        out["failures"] = r.failures;
        out["ok"] = r.ok();
        return out;
      },
      py::arg("name"), py::arg("trials") = 0, py::arg("seed") = 1,
      "run one verification suite and return its counts");

  m.def("suite_names", []() { return suite_names(); });
}
