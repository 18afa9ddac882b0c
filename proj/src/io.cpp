#include "orthodim/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "orthodim/linalg.hpp"

namespace orthodim {

namespace {

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
}

long long parse_ll(const std::string& tok, int line_no) {
  size_t used = 0;
  long long v;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) fail(line_no, "trailing characters in '" + tok + "'");
  return v;
}

int parse_vertex(const std::string& tok, int n, int line_no) {
  long long v = parse_ll(tok, line_no);
  if (v < 1 || v > n) fail(line_no, "vertex " + tok + " out of range 1.." + std::to_string(n));
  return (int)(v - 1);
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  InstanceFile f;
  bool have_p = false;
  int declared_m = 0;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& kind = tok[0];
    if (kind == "c") {
      f.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    if (kind == "p") {
      if (have_p) fail(line_no, "duplicate p line");
      if (tok.size() != 4 || tok[1] != "edge") fail(line_no, "expected 'p edge <n> <m>'");
      long long n = parse_ll(tok[2], line_no);
      if (n < 0) fail(line_no, "negative vertex count");
      f.n = (int)n;
      declared_m = (int)parse_ll(tok[3], line_no);
      have_p = true;
      continue;
    }
    if (!have_p) fail(line_no, "'" + kind + "' line before the p line");
    if (kind == "e") {
      if (tok.size() != 3) fail(line_no, "expected 'e <u> <v>'");
      int u = parse_vertex(tok[1], f.n, line_no);
      int v = parse_vertex(tok[2], f.n, line_no);
      if (u == v) fail(line_no, "loop edge");
      auto e = std::minmax(u, v);
      if (std::find(f.edges.begin(), f.edges.end(), std::make_pair(e.first, e.second)) !=
          f.edges.end())
        fail(line_no, "duplicate edge");
      f.edges.emplace_back(e.first, e.second);
      continue;
    }
    if (kind == "x") {
      if (tok.size() != 2) fail(line_no, "expected 'x <v>'");
      int v = parse_vertex(tok[1], f.n, line_no);
      if (std::find(f.modulator.begin(), f.modulator.end(), v) != f.modulator.end())
        fail(line_no, "duplicate modulator vertex");
      f.modulator.push_back(v);
      continue;
    }
    if (kind == "d") {
      if (tok.size() != 2) fail(line_no, "expected 'd <int>'");
      long long d = parse_ll(tok[1], line_no);
      if (d < 1) fail(line_no, "d must be >= 1");
      if (f.d) fail(line_no, "duplicate d line");
      f.d = (int)d;
      continue;
    }
    if (kind == "f") {
      if (tok.size() != 2) fail(line_no, "expected 'f <field>'");
      auto fs = FieldSpec::parse(tok[1]);
      if (!fs) fail(line_no, "unknown field '" + tok[1] + "'");
      if (f.field) fail(line_no, "duplicate f line");
      f.field = *fs;
      continue;
    }
    if (kind == "l") {
      if (!f.d) fail(line_no, "l line before the d line");
      if (tok.size() < 3) fail(line_no, "expected 'l <v> <dim> <entries>'");
      int v = parse_vertex(tok[1], f.n, line_no);
      long long dim = parse_ll(tok[2], line_no);
      if (dim < 0 || dim > *f.d) fail(line_no, "subspace dimension out of range");
      if ((long long)tok.size() != 3 + dim * *f.d)
        fail(line_no, "expected " + std::to_string(dim * *f.d) + " basis entries");
      if (f.subspaces.count(v)) fail(line_no, "duplicate l line for vertex " + tok[1]);
      std::vector<std::vector<long long>> rows;
      for (long long r = 0; r < dim; ++r) {
        std::vector<long long> row;
        for (int c = 0; c < *f.d; ++c) row.push_back(parse_ll(tok[3 + r * *f.d + c], line_no));
        rows.push_back(std::move(row));
      }
      f.subspaces.emplace(v, std::move(rows));
      continue;
    }
    fail(line_no, "unknown line kind '" + kind + "'");
  }
  if (!have_p) throw std::invalid_argument("line 1: missing p line");
  if ((int)f.edges.size() != declared_m)
    throw std::invalid_argument("p line declares " + std::to_string(declared_m) + " edges, file has " +
                                std::to_string(f.edges.size()));
  std::sort(f.edges.begin(), f.edges.end());
  std::sort(f.modulator.begin(), f.modulator.end());
  return f;
}

std::string serialize_instance(const InstanceFile& f) {
  std::ostringstream out;
  for (const auto& c : f.comments) out << "c " << c << "\n";
  out << "p edge " << f.n << " " << f.edges.size() << "\n";
  if (f.field) out << "f " << f.field->name() << "\n";
  if (f.d) out << "d " << *f.d << "\n";
  std::vector<int> mod = f.modulator;
  std::sort(mod.begin(), mod.end());
  for (int v : mod) out << "x " << v + 1 << "\n";
  std::vector<std::pair<int, int>> edges = f.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
  for (const auto& [v, rows] : f.subspaces) {
    out << "l " << v + 1 << " " << rows.size();
    for (const auto& row : rows)
      for (long long e : row) out << " " << e;
    out << "\n";
  }
  return out.str();
}

Graph to_graph(const InstanceFile& f) {
  Graph g(f.n);
  for (auto [u, v] : f.edges) g.add_edge(u, v);
  return g;
}

InstanceFile from_graph(const Graph& g) {
  InstanceFile f;
  f.n = g.n();
  f.edges = g.edges();
  return f;
}

SubChooseInstance to_subchoose(const InstanceFile& f) {
  if (!f.field) throw std::invalid_argument("to_subchoose: missing f line");
  if (!f.d) throw std::invalid_argument("to_subchoose: missing d line");
  if (!f.field->is_finite()) throw std::invalid_argument("to_subchoose: field must be finite");
  GF gf = f.field->as_gf();
  SubChooseInstance inst;
  inst.graph = to_graph(f);
  inst.field = *f.field;
  inst.d = *f.d;
  for (int v = 0; v < f.n; ++v) {
    auto it = f.subspaces.find(v);
    if (it == f.subspaces.end()) {
      inst.subspaces.push_back(full_space(gf, inst.d));
      continue;
    }
    std::vector<Vec<GF>> rows;
    for (const auto& raw : it->second) {
      Vec<GF> row;
      for (long long e : raw) row.push_back(gf.from_int(e));
      rows.push_back(std::move(row));
    }
    inst.subspaces.push_back(span(gf, inst.d, std::move(rows)));
  }
  return inst;
}

InstanceFile from_subchoose(const SubChooseInstance& inst) {
  InstanceFile f = from_graph(inst.graph);
  f.field = inst.field;
  f.d = inst.d;
  for (int v = 0; v < inst.graph.n(); ++v) {
    std::vector<std::vector<long long>> rows;
    for (const auto& b : inst.subspaces[v].basis) rows.emplace_back(b.begin(), b.end());
    f.subspaces.emplace(v, std::move(rows));
  }
  return f;
}

std::string orthrep_json(const FiniteOrthRep& rep) {
  nlohmann::ordered_json j;
  j["field"] = rep.field.name();
  j["d"] = rep.d;
  j["vectors"] = rep.vectors;
  return j.dump();
}

std::string witness_json(const SubInstanceWitness& w) {
  nlohmann::ordered_json j;
  j["vertices"] = w.vertices;
  std::vector<std::vector<std::vector<int>>> bases;
  for (const auto& s : w.instance.subspaces) bases.push_back(s.basis);
  j["subspaces"] = bases;
  if (w.bound <= BigInt(std::numeric_limits<uint64_t>::max()))
    j["bound"] = (uint64_t)w.bound;
  else
    j["bound"] = w.bound.str();
  j["verified"] = w.verified;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

}  // namespace orthodim
