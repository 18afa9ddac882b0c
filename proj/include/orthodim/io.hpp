#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orthodim/certificates.hpp"
#include "orthodim/graph.hpp"
#include "orthodim/solver.hpp"

namespace orthodim {

// Extended DIMACS instance. External files are 1-based; everything here is
// 0-based. Canonical line order: c, p, f, d, x (ascending), e (sorted),
// l (ascending vertex); serialize always emits it, parse accepts any order
// except that an l line needs the d line first.
struct InstanceFile {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<int> modulator;              // ascending
  std::optional<int> d;
  std::optional<FieldSpec> field;
  // vertex -> subspace basis rows (row-major, length d each)
  std::map<int, std::vector<std::vector<long long>>> subspaces;
  std::vector<std::string> comments;
};

// throws std::invalid_argument with a 1-based line number on malformed input
InstanceFile parse_instance(const std::string& text);
std::string serialize_instance(const InstanceFile& f);

Graph to_graph(const InstanceFile& f);
InstanceFile from_graph(const Graph& g);

// requires f and d lines plus a finite field; vertices without an l line get
// the full space
SubChooseInstance to_subchoose(const InstanceFile& f);
InstanceFile from_subchoose(const SubChooseInstance& inst);

std::string orthrep_json(const FiniteOrthRep& rep);
std::string witness_json(const SubInstanceWitness& w);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace orthodim
