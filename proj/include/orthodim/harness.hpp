#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orthodim/graph.hpp"

namespace orthodim {

// Aggregated outcome of a verification suite. Failure messages are sorted so
// parallel trial execution cannot change the report.
struct SuiteResult {
  std::string name;
  std::string label = "passed";  // noun used in the one-line summary
  int total = 0;
  int passed = 0;
  std::vector<std::string> failures;
  double elapsed_ms = 0;

  bool ok() const { return total > 0 && passed == total; }
  std::string summary() const;  // "<passed>/<total> <label>"
};

// one representative (lex-min adjacency mask) per isomorphism class
std::vector<Graph> all_graphs_upto_iso(int n);

// Each suite replays a fixed randomized corpus derived from (seed, trial
// index) and checks an exact property per trial; trials <= 0 selects the
// suite's default size. Purely deterministic suites ignore both arguments.
SuiteResult suite_kernel_general(int trials, std::uint64_t seed);
SuiteResult suite_kgraph_bound(int trials, std::uint64_t seed);
SuiteResult suite_kernel_real(int trials, std::uint64_t seed);
SuiteResult suite_gadget(int trials, std::uint64_t seed);
SuiteResult suite_reduction_vc(int trials, std::uint64_t seed);
SuiteResult suite_reduction_path(int trials, std::uint64_t seed);
SuiteResult suite_m_values(int trials, std::uint64_t seed);
SuiteResult suite_fpt(int trials, std::uint64_t seed);
SuiteResult suite_certificates(int trials, std::uint64_t seed);
SuiteResult suite_etr(int trials, std::uint64_t seed);
SuiteResult suite_normalize(int trials, std::uint64_t seed);

std::vector<std::string> suite_names();

// dispatch by suite name; throws std::invalid_argument on an unknown name
SuiteResult run_suite(const std::string& name, int trials, std::uint64_t seed);

// frozen emission for K_3 with d = 2; the on-disk golden file holds the same bytes
extern const char* const kEtrK3D2Golden;

}  // namespace orthodim
