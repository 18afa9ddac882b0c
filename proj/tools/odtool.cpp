#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthodim/certificates.hpp"
#include "orthodim/gen.hpp"
#include "orthodim/harness.hpp"
#include "orthodim/io.hpp"
#include "orthodim/kernels.hpp"
#include "orthodim/reductions.hpp"
#include "orthodim/solver.hpp"

namespace {

using namespace orthodim;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string out;
  std::string alg = "brute";
  std::string field;
  std::string family = "empty";
  std::string variant = "vc";
  std::string kind = "split";
  std::string suite;
  int d = 0;
  int g_of_d = 1;
  int trials = 0;
  int n = 8, k = 3;
  double density = 0.5;
  bool with_subspaces = false;
  bool k_check = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
};

FieldSpec need_field(const Options& o, const InstanceFile& inst) {
  if (!o.field.empty()) {
    auto f = FieldSpec::parse(o.field);
    if (!f) throw UsageError("unknown field '" + o.field + "' (gf<p> with p prime <= 251, or rational)");
    return *f;
  }
  if (inst.field) return *inst.field;
  throw UsageError("no field given: pass --field or add an f line to the instance");
}

int need_d(const Options& o, const InstanceFile& inst) {
  if (o.d > 0) return o.d;
  if (inst.d) return *inst.d;
  throw UsageError("no dimension given: pass --d or add a d line to the instance");
}

SearchLimits limits(const Options& o) {
  SearchLimits lim;
  if (o.budget > 0) lim.node_budget = o.budget;
  return lim;
}

FamilyTag need_family(const Options& o) {
  auto fam = parse_family(o.family);
  if (!fam) throw UsageError("unknown family '" + o.family + "'");
  return *fam;
}

int run_decide(const Options& o) {
  InstanceFile inst = parse_instance(read_file(o.input));
  SearchLimits lim = limits(o);
  std::string witness_path = o.out.empty() ? o.input + ".witness.json" : o.out;
  if (o.alg == "brute") {
    Graph g = to_graph(inst);
    OdDecision dec = decide_od(g, need_d(o, inst), need_field(o, inst), lim);
    std::cout << (dec.yes ? "YES" : "NO") << "\n";
    if (dec.yes) write_file(witness_path, orthrep_json(*dec.witness));
  } else if (o.alg == "fpt") {
    Graph g = to_graph(inst);
    bool yes = fpt_decide_vc(g, inst.modulator, need_d(o, inst), need_field(o, inst), lim);
    std::cout << (yes ? "YES" : "NO") << "\n";
  } else {
    SubChooseInstance sc = to_subchoose(inst);
    OdDecision dec = decide_subchoose(sc, lim);
    std::cout << (dec.yes ? "YES" : "NO") << "\n";
    if (dec.yes) write_file(witness_path, orthrep_json(*dec.witness));
  }
  return 0;
}

int run_kernelize(const Options& o) {
  InstanceFile inst = parse_instance(read_file(o.input));
  Graph g = to_graph(inst);
  int d = need_d(o, inst);
  Graph kernel;
  std::vector<int> modulator;
  KernelReport report;
  KernelAlg alg;
  if (o.alg == "general") {
    alg = KernelAlg::General;
    GeneralKernel res = kernel_general(g, inst.modulator, d);
    kernel = res.kg.graph;
    modulator = res.kg.modulator;
    report = res.report;
  } else if (o.alg == "real") {
    alg = KernelAlg::Real;
    RealKernel res = kernel_real(g, inst.modulator, d);
    kernel = res.graph;
    modulator = res.modulator;
    report = res.report;
  } else if (o.alg == "hereditary") {
    alg = KernelAlg::Hereditary;
    HereditaryKernel res = kernel_hereditary(g, inst.modulator, d, need_family(o), o.g_of_d);
    kernel = res.graph;
    modulator = res.modulator;
    report = res.report;
  } else {
    throw UsageError("unknown kernel algorithm '" + o.alg + "'");
  }
  std::string base = o.out.empty() ? o.input : o.out;
  InstanceFile outf = from_graph(kernel);
  std::sort(modulator.begin(), modulator.end());
  outf.modulator = modulator;
  outf.d = d;
  write_file(base + ".kernel.gr", serialize_instance(outf));
  write_file(base + ".kernel.json", kernel_report_json(report) + "\n");
  std::cout << kernel_report_json(report) << "\n";
  if (o.k_check) {
    Equivalence eq = verify_kernel_equivalence(g, inst.modulator, d, need_field(o, inst), alg,
                                               need_family(o), o.g_of_d, limits(o));
    std::cout << "k-check: "
              << (eq == Equivalence::Equivalent
                      ? "equivalent"
                      : eq == Equivalence::Different ? "different" : "inconclusive")
              << "\n";
  }
  return 0;
}

int run_reduce(const Options& o) {
  InstanceFile inst = parse_instance(read_file(o.input));
  Graph g = to_graph(inst);
  ReductionOutput ro;
  if (o.variant == "vc") {
    int d = o.d > 0 ? o.d : inst.d.value_or(3);
    ro = col_to_od_vc(g, inst.modulator, d);
  } else if (o.variant == "path") {
    ro = col_to_od_path(g, inst.modulator);
  } else {
    throw UsageError("unknown reduction variant '" + o.variant + "'");
  }
  std::string base = o.out.empty() ? o.input : o.out;
  InstanceFile outf = from_graph(ro.graph);
  outf.modulator = ro.modulator;
  outf.d = ro.d;
  write_file(base + ".reduced.gr", serialize_instance(outf));
  std::cout << "n'=" << ro.graph.n() << " m'=" << ro.graph.m()
            << " |X'|=" << ro.modulator.size() << " d=" << ro.d << "\n";
  return 0;
}

int run_certify(const Options& o) {
  InstanceFile inst = parse_instance(read_file(o.input));
  SubChooseInstance sc = to_subchoose(inst);
  SearchLimits lim = limits(o);
  SubInstanceWitness w;
  if (o.kind == "split")
    w = split_no_certificate(sc, lim);
  else if (o.kind == "split-anisotropic")
    w = split_no_certificate_anisotropic(sc, lim);
  else if (o.kind == "cochordal")
    w = cochordal_no_certificate(sc, lim);
  else
    throw UsageError("unknown certificate kind '" + o.kind + "'");
  std::string path = o.out.empty() ? o.input + ".certificate.json" : o.out;
  write_file(path, witness_json(w));
  std::cout << witness_json(w) << "\n";
  return 0;
}

int run_verify(const Options& o) {
  std::vector<std::string> names =
      o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  bool all_ok = true;
  for (const auto& name : names) {
    SuiteResult r = run_suite(name, o.trials, o.seed);
    if (names.size() == 1)
      std::cout << r.summary() << "\n";
    else
      std::cout << r.name << ": " << r.summary() << "\n";
    for (const auto& f : r.failures) std::cout << "FAIL " << f << "\n";
    all_ok = all_ok && r.ok();
  }
  return all_ok ? 0 : 1;
}

int run_gen(const Options& o) {
  GenConfig cfg;
  cfg.n = o.n;
  cfg.k = o.k;
  cfg.family = need_family(o);
  cfg.density = o.density;
  cfg.seed = o.seed;
  cfg.with_subspaces = o.with_subspaces;
  if (o.with_subspaces) {
    cfg.d = o.d > 0 ? o.d : 3;
    auto f = FieldSpec::parse(o.field.empty() ? "gf2" : o.field);
    if (!f || !f->is_finite()) throw UsageError("--with-subspaces needs a finite --field");
    cfg.field = *f;
  }
  InstanceFile inst = gen_random(cfg);
  std::string text = serialize_instance(inst);
  if (o.out.empty())
    std::cout << text;
  else
    write_file(o.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"kernels, deciders, reductions and certificates for graph orthogonality dimension"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", o.input, "instance file")->required();
    cmd->add_option("--field", o.field, "gf<p> (p prime <= 251) or rational");
    cmd->add_option("--d", o.d, "target dimension");
    cmd->add_option("--seed", o.seed, "random seed");
    cmd->add_option("--budget", o.budget, "search node budget");
    cmd->add_option("--out", o.out, "output path");
  };

  CLI::App* decide = app.add_subcommand("decide", "decide od_F(G) <= d; prints YES or NO");
  add_common(decide, true);
  decide->add_option("--alg", o.alg, "brute | fpt | subchoose")
      ->check(CLI::IsMember({"brute", "fpt", "subchoose"}));

  CLI::App* kernelize = app.add_subcommand("kernelize", "shrink an instance, write graph + report");
  add_common(kernelize, true);
  kernelize->add_option("--alg", o.alg, "general | real | hereditary")->required()
      ->check(CLI::IsMember({"general", "real", "hereditary"}));
  kernelize->add_option("--family", o.family, "hereditary target family");
  kernelize->add_option("--g-of-d", o.g_of_d, "certificate size bound for the family");
  kernelize->add_flag("--k-check", o.k_check, "also cross-check the decision against the kernel");

  CLI::App* reduce = app.add_subcommand("reduce", "coloring-to-od transformation");
  add_common(reduce, true);
  reduce->add_option("--variant", o.variant, "vc | path")
      ->check(CLI::IsMember({"vc", "path"}));

  CLI::App* certify = app.add_subcommand("certify", "emit a NO sub-instance certificate");
  add_common(certify, true);
  certify->add_option("--kind", o.kind, "split | split-anisotropic | cochordal")
      ->check(CLI::IsMember({"split", "split-anisotropic", "cochordal"}));

  CLI::App* verify = app.add_subcommand("verify", "run a property suite; nonzero exit on failure");
  verify->add_option("--suite", o.suite, "suite name or 'all'")->required();
  verify->add_option("--trials", o.trials, "trial count (0 = suite default)");
  verify->add_option("--seed", o.seed, "random seed");

  CLI::App* gen = app.add_subcommand("gen", "write a random instance with a planted modulator");
  add_common(gen, false);
  gen->add_option("--n", o.n, "vertex count");
  gen->add_option("--k", o.k, "modulator size");
  gen->add_option("--family", o.family, "family of G minus X");
  gen->add_option("--density", o.density, "edge probability");
  gen->add_flag("--with-subspaces", o.with_subspaces, "attach random subspace lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(decide)) return run_decide(o);
    if (app.got_subcommand(kernelize)) return run_kernelize(o);
    if (app.got_subcommand(reduce)) return run_reduce(o);
    if (app.got_subcommand(certify)) return run_certify(o);
    if (app.got_subcommand(verify)) return run_verify(o);
    if (app.got_subcommand(gen)) return run_gen(o);
  } catch (const CapExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
