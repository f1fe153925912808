// ginv: compute / oracle / law / probe / suite front end.
//
// Exit codes: 0 success, 1 counterexample found, 2 input error,
// 3 the requested inverse does not exist (empty witness set).

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ginv/error.hpp"
#include "ginv/finite_ring.hpp"
#include "ginv/inverses.hpp"
#include "ginv/json_io.hpp"
#include "ginv/law_eval.hpp"
#include "ginv/law_parser.hpp"
#include "ginv/ring_oracle.hpp"
#include "ginv/theorem_suite.hpp"

using namespace ginv;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kCounterexample = 1, kInputError = 2, kMissing = 3 };

struct Config {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t budget = 5;
  std::size_t samples = 200;
  std::size_t max_attempts = 0;

  std::string input;
  std::string kind;
  std::string witness;

  std::string ring;
  std::string ring_file;
  std::string element;

  bool matrices = false;
  std::string mode;

  std::string rings;
  std::string ids = "all";
  bool reports = false;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Config& cfg, const json& j, const std::string& text) {
  const std::string body = cfg.format == "text" ? text : j.dump(2) + "\n";
  if (cfg.output.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + cfg.output);
  out << body;
}

json provenance(const Config& cfg) {
  return {{"tool", "ginv"}, {"version", std::string(kToolVersion)}, {"seed", cfg.seed}};
}

json budget_json(const Config& cfg) {
  return {{"counterexample_limit", cfg.budget}, {"samples", cfg.samples}, {"max_attempts", cfg.max_attempts}};
}

InverseKind kind_arg(const std::string& name) {
  const auto k = parse_kind(name);
  if (!k) throw InputError("unknown inverse kind '" + name + "'");
  return *k;
}

FiniteRing load_ring(const Config& cfg) {
  if (!cfg.ring_file.empty()) return FiniteRing::from_json(read_json(cfg.ring_file));
  if (cfg.ring.empty()) throw InputError("--ring or --ring-file is required");
  return FiniteRing::build(cfg.ring);
}

EvalOptions eval_options(const Config& cfg, EvalMode mode) {
  EvalOptions o;
  o.mode = mode;
  o.seed = cfg.seed;
  o.samples = cfg.samples;
  o.max_attempts = cfg.max_attempts;
  o.counterexample_limit = cfg.budget;
  return o;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream s;
  s << r.law << "\n  carrier " << r.carrier << ", " << r.mode << ": " << status_name(r.status) << ", "
    << r.bindings_checked << " bindings checked, " << r.counterexample_count << " counterexamples";
  if (r.budget_exceeded) s << " (attempt budget exhausted)";
  s << "\n";
  for (const auto& f : r.flags) s << "  flag: " << f << "\n";
  for (const auto& w : r.warnings) s << "  warning: " << w << "\n";
  for (const auto& b : r.counterexamples) {
    s << "  counterexample:";
    for (const auto& [k, v] : b.values) s << " " << k << "=" << v;
    for (const auto& [k, v] : b.witnesses) s << " " << k << "=" << v;
    if (!b.note.empty()) s << " (" << b.note << ")";
    s << "\n";
  }
  return s.str();
}

int cmd_compute(const Config& cfg) {
  const Matrix a = matrix_from_json(read_json(cfg.input));
  const InverseKind kind = kind_arg(cfg.kind);
  std::optional<Matrix> w;
  if (!cfg.witness.empty()) w = matrix_from_json(read_json(cfg.witness));
  InverseResult r;
  try {
    r = compute_inverse(kind, a, w ? &*w : nullptr);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IndexTooLarge) throw;
    json j = provenance(cfg);
    j["kind"] = std::string(kind_tag(kind));
    j["exists"] = false;
    j["reason"] = e.what();
    emit(cfg, j, std::string(kind_short_name(kind)) + ": does not exist (" + e.what() + ")\n");
    return kMissing;
  }
  json j = provenance(cfg);
  j.update(inverse_result_to_json(r));
  emit(cfg, j,
       std::string(kind_short_name(kind)) + " = " + r.value.to_string() + "\nk = " + std::to_string(r.k_used) +
           "\nverified: " + (r.verified ? "yes" : "no") + "\n");
  if (cfg.format == "json") std::cerr << "verified: " << (r.verified ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_oracle(const Config& cfg) {
  const FiniteRing ring = load_ring(cfg);
  const InverseKind kind = kind_arg(cfg.kind);
  const Code a = ring.parse_element(cfg.element);
  const WitnessSet w = witness_set(ring, a, kind);
  json j = provenance(cfg);
  j["ring"] = ring.label();
  j.update(witness_set_to_json(w));
  json named = json::array();
  for (Code x : w.witnesses) named.push_back(ring.describe(x));
  j["element_text"] = ring.describe(a);
  j["witnesses_text"] = named;
  std::string text = std::string(kind_short_name(kind)) + "(" + ring.describe(a) + ") in " + ring.label() + " = {";
  for (std::size_t i = 0; i < named.size(); ++i) text += (i ? ", " : "") + named[i].get<std::string>();
  text += "}\n";
  emit(cfg, j, text);
  return w.empty() ? kMissing : kOk;
}

int finish_report(const Config& cfg, const VerificationReport& r, const std::string& law_file) {
  json j = provenance(cfg);
  j["law_file"] = law_file;
  j["budget"] = budget_json(cfg);
  j["report"] = report_to_json(r);
  emit(cfg, j, report_text(r));
  return r.counterexample_count > 0 ? kCounterexample : kOk;
}

int cmd_law(const Config& cfg) {
  const Law law = parse_law(read_file(cfg.input));
  if (cfg.matrices) {
    if (!cfg.mode.empty() && cfg.mode != "sampled") throw InputError("matrices support --mode sampled only");
    const VerificationReport r = evaluate_law(law, MatrixCarrier{}, eval_options(cfg, EvalMode::Sampled));
    return finish_report(cfg, r, cfg.input);
  }
  const FiniteRing ring = load_ring(cfg);
  const RingOracle oracle(ring);
  const EvalMode mode = cfg.mode == "sampled" ? EvalMode::Sampled : EvalMode::Exhaustive;
  return finish_report(cfg, evaluate_law(law, oracle, eval_options(cfg, mode)), cfg.input);
}

int cmd_probe(const Config& cfg) {
  const Law law = parse_law(read_file(cfg.input));
  const FiniteRing ring = load_ring(cfg);
  const RingOracle oracle(ring);
  const VerificationReport r = necessity_probe(law, oracle, eval_options(cfg, EvalMode::Exhaustive));
  json j = provenance(cfg);
  j["law_file"] = cfg.input;
  j["budget"] = budget_json(cfg);
  j["report"] = report_to_json(r);
  emit(cfg, j, report_text(r));
  return kOk;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_suite(const Config& cfg) {
  std::vector<SuiteCarrier> carriers;
  const auto specs = cfg.rings.empty() ? default_roster() : split(cfg.rings);
  for (const auto& s : specs) carriers.push_back(SuiteCarrier::parse(s));
  if (cfg.matrices) carriers.push_back(SuiteCarrier::parse("matrices"));
  SuiteOptions o;
  o.ring.counterexample_limit = cfg.budget;
  o.matrix = eval_options(cfg, EvalMode::Sampled);
  if (o.matrix.max_attempts == 0) o.matrix.max_attempts = SuiteOptions{}.matrix.max_attempts;
  if (cfg.ids != "all") o.ids = split(cfg.ids);
  const Dashboard d = run_all(carriers, o);
  std::ostringstream text;
  for (const auto& e : d.entries) {
    text << e.id << " [" << e.carrier << "] " << status_name(e.status) << ", " << e.bindings_checked << " bindings, "
         << e.counterexample_count << " counterexamples";
    for (const auto& f : e.flags) text << " (" << f << ")";
    if (e.budget_exceeded) text << " (attempt budget exhausted)";
    text << "\n";
  }
  text << (d.any_counterexample() ? "counterexamples found\n" : "all entries hold\n");
  emit(cfg, dashboard_to_json(d, cfg.reports), text.str());
  return d.any_counterexample() ? kCounterexample : kOk;
}

void apply_thread_cap() {
  const char* env = std::getenv("GINV_THREADS");
  if (!env) return;
  const int n = std::atoi(env);
  if (n > 0) omp_set_num_threads(std::min(n, omp_get_max_threads()));
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_cap();
  Config cfg;
  CLI::App app{"Exact generalized inverses, finite-ring oracles and law checking"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", cfg.seed, "Seed for sampling (default 0)");
  };
  auto ring_opts = [&](CLI::App* sub) {
    sub->add_option("--ring", cfg.ring, "Ring spec, e.g. Zn:6 or M2:Z2");
    sub->add_option("--ring-file", cfg.ring_file, "Custom ring table (JSON)");
  };

  auto* compute = app.add_subcommand("compute", "Compute a generalized inverse of a matrix");
  compute->add_option("matrix", cfg.input, "Matrix JSON file")->required();
  compute->add_option("--kind", cfg.kind, "mp, d, grp, core, pc, rpc, dmp, wd, wdmp, inner")->required();
  compute->add_option("--witness", cfg.witness, "WD witness for wdmp (matrix JSON)");
  common(compute);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive witness set of an element of a finite ring");
  ring_opts(oracle);
  oracle->add_option("--element", cfg.element, "Element, e.g. 2 or [[0,1],[0,0]]")->required();
  oracle->add_option("--kind", cfg.kind, "Inverse kind")->required();
  common(oracle);

  auto* law = app.add_subcommand("law", "Check a law on a finite ring or on random matrices");
  law->add_option("file", cfg.input, "Law file")->required();
  ring_opts(law);
  law->add_flag("--matrices", cfg.matrices, "Sample exact matrices instead of a ring");
  law->add_option("--mode", cfg.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  law->add_option("--budget", cfg.budget, "Counterexamples kept in the report (all are counted)");
  law->add_option("--samples", cfg.samples, "Sampled mode: assignments satisfying the hypotheses");
  law->add_option("--max-attempts", cfg.max_attempts, "Sampled mode: attempt cap (0 means 100 x samples)");
  common(law);

  auto* probe = app.add_subcommand("probe", "Bindings where the conclusion holds but a hypothesis fails");
  probe->add_option("file", cfg.input, "Law file")->required();
  ring_opts(probe);
  probe->add_option("--budget", cfg.budget, "Bindings kept in the report");
  common(probe);

  auto* suite = app.add_subcommand("suite", "Run the theorem catalog");
  suite->add_option("--rings", cfg.rings, "Comma separated ring specs (default roster when omitted)");
  suite->add_flag("--matrices", cfg.matrices, "Also run every entry on sampled matrices");
  suite->add_option("--ids", cfg.ids, "Comma separated ids, or all");
  suite->add_option("--budget", cfg.budget, "Counterexamples kept per law");
  suite->add_option("--samples", cfg.samples, "Matrix samples per law");
  suite->add_option("--max-attempts", cfg.max_attempts, "Matrix attempt cap per law");
  suite->add_flag("--reports", cfg.reports, "Embed per-law reports");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0; every usage error maps to 2
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*compute) return cmd_compute(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*law) return cmd_law(cfg);
    if (*probe) return cmd_probe(cfg);
    if (*suite) return cmd_suite(cfg);
  } catch (const InputError& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "ginv: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
