#include "ginv/theorem_suite.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>

#include "ginv/error.hpp"
#include "ginv/law_parser.hpp"

namespace ginv {

const TheoremEntry& find_theorem(std::string_view id, const std::vector<TheoremEntry>& catalog) {
  for (const auto& e : catalog)
    if (e.id == id) return e;
  throw Error(ErrorCode::UnknownTheorem, "no catalog entry '" + std::string(id) + "'");
}

SuiteCarrier SuiteCarrier::parse(std::string_view spec) {
  if (spec == "matrices") {
    SuiteCarrier c;
    c.label_ = "matrices";
    return c;
  }
  return ring(FiniteRing::build(spec));
}

SuiteCarrier SuiteCarrier::ring(FiniteRing r) {
  SuiteCarrier c;
  c.label_ = r.label();
  c.ring_ = std::make_shared<RingState>(std::move(r));
  return c;
}

const std::vector<std::string>& default_roster() {
  static const std::vector<std::string> roster{"Zn:4", "Zn:5", "Zn:6", "Zn:8", "Zn:12", "M2:Z2"};
  return roster;
}

bool Dashboard::any_counterexample() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.counterexample_count > 0; });
}

DashboardEntry run_theorem(const TheoremEntry& entry, const SuiteCarrier& carrier, const SuiteOptions& options) {
  DashboardEntry out;
  out.id = entry.id;
  out.carrier = carrier.label();
  std::set<std::string> flags;
  bool any_pass = false;
  bool any_fail = false;
  for (const auto& text : entry.laws) {
    const Law law = parse_law(text);
    VerificationReport r = carrier.is_ring() ? evaluate_law(law, carrier.oracle(), options.ring)
                                             : evaluate_law(law, carrier.matrices(), options.matrix);
    out.bindings_checked += r.bindings_checked;
    out.counterexample_count += r.counterexample_count;
    out.budget_exceeded = out.budget_exceeded || r.budget_exceeded;
    for (const auto& b : r.counterexamples) {
      auto j = binding_to_json(b);
      j["law"] = r.law;
      out.counterexamples.push_back(std::move(j));
    }
    flags.insert(r.flags.begin(), r.flags.end());
    any_pass = any_pass || r.status == ReportStatus::Pass;
    any_fail = any_fail || r.status == ReportStatus::Fail;
    out.reports.push_back(std::move(r));
  }
  out.status = any_fail ? ReportStatus::Fail : any_pass ? ReportStatus::Pass : ReportStatus::Vacuous;
  out.flags.assign(flags.begin(), flags.end());
  return out;
}

DashboardEntry run_theorem(std::string_view id, const SuiteCarrier& carrier, const SuiteOptions& options) {
  return run_theorem(find_theorem(id), carrier, options);
}

Dashboard run_all(const std::vector<SuiteCarrier>& carriers, const SuiteOptions& options,
                  const std::vector<TheoremEntry>& catalog) {
  Dashboard d;
  d.seed = options.matrix.seed;
  d.options = options;
  for (const auto& c : carriers) d.carriers.push_back(c.label());

  std::vector<const TheoremEntry*> selected;
  if (options.ids.empty()) {
    for (const auto& e : catalog) selected.push_back(&e);
  } else {
    for (const auto& id : options.ids) selected.push_back(&find_theorem(id, catalog));
  }

  for (const auto& c : carriers)
    if (c.is_ring()) c.oracle().prefetch_all();

  // parallelism lives at the entry level; each job evaluates serially
  SuiteOptions inner = options;
  inner.ring.parallel = false;
  inner.matrix.parallel = false;

  const std::size_t jobs = selected.size() * carriers.size();
  d.entries.resize(jobs);
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t j = 0; j < jobs; ++j) {
    try {
      d.entries[j] = run_theorem(*selected[j / carriers.size()], carriers[j % carriers.size()], inner);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return d;
}

nlohmann::json dashboard_to_json(const Dashboard& d, bool include_reports) {
  nlohmann::json j;
  j["tool"] = "ginv";
  j["version"] = std::string(kToolVersion);
  j["carriers"] = d.carriers;
  j["seed"] = d.seed;
  j["budget"] = {
      {"ring_mode", d.options.ring.mode == EvalMode::Exhaustive ? "exhaustive" : "sampled"},
      {"samples", d.options.matrix.samples},
      {"max_attempts", d.options.matrix.max_attempts},
      {"counterexample_limit", d.options.matrix.counterexample_limit},
  };
  auto entries = nlohmann::json::array();
  for (const auto& e : d.entries) {
    nlohmann::json je{
        {"id", e.id},
        {"carrier", e.carrier},
        {"status", std::string(status_name(e.status))},
        {"bindings_checked", e.bindings_checked},
        {"counterexample_count", e.counterexample_count},
        {"counterexamples", e.counterexamples},
        {"flags", e.flags},
        {"budget_exceeded", e.budget_exceeded},
    };
    if (include_reports) {
      auto reps = nlohmann::json::array();
      for (const auto& r : e.reports) reps.push_back(report_to_json(r));
      je["reports"] = reps;
    }
    entries.push_back(std::move(je));
  }
  j["entries"] = entries;
  j["any_counterexample"] = d.any_counterexample();
  return j;
}

}  // namespace ginv
