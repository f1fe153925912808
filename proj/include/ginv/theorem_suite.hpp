#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/finite_ring.hpp"
#include "ginv/law_eval.hpp"
#include "ginv/ring_oracle.hpp"

namespace ginv {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// One catalog result: a conjunction of laws that must all hold.
struct TheoremEntry {
  std::string id;
  std::string summary;
  std::vector<std::string> laws;
};

const std::vector<TheoremEntry>& theorem_catalog();
/// Throws Error(UnknownTheorem).
const TheoremEntry& find_theorem(std::string_view id, const std::vector<TheoremEntry>& catalog = theorem_catalog());

/// A finite ring with its oracle, or the matrix sampler.
class SuiteCarrier {
 public:
  /// "matrices" or a ring spec such as "Zn:6" / "M2:Z2".
  static SuiteCarrier parse(std::string_view spec);
  static SuiteCarrier ring(FiniteRing ring);

  const std::string& label() const { return label_; }
  bool is_ring() const { return static_cast<bool>(ring_); }
  const RingOracle& oracle() const { return ring_->oracle; }
  const MatrixCarrier& matrices() const { return matrices_; }

 private:
  struct RingState {
    explicit RingState(FiniteRing r) : ring(std::move(r)), oracle(ring) {}
    FiniteRing ring;
    RingOracle oracle;
  };
  std::string label_;
  std::shared_ptr<RingState> ring_;
  MatrixCarrier matrices_;
};

/// Rings CI runs exhaustively.
const std::vector<std::string>& default_roster();

struct SuiteOptions {
  /// Applied on rings (exhaustive by default).
  EvalOptions ring{};
  /// Applied on matrices (always sampled).
  EvalOptions matrix{EvalMode::Sampled, 0, 200, 4000, 5, true};
  /// Empty means every catalog id.
  std::vector<std::string> ids;
};

struct DashboardEntry {
  std::string id;
  std::string carrier;
  ReportStatus status = ReportStatus::Vacuous;
  std::uint64_t bindings_checked = 0;
  std::uint64_t counterexample_count = 0;
  /// Each counterexample carries the law it refutes.
  nlohmann::json counterexamples = nlohmann::json::array();
  std::vector<std::string> flags;
  bool budget_exceeded = false;
  std::vector<VerificationReport> reports;
};

struct Dashboard {
  std::vector<std::string> carriers;
  std::uint64_t seed = 0;
  SuiteOptions options;
  std::vector<DashboardEntry> entries;

  bool any_counterexample() const;
};

DashboardEntry run_theorem(const TheoremEntry& entry, const SuiteCarrier& carrier, const SuiteOptions& options);
DashboardEntry run_theorem(std::string_view id, const SuiteCarrier& carrier, const SuiteOptions& options);

/// Every selected entry on every carrier. Entries run in parallel; the
/// dashboard order is catalog order, then carrier order.
Dashboard run_all(const std::vector<SuiteCarrier>& carriers, const SuiteOptions& options,
                  const std::vector<TheoremEntry>& catalog = theorem_catalog());

nlohmann::json dashboard_to_json(const Dashboard& d, bool include_reports = false);

}  // namespace ginv
