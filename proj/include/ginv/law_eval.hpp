#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ginv/law_ast.hpp"
#include "ginv/matrix.hpp"
#include "ginv/ring_oracle.hpp"

namespace ginv {

enum class EvalMode { Exhaustive, Sampled };

struct EvalOptions {
  EvalMode mode = EvalMode::Exhaustive;
  std::uint64_t seed = 0;
  /// Sampled mode: variable assignments with at least one binding that
  /// satisfies every hypothesis.
  std::size_t samples = 200;
  /// Sampled mode: give up after this many assignments (0 means 100 x samples).
  std::size_t max_attempts = 0;
  /// Counterexamples kept in the report; all of them are counted.
  std::size_t counterexample_limit = 5;
  /// false runs the serial reference path.
  bool parallel = true;
};

enum class ReportStatus {
  Pass,
  Fail,
  Vacuous,       // no binding satisfied the hypotheses
  NotNecessary,  // probe: conclusion held somewhere a hypothesis failed
  NoWitness,     // probe: nothing of the kind found
};

std::string_view status_name(ReportStatus s);

/// One full binding: variable values and every chosen witness, keyed by the
/// printed decorated term.
struct BindingRecord {
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<std::pair<std::string, std::string>> witnesses;
  std::string note;
};

struct VerificationReport {
  std::string law;
  std::string carrier;
  std::string mode;  // exhaustive | sampled | probe
  ReportStatus status = ReportStatus::Vacuous;
  std::uint64_t bindings_total = 0;    // variable assignments visited
  std::uint64_t bindings_checked = 0;  // bindings that reached the conclusion
  std::uint64_t counterexample_count = 0;
  std::vector<BindingRecord> counterexamples;
  std::vector<std::string> flags;
  std::vector<std::string> warnings;
  bool budget_exceeded = false;
};

nlohmann::json binding_to_json(const BindingRecord& b);
nlohmann::json report_to_json(const VerificationReport& r);

/// A finite ring seen through its oracle.
class RingCarrier {
 public:
  using Value = Code;
  using Algebra = FiniteRing;

  explicit RingCarrier(const RingOracle& oracle) : oracle_(oracle) {}

  const FiniteRing& algebra() const { return oracle_.ring(); }
  const RingOracle& oracle() const { return oracle_; }
  std::string label() const { return oracle_.ring().label(); }
  bool proper() const { return oracle_.proper(); }

  const std::vector<Code>& witnesses(Code v, InverseKind kind) const { return oracle_.witnesses(kind, v).witnesses; }
  bool member(Code x, InverseKind kind, Code v) const { return oracle_.witnesses(kind, v).contains(x); }
  unsigned index(Code v) const { return oracle_.index(v); }
  bool nilpotent(Code v) const { return oracle_.nilpotent(v); }
  bool hirano(Code v) const { return oracle_.hirano(v); }
  bool included(SetKind s, Code a, Code b) const;
  std::string describe(Code v) const { return oracle_.ring().describe(v); }

 private:
  const RingOracle& oracle_;
};

/// Square matrices over Q or Q(i). Unique kinds have at most one witness;
/// WD witnesses are the canonical one plus two family samples, and WDMP
/// witnesses are w·a·a† for each of those.
class MatrixCarrier {
 public:
  using Value = Matrix;

  struct Config {
    std::size_t max_dim = 5;
    /// Share of samples drawn over Q(i), in percent.
    unsigned complex_percent = 25;
    std::size_t wd_family = 2;
  };

  MatrixCarrier() = default;
  explicit MatrixCarrier(Config cfg) : cfg_(cfg) {}

  const Config& config() const { return cfg_; }
  std::string label() const { return "matrices"; }
  bool proper() const { return true; }

  std::vector<Matrix> witnesses(const Matrix& v, InverseKind kind) const;
  bool member(const Matrix& x, InverseKind kind, const Matrix& v) const;
  unsigned index(const Matrix& v) const;
  bool nilpotent(const Matrix& v) const;
  bool hirano(const Matrix& v) const;
  bool included(SetKind s, const Matrix& a, const Matrix& b) const;
  std::string describe(const Matrix& v) const { return v.to_string(); }

  /// Structured random assignment of `vars` matrices of one dimension:
  /// independent, commuting polynomials in one matrix, orthogonal block
  /// splits, structured kinds, or commuting diagonalizable families.
  /// Returns the dimension used.
  std::size_t sample(std::uint64_t seed, std::size_t vars, std::vector<Matrix>& out) const;

 private:
  Config cfg_;
};

/// Checks a law over a finite ring, exhaustively or by sampling.
VerificationReport evaluate_law(const Law& law, const RingOracle& ring, const EvalOptions& options = {});
/// Checks a law on random matrices; only sampled mode applies
/// (Error(InapplicableCarrier) otherwise).
VerificationReport evaluate_law(const Law& law, const MatrixCarrier& matrices, const EvalOptions& options);

/// Exhaustive search for bindings where the conclusion holds and at least
/// one hypothesis fails. Error(InvalidArgument) for laws without hypotheses.
VerificationReport necessity_probe(const Law& law, const RingOracle& ring, const EvalOptions& options = {});

}  // namespace ginv
