#ifndef LRD_BENCH_HPP
#define LRD_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lrd/bounds.hpp"
#include "lrd/estimators.hpp"
#include "lrd/matrix.hpp"
#include "lrd/tensor3.hpp"

namespace lrd::bench {

/// ‖estimate - truth‖_F / ‖truth‖_F. Throws on zero-norm truth.
double rel_err(const Matrix& estimate, const Matrix& truth);
double rel_err(const tensor::Tensor3& estimate, const tensor::Tensor3& truth);

enum class ExperimentKind { kMatrix, kTensor, kCovariance };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& s);

/// One synthetic configuration. dims are (m,n) for matrices, (p,s) for
/// tensors and (n,N) for covariance runs. kappa = 0 requests noiseless
/// replicates.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kTensor;
  std::int64_t dim1 = 0;
  std::int64_t dim2 = 0;
  double lambda = 10.0;
  std::vector<std::int64_t> ranks;
  int replicates = 50;
  std::uint64_t seed = 0;
  double beta = 0.8;
  double kappa = 1.0;
};

void to_json(nlohmann::json& j, const ExperimentSpec& spec);
void from_json(const nlohmann::json& j, ExperimentSpec& spec);

/// Aggregated Monte Carlo result for one (spec, rank) row.
struct SummaryRow {
  ExperimentKind kind;
  double lambda;
  std::int64_t dim1;
  std::int64_t dim2;
  std::int64_t rank;
  int n_replicates;
  double mean_relerr;
  double se_relerr;  ///< Bessel-corrected stddev / sqrt(R); 0 when R = 1
  std::uint64_t seed;
  double wall_time_seconds;
  std::vector<double> replicate_errors;        ///< in replicate order
  std::optional<bounds::BoundReport> bounds;   ///< filled when requested
};

struct RunOptions {
  int parallelism = 1;
  bool with_bounds = false;
  std::int64_t entry_budget = 16'000'000;  ///< largest dense object allowed
};

/// Runs every (spec, rank, replicate) cell. Per-replicate seeds derive from
/// (spec seed, row id, replicate index) with separate signal and noise
/// streams, so results are independent of the parallelism degree.
std::vector<SummaryRow> run_grid(const std::vector<ExperimentSpec>& specs,
                                 const RunOptions& options);

/// Pass iff |mean_ours - mean_paper| ≤ max(se_multiplier·paper_se, abs_floor,
/// rel_fraction·mean_paper).
struct TolerancePolicy {
  double se_multiplier = 5.0;
  double abs_floor = 0.002;
  double rel_fraction = 0.05;

  double tolerance(double paper_mean, double paper_se) const;
};

void to_json(nlohmann::json& j, const TolerancePolicy& policy);
void from_json(const nlohmann::json& j, TolerancePolicy& policy);

struct ComparisonRow {
  SummaryRow row;
  double paper_mean;
  double paper_se;
  double abs_diff;
  bool pass;
};

struct Table2Result {
  std::vector<ComparisonRow> rows;
  int n_pass = 0;
  bool all_pass = false;
  /// True when every cell misses on the same side — a systematic deviation
  /// rather than Monte Carlo scatter.
  bool systematic_deviation = false;
};

enum class Table2Panel { kMatrix, kTensor, kBoth };

/// Runs the published grid (Table 1 dims and ranks, λ ∈ {10,50}, R = 50,
/// matrix sizes m = 5p, n = s) and compares each cell against the published
/// means.
Table2Result reproduce_table2(Table2Panel panel, const TolerancePolicy& policy,
                              const RunOptions& options, std::uint64_t base_seed);

/// Count of (dims, rank) pairs where the λ=50 mean fails to improve on the
/// λ=10 mean.
int lambda_monotonicity_violations(const std::vector<ComparisonRow>& rows);

struct SweepRow {
  std::int64_t rank;
  double mean_relerr;
  double variance_term;
  double bias_lower;
  double bias_upper;
};

/// Rank sweep with theoretical components per rank; spec.ranks lists the
/// ranks to visit.
std::vector<SweepRow> bias_variance_sweep(const ExperimentSpec& spec, const RunOptions& options);

struct DenoiseReport {
  tensor::Dims3 dims;
  tensor::Dims3 ranks;
  estimators::BiasBracket input_bias;
  double wall_time_seconds;
  std::string input_path;
  std::string output_path;
};

void to_json(nlohmann::json& j, const DenoiseReport& report);

/// Reads a DT3 v1 tensor, runs one-step HOSVD at the given ranks, writes the
/// estimate in DT3 v1 next to a JSON sidecar.
DenoiseReport denoise_file(const std::string& input_path, estimators::TargetRanks ranks,
                           const std::string& output_path);

/// CSV schema: kind,lambda,dim1,dim2,rank,replicates,mean_relerr,se_relerr,
/// seed,wall_time_s (header always emitted, floats with 6 significant
/// digits). with_bounds appends variance_term,bias_lower,bias_upper,
/// snr_margin.
void write_csv(std::ostream& out, const std::vector<SummaryRow>& rows, bool with_bounds);
void write_json(std::ostream& out, const std::vector<SummaryRow>& rows);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
void write_comparison_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_comparison_json(std::ostream& out, const Table2Result& result);

}  // namespace lrd::bench

#endif  // LRD_BENCH_HPP
