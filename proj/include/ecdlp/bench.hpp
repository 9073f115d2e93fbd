#pragma once

// Attack-cost measurement across curve sizes. Each record pairs the exact
// group-operation count of a recovery with the double-and-add cost of
// deriving the same public key, so the O(n) walk and the O(log n) keygen sit
// side by side in one row. Wall time is recorded but never part of any
// comparison; operation counts are the ground truth.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ecdlp/bigint.hpp"
#include "ecdlp/dlp.hpp"
#include "ecdlp/params.hpp"

namespace ecdlp {

struct CurveEntry {
  std::string id;
  DomainParams params;
};

struct SearchRange {
  std::uint64_t p_min = 0;
  std::uint64_t p_max = 0;
  bool prime_order = true;
};

struct BenchConfig {
  std::variant<std::vector<CurveEntry>, SearchRange> suite;
  std::uint64_t trials_per_curve = 1;
  std::uint64_t seed = 0;
  std::vector<AttackMethod> methods;
  std::uint64_t op_cap = kDefaultWalkCap;
};

struct BenchRecord {
  std::string curve_id;
  BigUint p;
  BigUint n;
  unsigned bits = 0;  // ceil(log2 n)
  BigUint d;
  AttackMethod method = AttackMethod::linear_walk;
  std::uint64_t group_ops = 0;
  std::uint64_t keygen_ops = 0;  // double-and-add cost for the same d
  double seconds = 0.0;
  std::string status = "ok";  // "ok" or the name of the solver error
};

struct FitLine {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // sum of squared deviations from the line
  std::size_t points = 0;
};

struct BitClassStat {
  unsigned bits = 0;
  std::size_t records = 0;
  double mean_walk_ops = 0.0;
  double mean_keygen_ops = 0.0;
  // mean_walk_ops ratio against the previous class, present when the
  // previous class is exactly one bit smaller
  std::optional<double> ratio_vs_prev;
};

struct ScalingReport {
  std::optional<FitLine> linear_walk_vs_d;
  std::optional<FitLine> bsgs_vs_sqrt_n;
  std::vector<BitClassStat> per_bit;
};

// Runs every (curve, trial, method) cell in deterministic order. The keypair
// of trial t comes from mix_trial_seed(seed, curve_id, t). Solver errors do
// not stop the suite; they become rows with a failure status.
std::vector<BenchRecord> run_suite(const BenchConfig& config);

// Least squares of group_ops against d for the walk (computed over exact
// integer sums, so the contract group_ops = d - 1 yields slope 1,
// intercept -1, residual 0 with no rounding slack) and against sqrt(n) for
// bsgs, plus the per-bit mean table. Failed rows are excluded. A method is
// fitted when it has at least two distinct abscissae (d for the walk, n for
// bsgs); single-curve bsgs records keep their bound checks but get no line.
// Throws InsufficientData when nothing is fittable.
ScalingReport fit_scaling(const std::vector<BenchRecord>& records);

enum class ReportFormat { csv, structured };

// csv: header `curve_id,p,n,bits,d,method,group_ops,keygen_ops,seconds` and
// one row per successful record, in record order. structured: JSON carrying
// every record (including failures, with status) plus the scaling report.
std::string emit_report(const std::vector<BenchRecord>& records,
                        const ScalingReport& report, ReportFormat format);

// Just the scaling section, as printed by `report`.
std::string scaling_to_json(const ScalingReport& report);

BenchConfig config_from_json(std::string_view text);
std::vector<BenchRecord> records_from_csv(std::string_view text);

}  // namespace ecdlp
