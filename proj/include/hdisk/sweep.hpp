#pragma once

/// Family specs, map corpora and the parallel verification sweeps behind the
/// command-line tool.

#include "hdisk/area.hpp"
#include "hdisk/circle_maps.hpp"
#include "hdisk/poisson.hpp"
#include "hdisk/verdict.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hdisk {

/// Malformed command-line input.  Maps to exit code 64.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One concrete map of a family.  Coefficient-only families (the shear) have
/// no boundary map.
struct MapInstance {
  std::string map_id;
  std::string family;
  std::string params;
  std::optional<BoundaryMap> map;
  std::optional<ExactFamily> exact;

  /// Exact family coefficients when known, otherwise fourier_from_boundary.
  FourierCoeffs coefficients(int order) const;
};

/// Knot count used for random families.
inline constexpr std::size_t kRandomKnots = 16;

/// Expands a family spec:
///   identity | rotation:PHI | mobius:A | mobius:RE:IM | shear:C | shear:RE:IM
///   random:SEEDS:ROUGHNESS | symrandom:SEEDS:ROUGHNESS:FOLDS | step:N
/// SEEDS is a single integer, a range LO..HI or a comma list joined by '+'.
/// step:N has jumps at π/N + 2πk/N with values at the arc centres.
/// Throws UsageError.
std::vector<MapInstance> expand_family(std::string_view spec);

/// Mollified copy with width 2π/divisions; map_id gains "-mD".
MapInstance mollified(const MapInstance& inst, int divisions);

std::vector<double> parse_real_list(std::string_view text);
std::vector<std::uint64_t> parse_seed_range(std::string_view text);

using VerdictTask = std::function<std::vector<VerdictRecord>()>;

/// Runs tasks on up to `threads` workers (0 = hardware concurrency), stamps
/// wall_time_ms and returns the records stably sorted by
/// (check_name, map_id, r).
std::vector<VerdictRecord> run_tasks(const std::vector<VerdictTask>& tasks, unsigned threads);

struct VerdictSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
};
VerdictSummary summarize(const std::vector<VerdictRecord>& records);
/// 0 all passed, 1 any failure, 2 inconclusive without failures.
int exit_code(const VerdictSummary& summary);

struct VerifyConfig {
  /// Empty selects the suite's default corpus.
  std::vector<std::string> families;
  /// Empty selects the suite's default radii.
  std::vector<double> radii;
  /// Mollification divisions (width 2π/d); empty selects the default.
  std::vector<int> mollify;
  AreaMethod method = AreaMethod::KernelFFT;
  std::size_t resolution = 0;
  /// Relative tolerance for the area-contraction check.
  double theorem1_rel_tol = 1e-6;
  unsigned threads = 0;
  std::uint64_t seed = 20091102;
};

std::vector<VerdictTask> theorem1_tasks(const VerifyConfig& config);
std::vector<VerdictTask> equality_tasks(const VerifyConfig& config);
std::vector<VerdictTask> corollary_tasks(const VerifyConfig& config);
std::vector<VerdictTask> schwarz_tasks(const VerifyConfig& config);
std::vector<VerdictTask> convexity_tasks(const VerifyConfig& config);
std::vector<VerdictTask> proof_tasks(const VerifyConfig& config);

/// theorem1 | equality | corollary | schwarz | convexity | proof | all.
std::vector<VerdictRecord> run_suite(std::string_view suite, const VerifyConfig& config);

}  // namespace hdisk
