#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdisk {

/// Outcome of one inequality or identity check.
///
/// For "lhs ≤ rhs" checks slack = rhs − lhs; for "lhs ≥ rhs" checks
/// slack = lhs − rhs.  passed ⇔ slack ≥ −tolerance, unless the record is
/// inconclusive, in which case passed is false and `inconclusive` is set.
struct VerdictRecord {
  std::string check_name;
  std::string map_id;
  double r = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool inconclusive = false;
  std::size_t resolution = 0;

  std::string family;
  std::string params;
  std::string method;
  double error_indicator = 0.0;
  double wall_time_ms = 0.0;
};

VerdictRecord le_verdict(std::string check_name, double lhs, double rhs, double tolerance);
VerdictRecord ge_verdict(std::string check_name, double lhs, double rhs, double tolerance);

/// The input does not satisfy a theorem's hypothesis (e.g. a step map passed
/// to the area-contraction check).  Not a failed verdict.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical precondition of a check does not hold (e.g. f(0) ≠ 0 for the
/// Schwarz bound).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace hdisk
