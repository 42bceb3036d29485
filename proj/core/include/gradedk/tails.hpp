#pragma once

#include "gradedk/invariants.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gradedk {

/// Attachment points for a tail sweep. Tail edges always carry parity 0.
class TailSweepConfig {
 public:
  // Throws InputError if max_length == 0 or a point is repeated.
  TailSweepConfig(std::vector<std::string> attachment_points, std::size_t max_length);

  const std::vector<std::string>& attachment_points() const { return points_; }
  std::size_t max_length() const { return max_length_; }

 private:
  std::vector<std::string> points_;
  std::size_t max_length_;
};

struct TailPointOutcome {
  std::string at;
  std::optional<TailInvarianceReport> report;
  std::string error;  // set when the point violated a precondition

  bool passed() const { return report && report->passed(); }
};

struct TailSweepResult {
  std::vector<TailPointOutcome> points;  // in configuration order
  bool passed = false;
};

/// Runs tail_invariance_report at every attachment point. A failing
/// precondition is recorded against its point and does not stop the others.
TailSweepResult sweep(const Graph& g, const std::vector<std::string>& relative_set,
                      const TailSweepConfig& cfg);

}  // namespace gradedk
