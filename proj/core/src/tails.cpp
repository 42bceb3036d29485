#include "gradedk/tails.hpp"

#include <future>
#include <unordered_set>

namespace gradedk {

TailSweepConfig::TailSweepConfig(std::vector<std::string> attachment_points,
                                 std::size_t max_length)
    : points_(std::move(attachment_points)), max_length_(max_length) {
  if (max_length_ < 1) throw InputError("max_length must be at least 1");
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw InputError("attachment point '" + p + "' repeated", p);
  }
}

TailSweepResult sweep(const Graph& g, const std::vector<std::string>& relative_set,
                      const TailSweepConfig& cfg) {
  std::vector<std::future<TailInvarianceReport>> pending;
  for (const auto& at : cfg.attachment_points()) {
    pending.push_back(std::async(std::launch::deferred, [&g, &relative_set, at, &cfg] {
      return tail_invariance_report(g, relative_set, at, cfg.max_length());
    }));
  }

  TailSweepResult result;
  result.passed = true;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    TailPointOutcome outcome{cfg.attachment_points()[i], std::nullopt, {}};
    try {
      outcome.report = pending[i].get();
    } catch (const InputError& e) {
      outcome.error = e.what();
    }
    result.passed = result.passed && outcome.passed();
    result.points.push_back(std::move(outcome));
  }
  return result;
}

}  // namespace gradedk
