#pragma once

#include <stdexcept>
#include <string>

namespace gradedk {

/// Invalid input: a malformed document, a failed graph invariant, or a violated
/// operation precondition. `subject()` names the offending identifier when
/// there is one.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& message, std::string subject = {})
      : std::runtime_error(message), subject_(std::move(subject)) {}

  const std::string& subject() const noexcept { return subject_; }

 private:
  std::string subject_;
};

}  // namespace gradedk
