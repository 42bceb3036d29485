#pragma once

#include "gradedk/integer.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gradedk {

/// Finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in invariant-factor form:
/// every d_i > 1 and d_i | d_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  // Throws std::invalid_argument if the factors are not a divisibility chain of
  // integers > 1.
  explicit AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors = {});

  static AbelianGroup trivial() { return AbelianGroup{}; }
  static AbelianGroup free(std::size_t rank) { return AbelianGroup{rank}; }

  // Builds the group Z^free_rank + (+)_i Z/d_i from arbitrary diagonal entries,
  // dropping units; the entries must already form a divisibility chain.
  static AbelianGroup from_diagonal(std::size_t free_rank, const std::vector<Integer>& diagonal);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
  bool is_free() const { return factors_.empty(); }

  /// "0", "Z", "Z^3", "Z/2", "Z^2 ⊕ Z/2 ⊕ Z/4".
  std::string to_string() const;

  /// Inverse of to_string. Throws std::invalid_argument on malformed text.
  static AbelianGroup parse(std::string_view text);

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g);

}  // namespace gradedk
