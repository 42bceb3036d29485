#include "gradedk/abelian_group.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace gradedk {

namespace {

constexpr std::string_view kSum = "\xE2\x8A\x95";  // U+2295

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) {
      throw std::invalid_argument("invariant factor must exceed 1, got " + gradedk::to_string(factors_[i]));
    }
    if (i > 0 && factors_[i] % factors_[i - 1] != 0) {
      throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }
}

AbelianGroup AbelianGroup::from_diagonal(std::size_t free_rank,
                                         const std::vector<Integer>& diagonal) {
  std::vector<Integer> factors;
  for (const auto& d : diagonal) {
    Integer a = abs(d);
    if (a == 0) {
      ++free_rank;
    } else if (a > 1) {
      factors.push_back(std::move(a));
    }
  }
  return AbelianGroup(free_rank, std::move(factors));
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) {
      out += ' ';
      out += kSum;
      out += ' ';
    }
    out += part;
  };
  if (free_rank_ == 1) {
    append("Z");
  } else if (free_rank_ > 1) {
    append("Z^" + std::to_string(free_rank_));
  }
  for (const auto& d : factors_) append("Z/" + gradedk::to_string(d));
  return out;
}

AbelianGroup AbelianGroup::parse(std::string_view text) {
  text = trim(text);
  if (text == "0") return AbelianGroup{};
  if (text.empty()) throw std::invalid_argument("empty group text");

  std::size_t free_rank = 0;
  std::vector<Integer> factors;
  bool torsion_seen = false;
  while (true) {
    const std::size_t split = text.find(kSum);
    const std::string_view part = trim(text.substr(0, split));
    if (part == "Z") {
      if (torsion_seen || free_rank) throw std::invalid_argument("free part must come first");
      free_rank = 1;
    } else if (part.starts_with("Z^")) {
      if (torsion_seen || free_rank) throw std::invalid_argument("free part must come first");
      const Integer r = parse_integer(part.substr(2));
      if (r < 2) throw std::invalid_argument("bad free rank in '" + std::string(part) + "'");
      free_rank = static_cast<std::size_t>(r);
    } else if (part.starts_with("Z/")) {
      torsion_seen = true;
      factors.push_back(parse_integer(part.substr(2)));
    } else {
      throw std::invalid_argument("unrecognised summand '" + std::string(part) + "'");
    }
    if (split == std::string_view::npos) break;
    text.remove_prefix(split + kSum.size());
  }
  return AbelianGroup(free_rank, std::move(factors));
}

std::ostream& operator<<(std::ostream& os, const AbelianGroup& g) { return os << g.to_string(); }

}  // namespace gradedk
