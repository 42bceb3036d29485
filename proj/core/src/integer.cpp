#include "gradedk/integer.hpp"

#include <stdexcept>

namespace gradedk {

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
  }
  Integer value(std::string(text.substr(pos)));
  return text[0] == '-' ? Integer(-value) : value;
}

Integer abs(const Integer& value) { return value < 0 ? Integer(-value) : value; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

}  // namespace gradedk
