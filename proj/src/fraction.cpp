#include "hypercore/fraction.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hypercore {

namespace {

[[noreturn]] void bad(std::string_view text) {
  throw std::invalid_argument("not a fraction threshold in [0,1]: '" + std::string(text) + "'");
}

}  // namespace

Threshold Threshold::parse(std::string_view text) {
  if (text.empty()) bad(text);
  std::size_t pos = 0;
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool any_digit = false;
  // 18 total digits keeps num and den comfortably inside int64.
  int digits = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    if (++digits > 18) bad(text);
    num = num * 10 + (text[pos] - '0');
    any_digit = true;
    ++pos;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (++digits > 18) bad(text);
      num = num * 10 + (text[pos] - '0');
      den *= 10;
      any_digit = true;
      ++pos;
    }
  }
  if (!any_digit || pos != text.size()) bad(text);
  if (num > den) bad(text);
  return Threshold(num, den, std::string(text));
}

Threshold Threshold::from_ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw std::invalid_argument("threshold ratio outside [0,1]");
  }
  std::int64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  std::string text = std::to_string(num) + "/" + std::to_string(den);
  return Threshold(num, den, std::move(text));
}

}  // namespace hypercore
