#ifndef HYPERCORE_FRACTION_HPP
#define HYPERCORE_FRACTION_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace hypercore {

// Exact non-negative rational with a positive denominator. Comparisons use
// 128-bit cross multiplication, so values near a decision boundary are never
// subject to rounding.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double approx() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>=(const Fraction& a, const Fraction& b) { return !(a < b); }
};

// Fraction threshold in [0, 1] parsed from a decimal literal such as "0.7".
// The literal's digits are kept as numerator over a power of ten, so the
// stored value is exactly what was written, not the nearest double.
class Threshold {
 public:
  // Accepts forms like "0", "1", "0.25", ".5", "0.7500". Throws
  // std::invalid_argument for anything else or values outside [0, 1].
  static Threshold parse(std::string_view text);

  // Builds from an explicit ratio; used by tests and sweeps. den > 0,
  // 0 <= num <= den.
  static Threshold from_ratio(std::int64_t num, std::int64_t den);

  Fraction value() const { return {num_, den_}; }
  const std::string& text() const { return text_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  friend bool operator==(const Threshold& a, const Threshold& b) {
    return a.value() == b.value();
  }

 private:
  Threshold(std::int64_t num, std::int64_t den, std::string text)
      : num_(num), den_(den), text_(std::move(text)) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::string text_;
};

// True when f lies strictly below the threshold.
inline bool below(const Fraction& f, const Threshold& p) { return f < p.value(); }

}  // namespace hypercore

#endif
