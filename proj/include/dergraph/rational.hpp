#ifndef DERGRAPH_RATIONAL_HPP
#define DERGRAPH_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dergraph {

// Exact rational over int64. All quantities in this project are small
// (numerators bounded by degree * group order), so no bignum is needed;
// comparisons and products go through __int128 to stay safe.
class Rational {
public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    from128(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_),
                    from128(i128(a.den_) * b.den_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(from128(i128(a.num_) * b.num_), from128(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(from128(i128(a.num_) * b.den_), from128(i128(a.den_) * b.num_));
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  // Always "p/q", even for integers ("2/1"), so output round-trips exactly.
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
      throw std::invalid_argument("rational: expected \"p/q\", got \"" + std::string(s) + "\"");
    std::size_t pos1 = 0, pos2 = 0;
    std::int64_t n = std::stoll(std::string(s.substr(0, slash)), &pos1);
    std::int64_t d = std::stoll(std::string(s.substr(slash + 1)), &pos2);
    if (pos1 != slash || pos2 != s.size() - slash - 1)
      throw std::invalid_argument("rational: trailing characters in \"" + std::string(s) + "\"");
    return Rational(n, d);
  }

private:
  using i128 = __int128;

  static std::int64_t from128(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<std::int64_t>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

} // namespace dergraph

#endif
