#ifndef GSC_RATIONAL_HPP
#define GSC_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "gsc/error.hpp"

namespace gsc {

// Exact non-negative-denominator rational, kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) fail(ErrorKind::parse, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    auto g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational parse(const std::string& text) {
    auto slash = text.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        auto n = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return Rational(n);
      }
      auto ns = text.substr(0, slash);
      auto ds = text.substr(slash + 1);
      auto n = std::stoll(ns, &used);
      if (used != ns.size()) throw std::invalid_argument(text);
      auto d = std::stoll(ds, &used);
      if (used != ds.size()) throw std::invalid_argument(text);
      return Rational(n, d);
    } catch (const std::logic_error&) {
      fail(ErrorKind::parse, "not a rational 'p/q': '" + text + "'");
    }
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  double to_double() const noexcept { return double(num_) / double(den_); }

  friend Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend bool operator==(Rational a, Rational b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(Rational a, Rational b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gsc

#endif  // GSC_RATIONAL_HPP
