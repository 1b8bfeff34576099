#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace tix {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact rational value. Always stored normalized (lowest terms, positive
// denominator); integers are the denominator == 1 case.
class ExactNumber {
public:
  ExactNumber() = default;
  ExactNumber(int v) : v_(v) {}
  ExactNumber(long long v) : v_(v) {}
  explicit ExactNumber(BigInt v) : v_(std::move(v)) {}
  explicit ExactNumber(BigRat v) : v_(std::move(v)) {}
  ExactNumber(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ExactNumber: zero denominator");
    v_ = den < 0 ? BigRat(-num, -den) : BigRat(num, den);
  }

  const BigRat& value() const { return v_; }
  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_ < 0 ? -1 : (v_ == 0 ? 0 : 1); }

  ExactNumber operator-() const { return ExactNumber(BigRat(-v_)); }

  ExactNumber& operator+=(const ExactNumber& o) { v_ += o.v_; return *this; }
  ExactNumber& operator-=(const ExactNumber& o) { v_ -= o.v_; return *this; }
  ExactNumber& operator*=(const ExactNumber& o) { v_ *= o.v_; return *this; }
  ExactNumber& operator/=(const ExactNumber& o) {
    if (o.is_zero()) throw std::domain_error("ExactNumber: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend ExactNumber operator+(ExactNumber a, const ExactNumber& b) { return a += b; }
  friend ExactNumber operator-(ExactNumber a, const ExactNumber& b) { return a -= b; }
  friend ExactNumber operator*(ExactNumber a, const ExactNumber& b) { return a *= b; }
  friend ExactNumber operator/(ExactNumber a, const ExactNumber& b) { return a /= b; }

  friend bool operator==(const ExactNumber& a, const ExactNumber& b) { return a.v_ == b.v_; }
  friend bool operator!=(const ExactNumber& a, const ExactNumber& b) { return a.v_ != b.v_; }
  friend bool operator<(const ExactNumber& a, const ExactNumber& b) { return a.v_ < b.v_; }
  friend bool operator<=(const ExactNumber& a, const ExactNumber& b) { return a.v_ <= b.v_; }
  friend bool operator>(const ExactNumber& a, const ExactNumber& b) { return a.v_ > b.v_; }
  friend bool operator>=(const ExactNumber& a, const ExactNumber& b) { return a.v_ >= b.v_; }

  // decimal for integers, "p/q" otherwise
  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  // always "p/q", even for integers ("6/1")
  std::string to_fraction_string() const {
    return numerator().str() + "/" + denominator().str();
  }

  double to_double() const { return static_cast<double>(v_); }

  // accepts the to_string forms: optional sign, digits, optional "/digits"
  static ExactNumber parse(const std::string& s) {
    auto bad = [&] { throw std::invalid_argument("ExactNumber: cannot parse '" + s + "'"); };
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto check = [&](const std::string& part, bool allow_sign) {
      std::size_t i = 0;
      if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
      if (i == part.size()) bad();
      for (; i < part.size(); ++i)
        if (part[i] < '0' || part[i] > '9') bad();
    };
    check(num, true);
    check(den, false);
    return ExactNumber(BigInt(num), BigInt(den));
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactNumber& x) {
    return os << x.to_string();
  }

private:
  BigRat v_{};
};

// exact integer power; exp may be negative (exact inverse); pow(0,0) = 1
inline ExactNumber pow(const ExactNumber& base, long long exp) {
  if (exp == 0) return ExactNumber(1);
  bool neg = exp < 0;
  unsigned long long mag =
      neg ? ~static_cast<unsigned long long>(exp) + 1ULL : static_cast<unsigned long long>(exp);
  if (base.is_zero()) {
    if (neg) throw std::domain_error("pow: zero base with negative exponent");
    return ExactNumber(0);
  }
  if (mag > std::numeric_limits<unsigned>::max())
    throw std::overflow_error("pow: exponent magnitude too large");
  auto e = static_cast<unsigned>(mag);
  BigInt num = boost::multiprecision::pow(base.numerator(), e);
  BigInt den = boost::multiprecision::pow(base.denominator(), e);
  return neg ? ExactNumber(den, num) : ExactNumber(num, den);
}

// natural log as double, computed through 50-digit floats; requires x > 0
inline double log_value(const ExactNumber& x) {
  if (x.sign() <= 0) throw std::domain_error("log_value: argument must be positive");
  using BF = boost::multiprecision::cpp_bin_float_50;
  BF num(x.numerator());
  BF den(x.denominator());
  return static_cast<double>(log(num) - log(den));
}

}  // namespace tix
