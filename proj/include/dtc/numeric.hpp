#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dtc {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Always-on check; never compiled out in Release.
#define DTC_CHECK(cond, msg)                                              \
  do {                                                                    \
    if (!(cond)) throw std::logic_error(std::string("check failed: ") + (msg)); \
  } while (0)

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 add overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 sub overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("int64 mul overflow");
  return r;
}

// Exact halving; the coordinate formulas divide by two only where parity
// guarantees integrality, so a remainder is a contract violation.
inline Int halve_exact(Int a) {
  DTC_CHECK(a % 2 == 0, "halve_exact on odd value");
  return a / 2;
}

// Exact rational number over arbitrary-precision integers. Denominator kept
// positive, fraction kept in lowest terms.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(Int v) : num_(v), den_(1) {}                     // NOLINT(google-explicit-constructor)
  Rat(const BigInt& v) : num_(v), den_(1) {}           // NOLINT(google-explicit-constructor)
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rat operator-() const { return Rat(-num_, den_, NoNorm{}); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    DTC_CHECK(b.num_ != 0, "rational division by zero");
    return Rat(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  // Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

 private:
  struct NoNorm {};
  Rat(BigInt n, BigInt d, NoNorm) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    DTC_CHECK(den_ != 0, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }

}  // namespace dtc
