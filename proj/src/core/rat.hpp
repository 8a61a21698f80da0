#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "core/errors.hpp"

namespace tverberg {

// Exact rational scalar, always in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. All arithmetic is closed and exact;
// there is no floating point anywhere downstream of this type.
class Rat {
public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long long n) : v_(from_ll(n)) {}
  explicit Rat(const mpz_class& n) : v_(n) {}

  Rat(long num, long den);
  Rat(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "p/q", or a decimal string such as "-12.5" or "1.25e-3".
  static Rat from_string(const std::string& text);

  // Exact value of an IEEE double (every finite double is rational).
  static Rat from_double(double x);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat abs() const { return Rat(mpq_class(::abs(v_))); }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  // Nearest double, used only at presentation boundaries (SVG layout).
  double to_double() const { return v_.get_d(); }

private:
  explicit Rat(mpq_class q) : v_(std::move(q)) {}
  static mpq_class from_ll(long long n);

  mpq_class v_;
};

using RatVector = std::vector<Rat>;
using Point = RatVector;

// Convenience for tests and literals: value p/q.
inline Rat frac(long p, long q) { return Rat(p, q); }

} // namespace tverberg
