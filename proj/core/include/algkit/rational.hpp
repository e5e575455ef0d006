// Exact rational scalars for the polynomial ring. Thin wrapper over GMP's
// mpq_class that keeps every value canonical: lowest terms, denominator > 0,
// zero stored as 0/1.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace algkit {

class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    v_.canonicalize();
  }

  static Rational from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.v_ = std::move(q);
    return r;
  }

  // Accepts "n" or "n/d" with optional leading '-'.
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return from_mpq(::abs(v_)); }

  std::string numerator_str() const { return v_.get_num().get_str(); }
  std::string denominator_str() const { return v_.get_den().get_str(); }

  // "0", "-1", "2/3", ...
  std::string to_string() const { return v_.get_str(); }

  friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return from_mpq(a.v_ / b.v_);
  }
  Rational operator-() const { return from_mpq(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

private:
  mpq_class v_;
};

}  // namespace algkit
