#pragma once

#include <gmpxx.h>

#include <string>

#include "genus0/errors.hpp"

namespace genus0 {

using Int = mpz_class;

// Arbitrary-precision rational, always in lowest terms with positive
// denominator; zero is 0/1. Every constructor normalizes.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (sgn(den) == 0) throw error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  Int num() const { return Int(v_.get_num()); }
  Int den() const { return Int(v_.get_den()); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) throw error("rational division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }
  bool operator<(const Rat& o) const { return v_ < o.v_; }
  bool operator<=(const Rat& o) const { return v_ <= o.v_; }
  bool operator>(const Rat& o) const { return v_ > o.v_; }
  bool operator>=(const Rat& o) const { return v_ >= o.v_; }

  Rat abs() const { return sign() < 0 ? -*this : *this; }
  Rat inverse() const {
    if (is_zero()) throw error("inverse of zero");
    return Rat(den(), num());
  }

  // "num/den", or just "num" for integers.
  std::string str() const {
    std::string s = v_.get_num().get_str();
    if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
    return s;
  }

 private:
  explicit Rat(const mpq_class& v) : v_(v) {}
  mpq_class v_;
};

// Height of a rational: max(|num|, den). Integers n have height max(|n|, 1).
inline Int rat_height(const Rat& q) {
  Int n = ::abs(q.num());
  Int d = q.den();
  return n > d ? n : d;
}

// Order used by point search: (height, |num|, sign) with nonnegative values
// before negative ones of the same magnitude, so streams grow slowly.
inline bool search_rat_less(const Rat& a, const Rat& b) {
  Int ha = rat_height(a), hb = rat_height(b);
  if (ha != hb) return ha < hb;
  Int na = ::abs(a.num()), nb = ::abs(b.num());
  if (na != nb) return na < nb;
  if (a.sign() != b.sign()) return a.sign() > b.sign();
  return a < b;
}

}  // namespace genus0
