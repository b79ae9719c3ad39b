#pragma once

#include "galoisdraw/exact.hpp"

namespace galoisdraw {

/// Univariate rational function over Q kept in lowest terms with a monic
/// denominator.
class RatFunc {
 public:
  RatFunc() : num_(), den_(QPoly::constant(1)) {}
  RatFunc(QPoly num);  // NOLINT(google-explicit-constructor)
  RatFunc(QPoly num, QPoly den);

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const { return {-num_, den_}; }
  friend RatFunc operator+(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator-(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator*(const RatFunc& x, const RatFunc& y);
  friend RatFunc operator/(const RatFunc& x, const RatFunc& y);
  friend bool operator==(const RatFunc& x, const RatFunc& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }

  RatFunc pow(unsigned e) const;

  template <class U>
  U eval(const U& x) const {
    return evaluate(num_, x) / evaluate(den_, x);
  }

 private:
  QPoly num_;
  QPoly den_;
};

/// Integral numerator of a rational function: the primitive integer
/// polynomial proportional to num(r), positive leading coefficient.
ZPoly integral_numerator(const RatFunc& r);

}  // namespace galoisdraw
