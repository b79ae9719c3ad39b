#include "galoisdraw/ratfunc.hpp"

namespace galoisdraw {

RatFunc::RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

RatFunc::RatFunc(QPoly num, QPoly den) {
  if (den.is_zero()) throw InvalidArgument("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPoly::constant(1);
    return;
  }
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divrem(num, g).quotient;
    den = divrem(den, g).quotient;
  }
  Rational lc = den.leading();
  num_ = (1 / lc) * num;
  den_ = make_monic(den);
}

RatFunc operator+(const RatFunc& x, const RatFunc& y) {
  if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
  return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
}

RatFunc operator-(const RatFunc& x, const RatFunc& y) { return x + (-y); }

RatFunc operator*(const RatFunc& x, const RatFunc& y) { return {x.num_ * y.num_, x.den_ * y.den_}; }

RatFunc operator/(const RatFunc& x, const RatFunc& y) {
  if (y.is_zero()) throw InvalidArgument("division by the zero rational function");
  return {x.num_ * y.den_, x.den_ * y.num_};
}

RatFunc RatFunc::pow(unsigned e) const {
  RatFunc r(QPoly::constant(1)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

ZPoly integral_numerator(const RatFunc& r) {
  if (r.is_zero()) return {};
  return primitive(r.num()).primitive;
}

}  // namespace galoisdraw
