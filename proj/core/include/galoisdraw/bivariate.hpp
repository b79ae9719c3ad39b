#pragma once

#include <tuple>
#include <vector>

#include "galoisdraw/exact.hpp"

namespace galoisdraw {

/// Integer polynomial in two variables a, b stored as a dense sequence of
/// Z[b] coefficients indexed by the power of a.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<ZPoly> by_a);

  static BiPoly constant(const Integer& v);
  static BiPoly a();
  static BiPoly b();
  /// Sum of c * a^i * b^j over (c, i, j).
  static BiPoly from_terms(const std::vector<std::tuple<Integer, unsigned, unsigned>>& terms);

  bool is_zero() const { return c_.empty(); }
  int degree_a() const { return static_cast<int>(c_.size()) - 1; }
  int degree_b() const;
  const std::vector<ZPoly>& coeffs() const { return c_; }
  ZPoly coeff_a(std::size_t i) const { return i < c_.size() ? c_[i] : ZPoly{}; }
  Integer coeff(std::size_t i, std::size_t j) const { return coeff_a(i).coeff(j); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly x, const BiPoly& y) { return x += y; }
  friend BiPoly operator-(BiPoly x, const BiPoly& y) { return x -= y; }
  friend BiPoly operator*(const BiPoly& x, const BiPoly& y);
  friend BiPoly operator*(const Integer& s, const BiPoly& x);
  friend bool operator==(const BiPoly& x, const BiPoly& y) = default;

  BiPoly pow(unsigned e) const;
  /// Exchanges the roles of a and b.
  BiPoly swap_variables() const;

  template <class U>
  U eval(const U& av, const U& bv) const {
    U acc = U(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * av + evaluate(c_[i], bv);
    return acc;
  }

 private:
  void normalize();
  std::vector<ZPoly> c_;
};

}  // namespace galoisdraw
