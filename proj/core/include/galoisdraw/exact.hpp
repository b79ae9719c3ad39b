#pragma once

// Exact scalars and dense univariate polynomials over Z and Q.
//
// Coefficients are stored low degree first. Every constructor and mutating
// operation strips trailing zeros, so the zero polynomial is the empty
// sequence and structural equality is polynomial equality.

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "galoisdraw/errors.hpp"

namespace galoisdraw {

using Integer = mpz_class;
using Rational = mpq_class;

namespace detail {

template <class U, class T>
U convert_scalar(const T& v) {
  if constexpr (std::is_same_v<U, T>) {
    return v;
  } else if constexpr (std::is_same_v<U, double>) {
    return v.get_d();
  } else if constexpr (std::is_same_v<U, std::complex<double>>) {
    return std::complex<double>(v.get_d(), 0.0);
  } else {
    return U(v);
  }
}

}  // namespace detail

template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }

  static Poly constant(T v) { return Poly(std::vector<T>{std::move(v)}); }
  static Poly monomial(T v, std::size_t k) {
    std::vector<T> c(k + 1, T(0));
    c[k] = std::move(v);
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(T(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
    return c_.back();
  }
  const std::vector<T>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const T& s) {
    for (auto& v : c_) v *= s;
    normalize();
    return *this;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(const T& s, Poly p) { return p *= s; }
  friend Poly operator*(Poly p, const T& s) { return p *= s; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

template <class T>
Poly<T> derivative(const Poly<T>& f) {
  if (f.degree() < 1) return {};
  std::vector<T> d(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) d[i - 1] = f.coeffs()[i] * static_cast<long>(i);
  return Poly<T>(std::move(d));
}

/// Horner evaluation; U may be the coefficient type or any type the
/// coefficients embed into (Rational, double, complex<double>).
template <class T, class U>
U evaluate(const Poly<T>& f, const U& x) {
  U acc = U(0);
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + detail::convert_scalar<U>(c[i]);
  return acc;
}

/// Composition f(g(x)).
template <class T>
Poly<T> compose(const Poly<T>& f, const Poly<T>& g) {
  Poly<T> acc;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * g + Poly<T>::constant(c[i]);
  return acc;
}

QPoly to_rational(const ZPoly& f);
/// Throws InvalidArgument unless every coefficient is an integer.
ZPoly to_integer(const QPoly& f);

// ---- division ------------------------------------------------------------

struct QDivRem {
  QPoly quotient;
  QPoly remainder;
};

/// Euclidean division over Q. Throws InvalidArgument for a zero divisor.
QDivRem divrem(const QPoly& f, const QPoly& g);

/// Integer division result. When the divisor's leading coefficient does not
/// divide the intermediate leading terms, the result is a pseudo-division:
/// multiplier * f = quotient * g + remainder with multiplier = lc(g)^(df-dg+1).
struct ZDivRem {
  ZPoly quotient;
  ZPoly remainder;
  bool pseudo = false;
  Integer multiplier = 1;
};

ZDivRem divrem(const ZPoly& f, const ZPoly& g);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g.
ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g);

/// Quotient f / g when it exists in Z[x], otherwise nullopt.
std::optional<ZPoly> exact_quotient(const ZPoly& f, const ZPoly& g);

/// Divides every coefficient by s; throws InvalidArgument if inexact.
ZPoly exact_scalar_quotient(const ZPoly& f, const Integer& s);

// ---- content and gcd -----------------------------------------------------

/// gcd of coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const ZPoly& f);

struct PrimitiveForm {
  Rational content;
  ZPoly primitive;
};

/// f = content * primitive with primitive integral, coefficient gcd 1 and
/// positive leading coefficient. Throws InvalidArgument on zero.
PrimitiveForm primitive(const QPoly& f);
PrimitiveForm primitive(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

QPoly make_monic(const QPoly& f);
/// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(const QPoly& f, const QPoly& g);
/// Primitive gcd over Z with positive leading coefficient.
ZPoly gcd(const ZPoly& f, const ZPoly& g);

// ---- transforms ----------------------------------------------------------

/// Root-reversing rescale x -> x^n f(c/x) / s. A root r of f maps to c/r.
struct ReverseScale {
  std::size_t n = 0;
  Rational c = 1;
  Rational s = 1;

  Rational image_of_root(const Rational& r) const { return c / r; }
};

QPoly reverse_scale(const QPoly& f, const ReverseScale& t);
/// Integer-output variant; throws InvalidArgument if s does not divide.
ZPoly reverse_scale(const ZPoly& f, const ReverseScale& t);

/// f(x + c)
template <class T>
Poly<T> shift(const Poly<T>& f, const T& c) {
  return compose(f, Poly<T>({c, T(1)}));
}
/// f(c x)
template <class T>
Poly<T> dilate(const Poly<T>& f, const T& c) {
  std::vector<T> r = f.coeffs();
  T pw = 1;
  for (auto& v : r) {
    v *= pw;
    pw *= c;
  }
  return Poly<T>(std::move(r));
}
/// f(a x + b)
template <class T>
Poly<T> compose_linear(const Poly<T>& f, const T& a, const T& b) {
  return compose(f, Poly<T>({b, a}));
}

/// Largest k with f supported only on exponents divisible by k (0 for zero).
template <class T>
std::size_t exponent_gcd(const Poly<T>& f) {
  std::size_t g = 0;
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    if (f.coeffs()[i] != 0) g = std::gcd(g, i);
  return g;
}

/// Given f(x) = g(x^k), returns g. Throws InvalidArgument if some exponent
/// with a nonzero coefficient is not a multiple of k.
template <class T>
Poly<T> power_substitute(const Poly<T>& f, std::size_t k) {
  if (k == 0) throw InvalidArgument("power_substitute: k must be positive");
  const auto& c = f.coeffs();
  std::vector<T> g;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % k == 0) {
      g.push_back(c[i]);
    } else if (c[i] != 0) {
      throw InvalidArgument("power_substitute: exponent " + std::to_string(i) +
                            " is not a multiple of " + std::to_string(k));
    }
  }
  return Poly<T>(std::move(g));
}

/// Monic integer polynomial with the same splitting field as an integer
/// polynomial f, together with the reversal that produced it.
struct MonicAssociate {
  ZPoly poly;
  std::optional<ReverseScale> transform;  // empty when f was already monic
};

enum class MonicStrategy {
  /// x^n f(|f0|/x) / f0
  reverse_constant,
  /// x^n f(c/x) / f0 with the smallest positive c that keeps integrality
  reverse_minimal,
};

/// f must be primitive with nonzero constant term (or already monic).
MonicAssociate monic_associate(const ZPoly& f, MonicStrategy strategy);

}  // namespace galoisdraw
