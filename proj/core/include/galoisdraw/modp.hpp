#pragma once

// Arithmetic in GF(p)[x] for word-size primes.

#include <cstdint>
#include <vector>

#include "galoisdraw/exact.hpp"

namespace galoisdraw {

/// Scalar arithmetic modulo a prime p < 2^63.
class PrimeField {
 public:
  /// Throws InvalidArgument unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(const Integer& v) const;
  std::uint64_t reduce(std::int64_t v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws InvalidArgument for 0.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Polynomial over GF(p), coefficients in [0, p) stored low degree first.
class FpPoly {
 public:
  explicit FpPoly(PrimeField field) : field_(field) {}
  FpPoly(PrimeField field, std::vector<std::uint64_t> coeffs);

  static FpPoly constant(PrimeField field, std::uint64_t v);
  static FpPoly monomial(PrimeField field, std::uint64_t v, std::size_t k);
  static FpPoly x(PrimeField field) { return monomial(field, 1, 1); }

  const PrimeField& field() const { return field_; }
  std::uint64_t modulus() const { return field_.modulus(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t leading() const;
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(std::uint64_t s, const FpPoly& a);
  friend bool operator==(const FpPoly& a, const FpPoly& b);

  std::uint64_t eval(std::uint64_t x) const;

 private:
  void normalize();
  PrimeField field_;
  std::vector<std::uint64_t> c_;
};

/// Throws DomainMismatch when the moduli differ.
void require_same_field(const FpPoly& a, const FpPoly& b);

struct FpDivRem {
  FpPoly quotient;
  FpPoly remainder;
};

FpDivRem divrem(const FpPoly& f, const FpPoly& g);
FpPoly rem(const FpPoly& f, const FpPoly& g);
FpPoly quo(const FpPoly& f, const FpPoly& g);
FpPoly derivative(const FpPoly& f);
FpPoly make_monic(const FpPoly& f);
/// Monic gcd; gcd(0, 0) = 0.
FpPoly gcd(const FpPoly& f, const FpPoly& g);

struct FpXgcd {
  FpPoly g, s, t;  // s*a + t*b = g, g monic
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);

/// base^e mod m for an arbitrary-size exponent.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);
FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m);

struct ModReduction {
  FpPoly poly;
  /// The prime divided the leading coefficient, so the degree dropped.
  bool degree_dropped = false;
};

/// Coefficientwise reduction; throws InvalidArgument if p is not prime.
ModReduction mod_reduce(const ZPoly& f, std::uint64_t p);

/// Lift with coefficients in [0, p).
ZPoly lift(const FpPoly& f);

}  // namespace galoisdraw
