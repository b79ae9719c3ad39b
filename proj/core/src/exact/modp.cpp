#include "galoisdraw/modp.hpp"

#include <algorithm>

#include "galoisdraw/primes.hpp"

namespace galoisdraw {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 63) || !is_prime(p))
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^63");
}

std::uint64_t PrimeField::reduce(const Integer& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), p_);
}

std::uint64_t PrimeField::reduce(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p_;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= p_;
  if (a == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(p_));
  return pow(a, p_ - 2);
}

FpPoly::FpPoly(PrimeField field, std::vector<std::uint64_t> coeffs) : field_(field), c_(std::move(coeffs)) {
  for (auto& v : c_) v %= field_.modulus();
  normalize();
}

FpPoly FpPoly::constant(PrimeField field, std::uint64_t v) { return FpPoly(field, {v}); }

FpPoly FpPoly::monomial(PrimeField field, std::uint64_t v, std::size_t k) {
  std::vector<std::uint64_t> c(k + 1, 0);
  c[k] = v;
  return FpPoly(field, std::move(c));
}

std::uint64_t FpPoly::leading() const {
  if (c_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
  return c_.back();
}

void FpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus())
    throw DomainMismatch("polynomials over GF(" + std::to_string(a.modulus()) + ") and GF(" +
                         std::to_string(b.modulus()) + ")");
}

FpPoly FpPoly::operator-() const {
  FpPoly r = *this;
  for (auto& v : r.c_) v = field_.neg(v);
  return r;
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return FpPoly(a.field_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return FpPoly(a.field_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.field_);
  const auto& F = a.field_;
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return FpPoly(F, std::move(c));
}

FpPoly operator*(std::uint64_t s, const FpPoly& a) {
  std::vector<std::uint64_t> c = a.c_;
  s %= a.modulus();
  for (auto& v : c) v = a.field_.mul(v, s);
  return FpPoly(a.field_, std::move(c));
}

bool operator==(const FpPoly& a, const FpPoly& b) { return a.modulus() == b.modulus() && a.c_ == b.c_; }

std::uint64_t FpPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  x %= modulus();
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

FpDivRem divrem(const FpPoly& f, const FpPoly& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const auto& F = f.field();
  const int df = f.degree();
  const int dg = g.degree();
  if (df < dg) return {FpPoly(F), f};
  std::vector<std::uint64_t> r = f.coeffs();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(df - dg + 1), 0);
  const auto& gc = g.coeffs();
  const std::uint64_t li = F.inv(g.leading());
  for (int i = df - dg; i >= 0; --i) {
    std::uint64_t t = F.mul(r[i + dg], li);
    if (t == 0) continue;
    q[i] = t;
    for (int j = 0; j <= dg; ++j) r[i + j] = F.sub(r[i + j], F.mul(t, gc[j]));
  }
  r.resize(static_cast<std::size_t>(dg));
  return {FpPoly(F, std::move(q)), FpPoly(F, std::move(r))};
}

FpPoly rem(const FpPoly& f, const FpPoly& g) { return divrem(f, g).remainder; }
FpPoly quo(const FpPoly& f, const FpPoly& g) { return divrem(f, g).quotient; }

FpPoly derivative(const FpPoly& f) {
  if (f.degree() < 1) return FpPoly(f.field());
  std::vector<std::uint64_t> d(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    d[i - 1] = f.field().mul(f.coeffs()[i], i % f.modulus());
  return FpPoly(f.field(), std::move(d));
}

FpPoly make_monic(const FpPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return f.field().inv(f.leading()) * f;
}

FpPoly gcd(const FpPoly& f, const FpPoly& g) {
  require_same_field(f, g);
  FpPoly a = f, b = g;
  while (!b.is_zero()) {
    FpPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  const auto& F = a.field();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(F, 1), s1(F);
  FpPoly t0(F), t1 = FpPoly::constant(F, 1);
  while (!r1.is_zero()) {
    FpDivRem qr = divrem(r0, r1);
    FpPoly s2 = s0 - qr.quotient * s1;
    FpPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t li = F.inv(r0.leading());
  return {li * r0, li * s0, li * t0};
}

FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m) { return rem(a * b, m); }

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
  if (e < 0) throw InvalidArgument("negative exponent");
  FpPoly r = rem(FpPoly::constant(base.field(), 1), m);
  FpPoly b = rem(base, m);
  const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mulmod(r, r, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mulmod(r, b, m);
  }
  return r;
}

ModReduction mod_reduce(const ZPoly& f, std::uint64_t p) {
  PrimeField F(p);
  std::vector<std::uint64_t> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.push_back(F.reduce(v));
  FpPoly r(F, std::move(c));
  return {r, r.degree() != f.degree()};
}

ZPoly lift(const FpPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (auto v : f.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
  return ZPoly(std::move(c));
}

}  // namespace galoisdraw
