#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>

#include "galoisdraw/exact.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

QPoly to_rational(const ZPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return QPoly(std::move(c));
}

ZPoly to_integer(const QPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    if (v.get_den() != 1) throw InvalidArgument("polynomial has non-integer coefficient " + v.get_str());
    c.emplace_back(v.get_num());
  }
  return ZPoly(std::move(c));
}

QDivRem divrem(const QPoly& f, const QPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const int df = f.degree();
  const int dg = g.degree();
  if (df < dg) return {QPoly{}, f};
  std::vector<Rational> r = f.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(df - dg + 1));
  const auto& gc = g.coeffs();
  const Rational& lc = g.leading();
  for (int i = df - dg; i >= 0; --i) {
    Rational t = r[i + dg] / lc;
    if (t == 0) continue;
    for (int j = 0; j <= dg; ++j) r[i + j] -= t * gc[j];
    q[i] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(dg));
  return {QPoly(std::move(q)), QPoly(std::move(r))};
}

namespace {

// Long division over Z; returns false as soon as a quotient coefficient is
// not an integer.
bool integer_long_division(const ZPoly& f, const ZPoly& g, ZPoly& q_out, ZPoly& r_out) {
  const int df = f.degree();
  const int dg = g.degree();
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(df - dg + 1));
  const auto& gc = g.coeffs();
  const Integer& lc = g.leading();
  for (int i = df - dg; i >= 0; --i) {
    Integer& top = r[i + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return false;
    Integer t;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    for (int j = 0; j <= dg; ++j) r[i + j] -= t * gc[j];
    q[i] = std::move(t);
  }
  r.resize(static_cast<std::size_t>(dg));
  q_out = ZPoly(std::move(q));
  r_out = ZPoly(std::move(r));
  return true;
}

}  // namespace

ZDivRem divrem(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (f.degree() < g.degree()) return {ZPoly{}, f, false, 1};
  ZDivRem out;
  if (integer_long_division(f, g, out.quotient, out.remainder)) return out;
  Integer m;
  mpz_pow_ui(m.get_mpz_t(), g.leading().get_mpz_t(), static_cast<unsigned long>(f.degree() - g.degree() + 1));
  const bool ok = integer_long_division(m * f, g, out.quotient, out.remainder);
  if (!ok) throw Error("pseudo-division failed to be exact");
  out.pseudo = true;
  out.multiplier = m;
  return out;
}

ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const int dg = g.degree();
  if (f.degree() < dg) return f;
  int e = f.degree() - dg + 1;
  ZPoly r = f;
  const Integer& lc = g.leading();
  while (!r.is_zero() && r.degree() >= dg) {
    ZPoly t = ZPoly::monomial(r.leading(), static_cast<std::size_t>(r.degree() - dg));
    r = lc * r - t * g;
    --e;
  }
  Integer m;
  mpz_pow_ui(m.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(e));
  return m * r;
}

std::optional<ZPoly> exact_quotient(const ZPoly& f, const ZPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (f.is_zero()) return ZPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  // Cheap necessary condition on the trailing coefficients.
  std::size_t tf = 0, tg = 0;
  while (f.coeffs()[tf] == 0) ++tf;
  while (g.coeffs()[tg] == 0) ++tg;
  if (tg > tf) return std::nullopt;
  if (!mpz_divisible_p(f.coeffs()[tf].get_mpz_t(), g.coeffs()[tg].get_mpz_t())) return std::nullopt;
  ZPoly q, r;
  if (!integer_long_division(f, g, q, r) || !r.is_zero()) return std::nullopt;
  return q;
}

ZPoly exact_scalar_quotient(const ZPoly& f, const Integer& s) {
  if (s == 0) throw InvalidArgument("division by zero");
  std::vector<Integer> c = f.coeffs();
  for (auto& v : c) {
    if (!mpz_divisible_p(v.get_mpz_t(), s.get_mpz_t()))
      throw InvalidArgument(s.get_str() + " does not divide coefficient " + v.get_str());
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
  }
  return ZPoly(std::move(c));
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& v : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PrimitiveForm primitive(const ZPoly& f) {
  if (f.is_zero()) throw InvalidArgument("primitive part of the zero polynomial");
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  return {Rational(c), exact_scalar_quotient(f, c)};
}

PrimitiveForm primitive(const QPoly& f) {
  if (f.is_zero()) throw InvalidArgument("primitive part of the zero polynomial");
  Integer l = 1;
  for (const auto& v : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) {
    Integer n = v.get_num() * (l / v.get_den());
    c.push_back(std::move(n));
  }
  PrimitiveForm p = primitive(ZPoly(std::move(c)));
  p.content /= Rational(l);
  return p;
}

ZPoly primitive_part(const ZPoly& f) { return primitive(f).primitive; }

QPoly make_monic(const QPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  Rational inv = 1 / f.leading();
  return inv * f;
}

QPoly gcd(const QPoly& f, const QPoly& g) {
  QPoly a = f, b = g;
  while (!b.is_zero()) {
    QPoly r = divrem(a, b).remainder;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

ZPoly gcd(const ZPoly& f, const ZPoly& g) {
  QPoly q = gcd(to_rational(f), to_rational(g));
  if (q.is_zero()) return {};
  return primitive(q).primitive;
}

QPoly reverse_scale(const QPoly& f, const ReverseScale& t) {
  if (f.degree() > static_cast<int>(t.n))
    throw InvalidArgument("reverse_scale: n = " + std::to_string(t.n) + " is below deg f");
  if (t.s == 0 || t.c == 0) throw InvalidArgument("reverse_scale: c and s must be nonzero");
  std::vector<Rational> r(t.n + 1);
  Rational pw = 1;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    r[t.n - i] = f.coeffs()[i] * pw / t.s;
    pw *= t.c;
  }
  return QPoly(std::move(r));
}

ZPoly reverse_scale(const ZPoly& f, const ReverseScale& t) {
  QPoly q = reverse_scale(to_rational(f), t);
  try {
    return to_integer(q);
  } catch (const InvalidArgument&) {
    throw InvalidArgument("reverse_scale: s = " + t.s.get_str() + " does not divide every scaled coefficient");
  }
}

namespace {

unsigned valuation(const Integer& v, const Integer& q) {
  if (v == 0) return ~0u;
  unsigned e = 0;
  Integer t = v;
  while (mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) {
    mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), q.get_mpz_t());
    ++e;
  }
  return e;
}

Integer minimal_reverse_constant(const ZPoly& f) {
  const Integer& f0 = f.coeffs()[0];
  Integer a0 = abs(f0);
  IntegerFactorization fac = factor_integer(a0, std::chrono::milliseconds(2000));
  if (!fac.complete()) return a0;
  Integer c = 1;
  for (const auto& [q, e0] : fac.factors) {
    unsigned need = 0;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
      unsigned v = valuation(f.coeffs()[i], q);
      if (v >= e0) continue;
      unsigned k = (e0 - v + static_cast<unsigned>(i) - 1) / static_cast<unsigned>(i);
      need = std::max(need, k);
    }
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), need);
    c *= pw;
  }
  return c;
}

}  // namespace

MonicAssociate monic_associate(const ZPoly& f, MonicStrategy strategy) {
  if (f.is_zero()) throw InvalidArgument("monic associate of the zero polynomial");
  if (f.is_monic()) return {f, std::nullopt};
  if (f.leading() == -1) return {-f, std::nullopt};
  const Integer& f0 = f.coeffs()[0];
  if (f0 == 0) throw InvalidArgument("monic associate needs a nonzero constant term");
  ReverseScale t;
  t.n = static_cast<std::size_t>(f.degree());
  t.s = Rational(f0);
  t.c = Rational(strategy == MonicStrategy::reverse_constant ? Integer(abs(f0)) : minimal_reverse_constant(f));
  return {reverse_scale(f, t), t};
}

}  // namespace galoisdraw
