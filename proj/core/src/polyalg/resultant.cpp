// Subresultant PRS over a ring R, instantiated for Z and for Z[b].

#include "galoisdraw/polyalg.hpp"

namespace galoisdraw {

namespace {

bool ring_zero(const Integer& v) { return v == 0; }
bool ring_zero(const ZPoly& v) { return v.is_zero(); }

Integer ring_one(const Integer&) { return 1; }
ZPoly ring_one(const ZPoly&) { return ZPoly::constant(1); }

Integer ring_exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

ZPoly ring_exact_div(const ZPoly& a, const ZPoly& b) {
  auto q = exact_quotient(a, b);
  if (!q) throw Error("subresultant step was not an exact division");
  return *q;
}

template <class R>
R ring_pow(const R& x, unsigned e) {
  R r = ring_one(x), b = x;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// Dense polynomial over R, coefficients low degree first.
template <class R>
struct RPoly {
  std::vector<R> c;

  void trim() {
    while (!c.empty() && ring_zero(c.back())) c.pop_back();
  }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const R& lc() const { return c.back(); }
};

// lc(B)^(deg A - deg B + 1) * A mod B, computed without division.
template <class R>
RPoly<R> prem(RPoly<R> A, const RPoly<R>& B) {
  const int db = B.degree();
  int e = A.degree() - db + 1;
  const R& l = B.lc();
  while (!A.c.empty() && A.degree() >= db) {
    const int shift = A.degree() - db;
    R t = A.lc();
    for (auto& v : A.c) v = l * v;
    for (int j = 0; j <= db; ++j) A.c[shift + j] = A.c[shift + j] - t * B.c[j];
    A.trim();
    --e;
  }
  if (e > 0) {
    R m = ring_pow(l, static_cast<unsigned>(e));
    for (auto& v : A.c) v = m * v;
  }
  return A;
}

template <class R>
R subresultant(RPoly<R> A, RPoly<R> B) {
  if (A.c.empty() || B.c.empty()) throw InvalidArgument("resultant of a zero polynomial");
  const R one = ring_one(A.c[0]);
  R s = one;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
  }
  if (B.degree() == 0) return s * ring_pow(B.c[0], static_cast<unsigned>(A.degree()));
  R g = one, h = one;
  for (;;) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
    RPoly<R> Rm = prem(A, B);
    A = std::move(B);
    R div = g * ring_pow(h, static_cast<unsigned>(delta));
    for (auto& v : Rm.c) v = ring_exact_div(v, div);
    B = std::move(Rm);
    g = A.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = ring_exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
    }
    if (B.c.empty()) return R{};
    if (B.degree() == 0) break;
  }
  const unsigned da = static_cast<unsigned>(A.degree());
  R last = ring_pow(B.c[0], da);
  if (da > 1) last = ring_exact_div(last, ring_pow(h, da - 1));
  return s * last;
}

RPoly<Integer> as_rpoly(const ZPoly& f) { return {f.coeffs()}; }

}  // namespace

Integer resultant(const ZPoly& f, const ZPoly& g) { return subresultant(as_rpoly(f), as_rpoly(g)); }

Rational resultant(const QPoly& f, const QPoly& g) {
  if (f.is_zero() || g.is_zero()) throw InvalidArgument("resultant of a zero polynomial");
  PrimitiveForm pf = primitive(f), pg = primitive(g);
  Rational r = resultant(pf.primitive, pg.primitive);
  Rational cf = 1, cg = 1;
  for (int i = 0; i < g.degree(); ++i) cf *= pf.content;
  for (int i = 0; i < f.degree(); ++i) cg *= pg.content;
  return r * cf * cg;
}

Integer discriminant(const ZPoly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidArgument("discriminant needs degree at least 2");
  Integer r = resultant(f, derivative(f));
  Integer d = ring_exact_div(r, f.leading());
  return ((n * (n - 1) / 2) % 2 == 1) ? Integer(-d) : d;
}

Rational discriminant(const QPoly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidArgument("discriminant needs degree at least 2");
  Rational d = resultant(f, derivative(f)) / f.leading();
  return ((n * (n - 1) / 2) % 2 == 1) ? Rational(-d) : d;
}

ZPoly resultant_in_a(const BiPoly& P, const BiPoly& Q) {
  if (P.degree_a() < 1 || Q.degree_a() < 1)
    throw InvalidArgument("elimination needs positive degree in the eliminated variable");
  return subresultant(RPoly<ZPoly>{P.coeffs()}, RPoly<ZPoly>{Q.coeffs()});
}

Elimination eliminate_resultant(const BiPoly& P, const BiPoly& Q) {
  Elimination out;
  out.raw = resultant_in_a(P, Q);
  if (out.raw.is_zero()) return out;
  if (out.raw.degree() < 1) {
    out.squarefree_primitive = ZPoly::constant(1);
    return out;
  }
  ZFactorList sq = squarefree_decomposition(out.raw);
  ZPoly prod = ZPoly::constant(1);
  for (const auto& f : sq.factors) prod = prod * f.poly;
  out.squarefree_primitive = prod;
  return out;
}

}  // namespace galoisdraw
