#include <cmath>
#include <numbers>

#include "galoisdraw/packing.hpp"
#include "galoisdraw/polyalg.hpp"

namespace galoisdraw {

namespace {

RatFunc constant(long v) { return RatFunc(QPoly::constant(Rational(v))); }
RatFunc var_b() { return RatFunc(QPoly::x()); }

RatFunc horner(const ZPoly& p, const RatFunc& x) {
  RatFunc acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + RatFunc(QPoly::constant(Rational(p.coeffs()[i])));
  return acc;
}

// Law of cosines: cosine of the angle between sides p and q, opposite r.
RatFunc cosine(const RatFunc& p, const RatFunc& q, const RatFunc& r) {
  return (p * p + q * q - r * r) / (constant(2) * p * q);
}

// Polynomial in the inner hub radius a with coefficients in Q(b).
struct InA {
  std::vector<RatFunc> c;  // c[i] multiplies a^i

  friend InA operator*(const InA& x, const InA& y) {
    InA r{std::vector<RatFunc>(x.c.size() + y.c.size() - 1)};
    for (std::size_t i = 0; i < x.c.size(); ++i)
      for (std::size_t j = 0; j < y.c.size(); ++j) r.c[i + j] = r.c[i + j] + x.c[i] * y.c[j];
    return r;
  }
  friend InA operator+(InA x, const InA& y) {
    if (y.c.size() > x.c.size()) x.c.resize(y.c.size());
    for (std::size_t i = 0; i < y.c.size(); ++i) x.c[i] = x.c[i] + y.c[i];
    return x;
  }
  friend InA operator-(const InA& x, const InA& y) {
    InA n = y;
    for (auto& v : n.c) v = -v;
    return x + n;
  }
  RatFunc at(std::size_t i) const { return i < c.size() ? c[i] : RatFunc(); }
};

}  // namespace

Pack2nPolynomial pack2n_polynomial(unsigned n) {
  if (n % 2 == 0) throw Unsupported("Pack(2,n) derivation supports odd n only");
  if (n < 5) throw InvalidArgument("Pack(2,n) derivation needs n >= 5");
  Pack2nPolynomial out;
  out.n = n;
  const RatFunc one = constant(1), b = var_b();
  // Rim circles have radius 1, B radius b, its partner C radius 1 - b.
  out.X = cosine(b + (one - b), b + one, (one - b) + one);

  // Around B: arccos X + arccos Y = pi, so X + Y = 0 with
  // Y = cosine(b + 1, b + a, a + 1). Clearing 2(b+1)(b+a) leaves a
  // relation linear in a.
  const InA B1{{b + one}}, BA{{b, one}}, A1{{one, one}};
  const InA num = B1 * B1 + BA * BA - A1 * A1;
  const InA den = InA{{constant(2)}} * B1 * BA;
  const InA rel = InA{{out.X}} * den + num;
  if (!rel.at(2).is_zero()) throw Error("around-B relation is not linear in a");
  out.a_of_b = -rel.at(0) / rel.at(1);

  const RatFunc a = out.a_of_b;
  out.U = cosine(a + b, a + one, b + one);
  out.V = cosine(a + one, a + one, one + one);

  // Around A: arccos U + m arccos V = pi/2. With cos(m t) = T_m(V) and
  // sin(m t) = sin(t) U_{m-1}(V), squaring gives the relation below.
  const unsigned m = (n - 1) / 2;
  const RatFunc T = horner(chebyshev(ChebyshevKind::T, m), out.V);
  const RatFunc Um = horner(chebyshev(ChebyshevKind::U, m - 1), out.V);
  const RatFunc rel2 = out.U * out.U * T * T - (one - out.U * out.U) * (one - out.V * out.V) * Um * Um;
  out.f = integral_numerator(rel2);
  return out;
}

Packing pack2n_numeric_packing(unsigned n, PackerResult* raw) {
  const std::size_t k = 2;
  const Graph g = pack_graph(k, n);
  const std::size_t inner = k * n + 2 * k, outer = inner + 1;
  // Outer face: the outer hub and the first two rim circles after slot 0.
  PackerResult pr = pack_graph_numeric(g, {outer, 2, 3});
  Packing p = normalize_concentric(pr.packing, outer, inner, std::size_t{2}, std::size_t{0});
  if (raw) *raw = std::move(pr);
  return p;
}

namespace {

double eval_exact(const ZPoly& f, double x) { return evaluate(to_rational(f), Rational(x)).get_d(); }

}  // namespace

Pack2nReport pack2n_certify(unsigned n, const Pack2nOptions& opts) {
  Pack2nReport r;
  r.poly = pack2n_polynomial(n);
  const ZFactorList fl = factor_over_Z(r.poly.f, opts.search.seed);
  for (const auto& f : fl.factors) r.factors.push_back({f.poly, f.multiplicity, {}, {}, {}, {}});
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const ZPoly mirrored = compose_linear(r.factors[i].factor, Integer(-1), Integer(1));
    for (std::size_t j = 0; j < r.factors.size(); ++j)
      if (mirrored == r.factors[j].factor) r.factors[i].mirror = j;
  }
  for (auto& pf : r.factors) {
    if (pf.factor.degree() < 2) continue;
    pf.monic = monic_associate(pf.factor, MonicStrategy::reverse_constant);
    pf.search = search_sn_certificate(pf.monic->poly, opts.search);
    if (pf.search->certificate)
      pf.verdict = computability_verdict(*pf.search->certificate, Model::radical,
                                         "the B radius b of the concentric Pack(2," + std::to_string(n) + ") packing");
  }
  if (opts.numeric) {
    try {
      PackerResult raw;
      const Packing p = pack2n_numeric_packing(n, &raw);
      const std::size_t inner = 2 * n + 4;
      Pack2nNumeric num;
      num.b = p.circles[0].radius;
      num.partner = p.circles[1].radius;
      num.a = p.circles[inner].radius;
      num.f_at_b = std::abs(eval_exact(r.poly.f, num.b));
      num.min_factor_at_b = INFINITY;
      for (std::size_t i = 0; i < r.factors.size(); ++i) {
        const double v = std::abs(eval_exact(r.factors[i].factor, num.b));
        if (v < num.min_factor_at_b) {
          num.min_factor_at_b = v;
          num.root_factor = i;
        }
      }
      num.packer_angle_error = raw.angle_error;
      num.check = check_packing(p);
      r.numeric = num;
    } catch (const Error& e) {
      r.numeric_failure = e.what();
    }
  }
  return r;
}

FieldDegree root_of_unity_degree(std::size_t k) {
  const std::uint64_t phi = totient(k);
  return {Integer(static_cast<unsigned long>(phi)), "[Q(zeta_" + std::to_string(k) + "):Q] = phi(" + std::to_string(k) +
                                                        ") = " + std::to_string(phi)};
}

std::vector<ComputabilityVerdict> bipyr_verdicts(std::size_t k) {
  if (k < 3) throw InvalidArgument("Bipyr(k) needs k >= 3");
  FieldDegree fd = root_of_unity_degree(k);
  fd.reason = "in the concentric packing of Bipyr(" + std::to_string(k) + ") the rim centers are the " +
              std::to_string(k) + "-th roots of unity; " + fd.reason;
  const std::string subject = "circle packings of Bipyr(" + std::to_string(k) + ")";
  std::vector<ComputabilityVerdict> out{computability_verdict(fd, Model::quadratic, subject),
                                        computability_verdict(fd, Model::root, subject)};
  for (auto& v : out)
    v.justification.insert(v.justification.begin(),
                           {"concentric normal form", "a Mobius map built with square roots makes the hubs concentric, "
                                                      "so constructing any packing constructs the normal form"});
  return out;
}

}  // namespace galoisdraw
