// Zassenhaus factorization over Z.

#include <algorithm>

#include "galoisdraw/polyalg.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

namespace {

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

ZPoly exact_div(const ZPoly& f, const ZPoly& g) {
  auto q = exact_quotient(f, g);
  if (!q) throw Error("internal: expected exact polynomial division");
  return *q;
}

// Coefficients reduced into (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& f, const Integer& m) {
  const Integer half = m / 2;
  std::vector<Integer> c = f.coeffs();
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return ZPoly(std::move(c));
}

ZPoly mod_coeffs(const ZPoly& f, const Integer& m) {
  std::vector<Integer> c = f.coeffs();
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return ZPoly(std::move(c));
}

Integer isqrt_ceil(const Integer& v) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  if (r * r < v) ++r;
  return r;
}

// Mignotte-style bound on |lc| times any coefficient of a factor of g.
Integer factor_coefficient_bound(const ZPoly& g) {
  Integer norm2 = 0;
  for (const auto& v : g.coeffs()) norm2 += v * v;
  Integer b = abs(g.leading()) * isqrt_ceil(norm2);
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(g.degree()));
  return b;
}

bool squarefree_mod(const ZPoly& g, std::uint64_t p) {
  ModReduction r = mod_reduce(g, p);
  if (r.degree_dropped) return false;
  return gcd(r.poly, derivative(r.poly)).is_one();
}

// Lifts g = lc * prod(f_i) mod p to mod p^k. Factors stay monic.
std::vector<ZPoly> hensel_lift(const ZPoly& g, const std::vector<FpPoly>& fs, const Integer& target, Integer& modulus) {
  const PrimeField& F = fs.front().field();
  const std::uint64_t p = F.modulus();
  const std::size_t r = fs.size();
  const std::uint64_t lc_inv = F.inv(F.reduce(g.leading()));

  // s_i = (prod_{j != i} f_j)^{-1} mod f_i
  std::vector<FpPoly> s;
  s.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    FpPoly others = FpPoly::constant(F, 1);
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = others * fs[j];
    FpXgcd x = xgcd(rem(others, fs[i]), fs[i]);
    if (!x.g.is_one()) throw Error("internal: modular factors are not coprime");
    s.push_back(x.s);
  }

  std::vector<ZPoly> lifted;
  for (const auto& f : fs) lifted.push_back(lift(f));
  modulus = static_cast<unsigned long>(p);
  const Integer P = static_cast<unsigned long>(p);
  while (modulus <= target) {
    ZPoly prod = ZPoly::constant(g.leading());
    for (const auto& f : lifted) prod = prod * f;
    ZPoly diff = g - prod;
    // diff is divisible by the current modulus
    ZPoly e_int = exact_scalar_quotient(diff, modulus);
    FpPoly e = mod_reduce(e_int, p).poly;
    for (std::size_t i = 0; i < r; ++i) {
      FpPoly corr = rem(lc_inv * (e * s[i]), fs[i]);
      lifted[i] = lifted[i] + modulus * lift(corr);
    }
    modulus *= P;
  }
  for (auto& f : lifted) f = mod_coeffs(f, modulus);
  return lifted;
}

// g squarefree, primitive, positive leading coefficient, degree >= 2.
std::vector<ZPoly> zassenhaus(const ZPoly& g, std::uint64_t seed) {
  // Candidate primes: a few good ones, keep the fewest modular factors.
  FpFactorList best;
  std::size_t best_count = ~std::size_t{0};
  int good = 0;
  for (std::uint64_t p = 3; good < 5; p = next_prime(p)) {
    if (!squarefree_mod(g, p)) continue;
    ++good;
    FpFactorList fl = factor_mod_p(g, p, seed);
    if (fl.factors.size() < best_count) {
      best_count = fl.factors.size();
      best = std::move(fl);
    }
    if (best_count == 1) break;
  }
  if (best_count == 1) return {g};

  std::vector<FpPoly> fs;
  for (const auto& f : best.factors) fs.push_back(f.poly);
  const Integer bound = factor_coefficient_bound(g);
  Integer modulus;
  std::vector<ZPoly> lifted = hensel_lift(g, fs, 2 * bound, modulus);

  std::vector<ZPoly> out;
  ZPoly rest = g;
  std::vector<ZPoly> remaining = lifted;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    const std::size_t r = remaining.size();
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      ZPoly cand = ZPoly::constant(rest.leading());
      for (auto i : idx) cand = cand * remaining[i];
      cand = symmetric_mod(cand, modulus);
      if (!cand.is_zero() && cand.degree() > 0) {
        ZPoly h = primitive_part(cand);
        if (auto q = exact_quotient(rest, h)) {
          out.push_back(h);
          rest = *q;
          std::vector<ZPoly> keep;
          for (std::size_t i = 0, k = 0; i < r; ++i) {
            if (k < size && idx[k] == i) {
              ++k;
              continue;
            }
            keep.push_back(remaining[i]);
          }
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == r - size + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) out.push_back(primitive_part(rest));
  return out;
}

}  // namespace

ZPoly ZFactorList::product() const {
  ZPoly r = ZPoly::constant(unit);
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

ZFactorList squarefree_decomposition(const ZPoly& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
  ZFactorList out;
  PrimitiveForm pf = primitive(f);
  out.unit = pf.content.get_num();
  const ZPoly& a = pf.primitive;
  if (a.degree() < 1) {
    out.unit *= a.leading();
    return out;
  }
  // Yun's algorithm over Q, primitive representatives.
  QPoly qa = to_rational(a);
  QPoly qc = gcd(qa, derivative(qa));
  QPoly qw = divrem(qa, qc).quotient;
  QPoly qy = divrem(derivative(qa), qc).quotient;
  QPoly qz = qy - derivative(qw);
  unsigned i = 1;
  while (qw.degree() > 0) {
    QPoly g = gcd(qw, qz);
    if (g.degree() > 0) out.factors.push_back({primitive(g).primitive, i});
    qw = divrem(qw, g).quotient;
    qy = divrem(qz, g).quotient;
    qz = qy - derivative(qw);
    ++i;
  }
  // Fix the unit so the product is exact.
  ZPoly prod = ZPoly::constant(1);
  for (const auto& fac : out.factors)
    for (unsigned k = 0; k < fac.multiplicity; ++k) prod = prod * fac.poly;
  Integer ratio = a.leading() / prod.leading();
  out.unit *= ratio;
  return out;
}

ZFactorList factor_over_Z(const ZPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  if (f.degree() > kFactorDegreeCap)
    throw Unsupported("factorization over Z is limited to degree " + std::to_string(kFactorDegreeCap) + ", got " +
                      std::to_string(f.degree()));
  ZFactorList sq = squarefree_decomposition(f);
  ZFactorList out;
  out.unit = sq.unit;
  for (const auto& part : sq.factors) {
    ZPoly g = part.poly;
    // Pull out powers of x first so 0 is never a modular root issue.
    while (g.degree() > 0 && g.coeffs()[0] == 0) {
      out.factors.push_back({ZPoly::x(), part.multiplicity});
      g = exact_div(g, ZPoly::x());
    }
    if (g.degree() < 1) continue;
    if (g.degree() == 1) {
      out.factors.push_back({g, part.multiplicity});
      continue;
    }
    for (auto& h : zassenhaus(g, seed)) out.factors.push_back({std::move(h), part.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const ZFactor& a, const ZFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return zpoly_less(a.poly, b.poly);
  });
  if (!(out.product() == f)) throw Error("internal: factorization does not multiply back to the input");
  return out;
}

}  // namespace galoisdraw
