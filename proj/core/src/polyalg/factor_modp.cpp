// Cantor-Zassenhaus over GF(p).

#include <algorithm>
#include <random>

#include "galoisdraw/polyalg.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

namespace {

using Rng = std::mt19937_64;

bool canonical_less(const FpPoly& a, const FpPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
}

// f = g(x^p) over GF(p) -> g.
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) c.push_back(f.coeffs()[i]);
  return FpPoly(f.field(), std::move(c));
}

void squarefree_into(const FpPoly& f, unsigned mult, std::vector<FpFactor>& out) {
  if (f.degree() < 1) return;
  FpPoly c = gcd(f, derivative(f));
  FpPoly w = quo(f, c);
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = quo(w, y);
    if (fac.degree() > 0) out.push_back({make_monic(fac), i * mult});
    w = std::move(y);
    c = quo(c, w);
    ++i;
  }
  if (c.degree() > 0) squarefree_into(make_monic(pth_root(c)), mult * static_cast<unsigned>(f.modulus()), out);
}

struct DistinctDegree {
  FpPoly poly;
  unsigned degree;
};

std::vector<DistinctDegree> distinct_degree(FpPoly f) {
  std::vector<DistinctDegree> out;
  const auto& F = f.field();
  const FpPoly x = FpPoly::x(F);
  const Integer p = static_cast<unsigned long>(F.modulus());
  FpPoly h = rem(x, f);
  for (unsigned d = 1; 2 * static_cast<int>(d) <= f.degree(); ++d) {
    h = powmod(h, p, f);
    FpPoly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = quo(f, g);
      h = rem(h, f);
    }
  }
  if (f.degree() > 0) out.push_back({make_monic(f), static_cast<unsigned>(f.degree())});
  return out;
}

FpPoly random_poly(const PrimeField& F, int below_degree, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, F.modulus() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = dist(rng);
  return FpPoly(F, std::move(c));
}

// g is a product of distinct monic irreducibles of degree d.
void equal_degree(const FpPoly& g, unsigned d, Rng& rng, std::vector<FpPoly>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  const auto& F = g.field();
  const std::uint64_t p = F.modulus();
  Integer e;
  if (p != 2) {
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    e = (q - 1) / 2;
  }
  for (;;) {
    FpPoly a = random_poly(F, g.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly b(F);
    if (p == 2) {
      // Trace map from GF(2^d) to GF(2).
      FpPoly t = a;
      b = a;
      for (unsigned i = 1; i < d; ++i) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, e, g) - FpPoly::constant(F, 1);
    }
    FpPoly h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(quo(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

FpPoly FpFactorList::product(const PrimeField& F) const {
  FpPoly r = FpPoly::constant(F, unit);
  for (const auto& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) r = r * f.poly;
  return r;
}

std::vector<FpFactor> squarefree_decomposition(const FpPoly& f) {
  if (f.is_zero()) throw InvalidArgument("squarefree decomposition of the zero polynomial");
  std::vector<FpFactor> out;
  squarefree_into(make_monic(f), 1, out);
  return out;
}

FpFactorList factor_mod_p(const FpPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial mod " + std::to_string(f.modulus()));
  FpFactorList out;
  out.unit = f.leading();
  Rng rng(seed);
  for (const auto& sq : squarefree_decomposition(f)) {
    for (const auto& dd : distinct_degree(sq.poly)) {
      std::vector<FpPoly> pieces;
      equal_degree(dd.poly, dd.degree, rng, pieces);
      for (auto& piece : pieces) out.factors.push_back({std::move(piece), sq.multiplicity});
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.poly == b.poly) return a.multiplicity < b.multiplicity;
    return canonical_less(a.poly, b.poly);
  });
  return out;
}

FpFactorList factor_mod_p(const ZPoly& f, std::uint64_t p, std::uint64_t seed) {
  ModReduction r = mod_reduce(f, p);
  if (r.poly.is_zero()) throw InvalidArgument("polynomial vanishes mod " + std::to_string(p));
  return factor_mod_p(r.poly, seed);
}

bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto& F = f.field();
  const FpPoly x = FpPoly::x(F);
  const Integer p = static_cast<unsigned long>(F.modulus());
  // frob[k] = x^(p^k) mod f
  std::vector<FpPoly> frob{rem(x, f)};
  for (int k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p, f));
  if (!(frob[static_cast<std::size_t>(n)] == rem(x, f))) return false;
  for (const auto& [q, e] : factor_u64(static_cast<std::uint64_t>(n))) {
    (void)e;
    FpPoly g = gcd(frob[static_cast<std::size_t>(n / static_cast<int>(q))] - x, f);
    if (!g.is_one()) return false;
  }
  return true;
}

std::string to_string(const CycleType& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.degrees[i]);
  }
  return s + "}";
}

CycleType cycle_type_mod_p(const ZPoly& f, std::uint64_t p, std::uint64_t seed) {
  ModReduction r = mod_reduce(f, p);
  if (r.degree_dropped)
    throw InvalidArgument(std::to_string(p) + " divides the leading coefficient");
  CycleType ct;
  ct.prime = p;
  FpFactorList fl = factor_mod_p(r.poly, seed);
  for (const auto& fac : fl.factors) {
    if (fac.multiplicity > 1) ct.squarefree = false;
    for (unsigned i = 0; i < fac.multiplicity; ++i) ct.degrees.push_back(static_cast<unsigned>(fac.poly.degree()));
  }
  std::sort(ct.degrees.begin(), ct.degrees.end());
  return ct;
}

ZPoly chebyshev(ChebyshevKind kind, unsigned m) {
  ZPoly prev = ZPoly::constant(1);
  if (m == 0) return prev;
  ZPoly cur = kind == ChebyshevKind::T ? ZPoly::x() : ZPoly{0, 2};
  const ZPoly two_x{0, 2};
  for (unsigned i = 1; i < m; ++i) {
    ZPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace galoisdraw
