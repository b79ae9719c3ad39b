#include <algorithm>
#include <set>

#include "galoisdraw/polyalg.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

namespace {

// Positive divisors of |n|, or nullopt if there would be too many to test
// or |n| does not factor quickly.
std::optional<std::vector<Integer>> small_divisors(const Integer& n, std::size_t cap) {
  IntegerFactorization fac = factor_integer(n, std::chrono::milliseconds(200));
  if (!fac.complete()) return std::nullopt;
  std::size_t count = 1;
  for (const auto& [p, e] : fac.factors) {
    count *= e + 1;
    if (count > cap) return std::nullopt;
  }
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac.factors) {
    const std::size_t k = divs.size();
    Integer pw = 1;
    for (unsigned i = 1; i <= e; ++i) {
      pw *= p;
      for (std::size_t j = 0; j < k; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

struct RootSearch {
  bool complete = false;
  std::optional<ZPoly> linear_factor;
};

RootSearch rational_roots(const ZPoly& f) {
  RootSearch out;
  if (f.coeffs()[0] == 0) {
    out.complete = true;
    out.linear_factor = ZPoly::x();
    return out;
  }
  auto num = small_divisors(f.coeffs()[0], 4096);
  auto den = small_divisors(f.leading(), 4096);
  if (!num || !den || num->size() * den->size() > 200000) return out;
  const QPoly qf = to_rational(f);
  for (const auto& d : *den) {
    for (const auto& n : *num) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational r(sign * n, d);
        if (evaluate(qf, r) == 0) {
          out.complete = true;
          out.linear_factor = ZPoly{Integer(-sign * n), d};
          return out;
        }
      }
    }
  }
  out.complete = true;
  return out;
}

// Degrees of possible factors given one modular factorization.
std::vector<bool> subset_sums(const std::vector<unsigned>& degrees, std::size_t n) {
  std::vector<bool> reach(n + 1, false);
  reach[0] = true;
  for (unsigned d : degrees)
    for (std::size_t s = n; s >= d && s > 0; --s)
      if (reach[s - d]) reach[s] = true;
  return reach;
}

}  // namespace

std::string to_string(IrreducibilityMethod m) {
  switch (m) {
    case IrreducibilityMethod::degree_one: return "degree-one";
    case IrreducibilityMethod::rational_root: return "rational-root";
    case IrreducibilityMethod::stackel: return "stackel";
    case IrreducibilityMethod::single_prime: return "single-prime";
    case IrreducibilityMethod::degree_set: return "degree-set";
    case IrreducibilityMethod::factorization: return "factorization";
    case IrreducibilityMethod::undetermined: return "undetermined";
  }
  return "undetermined";
}

StackelVerdict stackel_irreducible(const ZPoly& f, const Integer& lo, const Integer& hi) {
  if (f.degree() < 1) throw InvalidArgument("Stackel test needs a nonconstant polynomial");
  if (hi < lo) throw InvalidArgument("empty Stackel search range");
  const std::size_t need = 2 * static_cast<std::size_t>(f.degree()) + 1;
  StackelVerdict out;
  for (Integer k = lo; k <= hi && out.witnesses.size() < need; ++k) {
    Integer v = abs(evaluate(f, k));
    if (v >= deterministic_primality_bound()) continue;
    if (primality(v) == Primality::prime) out.witnesses.push_back(k);
  }
  out.proved = out.witnesses.size() >= need;
  return out;
}

bool check_stackel_witnesses(const ZPoly& f, const std::vector<Integer>& witnesses) {
  if (f.degree() < 1) return false;
  std::set<Integer> distinct(witnesses.begin(), witnesses.end());
  if (distinct.size() != witnesses.size()) return false;
  if (witnesses.size() < 2 * static_cast<std::size_t>(f.degree()) + 1) return false;
  for (const auto& k : witnesses) {
    Integer v = abs(evaluate(f, k));
    if (v >= deterministic_primality_bound() || primality(v) != Primality::prime) return false;
  }
  return true;
}

IrreducibilityVerdict irreducible_over_Q(const ZPoly& f_in, const IrreducibilityOptions& opts) {
  if (f_in.degree() < 1) throw InvalidArgument("irreducibility of a constant polynomial");
  IrreducibilityVerdict v;
  const ZPoly f = primitive_part(f_in);
  const int n = f.degree();
  if (n == 1) {
    v.determined = v.irreducible = true;
    v.method = IrreducibilityMethod::degree_one;
    return v;
  }

  RootSearch roots = rational_roots(f);
  if (roots.linear_factor) {
    v.determined = true;
    v.method = IrreducibilityMethod::rational_root;
    v.factor = roots.linear_factor;
    return v;
  }
  if (roots.complete && n <= 3) {
    v.determined = v.irreducible = true;
    v.method = IrreducibilityMethod::rational_root;
    return v;
  }

  if (opts.stackel_range) {
    StackelVerdict s = stackel_irreducible(f, opts.stackel_range->first, opts.stackel_range->second);
    if (s.proved) {
      v.determined = v.irreducible = true;
      v.method = IrreducibilityMethod::stackel;
      v.stackel_witnesses = std::move(s.witnesses);
      return v;
    }
  }

  // One scan over good primes serves both modular rules.
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  std::vector<CycleType> narrowing;
  for (std::uint64_t p = 2; p <= opts.prime_bound; p = next_prime(p)) {
    ModReduction r = mod_reduce(f, p);
    if (r.degree_dropped) continue;
    if (!gcd(r.poly, derivative(r.poly)).is_one()) continue;
    CycleType ct = cycle_type_mod_p(f, p, opts.seed);
    if (ct.degrees.size() == 1) {
      v.determined = v.irreducible = true;
      v.method = IrreducibilityMethod::single_prime;
      v.prime_witnesses = {ct};
      return v;
    }
    std::vector<bool> sums = subset_sums(ct.degrees, static_cast<std::size_t>(n));
    bool shrank = false;
    bool any = false;
    for (int d = 1; d < n; ++d) {
      if (possible[d] && !sums[d]) {
        possible[d] = false;
        shrank = true;
      }
      any = any || possible[d];
    }
    if (shrank) narrowing.push_back(ct);
    if (!any) {
      v.determined = v.irreducible = true;
      v.method = IrreducibilityMethod::degree_set;
      v.prime_witnesses = std::move(narrowing);
      return v;
    }
  }

  try {
    ZFactorList fl = factor_over_Z(f, opts.seed);
    v.determined = true;
    v.method = IrreducibilityMethod::factorization;
    if (fl.factors.size() == 1 && fl.factors[0].multiplicity == 1) {
      v.irreducible = true;
    } else {
      v.factor = fl.factors[0].poly;
    }
  } catch (const Unsupported&) {
    v.method = IrreducibilityMethod::undetermined;
  }
  return v;
}

IrreducibilityVerdict irreducible_over_Q(const QPoly& f, const IrreducibilityOptions& opts) {
  if (f.degree() < 1) throw InvalidArgument("irreducibility of a constant polynomial");
  return irreducible_over_Q(primitive(f).primitive, opts);
}

}  // namespace galoisdraw
