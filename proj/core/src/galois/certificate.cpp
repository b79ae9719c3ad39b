#include <algorithm>
#include <numeric>

#include "galoisdraw/galois.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

bool is_ncycle_pattern(const std::vector<unsigned>& degrees, unsigned n) {
  if (n < 2) return false;
  std::vector<unsigned> d = degrees;
  std::sort(d.begin(), d.end());
  return d == std::vector<unsigned>{1, n - 1};
}

bool is_transposition_pattern(const std::vector<unsigned>& degrees) {
  int twos = 0;
  for (unsigned d : degrees) {
    if (d == 2) {
      ++twos;
    } else if (d % 2 == 0) {
      return false;
    }
  }
  return twos == 1;
}

std::uint64_t odd_lcm(const std::vector<unsigned>& degrees) {
  std::uint64_t l = 1;
  for (unsigned d : degrees)
    if (d % 2 == 1) l = std::lcm(l, std::uint64_t{d});
  return l;
}

DedekindSample dedekind_sample(const ZPoly& f, const Integer& disc, std::uint64_t p, std::uint64_t seed) {
  DedekindSample out;
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  if (disc == 0) {
    out.rejection = "discriminant is zero";
    return out;
  }
  if (mpz_divisible_ui_p(disc.get_mpz_t(), p)) {
    out.rejection = std::to_string(p) + " divides the discriminant";
    return out;
  }
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) {
    out.rejection = std::to_string(p) + " divides the leading coefficient";
    return out;
  }
  out.cycle_type = cycle_type_mod_p(f, p, seed);
  return out;
}

DedekindSample dedekind_sample(const ZPoly& f, std::uint64_t p, std::uint64_t seed) {
  return dedekind_sample(f, discriminant(f), p, seed);
}

namespace {

std::vector<std::string> certificate_lemmas() {
  return {
      "an irreducible polynomial has a transitive Galois group",
      "Dedekind: for p not dividing disc(f), the degrees of the irreducible factors of f mod p are the cycle "
      "lengths of an element of the Galois group",
      "a permutation with one 2-cycle and otherwise odd cycles, raised to the lcm of the odd lengths, is a "
      "transposition",
      "a transitive subgroup of S_n containing a transposition and an (n-1)-cycle is S_n",
  };
}

PrimeEvidence make_evidence(const ZPoly& f, const CycleType& ct, std::uint64_t seed) {
  PrimeEvidence e;
  e.p = ct.prime;
  e.cycle_type = ct;
  for (const auto& fac : factor_mod_p(f, ct.prime, seed).factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) e.factors.push_back(fac.poly);
  e.power = odd_lcm(ct.degrees);
  return e;
}

}  // namespace

SnSearch search_sn_certificate(const ZPoly& f, const SnSearchOptions& opts) {
  if (f.degree() < 2) throw InvalidArgument("S_n certification needs degree at least 2");
  if (!f.is_monic()) throw InvalidArgument("S_n certification needs a monic polynomial");
  const unsigned n = static_cast<unsigned>(f.degree());
  SnSearch out;

  IrreducibilityOptions io = opts.irreducibility;
  io.seed = opts.seed;
  IrreducibilityVerdict iv = irreducible_over_Q(f, io);
  if (!iv.determined) throw Unsupported("irreducibility of the polynomial could not be decided");
  if (!iv.irreducible) {
    out.failure = "polynomial is reducible";
    return out;
  }

  const Integer disc = discriminant(f);
  std::optional<CycleType> ncycle, transposition;
  for (std::uint64_t p = 2; p <= opts.prime_bound; p = next_prime(p)) {
    DedekindSample s = dedekind_sample(f, disc, p, opts.seed);
    if (!s.cycle_type) {
      out.log.push_back({p, std::nullopt, s.rejection});
      continue;
    }
    std::string note;
    if (!ncycle && is_ncycle_pattern(s.cycle_type->degrees, n)) {
      ncycle = s.cycle_type;
      note = "(n-1)-cycle";
    }
    if (!transposition && is_transposition_pattern(s.cycle_type->degrees)) {
      transposition = s.cycle_type;
      note += note.empty() ? "transposition pattern" : ", transposition pattern";
    }
    out.log.push_back({p, s.cycle_type, note});
    if (ncycle && transposition) break;
  }
  if (!ncycle || !transposition) {
    out.failure = std::string("no prime up to ") + std::to_string(opts.prime_bound) + " shows " +
                  (!ncycle ? "an (n-1)-cycle" : "a transposition pattern");
    return out;
  }

  SnCertificate c;
  c.poly = f;
  c.degree = n;
  c.irreducibility = std::move(iv);
  c.discriminant = disc;
  c.ncycle = make_evidence(f, *ncycle, opts.seed);
  c.ncycle.power = 1;
  c.transposition = make_evidence(f, *transposition, opts.seed);
  c.conclusion = "S_" + std::to_string(n);
  c.lemmas = certificate_lemmas();
  out.certificate = std::move(c);
  return out;
}

namespace {

Verification fail(std::string why) { return {false, std::move(why)}; }

// Checks one stored Dedekind sample; empty string on success.
std::string check_evidence(const SnCertificate& c, const PrimeEvidence& e, const char* role) {
  const std::string tag = std::string(role) + " prime " + std::to_string(e.p) + ": ";
  if (e.p < 2 || !is_prime(e.p)) return tag + "not a prime";
  if (e.cycle_type.prime != e.p) return tag + "cycle type recorded for a different prime";
  if (mpz_divisible_ui_p(c.discriminant.get_mpz_t(), e.p)) return tag + "prime divides discriminant";
  unsigned sum = 0;
  for (unsigned d : e.cycle_type.degrees) sum += d;
  if (sum != c.degree) return tag + "cycle lengths do not sum to the degree";
  if (e.factors.size() != e.cycle_type.degrees.size()) return tag + "factor count does not match the cycle type";
  PrimeField F(e.p);
  FpPoly prod = FpPoly::constant(F, 1);
  std::vector<unsigned> degs;
  for (const auto& fac : e.factors) {
    if (fac.modulus() != e.p) return tag + "factor over the wrong field";
    if (!fac.is_monic()) return tag + "factor is not monic";
    if (!is_irreducible(fac)) return tag + "factor is reducible mod p";
    degs.push_back(static_cast<unsigned>(fac.degree()));
    prod = prod * fac;
  }
  if (!(prod == mod_reduce(c.poly, e.p).poly)) return tag + "factors do not multiply to the polynomial mod p";
  std::sort(degs.begin(), degs.end());
  std::vector<unsigned> claimed = e.cycle_type.degrees;
  std::sort(claimed.begin(), claimed.end());
  if (degs != claimed) return tag + "factor degrees do not match the cycle type";
  // p does not divide disc, so the reduction is squarefree; the flag must agree.
  if (!e.cycle_type.squarefree) return tag + "cycle type flagged as not squarefree";
  return {};
}

std::string check_irreducibility(const SnCertificate& c) {
  const IrreducibilityVerdict& v = c.irreducibility;
  if (!v.determined || !v.irreducible) return "irreducibility not proved";
  const ZPoly& f = c.poly;
  const int n = f.degree();
  switch (v.method) {
    case IrreducibilityMethod::degree_one:
      return n == 1 ? std::string{} : "degree-one witness for a polynomial of degree " + std::to_string(n);
    case IrreducibilityMethod::rational_root: {
      if (n > 3) return "rational-root test is only conclusive up to degree 3";
      IrreducibilityVerdict r = irreducible_over_Q(f, IrreducibilityOptions{std::nullopt, 1, kDefaultSeed});
      if (!(r.determined && r.irreducible)) return "rational-root witness does not re-verify";
      return {};
    }
    case IrreducibilityMethod::stackel:
      return check_stackel_witnesses(f, v.stackel_witnesses) ? std::string{} : "Stackel witnesses do not re-verify";
    case IrreducibilityMethod::single_prime: {
      if (v.prime_witnesses.size() != 1) return "single-prime witness must name exactly one prime";
      if (v.prime_witnesses[0].degrees != std::vector<unsigned>{static_cast<unsigned>(n)})
        return "single-prime witness does not record an irreducible reduction";
      const std::uint64_t p = v.prime_witnesses[0].prime;
      if (!is_prime(p)) return "single-prime witness is not prime";
      ModReduction r = mod_reduce(f, p);
      if (r.degree_dropped || !is_irreducible(r.poly)) return "polynomial is not irreducible mod the witness prime";
      return {};
    }
    case IrreducibilityMethod::degree_set: {
      std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
      for (const auto& w : v.prime_witnesses) {
        if (!is_prime(w.prime)) return "degree-set witness is not prime";
        ModReduction r = mod_reduce(f, w.prime);
        if (r.degree_dropped || !gcd(r.poly, derivative(r.poly)).is_one())
          return "degree-set witness prime is not a good prime";
        CycleType ct = cycle_type_mod_p(f, w.prime);
        if (ct.degrees != w.degrees) return "degree-set witness cycle type does not re-verify";
        std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
        reach[0] = true;
        for (unsigned d : ct.degrees)
          for (std::size_t s = static_cast<std::size_t>(n); s >= d && s > 0; --s)
            if (reach[s - d]) reach[s] = true;
        for (int d = 1; d < n; ++d) possible[d] = possible[d] && reach[d];
      }
      for (int d = 1; d < n; ++d)
        if (possible[d]) return "degree sets do not rule out a factor of degree " + std::to_string(d);
      return {};
    }
    case IrreducibilityMethod::factorization: {
      ZFactorList fl = factor_over_Z(f);
      if (fl.factors.size() != 1 || fl.factors[0].multiplicity != 1) return "polynomial factors over Z";
      return {};
    }
    case IrreducibilityMethod::undetermined:
      break;
  }
  return "irreducibility not proved";
}

}  // namespace

Verification verify_sn_certificate(const SnCertificate& c) {
  try {
    const int n = c.poly.degree();
    if (n < 2) return fail("polynomial degree below 2");
    if (static_cast<unsigned>(n) != c.degree) return fail("degree field does not match the polynomial");
    if (!c.poly.is_monic()) return fail("polynomial is not monic");
    if (c.conclusion != "S_" + std::to_string(n)) return fail("conclusion does not name S_" + std::to_string(n));
    if (discriminant(c.poly) != c.discriminant) return fail("discriminant does not match the polynomial");
    if (c.discriminant == 0) return fail("discriminant is zero");
    if (auto why = check_evidence(c, c.ncycle, "(n-1)-cycle"); !why.empty()) return fail(why);
    if (!is_ncycle_pattern(c.ncycle.cycle_type.degrees, c.degree))
      return fail("cycle type at " + std::to_string(c.ncycle.p) + " is not {1, n-1}");
    if (auto why = check_evidence(c, c.transposition, "transposition"); !why.empty()) return fail(why);
    const auto& td = c.transposition.cycle_type.degrees;
    const auto evens = std::count_if(td.begin(), td.end(), [](unsigned d) { return d % 2 == 0; });
    if (evens > 1) return fail("transposition pattern has two even cycles");
    if (!is_transposition_pattern(td)) return fail("transposition pattern has no 2-cycle");
    if (c.transposition.power != odd_lcm(td)) return fail("transposition power is not the lcm of the odd cycles");
    if (auto why = check_irreducibility(c); !why.empty()) return fail(why);
    if (c.lemmas != certificate_lemmas()) return fail("lemma chain does not match the S_n argument");
  } catch (const std::exception& ex) {
    return fail(std::string("verification error: ") + ex.what());
  }
  return {true, "accepted"};
}

}  // namespace galoisdraw
