#pragma once

// Factorization over GF(p) and Z, irreducibility, resultants and
// discriminants, elimination, Chebyshev polynomials.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoisdraw/bivariate.hpp"
#include "galoisdraw/exact.hpp"
#include "galoisdraw/modp.hpp"

namespace galoisdraw {

/// Default seed for the randomized equal-degree splitting.
inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

/// factor_over_Z refuses inputs above this degree.
inline constexpr int kFactorDegreeCap = 32;

// ---- GF(p) ---------------------------------------------------------------

struct FpFactor {
  FpPoly poly;  // monic irreducible
  unsigned multiplicity = 1;
};

struct FpFactorList {
  std::uint64_t unit = 1;
  /// Sorted by degree, then coefficients.
  std::vector<FpFactor> factors;

  FpPoly product(const PrimeField& F) const;
};

/// Complete factorization of a nonzero polynomial over GF(p).
FpFactorList factor_mod_p(const FpPoly& f, std::uint64_t seed = kDefaultSeed);
/// Reduces f modulo p first; throws InvalidArgument if f is 0 mod p.
FpFactorList factor_mod_p(const ZPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

/// Squarefree decomposition over GF(p): monic factors with multiplicities,
/// pairwise coprime.
std::vector<FpFactor> squarefree_decomposition(const FpPoly& f);

/// Rabin's test: x^(p^n) = x mod f and gcd(x^(p^(n/q)) - x, f) = 1 for every
/// prime q | n.
bool is_irreducible(const FpPoly& f);

struct CycleType {
  /// Irreducible factor degrees, counted with multiplicity, ascending.
  std::vector<unsigned> degrees;
  std::uint64_t prime = 0;
  bool squarefree = true;

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

std::string to_string(const CycleType& c);

/// Factor degrees of f mod p. Throws InvalidArgument if p divides lc(f).
CycleType cycle_type_mod_p(const ZPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

// ---- Z -------------------------------------------------------------------

struct ZFactor {
  ZPoly poly;  // primitive, positive leading coefficient
  unsigned multiplicity = 1;
};

struct ZFactorList {
  Integer unit = 1;
  std::vector<ZFactor> factors;

  ZPoly product() const;
};

/// Squarefree decomposition over Z (Yun), primitive factors with
/// multiplicities; unit carries the signed content.
ZFactorList squarefree_decomposition(const ZPoly& f);

/// Zassenhaus: modular factorization, multifactor Hensel lifting, subset
/// recombination. Throws Unsupported above kFactorDegreeCap.
ZFactorList factor_over_Z(const ZPoly& f, std::uint64_t seed = kDefaultSeed);

enum class IrreducibilityMethod {
  degree_one,
  rational_root,
  stackel,
  single_prime,
  degree_set,
  factorization,
  undetermined,
};

std::string to_string(IrreducibilityMethod m);

struct IrreducibilityVerdict {
  bool determined = false;
  bool irreducible = false;
  IrreducibilityMethod method = IrreducibilityMethod::undetermined;
  /// Arguments k with |f(k)| prime (Stackel).
  std::vector<Integer> stackel_witnesses;
  /// Primes whose factor degrees decided the question.
  std::vector<CycleType> prime_witnesses;
  /// A proper factor when reducible.
  std::optional<ZPoly> factor;
};

struct IrreducibilityOptions {
  /// Inclusive range for the Stackel scan; skipped when empty.
  std::optional<std::pair<Integer, Integer>> stackel_range;
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = kDefaultSeed;
};

IrreducibilityVerdict irreducible_over_Q(const ZPoly& f, const IrreducibilityOptions& opts = {});
IrreducibilityVerdict irreducible_over_Q(const QPoly& f, const IrreducibilityOptions& opts = {});

struct StackelVerdict {
  bool proved = false;
  /// Arguments k in scan order; at most 2 deg f + 1 are kept.
  std::vector<Integer> witnesses;
};

/// If |f(k)| is prime for 2n+1 integers k then f is irreducible. Values at or
/// above the deterministic Miller-Rabin bound are not counted.
StackelVerdict stackel_irreducible(const ZPoly& f, const Integer& lo, const Integer& hi);

/// Returns true iff f is irreducible given |f(k)| prime at each witness.
bool check_stackel_witnesses(const ZPoly& f, const std::vector<Integer>& witnesses);

// ---- resultants ----------------------------------------------------------

/// Subresultant PRS. Throws InvalidArgument on a zero input.
Integer resultant(const ZPoly& f, const ZPoly& g);
Rational resultant(const QPoly& f, const QPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f). Throws InvalidArgument if deg f < 2.
Integer discriminant(const ZPoly& f);
Rational discriminant(const QPoly& f);

struct Elimination {
  /// Res_a(P, Q) as a polynomial in b.
  ZPoly raw;
  /// Squarefree part of the primitive part of raw.
  ZPoly squarefree_primitive;
};

/// Eliminates a; throws InvalidArgument if either input is free of a.
Elimination eliminate_resultant(const BiPoly& P, const BiPoly& Q);

/// Resultant in a with Z[b] coefficients (no post-processing).
ZPoly resultant_in_a(const BiPoly& P, const BiPoly& Q);

enum class ChebyshevKind { T, U };
ZPoly chebyshev(ChebyshevKind kind, unsigned m);

}  // namespace galoisdraw
