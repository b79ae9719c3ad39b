#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "galoisdraw/exact.hpp"

namespace galoisdraw {

enum class Primality { composite, prime, probable_prime };

/// Miller-Rabin with the first 13 prime bases, which is a proof of primality
/// for n < 3317044064679887385961981. Above that bound the answer degrades to
/// probable_prime (GMP's BPSW-backed test).
Primality primality(const Integer& n);

/// Upper bound (exclusive) of the deterministic Miller-Rabin range.
const Integer& deterministic_primality_bound();

bool is_prime(std::uint64_t n);
/// True for prime and probable_prime.
bool is_prime(const Integer& n);

/// Smallest prime strictly greater than n.
std::uint64_t next_prime(std::uint64_t n);

/// Sieve of Eratosthenes, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

using U64Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

/// Complete factorization by trial division and Pollard-Brent rho; n >= 1.
U64Factorization factor_u64(std::uint64_t n);

struct IntegerFactorization {
  int sign = 1;
  /// Prime (or probable-prime) factors with exponents, ascending.
  std::vector<std::pair<Integer, unsigned>> factors;
  /// Unfactored composite remainder; 1 when the factorization is complete.
  Integer cofactor = 1;

  bool complete() const { return cofactor == 1; }
};

/// Best-effort factorization of a nonzero integer within a wall-clock budget.
IntegerFactorization factor_integer(const Integer& n, std::chrono::milliseconds budget);

}  // namespace galoisdraw
