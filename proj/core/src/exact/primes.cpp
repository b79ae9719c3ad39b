#include "galoisdraw/primes.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace galoisdraw {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin(const Integer& n, unsigned long a) {
  Integer d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  Integer x;
  Integer base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
  }
  return false;
}

u64 pollard_brent(u64 n, u64 c) {
  if (n % 2 == 0) return 2;
  auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
  u64 y = 2, g = 1, q = 1, x = 0, ys = 0;
  const u64 m = 128;
  for (u64 r = 1; g == 1; r <<= 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    for (u64 k = 0; k < r && g == 1; k += m) {
      ys = y;
      for (u64 i = 0; i < std::min(m, r - k); ++i) {
        y = f(y);
        q = mulmod(q, x > y ? x - y : y - x, n);
      }
      g = std::gcd(q, n);
    }
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g;
}

void factor_u64_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (u64 c = 1;; ++c) {
    u64 d = pollard_brent(n, c);
    if (d != n && d != 1) {
      factor_u64_into(d, out);
      factor_u64_into(n / d, out);
      return;
    }
  }
}

}  // namespace

const Integer& deterministic_primality_bound() {
  static const Integer bound("3317044064679887385961981");
  return bound;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : kSmallPrimes) {
    if (a == 41) break;  // first 12 bases suffice below 2^64
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

Primality primality(const Integer& n) {
  if (n < 2) return Primality::composite;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<u64>(n.get_ui())) ? Primality::prime : Primality::composite;
  for (u64 p : kSmallPrimes)
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Primality::composite;
  if (n < deterministic_primality_bound()) {
    for (u64 a : kSmallPrimes)
      if (!miller_rabin(n, a)) return Primality::composite;
    return Primality::prime;
  }
  int r = mpz_probab_prime_p(n.get_mpz_t(), 30);
  if (r == 0) return Primality::composite;
  return r == 2 ? Primality::prime : Primality::probable_prime;
}

bool is_prime(const Integer& n) { return primality(n) != Primality::composite; }

u64 next_prime(u64 n) {
  u64 c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

U64Factorization factor_u64(u64 n) {
  if (n == 0) throw InvalidArgument("cannot factor 0");
  std::map<u64, unsigned> acc;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++acc[p];
      n /= p;
    }
  }
  factor_u64_into(n, acc);
  return {acc.begin(), acc.end()};
}

namespace {

using Clock = std::chrono::steady_clock;

// Pollard-Brent over GMP integers; returns 0 if the deadline passes.
Integer pollard_brent_big(const Integer& n, unsigned long c, Clock::time_point deadline) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  Integer y = 2, g = 1, q = 1, x, ys, t;
  const unsigned long m = 256;
  auto f = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  for (unsigned long r = 1; g == 1; r <<= 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) f(y);
    for (unsigned long k = 0; k < r && g == 1; k += m) {
      if (Clock::now() > deadline) return 0;
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        f(y);
        t = x - y;
        q *= t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
    }
  }
  if (g == n) {
    do {
      f(ys);
      t = x - ys;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

}  // namespace

IntegerFactorization factor_integer(const Integer& n_in, std::chrono::milliseconds budget) {
  if (n_in == 0) throw InvalidArgument("cannot factor 0");
  const auto deadline = Clock::now() + budget;
  IntegerFactorization out;
  out.sign = n_in < 0 ? -1 : 1;
  Integer n = abs(n_in);
  std::map<Integer, unsigned> acc;

  for (u64 p : primes_up_to(100000)) {
    if (n == 1) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++acc[Integer(static_cast<unsigned long>(p))];
    }
  }

  // Work list of (value, multiplicity) still to split.
  std::vector<std::pair<Integer, unsigned>> work;
  if (n != 1) work.emplace_back(n, 1);
  while (!work.empty()) {
    auto [m, mult] = work.back();
    work.pop_back();
    if (m == 1) continue;
    if (primality(m) != Primality::composite) {
      acc[m] += mult;
      continue;
    }
    bool split = false;
    // Trial division left no factor below 2^16, so roots have at least 17 bits.
    for (unsigned long k = mpz_sizeinbase(m.get_mpz_t(), 2) / 16; k >= 2; --k) {
      Integer root;
      if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) != 0) {
        work.emplace_back(root, mult * static_cast<unsigned>(k));
        split = true;
        break;
      }
    }
    if (split) continue;
    Integer d = 0;
    for (unsigned long c = 1; c < 64 && (d == 0 || d == m); ++c) {
      d = pollard_brent_big(m, c, deadline);
      if (d == 0) break;
    }
    if (d == 0 || d == m) {
      out.cofactor *= m;
      for (unsigned i = 1; i < mult; ++i) out.cofactor *= m;
      continue;
    }
    Integer e = m / d;
    // Merge shared factors so multiplicities stay right.
    Integer g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t());
    if (g != 1) {
      work.emplace_back(g, mult * 2);
      work.emplace_back(d / g, mult);
      work.emplace_back(e / g, mult);
    } else {
      work.emplace_back(d, mult);
      work.emplace_back(e, mult);
    }
  }
  // Factors found separately may coincide with or divide one another; they
  // are primes, so duplicates simply accumulate in the map.
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

}  // namespace galoisdraw
