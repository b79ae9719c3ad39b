#pragma once

// S_n certificates from Frobenius cycle types, computability verdicts, and
// the totient machinery behind root-tree lower bounds.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "galoisdraw/exact.hpp"
#include "galoisdraw/polyalg.hpp"

namespace galoisdraw {

/// One Dedekind sample kept as a certificate entry. The monic factors mod p
/// are stored so a verifier can check the cycle type without factoring.
struct PrimeEvidence {
  std::uint64_t p = 0;
  CycleType cycle_type;
  std::vector<FpPoly> factors;
  /// lcm of the odd cycle lengths; only meaningful for the transposition entry.
  std::uint64_t power = 1;
};

struct SnCertificate {
  ZPoly poly;
  unsigned degree = 0;
  IrreducibilityVerdict irreducibility;
  Integer discriminant;
  PrimeEvidence ncycle;
  PrimeEvidence transposition;
  std::string conclusion;
  std::vector<std::string> lemmas;
};

/// Exactly {1, n-1}.
bool is_ncycle_pattern(const std::vector<unsigned>& degrees, unsigned n);
/// Exactly one entry equal to 2, every other entry odd.
bool is_transposition_pattern(const std::vector<unsigned>& degrees);
/// lcm of the odd entries.
std::uint64_t odd_lcm(const std::vector<unsigned>& degrees);

struct DedekindSample {
  std::optional<CycleType> cycle_type;
  /// Set when the sample is rejected.
  std::string rejection;
};

/// Cycle type of Frobenius at p; rejected when p divides disc(f) or lc(f).
DedekindSample dedekind_sample(const ZPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultSeed);
/// Same, with the discriminant already known.
DedekindSample dedekind_sample(const ZPoly& f, const Integer& disc, std::uint64_t p, std::uint64_t seed = kDefaultSeed);

struct ScanEntry {
  std::uint64_t p;
  /// Empty when p was skipped.
  std::optional<CycleType> cycle_type;
  std::string note;
};

struct SnSearch {
  std::optional<SnCertificate> certificate;
  std::vector<ScanEntry> log;
  std::string failure;
};

struct SnSearchOptions {
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = kDefaultSeed;
  IrreducibilityOptions irreducibility;
};

/// Throws InvalidArgument unless f is monic of degree >= 2, and Unsupported
/// when irreducibility cannot be decided.
SnSearch search_sn_certificate(const ZPoly& f, const SnSearchOptions& opts = {});

struct Verification {
  bool ok = false;
  std::string diagnostic;
};

Verification verify_sn_certificate(const SnCertificate& cert);

// ---- verdicts -------------------------------------------------------------

enum class Model { quadratic, radical, root };
enum class Conclusion { impossible, degree_lower_bound, unknown };

std::string to_string(Model m);
std::string to_string(Conclusion c);

struct Citation {
  std::string lemma;
  std::string detail;
};

/// Degree over Q of the field generated by a drawing coordinate.
struct FieldDegree {
  Integer degree;
  std::string reason;
};

using VerdictEvidence = std::variant<FieldDegree, SnCertificate>;

struct ComputabilityVerdict {
  Model model = Model::radical;
  std::string subject;
  Conclusion conclusion = Conclusion::unknown;
  /// Lower bound on the root degree for degree_lower_bound.
  Integer bound = 0;
  std::vector<Citation> justification;
};

/// quadratic and root take a FieldDegree, radical takes an SnCertificate;
/// anything else throws InvalidArgument.
ComputabilityVerdict computability_verdict(const VerdictEvidence& evidence, Model model, std::string subject = {});

std::string describe(const ComputabilityVerdict& v);

// ---- number theory --------------------------------------------------------

std::uint64_t totient(std::uint64_t n);
std::uint64_t largest_prime_factor(std::uint64_t n);
bool is_power_of_two(const Integer& n);
std::vector<std::uint64_t> sophie_germain_scan(std::uint64_t limit);

struct PhiExponent {
  std::uint64_t p;
  double exponent;  // log_p of the largest prime factor of p - 1
};

struct PhiExponentScan {
  std::vector<PhiExponent> entries;
  std::size_t at_least_threshold = 0;
  double threshold = 0.677;
  double fraction() const { return entries.empty() ? 0.0 : double(at_least_threshold) / double(entries.size()); }
};

/// Primes 3 <= p <= limit.
PhiExponentScan phi_exponent_scan(std::uint64_t limit, double threshold = 0.677);

}  // namespace galoisdraw
