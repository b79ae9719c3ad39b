#include <cmath>

#include "galoisdraw/galois.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw {

std::string to_string(Model m) {
  switch (m) {
    case Model::quadratic: return "quadratic";
    case Model::radical: return "radical";
    case Model::root: return "root";
  }
  return "?";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::impossible: return "impossible";
    case Conclusion::degree_lower_bound: return "degree_lower_bound";
    case Conclusion::unknown: return "unknown";
  }
  return "?";
}

bool is_power_of_two(const Integer& n) { return n > 0 && mpz_popcount(n.get_mpz_t()) == 1; }

namespace {

Integer largest_prime_factor_big(const Integer& n) {
  IntegerFactorization f = factor_integer(n, std::chrono::milliseconds(10000));
  if (!f.complete()) throw Error("could not factor field degree " + n.get_str());
  return f.factors.back().first;
}

}  // namespace

ComputabilityVerdict computability_verdict(const VerdictEvidence& evidence, Model model, std::string subject) {
  ComputabilityVerdict v;
  v.model = model;
  v.subject = std::move(subject);
  if (model == Model::radical) {
    const auto* cert = std::get_if<SnCertificate>(&evidence);
    if (!cert) throw InvalidArgument("the radical model needs an S_n certificate as evidence");
    v.justification.push_back({"S_n certificate", cert->conclusion + " for a degree-" + std::to_string(cert->degree) +
                                                       " polynomial, primes " + std::to_string(cert->ncycle.p) +
                                                       " and " + std::to_string(cert->transposition.p)});
    if (cert->degree >= 5) {
      v.conclusion = Conclusion::impossible;
      v.justification.push_back(
          {"radical towers", "numbers computed by a radical tree lie in solvable extensions; S_" +
                                 std::to_string(cert->degree) + " is not solvable"});
    } else {
      v.justification.push_back({"radical towers", "S_n is solvable for n < 5; no conclusion"});
    }
    return v;
  }

  const auto* fd = std::get_if<FieldDegree>(&evidence);
  if (!fd) throw InvalidArgument("the " + to_string(model) + " model needs a field degree as evidence");
  if (fd->degree < 1) throw InvalidArgument("field degree must be positive");
  if (!fd->reason.empty()) v.justification.push_back({"field degree", fd->reason});
  if (model == Model::quadratic) {
    if (is_power_of_two(fd->degree)) {
      v.justification.push_back({"quadratic towers", "degree " + fd->degree.get_str() +
                                                         " is a power of two; no conclusion"});
    } else {
      v.conclusion = Conclusion::impossible;
      v.justification.push_back({"quadratic towers", "a quadratic tree only reaches fields of 2-power degree; " +
                                                         fd->degree.get_str() + " is not a power of two"});
    }
    return v;
  }
  // root(D): field degrees reachable by degree-D roots are D-smooth.
  if (fd->degree == 1) {
    v.justification.push_back({"smooth degrees", "degree 1 gives no bound"});
    return v;
  }
  Integer q = largest_prime_factor_big(fd->degree);
  v.conclusion = Conclusion::degree_lower_bound;
  v.bound = q;
  v.justification.push_back({"smooth degrees", "a degree-D root tree only reaches D-smooth field degrees; " +
                                                   fd->degree.get_str() + " has prime factor " + q.get_str()});
  return v;
}

std::string describe(const ComputabilityVerdict& v) {
  std::string s = to_string(v.model) + " computation tree";
  if (!v.subject.empty()) s += " for " + v.subject;
  s += ": ";
  switch (v.conclusion) {
    case Conclusion::impossible: s += "impossible"; break;
    case Conclusion::degree_lower_bound: s += "degree >= " + v.bound.get_str(); break;
    case Conclusion::unknown: s += "unknown"; break;
  }
  return s;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("totient of 0");
  std::uint64_t r = n;
  for (const auto& [p, e] : factor_u64(n)) {
    (void)e;
    r = r / p * (p - 1);
  }
  return r;
}

std::uint64_t largest_prime_factor(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("largest prime factor needs n >= 2");
  return factor_u64(n).back().first;
}

std::vector<std::uint64_t> sophie_germain_scan(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  for (std::uint64_t p : primes_up_to(limit))
    if (is_prime(2 * p + 1)) out.push_back(p);
  return out;
}

PhiExponentScan phi_exponent_scan(std::uint64_t limit, double threshold) {
  PhiExponentScan s;
  s.threshold = threshold;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (p < 3) continue;
    const double e = std::log(double(largest_prime_factor(p - 1))) / std::log(double(p));
    s.entries.push_back({p, e});
    if (e >= threshold) ++s.at_least_threshold;
  }
  return s;
}

}  // namespace galoisdraw
