#include <algorithm>
#include <charconv>
#include <map>

#include "galoisdraw/cli.hpp"
#include "galoisdraw/text.hpp"

namespace galoisdraw::cli {

namespace {

std::string fp_coefficients(const FpPoly& f) {
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f.coeffs()[i]);
  }
  return s.empty() ? "0" : s;
}

std::uint64_t parse_u64(std::string_view tok, const char* what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size())
    throw InvalidArgument(std::string("malformed ") + what + " '" + std::string(tok) + "'");
  return v;
}

FpPoly parse_fp(const std::string& s, const PrimeField& F) {
  std::vector<std::uint64_t> c;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::uint64_t v = parse_u64(std::string_view(s).substr(start, comma - start), "residue");
    if (v >= F.modulus()) throw InvalidArgument("residue " + std::to_string(v) + " is not reduced mod p");
    c.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return FpPoly(F, std::move(c));
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw InvalidArgument(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::uint64_t get_u64(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw InvalidArgument(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

std::vector<unsigned> get_degrees(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InvalidArgument(std::string("field '") + key + "' must be an array");
  std::vector<unsigned> out;
  for (const auto& d : v) {
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() > 1u << 20)
      throw InvalidArgument(std::string("field '") + key + "' holds a bad degree");
    out.push_back(d.get<unsigned>());
  }
  return out;
}

Json degrees_json(const std::vector<unsigned>& d) { return Json(d); }

Json evidence_json(const PrimeEvidence& e, bool with_power) {
  Json j;
  j["p"] = e.p;
  j["cycle_type"] = degrees_json(e.cycle_type.degrees);
  if (with_power) j["power"] = e.power;
  Json fs = Json::array();
  for (const auto& f : e.factors) fs.push_back(fp_coefficients(f));
  j["factors"] = fs;
  return j;
}

PrimeEvidence evidence_from_json(const Json& j, bool with_power) {
  PrimeEvidence e;
  e.p = get_u64(j, "p");
  e.cycle_type.prime = e.p;
  e.cycle_type.degrees = get_degrees(j, "cycle_type");
  std::sort(e.cycle_type.degrees.begin(), e.cycle_type.degrees.end());
  e.power = with_power ? get_u64(j, "power") : 1;
  const Json& fs = field(j, "factors");
  if (!fs.is_array()) throw InvalidArgument("field 'factors' must be an array");
  PrimeField F(e.p);
  for (const auto& f : fs) {
    if (!f.is_string()) throw InvalidArgument("factor entries must be strings");
    e.factors.push_back(parse_fp(f.get<std::string>(), F));
  }
  return e;
}

IrreducibilityMethod method_from_string(const std::string& s) {
  for (auto m : {IrreducibilityMethod::degree_one, IrreducibilityMethod::rational_root, IrreducibilityMethod::stackel,
                 IrreducibilityMethod::single_prime, IrreducibilityMethod::degree_set,
                 IrreducibilityMethod::factorization, IrreducibilityMethod::undetermined})
    if (to_string(m) == s) return m;
  throw InvalidArgument("unknown irreducibility method '" + s + "'");
}

// Inverse of format_factorization.
Integer parse_factorization(const std::string& s) {
  std::string_view v = s;
  int sign = 1;
  if (v.starts_with("-")) sign = -1, v.remove_prefix(1);
  Integer n = 1;
  while (!v.empty()) {
    const std::size_t sep = v.find(" * ");
    std::string_view term = v.substr(0, sep);
    const std::size_t caret = term.find('^');
    Integer base = parse_integer(term.substr(0, caret));
    if (base <= 1) throw InvalidArgument("factored form has a base below 2");
    unsigned long e = 1;
    if (caret != std::string_view::npos) e = parse_u64(term.substr(caret + 1), "exponent");
    if (e == 0 || e > 100000) throw InvalidArgument("factored form has a bad exponent");
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), e);
    n *= pw;
    if (sep == std::string_view::npos) break;
    v.remove_prefix(sep + 3);
  }
  return sign * n;
}

Json monic_json(const MonicAssociate& m) {
  Json j;
  j["poly"] = format_coefficients(m.poly);
  if (m.transform) {
    j["transform"] = {{"n", m.transform->n}, {"c", m.transform->c.get_str()}, {"s", m.transform->s.get_str()}};
  } else {
    j["transform"] = nullptr;
  }
  return j;
}

Json ratfunc_json(const RatFunc& r) {
  return {{"num", format_coefficients(r.num())}, {"den", format_coefficients(r.den())}};
}

// Appends the certificate (if any) and records its index in `entry`.
void attach(Json& entry, Json& certificates, const SnSearch& search, const std::optional<ComputabilityVerdict>& v) {
  entry["search"] = search_json(search);
  if (search.certificate) {
    entry["certificate"] = certificates.size();
    certificates.push_back(certificate_json(*search.certificate));
  }
  if (v) entry["verdict"] = verdict_json(*v);
}

}  // namespace

IntegerFactorization factor_cached(const Integer& n, std::chrono::milliseconds budget) {
  // A failed attempt costs the whole budget, so remember results per value.
  static std::map<std::pair<std::string, long long>, IntegerFactorization> cache;
  const auto key = std::pair{n.get_str(), static_cast<long long>(budget.count())};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  return cache[key] = factor_integer(n, budget);
}

std::string format_factorization(const IntegerFactorization& f) {
  std::string s = f.sign < 0 ? "-" : "";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    if (!first) s += " * ";
    first = false;
    s += p.get_str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  if (f.cofactor != 1 || first) {
    if (!first) s += " * ";
    s += f.cofactor.get_str();
  }
  return s;
}

Json certificate_json(const SnCertificate& c, std::chrono::milliseconds budget) {
  Json j;
  j["poly"] = format_coefficients(c.poly);
  j["degree"] = c.degree;
  j["discriminant"] = c.discriminant.get_str();
  if (c.discriminant != 0) {
    IntegerFactorization f = factor_cached(c.discriminant, budget);
    if (f.complete()) j["discriminant_factored"] = format_factorization(f);
  }
  Json irr;
  irr["method"] = to_string(c.irreducibility.method);
  Json w = Json::array();
  for (const auto& k : c.irreducibility.stackel_witnesses) w.push_back(k.get_str());
  for (const auto& ct : c.irreducibility.prime_witnesses)
    w.push_back({{"p", ct.prime}, {"cycle_type", degrees_json(ct.degrees)}});
  irr["witnesses"] = w;
  j["irreducibility"] = irr;
  j["primes"] = {{"ncycle", evidence_json(c.ncycle, false)}, {"transposition", evidence_json(c.transposition, true)}};
  j["conclusion"] = c.conclusion;
  j["lemmas"] = c.lemmas;
  return j;
}

SnCertificate certificate_from_json(const Json& j) {
  SnCertificate c;
  c.poly = parse_integer_coefficients(get_string(j, "poly"));
  c.degree = static_cast<unsigned>(get_u64(j, "degree"));
  c.discriminant = parse_integer(get_string(j, "discriminant"));

  const Json& irr = field(j, "irreducibility");
  c.irreducibility.method = method_from_string(get_string(irr, "method"));
  c.irreducibility.determined = c.irreducibility.irreducible =
      c.irreducibility.method != IrreducibilityMethod::undetermined;
  const Json& w = field(irr, "witnesses");
  if (!w.is_array()) throw InvalidArgument("field 'witnesses' must be an array");
  for (const auto& x : w) {
    if (c.irreducibility.method == IrreducibilityMethod::stackel) {
      if (!x.is_string()) throw InvalidArgument("Stackel witnesses must be decimal strings");
      c.irreducibility.stackel_witnesses.push_back(parse_integer(x.get<std::string>()));
    } else if (c.irreducibility.method == IrreducibilityMethod::single_prime ||
               c.irreducibility.method == IrreducibilityMethod::degree_set) {
      CycleType ct;
      ct.prime = get_u64(x, "p");
      ct.degrees = get_degrees(x, "cycle_type");
      c.irreducibility.prime_witnesses.push_back(std::move(ct));
    } else {
      throw InvalidArgument("method '" + to_string(c.irreducibility.method) + "' takes no witnesses");
    }
  }

  const Json& primes = field(j, "primes");
  c.ncycle = evidence_from_json(field(primes, "ncycle"), false);
  c.transposition = evidence_from_json(field(primes, "transposition"), true);
  c.conclusion = get_string(j, "conclusion");
  const Json& lemmas = field(j, "lemmas");
  if (!lemmas.is_array()) throw InvalidArgument("field 'lemmas' must be an array");
  for (const auto& l : lemmas) {
    if (!l.is_string()) throw InvalidArgument("lemmas must be strings");
    c.lemmas.push_back(l.get<std::string>());
  }
  return c;
}

Json verdict_json(const ComputabilityVerdict& v) {
  Json j;
  j["model"] = to_string(v.model);
  j["subject"] = v.subject;
  j["conclusion"] = to_string(v.conclusion);
  if (v.conclusion == Conclusion::degree_lower_bound) j["bound"] = v.bound.get_str();
  Json chain = Json::array();
  for (const auto& c : v.justification) chain.push_back({{"lemma", c.lemma}, {"detail", c.detail}});
  j["justification"] = chain;
  return j;
}

Json search_json(const SnSearch& s) {
  Json j;
  j["found"] = s.certificate.has_value();
  if (!s.failure.empty()) j["failure"] = s.failure;
  Json log = Json::array();
  for (const auto& e : s.log) {
    Json x;
    x["p"] = e.p;
    if (e.cycle_type) {
      x["cycle_type"] = degrees_json(e.cycle_type->degrees);
      if (!e.note.empty()) x["note"] = e.note;
    } else {
      x["skipped"] = e.note;
    }
    log.push_back(x);
  }
  j["log"] = log;
  return j;
}

Json spectral_json(const GraphSpec& spec, MatrixKind kind, const Rational& rho, const SpectralReport& r) {
  Json j;
  j["command"] = "spectral";
  j["graph"] = format_graph_spec(spec);
  j["matrix"] = to_string(kind);
  if (kind == MatrixKind::rlaplacian) j["rho"] = rho.get_str();
  j["charpoly"] = format_coefficients(r.charpoly);
  Json certificates = Json::array();
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json e;
    e["poly"] = format_coefficients(f.factor);
    e["multiplicity"] = f.multiplicity;
    if (f.root) {
      e["root"] = f.root->get_str();
      Json vs = Json::array();
      for (const auto& v : f.eigenvectors) {
        Json x = Json::array();
        for (const auto& c : v) x.push_back(c.get_str());
        vs.push_back(x);
      }
      e["eigenvectors"] = vs;
    }
    if (f.monic) e["monic"] = monic_json(*f.monic);
    if (f.search) attach(e, certificates, *f.search, f.verdict);
    factors.push_back(e);
  }
  j["factors"] = factors;
  j["certificates"] = certificates;
  return j;
}

Json fr_p3_json(const FrP3Report& r) {
  Json j;
  j["command"] = "fr-p3";
  j["p"] = format_bivariate(r.system.p);
  j["q"] = format_bivariate(r.system.q);
  j["eliminant"] = format_coefficients(r.eliminant.raw);
  j["f"] = format_coefficients(r.f);
  j["power"] = r.power;
  j["g"] = format_coefficients(r.g);
  j["h"] = monic_json(r.h);
  Json certificates = Json::array();
  attach(j, certificates, r.search, r.verdict);
  j["certificates"] = certificates;
  return j;
}

Json kk_json(const KKReport& r) {
  Json j;
  j["command"] = "kk-data";
  j["p"] = format_coefficients(r.p);
  j["zero_order"] = r.zero_order;
  j["f"] = format_coefficients(r.f);
  j["g"] = monic_json(r.g);
  Json certificates = Json::array();
  attach(j, certificates, r.search, r.verdict);
  j["certificates"] = certificates;
  return j;
}

Json pack2n_json(const Pack2nReport& r) {
  Json j;
  j["command"] = "pack2n";
  j["n"] = r.poly.n;
  j["X"] = ratfunc_json(r.poly.X);
  j["a_of_b"] = ratfunc_json(r.poly.a_of_b);
  j["U"] = ratfunc_json(r.poly.U);
  j["V"] = ratfunc_json(r.poly.V);
  j["f"] = format_coefficients(r.poly.f);
  Json certificates = Json::array();
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json e;
    e["poly"] = format_coefficients(f.factor);
    e["multiplicity"] = f.multiplicity;
    if (f.mirror) e["mirror"] = *f.mirror;
    if (f.monic) e["monic"] = monic_json(*f.monic);
    if (f.search) attach(e, certificates, *f.search, f.verdict);
    factors.push_back(e);
  }
  j["factors"] = factors;
  if (r.numeric) {
    const auto& n = *r.numeric;
    j["numeric"] = {{"b", n.b},
                    {"a", n.a},
                    {"partner", n.partner},
                    {"f_at_b", n.f_at_b},
                    {"min_factor_at_b", n.min_factor_at_b},
                    {"root_factor", n.root_factor},
                    {"packer_angle_error", n.packer_angle_error},
                    {"tangency", n.check.tangency},
                    {"overlap", n.check.overlap}};
  } else if (!r.numeric_failure.empty()) {
    j["numeric_failure"] = r.numeric_failure;
  }
  j["certificates"] = certificates;
  return j;
}

Json certify_json(const ZPoly& input, const MonicAssociate& monic, const SnSearch& search,
                  const std::optional<ComputabilityVerdict>& verdict) {
  Json j;
  j["command"] = "certify";
  j["input"] = format_coefficients(input);
  j["monic"] = monic_json(monic);
  Json certificates = Json::array();
  attach(j, certificates, search, verdict);
  j["certificates"] = certificates;
  return j;
}

bool VerifyOutcome::all_ok() const {
  return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto& v) { return v.ok; });
}

VerifyOutcome verify_json(const Json& j) {
  VerifyOutcome out;
  auto one = [&](const Json& c) {
    try {
      SnCertificate cert = certificate_from_json(c);
      Verification v = verify_sn_certificate(cert);
      if (v.ok && c.contains("discriminant_factored")) {
        const Json& f = c.at("discriminant_factored");
        if (!f.is_string() || parse_factorization(f.get<std::string>()) != cert.discriminant)
          v = {false, "factored discriminant does not match"};
      }
      out.results.push_back(v);
    } catch (const std::exception& ex) {
      out.results.push_back({false, std::string("malformed certificate: ") + ex.what()});
    }
  };
  if (j.is_array()) {
    for (const auto& c : j) one(c);
  } else if (j.is_object() && j.contains("certificates")) {
    if (!j.at("certificates").is_array()) {
      out.results.push_back({false, "field 'certificates' must be an array"});
    } else {
      for (const auto& c : j.at("certificates")) one(c);
    }
  } else {
    one(j);
  }
  return out;
}

}  // namespace galoisdraw::cli
