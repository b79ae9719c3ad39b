// Acceptance runner: one PASS/FAIL line per criterion.
// Usage: acceptance [--allow-fail N]...

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "galoisdraw/cli.hpp"
#include "galoisdraw/text.hpp"

using namespace galoisdraw;

namespace {

// ---- bookkeeping ----------------------------------------------------------

struct Outcome {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::mt19937_64 rng(777);

long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
double uniform_real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

ZPoly z_high(std::vector<std::string> high_first) {
  std::vector<Integer> c;
  for (auto it = high_first.rbegin(); it != high_first.rend(); ++it) c.emplace_back(*it);
  return ZPoly(std::move(c));
}

ZPoly z_high(std::initializer_list<long> high_first) {
  std::vector<Integer> c;
  for (auto it = std::rbegin(high_first); it != std::rend(high_first); ++it) c.emplace_back(*it);
  return ZPoly(std::move(c));
}

QPoly q_low(std::initializer_list<std::pair<long, long>> low_first) {
  std::vector<Rational> c;
  for (auto [n, d] : low_first) {
    Rational r(n, d);
    r.canonicalize();
    c.push_back(r);
  }
  return QPoly(std::move(c));
}

// Printed factorization mod p, each factor high degree first.
bool factors_as_printed(const ZPoly& f, std::uint64_t p, std::vector<std::vector<std::uint64_t>> printed) {
  std::vector<std::vector<std::uint64_t>> got;
  for (const auto& fac : factor_mod_p(f, p).factors)
    for (unsigned i = 0; i < fac.multiplicity; ++i) {
      std::vector<std::uint64_t> c = fac.poly.coeffs();
      std::reverse(c.begin(), c.end());
      got.push_back(c);
    }
  std::sort(got.begin(), got.end());
  std::sort(printed.begin(), printed.end());
  return got == printed;
}

std::string factored(const Integer& n) {
  return cli::format_factorization(cli::factor_cached(n, std::chrono::seconds(10)));
}

std::string degrees(const CycleType& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.degrees.size(); ++i) s += (i ? "," : "") + std::to_string(c.degrees[i]);
  return s + "}";
}

bool cycle_is(const ZPoly& f, std::uint64_t p, std::vector<unsigned> want) {
  return cycle_type_mod_p(f, p).degrees == want;
}

bool certified(const std::optional<SnSearch>& s, const std::string& group) {
  return s && s->certificate && s->certificate->conclusion == group && verify_sn_certificate(*s->certificate).ok;
}

bool certified(const SnSearch& s, const std::string& group) { return certified(std::optional<SnSearch>(s), group); }

std::string fmt(double v) {
  std::ostringstream o;
  o << std::setprecision(3) << std::scientific << v;
  return o.str();
}

// ---- criterion 1 ----------------------------------------------------------

Outcome fr_path() {
  Outcome o;
  const FrP3Report r = fr_p3_certify();
  const BiPoly p = BiPoly::from_terms({{2, 5, 0}, {3, 4, 1}, {1, 3, 2}, {-5, 2, 0}, {-5, 1, 1}, {-1, 0, 2}});
  const BiPoly q =
      BiPoly::from_terms({{-1, 4, 1}, {-1, 3, 2}, {1, 2, 3}, {-1, 2, 0}, {1, 1, 4}, {-1, 1, 1}, {1, 0, 2}});
  o.expect(r.system.p == p, "p(a,b) differs from the printed numerator");
  o.expect(r.system.q == q, "q(a,b) differs from the printed numerator");
  const ZPoly f15 = z_high({3, 0, 0, -48, 0, 0, 336, 0, 0, -1196, 0, 0, 1440, 0, 0, 144});
  o.expect(exact_quotient(r.eliminant.raw, f15).has_value(), "eliminant not divisible by the degree-15 factor");
  const ZPoly h = z_high({1, 60, -299, 504, -432, 162});
  o.expect(r.h.poly == h, "h differs");
  const std::string disc = factored(discriminant(h));
  o.expect(disc == "-2^6 * 3^9 * 2341^2 * 2749", "disc(h) = " + disc);
  o.expect(factors_as_printed(h, 7, {{1, 1}, {1, 3, 6, 1, 1}}), "h mod 7");
  o.expect(factors_as_printed(h, 5, {{1, 3, 4}, {1, 2, 1, 3}}), "h mod 5");
  o.expect(certified(r.search, "S_5"), "no verified S_5 certificate");
  o.expect(r.verdict && r.verdict->conclusion == Conclusion::impossible, "verdict is not radical-impossible");
  o.note("disc(h) = " + disc);
  return o;
}

// ---- criterion 2 ----------------------------------------------------------

Outcome laplacian_y() {
  Outcome o;
  const ZPoly q = z_high({1, -16, 104, -354, 678, -730, 417, -110, 9});
  const QPoly cp = charpoly(graph_matrix(y9(), MatrixKind::laplacian));
  const QPoly want = to_rational(q * ZPoly::x());
  o.expect(cp == want || cp == -want, "charpoly of L(Y) differs");
  const StackelVerdict st = stackel_irreducible(q, 0, 90);
  o.expect(st.proved && st.witnesses.size() == 17, "Stackel scan on [0,90] found " +
                                                        std::to_string(st.witnesses.size()) + " witnesses");
  std::size_t all = 0;
  for (long k = 0; k <= 90; ++k)
    if (primality(abs(evaluate(q, Integer(k)))) == Primality::prime) ++all;
  const std::string disc = factored(discriminant(q));
  o.expect(disc == "2^8 * 9931583", "disc(q) = " + disc);
  o.expect(cycle_is(q, 31, {1, 7}) && factors_as_printed(q, 31, {{1, 27}, {1, 19, 25, 25, 3, 26, 25, 21}}),
           "q mod 31");
  o.expect(cycle_is(q, 41, {1, 2, 5}) &&
               factors_as_printed(q, 41, {{1, 1}, {1, 15, 39}, {1, 9, 29, 10, 36, 16}}),
           "q mod 41");
  const SpectralReport r = spectral_certify(y9(), MatrixKind::laplacian);
  bool s8 = false;
  for (const auto& f : r.factors) s8 = s8 || certified(f.search, "S_8");
  o.expect(s8, "spectral pipeline gives no verified S_8 certificate");
  SnSearchOptions so;
  so.irreducibility.stackel_range = {Integer(0), Integer(90)};
  const SnSearch ss = search_sn_certificate(q, so);
  o.expect(certified(ss, "S_8") && ss.certificate->irreducibility.method == IrreducibilityMethod::stackel,
           "Stackel-based S_8 certificate does not verify");
  o.note("prime values on [0,90]: " + std::to_string(all) + "; disc(q) = " + disc);
  // The relaxed Laplacian at rho = 1 is -A(Y) under the stated definition.
  const ZFactorList rho1 = factor_over_Z(primitive(charpoly(graph_matrix(y9(), MatrixKind::rlaplacian, 1))).primitive);
  int maxdeg = 0;
  for (const auto& f : rho1.factors) maxdeg = std::max(maxdeg, f.poly.degree());
  o.note("relaxed Laplacian at rho = 1 equals -A(Y); largest irreducible factor degree " + std::to_string(maxdeg) +
         ", so no S_8 there");
  return o;
}

// ---- criterion 3 ----------------------------------------------------------

Outcome adjacency_h() {
  Outcome o;
  const ZPoly q0 = z_high({1, -1, -5, 4, 5, -2, -1});
  const ZPoly q1 = z_high({1, 1, -5, -4, 5, 2, -1});
  const QPoly cp = charpoly(graph_matrix(h12(), MatrixKind::adjacency));
  o.expect(cp == to_rational(q0 * q1), "charpoly of A(H) is not q0 q1");
  const ZFactorList fl = factor_over_Z(to_integer(cp));
  o.expect(fl.factors.size() == 2, "charpoly does not split into two irreducible sextics");
  o.expect(discriminant(q0) == 592661, "disc(q0) = " + discriminant(q0).get_str());
  o.expect(cycle_is(q0, 13, {1, 5}) && factors_as_printed(q0, 13, {{1, 9}, {1, 3, 7, 6, 3, 10}}), "q0 mod 13");
  o.expect(cycle_is(q0, 7, {1, 2, 3}) && factors_as_printed(q0, 7, {{1, 2}, {1, 5, 5}, {1, 6, 1, 2}}), "q0 mod 7");
  const SpectralReport r = spectral_certify(h12(), MatrixKind::adjacency);
  std::string group;
  for (const auto& f : r.factors)
    if (f.factor == q0 && f.search && f.search->certificate) group = f.search->certificate->conclusion;
  bool all = true;
  for (const auto& f : r.factors) all = all && certified(f.search, "S_6");
  o.expect(group == "S_6" && all, "certifier does not conclude S_6 for both sextics");
  o.note("certified " + group + "; the printed group S_8 is inconsistent with degree 6 (a degree-6 Galois group "
                                "embeds in S_6)");
  return o;
}

// ---- criterion 4 ----------------------------------------------------------

Outcome transition_h() {
  Outcome o;
  const QPoly minus = q_low({{-1, 24}, {1, 6}, {1, 3}, {-11, 12}, {-1, 2}, {1, 1}});
  const QPoly plus = q_low({{1, 24}, {1, 6}, {-1, 3}, {-11, 12}, {1, 2}, {1, 1}});
  const Matrix t = graph_matrix(h12(), MatrixKind::transition);
  const QPoly cp = charpoly(t);
  o.expect(cp == QPoly{-1, 1} * QPoly{1, 1} * minus * plus, "charpoly of T(H) differs");
  const ZPoly s = z_high({1, -4, -8, 22, 12, -24});
  const SpectralReport r = spectral_certify(h12(), MatrixKind::transition);
  bool found = false;
  for (const auto& f : r.factors)
    if (f.monic && f.monic->poly == s) found = certified(f.search, "S_5");
  o.expect(found, "no factor with monic associate s certified S_5");
  const std::string disc = factored(discriminant(s));
  o.expect(disc == "2^8 * 3 * 97 * 6947", "disc(s) = " + disc);
  o.expect(cycle_is(s, 11, {1, 4}) && factors_as_printed(s, 11, {{1, 1}, {1, 6, 8, 3, 9}}), "s mod 11");
  o.expect(cycle_is(s, 5, {2, 3}) && factors_as_printed(s, 5, {{1, 1, 1}, {1, 0, 1, 1}}), "s mod 5");
  const auto e1 = rational_eigenvectors(t, -1), e12 = rational_eigenvectors(t, 1);
  const std::vector<long> u1{1, -1, 1, -1, 1, -1, 1, -1, 1, -1, -1, 1};
  bool ok1 = e1.size() == 1, ok12 = e12.size() == 1;
  for (std::size_t i = 0; ok1 && i < 12; ++i) ok1 = e1[0][i] == u1[i];
  for (std::size_t i = 0; ok12 && i < 12; ++i) ok12 = e12[0][i] == 1;
  o.expect(ok1, "eigenvector u1 for -1");
  o.expect(ok12, "eigenvector u12 for 1");
  return o;
}

// ---- criterion 5 ----------------------------------------------------------

Outcome mds_grid() {
  Outcome o;
  const std::vector<std::vector<long>> d2{{0, 1, 1, 4, 4, 9}, {1, 0, 1, 1, 1, 4}, {1, 1, 0, 1, 4, 4},
                                          {4, 1, 1, 0, 4, 1}, {4, 1, 4, 4, 0, 1}, {9, 4, 4, 1, 1, 0}};
  const std::vector<std::vector<std::pair<long, long>>> centered{
      {{-73, 18}, {-11, 9}, {-31, 18}, {23, 18}, {7, 9}, {89, 18}},
      {{-11, 9}, {-7, 18}, {1, 9}, {1, 9}, {-7, 18}, {16, 9}},
      {{-31, 18}, {1, 9}, {-25, 18}, {-7, 18}, {19, 9}, {23, 18}},
      {{23, 18}, {1, 9}, {-7, 18}, {-25, 18}, {19, 9}, {-31, 18}},
      {{7, 9}, {-7, 18}, {19, 9}, {19, 9}, {-43, 18}, {-20, 9}},
      {{89, 18}, {16, 9}, {23, 18}, {-31, 18}, {-20, 9}, {-73, 18}}};
  const Matrix D = apsp_squared(grid2x3());
  const Matrix C = graph_matrix(grid2x3(), MatrixKind::mds_centered);
  bool dm = true, cm = true;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      dm = dm && D.at(i, j) == d2[i][j];
      Rational want(centered[i][j].first, centered[i][j].second);
      want.canonicalize();
      cm = cm && C.at(i, j) == want;
    }
  o.expect(dm, "squared-distance matrix differs");
  o.expect(cm, "centered matrix differs");
  const QPoly quint = q_low({{48, 1}, {-88, 3}, {-125, 1}, {19, 1}, {41, 3}, {1, 1}});
  o.expect(charpoly(C) == QPoly::x() * quint, "charpoly differs");
  const ZPoly q = z_high({"1", "-88", "-54000", "1181952", "122425344", "1289945088"});
  const SpectralReport r = spectral_certify(grid2x3(), MatrixKind::mds_centered);
  bool found = false;
  for (const auto& f : r.factors)
    if (f.monic && f.monic->poly == q) found = certified(f.search, "S_5");
  o.expect(found, "monic q not produced or not certified S_5");
  const std::string disc = factored(discriminant(q));
  o.expect(disc == "2^61 * 3^31 * 12421 * 3039011", "disc(q) = " + disc);
  o.expect(cycle_is(q, 11, {1, 4}) && factors_as_printed(q, 11, {{1, 4}, {1, 7, 4, 8, 9}}), "q mod 11");
  o.expect(cycle_is(q, 7, {2, 3}) && factors_as_printed(q, 7, {{1, 2, 5}, {1, 1, 5, 1}}), "q mod 7");
  return o;
}

// ---- criterion 6 ----------------------------------------------------------

Outcome kk_data() {
  Outcome o;
  const KKReport r = kk_data_certify();
  o.expect(r.zero_order == 4 && exact_quotient(r.p, ZPoly::monomial(Integer(1), 4)).has_value(),
           "c^4 does not divide p");
  const ZPoly g = z_high({"1", "-128360", "4575935386", "-32609554186008", "120191907907039173",
                          "-273701889217560990672", "413454551042624579937072",
                          "-431130685015107552530542464", "317510974076480215971285088080",
                          "-166668765204034179394613907054336", "62060780922813932272692806330099712",
                          "-16033136614269762618278694793639526400", "2735179704826314422602131722817699840000",
                          "-277301626082465808611849917345431552000000",
                          "12660899181603462048518168020372684800000000"});
  // Independent transform: x^14 f(258/x) / 167184.
  QPoly direct;
  Rational pw = 1;
  for (int i = 0; i <= 14; ++i) {
    direct += QPoly::monomial(Rational(r.f.coeff(i)) * pw / Rational(167184), 14 - i);
    pw *= 258;
  }
  o.expect(direct == to_rational(g), "x^14 f(258/x)/167184 differs from the printed g");
  o.expect(r.g.poly == g, "pipeline monic associate differs from the printed g");
  const IrreducibilityVerdict iv = irreducible_over_Q(g);
  o.expect(iv.determined && iv.irreducible, "irreducibility of g not established");
  o.expect(cycle_is(g, 67, {1, 13}) &&
               factors_as_printed(g, 67, {{1, 25}, {1, 54, 62, 40, 48, 52, 10, 38, 24, 14, 30, 17, 65, 34}}),
           "g mod 67");
  o.expect(cycle_is(g, 113, {1, 2, 11}) &&
               factors_as_printed(g, 113, {{1, 50}, {1, 15, 49}, {1, 56, 15, 94, 60, 61, 13, 103, 53, 11, 6, 13}}),
           "g mod 113");
  o.expect(certified(r.search, "S_14"), "no verified S_14 certificate");
  o.expect(r.verdict && r.verdict->conclusion == Conclusion::impossible, "verdict is not radical-impossible");
  o.note("irreducibility method: " + to_string(iv.method));
  // Numeric cross-check of the inferred kk4 edge set.
  const Layout x = numeric_equilibrium(kk4(), {ForceKind::KK}, kk4_initial_layout(), 1e-11);
  const KKGeometry geo = kk_geometry(x);
  const double pc = std::abs(evaluate(to_rational(r.p), Rational(geo.c)).get_d());
  o.expect(pc < 1e-8, "numeric kk4 equilibrium: |p(c)| = " + fmt(pc));
  o.note("kk4 numeric c = " + std::to_string(geo.c) + ", |p(c)| = " + fmt(pc));
  return o;
}

// ---- criterion 7 ----------------------------------------------------------

Outcome pack25() {
  Outcome o;
  const Pack2nReport r = pack2n_certify(5);
  o.expect(r.poly.a_of_b == RatFunc(QPoly{0, 0, 2}, QPoly{1, -2}), "a(b) is not 2b^2/(1-2b)");
  o.expect(r.poly.U == RatFunc(QPoly{-1, 6, -6}, QPoly{1, -2, 2}), "U differs");
  o.expect(r.poly.V == RatFunc(QPoly{1, -4, 2} * QPoly{-1, 0, 2}, QPoly{1, -2, 2} * QPoly{1, -2, 2}), "V differs");
  const ZPoly f = z_high({2304, -18432, 68096, -154112, 254720, -363520, 471424, -501376, 390112, -208000, 73440,
                          -17504, 3568, -896, 200, -24, 1});
  o.expect(r.poly.f == f, "f(b) differs");
  const ZPoly f0 = z_high({48, -256, 592, -656, 336, -64, 4, -4, 1});
  const ZPoly f1 = z_high({48, -128, 144, -208, 336, -288, 116, -20, 1});
  const ZFactorList fl = factor_over_Z(f);
  std::set<std::vector<Integer>> got;
  for (const auto& fac : fl.factors) got.insert(fac.poly.coeffs());
  o.expect(got == std::set<std::vector<Integer>>{f0.coeffs(), f1.coeffs()}, "factor_over_Z does not give f0, f1");
  o.expect(compose(f1, ZPoly{1, -1}) == f0, "f0(b) != f1(1-b)");
  const ZPoly g = z_high({1, -4, 4, -64, 336, -656, 592, -256, 48});
  const std::string disc = factored(discriminant(g));
  o.expect(disc == "2^52 * 81637", "disc(g) = " + disc);
  o.expect(cycle_is(g, 3, {1, 7}) && factors_as_printed(g, 3, {{1, 0}, {1, 2, 1, 2, 0, 1, 1, 2}}), "g mod 3");
  o.expect(cycle_is(g, 29, {1, 2, 5}) &&
               factors_as_printed(g, 29, {{1, 9}, {1, 23, 12}, {1, 22, 9, 0, 20, 23}}),
           "g mod 29");
  bool s8 = true;
  for (const auto& pf : r.factors) s8 = s8 && certified(pf.search, "S_8");
  o.expect(s8 && r.factors.size() == 2, "both degree-8 factors are not certified S_8");
  if (!r.numeric) {
    o.expect(false, "numeric packing failed: " + r.numeric_failure);
    return o;
  }
  const double b = r.numeric->b;
  const double af = std::abs(evaluate(to_rational(f0), Rational(b)).get_d());
  const double a1 = std::abs(evaluate(to_rational(f1), Rational(b)).get_d());
  const double arad = std::abs(r.numeric->a - 2 * b * b / (1 - 2 * b));
  o.expect(arad < 1e-8, "A radius misses 2b^2/(1-2b) by " + fmt(arad));
  o.expect(af < 1e-8, "|f0(b)| = " + fmt(af) + " at b = " + std::to_string(b));
  o.note("packer b = " + std::to_string(b) + ": |f0(b)| = " + fmt(af) + ", |f1(b)| = " + fmt(a1) +
         ", |f0(1-b)| = " + fmt(std::abs(evaluate(to_rational(f0), Rational(1 - b)).get_d())) +
         "; A radius error " + fmt(arad) + "; tangency " + fmt(r.numeric->check.tangency));
  return o;
}

// ---- criterion 8 ----------------------------------------------------------

bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Outcome number_theory() {
  Outcome o;
  o.expect(totient(7) == 6, "phi(7)");
  const ComputabilityVerdict c7 = computability_verdict(root_of_unity_degree(7), Model::quadratic, "cycle:7");
  o.expect(c7.conclusion == Conclusion::impossible, "C7 is not quadratic-impossible");
  o.expect(bipyr_verdicts(7)[0].conclusion == Conclusion::impossible, "Bipyr(7) is not quadratic-impossible");
  const ComputabilityVerdict c23 = computability_verdict(root_of_unity_degree(23), Model::root, "cycle:23");
  o.expect(c23.conclusion == Conclusion::degree_lower_bound && c23.bound == 11, "cycle:23 bound is not 11");
  std::ostringstream out, err;
  const int code = cli::run({"lowerbound", "--graph", "cycle:23"}, out, err);
  o.expect(code == 0 && out.str().find("degree ≥ 11") != std::string::npos, "CLI lowerbound output");
  const std::vector<std::uint64_t> want{2, 3, 5, 11, 23, 29, 41, 53, 83, 89};
  std::vector<std::uint64_t> oracle;
  for (std::uint64_t p = 2; p <= 100; ++p)
    if (naive_prime(p) && naive_prime(2 * p + 1)) oracle.push_back(p);
  o.expect(sophie_germain_scan(100) == want && oracle == want, "Sophie Germain scan");
  const PhiExponentScan s = phi_exponent_scan(10000);
  o.note("primes p <= 10^4 with log_p P(p-1) >= 0.677: " + std::to_string(s.at_least_threshold) + " of " +
         std::to_string(s.entries.size()) + " (" + std::to_string(s.fraction()) + ")");
  return o;
}

// ---- criterion 9 ----------------------------------------------------------

Rational random_rational() {
  Rational r(uniform(-50, 50), uniform(1, 20));
  r.canonicalize();
  return r;
}

QPoly random_qpoly(int deg) {
  std::vector<Rational> c(static_cast<std::size_t>(uniform(0, deg)) + 1);
  for (auto& v : c) v = random_rational();
  return QPoly(std::move(c));
}

ZPoly random_zpoly(int deg, long bound) {
  std::vector<Integer> c(static_cast<std::size_t>(uniform(0, deg)) + 1);
  for (auto& v : c) v = uniform(-bound, bound);
  return ZPoly(std::move(c));
}

using Mutation = std::function<void(SnCertificate&)>;

FpPoly bump(const FpPoly& f) {
  std::vector<std::uint64_t> c = f.coeffs();
  const std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(c.size()) - 2));
  c[i] = (c[i] + 1 + static_cast<std::uint64_t>(uniform(0, 1000)) % (f.modulus() - 1)) % f.modulus();
  return FpPoly(f.field(), c);
}

std::size_t mutation_fuzz(const std::vector<SnCertificate>& bases, std::size_t rounds, std::size_t& accepted) {
  auto evidence = [](SnCertificate& c) -> PrimeEvidence& { return uniform(0, 1) ? c.ncycle : c.transposition; };
  const std::vector<Mutation> ops{
      [](SnCertificate& c) {
        std::vector<Integer> k = c.poly.coeffs();
        k[static_cast<std::size_t>(uniform(0, static_cast<long>(k.size()) - 2))] += uniform(1, 9);
        c.poly = ZPoly(k);
      },
      [](SnCertificate& c) { c.discriminant += uniform(1, 100); },
      [](SnCertificate& c) { c.degree += uniform(0, 1) ? 1 : -1; },
      [](SnCertificate& c) { c.conclusion = "A_" + std::to_string(c.degree); },
      [](SnCertificate& c) { c.lemmas.erase(c.lemmas.begin() + uniform(0, static_cast<long>(c.lemmas.size()) - 1)); },
      [&](SnCertificate& c) {
        PrimeEvidence& e = evidence(c);
        e.p = next_prime(e.p);
        e.cycle_type.prime = e.p;
      },
      [&](SnCertificate& c) { evidence(c).cycle_type.degrees.back() += 1; },
      [&](SnCertificate& c) {
        PrimeEvidence& e = evidence(c);
        e.factors.erase(e.factors.begin() + uniform(0, static_cast<long>(e.factors.size()) - 1));
      },
      [&](SnCertificate& c) {
        PrimeEvidence& e = evidence(c);
        auto& f = e.factors[static_cast<std::size_t>(uniform(0, static_cast<long>(e.factors.size()) - 1))];
        if (f.degree() >= 1) f = bump(f);
        else e.factors.pop_back();
      },
      [](SnCertificate& c) { c.transposition.power += 2; },
      [](SnCertificate& c) {
        auto& iv = c.irreducibility;
        iv.method = iv.method == IrreducibilityMethod::stackel ? IrreducibilityMethod::single_prime
                                                               : IrreducibilityMethod::stackel;
      },
      [](SnCertificate& c) { c.irreducibility.irreducible = false; },
      [](SnCertificate& c) { std::swap(c.ncycle, c.transposition); },
  };
  std::size_t tried = 0;
  accepted = 0;
  for (std::size_t t = 0; t < rounds; ++t) {
    SnCertificate c = bases[t % bases.size()];
    ops[static_cast<std::size_t>(uniform(0, static_cast<long>(ops.size()) - 1))](c);
    ++tried;
    if (verify_sn_certificate(c).ok) ++accepted;
  }
  return tried;
}

double tangency_error(const Packing& p) {
  double worst = 0;
  for (const auto& [u, v] : p.graph.edges()) {
    const Circle &a = p.circles[u], &b = p.circles[v];
    const double d = std::abs(a.center - b.center);
    worst = std::max(worst, std::min(std::abs(d - (a.radius + b.radius)), std::abs(d - std::abs(a.radius - b.radius))));
  }
  return worst;
}

Outcome properties() {
  Outcome o;
  // Ring axioms and division with remainder over Q.
  bool ring = true, div = true;
  for (int i = 0; i < 300; ++i) {
    const QPoly a = random_qpoly(6), b = random_qpoly(6), c = random_qpoly(6);
    ring = ring && (a + b) * c == a * c + b * c && (a * b) * c == a * (b * c) && a * b == b * a && a - a == QPoly{};
    if (b.is_zero()) continue;
    const QDivRem qr = divrem(a, b);
    div = div && qr.quotient * b + qr.remainder == a && qr.remainder.degree() < b.degree();
  }
  o.expect(ring, "ring axioms");
  o.expect(div, "divrem identity");
  // Reduction mod p is a ring homomorphism.
  bool hom = true;
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 101, 65537}[static_cast<std::size_t>(uniform(0, 5))];
    const ZPoly a = random_zpoly(6, 1000), b = random_zpoly(6, 1000);
    hom = hom && mod_reduce(a * b, p).poly == mod_reduce(a, p).poly * mod_reduce(b, p).poly &&
          mod_reduce(a + b, p).poly == mod_reduce(a, p).poly + mod_reduce(b, p).poly;
  }
  o.expect(hom, "reduction mod p homomorphism");
  // Factor products.
  bool prod = true;
  for (int i = 0; i < 60; ++i) {
    ZPoly f = random_zpoly(3, 9) * random_zpoly(3, 9) * ZPoly{uniform(-3, 3), 1};
    if (f.degree() < 1) continue;
    const ZFactorList fl = factor_over_Z(f);
    prod = prod && fl.product() == f;
    const std::uint64_t p = 10007;
    if (mod_reduce(f, p).degree_dropped) continue;
    prod = prod && factor_mod_p(f, p).product(PrimeField(p)) == mod_reduce(f, p).poly;
  }
  o.expect(prod, "factorization products");
  // Cayley-Hamilton and regular-graph identities.
  bool ch = true, reg = true;
  for (const Graph& g : {y9(), h12(), kk4(), grid2x3(), bipyramid(5), pack_graph(2, 5)})
    for (MatrixKind k : {MatrixKind::adjacency, MatrixKind::laplacian, MatrixKind::transition}) {
      const Matrix m = graph_matrix(g, k);
      const Matrix z = evaluate_at(charpoly(m), m);
      ch = ch && z == Matrix(m.rows(), m.cols());
    }
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph g = cycle_graph(n);
    const QPoly ca = charpoly(graph_matrix(g, MatrixKind::adjacency));
    QPoly refl = compose(ca, QPoly{2, -1});
    if (n % 2) refl = -refl;
    reg = reg && charpoly(graph_matrix(g, MatrixKind::laplacian)) == refl;
    QPoly ct = dilate(ca, Rational(2));
    ct *= Rational(1, 1 << n);
    reg = reg && charpoly(graph_matrix(g, MatrixKind::transition)) == ct;
  }
  o.expect(ch, "Cayley-Hamilton");
  o.expect(reg, "regular-graph charpoly identities");
  // KK gradient against central differences.
  double worst = 0;
  for (int t = 0; t < 30; ++t) {
    const Graph g = t % 2 ? y9() : kk4();
    Layout l(g.size());
    for (auto& pt : l) pt = {uniform_real(-3, 3), uniform_real(-3, 3)};
    const KKEvaluation ev = kk_energy_gradient(g, l, {ForceKind::KK});
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double h = 1e-6;
      Layout a = l, b = l;
      a[i].x += h;
      b[i].x -= h;
      const double fd = (kk_energy_gradient(g, a, {ForceKind::KK}).energy -
                         kk_energy_gradient(g, b, {ForceKind::KK}).energy) / (2 * h);
      worst = std::max(worst, std::abs(fd - ev.gradient[i].x) / std::max(1.0, std::abs(fd)));
    }
  }
  o.expect(worst < 1e-6, "gradient vs finite differences: " + fmt(worst));
  // Packing tangency and angle sums.
  double tang = 0, angle = 0;
  for (std::size_t k = 3; k <= 10; ++k) {
    const Graph g = bipyramid(k);
    const PackerResult r = pack_graph_numeric(g, default_outer_face(g));
    tang = std::max(tang, tangency_error(r.packing));
    angle = std::max(angle, r.angle_error);
  }
  o.expect(tang < 1e-9 && angle < 1e-9, "packing tangency " + fmt(tang) + ", angle sums " + fmt(angle));
  // Mobius maps keep tangent circles tangent.
  double mob = 0;
  for (int t = 0; t < 200; ++t) {
    const Circle a{{uniform_real(-2, 2), uniform_real(-2, 2)}, uniform_real(0.2, 1.2)};
    const double rb = uniform_real(0.2, 1.2);
    const Circle b{a.center + (a.radius + rb) * std::polar(1.0, uniform_real(0, 6.28)), rb};
    MobiusMap m{{uniform_real(-2, 2), uniform_real(-2, 2)}, {uniform_real(-2, 2), uniform_real(-2, 2)},
                {uniform_real(-2, 2), uniform_real(-2, 2)}, {uniform_real(-2, 2), uniform_real(-2, 2)},
                uniform(0, 1) == 1};
    if (std::abs(m.det()) < 1e-2) continue;
    try {
      const Circle ia = mobius_apply(m, a), ib = mobius_apply(m, b);
      if (ia.radius > 1e4 || ib.radius > 1e4) continue;
      const double d = std::abs(ia.center - ib.center);
      const double e = std::min(std::abs(d - (ia.radius + ib.radius)), std::abs(d - std::abs(ia.radius - ib.radius)));
      mob = std::max(mob, e / std::max(1.0, ia.radius + ib.radius));
    } catch (const InvalidArgument&) {
    }
  }
  o.expect(mob < 1e-7, "Mobius tangency " + fmt(mob));
  // Concentric normal form is idempotent.
  const Graph b7 = bipyramid(7);
  const Packing n1 = normalize_concentric(pack_graph_numeric(b7, default_outer_face(b7)).packing, 7, 8);
  const Packing n2 = normalize_concentric(n1, 7, 8);
  double idem = 0;
  for (std::size_t i = 0; i < n1.circles.size(); ++i)
    idem = std::max({idem, std::abs(n1.circles[i].center - n2.circles[i].center),
                     std::abs(n1.circles[i].radius - n2.circles[i].radius)});
  o.expect(idem < 1e-12, "concentric idempotence " + fmt(idem));
  // Certificate mutations.
  std::vector<SnCertificate> bases{*fr_p3_certify().search.certificate};
  for (const auto& f : spectral_certify(y9(), MatrixKind::laplacian).factors)
    if (f.search && f.search->certificate) bases.push_back(*f.search->certificate);
  Pack2nOptions po;
  po.numeric = false;
  for (const auto& f : pack2n_certify(5, po).factors) bases.push_back(*f.search->certificate);
  SnSearchOptions so;
  so.irreducibility.stackel_range = {Integer(0), Integer(50)};
  bases.push_back(*search_sn_certificate(z_high({1, -1, -5, 4, 5, -2, -1}), so).certificate);
  std::size_t accepted = 0;
  const std::size_t tried = mutation_fuzz(bases, 1200, accepted);
  o.expect(tried >= 1000 && accepted == 0, std::to_string(accepted) + " of " + std::to_string(tried) +
                                               " mutated certificates accepted");
  o.note("mutation fuzz: " + std::to_string(tried - accepted) + "/" + std::to_string(tried) + " rejected");
  return o;
}

// ---- criterion 10 ---------------------------------------------------------

Outcome pack27() {
  Outcome o;
  const Pack2nReport r = pack2n_certify(7);
  std::multiset<std::string> groups;
  for (const auto& pf : r.factors) {
    const bool irr = irreducible_over_Q(pf.factor).irreducible;
    o.expect(irr, "factor " + to_string(pf.factor, "b") + " is not irreducible");
    if (pf.search && pf.search->certificate && verify_sn_certificate(*pf.search->certificate).ok)
      groups.insert(pf.search->certificate->conclusion);
    else
      groups.insert("not found");
  }
  std::string list;
  for (const auto& g : groups) list += (list.empty() ? "" : ", ") + g;
  o.note("certified groups: " + list);
  o.expect(groups.count("S_2") >= 1 && groups.count("S_10") >= 1, "S_2 and S_10 not both certified (" + list + ")");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--allow-fail" && i + 1 < argc) {
      allowed.insert(std::stoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--allow-fail N]...\n";
      return 64;
    }
  }
  struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "FR path with three edges", 10, fr_path},
      {2, "Laplacian of Y", 600, laplacian_y},
      {3, "adjacency of H", 600, adjacency_h},
      {4, "transition matrix of H", 600, transition_h},
      {5, "MDS on the 2x3 grid", 600, mds_grid},
      {6, "stored KK polynomial", 600, kk_data},
      {7, "Pack(2,5)", 60, pack25},
      {8, "number-theory verdicts", 600, number_theory},
      {9, "property suites", 600, properties},
      {10, "Pack(2,7) gallery", 600, pack27},
  };
  int failed = 0, tolerated = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) o.failures.push_back("runtime " + std::to_string(secs) + " s over budget");
    const bool pass = o.failures.empty();
    std::cout << "criterion " << std::setw(2) << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(2) << secs << " s)";
    if (!pass) {
      std::cout << "  ";
      for (std::size_t i = 0; i < o.failures.size(); ++i) std::cout << (i ? "; " : "") << o.failures[i];
    }
    std::cout << "\n";
    for (const auto& n : o.notes) std::cout << "      note: " << n << "\n";
    std::cout.unsetf(std::ios::floatfield);
    if (!pass) (allowed.count(c.id) ? tolerated : failed)++;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed + tolerated)) << "/" << criteria.size()
            << " criteria passed";
  if (tolerated) std::cout << "; " << tolerated << " known failure(s) tolerated";
  std::cout << "\n";
  return failed ? 1 : 0;
}
