#include <cmath>

#include "doctest.h"
#include "galoisdraw/equilib.hpp"
#include "support.hpp"

using namespace galoisdraw;
using testing::z_high_first;

namespace {

Layout random_layout(std::size_t n) {
  Layout l(n);
  for (auto& p : l) {
    p.x = std::uniform_real_distribution<double>(-3, 3)(testing::rng());
    p.y = std::uniform_real_distribution<double>(-3, 3)(testing::rng());
  }
  return l;
}

// FR forces are minus the gradient of sum_edges d^3/(3k) - sum_pairs k^2 log d.
double fr_potential(const Graph& g, const Layout& l, double k) {
  double e = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) {
      const double d = std::hypot(l[i].x - l[j].x, l[i].y - l[j].y);
      if (g.has_edge(i, j)) e += d * d * d / (3 * k);
      e -= k * k * std::log(d);
    }
  return e;
}

template <class F>
Point numeric_gradient(F energy, Layout l, std::size_t i) {
  const double h = 1e-6;
  Point g;
  const double x = l[i].x, y = l[i].y;
  l[i].x = x + h;
  const double ex1 = energy(l);
  l[i].x = x - h;
  const double ex0 = energy(l);
  l[i].x = x;
  l[i].y = y + h;
  const double ey1 = energy(l);
  l[i].y = y - h;
  const double ey0 = energy(l);
  g.x = (ex1 - ex0) / (2 * h);
  g.y = (ey1 - ey0) / (2 * h);
  return g;
}

bool close(double got, double want, double rel) { return std::abs(got - want) <= rel * std::max(1.0, std::abs(want)); }

}  // namespace

TEST_CASE("KK gradient matches central differences of the energy") {
  const std::vector<Graph> graphs{kk4(), cycle_graph(6), y9(), grid2x3(), complete_graph(5)};
  for (int trial = 0; trial < 50; ++trial) {
    const Graph& g = graphs[trial % graphs.size()];
    const ForceModel m{ForceKind::KK, 1, 0.5 + trial * 0.05, 1.5};
    const Layout l = random_layout(g.size());
    const KKEvaluation ev = kk_energy_gradient(g, l, m);
    auto energy = [&](const Layout& x) { return kk_energy_gradient(g, x, m).energy; };
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Point fd = numeric_gradient(energy, l, i);
      REQUIRE(close(ev.gradient[i].x, fd.x, 1e-6));
      REQUIRE(close(ev.gradient[i].y, fd.y, 1e-6));
    }
  }
}

TEST_CASE("FR forces are minus the gradient of the FR potential and sum to zero") {
  const std::vector<Graph> graphs{path_graph(4), cycle_graph(5), y9(), bipyramid(5)};
  for (int trial = 0; trial < 40; ++trial) {
    const Graph& g = graphs[trial % graphs.size()];
    const double k = 0.5 + 0.1 * trial;
    const Layout l = random_layout(g.size());
    const auto f = fr_forces(g, l, k);
    Point total;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Point fd = numeric_gradient([&](const Layout& x) { return fr_potential(g, x, k); }, l, i);
      REQUIRE(close(f[i].x, -fd.x, 1e-6));
      REQUIRE(close(f[i].y, -fd.y, 1e-6));
      total.x += f[i].x;
      total.y += f[i].y;
    }
    CHECK(std::abs(total.x) < 1e-9);
    CHECK(std::abs(total.y) < 1e-9);
  }
}

TEST_CASE("force errors") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(fr_forces(g, {{0, 0}, {0, 0}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(fr_forces(g, {{0, 0}, {1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(fr_forces(g, {{0, 0}, {1, 0}, {2, 0}}, -1), InvalidArgument);
  CHECK_THROWS_AS(kk_energy_gradient(Graph(3, {{0, 1}}), {{0, 0}, {1, 0}, {2, 1}}), InvalidArgument);
  SolverOptions tiny;
  tiny.max_iterations = 3;
  CHECK_THROWS_AS(numeric_equilibrium(cycle_graph(5), {}, random_layout(5), 1e-12, tiny), EquilibriumNotConverged);
}

TEST_CASE("regular polygon equilibrium of cycles") {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (ForceKind kind : {ForceKind::FR, ForceKind::KK}) {
      const ForceModel m{kind};
      const double r = cycle_equilibrium_radius(n, m);
      REQUIRE(r > 0);
      CHECK(equilibrium_residual(cycle_graph(n), m, regular_polygon(n, r)) < 1e-9);
    }
  }
  // Triangle under FR: side s with s^2 = 1/s, so s = 1 and r = 1/sqrt(3).
  CHECK(std::abs(cycle_equilibrium_radius(3) - 1 / std::sqrt(3.0)) < 1e-12);
}

TEST_CASE("FR path system matches the printed numerators and the direct forces") {
  const FrP3System s = fr_p3_system();
  const BiPoly p = BiPoly::from_terms({{2, 5, 0}, {3, 4, 1}, {1, 3, 2}, {-5, 2, 0}, {-5, 1, 1}, {-1, 0, 2}});
  const BiPoly q = BiPoly::from_terms({{-1, 4, 1}, {-1, 3, 2}, {1, 2, 3}, {-1, 2, 0}, {1, 1, 4}, {-1, 1, 1}, {1, 0, 2}});
  const BiPoly pd = BiPoly::from_terms({{2, 3, 0}, {3, 2, 1}, {1, 1, 2}});
  const BiPoly qd = BiPoly::from_terms({{1, 2, 1}, {1, 1, 2}});
  // Printed up to a common sign.
  CHECK(((s.p == p && s.p_den == pd) || (s.p == -p && s.p_den == -pd)));
  CHECK(((s.q == q && s.q_den == qd) || (s.q == -q && s.q_den == -qd)));
  for (int t = 0; t < 100; ++t) {
    const double a = std::uniform_real_distribution<double>(0.2, 3)(testing::rng());
    const double b = std::uniform_real_distribution<double>(0.2, 3)(testing::rng());
    const auto f = fr_forces(path_graph(4), {{0, 0}, {a, 0}, {a + b, 0}, {2 * a + b, 0}});
    CHECK(close(s.p.eval(a, b) / s.p_den.eval(a, b), f[0].x, 1e-10));
    CHECK(close(s.q.eval(a, b) / s.q_den.eval(a, b), f[1].x, 1e-10));
  }
}

TEST_CASE("FR path certificate") {
  const FrP3Report r = fr_p3_certify();
  CHECK(r.f == ZPoly{144, 0, 0, 1440, 0, 0, -1196, 0, 0, 336, 0, 0, -48, 0, 0, 3});
  CHECK(r.power == 3);
  CHECK(r.g == ZPoly{144, 1440, -1196, 336, -48, 3});
  CHECK(r.h.poly == z_high_first({1, 60, -299, 504, -432, 162}));
  REQUIRE(r.h.transform);
  CHECK(r.h.transform->c == 6);
  // Oracle: x^5 g(6/x) / 144 computed directly.
  QPoly direct;
  for (int i = 0; i <= 5; ++i) {
    Rational c = Rational(r.g.coeff(i)) / Rational(144);
    for (int j = 0; j < i; ++j) c *= 6;
    direct += QPoly::monomial(c, 5 - i);
  }
  CHECK(direct == to_rational(r.h.poly));
  // b^2 f(b) divides the eliminant; the resultant agrees with a Sylvester oracle at sample b.
  CHECK(exact_quotient(r.eliminant.raw, ZPoly{0, 0, 1} * r.f).has_value());
  for (long b = 1; b <= 4; ++b) {
    ZPoly pa, qa;
    std::vector<Integer> pc, qc;
    for (int i = 0; i <= r.system.p.degree_a(); ++i) pc.push_back(evaluate(r.system.p.coeff_a(i), Integer(b)));
    for (int i = 0; i <= r.system.q.degree_a(); ++i) qc.push_back(evaluate(r.system.q.coeff_a(i), Integer(b)));
    const Integer syl = testing::sylvester_resultant(ZPoly(pc), ZPoly(qc));
    CHECK(abs(syl) == abs(evaluate(r.eliminant.raw, Integer(b))));
  }
  REQUIRE(r.search.certificate);
  CHECK(r.search.certificate->conclusion == "S_5");
  CHECK(verify_sn_certificate(*r.search.certificate).ok);
  REQUIRE(r.verdict);
  CHECK(r.verdict->conclusion == Conclusion::impossible);
}

TEST_CASE("numeric path equilibrium lands on a root of the eliminant factor") {
  const Layout x = numeric_equilibrium(path_graph(4), {}, {{0, 0}, {1, 0}, {2.1, 0}, {3, 0}}, 1e-11);
  const double a = x[1].x - x[0].x, b = x[2].x - x[1].x;
  CHECK(std::abs((x[3].x - x[2].x) - a) < 1e-9);
  const FrP3System s = fr_p3_system();
  CHECK(std::abs(s.p.eval(a, b)) < 1e-9);
  CHECK(std::abs(s.q.eval(a, b)) < 1e-9);
  const ZPoly f{144, 0, 0, 1440, 0, 0, -1196, 0, 0, 336, 0, 0, -48, 0, 0, 3};
  CHECK(std::abs(evaluate(f, b)) < 1e-6 * evaluate(ZPoly{144, 0, 0, 1440, 0, 0, 1196, 0, 0, 336, 0, 0, 48, 0, 0, 3}, b));
}

TEST_CASE("stored KK polynomial and its monic associate") {
  const KKReport r = kk_data_certify();
  CHECK(r.p.degree() == 18);
  CHECK(r.p.leading() == Integer("365580800000000"));
  CHECK(r.p.coeff(4) == 167184);
  CHECK(r.zero_order == 4);
  CHECK(r.f.degree() == 14);
  const auto& g = r.g.poly;
  CHECK(g.degree() == 14);
  CHECK(g.coeff(13) == -128360);
  CHECK(g.coeff(12) == Integer("4575935386"));
  CHECK(g.coeff(11) == Integer("-32609554186008"));
  CHECK(g.coeff(10) == Integer("120191907907039173"));
  // Oracle: x^14 f(258/x) / 167184.
  QPoly direct;
  Rational pw = 1;
  for (int i = 0; i <= 14; ++i) {
    direct += QPoly::monomial(Rational(r.f.coeff(i)) * pw / Rational(167184), 14 - i);
    pw *= 258;
  }
  CHECK(direct == to_rational(g));
  REQUIRE(r.search.certificate);
  CHECK(r.search.certificate->conclusion == "S_14");
  CHECK(r.search.certificate->ncycle.p == 67);
  CHECK(r.search.certificate->transposition.p == 113);
}

TEST_CASE("numeric KK equilibrium of kk4 satisfies the stored polynomial") {
  const ForceModel m{ForceKind::KK};
  const Layout x = numeric_equilibrium(kk4(), m, kk4_initial_layout(), 1e-11);
  const KKGeometry geo = kk_geometry(x);
  CHECK(std::abs(geo.cos_angle) < 1e-9);
  CHECK(geo.asymmetry < 1e-9);
  CHECK(geo.c > 0.1);
  const Rational p_at_c = evaluate(to_rational(kk_polynomial()), Rational(geo.c));
  CHECK(std::abs(p_at_c.get_d()) < 1e-8);
  CHECK_THROWS_AS(kk_geometry({{0, 0}, {0, 0}, {1, 0}, {2, 0}}), InvalidArgument);
}
