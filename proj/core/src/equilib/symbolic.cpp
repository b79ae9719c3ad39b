#include <algorithm>
#include <cmath>

#include "galoisdraw/equilib.hpp"
#include "galoisdraw/polyalg.hpp"

namespace galoisdraw {

namespace {

// Sum of num_i / den_i over Z[a, b] with each den_i a product of linear
// distance forms; the common denominator is the product of the distinct
// forms.
struct ForceSum {
  std::vector<std::pair<BiPoly, std::vector<BiPoly>>> terms;

  void add(BiPoly num, std::vector<BiPoly> den = {}) { terms.emplace_back(std::move(num), std::move(den)); }

  std::pair<BiPoly, BiPoly> collect() const {
    std::vector<BiPoly> forms;
    for (const auto& [n, den] : terms)
      for (const auto& f : den)
        if (std::find(forms.begin(), forms.end(), f) == forms.end()) forms.push_back(f);
    BiPoly num, common = BiPoly::constant(1);
    for (const auto& f : forms) common = common * f;
    for (const auto& [n, den] : terms) {
      BiPoly t = n;
      for (const auto& f : forms)
        if (std::find(den.begin(), den.end(), f) == den.end()) t = t * f;
      num += t;
    }
    return {num, common};
  }
};

// Force along +x on vertex i of a collinear drawing with increasing
// positions; k = 1, so attraction is d^2 and repulsion 1/d.
std::pair<BiPoly, BiPoly> collinear_force(const Graph& g, const std::vector<BiPoly>& pos, std::size_t i) {
  ForceSum s;
  const BiPoly one = BiPoly::constant(1);
  for (std::size_t j = 0; j < pos.size(); ++j) {
    if (j == i) continue;
    const bool right = j > i;
    const BiPoly d = right ? pos[j] - pos[i] : pos[i] - pos[j];
    if (g.has_edge(i, j)) s.add(right ? d * d : -(d * d));
    s.add(right ? -one : one, {d});
  }
  return s.collect();
}

}  // namespace

FrP3System fr_p3_system() {
  const Graph path = path_graph(4);
  const BiPoly a = BiPoly::a(), b = BiPoly::b();
  const std::vector<BiPoly> pos{BiPoly{}, a, a + b, a + a + b};
  FrP3System s;
  std::tie(s.p, s.p_den) = collinear_force(path, pos, 0);
  std::tie(s.q, s.q_den) = collinear_force(path, pos, 1);
  return s;
}

namespace {

ZPoly fr_expected_factor() { return ZPoly{144, 0, 0, 1440, 0, 0, -1196, 0, 0, 336, 0, 0, -48, 0, 0, 3}; }

std::optional<ComputabilityVerdict> radical_verdict(const SnSearch& s, const std::string& subject) {
  if (!s.certificate) return std::nullopt;
  return computability_verdict(*s.certificate, Model::radical, subject);
}

}  // namespace

FrP3Report fr_p3_certify(const SnSearchOptions& opts) {
  FrP3Report r;
  r.system = fr_p3_system();
  r.eliminant = eliminate_resultant(r.system.p, r.system.q);
  if (!exact_quotient(r.eliminant.raw, fr_expected_factor()))
    throw Error("eliminant is not divisible by the expected degree-15 factor");
  // Drop the degenerate b = 0 roots.
  ZPoly f = r.eliminant.squarefree_primitive;
  while (!f.is_zero() && f.coeff(0) == 0) f = *exact_quotient(f, ZPoly::x());
  r.f = f;
  r.power = static_cast<unsigned>(exponent_gcd(f));
  r.g = power_substitute(f, r.power);
  r.h = monic_associate(r.g, MonicStrategy::reverse_minimal);
  r.search = search_sn_certificate(r.h.poly, opts);
  r.verdict = radical_verdict(r.search, "the middle spacing b of the path with three edges");
  return r;
}

ZPoly kk_polynomial() {
  const char* coeffs[] = {
      "0",
      "0",
      "0",
      "0",
      "167184",
      "-83177280",
      "11493047016",
      "-317453745456",
      "4535144373717",
      "-40028929618536",
      "234371204926092",
      "-947252378063088",
      "2703932242407045",
      "-5501379135910008",
      "7939897360159392",
      "-7950536566252800",
      "5257074184960000",
      "-2065812736000000",
      "365580800000000",
  };
  std::vector<Integer> c;
  for (const char* s : coeffs) c.emplace_back(s);
  return ZPoly(std::move(c));
}

KKReport kk_data_certify(const SnSearchOptions& opts) {
  KKReport r;
  r.p = kk_polynomial();
  ZPoly f = r.p;
  while (f.coeff(0) == 0) {
    f = *exact_quotient(f, ZPoly::x());
    ++r.zero_order;
  }
  r.f = f;
  r.g = monic_associate(primitive_part(f), MonicStrategy::reverse_minimal);
  r.search = search_sn_certificate(r.g.poly, opts);
  r.verdict = radical_verdict(r.search, "the vertical offset c of the four-vertex Kamada-Kawai drawing");
  return r;
}

KKGeometry kk_geometry(const Layout& l) {
  if (l.size() != 4) throw InvalidArgument("kk4 layout needs four positions");
  const double ux = l[1].x - l[0].x, uy = l[1].y - l[0].y;
  const double a = std::hypot(ux, uy);
  if (a == 0) throw InvalidArgument("u0 and u1 coincide");
  const double ex = ux / a, ey = uy / a;
  const double wx = l[2].x - l[1].x, wy = l[2].y - l[1].y;
  KKGeometry geo;
  geo.a = a;
  geo.b = wx * ex + wy * ey;
  geo.c = std::abs(ex * wy - ey * wx);
  const double vx = l[3].x - l[2].x, vy = l[3].y - l[2].y;
  geo.cos_angle = (vx * ex + vy * ey) / std::hypot(vx, vy);
  geo.asymmetry = std::abs(std::hypot(wx, wy) - std::hypot(l[3].x - l[1].x, l[3].y - l[1].y));
  return geo;
}

Layout kk4_initial_layout() { return {{-1.0, 0.0}, {0.0, 0.0}, {0.5, 0.5}, {0.5, -0.5}}; }

}  // namespace galoisdraw
