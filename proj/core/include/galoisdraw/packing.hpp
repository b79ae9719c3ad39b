#pragma once

// Circle packings: a numeric radius-relaxation packer, Mobius maps, the
// concentric normal form, and the symbolic Pack(2,n) certificates.

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "galoisdraw/galois.hpp"
#include "galoisdraw/graphlab.hpp"
#include "galoisdraw/ratfunc.hpp"

namespace galoisdraw {

using Complex = std::complex<double>;

struct Circle {
  Complex center;
  double radius = 1;
};

struct Packing {
  Graph graph;
  std::vector<Circle> circles;
};

struct PackingCheck {
  double tangency = 0;  // max | |ci - cj| - (ri + rj) | over edges
  double overlap = 0;   // max overlap depth over non-edges, 0 if disjoint
  bool ok(double tol) const { return tangency < tol && overlap < tol; }
};

PackingCheck check_packing(const Packing& p);

struct PackerOptions {
  double relaxation = 0.5;
  double angle_tol = 1e-12;
  std::size_t max_sweeps = 100000;
};

struct PackerResult {
  Packing packing;
  std::size_t sweeps = 0;
  double angle_error = 0;  // max |angle sum - 2 pi| over interior vertices
};

/// Packs a maximal planar graph inside three mutually tangent unit circles
/// for the given outer face. Throws InvalidArgument for non-planar or
/// non-maximal input or a triple that is not a face, NotConverged if the
/// radii do not settle, and Error if the laid-out packing misses tol.
PackerResult pack_graph_numeric(const Graph& g, const std::array<std::size_t, 3>& outer, double tol = 1e-9,
                                const PackerOptions& opts = {});

/// A face through the lowest-numbered vertex of maximum degree.
std::array<std::size_t, 3> default_outer_face(const Graph& g);

/// Angle sum at an interior vertex for the current radii, given its cyclic
/// neighbor order.
double angle_sum(double r, const std::vector<double>& neighbor_radii);

// ---- Mobius maps ----------------------------------------------------------

/// z -> (a w + b) / (c w + d) with w = conj(z) when conjugate_first.
struct MobiusMap {
  Complex a{1}, b{0}, c{0}, d{1};
  bool conjugate_first = false;

  static MobiusMap identity() { return {}; }
  /// z -> q + r^2 / conj(z - q)
  static MobiusMap inversion(Complex q, double r);
  Complex det() const { return a * d - b * c; }
};

Complex mobius_apply(const MobiusMap& m, Complex z);
/// Throws InvalidArgument if the image is a line (the circle passes through
/// the pole).
Circle mobius_apply(const MobiusMap& m, const Circle& c);
/// outer after inner.
MobiusMap compose(const MobiusMap& outer, const MobiusMap& inner);

/// Map sending two disjoint circles to concentric ones: the identity if they
/// already are, otherwise an inversion centered at a limiting point. For
/// side-by-side circles the limiting point inside c1 is used (c1 becomes the
/// outer circle); for nested circles the one outside both. Throws
/// InvalidArgument for intersecting or tangent circles.
MobiusMap concentric_map(const Circle& c1, const Circle& c2);

/// Limiting points of two non-concentric disjoint circles, the one nearer c1
/// first.
std::array<Complex, 2> limiting_points(const Circle& c1, const Circle& c2);

/// Concentric normal form: hubs concentric at the origin, circle `unit`
/// scaled to radius 1 and circle `axis` centered on the positive x axis.
/// Both default to the lowest vertex adjacent to both hubs.
Packing normalize_concentric(const Packing& p, std::size_t hub1, std::size_t hub2,
                             std::optional<std::size_t> unit = std::nullopt,
                             std::optional<std::size_t> axis = std::nullopt);

// ---- Pack(2,n) ------------------------------------------------------------

struct Pack2nPolynomial {
  unsigned n = 0;
  RatFunc X;       // cosine at B between the inner hub side and a rim circle
  RatFunc a_of_b;  // inner hub radius from the around-B relation
  RatFunc U;
  RatFunc V;
  ZPoly f;
};

/// n odd, n >= 5; even n throws Unsupported.
Pack2nPolynomial pack2n_polynomial(unsigned n);

struct Pack2nFactor {
  ZPoly factor;
  unsigned multiplicity = 1;
  /// Index of a factor h with factor(b) = h(1 - b), if any.
  std::optional<std::size_t> mirror;
  std::optional<MonicAssociate> monic;
  std::optional<SnSearch> search;
  std::optional<ComputabilityVerdict> verdict;
};

struct Pack2nNumeric {
  double b = 0;         // radius of the pair circle touching the inner hub
  double a = 0;         // inner hub radius
  double partner = 0;   // radius of the other pair circle
  double f_at_b = 0;    // |f(b)| evaluated exactly at the double b
  double min_factor_at_b = 0;  // smallest |factor(b)|
  std::size_t root_factor = 0; // index of that factor
  double packer_angle_error = 0;
  PackingCheck check;
};

struct Pack2nReport {
  Pack2nPolynomial poly;
  std::vector<Pack2nFactor> factors;
  std::optional<Pack2nNumeric> numeric;
  std::string numeric_failure;
};

struct Pack2nOptions {
  SnSearchOptions search;
  bool numeric = true;
};

Pack2nReport pack2n_certify(unsigned n, const Pack2nOptions& opts = {});

/// Numeric concentric packing of Pack(2,n) in the normal form of the
/// symbolic derivation (rim circles of radius 1).
Packing pack2n_numeric_packing(unsigned n, PackerResult* raw = nullptr);

/// Quadratic and root verdicts for Bipyr(k) from the rim roots of unity.
std::vector<ComputabilityVerdict> bipyr_verdicts(std::size_t k);

/// Field degree of Q(zeta_k).
FieldDegree root_of_unity_degree(std::size_t k);

}  // namespace galoisdraw
