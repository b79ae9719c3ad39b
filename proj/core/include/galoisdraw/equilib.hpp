#pragma once

// Force-directed equilibria: Fruchterman-Reingold and Kamada-Kawai forces,
// a damped numeric solver, and the symbolic path and KK certificates.

#include <optional>
#include <vector>

#include "galoisdraw/bivariate.hpp"
#include "galoisdraw/galois.hpp"
#include "galoisdraw/graphlab.hpp"

namespace galoisdraw {

struct Point {
  double x = 0, y = 0;
};

using Layout = std::vector<Point>;

enum class ForceKind { FR, KK };

struct ForceModel {
  ForceKind kind = ForceKind::FR;
  double k = 1;  // FR scale
  double L = 1;  // KK rest-length scale
  double K = 1;  // KK stiffness scale
};

/// Net FR force per vertex: attraction d^2/k toward each neighbor and
/// repulsion k^2/d from every other vertex. Throws InvalidArgument on
/// coincident vertices.
std::vector<Point> fr_forces(const Graph& g, const Layout& layout, double k = 1);

struct KKEvaluation {
  double energy = 0;
  std::vector<Point> gradient;
};

/// Throws InvalidArgument on coincident vertices or a disconnected graph.
KKEvaluation kk_energy_gradient(const Graph& g, const Layout& layout, const ForceModel& model = {ForceKind::KK});

/// Thrown by numeric_equilibrium; keeps the last iterate.
class EquilibriumNotConverged : public NotConverged {
 public:
  EquilibriumNotConverged(const std::string& what, Layout last, double residual)
      : NotConverged(what), last_(std::move(last)), residual_(residual) {}
  const Layout& last() const { return last_; }
  double residual() const { return residual_; }

 private:
  Layout last_;
  double residual_;
};

struct SolverOptions {
  double step = 0.01;
  double damping = 0.9;
  std::size_t max_iterations = 1000000;
};

/// Damped fixed-step integration v <- damping v + step F, x <- x + v until
/// the largest per-vertex force (FR) or gradient (KK) norm drops below tol.
Layout numeric_equilibrium(const Graph& g, const ForceModel& model, Layout init, double tol,
                           const SolverOptions& opts = {});

/// Largest per-vertex force (FR) or gradient (KK) norm.
double equilibrium_residual(const Graph& g, const ForceModel& model, const Layout& layout);

/// Radius of the regular n-gon equilibrium of cycle:n, by bisection on the
/// radial force.
double cycle_equilibrium_radius(std::size_t n, const ForceModel& model = {});

/// Regular n-gon of the given radius, vertex 0 on the positive x axis.
Layout regular_polygon(std::size_t n, double radius);

// ---- path with three edges ------------------------------------------------

struct FrP3System {
  BiPoly p;  // numerator of the force on v0
  BiPoly q;  // numerator of the force on v1
  BiPoly p_den;
  BiPoly q_den;
};

/// Collinear path v0..v3 with spacings a, b, a and all scales 1.
FrP3System fr_p3_system();

struct FrP3Report {
  FrP3System system;
  Elimination eliminant;  // resultant in a
  ZPoly f;                // eliminant with the b^k factor removed
  unsigned power = 1;     // f(x) = g(x^power)
  ZPoly g;
  MonicAssociate h;
  SnSearch search;
  std::optional<ComputabilityVerdict> verdict;
};

/// Throws Error if the eliminant loses the expected degree-15 factor.
FrP3Report fr_p3_certify(const SnSearchOptions& opts = {});

// ---- Kamada-Kawai four-vertex data ----------------------------------------

/// Polynomial satisfied by the vertical offset c at the kk4 equilibrium,
/// stored as data.
ZPoly kk_polynomial();

struct KKReport {
  ZPoly p;
  unsigned zero_order = 0;  // power of c dividing p
  ZPoly f;
  MonicAssociate g;
  SnSearch search;
  std::optional<ComputabilityVerdict> verdict;
};

KKReport kk_data_certify(const SnSearchOptions& opts = {});

/// Geometry of a kk4 layout in the stored polynomial's variables.
struct KKGeometry {
  double a = 0, b = 0, c = 0;
  /// Cosine of the angle between u0u1 and u2u3; 0 for a right angle.
  double cos_angle = 0;
  /// |dist(u1,u2) - dist(u1,u3)|.
  double asymmetry = 0;
};

KKGeometry kk_geometry(const Layout& layout);

/// Initial kk4 layout shaped like the expected drawing.
Layout kk4_initial_layout();

}  // namespace galoisdraw
