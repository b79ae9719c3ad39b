#pragma once

// Command-line plumbing: graph specs, JSON certificates and reports, SVG
// figures and verb dispatch.

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "galoisdraw/equilib.hpp"
#include "galoisdraw/galois.hpp"
#include "galoisdraw/graphlab.hpp"
#include "galoisdraw/packing.hpp"
#include "galoisdraw/primes.hpp"

namespace galoisdraw::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;

/// NAME(":" INT)* or "file:" PATH. Errors are InvalidArgument with a
/// "position N:" prefix (0-based offset into s).
GraphSpec parse_graph_spec(std::string_view s);

/// "cycle:7", "file:g.txt".
std::string format_graph_spec(const GraphSpec& spec);

// ---- JSON -----------------------------------------------------------------

/// factor_integer, memoized per (value, budget).
IntegerFactorization factor_cached(const Integer& n, std::chrono::milliseconds budget);

/// "-2^6 * 3^9 * 2341^2 * 2749"; an unfactored cofactor is appended as is.
std::string format_factorization(const IntegerFactorization& f);

/// Certificate schema; discriminant_factored is included when the
/// discriminant factors within the budget.
Json certificate_json(const SnCertificate& c, std::chrono::milliseconds factor_budget = std::chrono::seconds(10));

/// Throws InvalidArgument on missing or ill-typed fields.
SnCertificate certificate_from_json(const Json& j);

Json verdict_json(const ComputabilityVerdict& v);
Json search_json(const SnSearch& s);

/// Reports carry their certificates in a top-level "certificates" array;
/// factor entries refer to them by index.
Json spectral_json(const GraphSpec& spec, MatrixKind kind, const Rational& rho, const SpectralReport& r);
Json fr_p3_json(const FrP3Report& r);
Json kk_json(const KKReport& r);
Json pack2n_json(const Pack2nReport& r);
Json certify_json(const ZPoly& input, const MonicAssociate& monic, const SnSearch& search,
                  const std::optional<ComputabilityVerdict>& verdict);

struct VerifyOutcome {
  std::vector<Verification> results;
  bool all_ok() const;
};

/// Accepts a bare certificate, an object with a "certificates" array, or
/// such an array itself. Malformed entries are rejected, not thrown.
VerifyOutcome verify_json(const Json& j);

// ---- text forms and SVG ---------------------------------------------------

/// One "x y" line per vertex.
std::string format_layout(const Layout& layout);
Layout parse_layout(std::istream& in);
/// One "cx cy r" line per vertex.
std::string format_packing(const Packing& p);

/// Points and segments; y grows upward in the drawing.
std::string layout_svg(const Graph& g, const Layout& layout);
/// Stroked circles.
std::string packing_svg(const Packing& p);

// ---- dispatch -------------------------------------------------------------

/// argv without the program name. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galoisdraw::cli
