#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "galoisdraw/cli.hpp"
#include "galoisdraw/text.hpp"

namespace galoisdraw::cli {

namespace {

struct Common {
  std::string graph;
  std::string json;
  std::string svg;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t prime_bound = 1000;
  double tol = 1e-9;
  CLI::Option* seed_opt = nullptr;
};

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed_opt && c.seed_opt->count() > 0) return c.seed;
  if (const char* env = std::getenv("GALOISDRAW_SEED"); env && *env) {
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(env, env + std::char_traits<char>::length(env), v);
    if (ec != std::errc{} || *end != '\0') throw InvalidArgument("GALOISDRAW_SEED is not an integer");
    return v;
  }
  return kDefaultSeed;
}

SnSearchOptions search_options(const Common& c) {
  SnSearchOptions o;
  o.prime_bound = c.prime_bound;
  o.seed = resolve_seed(c);
  o.irreducibility.seed = o.seed;
  return o;
}

MatrixKind matrix_kind(const std::string& s) {
  if (s == "adjacency") return MatrixKind::adjacency;
  if (s == "laplacian") return MatrixKind::laplacian;
  if (s == "rlaplacian") return MatrixKind::rlaplacian;
  if (s == "transition") return MatrixKind::transition;
  if (s == "mds") return MatrixKind::mds_centered;
  throw InvalidArgument("unknown matrix '" + s + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string strip_space(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  return s;
}

std::string read_poly_arg(const std::string& arg) {
  if (arg.starts_with("file:")) return strip_space(read_file(arg.substr(5)));
  return arg;
}

std::string degrees(const std::vector<unsigned>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

// JSON to a file, or to out for "-". Returns true if out received it.
bool emit_json(const Common& c, const Json& j, std::ostream& out) {
  if (c.json.empty()) return false;
  const std::string text = j.dump(2) + "\n";
  if (c.json == "-") {
    out << text;
    return true;
  }
  write_text(c.json, text);
  return false;
}

void print_verdict(std::ostream& out, const ComputabilityVerdict& v, const std::string& indent) {
  out << indent << describe(v) << "\n";
  for (const auto& c : v.justification) out << indent << "  [" << c.lemma << "] " << c.detail << "\n";
}

void print_search(std::ostream& out, const SnSearch& s, const std::optional<ComputabilityVerdict>& v,
                  const std::string& indent) {
  if (!s.certificate) {
    out << indent << "certificate: not found (" << s.failure << ")\n";
  } else {
    const auto& c = *s.certificate;
    out << indent << "certificate: " << c.conclusion << "\n";
    out << indent << "  irreducibility: " << to_string(c.irreducibility.method) << "\n";
    IntegerFactorization f = factor_cached(c.discriminant, std::chrono::seconds(10));
    out << indent << "  discriminant: " << c.discriminant.get_str();
    if (f.complete()) out << " = " << format_factorization(f);
    out << "\n";
    out << indent << "  (n-1)-cycle: p = " << c.ncycle.p << ", cycle type " << degrees(c.ncycle.cycle_type.degrees)
        << "\n";
    out << indent << "  transposition: p = " << c.transposition.p << ", cycle type "
        << degrees(c.transposition.cycle_type.degrees) << ", power " << c.transposition.power << "\n";
  }
  if (v) print_verdict(out, *v, indent);
}

std::string monic_line(const MonicAssociate& m) {
  std::string s = to_string(m.poly);
  if (m.transform)
    s += "  (x^" + std::to_string(m.transform->n) + " f(" + m.transform->c.get_str() + "/x) / " +
         m.transform->s.get_str() + ")";
  return s;
}

// 0 when some verdict is conclusive, 2 otherwise.
int verdict_status(const std::vector<const ComputabilityVerdict*>& vs) {
  for (const auto* v : vs)
    if (v && v->conclusion != Conclusion::unknown) return kExitOk;
  return kExitUnknown;
}

Graph graph_from(const Common& c, GraphSpec* spec_out = nullptr) {
  if (c.graph.empty()) throw InvalidArgument("--graph is required");
  GraphSpec spec = parse_graph_spec(c.graph);
  if (spec_out) *spec_out = spec;
  return build_graph(spec);
}

int cmd_charpoly(const Common& c, const std::string& matrix, const std::string& rho_text, std::ostream& out) {
  GraphSpec spec;
  const Graph g = graph_from(c, &spec);
  const MatrixKind kind = matrix_kind(matrix);
  const Rational rho = parse_rational(rho_text);
  const QPoly p = charpoly(graph_matrix(g, kind, rho));
  const ZFactorList fl = factor_over_Z(primitive(p).primitive, resolve_seed(c));
  Json j;
  j["command"] = "charpoly";
  j["graph"] = format_graph_spec(spec);
  j["matrix"] = to_string(kind);
  if (kind == MatrixKind::rlaplacian) j["rho"] = rho.get_str();
  j["charpoly"] = format_coefficients(p);
  Json fs = Json::array();
  for (const auto& f : fl.factors) fs.push_back({{"poly", format_coefficients(f.poly)}, {"multiplicity", f.multiplicity}});
  j["factors"] = fs;
  if (emit_json(c, j, out)) return kExitOk;
  out << "charpoly: " << to_string(p) << "\n";
  out << "coefficients: " << format_coefficients(p) << "\n";
  out << "factors over Z:\n";
  for (const auto& f : fl.factors) {
    out << "  " << to_string(f.poly);
    if (f.multiplicity > 1) out << "  (multiplicity " << f.multiplicity << ")";
    out << "\n";
  }
  return kExitOk;
}

int cmd_spectral(const Common& c, const std::string& matrix, const std::string& rho_text, std::ostream& out) {
  GraphSpec spec;
  const Graph g = graph_from(c, &spec);
  const MatrixKind kind = matrix_kind(matrix);
  const Rational rho = parse_rational(rho_text);
  SpectralOptions so;
  so.prime_bound = c.prime_bound;
  so.seed = resolve_seed(c);
  const SpectralReport r = spectral_certify(g, kind, rho, so);
  std::vector<const ComputabilityVerdict*> vs;
  for (const auto& f : r.factors)
    if (f.verdict) vs.push_back(&*f.verdict);
  const int status = verdict_status(vs);
  if (emit_json(c, spectral_json(spec, kind, rho, r), out)) return status;
  out << "charpoly: " << to_string(r.charpoly) << "\n";
  for (const auto& f : r.factors) {
    out << "factor " << to_string(f.factor);
    if (f.multiplicity > 1) out << "  (multiplicity " << f.multiplicity << ")";
    out << "\n";
    if (f.root) {
      out << "  eigenvalue " << f.root->get_str() << "\n";
      for (const auto& v : f.eigenvectors) {
        out << "  eigenvector (";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i].get_str();
        out << ")\n";
      }
    }
    if (f.monic) out << "  monic associate: " << monic_line(*f.monic) << "\n";
    if (f.search) print_search(out, *f.search, f.verdict, "  ");
  }
  return status;
}

int cmd_certify(const Common& c, const std::string& poly_arg, const std::string& stackel, std::ostream& out) {
  if (poly_arg.empty()) throw InvalidArgument("--poly is required");
  const QPoly q = parse_coefficients(read_poly_arg(poly_arg));
  if (q.degree() < 2) throw InvalidArgument("certify needs a polynomial of degree at least 2");
  const ZPoly input = primitive(q).primitive;
  const MonicAssociate m = input.is_monic() ? MonicAssociate{input, std::nullopt}
                                            : monic_associate(input, MonicStrategy::reverse_minimal);
  SnSearchOptions so = search_options(c);
  if (!stackel.empty()) {
    const std::size_t colon = stackel.find(':');
    if (colon == std::string::npos) throw InvalidArgument("--stackel expects LO:HI");
    so.irreducibility.stackel_range = std::pair{parse_integer(stackel.substr(0, colon)),
                                                parse_integer(stackel.substr(colon + 1))};
  }
  const SnSearch s = search_sn_certificate(m.poly, so);
  std::optional<ComputabilityVerdict> v;
  if (s.certificate) v = computability_verdict(*s.certificate, Model::radical, "roots of " + to_string(input));
  const int status = verdict_status({v ? &*v : nullptr});
  if (emit_json(c, certify_json(input, m, s, v), out)) return status;
  out << "polynomial: " << to_string(input) << "\n";
  if (m.transform) out << "monic associate: " << monic_line(m) << "\n";
  print_search(out, s, v, "");
  return status;
}

int cmd_fr_p3(const Common& c, std::ostream& out) {
  const FrP3Report r = fr_p3_certify(search_options(c));
  const int status = verdict_status({r.verdict ? &*r.verdict : nullptr});
  if (emit_json(c, fr_p3_json(r), out)) return status;
  out << "p(a,b) = " << to_string(r.system.p) << "\n";
  out << "q(a,b) = " << to_string(r.system.q) << "\n";
  out << "resultant in a: " << to_string(r.eliminant.raw, "b") << "\n";
  out << "f(b) = " << to_string(r.f, "b") << "\n";
  out << "f(x) = g(x^" << r.power << "), g = " << to_string(r.g) << "\n";
  out << "h = " << monic_line(r.h) << "\n";
  print_search(out, r.search, r.verdict, "");
  return status;
}

int cmd_kk(const Common& c, bool numeric, double tol, std::ostream& out) {
  const KKReport r = kk_data_certify(search_options(c));
  const int status = verdict_status({r.verdict ? &*r.verdict : nullptr});
  Json j = kk_json(r);
  std::optional<KKGeometry> geo;
  double p_at_c = 0;
  if (numeric) {
    const Layout l = numeric_equilibrium(kk4(), ForceModel{ForceKind::KK}, kk4_initial_layout(), tol);
    geo = kk_geometry(l);
    p_at_c = std::abs(evaluate(to_rational(r.p), Rational(geo->c)).get_d());
    j["numeric"] = {{"a", geo->a},           {"b", geo->b},
                    {"c", geo->c},           {"p_at_c", p_at_c},
                    {"cos_angle", geo->cos_angle}, {"asymmetry", geo->asymmetry}};
  }
  if (emit_json(c, j, out)) return status;
  out << "p(c) = " << to_string(r.p, "c") << "\n";
  out << "c^" << r.zero_order << " divides p\n";
  out << "g = " << monic_line(r.g) << "\n";
  print_search(out, r.search, r.verdict, "");
  if (geo)
    out << "numeric equilibrium: c = " << geo->c << ", |p(c)| = " << p_at_c << ", cos angle = " << geo->cos_angle
        << "\n";
  return status;
}

std::optional<std::array<std::size_t, 3>> parse_triple(const std::vector<std::size_t>& v) {
  if (v.empty()) return std::nullopt;
  if (v.size() != 3) throw InvalidArgument("--outer takes three vertices");
  return std::array<std::size_t, 3>{v[0], v[1], v[2]};
}

int cmd_pack(const Common& c, const std::vector<std::size_t>& outer_arg, const std::vector<std::size_t>& hubs,
             std::ostream& out) {
  const Graph g = graph_from(c);
  const auto outer = parse_triple(outer_arg).value_or(default_outer_face(g));
  PackerResult r = pack_graph_numeric(g, outer, c.tol);
  Packing p = r.packing;
  if (!hubs.empty()) {
    if (hubs.size() != 2) throw InvalidArgument("--concentric takes two vertices");
    p = normalize_concentric(p, hubs[0], hubs[1]);
  }
  const PackingCheck chk = check_packing(p);
  if (!c.svg.empty()) write_text(c.svg, packing_svg(p));
  Json j;
  j["command"] = "pack";
  j["graph"] = c.graph;
  j["outer"] = outer;
  j["sweeps"] = r.sweeps;
  j["angle_error"] = r.angle_error;
  j["tangency"] = chk.tangency;
  j["overlap"] = chk.overlap;
  Json cs = Json::array();
  for (const auto& ci : p.circles) cs.push_back({ci.center.real(), ci.center.imag(), ci.radius});
  j["circles"] = cs;
  if (emit_json(c, j, out)) return kExitOk;
  out << format_packing(p);
  out << "# sweeps " << r.sweeps << ", angle error " << r.angle_error << ", tangency " << chk.tangency
      << ", overlap " << chk.overlap << "\n";
  return kExitOk;
}

int cmd_pack2n(const Common& c, unsigned n, bool skip_numeric, std::ostream& out) {
  if (!c.graph.empty()) {
    const GraphSpec spec = parse_graph_spec(c.graph);
    if (spec.name != "pack" || spec.args[0] != 2) throw InvalidArgument("pack2n expects --graph pack:2:N");
    n = static_cast<unsigned>(spec.args[1]);
  }
  if (n == 0) throw InvalidArgument("pack2n needs --graph pack:2:N or --n N");
  Pack2nOptions o;
  o.search = search_options(c);
  o.numeric = !skip_numeric;
  const Pack2nReport r = pack2n_certify(n, o);
  std::vector<const ComputabilityVerdict*> vs;
  for (const auto& f : r.factors)
    if (f.verdict) vs.push_back(&*f.verdict);
  const int status = verdict_status(vs);
  if (!c.svg.empty()) write_text(c.svg, packing_svg(pack2n_numeric_packing(n)));
  if (emit_json(c, pack2n_json(r), out)) return status;
  out << "X = " << to_string(r.poly.X.num(), "b") << " / (" << to_string(r.poly.X.den(), "b") << ")\n";
  out << "a = " << to_string(r.poly.a_of_b.num(), "b") << " / (" << to_string(r.poly.a_of_b.den(), "b") << ")\n";
  out << "f(b) = " << to_string(r.poly.f, "b") << "\n";
  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    const auto& f = r.factors[i];
    out << "factor " << i << ": " << to_string(f.factor, "b");
    if (f.multiplicity > 1) out << "  (multiplicity " << f.multiplicity << ")";
    if (f.mirror) out << "  [b -> 1-b gives factor " << *f.mirror << "]";
    out << "\n";
    if (f.monic) out << "  monic associate: " << monic_line(*f.monic) << "\n";
    if (f.search) print_search(out, *f.search, f.verdict, "  ");
  }
  if (r.numeric) {
    const auto& m = *r.numeric;
    out << "numeric: b = " << m.b << ", a = " << m.a << ", partner = " << m.partner << ", |f(b)| = " << m.f_at_b
        << ", nearest factor " << m.root_factor << " (|value| " << m.min_factor_at_b << ")\n";
  } else if (!r.numeric_failure.empty()) {
    out << "numeric: " << r.numeric_failure << "\n";
  }
  return status;
}

std::size_t rim_size(const Common& c, std::size_t k) {
  if (!c.graph.empty()) {
    const GraphSpec spec = parse_graph_spec(c.graph);
    if (spec.name != "bipyr" && spec.name != "cycle")
      throw InvalidArgument("expected --graph bipyr:K or cycle:K");
    k = static_cast<std::size_t>(spec.args[0]);
  }
  if (k < 3) throw InvalidArgument("rim size must be at least 3");
  return k;
}

int cmd_bipyr(const Common& c, std::size_t k, std::ostream& out) {
  k = rim_size(c, k);
  const auto vs = bipyr_verdicts(k);
  std::vector<const ComputabilityVerdict*> ps;
  Json j;
  j["command"] = "bipyr";
  j["k"] = k;
  Json arr = Json::array();
  for (const auto& v : vs) {
    ps.push_back(&v);
    arr.push_back(verdict_json(v));
  }
  j["verdicts"] = arr;
  const int status = verdict_status(ps);
  if (emit_json(c, j, out)) return status;
  for (const auto& v : vs) print_verdict(out, v, "");
  return status;
}

int cmd_lowerbound(const Common& c, const std::string& model_text, std::ostream& out) {
  const std::size_t k = rim_size(c, 0);
  if (!c.svg.empty()) {
    if (parse_graph_spec(c.graph).name == "cycle") {
      write_text(c.svg, layout_svg(cycle_graph(k), regular_polygon(k, cycle_equilibrium_radius(k))));
    } else {
      const Graph g = bipyramid(k);
      const Packing p = pack_graph_numeric(g, default_outer_face(g)).packing;
      write_text(c.svg, packing_svg(normalize_concentric(p, k, k + 1)));
    }
  }
  const Model model = model_text == "quadratic" ? Model::quadratic : Model::root;
  const ComputabilityVerdict v = computability_verdict(root_of_unity_degree(k), model, c.graph);
  const int status = verdict_status({&v});
  Json j;
  j["command"] = "lowerbound";
  j["graph"] = c.graph;
  j["verdict"] = verdict_json(v);
  if (emit_json(c, j, out)) return status;
  switch (v.conclusion) {
    case Conclusion::degree_lower_bound: out << "degree \u2265 " << v.bound.get_str() << "\n"; break;
    case Conclusion::impossible: out << "impossible\n"; break;
    case Conclusion::unknown: out << "unknown\n"; break;
  }
  for (const auto& ci : v.justification) out << "  [" << ci.lemma << "] " << ci.detail << "\n";
  return status;
}

int cmd_scan(const Common& c, const std::string& kind, std::uint64_t limit, double threshold, std::ostream& out) {
  Json j;
  j["command"] = "scan";
  j["kind"] = kind;
  j["limit"] = limit;
  if (kind == "sophie-germain") {
    const auto ps = sophie_germain_scan(limit);
    j["primes"] = ps;
    if (emit_json(c, j, out)) return kExitOk;
    for (std::size_t i = 0; i < ps.size(); ++i) out << (i ? " " : "") << ps[i];
    out << "\n";
    return kExitOk;
  }
  const PhiExponentScan s = phi_exponent_scan(limit, threshold);
  j["threshold"] = threshold;
  j["primes"] = s.entries.size();
  j["at_least_threshold"] = s.at_least_threshold;
  j["fraction"] = s.fraction();
  if (emit_json(c, j, out)) return kExitOk;
  out << s.at_least_threshold << " of " << s.entries.size() << " primes have exponent >= " << threshold
      << " (fraction " << s.fraction() << ")\n";
  return kExitOk;
}

int cmd_eliminate(const Common& c, const std::string& p_text, const std::string& q_text, std::ostream& out) {
  if (p_text.empty() || q_text.empty()) throw InvalidArgument("--p and --q are required");
  const BiPoly P = parse_bivariate(read_poly_arg(p_text));
  const BiPoly Q = parse_bivariate(read_poly_arg(q_text));
  const Elimination e = eliminate_resultant(P, Q);
  Json j;
  j["command"] = "eliminate";
  j["p"] = format_bivariate(P);
  j["q"] = format_bivariate(Q);
  j["resultant"] = format_coefficients(e.raw);
  j["squarefree_primitive"] = format_coefficients(e.squarefree_primitive);
  if (emit_json(c, j, out)) return kExitOk;
  out << "resultant in a: " << to_string(e.raw, "b") << "\n";
  out << "squarefree primitive part: " << to_string(e.squarefree_primitive, "b") << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, std::ostream& out) {
  Json j;
  try {
    j = Json::parse(path == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : read_file(path));
  } catch (const Json::parse_error& ex) {
    throw InvalidArgument(std::string("invalid JSON: ") + ex.what());
  }
  const VerifyOutcome v = verify_json(j);
  if (v.results.empty()) out << "no certificates found\n";
  for (std::size_t i = 0; i < v.results.size(); ++i)
    out << "certificate " << i << ": " << (v.results[i].ok ? "accepted" : "rejected: " + v.results[i].diagnostic)
        << "\n";
  return v.all_ok() ? kExitOk : kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois-theoretic certificates for graph drawings", "galoisdraw"};
  app.require_subcommand(1, 1);
  Common c;
  std::function<int()> action;

  auto with_common = [&](CLI::App* sub, bool graph) {
    if (graph) sub->add_option("--graph", c.graph, "graph spec, e.g. cycle:7, pack:2:5, file:edges.txt");
    sub->add_option("--json", c.json, "write JSON to PATH ('-' for stdout)");
    return sub;
  };
  auto with_search = [&](CLI::App* sub) {
    sub->add_option("--prime-bound", c.prime_bound, "largest prime sampled")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "randomness seed for modular factoring");
    return sub;
  };

  std::string matrix = "adjacency", rho = "0";
  const std::vector<std::string> matrices{"adjacency", "laplacian", "rlaplacian", "transition", "mds"};

  auto* charpoly_cmd = with_search(with_common(app.add_subcommand("charpoly", "characteristic polynomial"), true));
  charpoly_cmd->add_option("--matrix", matrix)->check(CLI::IsMember(matrices));
  charpoly_cmd->add_option("--rho", rho, "relaxation parameter for rlaplacian");
  charpoly_cmd->callback([&] { action = [&] { return cmd_charpoly(c, matrix, rho, out); }; });

  auto* spectral_cmd = with_search(with_common(app.add_subcommand("spectral", "certify a spectral drawing"), true));
  spectral_cmd->add_option("--matrix", matrix)->check(CLI::IsMember(matrices));
  spectral_cmd->add_option("--rho", rho, "relaxation parameter for rlaplacian");
  spectral_cmd->callback([&] { action = [&] { return cmd_spectral(c, matrix, rho, out); }; });

  std::string poly, stackel;
  auto* certify_cmd = with_search(with_common(app.add_subcommand("certify", "S_n certificate for a polynomial"), false));
  certify_cmd->add_option("--poly", poly, "coefficients low degree first, or file:PATH")->required();
  certify_cmd->add_option("--stackel", stackel, "Stackel search range LO:HI");
  certify_cmd->callback([&] { action = [&] { return cmd_certify(c, poly, stackel, out); }; });

  auto* fr_cmd = with_search(with_common(app.add_subcommand("fr-p3", "FR equilibrium of the path with three edges"), false));
  fr_cmd->callback([&] { action = [&] { return cmd_fr_p3(c, out); }; });

  bool kk_numeric = false;
  double kk_tol = 1e-11;
  auto* kk_cmd = with_search(with_common(app.add_subcommand("kk-data", "stored KK polynomial certificate"), false));
  kk_cmd->add_flag("--numeric", kk_numeric, "cross-check against a numeric KK equilibrium");
  kk_cmd->add_option("--tol", kk_tol, "solver tolerance on the gradient norm");
  kk_cmd->callback([&] { action = [&] { return cmd_kk(c, kk_numeric, kk_tol, out); }; });

  std::vector<std::size_t> outer, hubs;
  auto* pack_cmd = with_common(app.add_subcommand("pack", "numeric circle packing"), true);
  pack_cmd->add_option("--tol", c.tol, "packing tolerance");
  pack_cmd->add_option("--svg", c.svg, "write an SVG figure");
  pack_cmd->add_option("--outer", outer, "outer face vertices")->delimiter(',');
  pack_cmd->add_option("--concentric", hubs, "normalize two hubs to concentric circles")->delimiter(',');
  pack_cmd->callback([&] { action = [&] { return cmd_pack(c, outer, hubs, out); }; });

  unsigned n = 0;
  bool skip_numeric = false;
  auto* pack2n_cmd = with_search(with_common(app.add_subcommand("pack2n", "Pack(2,n) certificates"), true));
  pack2n_cmd->add_option("--n", n, "odd n >= 5");
  pack2n_cmd->add_flag("--skip-numeric", skip_numeric, "skip the numeric packing cross-check");
  pack2n_cmd->add_option("--svg", c.svg, "write an SVG of the concentric packing");
  pack2n_cmd->callback([&] { action = [&] { return cmd_pack2n(c, n, skip_numeric, out); }; });

  std::size_t k = 0;
  auto* bipyr_cmd = with_common(app.add_subcommand("bipyr", "verdicts for the bipyramid"), true);
  bipyr_cmd->add_option("--k", k, "rim size");
  bipyr_cmd->callback([&] { action = [&] { return cmd_bipyr(c, k, out); }; });

  std::string model = "root";
  auto* lb_cmd = with_common(app.add_subcommand("lowerbound", "root-tree lower bound for a regular cycle"), true);
  lb_cmd->add_option("--model", model)->check(CLI::IsMember({"quadratic", "root"}));
  lb_cmd->add_option("--svg", c.svg, "write the regular drawing (FR equilibrium or concentric packing)");
  lb_cmd->callback([&] { action = [&] { return cmd_lowerbound(c, model, out); }; });

  std::string kind = "sophie-germain";
  std::uint64_t limit = 100;
  double threshold = 0.677;
  auto* scan_cmd = with_common(app.add_subcommand("scan", "number-theory scans"), false);
  scan_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sophie-germain", "phi-exponent"}));
  scan_cmd->add_option("--limit", limit);
  scan_cmd->add_option("--threshold", threshold);
  scan_cmd->callback([&] { action = [&] { return cmd_scan(c, kind, limit, threshold, out); }; });

  std::string p_text, q_text;
  auto* elim_cmd = with_common(app.add_subcommand("eliminate", "resultant in a of two polynomials in a, b"), false);
  elim_cmd->add_option("--p", p_text, "bivariate form or file:PATH")->required();
  elim_cmd->add_option("--q", q_text, "bivariate form or file:PATH")->required();
  elim_cmd->callback([&] { action = [&] { return cmd_eliminate(c, p_text, q_text, out); }; });

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "re-verify certificates in a JSON file");
  verify_cmd->add_option("file", verify_path, "JSON file ('-' for stdin)")->required();
  verify_cmd->callback([&] { action = [&] { return cmd_verify(verify_path, out); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "galoisdraw: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  // Only the selected subcommand's --seed counts; otherwise the environment
  // variable may override the default.
  c.seed_opt = app.get_subcommands().front()->get_option_no_throw("--seed");
  try {
    return action();
  } catch (const std::exception& e) {
    err << "galoisdraw: error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace galoisdraw::cli
