#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "galoisdraw/cli.hpp"
#include "support.hpp"

using namespace galoisdraw;
using namespace galoisdraw::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("galoisdraw_test_" + name)).string();
}

std::vector<Json> base_certificates() {
  std::vector<Json> out;
  const auto budget = std::chrono::milliseconds(2000);
  out.push_back(certificate_json(*fr_p3_certify().search.certificate, budget));
  const SpectralReport y = spectral_certify(y9(), MatrixKind::laplacian);
  out.push_back(certificate_json(*y.factors[1].search->certificate, budget));
  Pack2nOptions po;
  po.numeric = false;
  for (const auto& f : pack2n_certify(5, po).factors) out.push_back(certificate_json(*f.search->certificate, budget));
  SnSearchOptions so;
  so.irreducibility.stackel_range = {Integer(0), Integer(90)};
  const ZPoly q8 = testing::z_high_first({1, -16, 104, -354, 678, -730, 417, -110, 9});
  out.push_back(certificate_json(*search_sn_certificate(q8, so).certificate, budget));
  so.irreducibility.stackel_range.reset();
  out.push_back(certificate_json(*search_sn_certificate(ZPoly{-1, -1, 0, 0, 0, 1}, so).certificate, budget));
  return out;
}

std::string bump_residue_list(const std::string& s, std::uint64_t p, long which) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) parts.push_back(t);
  auto& t = parts[static_cast<std::size_t>(which) % (parts.size() - 1)];  // keep the monic leading 1
  t = std::to_string((std::stoull(t) + 1 + static_cast<std::uint64_t>(testing::uniform(0, 1000)) % (p - 1)) % p);
  std::string r;
  for (std::size_t i = 0; i < parts.size(); ++i) r += (i ? "," : "") + parts[i];
  return r;
}

std::string bump_coefficients(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) parts.push_back(t);
  const std::size_t i = static_cast<std::size_t>(testing::uniform(0, static_cast<long>(parts.size()) - 2));
  parts[i] = Integer(Integer(parts[i]) + testing::uniform(1, 5) * (testing::uniform(0, 1) ? 1 : -1)).get_str();
  std::string r;
  for (std::size_t k = 0; k < parts.size(); ++k) r += (k ? "," : "") + parts[k];
  return r;
}

// One random semantic corruption of a certificate.
Json mutate(Json c, int op) {
  const char* role = testing::uniform(0, 1) ? "ncycle" : "transposition";
  Json& prime = c["primes"][role];
  const auto pick = [](const Json& arr) { return static_cast<std::size_t>(testing::uniform(0, static_cast<long>(arr.size()) - 1)); };
  switch (op) {
    case 0: c["poly"] = bump_coefficients(c["poly"].get<std::string>()); break;
    case 1:
      c["discriminant"] = Integer(Integer(c["discriminant"].get<std::string>()) + testing::uniform(1, 1000)).get_str();
      break;
    case 2: c["degree"] = c["degree"].get<int>() + (testing::uniform(0, 1) ? 1 : -1); break;
    case 3: c["conclusion"] = testing::uniform(0, 1) ? "A_" + std::to_string(c["degree"].get<int>()) : "S_3"; break;
    case 4: {
      auto& l = c["lemmas"];
      if (testing::uniform(0, 1)) l.erase(pick(l));
      else l[pick(l)] = "every group is S_n";
      break;
    }
    case 5: prime["p"] = prime["p"].get<std::uint64_t>() == 2 ? 3 : 2; break;
    case 6: {
      auto& ct = prime["cycle_type"];
      const std::size_t i = pick(ct);
      ct[i] = ct[i].get<unsigned>() + 1;
      break;
    }
    case 7: {
      auto& f = prime["factors"];
      const std::size_t i = pick(f);
      f[i] = bump_residue_list(f[i].get<std::string>(), prime["p"].get<std::uint64_t>(), testing::uniform(0, 40));
      if (f[i].get<std::string>().find(',') == std::string::npos) f.erase(i);  // nothing to bump on a constant
      break;
    }
    case 8: prime["factors"].erase(pick(prime["factors"])); break;
    case 9: c["primes"]["transposition"]["power"] = c["primes"]["transposition"]["power"].get<unsigned>() + 2; break;
    case 10: {
      const std::string m = c["irreducibility"]["method"].get<std::string>();
      c["irreducibility"]["method"] = m == "stackel" ? "single-prime" : "stackel";
      break;
    }
    case 11: {
      auto& w = c["irreducibility"]["witnesses"];
      if (w.empty()) {
        c["irreducibility"]["method"] = "undetermined";
      } else if (w[0].is_string()) {
        w[pick(w)] = w[0];
        if (w.size() > 1 && w[0] == w[1]) break;
        w.erase(0);
      } else {
        auto& ct = w[pick(w)]["cycle_type"];
        ct = Json::array({c["degree"].get<int>() - 1, 1});
      }
      break;
    }
    case 12: {
      static const char* keys[] = {"poly", "degree", "discriminant", "irreducibility", "primes", "conclusion", "lemmas"};
      c.erase(keys[testing::uniform(0, 6)]);
      break;
    }
    case 13: c["discriminant"] = c["discriminant"].get<std::string>() + "x"; break;
    case 14:
      if (c.contains("discriminant_factored")) c["discriminant_factored"] = "2^3 * 5";
      else c["discriminant"] = "0";
      break;
    default: {
      // Swap the two roles.
      std::swap(c["primes"]["ncycle"], c["primes"]["transposition"]);
      c["primes"]["ncycle"].erase("power");
      c["primes"]["transposition"]["power"] = 1;
      break;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("graph spec parsing") {
  const GraphSpec s = parse_graph_spec("pack:2:5");
  CHECK(s.name == "pack");
  CHECK(s.args == std::vector<long>{2, 5});
  CHECK(format_graph_spec(s) == "pack:2:5");
  CHECK(parse_graph_spec("y9").args.empty());
  CHECK(format_graph_spec(parse_graph_spec("cycle:7")) == "cycle:7");
  const auto message = [](const std::string& spec) {
    try {
      parse_graph_spec(spec);
    } catch (const InvalidArgument& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message("cycle:7:9").rfind("position 7:", 0) == 0);
  CHECK(message("wheel:5").rfind("position 0:", 0) == 0);
  CHECK(message("cycle:x").rfind("position 6:", 0) == 0);
  CHECK(message("cycle").find("position") == 0);
  CHECK(message("file:/nonexistent/g.txt").rfind("position 5:", 0) == 0);
  CHECK(message("") != "accepted");
}

TEST_CASE("certificate JSON round trip and verification") {
  for (const Json& j : base_certificates()) {
    const SnCertificate c = certificate_from_json(j);
    CHECK(verify_sn_certificate(c).ok);
    CHECK(certificate_json(c, std::chrono::milliseconds(2000)) == j);
    CHECK(verify_json(j).all_ok());
    CHECK(verify_json(Json::array({j, j})).results.size() == 2);
    CHECK(verify_json(Json{{"certificates", Json::array({j})}}).all_ok());
  }
  const Json first = base_certificates()[0];
  CHECK(first["discriminant_factored"] == "-2^6 * 3^9 * 2341^2 * 2749");
  CHECK_FALSE(verify_json(Json::object()).all_ok());
  CHECK_FALSE(verify_json(Json(42)).all_ok());
}

TEST_CASE("JSON-level mutation fuzz: every corrupted certificate is rejected") {
  const std::vector<Json> bases = base_certificates();
  int tried = 0, rejected = 0;
  for (int t = 0; t < 1200; ++t) {
    const Json& base = bases[static_cast<std::size_t>(t) % bases.size()];
    const Json m = mutate(base, static_cast<int>(testing::uniform(0, 15)));
    if (m == base) continue;
    ++tried;
    const VerifyOutcome v = verify_json(m);
    if (!v.all_ok()) {
      ++rejected;
    } else {
      FAIL_CHECK("accepted mutation: " << m.dump());
    }
  }
  CHECK(tried >= 1000);
  CHECK(rejected == tried);
}

TEST_CASE("SVG output") {
  const std::string c7 = layout_svg(cycle_graph(7), regular_polygon(7, 1));
  CHECK(count(c7, "<circle") == 7);
  CHECK(count(c7, "<line") == 7);
  CHECK(c7.rfind("<svg", 0) == 0);
  const Graph b7 = bipyramid(7);
  const Packing p = normalize_concentric(pack_graph_numeric(b7, default_outer_face(b7)).packing, 7, 8);
  CHECK(count(packing_svg(p), "<circle") == 9);
  const std::string empty = layout_svg(Graph(), {});
  CHECK(empty.find("viewBox=\"0 0 1 1\"") != std::string::npos);
  CHECK(count(empty, "<circle") == 0);
  CHECK_THROWS(layout_svg(path_graph(2), {{0, 0}, {NAN, 1}}));
}

TEST_CASE("layout text round trip") {
  const Layout l = regular_polygon(5, 2);
  std::istringstream in(format_layout(l));
  const Layout back = parse_layout(in);
  REQUIRE(back.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    // Ten significant digits in the text form.
    CHECK(std::abs(back[i].x - l[i].x) < 1e-9);
    CHECK(std::abs(back[i].y - l[i].y) < 1e-9);
  }
}

TEST_CASE("CLI exit statuses") {
  const Run lb = run_cli({"lowerbound", "--graph", "cycle:23"});
  CHECK(lb.code == kExitOk);
  CHECK(lb.out.find("degree ≥ 11") != std::string::npos);
  CHECK(run_cli({"certify", "--poly", "1,0,1"}).code == kExitUnknown);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"spectral", "--graph", "y9", "--matrix", "nope"}).code == kExitUsage);
  CHECK(run_cli({"spectral", "--graph", "cycle:7:9"}).code == kExitError);
  CHECK(run_cli({"--help"}).code == kExitOk);
  CHECK(run_cli({"fr-p3"}).code == kExitOk);
}

TEST_CASE("CLI JSON is deterministic and verifies") {
  const std::vector<std::string> args{"pack2n", "--n", "5", "--skip-numeric", "--json", "-"};
  const Run a = run_cli(args), b = run_cli(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const std::string path = temp_path("pack2n.json");
  {
    std::ofstream f(path);
    f << a.out;
  }
  const Run v = run_cli({"verify", path});
  CHECK(v.code == kExitOk);
  CHECK(count(v.out, "accepted") == 2);
  Json j = Json::parse(a.out);
  j["certificates"][1]["primes"]["ncycle"]["p"] = 2;
  {
    std::ofstream f(path);
    f << j.dump();
  }
  const Run bad = run_cli({"verify", path});
  CHECK(bad.code == kExitError);
  CHECK(bad.out.find("rejected") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("CLI SVG files") {
  const std::string path = temp_path("c7.svg");
  REQUIRE(run_cli({"lowerbound", "--graph", "cycle:7", "--svg", path}).code == kExitOk);
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  CHECK(count(svg, "<circle") == 7);
  CHECK(count(svg, "<line") == 7);
  std::filesystem::remove(path);
}
