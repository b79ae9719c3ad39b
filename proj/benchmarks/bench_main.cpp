#include <benchmark/benchmark.h>

#include "galoisdraw/equilib.hpp"
#include "galoisdraw/galois.hpp"
#include "galoisdraw/graphlab.hpp"
#include "galoisdraw/packing.hpp"
#include "galoisdraw/polyalg.hpp"

using namespace galoisdraw;

namespace {

ZPoly y9_quotient() { return ZPoly{9, -110, 417, -730, 678, -354, 104, -16, 1}; }

void BM_Charpoly(benchmark::State& state) {
  const Matrix m = graph_matrix(cycle_graph(static_cast<std::size_t>(state.range(0))), MatrixKind::laplacian);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly(m));
}
BENCHMARK(BM_Charpoly)->Arg(8)->Arg(16)->Arg(32);

void BM_FactorModP(benchmark::State& state) {
  const ZPoly g = kk_data_certify().g.poly;
  const auto p = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_mod_p(g, p));
}
BENCHMARK(BM_FactorModP)->Arg(67)->Arg(113)->Arg(1000003);

void BM_FactorOverZ(benchmark::State& state) {
  const ZPoly f = pack2n_polynomial(static_cast<unsigned>(state.range(0))).f;
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_Z(f));
}
BENCHMARK(BM_FactorOverZ)->Arg(5)->Arg(7)->Arg(9);

void BM_CertificateSearch(benchmark::State& state) {
  const ZPoly q = y9_quotient();
  for (auto _ : state) {
    SnSearch s = search_sn_certificate(q);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_CertificateSearch);

void BM_CertificateVerify(benchmark::State& state) {
  const SnCertificate c = *search_sn_certificate(y9_quotient()).certificate;
  for (auto _ : state) benchmark::DoNotOptimize(verify_sn_certificate(c));
}
BENCHMARK(BM_CertificateVerify);

void BM_Packer(benchmark::State& state) {
  const Graph g = pack_graph(2, static_cast<std::size_t>(state.range(0)));
  const auto outer = default_outer_face(g);
  for (auto _ : state) benchmark::DoNotOptimize(pack_graph_numeric(g, outer));
}
BENCHMARK(BM_Packer)->Arg(5)->Arg(9)->Arg(15);

void BM_KKSolver(benchmark::State& state) {
  const ForceModel m{ForceKind::KK};
  for (auto _ : state) benchmark::DoNotOptimize(numeric_equilibrium(kk4(), m, kk4_initial_layout(), 1e-11));
}
BENCHMARK(BM_KKSolver);

void BM_FRPathCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fr_p3_certify());
}
BENCHMARK(BM_FRPathCertificate);

}  // namespace
BENCHMARK_MAIN();
