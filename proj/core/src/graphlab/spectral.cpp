#include "galoisdraw/graphlab.hpp"
#include "galoisdraw/text.hpp"

namespace galoisdraw {

SpectralReport spectral_certify(const Graph& g, MatrixKind kind, const Rational& rho, const SpectralOptions& opts) {
  SpectralReport rep;
  rep.matrix = graph_matrix(g, kind, rho);
  rep.charpoly = charpoly(rep.matrix);
  rep.factorization = factor_over_Z(primitive(rep.charpoly).primitive, opts.seed);
  for (const auto& f : rep.factorization.factors) {
    SpectralFactor sf;
    sf.factor = f.poly;
    sf.multiplicity = f.multiplicity;
    if (f.poly.degree() == 1) {
      sf.root = Rational(-f.poly.coeffs()[0], f.poly.coeffs()[1]);
      sf.root->canonicalize();
      sf.eigenvectors = rational_eigenvectors(rep.matrix, *sf.root);
    } else {
      sf.monic = monic_associate(f.poly, opts.monic);
      SnSearchOptions so;
      so.prime_bound = opts.prime_bound;
      so.seed = opts.seed;
      so.irreducibility.stackel_range = opts.stackel_range;
      sf.search = search_sn_certificate(sf.monic->poly, so);
      if (sf.search->certificate)
        sf.verdict = computability_verdict(*sf.search->certificate, Model::radical,
                                           "roots of " + to_string(f.poly));
    }
    rep.factors.push_back(std::move(sf));
  }
  return rep;
}

}  // namespace galoisdraw
