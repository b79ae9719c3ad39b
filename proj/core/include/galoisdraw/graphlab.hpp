#pragma once

// Graphs, exact graph matrices, characteristic polynomials and the spectral
// certification pipeline.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galoisdraw/exact.hpp"
#include "galoisdraw/galois.hpp"
#include "galoisdraw/polyalg.hpp"

namespace galoisdraw {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph on vertices 0..n-1; edges stored with u < v,
/// sorted.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, repeated edges or out-of-range ends.
  Graph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  bool connected() const;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<std::vector<std::size_t>> adj_;
};

/// A named graph with integer parameters, or an edge-list file.
struct GraphSpec {
  std::string name;
  std::vector<long> args;
  std::string path;  // for name == "file"
};

Graph build_graph(const GraphSpec& spec);

Graph cycle_graph(std::size_t n);
/// Path with n vertices.
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// k-cycle 0..k-1 with apexes k and k+1.
Graph bipyramid(std::size_t k);
/// Cycle of k(n+1) slots where every (n+1)-th slot holds an adjacent pair;
/// hubs are the last two vertices (inner hub first).
Graph pack_graph(std::size_t k, std::size_t n);
Graph y9();
Graph h12();
Graph kk4();
Graph grid2x3();

/// One "u v" pair per line; blank lines and '#' comments ignored.
Graph read_edge_list(std::istream& in);

// ---- exact matrices -------------------------------------------------------

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Rational& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  bool is_square() const { return r_ == c_; }
  bool is_symmetric() const;

  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Rational& s, const Matrix& x);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

enum class MatrixKind { adjacency, degree, laplacian, rlaplacian, transition, mds_centered };

std::string to_string(MatrixKind k);

/// rlaplacian is L - rho D; mds_centered is J D2 J with J = I - (1/n) 11^T
/// and D2 the squared-distance matrix (no -1/2 factor).
Matrix graph_matrix(const Graph& g, MatrixKind kind, const Rational& rho = 0);

/// Monic det(xI - M) by Berkowitz's division-free recurrence.
QPoly charpoly(const Matrix& m);

/// p(M) by Horner.
Matrix evaluate_at(const QPoly& p, const Matrix& m);

/// Basis of ker(M - lambda I), each vector scaled to coprime integers with a
/// positive first nonzero entry. Empty if lambda is not an eigenvalue.
std::vector<std::vector<Integer>> rational_eigenvectors(const Matrix& m, const Rational& lambda);

/// Squared BFS distances; throws InvalidArgument if g is disconnected.
Matrix apsp_squared(const Graph& g);

// ---- spectral pipeline ----------------------------------------------------

struct SpectralOptions {
  std::uint64_t prime_bound = 1000;
  std::uint64_t seed = kDefaultSeed;
  MonicStrategy monic = MonicStrategy::reverse_constant;
  /// Optional Stackel range handed to the irreducibility test.
  std::optional<std::pair<Integer, Integer>> stackel_range;
};

struct SpectralFactor {
  ZPoly factor;
  unsigned multiplicity = 1;
  /// Degree-one factors: the eigenvalue and its eigenvectors.
  std::optional<Rational> root;
  std::vector<std::vector<Integer>> eigenvectors;
  /// Higher degree: monic associate, certificate search and verdict.
  std::optional<MonicAssociate> monic;
  std::optional<SnSearch> search;
  std::optional<ComputabilityVerdict> verdict;
};

struct SpectralReport {
  Matrix matrix;
  QPoly charpoly;
  ZFactorList factorization;
  std::vector<SpectralFactor> factors;
};

SpectralReport spectral_certify(const Graph& g, MatrixKind kind, const Rational& rho = 0,
                                const SpectralOptions& opts = {});

}  // namespace galoisdraw
