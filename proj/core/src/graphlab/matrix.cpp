#include <queue>

#include "galoisdraw/graphlab.hpp"

namespace galoisdraw {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = i + 1; j < c_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw InvalidArgument("matrix shapes differ");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw InvalidArgument("matrix shapes differ");
  Matrix r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.c_ != y.r_) throw InvalidArgument("matrix shapes do not chain");
  Matrix r(x.r_, y.c_);
  for (std::size_t i = 0; i < x.r_; ++i)
    for (std::size_t k = 0; k < x.c_; ++k) {
      const Rational& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.c_; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

Matrix operator*(const Rational& s, const Matrix& x) {
  Matrix r = x;
  for (auto& v : r.a_) v *= s;
  return r;
}

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::degree: return "degree";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::rlaplacian: return "rlaplacian";
    case MatrixKind::transition: return "transition";
    case MatrixKind::mds_centered: return "mds";
  }
  return "?";
}

Matrix apsp_squared(const Graph& g) {
  const std::size_t n = g.size();
  Matrix m(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    std::queue<std::size_t> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (auto w : g.neighbors(v))
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (dist[t] < 0) throw InvalidArgument("graph is disconnected");
      m.at(s, t) = dist[t] * dist[t];
    }
  }
  return m;
}

Matrix graph_matrix(const Graph& g, MatrixKind kind, const Rational& rho) {
  const std::size_t n = g.size();
  Matrix A(n, n), D(n, n);
  for (const auto& [u, v] : g.edges()) A.at(u, v) = A.at(v, u) = 1;
  for (std::size_t i = 0; i < n; ++i) D.at(i, i) = static_cast<long>(g.degree(i));
  switch (kind) {
    case MatrixKind::adjacency: return A;
    case MatrixKind::degree: return D;
    case MatrixKind::laplacian: return D - A;
    case MatrixKind::rlaplacian: return (D - A) - rho * D;
    case MatrixKind::transition: {
      Matrix T(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (g.degree(i) == 0) throw InvalidArgument("transition matrix needs no isolated vertices");
        Rational inv(1, static_cast<long>(g.degree(i)));
        for (auto j : g.neighbors(i)) T.at(i, j) = inv;
      }
      return T;
    }
    case MatrixKind::mds_centered: {
      if (!g.connected()) throw InvalidArgument("MDS centering needs a connected graph");
      Matrix J = Matrix::identity(n) - Rational(1, static_cast<long>(n)) * [&] {
        Matrix ones(n, n);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) ones.at(i, j) = 1;
        return ones;
      }();
      return J * apsp_squared(g) * J;
    }
  }
  throw InvalidArgument("unknown matrix kind");
}

QPoly charpoly(const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return QPoly::constant(1);
  // c holds the coefficients of the leading k x k block, highest degree first.
  std::vector<Rational> c{1, -m.at(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // q = [1, -a, -R C, -R M C, ..., -R M^(k-1) C]
    std::vector<Rational> q(k + 2);
    q[0] = 1;
    q[1] = -m.at(k, k);
    std::vector<Rational> v(k);  // M^i C, starting with C
    for (std::size_t i = 0; i < k; ++i) v[i] = m.at(i, k);
    for (std::size_t i = 0; i < k; ++i) {
      Rational dot = 0;
      for (std::size_t j = 0; j < k; ++j) dot += m.at(k, j) * v[j];
      q[i + 2] = -dot;
      if (i + 1 < k) {
        std::vector<Rational> w(k);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t j = 0; j < k; ++j) w[r] += m.at(r, j) * v[j];
        v = std::move(w);
      }
    }
    std::vector<Rational> next(k + 2);
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) next[i] += q[i - j] * c[j];
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return QPoly(std::move(c));
}

Matrix evaluate_at(const QPoly& p, const Matrix& m) {
  if (!m.is_square()) throw InvalidArgument("polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * m + c[i] * Matrix::identity(n);
  return acc;
}

std::vector<std::vector<Integer>> rational_eigenvectors(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw InvalidArgument("eigenvectors of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m - lambda * Matrix::identity(n);
  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(a.at(row, j), a.at(piv, j));
    Rational inv = 1 / a.at(row, col);
    for (std::size_t j = 0; j < n; ++j) a.at(row, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rational f = a.at(r, col);
      for (std::size_t j = 0; j < n; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Integer>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a.at(r, free);
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<Integer> iv(n);
    Integer g = 0;
    for (std::size_t i = 0; i < n; ++i) {
      iv[i] = v[i].get_num() * (l / v[i].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), iv[i].get_mpz_t());
    }
    Integer sign = 1;
    for (const auto& x : iv)
      if (x != 0) {
        sign = x < 0 ? -1 : 1;
        break;
      }
    for (auto& x : iv) x = sign * x / g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace galoisdraw
