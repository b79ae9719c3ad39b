#include "galoisdraw/bivariate.hpp"

#include <algorithm>

namespace galoisdraw {

BiPoly::BiPoly(std::vector<ZPoly> by_a) : c_(std::move(by_a)) { normalize(); }

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::constant(const Integer& v) { return BiPoly({ZPoly::constant(v)}); }
BiPoly BiPoly::a() { return BiPoly({ZPoly{}, ZPoly::constant(1)}); }
BiPoly BiPoly::b() { return BiPoly({ZPoly::x()}); }

BiPoly BiPoly::from_terms(const std::vector<std::tuple<Integer, unsigned, unsigned>>& terms) {
  BiPoly r;
  for (const auto& [c, i, j] : terms) {
    std::vector<ZPoly> v(i + 1);
    v[i] = ZPoly::monomial(c, j);
    r += BiPoly(std::move(v));
  }
  return r;
}

int BiPoly::degree_b() const {
  int d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& p : r.c_) p = -p;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<ZPoly> r(x.c_.size() + y.c_.size() - 1);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) r[i + j] += x.c_[i] * y.c_[j];
  }
  return BiPoly(std::move(r));
}

BiPoly operator*(const Integer& s, const BiPoly& x) {
  std::vector<ZPoly> r = x.c_;
  for (auto& p : r) p *= s;
  return BiPoly(std::move(r));
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r = constant(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

BiPoly BiPoly::swap_variables() const {
  const int db = degree_b();
  if (db < 0) return {};
  std::vector<std::vector<Integer>> rows(static_cast<std::size_t>(db + 1), std::vector<Integer>(c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].coeffs().size(); ++j) rows[j][i] = c_[i].coeffs()[j];
  std::vector<ZPoly> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.emplace_back(std::move(r));
  return BiPoly(std::move(out));
}

}  // namespace galoisdraw
