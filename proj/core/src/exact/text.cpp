#include "galoisdraw/text.hpp"

#include <cctype>
#include <sstream>

namespace galoisdraw {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <class T>
std::string format_list(const Poly<T>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += f.coeffs()[i].get_str();
  }
  return out;
}

// Monomial body, e.g. "x^3", "x" or "" for degree 0.
std::string power(std::string_view var, std::size_t k) {
  if (k == 0) return {};
  std::string s(var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

template <class T>
std::string coefficient_text(const T& magnitude, bool has_body) {
  if (has_body && magnitude == 1) return {};
  std::string s = magnitude.get_str();
  if constexpr (std::is_same_v<T, Rational>) {
    if (has_body && magnitude.get_den() != 1) s = "(" + s + ")";
  }
  return s;
}

template <class T>
std::string human(const Poly<T>& f, std::string_view var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    T mag = neg ? T(-c[i]) : c[i];
    std::string body = power(var, i);
    std::string term = coefficient_text(mag, !body.empty()) + body;
    if (first) {
      out += neg ? "-" + term : term;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  s = trim(s);
  std::size_t slash = s.find('/');
  std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (num.size() > 1 && num.front() == '+') num.remove_prefix(1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw InvalidArgument("malformed rational '" + std::string(s) + "'");
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(s) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  if (s.size() > 1 && s.front() == '+') s.remove_prefix(1);
  if (!valid_integer_text(s)) throw InvalidArgument("malformed integer '" + std::string(s) + "'");
  return Integer(std::string(s));
}

QPoly parse_coefficients(std::string_view s) {
  if (trim(s).empty()) throw InvalidArgument("empty coefficient list");
  std::vector<Rational> c;
  std::size_t idx = 0;
  for (auto item : split(s, ',')) {
    try {
      c.push_back(parse_rational(item));
    } catch (const InvalidArgument&) {
      throw InvalidArgument("coefficient " + std::to_string(idx) + " ('" + std::string(trim(item)) +
                            "') is not a rational number");
    }
    ++idx;
  }
  return QPoly(std::move(c));
}

ZPoly parse_integer_coefficients(std::string_view s) {
  QPoly q = parse_coefficients(s);
  for (std::size_t i = 0; i < q.coeffs().size(); ++i)
    if (q.coeffs()[i].get_den() != 1)
      throw InvalidArgument("coefficient " + std::to_string(i) + " is not an integer");
  return to_integer(q);
}

std::string format_coefficients(const ZPoly& f) { return format_list(f); }
std::string format_coefficients(const QPoly& f) { return format_list(f); }

std::string to_string(const ZPoly& f, std::string_view var) { return human(f, var); }
std::string to_string(const QPoly& f, std::string_view var) { return human(f, var); }

std::string to_string(const BiPoly& f, std::string_view a, std::string_view b) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    const auto& row = f.coeffs()[i].coeffs();
    for (std::size_t j = row.size(); j-- > 0;) {
      if (row[j] == 0) continue;
      const bool neg = row[j] < 0;
      Integer mag = neg ? Integer(-row[j]) : row[j];
      std::string body = power(a, i) + power(b, j);
      std::string term = coefficient_text(mag, !body.empty()) + body;
      if (first) {
        out += neg ? "-" + term : term;
        first = false;
      } else {
        out += neg ? " - " : " + ";
        out += term;
      }
    }
  }
  return out;
}

BiPoly parse_bivariate(std::string_view s) {
  if (trim(s).empty()) throw InvalidArgument("empty bivariate polynomial");
  std::vector<ZPoly> rows;
  for (auto row : split(s, ';')) {
    if (trim(row).empty()) {
      rows.emplace_back();
      continue;
    }
    rows.push_back(parse_integer_coefficients(row));
  }
  return BiPoly(std::move(rows));
}

std::string format_bivariate(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ';';
    out += format_coefficients(f.coeffs()[i]);
  }
  return out;
}

}  // namespace galoisdraw
