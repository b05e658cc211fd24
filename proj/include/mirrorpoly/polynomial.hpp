#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mirrorpoly/matrix.hpp"

namespace mirrorpoly {

/// Exponent matrix of an invertible polynomial: row i holds the exponents of
/// monomial i, column j belongs to variable j. Coefficients are all 1.
///
/// Construction checks shape, non-negativity, nonzero rows and det != 0.
/// Positivity of the weight system is checked by primitive_weight_system(),
/// not here, so that transposition stays total.
class ExponentMatrix {
 public:
  static constexpr std::size_t kMaxVariables = 6;

  explicit ExponentMatrix(IntMatrix rows) : a_(std::move(rows)) {
    const std::size_t n = a_.rows();
    if (n == 0 || n > kMaxVariables)
      throw DomainError("exponent matrix must have between 1 and 6 rows");
    if (a_.cols() != n) throw DomainError("exponent matrix must be square (n monomials in n variables)");
    for (std::size_t i = 0; i < n; ++i) {
      bool nonzero = false;
      for (Int e : a_.row(i)) {
        if (e < 0) throw DomainError("negative exponent in exponent matrix");
        nonzero = nonzero || e > 0;
      }
      if (!nonzero) throw DomainError("monomial " + std::to_string(i + 1) + " is constant");
    }
    if (determinant(a_) == 0) throw SingularMatrixError("exponent matrix is singular");
  }

  ExponentMatrix(std::initializer_list<std::initializer_list<Int>> rows)
      : ExponentMatrix(IntMatrix::from_rows(rows)) {}

  std::size_t size() const { return a_.rows(); }
  const IntMatrix& matrix() const { return a_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  IntVec monomial(std::size_t i) const { return a_.row_vec(i); }

  Int det() const { return determinant(a_); }

  /// A^{-1}, exact.
  RatMatrix inverse_matrix() const { return *inverse(to_rational(a_)); }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  IntMatrix a_;
};

/// Primitive weights (q_1..q_n) and degree h with A q = h (1,...,1).
struct WeightSystem {
  IntVec q;
  Int h = 0;

  Int sum() const {
    Int s = 0;
    for (Int x : q) s = checked::add(s, x);
    return s;
  }
  /// The Calabi-Yau condition q_1 + ... + q_n = h.
  bool is_calabi_yau() const { return sum() == h; }

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
};

inline std::string to_string(const WeightSystem& w) {
  std::string s;
  for (Int x : w.q) s += std::to_string(x) + " ";
  return s + "; " + std::to_string(w.h);
}

/// x,y,z,w for up to four variables, x1..xn beyond.
inline std::vector<std::string> default_variables(std::size_t n) {
  static const std::vector<std::string> xyzw = {"x", "y", "z", "w"};
  if (n <= xyzw.size()) return {xyzw.begin(), xyzw.begin() + static_cast<std::ptrdiff_t>(n)};
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline Int parse_uint(std::string_view s, std::string_view context) {
  if (!all_digits(s)) throw ParseError("expected a non-negative integer in '" + std::string(context) + "'");
  Int v = 0;
  for (char c : s) v = checked::add(checked::mul(v, 10), c - '0');
  return v;
}

}  // namespace detail

/// Number of '+'-separated monomials in `text`.
inline std::size_t count_monomials(std::string_view text) {
  auto s = detail::strip_spaces(text);
  if (s.empty()) return 0;
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '+')) + 1;
}

/// Parses a sum of coefficient-1 monomials, e.g. "x^6+x*y^3+z^2+w^18".
///
///   polynomial := monomial ('+' monomial)*
///   monomial   := factor ('*' factor)*
///   factor     := var ('^' posint)?
///
/// A literal factor "1" is tolerated; any other numeric coefficient is
/// rejected. Repeated variables inside one monomial add their exponents.
inline ExponentMatrix parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) throw ParseError("empty polynomial");
  const auto monomials = detail::split(s, '+');
  if (monomials.size() != variables.size())
    throw ParseError("polynomial has " + std::to_string(monomials.size()) + " monomials but " +
                     std::to_string(variables.size()) + " variables");

  IntMatrix a(variables.size(), variables.size());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (monomials[i].empty()) throw ParseError("empty monomial in '" + s + "'");
    for (const auto& factor : detail::split(monomials[i], '*')) {
      if (factor.empty()) throw ParseError("empty factor in monomial '" + monomials[i] + "'");
      if (detail::all_digits(factor)) {
        if (detail::parse_uint(factor, factor) != 1)
          throw ParseError("coefficient " + factor + " is not 1 in monomial '" + monomials[i] + "'");
        continue;
      }
      auto caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      Int exponent = 1;
      if (caret != std::string::npos) {
        exponent = detail::parse_uint(factor.substr(caret + 1), factor);
        if (exponent == 0) throw ParseError("exponent must be positive in '" + factor + "'");
      }
      auto it = std::find(variables.begin(), variables.end(), name);
      if (it == variables.end()) throw ParseError("unknown variable '" + name + "'");
      auto j = static_cast<std::size_t>(it - variables.begin());
      a(i, j) = checked::add(a(i, j), exponent);
    }
    bool nonzero = std::any_of(a.row(i).begin(), a.row(i).end(), [](Int e) { return e != 0; });
    if (!nonzero) throw ParseError("monomial '" + monomials[i] + "' is constant");
  }
  return ExponentMatrix(std::move(a));
}

/// Parses with default_variables() sized to the monomial count.
inline ExponentMatrix parse_polynomial(std::string_view text) {
  return parse_polynomial(text, default_variables(count_monomials(text)));
}

inline std::string print_polynomial(const ExponentMatrix& a, const std::vector<std::string>& variables) {
  if (variables.size() != a.size()) throw DomainError("variable list does not match polynomial size");
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += "+";
    bool first = true;
    for (std::size_t j = 0; j < a.size(); ++j) {
      Int e = a(i, j);
      if (e == 0) continue;
      if (!first) out += "*";
      first = false;
      out += variables[j];
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

inline std::string print_polynomial(const ExponentMatrix& a) {
  return print_polynomial(a, default_variables(a.size()));
}

/// Berglund-Huebsch transpose: the polynomial of A^T.
inline ExponentMatrix transpose(const ExponentMatrix& a) { return ExponentMatrix(a.matrix().transpose()); }

/// The unique primitive positive integer solution of A q = h (1,...,1).
inline WeightSystem primitive_weight_system(const ExponentMatrix& a) {
  RatVec ones(a.size(), Rational(1));
  RatVec qh = mat_vec(a.inverse_matrix(), ones);  // q / h
  for (std::size_t i = 0; i < qh.size(); ++i)
    if (qh[i].sign() <= 0)
      throw DomainError("weight of variable " + std::to_string(i + 1) + " is not positive");
  IntVec q = primitive(clear_denominators(qh));
  // h = q_i / (q_i / h) for any i
  Rational h = Rational(q[0]) / qh[0];
  if (!h.is_integer()) throw DomainError("degree is not an integer");
  return {q, h.num()};
}

/// F(x_1, ..., x_n, 0): drops every monomial involving the last variable and
/// the last column. Fails unless exactly n monomials in n variables remain.
inline ExponentMatrix restrict_to_first_n(const ExponentMatrix& a) {
  const std::size_t n = a.size();
  if (n < 2) throw DomainError("cannot restrict a one-variable polynomial");
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (a(i, n - 1) > 0) continue;
    rows.emplace_back(a.matrix().row(i).begin(), a.matrix().row(i).end() - 1);
  }
  if (rows.size() != n - 1)
    throw DomainError("restriction to the first " + std::to_string(n - 1) + " variables leaves " +
                      std::to_string(rows.size()) + " monomials");
  try {
    return ExponentMatrix(IntMatrix::from_rows(rows));
  } catch (const Error& e) {
    throw DomainError(std::string("restriction is not an invertible polynomial: ") + e.what());
  }
}

}  // namespace mirrorpoly
