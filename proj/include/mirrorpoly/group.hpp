#pragma once

#include <algorithm>
#include <compare>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mirrorpoly/normal_form.hpp"
#include "mirrorpoly/polynomial.hpp"

namespace mirrorpoly {

/// Diagonal symmetry in additive notation: (a_1, ..., a_n) in (Q/Z)^n stands
/// for diag(exp(2 pi i a_1), ..., exp(2 pi i a_n)). Components live in [0, 1).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(RatVec components) : c_(std::move(components)) {
    for (auto& x : c_) x = x.frac();
  }
  /// 1/d (a_1, ..., a_n)
  GroupElement(Int d, const IntVec& numerators) {
    for (Int a : numerators) c_.push_back(Rational(a, d).frac());
  }

  static GroupElement zero(std::size_t n) { return GroupElement(RatVec(n)); }

  std::size_t size() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const RatVec& components() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  /// Least common denominator of the components, i.e. the element order.
  Int order() const {
    Int l = 1;
    for (const auto& x : c_) l = lcm(l, x.den());
    return l;
  }

  GroupElement operator-() const {
    RatVec v;
    for (const auto& x : c_) v.push_back(-x);
    return GroupElement(std::move(v));
  }
  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (a.size() != b.size()) throw DomainError("group elements of different dimension");
    RatVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a.c_[i] + b.c_[i];
    return GroupElement(std::move(v));
  }
  friend GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }
  friend GroupElement operator*(Int k, const GroupElement& g) {
    RatVec v;
    for (const auto& x : g.c_) v.push_back(x * Rational(k));
    return GroupElement(std::move(v));
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

  /// "(1/6,5/18,1/2)"
  std::string str() const { return to_string(c_); }

 private:
  RatVec c_;
};

/// An element lies in SL_n iff its components sum to an integer.
inline bool is_sl(const GroupElement& g) {
  Rational s;
  for (const auto& x : g.components()) s += x;
  return s.is_integer();
}

/// Finite subgroup of (Q/Z)^n given by generators. With D a common
/// denominator, G is encoded by the lattice D G + D Z^n in Z^n, so order,
/// membership and equality are Hermite-form computations. The element set is
/// enumerated only on request and is shared by copies.
class DiagonalGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  DiagonalGroup(std::size_t n, std::vector<GroupElement> generators)
      : n_(n), gens_(std::move(generators)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
      if (g.size() != n_) throw DomainError("generator dimension does not match the group");
  }

  static DiagonalGroup trivial(std::size_t n) { return DiagonalGroup(n, {}); }

  std::size_t dim() const { return n_; }
  const std::vector<GroupElement>& generators() const { return gens_; }

  /// All elements, sorted. Throws CapExceededError past `cap` elements.
  const std::vector<GroupElement>& elements(std::size_t cap = kDefaultCap) const& {
    if (order() > cap) throw CapExceededError("group has more than " + std::to_string(cap) + " elements");
    const Lattice& l = lattice();
    std::lock_guard lock(cache_->mutex);
    if (!cache_->elements) cache_->elements = enumerate(l);
    return *cache_->elements;
  }

  // A temporary group hands out a copy, so range-for over it stays valid.
  std::vector<GroupElement> elements(std::size_t cap = kDefaultCap) && {
    return static_cast<const DiagonalGroup&>(*this).elements(cap);
  }

  /// D^n / det(lattice) = product of D / b_ii over the Hermite diagonal.
  std::size_t order() const {
    const auto& l = lattice();
    std::size_t ord = 1;
    for (std::size_t i = 0; i < n_; ++i) ord = static_cast<std::size_t>(checked::mul(static_cast<Int>(ord), l.d / l.basis(i, i)));
    return ord;
  }

  bool contains(const GroupElement& g) const {
    if (g.size() != n_) return false;
    const auto& l = lattice();
    IntVec v;
    for (const auto& x : g.components()) {
      Rational y = x * Rational(l.d);
      if (!y.is_integer()) return false;
      v.push_back(y.num());
    }
    // Forward substitution against the upper-triangular basis.
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j] % l.basis(j, j) != 0) return false;
      Int c = v[j] / l.basis(j, j);
      for (std::size_t k = j; k < n_; ++k) v[k] = checked::sub(v[k], checked::mul(c, l.basis(j, k)));
    }
    return true;
  }

  bool is_subgroup_of(const DiagonalGroup& other) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const GroupElement& g) { return other.contains(g); });
  }

  /// Equality as element sets; generator lists may differ.
  friend bool operator==(const DiagonalGroup& a, const DiagonalGroup& b) {
    return a.n_ == b.n_ && a.is_subgroup_of(b) && b.is_subgroup_of(a);
  }

  /// A minimal generating set read off the Smith normal form of the lattice
  /// {v in Z^n : v / D in G}. Generators come out in order of increasing
  /// invariant factor.
  std::vector<GroupElement> minimal_generators() const {
    const auto& l = lattice();
    const Int d = l.d;
    const IntMatrix& basis = l.basis;
    // Rows of c express D * e_i in the basis.
    RatMatrix binv = *inverse(to_rational(basis));
    IntMatrix c(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) c(i, j) = (binv(i, j) * Rational(d)).num();
    auto snf = smith_normal_form(c);
    RatMatrix vinv = *inverse(to_rational(snf.v));
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < n_; ++i) {
      Int s = snf.s(i, i);
      if (s == 1) continue;
      RatVec row(n_);
      for (std::size_t j = 0; j < n_; ++j) {
        Rational acc;
        for (std::size_t k = 0; k < n_; ++k) acc += vinv(i, k) * Rational(basis(k, j));
        row[j] = acc / Rational(d);
      }
      out.emplace_back(std::move(row));
    }
    return out;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].str();
    return s + ">";
  }

 private:
  struct Lattice {
    Int d = 1;
    IntMatrix basis;  // n x n Hermite basis of D G + D Z^n
  };

  struct Cache {
    std::mutex mutex;
    std::optional<Lattice> lattice;
    std::optional<std::vector<GroupElement>> elements;
  };

  const Lattice& lattice() const {
    std::lock_guard lock(cache_->mutex);
    if (!cache_->lattice) {
      Lattice l;
      for (const auto& g : gens_) l.d = lcm(l.d, g.order());
      std::vector<IntVec> rows;
      for (const auto& g : gens_) rows.push_back(numerators(g, l.d));
      for (std::size_t i = 0; i < n_; ++i) {
        IntVec v(n_, 0);
        v[i] = l.d;
        rows.push_back(std::move(v));
      }
      l.basis = lattice_basis(rows, n_);
      cache_->lattice = std::move(l);
    }
    return *cache_->lattice;
  }

  static IntVec numerators(const GroupElement& g, Int d) {
    IntVec v;
    for (const auto& x : g.components()) v.push_back((x * Rational(d)).num());
    return v;
  }

  // Mixed-radix walk over x B mod D with 0 <= x_i < D / b_ii; each element
  // of the quotient is hit exactly once.
  std::vector<GroupElement> enumerate(const Lattice& l) const {
    std::vector<GroupElement> out;
    IntVec x(n_, 0);
    while (true) {
      IntVec v(n_, 0);
      for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) v[j] += x[i] * l.basis(i, j);
      for (auto& c : v) c = mod_floor(c, l.d);
      out.emplace_back(l.d, v);
      std::size_t k = 0;
      while (k < n_ && ++x[k] == l.d / l.basis(k, k)) x[k++] = 0;
      if (k == n_) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::size_t n_;
  std::vector<GroupElement> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Index [G : H]; H must be a subgroup of G.
inline std::size_t quotient_order(const DiagonalGroup& g, const DiagonalGroup& h) {
  if (!h.is_subgroup_of(g)) throw DomainError("quotient_order: H is not a subgroup of G");
  return g.order() / h.order();
}

/// rho_1..rho_n: the columns of A^{-1}, reduced mod 1. They generate G_max(A).
inline std::vector<GroupElement> gmax_generators(const ExponentMatrix& a) {
  RatMatrix inv = a.inverse_matrix();
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < a.size(); ++i) out.emplace_back(inv.col_vec(i));
  return out;
}

/// Group of maximal diagonal symmetries; its order is |det A|.
inline DiagonalGroup gmax_group(const ExponentMatrix& a) { return DiagonalGroup(a.size(), gmax_generators(a)); }

/// The exponential grading element (q_1/h, ..., q_n/h).
inline GroupElement j_element(const WeightSystem& w) { return GroupElement(w.h, w.q); }

inline GroupElement j_element(const ExponentMatrix& a) { return j_element(primitive_weight_system(a)); }

/// True iff g fixes the polynomial: A g is integral.
inline bool in_gmax(const GroupElement& g, const ExponentMatrix& a) {
  if (g.size() != a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!dot(a.matrix().row(i), std::span<const Rational>(g.components())).is_integer()) return false;
  return true;
}

/// Exponent vector (a_1..a_n) with g = sum a_i rho_i, namely a = A g. Unique
/// modulo A Z^n; this picks the representative induced by g in [0,1)^n.
inline IntVec exponents_in_gmax(const GroupElement& g, const ExponentMatrix& a) {
  if (g.size() != a.size()) throw DomainError("element dimension does not match the polynomial");
  IntVec out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational v = dot(a.matrix().row(i), std::span<const Rational>(g.components()));
    if (!v.is_integer()) throw DomainError("element " + g.str() + " is not in G_max");
    out.push_back(v.num());
  }
  return out;
}

/// (g_1, ..., g_n) -> (g_1, ..., g_n, -(g_1 + ... + g_n)).
inline GroupElement lift(const GroupElement& g) {
  RatVec v = g.components();
  Rational s;
  for (const auto& x : v) s += x;
  v.push_back(-s);
  return GroupElement(std::move(v));
}

/// SL-lift of a group in n variables to n + 1 variables.
inline DiagonalGroup lift_group(const DiagonalGroup& g) {
  std::vector<GroupElement> gens;
  for (const auto& x : g.generators()) gens.push_back(lift(x));
  return DiagonalGroup(g.dim() + 1, std::move(gens));
}

/// Berglund-Huebsch-Krawitz dual group of G <= G_max(A), living in
/// G_max(A^T): all A^{-T} r with r . g in Z for every generator g of G. The
/// admissible r form the lattice cut out by one congruence per generator;
/// its basis maps onto a generating set of the dual group.
inline DiagonalGroup transpose_group(const DiagonalGroup& g, const ExponentMatrix& a) {
  if (g.dim() != a.size()) throw DomainError("group dimension does not match the polynomial");
  const std::size_t n = a.size();
  std::vector<GroupElement> gens;
  for (const auto& x : g.generators()) {
    if (!in_gmax(x, a)) throw DomainError("generator " + x.str() + " is not in G_max");
    if (!x.is_zero()) gens.push_back(x);
  }
  // [ d_k g_k | -d_k e_k ] (r, s)^T = 0
  const std::size_t k = gens.size();
  IntMatrix e(k, n + k);
  for (std::size_t i = 0; i < k; ++i) {
    const Int d = gens[i].order();
    for (std::size_t j = 0; j < n; ++j) e(i, j) = (gens[i].components()[j] * Rational(d)).num();
    e(i, n + i) = -d;
  }
  std::vector<IntVec> rs;
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec r(n, 0);
      r[i] = 1;
      rs.push_back(std::move(r));
    }
  } else {
    IntMatrix ker = integer_kernel(e);
    for (std::size_t r = 0; r < ker.rows(); ++r) rs.emplace_back(ker.row(r).begin(), ker.row(r).begin() + static_cast<std::ptrdiff_t>(n));
  }
  const auto rho_t = gmax_generators(transpose(a));
  std::vector<GroupElement> out;
  for (const auto& r : rs) {
    GroupElement x = GroupElement::zero(n);
    for (std::size_t i = 0; i < n; ++i) x = x + r[i] * rho_t[i];
    out.push_back(std::move(x));
  }
  DiagonalGroup full(n, std::move(out));
  return DiagonalGroup(n, full.minimal_generators());
}

}  // namespace mirrorpoly
