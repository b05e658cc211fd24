#pragma once

#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "mirrorpoly/group.hpp"
#include "mirrorpoly/normal_form.hpp"

namespace mirrorpoly {

/// A subgroup of Z^n, stored by its Hermite-reduced row basis.
class Sublattice {
 public:
  Sublattice(std::size_t ambient, const std::vector<IntVec>& generators)
      : n_(ambient), basis_(lattice_basis(generators, ambient)) {}

  static Sublattice full(std::size_t n) {
    std::vector<IntVec> e;
    for (std::size_t i = 0; i < n; ++i) {
      e.emplace_back(n, 0);
      e.back()[i] = 1;
    }
    return Sublattice(n, e);
  }

  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Unique integer c with c * basis = v, if any.
  std::optional<IntVec> coordinates(std::span<const Int> v) const {
    if (v.size() != n_) return std::nullopt;
    if (rank() == 0) {
      for (Int x : v)
        if (x != 0) return std::nullopt;
      return IntVec{};
    }
    auto x = solve_in_row_span(to_rational(basis_), to_rational(v));
    if (!x) return std::nullopt;
    return to_integer(*x);
  }

  bool contains(std::span<const Int> v) const { return coordinates(v).has_value(); }

  bool is_subset_of(const Sublattice& other) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (!other.contains(basis_.row(i))) return false;
    return true;
  }

  /// [super : this] for a sublattice of equal rank.
  Int index_in(const Sublattice& super) const {
    if (super.rank() != rank()) throw DomainError("index of lattices of different rank");
    IntMatrix c(rank(), rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      auto x = super.coordinates(basis_.row(i));
      if (!x) throw DomainError("lattice is not contained in the putative superlattice");
      for (std::size_t j = 0; j < rank(); ++j) c(i, j) = (*x)[j];
    }
    return rank() == 0 ? 1 : std::abs(determinant(c));
  }

  /// Hermite bases are canonical, so basis equality is lattice equality.
  friend bool operator==(const Sublattice&, const Sublattice&) = default;

 private:
  std::size_t n_;
  IntMatrix basis_;
};

/// coeffs . m == 0 (mod modulus)
struct Congruence {
  IntVec coeffs;
  Int modulus = 1;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

/// { m in Z^n : weight . m = 0 and every congruence holds }. Each congruence
/// gets a slack variable, so the lattice is the projection of an integer
/// kernel in Z^(n+k).
inline Sublattice kernel_lattice(const IntVec& weight, const std::vector<Congruence>& congruences) {
  const std::size_t n = weight.size(), k = congruences.size();
  IntMatrix e(1 + k, n + k);
  for (std::size_t j = 0; j < n; ++j) e(0, j) = weight[j];
  for (std::size_t i = 0; i < k; ++i) {
    const auto& c = congruences[i];
    if (c.coeffs.size() != n) throw DomainError("congruence length does not match the weight");
    if (c.modulus <= 0) throw DomainError("congruence modulus must be positive");
    for (std::size_t j = 0; j < n; ++j) e(1 + i, j) = c.coeffs[j];
    e(1 + i, n + i) = -c.modulus;
  }
  IntMatrix ker = integer_kernel(e);
  std::vector<IntVec> gens;
  for (std::size_t r = 0; r < ker.rows(); ++r) gens.emplace_back(ker.row(r).begin(), ker.row(r).begin() + static_cast<std::ptrdiff_t>(n));
  return Sublattice(n, gens);
}

/// g . m in Z written as an integer congruence: (d g) . m == 0 mod d.
inline Congruence congruence_of(const GroupElement& g) {
  Int d = g.order();
  IntVec p;
  for (const auto& x : g.components()) p.push_back((x * Rational(d)).num());
  return {p, d};
}

/// Character lattice of the quotient torus: monomial exponents m with q . m = 0
/// that are invariant under every generator of G. Requires J in G.
inline Sublattice character_lattice(const WeightSystem& w, const DiagonalGroup& g) {
  if (g.dim() != w.q.size()) throw DomainError("group dimension does not match the weight system");
  if (!g.contains(j_element(w))) throw DomainError("the grading element J is not in G");
  std::vector<Congruence> cs;
  for (const auto& x : g.generators())
    if (!x.is_zero()) cs.push_back(congruence_of(x));
  return kernel_lattice(w.q, cs);
}

/// An ordered basis of a sublattice, used as a coordinate system.
class BasisChart {
 public:
  explicit BasisChart(std::vector<IntVec> basis) : e_(std::move(basis)) {
    if (e_.empty()) throw DomainError("empty chart");
    for (const auto& v : e_)
      if (v.size() != e_.front().size()) throw DomainError("chart vectors of different length");
    if (mirrorpoly::rank(IntMatrix::from_rows(e_)) != e_.size()) throw DomainError("chart vectors are linearly dependent");
  }

  std::size_t rank() const { return e_.size(); }
  std::size_t ambient() const { return e_.front().size(); }
  const std::vector<IntVec>& vectors() const { return e_; }
  Sublattice lattice() const { return Sublattice(ambient(), e_); }

  std::optional<IntVec> try_coordinates(std::span<const Int> v) const {
    if (v.size() != ambient()) return std::nullopt;
    auto x = solve_in_row_span(to_rational(IntMatrix::from_rows(e_)), to_rational(v));
    if (!x) return std::nullopt;
    return to_integer(*x);
  }

  /// sum c_i e_i
  IntVec point(std::span<const Int> c) const {
    if (c.size() != rank()) throw DomainError("coordinate vector does not match chart rank");
    IntVec v(ambient(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < ambient(); ++j) v[j] = checked::add(v[j], checked::mul(c[i], e_[i][j]));
    return v;
  }

 private:
  std::vector<IntVec> e_;
};

/// Integer coordinates of v in the chart; throws when v is outside the lattice.
inline IntVec coordinates(const BasisChart& chart, std::span<const Int> v) {
  auto c = chart.try_coordinates(v);
  if (!c) throw DomainError("point " + to_string(v) + " is not in the lattice spanned by the chart");
  return *c;
}

struct ChartValidation {
  enum class Status { ok, wrong_rank, not_in_lattice, proper_sublattice };
  Status status = Status::ok;
  Int index = 1;          // [computed : chart lattice] when proper_sublattice
  std::string diagnosis;  // empty when ok

  explicit operator bool() const { return status == Status::ok; }
};

/// Does the chart generate exactly `computed`?
inline ChartValidation validate_chart(const BasisChart& chart, const Sublattice& computed) {
  using S = ChartValidation::Status;
  if (chart.ambient() != computed.ambient() || chart.rank() != computed.rank())
    return {S::wrong_rank, 0,
            "chart has rank " + std::to_string(chart.rank()) + " but the lattice has rank " +
                std::to_string(computed.rank())};
  for (std::size_t i = 0; i < chart.rank(); ++i)
    if (!computed.contains(chart.vectors()[i]))
      return {S::not_in_lattice, 0,
              "chart vector e_" + std::to_string(i + 1) + " = " + to_string(chart.vectors()[i]) +
                  " is not in the lattice"};
  Int idx = chart.lattice().index_in(computed);
  if (idx != 1)
    return {S::proper_sublattice, idx, "chart spans a sublattice of index " + std::to_string(idx)};
  return {};
}

/// Coordinates of a_i - (1,...,1) for every monomial row, in input order.
inline std::vector<IntVec> newton_points(const ExponentMatrix& a, const BasisChart& chart) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    IntVec v = a.monomial(i);
    for (Int& x : v) x -= 1;
    auto c = chart.try_coordinates(v);
    if (!c)
      throw DomainError("shifted exponent " + to_string(v) + " of monomial " + std::to_string(i + 1) +
                        " is not in the lattice");
    out.push_back(std::move(*c));
  }
  return out;
}

}  // namespace mirrorpoly
