#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "mirrorpoly/matrix.hpp"

namespace mirrorpoly {

/// Supporting half-space <normal, x> >= offset; the normal is primitive and
/// points into the polytope.
struct Facet {
  IntVec normal;
  Rational offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet& a, const Facet& b) {
    if (auto c = a.normal <=> b.normal; c != 0) return c;
    return a.offset <=> b.offset;
  }
};

namespace detail {

inline Rational coord_to_rational(Int x) { return Rational(x); }
inline Rational coord_to_rational(const Rational& x) { return x; }

template <class Coord>
Rational evaluate(const IntVec& normal, const std::vector<Coord>& p) {
  Rational s;
  for (std::size_t i = 0; i < normal.size(); ++i) s += Rational(normal[i]) * coord_to_rational(p[i]);
  return s;
}

// Calls f(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when f returns true.
template <class F>
bool for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (f(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Full-dimensional convex polytope in d <= 4 with integer (lattice) or
/// rational vertices. Only produced by convex_hull, so the vertex list is
/// always exactly the set of hull vertices, sorted, and the facet list is
/// complete and sorted.
template <class Coord>
class Polytope {
 public:
  using Point = std::vector<Coord>;
  static constexpr std::size_t kMaxDim = 4;

  static Polytope hull(std::vector<Point> points);

  std::size_t dim() const { return d_; }
  const std::vector<Point>& vertices() const& { return vertices_; }
  const std::vector<Facet>& facets() const& { return facets_; }
  // Temporaries hand out their data, so range-for over them stays valid.
  std::vector<Point> vertices() && { return std::move(vertices_); }
  std::vector<Facet> facets() && { return std::move(facets_); }

  template <class C>
  bool contains_point(const std::vector<C>& p) const {
    if (p.size() != d_) throw DomainError("point dimension does not match the polytope");
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Facet& f) { return detail::evaluate(f.normal, p) >= f.offset; });
  }

  template <class C>
  bool on_boundary(const std::vector<C>& p) const {
    return contains_point(p) && std::any_of(facets_.begin(), facets_.end(), [&](const Facet& f) {
             return detail::evaluate(f.normal, p) == f.offset;
           });
  }

  /// Strictly inside every facet.
  bool origin_interior() const {
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.offset.sign() < 0; });
  }

  /// Number of facets through vertex i.
  std::size_t vertex_degree(std::size_t i) const {
    return static_cast<std::size_t>(std::count_if(facets_.begin(), facets_.end(), [&](const Facet& f) {
      return detail::evaluate(f.normal, vertices_[i]) == f.offset;
    }));
  }

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  std::size_t d_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
};

using LatticePolytope = Polytope<Int>;
using RationalPolytope = Polytope<Rational>;

/// Facets are found by brute force over d-subsets of the input: each affinely
/// independent subset spans a hyperplane, kept when all points lie on one
/// side. Quadratic-ish in the point count but exact and simple at d <= 4.
template <class Coord>
Polytope<Coord> Polytope<Coord>::hull(std::vector<Point> points) {
  if (points.empty()) throw DegenerateError("convex hull of no points");
  const std::size_t d = points.front().size();
  if (d == 0 || d > kMaxDim) throw DomainError("polytope dimension must be between 1 and 4");
  for (const auto& p : points)
    if (p.size() != d) throw DomainError("points of different dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<RatVec> q;
  for (const auto& p : points) {
    RatVec v;
    for (const auto& x : p) v.push_back(detail::coord_to_rational(x));
    q.push_back(std::move(v));
  }

  RatMatrix diffs(q.size() - 1, d);
  for (std::size_t i = 1; i < q.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) diffs(i - 1, j) = q[i][j] - q[0][j];
  if (q.size() < d + 1 || rank(diffs) != d)
    throw DegenerateError("points do not span a " + std::to_string(d) + "-dimensional polytope");

  std::set<Facet> found;
  detail::for_each_combination(q.size(), d, [&](const std::vector<std::size_t>& idx) {
    RatMatrix m(d - 1, d);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t j = 0; j < d; ++j) m(r - 1, j) = q[idx[r]][j] - q[idx[0]][j];
    auto ns = nullspace(m);
    if (ns.size() != 1) return false;
    IntVec n = primitive(clear_denominators(ns[0]));
    Rational c = detail::evaluate(n, q[idx[0]]);
    bool above = true, below = true;
    for (const auto& p : q) {
      Rational v = detail::evaluate(n, p);
      above = above && v >= c;
      below = below && v <= c;
    }
    if (above) {
      found.insert({n, c});
    } else if (below) {
      for (Int& x : n) x = -x;
      found.insert({n, -c});
    }
    return false;
  });

  Polytope out;
  out.d_ = d;
  out.facets_.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < q.size(); ++i) {
    std::vector<IntVec> incident;
    for (const auto& f : out.facets_)
      if (detail::evaluate(f.normal, q[i]) == f.offset) incident.push_back(f.normal);
    if (incident.size() >= d && rank(IntMatrix::from_rows(incident)) == d) out.vertices_.push_back(points[i]);
  }
  return out;
}

template <class Coord>
Polytope<Coord> convex_hull(std::vector<std::vector<Coord>> points) {
  return Polytope<Coord>::hull(std::move(points));
}

inline RationalPolytope to_rational(const LatticePolytope& p) {
  std::vector<RatVec> v;
  for (const auto& x : p.vertices()) v.push_back(to_rational(x));
  return convex_hull(std::move(v));
}

/// The lattice polytope with the same vertices, if they are all integral.
inline std::optional<LatticePolytope> to_lattice(const RationalPolytope& p) {
  std::vector<IntVec> v;
  for (const auto& x : p.vertices()) {
    auto i = to_integer(x);
    if (!i) return std::nullopt;
    v.push_back(std::move(*i));
  }
  return convex_hull(std::move(v));
}

/// P° = { y : <x, y> >= -1 for all x in P }. Vertices are n / (-c) over the
/// facets (n, c) of P, which needs every c < 0.
template <class Coord>
RationalPolytope polar_dual(const Polytope<Coord>& p) {
  std::vector<RatVec> v;
  for (const auto& f : p.facets()) {
    if (f.offset.sign() >= 0) throw OriginNotInteriorError("origin is not in the interior of the polytope");
    RatVec y;
    for (Int x : f.normal) y.push_back(Rational(x) / (-f.offset));
    v.push_back(std::move(y));
  }
  return convex_hull(std::move(v));
}

struct Reflexivity {
  bool reflexive = false;
  std::string diagnosis;  // empty when reflexive
  explicit operator bool() const { return reflexive; }
};

/// Reflexive: origin interior and every facet at lattice distance 1.
inline Reflexivity reflexivity(const LatticePolytope& p) {
  if (!p.origin_interior()) return {false, "origin is not in the interior"};
  for (const auto& f : p.facets())
    if (f.offset != Rational(-1))
      return {false, "facet with normal " + to_string(f.normal) + " has offset " + f.offset.str()};
  return {true, {}};
}

inline bool is_reflexive(const LatticePolytope& p) { return reflexivity(p).reflexive; }

/// inner ⊆ outer: every vertex of inner satisfies every facet of outer.
template <class A, class B>
bool contains(const Polytope<A>& outer, const Polytope<B>& inner) {
  if (outer.dim() != inner.dim()) throw DomainError("containment of polytopes of different dimension");
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const auto& v) { return outer.contains_point(v); });
}

/// All integer points, in lexicographic order.
template <class Coord>
std::vector<IntVec> lattice_points(const Polytope<Coord>& p) {
  const std::size_t d = p.dim();
  IntVec lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = detail::coord_to_rational(p.vertices()[0][j]), mx = mn;
    for (const auto& v : p.vertices()) {
      Rational x = detail::coord_to_rational(v[j]);
      mn = std::min(mn, x);
      mx = std::max(mx, x);
    }
    lo[j] = mn.ceil();
    hi[j] = mx.floor();
  }
  std::vector<IntVec> out;
  for (std::size_t j = 0; j < d; ++j)
    if (lo[j] > hi[j]) return out;
  IntVec x = lo;
  while (true) {
    if (p.contains_point(x)) out.push_back(x);
    std::size_t j = d;
    while (j > 0) {
      --j;
      if (x[j] < hi[j]) {
        ++x[j];
        for (std::size_t k = j + 1; k < d; ++k) x[k] = lo[k];
        break;
      }
      if (j == 0) return out;
    }
  }
}

template <class Coord>
std::vector<IntVec> boundary_points(const Polytope<Coord>& p) {
  std::vector<IntVec> out;
  for (auto& x : lattice_points(p))
    if (p.on_boundary(x)) out.push_back(std::move(x));
  return out;
}

/// Sum over the edges e of a reflexive 3-polytope of len(e) * len(e°), where
/// len is lattice length and e° is the dual edge joining the two facet
/// normals. This sum is 24 for every reflexive 3-polytope.
inline Int edge_length_pairing(const LatticePolytope& p) {
  if (p.dim() != 3) throw DomainError("edge pairing is defined for 3-polytopes");
  if (!is_reflexive(p)) throw DomainError("edge pairing needs a reflexive polytope");
  const auto& vs = p.vertices();
  Int total = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      std::vector<const Facet*> common;
      for (const auto& f : p.facets())
        if (detail::evaluate(f.normal, vs[i]) == f.offset && detail::evaluate(f.normal, vs[j]) == f.offset)
          common.push_back(&f);
      if (common.size() != 2) continue;
      Int le = 0, ld = 0;
      for (std::size_t k = 0; k < 3; ++k) {
        le = gcd(le, vs[i][k] - vs[j][k]);
        ld = gcd(ld, common[0]->normal[k] - common[1]->normal[k]);
      }
      total = checked::add(total, checked::mul(le, ld));
    }
  return total;
}

/// A d x d integer matrix U with |det U| = 1 and U v ranging over the vertices
/// of q as v ranges over the vertices of p (column-vector convention). Tries
/// the identity first, then every assignment of a fixed independent vertex
/// frame of p to vertices of q with matching facet degree.
inline std::optional<IntMatrix> unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  const std::size_t d = p.dim();
  if (q.dim() != d) throw DomainError("unimodular equivalence of polytopes of different dimension");
  if (p.vertices() == q.vertices()) return IntMatrix::identity(d);
  if (p.vertices().size() != q.vertices().size() || p.facets().size() != q.facets().size()) return std::nullopt;

  // Greedy independent frame among the vertices of p.
  std::vector<std::size_t> frame;
  std::vector<IntVec> rows;
  for (std::size_t i = 0; i < p.vertices().size() && frame.size() < d; ++i) {
    rows.push_back(p.vertices()[i]);
    if (rank(IntMatrix::from_rows(rows)) == rows.size())
      frame.push_back(i);
    else
      rows.pop_back();
  }
  // A polytope with 0 in a facet hyperplane may have no linear frame.
  if (frame.size() < d) return std::nullopt;

  RatMatrix v(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t r = 0; r < d; ++r) v(r, c) = Rational(p.vertices()[frame[c]][r]);
  const RatMatrix vinv = *inverse(v);

  std::vector<std::size_t> pdeg, qdeg;
  for (std::size_t i = 0; i < p.vertices().size(); ++i) pdeg.push_back(p.vertex_degree(i));
  for (std::size_t i = 0; i < q.vertices().size(); ++i) qdeg.push_back(q.vertex_degree(i));

  const std::size_t nq = q.vertices().size();
  std::vector<std::size_t> choice(d);
  std::vector<bool> used(nq, false);
  std::optional<IntMatrix> result;

  auto try_choice = [&]() {
    RatMatrix w(d, d);
    for (std::size_t c = 0; c < d; ++c)
      for (std::size_t r = 0; r < d; ++r) w(r, c) = Rational(q.vertices()[choice[c]][r]);
    RatMatrix u = w * vinv;
    IntMatrix ui(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        if (!u(r, c).is_integer()) return false;
        ui(r, c) = u(r, c).num();
      }
    Int det = determinant(ui);
    if (det != 1 && det != -1) return false;
    std::vector<IntVec> image;
    for (const auto& x : p.vertices()) image.push_back(mat_vec(ui, x));
    std::sort(image.begin(), image.end());
    if (image != q.vertices()) return false;
    result = ui;
    return true;
  };

  auto search = [&](auto& self, std::size_t k) -> bool {
    if (k == d) return try_choice();
    for (std::size_t j = 0; j < nq; ++j) {
      if (used[j] || qdeg[j] != pdeg[frame[k]]) continue;
      used[j] = true;
      choice[k] = j;
      if (self(self, k + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  search(search, 0);
  return result;
}

}  // namespace mirrorpoly
