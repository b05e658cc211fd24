#pragma once

// JSON encodings. Rationals are "a/b" strings; integral coordinates are
// plain JSON integers.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mirrorpoly/group.hpp"
#include "mirrorpoly/lattice.hpp"
#include "mirrorpoly/polytope.hpp"

namespace mirrorpoly {

using Json = nlohmann::ordered_json;

namespace io {

inline Json encode(const Rational& r) {
  if (r.is_integer()) return r.num();
  return r.str();
}

inline Json encode(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

/// Group elements always use strings, matching the case-file schema.
inline Json encode(const GroupElement& g) {
  Json a = Json::array();
  for (const auto& x : g.components()) a.push_back(x.str());
  return a;
}

inline Json encode(const std::vector<GroupElement>& gs) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(encode(g));
  return a;
}

inline Json encode(const DiagonalGroup& g) {
  return Json{{"n", g.dim()}, {"generators", encode(g.generators())}, {"order", g.order()}};
}

inline Json encode(const WeightSystem& w) { return Json{{"q", w.q}, {"h", w.h}}; }

inline Json encode(const Sublattice& l) { return Json{{"ambient", l.ambient()}, {"basis", l.basis().to_rows()}}; }

inline Json encode(const Facet& f) { return Json{{"normal", f.normal}, {"offset", f.offset.str()}}; }

template <class Coord>
Json encode(const Polytope<Coord>& p) {
  Json verts = Json::array();
  for (const auto& v : p.vertices()) {
    if constexpr (std::is_same_v<Coord, Int>)
      verts.push_back(v);
    else
      verts.push_back(encode(v));
  }
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(encode(f));
  return Json{{"d", p.dim()}, {"vertices", std::move(verts)}, {"facets", std::move(facets)}};
}

inline Rational decode_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Int>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected an integer or an \"a/b\" string, got " + j.dump());
}

inline RatVec decode_rational_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  RatVec v;
  for (const auto& x : j) v.push_back(decode_rational(x));
  return v;
}

inline IntVec decode_int_vector(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers, got " + j.dump());
  IntVec v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer, got " + x.dump());
    v.push_back(x.get<Int>());
  }
  return v;
}

inline std::vector<IntVec> decode_int_rows(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integer vectors, got " + j.dump());
  std::vector<IntVec> out;
  for (const auto& r : j) out.push_back(decode_int_vector(r));
  return out;
}

/// Accepts {"vertices": [...]} (with optional "d") or a bare point array.
inline RationalPolytope decode_polytope(const Json& j) {
  const Json& pts = j.is_object() ? j.at("vertices") : j;
  if (!pts.is_array()) throw ParseError("polytope vertices must be an array");
  std::vector<RatVec> v;
  for (const auto& p : pts) v.push_back(decode_rational_vector(p));
  if (j.is_object() && j.contains("d") && !v.empty() && j.at("d").get<std::size_t>() != v.front().size())
    throw ParseError("polytope field 'd' does not match the vertex length");
  return convex_hull(std::move(v));
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace io
}  // namespace mirrorpoly
