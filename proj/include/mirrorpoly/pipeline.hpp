#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mirrorpoly/io.hpp"

namespace mirrorpoly {

struct LatticeConditions {
  IntVec weight;
  std::vector<Congruence> congruences;
};

/// A value printed in the source tables that had to be corrected before the
/// case verifies. `printed` holds the original field verbatim.
struct Erratum {
  std::string field;
  Json printed;
  std::string note;
};

/// One bimodal case: the polynomial, its expected invariants and the tables to
/// compare against. Optional members may be absent in user-supplied files.
struct CaseRecord {
  std::string name;
  std::string F;
  std::optional<std::string> Fv;
  std::vector<std::string> variables;
  WeightSystem weights, weights_dual;
  std::vector<RatVec> gmax_f_generators, G_generators;
  std::optional<LatticeConditions> M_conditions, Mv_conditions;
  std::vector<IntVec> M_chart, Mv_chart;
  std::vector<IntVec> newton_F, newton_Fv;
  std::vector<IntVec> Delta, DeltaDual;
  // Variable order of the coordinates in Mv_chart and Mv_conditions, when the
  // record was transcribed with the dual variables permuted.
  std::vector<std::string> Mv_coordinate_order;
  std::vector<Erratum> errata;
};

/// "J_{3,0}" -> "J_3_0"; "J_3_0" is left alone.
inline std::string normalize_case_name(std::string_view name) {
  std::string s;
  for (char c : name) {
    if (c == '{' || c == '}' || c == ' ') continue;
    s += c == ',' ? '_' : c;
  }
  return s;
}

namespace detail {

inline const Json& require(const Json& j, const char* field, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
  if (!j.contains(field)) throw ParseError(where + ": missing field '" + field + "'");
  return j.at(field);
}

template <class F>
auto field(const Json& j, const char* name, const std::string& where, F&& decode) {
  const Json& v = require(j, name, where);
  try {
    return decode(v);
  } catch (const Error& e) {
    throw ParseError(where + ": field '" + name + "': " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": field '" + name + "': " + e.what());
  }
}

inline std::string decode_string(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

inline std::vector<std::string> decode_strings(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(decode_string(x));
  return out;
}

inline WeightSystem decode_weights(const Json& j) {
  if (!j.is_object() || !j.contains("q") || !j.contains("h")) throw ParseError("expected {\"q\": [...], \"h\": int}");
  if (!j.at("h").is_number_integer()) throw ParseError("'h' must be an integer");
  return {io::decode_int_vector(j.at("q")), j.at("h").get<Int>()};
}

inline std::vector<RatVec> decode_rational_rows(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rational vectors");
  std::vector<RatVec> out;
  for (const auto& r : j) out.push_back(io::decode_rational_vector(r));
  return out;
}

inline LatticeConditions decode_conditions(const Json& j) {
  if (!j.is_object() || !j.contains("weight")) throw ParseError("expected {\"weight\": [...], \"congruences\": [...]}");
  LatticeConditions c{io::decode_int_vector(j.at("weight")), {}};
  if (j.contains("congruences"))
    for (const auto& x : j.at("congruences")) {
      if (!x.contains("coeffs") || !x.contains("modulus")) throw ParseError("congruence needs 'coeffs' and 'modulus'");
      c.congruences.push_back({io::decode_int_vector(x.at("coeffs")), x.at("modulus").get<Int>()});
    }
  return c;
}

inline Json encode_conditions(const LatticeConditions& c) {
  Json cs = Json::array();
  for (const auto& x : c.congruences) cs.push_back(Json{{"coeffs", x.coeffs}, {"modulus", x.modulus}});
  return Json{{"weight", c.weight}, {"congruences", cs}};
}

inline Json encode_rational_rows(const std::vector<RatVec>& rows) {
  Json a = Json::array();
  for (const auto& r : rows) {
    Json v = Json::array();
    for (const auto& x : r) v.push_back(x.str());
    a.push_back(v);
  }
  return a;
}

}  // namespace detail

/// Parses one case object; `index` only feeds diagnostics.
inline CaseRecord parse_case(const Json& j, std::size_t index = 0) {
  using namespace detail;
  std::string where = "case " + std::to_string(index);
  CaseRecord r;
  r.name = field(j, "name", where, decode_string);
  where += " (" + r.name + ")";
  r.F = field(j, "F", where, decode_string);
  if (j.contains("Fv")) r.Fv = field(j, "Fv", where, decode_string);
  r.variables = j.contains("variables") ? field(j, "variables", where, decode_strings)
                                        : default_variables(count_monomials(r.F));
  r.weights = field(j, "weights", where, decode_weights);
  r.weights_dual = field(j, "weights_dual", where, decode_weights);
  r.gmax_f_generators = field(j, "gmax_f_generators", where, decode_rational_rows);
  r.G_generators = field(j, "G_generators", where, decode_rational_rows);
  if (j.contains("M_conditions")) r.M_conditions = field(j, "M_conditions", where, decode_conditions);
  if (j.contains("Mv_conditions")) r.Mv_conditions = field(j, "Mv_conditions", where, decode_conditions);
  r.M_chart = field(j, "M_chart", where, io::decode_int_rows);
  r.Mv_chart = field(j, "Mv_chart", where, io::decode_int_rows);
  r.newton_F = field(j, "newton_F", where, io::decode_int_rows);
  r.newton_Fv = field(j, "newton_Fv", where, io::decode_int_rows);
  r.Delta = field(j, "Delta", where, io::decode_int_rows);
  r.DeltaDual = field(j, "DeltaDual", where, io::decode_int_rows);
  if (j.contains("Mv_coordinate_order")) {
    r.Mv_coordinate_order = field(j, "Mv_coordinate_order", where, decode_strings);
    auto sorted = r.Mv_coordinate_order, vars = r.variables;
    std::sort(sorted.begin(), sorted.end());
    std::sort(vars.begin(), vars.end());
    if (sorted != vars) throw ParseError(where + ": field 'Mv_coordinate_order' is not a permutation of the variables");
  }
  if (j.contains("errata"))
    for (const auto& e : require(j, "errata", where)) {
      if (!e.contains("field") || !e.contains("printed"))
        throw ParseError(where + ": field 'errata': entries need 'field' and 'printed'");
      r.errata.push_back({e.at("field").get<std::string>(), e.at("printed"), e.value("note", std::string())});
    }
  return r;
}

inline Json case_to_json(const CaseRecord& r) {
  using namespace detail;
  Json j;
  j["name"] = r.name;
  j["F"] = r.F;
  if (r.Fv) j["Fv"] = *r.Fv;
  j["variables"] = r.variables;
  j["weights"] = io::encode(r.weights);
  j["weights_dual"] = io::encode(r.weights_dual);
  j["gmax_f_generators"] = encode_rational_rows(r.gmax_f_generators);
  j["G_generators"] = encode_rational_rows(r.G_generators);
  if (r.M_conditions) j["M_conditions"] = encode_conditions(*r.M_conditions);
  if (r.Mv_conditions) j["Mv_conditions"] = encode_conditions(*r.Mv_conditions);
  j["M_chart"] = r.M_chart;
  j["Mv_chart"] = r.Mv_chart;
  j["newton_F"] = r.newton_F;
  j["newton_Fv"] = r.newton_Fv;
  j["Delta"] = r.Delta;
  j["DeltaDual"] = r.DeltaDual;
  if (!r.Mv_coordinate_order.empty()) j["Mv_coordinate_order"] = r.Mv_coordinate_order;
  if (!r.errata.empty()) {
    Json es = Json::array();
    for (const auto& e : r.errata) es.push_back(Json{{"field", e.field}, {"printed", e.printed}, {"note", e.note}});
    j["errata"] = es;
  }
  return j;
}

inline std::vector<CaseRecord> parse_cases(const Json& j) {
  if (!j.is_array()) throw ParseError("case file must hold a JSON array of case objects");
  std::vector<CaseRecord> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_case(j[i], i));
  return out;
}

inline std::vector<CaseRecord> load_cases(const std::string& path) {
  try {
    return parse_cases(io::read_json_file(path));
  } catch (const ParseError& e) {
    std::string msg = e.what();
    if (msg.rfind(path, 0) == 0) throw;
    throw ParseError(path + ": " + msg);
  }
}

/// The record with every erratum reverted to its printed value.
inline CaseRecord with_printed_values(const CaseRecord& r) {
  Json j = case_to_json(r);
  for (const auto& e : r.errata) j[e.field] = e.printed;
  j.erase("errata");
  return parse_case(j);
}

inline const CaseRecord& find_case(const std::vector<CaseRecord>& cases, std::string_view name) {
  const auto key = normalize_case_name(name);
  for (const auto& c : cases)
    if (normalize_case_name(c.name) == key) return c;
  throw DomainError("unknown case '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Verification

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  Json computed;
  Json expected;
};

enum class DualMatch { none, exact, unimodular };

struct VerificationReport {
  std::string name;
  std::vector<CheckResult> checks;
  DualMatch dual_match = DualMatch::none;
  std::optional<IntMatrix> phi;  // set when dual_match == unimodular

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  std::vector<int> failed() const {
    std::vector<int> out;
    for (const auto& c : checks)
      if (!c.passed) out.push_back(c.id);
    return out;
  }
  const CheckResult& check(int id) const { return checks.at(static_cast<std::size_t>(id - 1)); }
};

inline const char* to_string(DualMatch m) {
  switch (m) {
    case DualMatch::exact: return "exact";
    case DualMatch::unimodular: return "unimodular";
    default: return "none";
  }
}

namespace detail {

struct MissingInput : Error {
  using Error::Error;
};

template <class T>
const T& need(const std::optional<T>& v, int check) {
  if (!v) throw MissingInput("not evaluated: depends on check " + std::to_string(check));
  return *v;
}

inline std::vector<IntVec> sorted_rows(const ExponentMatrix& a) {
  auto rows = a.matrix().to_rows();
  std::sort(rows.begin(), rows.end());
  return rows;
}

// v is written in `order`; return it in `variables` order.
inline IntVec reorder(const IntVec& v, const std::vector<std::string>& order, const std::vector<std::string>& variables) {
  if (order.empty()) return v;
  if (v.size() != order.size()) throw DomainError("vector length does not match the coordinate order");
  IntVec out(v.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto pos = std::find(variables.begin(), variables.end(), order[k]) - variables.begin();
    out[static_cast<std::size_t>(pos)] = v[k];
  }
  return out;
}

inline LatticeConditions reorder(const LatticeConditions& c, const std::vector<std::string>& order,
                                 const std::vector<std::string>& variables) {
  LatticeConditions out{reorder(c.weight, order, variables), {}};
  for (const auto& x : c.congruences) out.congruences.push_back({reorder(x.coeffs, order, variables), x.modulus});
  return out;
}

inline Json points_json(const std::vector<IntVec>& pts) { return Json(pts); }

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

/// The eleven checks, in order. Each check compares the computed object with
/// the record; later checks build on computed (not expected) values, so a bad
/// table entry only fails its own check. Errors become failing checks.
inline VerificationReport verify_case(const CaseRecord& rec) {
  using detail::need;
  VerificationReport rep;
  rep.name = rec.name;

  auto run = [&](int id, const char* name, const std::function<bool(CheckResult&)>& body) {
    CheckResult c;
    c.id = id;
    c.name = name;
    try {
      c.passed = body(c);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    rep.checks.push_back(std::move(c));
  };

  std::optional<ExponentMatrix> a, av, av_table;
  std::optional<WeightSystem> w, wv;
  std::optional<DiagonalGroup> g, gv;
  std::optional<std::vector<IntVec>> nf, nfv;
  std::optional<LatticePolytope> delta, nf_poly, expected_dual;
  std::optional<RationalPolytope> dual;

  run(1, "transpose", [&](CheckResult& c) {
    a = parse_polynomial(rec.F, rec.variables);
    av = transpose(*a);
    c.computed = print_polynomial(*av, rec.variables);
    if (!rec.Fv) {
      av_table = av;
      c.detail = "no expected transpose in record";
      return true;
    }
    c.expected = *rec.Fv;
    ExponentMatrix e = parse_polynomial(*rec.Fv, rec.variables);
    bool ok = detail::sorted_rows(e) == detail::sorted_rows(*av);
    // Newton tables for the transpose follow the monomial order of the record.
    av_table = ok ? e : *av;
    return ok;
  });

  run(2, "weights", [&](CheckResult& c) {
    w = primitive_weight_system(need(a, 1));
    wv = primitive_weight_system(need(av, 1));
    c.computed = Json{{"F", to_string(*w)}, {"Fv", to_string(*wv)}};
    c.expected = Json{{"F", to_string(rec.weights)}, {"Fv", to_string(rec.weights_dual)}};
    return *w == rec.weights && *wv == rec.weights_dual;
  });

  run(3, "group G", [&](CheckResult& c) {
    const auto& am = need(a, 1);
    const DiagonalGroup gmax_f = gmax_group(restrict_to_first_n(am));
    std::vector<GroupElement> ef, eg;
    for (const auto& x : rec.gmax_f_generators) ef.emplace_back(x);
    for (const auto& x : rec.G_generators) eg.emplace_back(x);
    const DiagonalGroup expected_f(am.size() - 1, ef), expected_g(am.size(), eg);
    g = lift_group(gmax_f);
    c.computed = Json{{"Gmax_f", io::encode(DiagonalGroup(gmax_f.dim(), gmax_f.minimal_generators()))},
                      {"G", io::encode(DiagonalGroup(g->dim(), g->minimal_generators()))}};
    c.expected = Json{{"Gmax_f", io::encode(expected_f)}, {"G", io::encode(expected_g)}};
    bool ok_f = gmax_f == expected_f, ok_g = *g == expected_g;
    if (!ok_f) c.detail += "G_max(f) differs from the expected group. ";
    if (!ok_g) c.detail += "G differs from the expected group.";
    return ok_f && ok_g;
  });

  run(4, "G in SL and J in G", [&](CheckResult& c) {
    const auto& gg = need(g, 3);
    bool sl = std::all_of(gg.generators().begin(), gg.generators().end(), [](const GroupElement& x) { return is_sl(x); });
    bool j = gg.contains(j_element(need(w, 2)));
    c.computed = Json{{"G_in_SL", sl}, {"J_in_G", j}};
    return sl && j;
  });

  run(5, "transpose group", [&](CheckResult& c) {
    gv = transpose_group(need(g, 3), need(a, 1));
    bool j = gv->contains(j_element(need(wv, 2)));
    bool sl = std::all_of(gv->generators().begin(), gv->generators().end(), [](const GroupElement& x) { return is_sl(x); });
    c.computed = Json{{"Gv", io::encode(*gv)}, {"Jv_in_Gv", j}, {"Gv_in_SL", sl}};
    return j && sl;
  });

  run(6, "character lattices", [&](CheckResult& c) {
    const Sublattice m = character_lattice(need(w, 2), need(g, 3));
    const Sublattice mv = character_lattice(need(wv, 2), need(gv, 5));
    c.computed = Json{{"M", io::encode(m)}, {"Mv", io::encode(mv)}};
    bool ok = true;
    std::string detail;
    auto compare = [&](const char* label, const Sublattice& computed,
                       const std::optional<LatticeConditions>& cond, const std::vector<IntVec>& chart_rows,
                       const std::vector<std::string>& order) {
      if (cond) {
        auto rc = detail::reorder(*cond, order, rec.variables);
        if (!(kernel_lattice(rc.weight, rc.congruences) == computed)) {
          ok = false;
          detail += std::string(label) + " differs from the lattice cut out by the record's conditions. ";
        }
      }
      std::vector<IntVec> rows;
      for (const auto& v : chart_rows) rows.push_back(detail::reorder(v, order, rec.variables));
      auto v = validate_chart(BasisChart(rows), computed);
      if (!v) {
        ok = false;
        detail += std::string(label) + " chart: " + v.diagnosis + ". ";
      }
    };
    compare("M", m, rec.M_conditions, rec.M_chart, {});
    compare("Mv", mv, rec.Mv_conditions, rec.Mv_chart, rec.Mv_coordinate_order);
    c.detail = detail;
    return ok;
  });

  run(7, "Newton points", [&](CheckResult& c) {
    nf = newton_points(need(a, 1), BasisChart(rec.M_chart));
    std::vector<IntVec> rows;
    for (const auto& v : rec.Mv_chart) rows.push_back(detail::reorder(v, rec.Mv_coordinate_order, rec.variables));
    nfv = newton_points(need(av_table, 1), BasisChart(rows));
    c.computed = Json{{"F", *nf}, {"Fv", *nfv}};
    c.expected = Json{{"F", rec.newton_F}, {"Fv", rec.newton_Fv}};
    bool ok_f = *nf == rec.newton_F, ok_v = *nfv == rec.newton_Fv;
    if (!ok_f) c.detail += "Newton points of F differ. ";
    if (!ok_v) c.detail += "Newton points of Fv differ.";
    return ok_f && ok_v;
  });

  run(8, "Delta contains Delta_(F,G)", [&](CheckResult& c) {
    nf_poly = convex_hull(need(nf, 7));
    delta = convex_hull(rec.Delta);
    c.computed = io::encode(*nf_poly);
    c.expected = io::encode(*delta);
    return contains(*delta, *nf_poly);
  });

  run(9, "Delta reflexive", [&](CheckResult& c) {
    auto r = reflexivity(need(delta, 8));
    c.detail = r.diagnosis;
    c.computed = r.reflexive;
    return r.reflexive;
  });

  run(10, "polar dual", [&](CheckResult& c) {
    dual = polar_dual(need(delta, 8));
    expected_dual = convex_hull(rec.DeltaDual);
    c.computed = io::encode(*dual);
    c.expected = io::encode(*expected_dual);
    auto lattice_dual = to_lattice(*dual);
    if (!lattice_dual) {
      c.detail = "polar dual has non-integral vertices";
      return false;
    }
    if (lattice_dual->vertices() == expected_dual->vertices()) {
      rep.dual_match = DualMatch::exact;
      return true;
    }
    if (auto u = unimodular_equivalent(*lattice_dual, *expected_dual)) {
      rep.dual_match = DualMatch::unimodular;
      rep.phi = *u;
      c.detail = "equal up to a unimodular map (flagged)";
      return true;
    }
    c.detail = "vertex sets differ and no unimodular map was found";
    return false;
  });

  run(11, "Delta dual contains Delta_(Fv,Gv)", [&](CheckResult& c) {
    const LatticePolytope nfv_poly = convex_hull(need(nfv, 7));
    c.computed = io::encode(nfv_poly);
    // After a successful check 10 the record's dual is the dual up to phi and
    // lives in the same chart as the Newton points.
    if (rep.dual_match != DualMatch::none) return contains(need(expected_dual, 10), nfv_poly);
    return contains(need(dual, 10), nfv_poly);
  });

  return rep;
}

// ---------------------------------------------------------------------------
// Sandwich search

struct SandwichResult {
  std::optional<LatticePolytope> polytope;
  std::vector<IntVec> added;         // lattice points added to `lower`
  std::size_t candidate_points = 0;  // lattice points of (upper_dual)° outside lower
  std::size_t sets_examined = 0;
};

/// Looks for a reflexive Delta with lower ⊆ Delta ⊆ (upper_dual)°, i.e.
/// Delta° ⊇ upper_dual. Candidate sets S of lattice points of (upper_dual)°
/// outside `lower` are tried by increasing size, lexicographically within a
/// size; Delta = conv(lower ∪ S) and S must consist of vertices of Delta.
inline SandwichResult sandwich_search(const LatticePolytope& lower, const LatticePolytope& upper_dual,
                                      std::size_t max_candidates = 1'000'000) {
  if (lower.dim() != upper_dual.dim()) throw DomainError("sandwich bounds have different dimension");
  const RationalPolytope outer = polar_dual(upper_dual);
  if (!contains(outer, lower))
    throw DomainError("lower polytope is not contained in the polar dual of the upper bound");

  SandwichResult res;
  std::vector<IntVec> cand;
  for (auto& p : lattice_points(outer))
    if (!lower.contains_point(p)) cand.push_back(std::move(p));
  res.candidate_points = cand.size();

  for (std::size_t k = 0; k <= cand.size(); ++k) {
    bool found = detail::for_each_combination(cand.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (++res.sets_examined > max_candidates)
        throw CapExceededError("sandwich search exceeded " + std::to_string(max_candidates) + " candidate sets");
      std::vector<IntVec> pts = lower.vertices();
      for (auto i : idx) pts.push_back(cand[i]);
      LatticePolytope p = convex_hull(pts);
      for (auto i : idx)
        if (!std::binary_search(p.vertices().begin(), p.vertices().end(), cand[i])) return false;
      if (!is_reflexive(p)) return false;
      res.polytope = std::move(p);
      for (auto i : idx) res.added.push_back(cand[i]);
      return true;
    });
    if (found) return res;
  }
  return res;
}

/// Delta_(F,G) and Delta_(Fv,Gv) computed from the polynomial and the record's
/// charts, without any comparison against the tables.
struct NewtonPair {
  LatticePolytope lower;  // Delta_(F,G)
  LatticePolytope upper;  // Delta_(Fv,Gv)
};

inline NewtonPair newton_polytopes(const CaseRecord& rec) {
  const ExponentMatrix a = parse_polynomial(rec.F, rec.variables);
  const ExponentMatrix av = transpose(a);
  std::vector<IntVec> rows;
  for (const auto& v : rec.Mv_chart) rows.push_back(detail::reorder(v, rec.Mv_coordinate_order, rec.variables));
  return {convex_hull(newton_points(a, BasisChart(rec.M_chart))), convex_hull(newton_points(av, BasisChart(rows)))};
}

// ---------------------------------------------------------------------------
// Text rendering, in the order the source tables present each case.

inline std::string render_text(const VerificationReport& rep) {
  std::string s = rep.name + ": " + (rep.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : rep.checks) {
    s += "  [" + std::string(c.passed ? "ok  " : "FAIL") + "] " + std::to_string(c.id) + ". " + c.name;
    if (!c.computed.is_null() && c.computed.is_object()) {
      if (c.id == 2) s += "  (q;h) = " + c.computed["F"].get<std::string>() + "   (qv;hv) = " + c.computed["Fv"].get<std::string>();
    } else if (c.computed.is_string()) {
      s += "  Fv = " + c.computed.get<std::string>();
    }
    if (c.id == 10 && c.passed) s += std::string("  [") + to_string(rep.dual_match) + "]";
    s += "\n";
    if (!c.detail.empty() && !(c.id == 10 && c.passed)) s += "         " + c.detail + "\n";
    if (c.id == 3 && c.computed.contains("G")) s += "         G  = <" + c.computed["G"]["generators"].dump() + ">\n";
    if (c.id == 5 && c.computed.contains("Gv")) s += "         Gv = <" + c.computed["Gv"]["generators"].dump() + ">\n";
    if (c.id == 6 && c.computed.contains("M"))
      s += "         M basis  " + c.computed["M"]["basis"].dump() + "\n         Mv basis " + c.computed["Mv"]["basis"].dump() + "\n";
    if (c.id == 7 && c.computed.contains("F"))
      s += "         F  points " + c.computed["F"].dump() + "\n         Fv points " + c.computed["Fv"].dump() + "\n";
    if (c.id == 8 && c.expected.is_object()) s += "         Delta   " + c.expected["vertices"].dump() + "\n";
    if (c.id == 10 && c.computed.is_object()) s += "         Delta°  " + c.computed["vertices"].dump() + "\n";
  }
  return s;
}

inline Json report_to_json(const VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json j{{"id", c.id}, {"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (!c.computed.is_null()) j["computed"] = c.computed;
    if (!c.expected.is_null()) j["expected"] = c.expected;
    checks.push_back(std::move(j));
  }
  Json out{{"case", rep.name}, {"passed", rep.passed()}, {"dual_match", to_string(rep.dual_match)}};
  if (rep.phi) out["phi"] = rep.phi->to_rows();
  out["checks"] = std::move(checks);
  return out;
}

}  // namespace mirrorpoly
