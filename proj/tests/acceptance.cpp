// One PASS/FAIL line per acceptance criterion, with timings.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "mirrorpoly/pipeline.hpp"

using namespace mirrorpoly;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (passed) detail.str("");
    passed = false;
    detail << why << "; ";
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int report(int id, const char* title, Outcome& o, double secs, double limit) {
  if (secs >= limit) o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
  std::cout << (o.passed ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << "  [" << std::fixed;
  std::cout.precision(3);
  std::cout << secs << " s]  " << o.detail.str() << "\n";
  return o.passed ? 0 : 1;
}

DiagonalGroup group_of(const CaseRecord& c) {
  std::vector<GroupElement> gens;
  for (const auto& v : c.G_generators) gens.emplace_back(v);
  return DiagonalGroup(c.variables.size(), gens);
}

bool all_sl(const DiagonalGroup& g) {
  return std::all_of(g.generators().begin(), g.generators().end(), [](const GroupElement& x) { return is_sl(x); });
}

// ---------------------------------------------------------------------------

int criterion1(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t rows = 0;
  for (const auto& c : cases) {
    auto a = parse_polynomial(c.F, c.variables);
    auto at = transpose(a);
    bool ok = true;
    if (c.Fv && parse_polynomial(*c.Fv, c.variables).matrix().to_rows() != at.matrix().to_rows()) {
      // Row order may differ between the table and A^T; compare as sets.
      auto x = parse_polynomial(*c.Fv, c.variables).matrix().to_rows();
      auto y = at.matrix().to_rows();
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      if (x != y) ok = false, o.fail(c.name + ": transpose " + print_polynomial(at) + " vs " + *c.Fv);
    }
    if (!c.Fv) ok = false, o.fail(c.name + ": no transposed polynomial in the fixture");
    if (primitive_weight_system(a) != c.weights)
      ok = false, o.fail(c.name + ": weights " + to_string(primitive_weight_system(a)));
    if (primitive_weight_system(at) != c.weights_dual)
      ok = false, o.fail(c.name + ": dual weights " + to_string(primitive_weight_system(at)));
    rows += ok;
  }
  if (o.passed) o.detail << rows << "/16 rows match: transpose, (q;h), (qv;hv)";
  return report(1, "transposes and weight systems", o, seconds_since(t0), 1.0);
}

int criterion2(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t ok = 0;
  for (const auto& c : cases) {
    auto rep = verify_case(c);
    if (rep.passed()) ++ok;
    else {
      std::string ids;
      for (int id : rep.failed()) ids += " " + std::to_string(id);
      o.fail(c.name + " failed checks" + ids);
    }
  }
  const double secs = seconds_since(t0);
  if (o.passed) {
    o.detail << ok << "/16 cases pass all 11 checks.";
    std::string list;
    std::string printed;
    for (const auto& c : cases) {
      for (const auto& e : c.errata) list += " " + c.name + "." + e.field;
      if (!c.errata.empty()) {
        std::string ids;
        for (int id : verify_case(with_printed_values(c)).failed()) ids += std::to_string(id) + ",";
        if (!ids.empty()) ids.pop_back();
        printed += " " + c.name + "->{" + ids + "}";
      }
    }
    if (!list.empty())
      o.detail << " Fixture carries corrected values for" << list
               << "; the printed values fail only" << printed;
  }
  return report(2, "per-case verification, 11 checks x 16 cases", o, secs, 5.0);
}

int criterion3(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t subgroups = 0;
  for (const auto& c : cases) {
    auto a = parse_polynomial(c.F, c.variables);
    auto at = transpose(a);
    auto gmax = gmax_group(a);
    if (static_cast<Int>(gmax.order()) != std::abs(a.det())) o.fail(c.name + ": |G_max| != |det A|");
    GroupElement s = GroupElement::zero(a.size());
    for (const auto& r : gmax_generators(a)) s = s + r;
    if (s != j_element(a)) o.fail(c.name + ": sum of rho_i != J");

    // Fixture G plus every cyclic subgroup of G_max(F).
    std::vector<DiagonalGroup> groups{group_of(c)};
    for (const auto& x : gmax.elements()) groups.emplace_back(a.size(), std::vector<GroupElement>{x});
    const auto j = j_element(a), jv = j_element(at);
    for (const auto& g : groups) {
      auto gv = transpose_group(g, a);
      ++subgroups;
      if (gv.contains(jv) != all_sl(g)) o.fail(c.name + ": J(Fv) in Gv <=> G in SL broken for " + g.str());
      if (all_sl(gv) != g.contains(j)) o.fail(c.name + ": Gv in SL <=> J(F) in G broken for " + g.str());
      if (g.order() * gv.order() != gmax.order()) o.fail(c.name + ": |G||Gv| != |G_max| for " + g.str());
      if (!(transpose_group(gv, at) == g)) o.fail(c.name + ": (Gv)v != G for " + g.str());
    }
  }
  if (o.passed)
    o.detail << "|G_max|=|det A|, sum rho = J, both biconditionals and the involution hold on " << subgroups
             << " subgroups (fixture G and all cyclic subgroups)";
  return report(3, "group theory", o, seconds_since(t0), 5.0);
}

std::vector<IntVec> random_cloud(std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<IntVec> pts;
  for (std::size_t j = 0; j < 3; ++j) {
    IntVec e(3, 0), f(3, 0);
    e[j] = 1 + static_cast<Int>(rng() % 3);
    f[j] = -1 - static_cast<Int>(rng() % 3);
    pts.push_back(e);
    pts.push_back(f);
  }
  for (std::size_t i = rng() % 7; i > 0; --i) pts.push_back({coord(rng), coord(rng), coord(rng)});
  return pts;
}

LatticePolytope random_unimodular_image(std::mt19937& rng, const LatticePolytope& p) {
  IntMatrix u = IntMatrix::identity(3);
  for (int step = 0; step < 4; ++step) {
    std::size_t i = rng() % 3, k = rng() % 3;
    if (i == k) continue;
    Int f = static_cast<Int>(rng() % 3) - 1;
    for (std::size_t c = 0; c < 3; ++c) u(i, c) += f * u(k, c);
  }
  std::vector<IntVec> v;
  for (const auto& x : p.vertices()) v.push_back(mat_vec(u, x));
  return convex_hull(v);
}

int criterion4(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  std::vector<LatticePolytope> deltas;
  for (const auto& c : cases) deltas.push_back(convex_hull(c.Delta));

  std::mt19937 rng(20241015);
  std::vector<LatticePolytope> sample = deltas;
  std::size_t reflexive = 0, non_reflexive = 0;
  while (reflexive + non_reflexive < 120 || reflexive < 40 || non_reflexive < 40) {
    LatticePolytope p = (rng() % 2) ? random_unimodular_image(rng, deltas[rng() % deltas.size()])
                                    : convex_hull(random_cloud(rng));
    (is_reflexive(p) ? reflexive : non_reflexive)++;
    sample.push_back(std::move(p));
  }

  std::size_t reversal_pairs = 0;
  for (const auto& p : sample) {
    auto pd = polar_dual(p);
    if (!(polar_dual(pd) == to_rational(p))) o.fail("bipolar fails on a polytope with " +
                                                    std::to_string(p.vertices().size()) + " vertices");
    // Q = conv(P + a random extra point) contains P, so Q° must sit inside P°.
    auto pts = p.vertices();
    pts.push_back({static_cast<Int>(rng() % 9) - 4, static_cast<Int>(rng() % 9) - 4, static_cast<Int>(rng() % 9) - 4});
    auto q = convex_hull(pts);
    if (!contains(q, p) || !contains(pd, polar_dual(q))) o.fail("containment reversal fails");
    ++reversal_pairs;
  }

  // The literal claim: |boundary(Delta)| + |boundary(Delta°)| = 24. The
  // identity that does hold for reflexive 3-polytopes pairs edge lengths.
  std::vector<std::size_t> sums;
  std::size_t edge_ok = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto dual = *to_lattice(polar_dual(deltas[i]));
    sums.push_back(boundary_points(deltas[i]).size() + boundary_points(dual).size());
    edge_ok += edge_length_pairing(deltas[i]) == 24 && edge_length_pairing(dual) == 24;
  }
  const bool sum_claim = std::all_of(sums.begin(), sums.end(), [](std::size_t s) { return s == 24; });
  std::string sum_list;
  for (auto s : sums) sum_list += (sum_list.empty() ? "" : ",") + std::to_string(s);
  if (!sum_claim)
    o.fail("boundary-point sum = 24 does not hold: the 16 Delta/Delta° pairs give {" + sum_list +
           "} (cube/octahedron gives 26+6=32)");
  if (o.passed || !sum_claim)
    o.detail << "bipolar involution on 16 Delta + " << reflexive + non_reflexive - 16 << " random polytopes ("
             << reflexive << " reflexive, " << non_reflexive << " not), containment reversal on " << reversal_pairs
             << " pairs, sum over edges len(e) len(e°) = 24 on " << edge_ok << "/16 pairs";
  return report(4, "polytope properties", o, seconds_since(t0), 30.0);
}

int criterion5(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  double worst = 0;
  std::string sizes;
  for (const auto& c : cases) {
    auto tc = Clock::now();
    auto np = newton_polytopes(c);
    SandwichResult res;
    try {
      res = sandwich_search(np.lower, np.upper);
    } catch (const Error& e) {
      o.fail(c.name + ": " + e.what());
      continue;
    }
    worst = std::max(worst, seconds_since(tc));
    if (!res.polytope) {
      o.fail(c.name + ": no reflexive polytope found");
      continue;
    }
    // Validate through the pipeline with the found polytope in place of the table.
    CaseRecord rec = c;
    rec.Delta = res.polytope->vertices();
    rec.DeltaDual = to_lattice(polar_dual(*res.polytope))->vertices();
    auto rep = verify_case(rec);
    for (int id : {8, 9, 10, 11})
      if (!rep.check(id).passed) o.fail(c.name + ": found polytope fails check " + std::to_string(id));
    // Where the tabulated Delta is the Newton polytope itself, nothing may be added.
    if (np.lower == convex_hull(c.Delta) && !(*res.polytope == np.lower))
      o.fail(c.name + ": Delta = Delta_(F,G) in the table but the search added points");
    sizes += " " + normalize_case_name(c.name) + ":" + std::to_string(res.added.size());
  }
  if (worst >= 60.0) o.fail("slowest case took " + std::to_string(worst) + " s");
  if (o.passed) o.detail << "all 16 validated by checks 8-11; added vertices per case:" << sizes;
  return report(5, "sandwich search", o, seconds_since(t0), 60.0 * 16);
}

// Field perturbations and the check each one must flip.
struct Perturbation {
  const char* field;
  std::set<int> flips;  // at least one of these must fail
  std::function<bool(CaseRecord&)> apply;  // false when the field is absent
};

std::vector<Perturbation> perturbations() {
  auto bump_rows = [](std::vector<IntVec>& rows) {
    if (rows.empty()) return false;
    rows[0][0] += 1;
    return true;
  };
  return {
      {"Fv", {1}, [](CaseRecord& r) { if (!r.Fv) return false; r.Fv = *r.Fv + "*x"; return true; }},
      {"weights", {2}, [](CaseRecord& r) { r.weights.q[0] += 1; return true; }},
      {"weights_dual", {2}, [](CaseRecord& r) { r.weights_dual.h += 1; return true; }},
      {"gmax_f_generators", {3}, [](CaseRecord& r) { r.gmax_f_generators[0][0] += Rational(1, 97); return true; }},
      {"G_generators", {3}, [](CaseRecord& r) { r.G_generators[0][0] += Rational(1, 97); return true; }},
      {"M_conditions", {6}, [](CaseRecord& r) { if (!r.M_conditions) return false; r.M_conditions->weight[0] += 1; return true; }},
      {"Mv_conditions", {6}, [](CaseRecord& r) { if (!r.Mv_conditions) return false; r.Mv_conditions->weight[0] += 1; return true; }},
      {"M_chart", {6}, [=](CaseRecord& r) { return bump_rows(r.M_chart); }},
      {"Mv_chart", {6}, [=](CaseRecord& r) { return bump_rows(r.Mv_chart); }},
      {"newton_F", {7}, [=](CaseRecord& r) { return bump_rows(r.newton_F); }},
      {"newton_Fv", {7}, [=](CaseRecord& r) { return bump_rows(r.newton_Fv); }},
      {"Delta", {8, 9, 10}, [=](CaseRecord& r) { return bump_rows(r.Delta); }},
      {"DeltaDual", {10}, [=](CaseRecord& r) { return bump_rows(r.DeltaDual); }},
  };
}

int criterion6(const std::vector<CaseRecord>& cases) {
  Outcome o;
  auto t0 = Clock::now();
  std::size_t runs = 0;
  for (const auto& c : cases)
    for (const auto& p : perturbations()) {
      CaseRecord rec = c;
      if (!p.apply(rec)) continue;
      ++runs;
      try {
        auto rep = verify_case(rec);
        bool flipped = std::any_of(p.flips.begin(), p.flips.end(), [&](int id) { return !rep.check(id).passed; });
        if (!flipped) o.fail(c.name + "." + p.field + " perturbation not detected");
      } catch (const std::exception& e) {
        o.fail(c.name + "." + p.field + " perturbation threw: " + e.what());
      }
    }
  if (o.passed) o.detail << runs << " single-field perturbations, each flipped its check, none threw";
  return report(6, "fault injection", o, seconds_since(t0), 60.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : MIRRORPOLY_FIXTURES;
  std::vector<CaseRecord> cases;
  try {
    cases = load_cases(path);
  } catch (const Error& e) {
    std::cout << "FAIL  could not load fixtures: " << e.what() << "\n";
    return 1;
  }
  if (cases.size() != 16) {
    std::cout << "FAIL  expected 16 cases, found " << cases.size() << "\n";
    return 1;
  }
  int failures = 0;
  failures += criterion1(cases);
  failures += criterion2(cases);
  failures += criterion3(cases);
  failures += criterion4(cases);
  failures += criterion5(cases);
  failures += criterion6(cases);
  std::cout << (6 - failures) << "/6 criteria passed\n";
  return failures == 0 ? 0 : 1;
}
