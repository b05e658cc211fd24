#include <gtest/gtest.h>

#include "mirrorpoly/pipeline.hpp"

using namespace mirrorpoly;

namespace {

DiagonalGroup fixture_g(const CaseRecord& c) {
  std::vector<GroupElement> gens;
  for (const auto& v : c.G_generators) gens.emplace_back(v);
  return DiagonalGroup(c.variables.size(), gens);
}

// Membership in M straight from the definition: q.m = 0 and g.m integral for
// every g in G.
bool in_m_by_definition(const IntVec& m, const WeightSystem& w, const DiagonalGroup& g) {
  if (dot(w.q, m) != 0) return false;
  for (const auto& x : g.elements()) {
    Rational s(0);
    for (std::size_t i = 0; i < m.size(); ++i) s += x.components()[i] * Rational(m[i]);
    if (!s.is_integer()) return false;
  }
  return true;
}

}  // namespace

TEST(KernelLattice, WeightOnly) {
  auto m = kernel_lattice({3, 5, 9, 1}, {});
  EXPECT_EQ(m.rank(), 3u);
  EXPECT_TRUE(m.contains(IntVec{1, 0, 0, -3}));
  EXPECT_TRUE(m.contains(IntVec{0, 1, 0, -5}));
  EXPECT_FALSE(m.contains(IntVec{1, 0, 0, 0}));
}

TEST(KernelLattice, CongruenceCutsAnIndexTwoSublattice) {
  auto full = kernel_lattice({1, 1, 1, 1}, {});
  auto half = kernel_lattice({1, 1, 1, 1}, {{{1, 0, 1, 0}, 2}});
  EXPECT_TRUE(half.is_subset_of(full));
  EXPECT_FALSE(full.is_subset_of(half));
  EXPECT_EQ(half.index_in(full), 2);
  EXPECT_TRUE(half.contains(IntVec{1, -1, 1, -1}));
  EXPECT_FALSE(half.contains(IntVec{1, -1, 0, 0}));
  EXPECT_THROW(kernel_lattice({1, 1}, {{{1}, 2}}), DomainError);
  EXPECT_THROW(kernel_lattice({1, 1}, {{{1, 1}, 0}}), DomainError);
}

TEST(CharacterLattice, J30Membership) {
  auto a = parse_polynomial("x^6+x*y^3+z^2+w^18");
  auto w = primitive_weight_system(a);
  auto g = lift_group(gmax_group(restrict_to_first_n(a)));
  auto m = character_lattice(w, g);
  EXPECT_TRUE(m.contains(IntVec{5, -1, -1, -1}));
  EXPECT_TRUE(in_m_by_definition({5, -1, -1, -1}, w, g));
  // In ker q, but x^0 y^1 w^-5 is not invariant under G.
  EXPECT_EQ(dot(w.q, IntVec{0, 1, 0, -5}), 0);
  EXPECT_FALSE(m.contains(IntVec{0, 1, 0, -5}));
  EXPECT_FALSE(in_m_by_definition({0, 1, 0, -5}, w, g));
}

TEST(CharacterLattice, TrivialGroupGivesTheWeightKernel) {
  // With G = <J>, M is all of ker q since q.m = 0 already makes J.m integral.
  auto a = parse_polynomial("x^3*y+y^3+z^3+w^9");
  auto w = primitive_weight_system(a);
  DiagonalGroup jg(4, {j_element(w)});
  EXPECT_EQ(character_lattice(w, jg), kernel_lattice(w.q, {}));
}

TEST(CharacterLattice, RequiresJ) {
  auto w = primitive_weight_system(parse_polynomial("x^2+y^2+z^2"));
  EXPECT_THROW(character_lattice(w, DiagonalGroup::trivial(3)), DomainError);
}

TEST(CharacterLattice, AgreesWithDefinitionOnABox) {
  const auto cases = load_cases(MIRRORPOLY_FIXTURES);
  for (const char* name : {"J_3_0", "Z_1_0", "Q_2_0", "U_16"}) {
    const auto& c = find_case(cases, name);
    auto a = parse_polynomial(c.F, c.variables);
    auto w = primitive_weight_system(a);
    auto g = fixture_g(c);
    auto m = character_lattice(w, g);
    IntVec x(4);
    for (x[0] = -4; x[0] <= 4; ++x[0])
      for (x[1] = -4; x[1] <= 4; ++x[1])
        for (x[2] = -4; x[2] <= 4; ++x[2])
          for (x[3] = -4; x[3] <= 4; ++x[3])
            ASSERT_EQ(m.contains(x), in_m_by_definition(x, w, g)) << name << " " << to_string(x);
  }
}

TEST(CharacterLattice, IndexInWeightKernelIsQuotientByJ) {
  for (const auto& c : load_cases(MIRRORPOLY_FIXTURES)) {
    auto a = parse_polynomial(c.F, c.variables);
    auto w = primitive_weight_system(a);
    auto g = fixture_g(c);
    auto m = character_lattice(w, g);
    DiagonalGroup jg(4, {j_element(w)});
    EXPECT_EQ(static_cast<std::size_t>(m.index_in(kernel_lattice(w.q, {}))), quotient_order(g, jg)) << c.name;
  }
}

TEST(Chart, CoordinatesAndPointsRoundTrip) {
  const BasisChart chart({{1, 0, 0, -2}, {0, 1, 0, -6}, {0, 0, 1, -9}});
  EXPECT_EQ(coordinates(chart, IntVec{-1, -1, -1, 17}), (IntVec{-1, -1, -1}));
  EXPECT_EQ(coordinates(chart, IntVec{-1, 2, -1, -1}), (IntVec{-1, 2, -1}));
  for (Int i = -3; i <= 3; ++i)
    for (Int j = -3; j <= 3; ++j) {
      IntVec c{i, j, i - j};
      EXPECT_EQ(coordinates(chart, chart.point(c)), c);
    }
  EXPECT_THROW(coordinates(chart, IntVec{1, 0, 0, 0}), DomainError);
  EXPECT_THROW(BasisChart({{1, 0}, {2, 0}}), DomainError);
}

TEST(Chart, J30CoordinatesByHand) {
  // e1 = (5,-1,-1,-1), e2 = (0,2,-1,-1), e3 = (-1,-1,1,-1):
  // (-1,-1,-1,17) = -2 e1 - 6 e2 - 9 e3 after solving the first three rows.
  const BasisChart chart({{5, -1, -1, -1}, {0, 2, -1, -1}, {-1, -1, 1, -1}});
  EXPECT_EQ(coordinates(chart, IntVec{-1, -1, -1, 17}), (IntVec{-2, -6, -9}));
}

TEST(Chart, ValidationOnFixtures) {
  for (const auto& c : load_cases(MIRRORPOLY_FIXTURES)) {
    auto a = parse_polynomial(c.F, c.variables);
    auto w = primitive_weight_system(a);
    auto m = character_lattice(w, fixture_g(c));
    auto v = validate_chart(BasisChart(c.M_chart), m);
    EXPECT_TRUE(v) << c.name << ": " << v.diagnosis;
  }
}

TEST(Chart, ValidationDiagnoses) {
  auto m = kernel_lattice({3, 5, 9, 1}, {});
  EXPECT_TRUE(validate_chart(BasisChart({{1, 0, 0, -3}, {0, 1, 0, -5}, {0, 0, 1, -9}}), m));
  // Permuted and sign-flipped bases span the same lattice.
  EXPECT_TRUE(validate_chart(BasisChart({{0, 0, -1, 9}, {1, 0, 0, -3}, {0, 1, 0, -5}}), m));

  auto doubled = validate_chart(BasisChart({{2, 0, 0, -6}, {0, 1, 0, -5}, {0, 0, 1, -9}}), m);
  EXPECT_EQ(doubled.status, ChartValidation::Status::proper_sublattice);
  EXPECT_EQ(doubled.index, 2);

  auto outside = validate_chart(BasisChart({{1, 0, 0, 0}, {0, 1, 0, -5}, {0, 0, 1, -9}}), m);
  EXPECT_EQ(outside.status, ChartValidation::Status::not_in_lattice);
  EXPECT_NE(outside.diagnosis.find("e_1"), std::string::npos);

  auto short_chart = validate_chart(BasisChart({{1, 0, 0, -3}}), m);
  EXPECT_EQ(short_chart.status, ChartValidation::Status::wrong_rank);
}

TEST(Newton, J30Points) {
  auto a = parse_polynomial("x^6+x*y^3+z^2+w^18");
  const BasisChart chart({{5, -1, -1, -1}, {0, 2, -1, -1}, {-1, -1, 1, -1}});
  auto pts = newton_points(a, chart);
  // x^6 - 1 = (5,-1,-1,-1) = e1, x y^3 - 1 = (0,2,-1,-1) = e2, z^2 - 1 = e3.
  EXPECT_EQ(pts[0], (IntVec{1, 0, 0}));
  EXPECT_EQ(pts[1], (IntVec{0, 1, 0}));
  EXPECT_EQ(pts[2], (IntVec{0, 0, 1}));
  EXPECT_EQ(pts[3], (IntVec{-2, -6, -9}));
}

TEST(Newton, FermatCurveInOneDimension) {
  // x^2 + y^2 with q = (1,1): M = ker q = Z(1,-1); points (1,-1) and (-1,1).
  auto a = parse_polynomial("x^2+y^2");
  auto pts = newton_points(a, BasisChart({{1, -1}}));
  EXPECT_EQ(pts, (std::vector<IntVec>{{1}, {-1}}));
}

TEST(Newton, MatchesFixtureTables) {
  for (const auto& c : load_cases(MIRRORPOLY_FIXTURES)) {
    auto a = parse_polynomial(c.F, c.variables);
    EXPECT_EQ(newton_points(a, BasisChart(c.M_chart)), c.newton_F) << c.name;
  }
}

TEST(Newton, OutsideLatticeThrows) {
  auto a = parse_polynomial("x^6+x*y^3+z^2+w^18");
  EXPECT_THROW(newton_points(a, BasisChart({{2, 0, 0, -6}, {0, 1, 0, -5}, {0, 0, 1, -9}})), DomainError);
}
