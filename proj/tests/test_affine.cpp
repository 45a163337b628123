#include <affico/affine.hpp>
#include <affico/field_parser.hpp>
#include <affico/start_configs.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <unordered_set>

using namespace affico;

namespace {

const PointGroup& ih() { return icosahedral_full(); }

// float dedup with a snapping grid, independent of the exact hashing
std::size_t float_distinct(const std::vector<Vec3d>& pts) {
  std::vector<std::array<long long, 3>> keys;
  for (const auto& p : pts) keys.push_back({std::llround(p.x * 1e6), std::llround(p.y * 1e6), std::llround(p.z * 1e6)});
  std::sort(keys.begin(), keys.end());
  return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::size_t brute_force_depth1(const StartConfig& s, const AffineTranslation& t) {
  std::vector<Vec3d> pts;
  for (const auto& x : s.vertices) {
    pts.push_back(x.to_double());
    for (const auto& v : t.vectors) pts.push_back(x.to_double() + v.to_double());
  }
  return float_distinct(pts);
}

}  // namespace

TEST(Affine, DirectionCounts) {
  EXPECT_EQ(make_translation(ih(), 5, 1).vectors.size(), 12U);
  EXPECT_EQ(make_translation(ih(), 3, 1).vectors.size(), 20U);
  EXPECT_EQ(make_translation(ih(), 2, 1).vectors.size(), 30U);
  EXPECT_THROW(make_translation(ih(), 5, 0), std::invalid_argument);
  EXPECT_THROW(make_translation(ih(), 5, 1 - GoldenNumber::tau()), std::invalid_argument);
}

TEST(Affine, LengthConventions) {
  const double tau = (1 + std::sqrt(5.0)) / 2;
  const auto ax = make_translation(ih(), 5, 2);
  EXPECT_NEAR(ax.vectors.front().to_double().norm(), 2 * std::sqrt(1 + tau * tau), 1e-12);
  for (int fold : {2, 3, 5}) {
    const auto u = make_translation(ih(), fold, 3, LengthUnit::unit);
    for (const auto& v : u.vectors) EXPECT_NEAR(v.to_double().norm(), 3.0, 1e-12);
    EXPECT_EQ(norm2(u.vectors.front()), ExtNumber(GoldenNumber(9), u.radicand()));
  }
}

TEST(Affine, GenericCountForGenericLength) {
  const auto c60 = builtin("c60");
  const auto t = make_translation(ih(), 5, parse_field_expr("17/7"));
  const auto a = generate_array(c60, t, 1);
  EXPECT_EQ(generic_cardinality(60, t), 780U);
  EXPECT_EQ(a.size(), 780U);
  EXPECT_EQ(brute_force_depth1(c60, t), 780U);
  EXPECT_FALSE(is_nontrivial(c60, t));
}

TEST(Affine, CoincidencesMatchFloatOracle) {
  struct Case {
    const char* start;
    int fold;
    const char* length;
  };
  for (const Case& c : {Case{"dodecahedron", 5, "1"}, Case{"dodecahedron", 3, "tau^2"}, Case{"icosahedron", 3, "1"},
                        Case{"c60", 5, "3"}, Case{"icosidodecahedron", 2, "tau"}}) {
    const auto s = builtin(c.start);
    const auto t = make_translation(ih(), c.fold, parse_field_expr(c.length));
    EXPECT_EQ(generate_array(s, t, 1).size(), brute_force_depth1(s, t)) << c.start << " " << c.length;
  }
  const auto d = builtin("dodecahedron");
  EXPECT_TRUE(is_nontrivial(d, make_translation(ih(), 5, 1)));
}

TEST(Affine, ArrayIsInvariantAndShellsPartition) {
  const auto a = generate_array(builtin("dodecahedron"), make_translation(ih(), 5, GoldenNumber::tau()), 1);
  EXPECT_TRUE(is_invariant(ih(), a.points));
  std::size_t next = 0;
  for (std::size_t s = 0; s < a.shells.size(); ++s) {
    const auto& sh = a.shells[s];
    EXPECT_EQ(sh.begin, next);
    EXPECT_LT(sh.begin, sh.end);
    next = sh.end;
    for (std::size_t i = sh.begin; i < sh.end; ++i) EXPECT_EQ(norm2(a.points[i]), sh.radius2);
    if (s > 0) {
      EXPECT_LT(a.shells[s - 1].radius2, sh.radius2);
    }
    // every shell is a union of orbits
    EXPECT_TRUE(is_invariant(ih(), shell_points(a, {s})));
  }
  EXPECT_EQ(next, a.size());
}

TEST(Affine, DepthIsMonotone) {
  const auto s = builtin("icosahedron");
  const auto t = make_translation(ih(), 3, 1);
  std::unordered_set<Vec3E, Vec3Hash> prev;
  for (int k = 0; k <= 3; ++k) {
    const auto a = generate_array(s, t, k);
    std::unordered_set<Vec3E, Vec3Hash> cur(a.points.begin(), a.points.end());
    for (const auto& p : prev) EXPECT_TRUE(cur.contains(p));
    EXPECT_GE(cur.size(), prev.size());
    prev = std::move(cur);
  }
  EXPECT_EQ(generate_array(s, t, 0).size(), 12U);
}

TEST(Affine, ScaleEquivariance) {
  const auto s = builtin("icosahedron");
  const auto a = generate_array(s, make_translation(ih(), 5, 1), 1);
  // scaling start and translation by tau scales the array by tau
  StartConfig scaled{"scaled", {}};
  for (const auto& v : s.vertices) scaled.vertices.push_back(GoldenNumber::tau() * v);
  const auto b = generate_array(scaled, make_translation(ih(), 5, GoldenNumber::tau()), 1);
  ASSERT_EQ(a.size(), b.size());
  std::unordered_set<Vec3E, Vec3Hash> bs(b.points.begin(), b.points.end());
  for (const auto& p : a.points) EXPECT_TRUE(bs.contains(GoldenNumber::tau() * p));
}

TEST(Affine, ThreadCountDoesNotChangeOutput) {
  const auto s = builtin("c60");
  const auto t = make_translation(ih(), 5, 3);
  const auto a = generate_array(s, t, 2, {1'000'000, 1});
  const auto b = generate_array(s, t, 2, {1'000'000, 4});
  EXPECT_EQ(a.points, b.points);
}

TEST(Affine, ResourceCap) {
  EXPECT_THROW(generate_array(builtin("c60"), make_translation(ih(), 5, 3), 3, {500, 1}), ResourceLimit);
}

TEST(Affine, Bands) {
  const auto a = generate_array(builtin("c60"), make_translation(ih(), 5, 3), 1);
  const auto b = bands(a, 0.05);
  std::size_t total = 0;
  for (const auto& x : b) total += x.count;
  EXPECT_EQ(total, a.size());
  EXPECT_THROW(bands(a, 0), std::invalid_argument);
  EXPECT_THROW(bands(a, 0.5), std::invalid_argument);
}

TEST(Affine, UnitWorkspaceLiftsStart) {
  const auto t = make_translation(ih(), 3, 1, LengthUnit::unit);
  const auto a = generate_array(builtin("icosahedron"), t, 1);
  EXPECT_EQ(a.points.front().radicand(), Radicand::three());
  EXPECT_EQ(a.size(), brute_force_depth1(builtin("icosahedron"), t));
}
