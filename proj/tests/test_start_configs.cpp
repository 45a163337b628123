#include <affico/start_configs.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace affico;

namespace {

// number of unordered pairs at exact squared distance d2
std::size_t pairs_at(const std::vector<Vec3E>& pts, const ExtNumber& d2) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) n += dist2(pts[i], pts[j]) == d2;
  return n;
}

ExtNumber e(long x) { return ExtNumber(GoldenNumber(x), Radicand::unit()); }

}  // namespace

TEST(StartConfigs, Sizes) {
  const std::map<std::string, std::size_t> want{
      {"icosahedron", 12}, {"dodecahedron", 20}, {"icosidodecahedron", 30}, {"c60", 60}, {"c80", 80}};
  for (const auto& name : builtin_names()) {
    const auto s = builtin(name);
    EXPECT_EQ(s.vertices.size(), want.at(name)) << name;
    EXPECT_TRUE(is_invariant(icosahedral_full(), s.vertices)) << name;
  }
}

TEST(StartConfigs, EdgeCounts) {
  // Platonic and Archimedean edge counts at the minimal distance
  EXPECT_EQ(pairs_at(builtin("icosahedron").vertices, e(4)), 30U);
  EXPECT_EQ(pairs_at(builtin("c60").vertices, e(4)), 90U);
  EXPECT_EQ(pairs_at(builtin("c80").vertices, e(4)), 120U);
  const auto t = GoldenNumber::tau();
  // dodecahedron edge 2/tau, icosidodecahedron edge 1
  EXPECT_EQ(pairs_at(builtin("dodecahedron").vertices, ExtNumber(4 * (2 - t), Radicand::unit())), 30U);
  EXPECT_EQ(pairs_at(builtin("icosidodecahedron").vertices, e(1)), 60U);
}

TEST(StartConfigs, C60Bond) {
  const auto t = GoldenNumber::tau();
  const Vec3E a(GoldenNumber(0), GoldenNumber(1), 3 * t, Radicand::unit());
  const Vec3E b(GoldenNumber(0), GoldenNumber(-1), 3 * t, Radicand::unit());
  EXPECT_EQ(dist2(a, b), e(4));
  EXPECT_EQ(builtin("c60").radius2_spectrum().size(), 1U);
}

TEST(StartConfigs, C80Radii) {
  const auto t = GoldenNumber::tau();
  const auto r = builtin("c80").radius2_spectrum();
  ASSERT_EQ(r.size(), 2U);
  EXPECT_EQ(r[0].p(), 12 + 12 * t);
  EXPECT_EQ(r[1].p(), (56 + 68 * t) / GoldenNumber(5));
}

TEST(StartConfigs, UnknownNameThrows) { EXPECT_THROW(builtin("c70"), std::invalid_argument); }

TEST(StartConfigs, SeedText) {
  const auto s = parse_seed_text("# icosahedron\n@closure on\n0,1,tau\n");
  EXPECT_EQ(s.vertices.size(), 12U);
  EXPECT_THROW(parse_seed_text("@closure off\n0,1,tau\n"), std::invalid_argument);
  EXPECT_THROW(parse_seed_text("@closure maybe\n"), ParseError);
  EXPECT_THROW(parse_seed_text("# nothing\n"), ParseError);
  try {
    parse_seed_text("@closure on\n0,1,taau\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_NE(std::string(err.what()).find("line 2"), std::string::npos);
  }
}

TEST(StartConfigs, ResolveFallsBackToFile) {
  EXPECT_EQ(resolve_config("dodecahedron").vertices.size(), 20U);
  EXPECT_THROW(resolve_config("/nonexistent/seed.txt"), std::runtime_error);
}
