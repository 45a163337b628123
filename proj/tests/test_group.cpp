#include <affico/group.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <map>

using namespace affico;

namespace {

std::array<double, 9> to_float(const Mat3G& m) {
  std::array<double, 9> f{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) f[3 * r + c] = m(r, c).to_double();
  return f;
}

double cofactor_det(const std::array<double, 9>& m) {
  return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
         m[2] * (m[3] * m[7] - m[4] * m[6]);
}

Vec3E v(const GoldenNumber& x, const GoldenNumber& y, const GoldenNumber& z) { return {x, y, z, Radicand::unit()}; }

}  // namespace

TEST(Group, GeneratorB5) {
  const auto b = generators::b5();
  EXPECT_NEAR(cofactor_det(to_float(b)), 1.0, 1e-12);
  EXPECT_EQ(b.det(), GoldenNumber(1));
  Mat3G p = Mat3G::identity();
  for (int i = 0; i < 5; ++i) p = p * b;
  EXPECT_EQ(p, Mat3G::identity());
  EXPECT_EQ(element_order(b), 5);
  // fixes its axis
  const auto axis = v(0, 1, GoldenNumber::tau());
  EXPECT_EQ(b * axis, axis);
}

TEST(Group, Orders) {
  EXPECT_EQ(icosahedral_rotations().order(), 60U);
  EXPECT_EQ(icosahedral_full().order(), 120U);
}

TEST(Group, ElementsAreOrthogonal) {
  for (const auto& m : icosahedral_full().elements()) {
    const auto f = to_float(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += f[3 * i + k] * f[3 * j + k];
        EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-12);
      }
    EXPECT_NEAR(std::abs(cofactor_det(f)), 1.0, 1e-12);
  }
}

TEST(Group, ElementOrderCensus) {
  // I: 1 + 15 half-turns + 20 order-3 + 24 order-5; I_h adds -I, 15 mirrors,
  // 20 S6 and 24 S10 elements
  const auto rot = summarize(icosahedral_rotations());
  EXPECT_EQ(rot.element_orders, (std::map<int, std::size_t>{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  EXPECT_EQ(rot.improper, 0U);
  const auto full = summarize(icosahedral_full());
  EXPECT_EQ(full.element_orders, (std::map<int, std::size_t>{{1, 1}, {2, 31}, {3, 20}, {5, 24}, {6, 20}, {10, 24}}));
  EXPECT_EQ(full.improper, 60U);
}

TEST(Group, AxisCounts) {
  for (const auto* g : {&icosahedral_rotations(), &icosahedral_full()}) {
    EXPECT_EQ(axes(*g, 2).size(), 15U);
    EXPECT_EQ(axes(*g, 3).size(), 10U);
    EXPECT_EQ(axes(*g, 5).size(), 6U);
  }
  for (int fold : {2, 3, 5})
    for (const auto& a : axes(icosahedral_full(), fold)) {
      EXPECT_EQ(norm2(a.unit), ExtNumber(GoldenNumber(1), a.unit.radicand()));
      EXPECT_NEAR(a.unit.to_double().norm(), 1.0, 1e-12);
    }
  EXPECT_THROW(axes(icosahedral_full(), 4), std::invalid_argument);
}

TEST(Group, OrbitStabilizer) {
  const auto& g = icosahedral_full();
  const auto t = GoldenNumber::tau();
  struct Case {
    Vec3E p;
    std::size_t orbit, stab;
  };
  const Case cases[] = {{v(2 * t, 2 * t, 2 * t), 20, 6},
                        {v(0, 1, t), 12, 10},
                        {v(1, 0, 0), 30, 4},
                        {v(GoldenNumber(Rational(1, 3)), 2, 5 * t), 120, 1}};
  for (const auto& c : cases) {
    EXPECT_EQ(orbit(g, c.p).size(), c.orbit);
    EXPECT_EQ(stabilizer_order(g, c.p), c.stab);
    EXPECT_EQ(orbit(g, c.p).size() * stabilizer_order(g, c.p), g.order());
  }
}

TEST(Group, OrbitPreservesNorm) {
  const auto p = v(1, GoldenNumber::tau(), 3);
  for (const auto& q : orbit(icosahedral_full(), p)) EXPECT_EQ(norm2(q), norm2(p));
}

TEST(Group, ClosureIsDeterministic) {
  const auto a = generate_closure({generators::r3(), generators::b5()}, 200, "I");
  EXPECT_EQ(a.elements(), icosahedral_rotations().elements());
  EXPECT_EQ(a.elements().front(), Mat3G::identity());
}
