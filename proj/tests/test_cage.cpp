#include <affico/affine.hpp>
#include <affico/cage.hpp>
#include <affico/field_parser.hpp>
#include <affico/start_configs.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace affico;

namespace {

// Straightforward threshold search: every distinct distance is a candidate.
std::optional<std::size_t> oracle_edge_count(const std::vector<Vec3d>& p) {
  struct P {
    double d;
    std::size_t i, j;
  };
  std::vector<P> all;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) all.push_back({(p[i] - p[j]).norm(), i, j});
  std::sort(all.begin(), all.end(), [](const P& a, const P& b) { return a.d < b.d; });
  std::vector<int> deg(p.size(), 0);
  std::size_t k = 0;
  while (k < all.size()) {
    std::size_t e = k;
    while (e < all.size() && all[e].d <= all[k].d * (1 + 1e-9)) {
      ++deg[all[e].i];
      ++deg[all[e].j];
      ++e;
    }
    if (*std::max_element(deg.begin(), deg.end()) > 3) return std::nullopt;
    if (*std::min_element(deg.begin(), deg.end()) == 3) return e;
    k = e;
  }
  return std::nullopt;
}

std::vector<Vec3d> floats(const char* name) { return to_double(builtin(name).vertices); }

}  // namespace

TEST(ThresholdSearch, C60) {
  const auto g = threshold_search(floats("c60"));
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edges.size(), 90U);
  EXPECT_TRUE(g->trivalent());
  EXPECT_NEAR(g->edge_min, 2.0, 1e-12);
  EXPECT_NEAR(g->edge_ratio(), 1.0, 1e-12);
}

TEST(ThresholdSearch, IcosahedronHasNoTrivalentCutoff) {
  EXPECT_FALSE(threshold_search(floats("icosahedron")));
  EXPECT_FALSE(oracle_edge_count(floats("icosahedron")));
  EXPECT_FALSE(threshold_search(floats("icosidodecahedron")));
}

TEST(ThresholdSearch, AgreesWithOracle) {
  for (const char* name : {"dodecahedron", "c60", "c80", "icosahedron"}) {
    const auto p = floats(name);
    const auto g = threshold_search(p);
    const auto o = oracle_edge_count(p);
    ASSERT_EQ(g.has_value(), o.has_value()) << name;
    if (g) {
      EXPECT_EQ(g->edges.size(), *o) << name;
    }
  }
}

TEST(ThresholdSearch, RejectsDisconnected) {
  // two far-apart tetrahedra are each trivalent
  std::vector<Vec3d> p{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (int i = 0; i < 4; ++i) p.push_back(p[i] + Vec3d{100, 0, 0});
  EXPECT_FALSE(threshold_search(p));
  p.resize(4);
  const auto g = threshold_search(p);
  ASSERT_TRUE(g);
  EXPECT_EQ(g->edges.size(), 6U);
}

TEST(ThresholdSearch, DegreesNeverDecreaseWithCutoff) {
  const auto p = floats("c80");
  const auto g = threshold_search(p);
  ASSERT_TRUE(g);
  // degree counts at cutoffs below the found one are all <= 3
  std::vector<double> cuts;
  for (auto [i, j] : g->edges) cuts.push_back((p[i] - p[j]).norm());
  std::vector<std::size_t> prev(p.size(), 0);
  for (double c : cuts) {
    std::vector<std::size_t> d(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if ((p[i] - p[j]).norm() <= c * (1 + 1e-9)) ++d[i], ++d[j];
    for (std::size_t i = 0; i < p.size(); ++i) {
      EXPECT_GE(d[i], prev[i]);
      EXPECT_LE(d[i], 3U);
    }
    prev = d;
  }
}

TEST(OrbitSearch, AgreesWithFullSearchOnShellSubsets) {
  const auto a = generate_array(builtin("dodecahedron"), make_translation(icosahedral_full(), 5, 1), 1);
  std::vector<std::size_t> shell_of(a.size());
  for (std::size_t s = 0; s < a.shells.size(); ++s)
    for (std::size_t i = a.shells[s].begin; i < a.shells[s].end; ++i) shell_of[i] = s;
  const OrbitSearch search(to_double(a.points), shell_of);
  EXPECT_LE(search.orbit_count(), a.size());
  const std::size_t ns = a.shells.size();
  const std::size_t w = std::min<std::size_t>(ns, 6);
  std::size_t agreeing = 0;
  for (std::size_t mask = 1; mask < (std::size_t{1} << w); ++mask) {
    std::vector<bool> sel(ns, false);
    std::vector<std::size_t> ids;
    for (std::size_t b = 0; b < w; ++b)
      if (mask >> b & 1) sel[ns - 1 - b] = true, ids.push_back(ns - 1 - b);
    std::sort(ids.begin(), ids.end());
    const auto fast = search.search(sel);
    const auto full = threshold_search(to_double(shell_points(a, ids)));
    EXPECT_EQ(fast.has_value(), full.has_value()) << "mask " << mask;
    if (fast && full) {
      EXPECT_EQ(fast->edges.size(), full->edges.size());
    }
    agreeing += fast.has_value() == full.has_value();
  }
  EXPECT_EQ(agreeing, (std::size_t{1} << w) - 1);
}

TEST(FaceCensus, TruncatedIcosahedron) {
  const auto g = threshold_search(floats("c60"));
  ASSERT_TRUE(g);
  const auto fc = face_census(*g);
  // trivalent cage with only pentagons and hexagons: p = 12, h = V/2 - 10
  EXPECT_EQ(fc.pentagons(), 12U);
  EXPECT_EQ(fc.hexagons(), 60U / 2 - 10);
  EXPECT_EQ(fc.other(), 0U);
}

TEST(FaceCensus, Dodecahedron) {
  const auto g = threshold_search(floats("dodecahedron"));
  ASSERT_TRUE(g);
  const auto fc = face_census(*g);
  EXPECT_EQ(fc.faces.size(), 12U);
  EXPECT_EQ(fc.pentagons(), 12U);
}

TEST(FaceCensus, FacesAreOrientedOutward) {
  const auto g = threshold_search(floats("c80"));
  ASSERT_TRUE(g);
  const auto fc = face_census(*g);
  std::size_t edges_seen = 0;
  for (const auto& f : fc.faces) {
    Vec3d c{}, n{};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& p = g->vertices[f[i]];
      const auto& q = g->vertices[f[(i + 1) % f.size()]];
      c = c + p;
      n = n + cross(p, q);
    }
    EXPECT_GT(dot(n, c), 0);
    edges_seen += f.size();
  }
  // each edge borders two faces
  EXPECT_EQ(edges_seen, 2 * g->edges.size());
}

TEST(FaceCensus, NonPlanarGraphFailsEuler) {
  CageGraph g;
  g.vertices = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) g.edges.emplace_back(i, j);
  EXPECT_THROW(face_census(g), EulerError);
}

TEST(Kustov, Predicate) {
  for (long n : {20L, 60L, 80L, 120L, 140L, 180L, 200L, 240L, 540L, 320L}) EXPECT_TRUE(kustov_allowable(n)) << n;
  for (long n : {40L, 70L, 100L, 160L, 220L, 250L}) EXPECT_FALSE(kustov_allowable(n)) << n;
  EXPECT_THROW(kustov_allowable(19), std::invalid_argument);
}

TEST(Similarity, ScaleAndRotationInvariant) {
  const auto p = floats("c60");
  std::vector<Vec3d> q;
  const double c = std::cos(0.3), s = std::sin(0.3);
  for (const auto& v : p) q.push_back(2.5 * Vec3d{c * v.x - s * v.y, s * v.x + c * v.y, v.z});
  EXPECT_TRUE(similar_up_to_scale(p, q));
  EXPECT_FALSE(similar_up_to_scale(p, floats("c80")));
  EXPECT_FALSE(similar_up_to_scale(floats("dodecahedron"), floats("icosidodecahedron")));
}
