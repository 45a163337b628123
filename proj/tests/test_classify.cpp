#include <affico/classify.hpp>
#include <affico/field_parser.hpp>
#include <affico/start_configs.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace affico;

namespace {

std::optional<OuterCage> depth1(const char* start, int fold, const char* length) {
  return find_outer_cage(
      generate_array(builtin(start), make_translation(icosahedral_full(), fold, parse_field_expr(length)), 1));
}

}  // namespace

TEST(ScanParse, Defaults) {
  const ScanSpec s = parse_scan("");
  EXPECT_EQ(s.a_lo, -6);
  EXPECT_EQ(s.b_hi, 6);
  EXPECT_EQ(s.c, (std::vector<long>{1, 2, 3, 4, 5}));
  EXPECT_FALSE(s.max);
}

TEST(ScanParse, Keys) {
  const ScanSpec s = parse_scan("a=0..7, b=-2..3,c=1|2|5,max=4.5");
  EXPECT_EQ(s.a_lo, 0);
  EXPECT_EQ(s.a_hi, 7);
  EXPECT_EQ(s.b_lo, -2);
  EXPECT_EQ(s.b_hi, 3);
  EXPECT_EQ(s.c, (std::vector<long>{1, 2, 5}));
  ASSERT_TRUE(s.max);
  EXPECT_DOUBLE_EQ(*s.max, 4.5);
  EXPECT_EQ(parse_scan("c=2..4").c, (std::vector<long>{2, 3, 4}));
  EXPECT_EQ(parse_scan("a=3").a_lo, 3);
  EXPECT_FALSE(parse_scan("max=auto").max);
}

TEST(ScanParse, Errors) {
  for (const char* bad : {"a=1..x", "a=3..1", "c=0", "c=-1..2", "max=-1", "max=abc", "d=1", "a", "b=..2"})
    EXPECT_THROW(parse_scan(bad), ParseError) << bad;
}

TEST(ScanLengths, DistinctPositiveSorted) {
  ScanSpec s;
  s.a_lo = -2, s.a_hi = 2, s.b_lo = -1, s.b_hi = 1, s.c = {1, 2};
  const auto l = scan_lengths(s, 10);
  std::set<long long> oracle;  // values scaled by 1e9
  const double tau = (1 + std::sqrt(5.0)) / 2;
  for (long c : s.c)
    for (long a = -2; a <= 2; ++a)
      for (long b = -1; b <= 1; ++b) {
        const double v = (a + b * tau) / c;
        if (v > 1e-12) oracle.insert(std::llround(v * 1e9));
      }
  ASSERT_EQ(l.size(), oracle.size());
  for (std::size_t i = 1; i < l.size(); ++i) EXPECT_LT(l[i - 1], l[i]);
  EXPECT_EQ(scan_lengths(s, 1.0).back(), GoldenNumber(1));
}

TEST(OuterCage, DepthOneCounts) {
  struct Row {
    const char* start;
    int fold;
    const char* length;
    std::size_t n;
  };
  for (const Row& r : {Row{"dodecahedron", 5, "tau", 120}, Row{"dodecahedron", 5, "1", 80},
                       Row{"icosahedron", 3, "1", 80}, Row{"c60", 5, "3", 240}}) {
    const auto c = depth1(r.start, r.fold, r.length);
    ASSERT_TRUE(c) << r.start << " " << r.length;
    EXPECT_EQ(c->size(), r.n) << r.start << " " << r.length;
    EXPECT_TRUE(c->graph.trivalent());
    EXPECT_EQ(c->graph.edges.size(), 3 * r.n / 2);
    EXPECT_TRUE(is_invariant(icosahedral_full(), c->points));
    const auto fc = face_census(c->graph);
    // Euler with E = 3V/2
    EXPECT_EQ(fc.faces.size(), r.n / 2 + 2);
    EXPECT_EQ(fc.pentagons(), 12U);
    // the 80- and 240-vertex shells are fullerenes; the 120-vertex one is not
    if (r.n != 120) {
      EXPECT_EQ(fc.hexagons(), r.n / 2 - 10);
    } else {
      EXPECT_EQ(fc.hexagons(), 0U);
    }
  }
}

TEST(OuterCage, ContainsOutermostShell) {
  const auto a = generate_array(builtin("c60"), make_translation(icosahedral_full(), 5, 3), 1);
  const auto c = find_outer_cage(a);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->shells.back(), a.shells.size() - 1);
  EXPECT_TRUE(std::is_sorted(c->shells.begin(), c->shells.end()));
}

TEST(OuterCage, NoneForIcosahedronItself) {
  const auto a = make_point_array(builtin("icosahedron").vertices);
  EXPECT_FALSE(find_outer_cage(a));
}

TEST(Classify, RowFields) {
  const auto row = classify_one(builtin("dodecahedron"), 5, GoldenNumber(1));
  EXPECT_EQ(row.generic, 20U * 13);
  EXPECT_TRUE(row.nontrivial());
  ASSERT_TRUE(row.cage);
  EXPECT_EQ(row.cage->count, 80U);
  EXPECT_EQ(row.cage->edges, 120U);
  ASSERT_TRUE(row.cage->faces);
  std::size_t total = 0;
  for (const auto& b : row.bands) total += b.band.count;
  EXPECT_EQ(total, row.actual);
}

TEST(Classify, ScanIsThreadIndependent) {
  const ScanSpec s = parse_scan("a=0..3,b=0..2,c=1|2");
  const auto start = builtin("dodecahedron");
  ClassifyOptions one, two;
  two.threads = 2;
  const auto r1 = classify_scan(start, {3, 5}, s, one);
  const auto r2 = classify_scan(start, {3, 5}, s, two);
  ASSERT_EQ(r1.size(), r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    EXPECT_EQ(r1[i].fold, r2[i].fold);
    EXPECT_EQ(r1[i].length, r2[i].length);
    EXPECT_EQ(r1[i].actual, r2[i].actual);
    EXPECT_EQ(r1[i].cage.has_value(), r2[i].cage.has_value());
    if (r1[i].cage && r2[i].cage) {
      EXPECT_EQ(r1[i].cage->count, r2[i].cage->count);
    }
  }
  // rows: folds in order, lengths ascending within a fold
  for (std::size_t i = 1; i < r1.size(); ++i)
    if (r1[i].fold == r1[i - 1].fold) {
      EXPECT_LT(r1[i - 1].length, r1[i].length);
    }
  EXPECT_THROW(classify_scan(start, {}, s), std::invalid_argument);
}
