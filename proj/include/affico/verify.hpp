#pragma once

// The reproduction checklist shared by `affico verify` and the acceptance
// test binary: one entry per criterion, each timed.

#include <affico/classify.hpp>
#include <affico/field_parser.hpp>
#include <affico/onion.hpp>
#include <affico/pentagon.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace affico {

struct CriterionResult {
  int id = 0;
  std::string key;
  std::string title;
  bool passed = false;
  bool known_discrepancy = false;  // documented expected failure
  std::string detail;
  double seconds = 0;
};

namespace verify_detail {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "[FAILED: " << what << "] ";
    }
  }
};

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  s << '[';
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
  s << ']';
  return s.str();
}

inline GoldenNumber tau() { return GoldenNumber::tau(); }
inline GoldenNumber lit(const char* s) { return parse_field_expr(s); }

inline std::optional<OuterCage> depth1_cage(const std::string& start, int fold, const GoldenNumber& lambda) {
  const auto t = make_translation(icosahedral_full(), fold, lambda);
  return find_outer_cage(generate_array(builtin(start), t, 1));
}

inline void c_group(Check& c) {
  const auto& i = icosahedral_rotations();
  const auto& ih = icosahedral_full();
  c.expect(i.order() == 60, "|I| = 60");
  c.expect(ih.order() == 120, "|I_h| = 120");
  const std::size_t a2 = axes(ih, 2).size(), a3 = axes(ih, 3).size(), a5 = axes(ih, 5).size();
  c.expect(a2 == 15 && a3 == 10 && a5 == 6, "axis counts 15/10/6");
  c.detail << "|I|=" << i.order() << " |I_h|=" << ih.order() << " axes 2/3/5 = " << a2 << "/" << a3 << "/" << a5;
}

inline void c_pentagon(Check& c) {
  const auto a = pentagon_array(tau());
  const auto b = pentagon_array(lit("1/2"));
  c.expect(a.actual() == 25 && a.generic == 30, "lambda=tau gives 25 of 30");
  c.expect(b.actual() == 30, "lambda=1/2 gives 30");
  c.detail << "tau: " << a.actual() << "/" << a.generic << ", 1/2: " << b.actual() << "/" << b.generic;
}

inline void c_platonic(Check& c) {
  struct Row {
    const char* start;
    int fold;
    const char* length;
    std::size_t want;
  };
  const Row rows[] = {{"dodecahedron", 3, "tau^2", 200},
                      {"dodecahedron", 3, "tau^-2", 200},
                      {"dodecahedron", 5, "tau", 120},
                      {"dodecahedron", 5, "1", 80},
                      {"icosahedron", 3, "1", 80}};
  std::vector<std::vector<Vec3E>> dodec3;
  for (const auto& r : rows) {
    const auto cage = depth1_cage(r.start, r.fold, lit(r.length));
    const std::size_t n = cage ? cage->size() : 0;
    c.expect(n == r.want, std::string(r.start) + " fold " + std::to_string(r.fold) + " " + r.length);
    c.detail << r.start << "/" << r.fold << "/" << r.length << "->" << n << " ";
    if (r.fold == 3 && std::string(r.start) == "dodecahedron" && cage) dodec3.push_back(cage->points);
  }
  const bool similar = dodec3.size() == 2 && similar_up_to_scale(to_double(dodec3[0]), to_double(dodec3[1]));
  c.expect(similar, "tau^2 and tau^-2 bands similar up to scale");
  c.detail << "similar(tau^2,tau^-2)=" << (similar ? "true" : "false") << " ";
  // reported, not asserted
  const auto extra = depth1_cage("icosahedron", 3, lit("tau-1"));
  c.detail << "[reported] icosahedron/3/tau-1->" << (extra ? extra->size() : 0);
}

inline void c_icosidodecahedron(Check& c, unsigned threads) {
  ClassifyOptions opt;
  opt.threads = threads;
  const auto rows = classify_scan(builtin("icosidodecahedron"), {2, 3, 5}, ScanSpec{}, opt);
  std::size_t nontrivial = 0, cages = 0, bands = 0;
  std::vector<std::string> found;
  for (const auto& r : rows) {
    if (!r.nontrivial()) continue;
    ++nontrivial;
    bool band_hit = false;
    for (const auto& b : r.bands) band_hit = band_hit || b.trivalent;
    bands += band_hit;
    if (r.cage) {
      ++cages;
      found.push_back(std::to_string(r.fold) + ":" + format(r.length) + "->" + std::to_string(r.cage->count));
    }
  }
  c.expect(cages == 0 && bands == 0, "no trivalent shell among nontrivial extensions");
  c.detail << rows.size() << " rows, " << nontrivial << " nontrivial, " << cages << " with trivalent outer cage, "
           << bands << " with a trivalent band";
  if (!found.empty()) c.detail << "; cages " << join(found);
}

inline void c_c60_shells(Check& c) {
  const std::pair<const char*, std::size_t> rows[] = {{"3", 240}, {"2*tau", 240}, {"3*tau", 360}};
  for (auto [len, want] : rows) {
    const auto cage = depth1_cage("c60", 5, lit(len));
    const std::size_t n = cage ? cage->size() : 0;
    c.expect(n == want, std::string("c60 fold 5 ") + len);
    c.detail << "c60/5/" << len << "->" << n << " ";
  }
}

inline void check_onion(Check& c, const OnionReport& rep, const std::vector<std::size_t>& counts,
                        const std::vector<std::size_t>& hexagons, std::size_t first_layer) {
  std::vector<std::size_t> got, hex, edges;
  for (const auto& l : rep.layers) {
    got.push_back(l.size());
    edges.push_back(l.graph.edges.size());
    hex.push_back(l.faces && l.faces->pentagons() == 12 && l.faces->other() == 0 ? l.faces->hexagons() : 0);
  }
  c.expect(rep.complete, "onion complete");
  c.expect(got == counts, "cage sizes " + join(counts));
  std::vector<std::size_t> want_edges;
  for (auto n : counts) want_edges.push_back(3 * n / 2);
  c.expect(edges == want_edges, "edge counts 3n/2");
  std::vector<std::size_t> hex_tail(hex.begin() + static_cast<std::ptrdiff_t>(std::min(first_layer, hex.size())),
                                    hex.end());
  c.expect(hex_tail == hexagons, "face censuses 12/" + join(hexagons));
  c.detail << "sizes " << join(got) << " edges " << join(edges) << " hexagons(12 pentagons) " << join(hex);
}

struct OnionCache {
  std::optional<OnionReport> c60, c80;
  const OnionReport& get_c60() {
    if (!c60) c60 = build_onion(builtin("c60"), make_translation(icosahedral_full(), 5, GoldenNumber(3)), 2);
    return *c60;
  }
  const OnionReport& get_c80() {
    if (!c80) c80 = build_onion(builtin("c80"), make_translation(icosahedral_full(), 5, lit("(7+tau)/5")), 2);
    return *c80;
  }
};

inline void c_c60_onion(Check& c, OnionCache& cache) {
  check_onion(c, cache.get_c60(), {60, 240, 540}, {20, 110, 260}, 0);
}

inline void c_c80_onion(Check& c, OnionCache& cache) {
  // the start cage itself: two orbits, trivalent, near-uniform edges
  const auto start = builtin("c80");
  const auto base = threshold_search(to_double(start.vertices));
  c.expect(start.vertices.size() == 80, "c80 has 80 vertices");
  c.expect(base && base->edge_ratio() < 1.25, "c80 start is a trivalent cage with edge ratio < 1.25");
  c.detail << "start cage edge ratio " << (base ? base->edge_ratio() : 0.0) << "; ";
  check_onion(c, cache.get_c80(), {80, 180, 320}, {80, 150}, 1);
}

inline void c_families(Check& c, OnionCache& cache) {
  std::ostringstream d;
  for (const auto* rep : {&cache.get_c60(), &cache.get_c80()}) {
    c.expect(rep->family.has_value(), "family recognised");
    if (!rep->family) continue;
    for (const auto& l : rep->layers) {
      const long z = l.depth + 1;
      const long want = family_formula(*rep->family, z);
      c.expect(static_cast<long>(l.size()) == want,
               std::string(to_string(*rep->family)) + " at z=" + std::to_string(z));
      d << to_string(*rep->family) << "(z=" << z << ")=" << want << " measured " << l.size() << "; ";
    }
  }
  c.detail << d.str();
}

inline void c_kustov(Check& c) {
  std::set<long> expected;
  for (long z = 0; 60 * z <= 600; ++z) {
    if (z > 0) expected.insert(60 * z);
    if (60 * z + 20 <= 600) expected.insert(60 * z + 20);
  }
  std::size_t mismatches = 0;
  for (long n = 20; n <= 600; ++n)
    if (kustov_allowable(n) != expected.contains(n)) ++mismatches;
  bool throws = false;
  try {
    kustov_allowable(19);
  } catch (const std::invalid_argument&) {
    throws = true;
  }
  c.expect(mismatches == 0, "allowable set within n <= 600");
  c.expect(throws, "n < 20 rejected");
  c.detail << expected.size() << " allowable sizes up to 600, " << mismatches << " mismatches";
}

// ---- randomized property checks ----------------------------------------

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long range = 30, long den = 12) { return make_rational(integer(-range, range), integer(1, den)); }
  GoldenNumber golden(long range = 30) { return {rational(range), rational(range)}; }
  GoldenNumber positive_golden() {
    for (;;) {
      GoldenNumber g = golden(9);
      if (g.sign() == Sign::positive) return g;
    }
  }
  ExtNumber ext(const Radicand& k) { return {golden(), golden(), k}; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline PropertyResult prop_field_axioms(Sampler& s, std::size_t n) {
  PropertyResult r{"field axioms (Q(tau) and Q(tau)(sqrt(2+tau)))"};
  const Radicand k = Radicand::two_plus_tau();
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const GoldenNumber x = s.golden(), y = s.golden(), z = s.golden();
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z;
    if (!x.is_zero()) ok = ok && x * x.inverse() == GoldenNumber(1);
    const ExtNumber u = s.ext(k), v = s.ext(k), w = s.ext(k);
    ok = ok && (u + v) + w == u + (v + w) && (u * v) * w == u * (v * w) && u * (v + w) == u * v + u * w;
    if (!u.is_zero()) ok = ok && u * u.inverse() == ExtNumber(GoldenNumber(1), k);
    r.failures += !ok;
  }
  return r;
}

inline PropertyResult prop_sign(Sampler& s, std::size_t n) {
  PropertyResult r{"exact sign agrees with float sign"};
  const Radicand k = Radicand::three();
  auto agree = [](Sign sg, double f) {
    if (std::abs(f) <= 1e-6) return true;
    return (f > 0) == (sg == Sign::positive) && sg != Sign::zero;
  };
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const GoldenNumber g = s.golden(1000);
    const ExtNumber e = s.ext(k);
    r.failures += !(agree(g.sign(), g.to_double()) && agree(e.sign(), e.to_double()));
  }
  return r;
}

inline PropertyResult prop_conj_and_roundtrip(Sampler& s, std::size_t n) {
  PropertyResult r{"conjugation is multiplicative; parse(format(x)) = x"};
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const GoldenNumber x = s.golden(), y = s.golden();
    const bool ok = (x * y).conj() == x.conj() * y.conj() && parse_field_expr(format(x)) == x;
    r.failures += !ok;
  }
  return r;
}

inline Vec3E random_vector(Sampler& s) {
  // mix generic points with points on mirror planes and axes
  const GoldenNumber t = GoldenNumber::tau();
  switch (s.integer(0, 3)) {
    case 0: return {s.golden(5), s.golden(5), s.golden(5), Radicand::unit()};
    case 1: return s.positive_golden() * canonical_axis_vector(static_cast<int>(std::array{2, 3, 5}[s.integer(0, 2)]));
    case 2: return {GoldenNumber(0), s.golden(5), s.golden(5), Radicand::unit()};
    default: {
      const GoldenNumber a = s.golden(5), b = s.golden(5);
      return {a, b, a * t, Radicand::unit()};
    }
  }
}

inline PropertyResult prop_orbit_stabilizer(Sampler& s, std::size_t n) {
  PropertyResult r{"orbit-stabilizer |orbit| * |stab| = 120"};
  const auto& g = icosahedral_full();
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const Vec3E v = random_vector(s);
    r.failures += orbit(g, v).size() * stabilizer_order(g, v) != g.order();
  }
  return r;
}

inline AffineTranslation random_translation(Sampler& s, const GoldenNumber& scale = GoldenNumber(1)) {
  const int fold = std::array{2, 3, 5}[s.integer(0, 2)];
  return make_translation(icosahedral_full(), fold, scale * s.positive_golden());
}

inline PropertyResult prop_invariance(Sampler& s, std::size_t n) {
  PropertyResult r{"generated arrays are I_h-invariant"};
  const auto& g = icosahedral_full();
  const std::vector<std::string> starts{"icosahedron", "dodecahedron", "icosidodecahedron"};
  while (r.cases < n) {
    const auto start = builtin(starts[s.integer(0, 2)]);
    const PointArray a = generate_array(start, random_translation(s), static_cast<int>(s.integer(1, 2)));
    std::unordered_set<Vec3E, Vec3Hash> set(a.points.begin(), a.points.end());
    for (int k = 0; k < 100 && r.cases < n; ++k, ++r.cases) {
      const Mat3G& m = g.elements()[static_cast<std::size_t>(s.integer(0, 119))];
      const Vec3E& p = a.points[static_cast<std::size_t>(s.integer(0, static_cast<long>(a.size()) - 1))];
      r.failures += !set.contains(m * p);
    }
  }
  return r;
}

inline PropertyResult prop_scale_and_dedup(Sampler& s, std::size_t n, PropertyResult& dedup) {
  PropertyResult r{"scale equivariance A(sX, s lambda) = s A(X, lambda)"};
  dedup = {"dedup idempotence and cardinality bound"};
  const auto ico = builtin("icosahedron");
  for (std::size_t i = 0; i < n; ++i, ++r.cases, ++dedup.cases) {
    const GoldenNumber sc = s.positive_golden();
    const int fold = std::array{3, 5}[s.integer(0, 1)];
    const GoldenNumber lam = s.positive_golden();
    const auto t1 = make_translation(icosahedral_full(), fold, lam);
    const auto t2 = make_translation(icosahedral_full(), fold, sc * lam);
    std::vector<Vec3E> scaled;
    for (const auto& v : ico.vertices) scaled.push_back(sc * v);
    const PointArray a = generate_array(ico.vertices, t1, 1);
    const PointArray b = generate_array(scaled, t2, 1);
    std::unordered_set<Vec3E, Vec3Hash> bs(b.points.begin(), b.points.end());
    bool ok = a.size() == b.size();
    for (const auto& p : a.points) ok = ok && bs.contains(sc * p);
    r.failures += !ok;
    const PointArray again = make_point_array(a.points);
    dedup.failures += !(again.points == a.points && a.size() <= generic_cardinality(ico.vertices.size(), t1));
  }
  return r;
}

inline Vec3d random_rotate(const Vec3d& v, const std::array<double, 4>& q) {
  const auto [w, x, y, z] = q;
  const Vec3d u{x, y, z};
  const Vec3d t = 2.0 * cross(u, v);
  return v + w * t + cross(u, t);
}

inline PropertyResult prop_euler(Sampler& s, std::size_t n, OnionCache& cache) {
  PropertyResult r{"Euler V - E + F = 2 on rotated and scaled cages"};
  std::vector<std::vector<Vec3d>> cages;
  for (const auto* rep : {&cache.get_c60(), &cache.get_c80()})
    for (const auto& l : rep->layers) cages.push_back(l.graph.vertices);
  if (auto d = depth1_cage("dodecahedron", 5, GoldenNumber(1))) cages.push_back(to_double(d->points));
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.1, 10.0);
  for (std::size_t i = 0; i < n; ++i, ++r.cases) {
    const auto& base = cages[i % cages.size()];
    std::array<double, 4> q{nd(s.engine()), nd(s.engine()), nd(s.engine()), nd(s.engine())};
    const double qn = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
    for (auto& x : q) x /= qn;
    const double sc = ud(s.engine());
    std::vector<Vec3d> pts;
    for (const auto& p : base) pts.push_back(sc * random_rotate(p, q));
    bool ok = false;
    if (auto g = threshold_search(pts)) {
      try {
        const FaceCensus fc = face_census(*g);
        ok = g->size() - g->edges.size() + fc.faces.size() == 2 && 2 * g->edges.size() == 3 * g->size();
      } catch (const EulerError&) {
      }
    }
    r.failures += !ok;
  }
  return r;
}

}  // namespace verify_detail

/// Randomized property suites; `n` cases each (sign checks use 10n).
inline std::vector<verify_detail::PropertyResult> property_suites(std::size_t n, std::uint64_t seed = 20140601) {
  using namespace verify_detail;
  Sampler s(seed);
  OnionCache cache;
  std::vector<PropertyResult> out;
  out.push_back(prop_field_axioms(s, n));
  out.push_back(prop_sign(s, 10 * n));
  out.push_back(prop_conj_and_roundtrip(s, n));
  out.push_back(prop_orbit_stabilizer(s, n));
  out.push_back(prop_invariance(s, n));
  PropertyResult dedup;
  out.push_back(prop_scale_and_dedup(s, n, dedup));
  out.push_back(dedup);
  out.push_back(prop_euler(s, n, cache));
  return out;
}

struct VerifyOptions {
  std::vector<std::string> only;  // criterion keys or numbers; empty = all
  unsigned threads = 1;
  std::size_t property_cases = 1000;
};

struct CriterionSpec {
  int id;
  const char* key;
  const char* title;
};

inline const std::vector<CriterionSpec>& criteria() {
  static const std::vector<CriterionSpec> c{
      {1, "group", "group orders and axis counts"},
      {2, "pentagon", "pentagon demo 25 of 30"},
      {3, "platonic", "dodecahedron and icosahedron trivalent shells"},
      {4, "icosidodecahedron", "icosidodecahedron yields no trivalent shell"},
      {5, "c60-shells", "trivalent shells around C60"},
      {6, "c60-onion", "C60-C240-C540 onion"},
      {7, "c80-onion", "C80-C180-C320 onion"},
      {8, "families", "family formulas 60z^2 and 20(z+1)^2"},
      {9, "kustov", "Kustov allowability"},
      {10, "properties", "randomized property suites"},
  };
  return c;
}

/// Criteria that are expected to fail; see the README for the analysis.
inline bool is_known_discrepancy(int id) { return id == 4; }

inline bool selected(const VerifyOptions& opt, const CriterionSpec& c) {
  if (opt.only.empty()) return true;
  for (const auto& s : opt.only)
    if (s == c.key || s == std::to_string(c.id)) return true;
  return false;
}

inline void validate_only(const std::vector<std::string>& only) {
  for (const auto& s : only) {
    bool ok = false;
    for (const auto& c : criteria()) ok = ok || s == c.key || s == std::to_string(c.id);
    if (!ok) throw std::invalid_argument("unknown verify suite '" + s + "'");
  }
}

inline std::vector<CriterionResult> run_verify(const VerifyOptions& opt = {}) {
  using namespace verify_detail;
  validate_only(opt.only);
  OnionCache cache;
  std::vector<CriterionResult> out;
  for (const auto& spec : criteria()) {
    if (!selected(opt, spec)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      switch (spec.id) {
        case 1: c_group(c); break;
        case 2: c_pentagon(c); break;
        case 3: c_platonic(c); break;
        case 4: c_icosidodecahedron(c, opt.threads); break;
        case 5: c_c60_shells(c); break;
        case 6: c_c60_onion(c, cache); break;
        case 7: c_c80_onion(c, cache); break;
        case 8: c_families(c, cache); break;
        case 9: c_kustov(c); break;
        case 10: {
          for (const auto& p : property_suites(opt.property_cases)) {
            c.expect(p.failures == 0 && p.cases >= opt.property_cases, p.name);
            c.detail << p.name << ": " << p.cases << " cases, " << p.failures << " failures; ";
          }
          break;
        }
      }
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "[exception: " << e.what() << "]";
    }
    CriterionResult r{spec.id, spec.key, spec.title, c.ok, is_known_discrepancy(spec.id), c.detail.str(), 0};
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

/// "PASS 3 platonic - ... (0.41 s): ..." lines.
inline std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.key << " - " << r.title;
  s << " (" << std::fixed;
  s.precision(2);
  s << r.seconds << " s)";
  if (!r.passed && r.known_discrepancy) s << " [known discrepancy]";
  s << ": " << r.detail;
  return s.str();
}

}  // namespace affico
