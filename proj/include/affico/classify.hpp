#pragma once

// Outer-cage extraction from a point array and scans over translation
// lengths (a + b tau) / c.

#include <affico/affine.hpp>
#include <affico/cage.hpp>
#include <affico/parallel.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>
#include <vector>

namespace affico {

/// Shell-labelled search structure over the shells from `first_shell` up.
/// Shell labels are the array's shell indices (0 = innermost).
inline OrbitSearch make_orbit_search(const PointArray& a, std::size_t first_shell = 0) {
  std::vector<Vec3d> pts;
  std::vector<std::size_t> shell_of;
  for (std::size_t s = first_shell; s < a.shells.size(); ++s)
    for (std::size_t i = a.shells[s].begin; i < a.shells[s].end; ++i) {
      pts.push_back(a.points[i].to_double());
      shell_of.push_back(s);
    }
  return {std::move(pts), std::move(shell_of)};
}

struct OuterCage {
  std::vector<std::size_t> shells;  // array shell indices, ascending
  std::vector<Vec3E> points;
  CageGraph graph;

  std::size_t size() const { return points.size(); }
};

struct CageSearchOptions {
  std::size_t window = 8;  // number of outermost shells considered
};

/// The generated cages are not equiradial: the outer surface spans several
/// exact radii, and some radii just below it belong to the interior. Every
/// subset of the `window` outermost shells that contains the outermost one is
/// tried; among those forming a connected trivalent cage, the one with the
/// most uniform edges wins, larger cages breaking ties.
inline std::optional<OuterCage> find_outer_cage(const PointArray& a, const OrbitSearch& search,
                                                const CageSearchOptions& opt = {}) {
  const std::size_t ns = a.shells.size();
  if (ns == 0) return std::nullopt;
  const std::size_t w = std::min(opt.window, ns);
  if (w > 20) throw std::invalid_argument("cage search window too large");
  struct Best {
    long long ratio_key;
    std::size_t count;
    std::vector<std::size_t> shells;
    CageGraph graph;
  };
  std::optional<Best> best;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (w - 1)); ++mask) {
    std::vector<bool> sel(ns, false);
    std::vector<std::size_t> ids{ns - 1};
    sel[ns - 1] = true;
    std::size_t count = a.shells[ns - 1].size();
    for (std::size_t i = 0; i + 1 < w; ++i)
      if (mask >> i & 1) {
        const std::size_t s = ns - 2 - i;
        sel[s] = true;
        ids.push_back(s);
        count += a.shells[s].size();
      }
    if (count < 4) continue;
    auto g = search.search(sel);
    if (!g) continue;
    const long long key = std::llround(g->edge_ratio() * 1e6);
    if (!best || key < best->ratio_key || (key == best->ratio_key && count > best->count)) {
      std::sort(ids.begin(), ids.end());
      best = Best{key, count, std::move(ids), std::move(*g)};
    }
  }
  if (!best) return std::nullopt;
  OuterCage out{best->shells, shell_points(a, best->shells), std::move(best->graph)};
  return out;
}

/// Builds the search structure over the window shells only.
inline std::optional<OuterCage> find_outer_cage(const PointArray& a, const CageSearchOptions& opt = {}) {
  if (a.size() < 4) return std::nullopt;
  const std::size_t ns = a.shells.size();
  return find_outer_cage(a, make_orbit_search(a, ns - std::min(opt.window, ns)), opt);
}

/// Lengths (a + b tau) / c over integer ranges and a denominator set.
struct ScanSpec {
  long a_lo = -6, a_hi = 6;
  long b_lo = -6, b_hi = 6;
  std::vector<long> c{1, 2, 3, 4, 5};
  std::optional<double> max;  // default: twice the start's outer radius
};

namespace detail {

inline long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("bad integer '" + s + "' in " + what, 0);
  return v;
}

inline std::pair<long, long> parse_range(const std::string& s, const std::string& what) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const long v = parse_long(s, what);
    return {v, v};
  }
  const long lo = parse_long(s.substr(0, dots), what), hi = parse_long(s.substr(dots + 2), what);
  if (lo > hi) throw ParseError("empty range '" + s + "' in " + what, 0);
  return {lo, hi};
}

}  // namespace detail

/// Parses "a=lo..hi,b=lo..hi,c=set,max=real". The denominator set is a range
/// or a '|'-separated list ("c=1..5", "c=1|2|5"). Omitted keys keep defaults;
/// "max=auto" keeps the radius-based cutoff.
inline ScanSpec parse_scan(const std::string& text) {
  ScanSpec spec;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("scan item '" + item + "' lacks '='", 0);
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "a") {
      std::tie(spec.a_lo, spec.a_hi) = detail::parse_range(val, "scan key a");
    } else if (key == "b") {
      std::tie(spec.b_lo, spec.b_hi) = detail::parse_range(val, "scan key b");
    } else if (key == "c") {
      spec.c.clear();
      std::stringstream cs(val);
      std::string part;
      while (std::getline(cs, part, '|')) {
        auto [lo, hi] = detail::parse_range(part, "scan key c");
        for (long x = lo; x <= hi; ++x) spec.c.push_back(x);
      }
      if (spec.c.empty()) throw ParseError("empty denominator set", 0);
      for (long x : spec.c)
        if (x <= 0) throw ParseError("denominators must be positive", 0);
    } else if (key == "max") {
      if (val == "auto") {
        spec.max.reset();
      } else {
        std::size_t used = 0;
        double m = 0;
        try {
          m = std::stod(val, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != val.size() || !(m > 0)) throw ParseError("bad scan cutoff '" + val + "'", 0);
        spec.max = m;
      }
    } else {
      throw ParseError("unknown scan key '" + key + "'", 0);
    }
  }
  return spec;
}

/// Distinct positive lengths of the scan not exceeding `cutoff`, ascending.
inline std::vector<GoldenNumber> scan_lengths(const ScanSpec& spec, double cutoff) {
  std::vector<GoldenNumber> out;
  std::unordered_set<GoldenNumber> seen;
  for (long c : spec.c)
    for (long a = spec.a_lo; a <= spec.a_hi; ++a)
      for (long b = spec.b_lo; b <= spec.b_hi; ++b) {
        GoldenNumber l(make_rational(a, c), make_rational(b, c));
        if (l.sign() != Sign::positive || l.to_double() > cutoff * (1 + 1e-12)) continue;
        if (seen.insert(l).second) out.push_back(std::move(l));
      }
  std::sort(out.begin(), out.end(), [](const GoldenNumber& x, const GoldenNumber& y) { return x < y; });
  return out;
}

inline double outer_radius(const StartConfig& s) {
  double r = 0;
  for (const auto& v : s.vertices) r = std::max(r, v.to_double().norm());
  return r;
}

struct BandReport {
  Band band;
  bool trivalent = false;
};

struct CageSummary {
  std::vector<std::size_t> shells;
  std::size_t count = 0;
  std::size_t edges = 0;
  double edge_min = 0, edge_max = 0;
  std::optional<FaceCensus> faces;  // none when the Euler check fails
};

struct ClassifyRow {
  int fold = 0;
  GoldenNumber length;
  std::size_t generic = 0;
  std::size_t actual = 0;
  std::vector<BandReport> bands;
  std::optional<CageSummary> cage;

  bool nontrivial() const { return actual < generic; }
};

inline CageSummary summarize_cage(const OuterCage& c) {
  CageSummary s{c.shells, c.size(), c.graph.edges.size(), c.graph.edge_min, c.graph.edge_max, std::nullopt};
  try {
    s.faces = face_census(c.graph);
  } catch (const EulerError&) {
  }
  return s;
}

/// Band-wise trivalence on top of the shell-labelled search structure.
inline std::vector<BandReport> band_reports(const PointArray& a, const OrbitSearch& search, double gap) {
  std::vector<BandReport> out;
  for (const Band& b : bands(a, gap)) {
    std::vector<bool> sel(a.shells.size(), false);
    for (std::size_t s = b.first_shell; s <= b.last_shell; ++s) sel[s] = true;
    out.push_back({b, search.search(sel).has_value()});
  }
  return out;
}

struct ClassifyOptions {
  double band_gap = 0.05;
  unsigned threads = 1;
  LengthUnit unit = LengthUnit::axis;
  CageSearchOptions cage;
  std::size_t cap = 1'000'000;
};

/// Depth-1 analysis of one translation: cardinalities, bands and outer cage.
inline ClassifyRow classify_one(const StartConfig& start, int fold, const GoldenNumber& length,
                                const ClassifyOptions& opt = {}) {
  const AffineTranslation t = make_translation(icosahedral_full(), fold, length, opt.unit);
  const PointArray a = generate_array(start, t, 1, {opt.cap, 1});
  ClassifyRow row;
  row.fold = fold;
  row.length = length;
  row.generic = generic_cardinality(start.vertices.size(), t);
  row.actual = a.size();
  if (a.size() >= 4) {
    const OrbitSearch search = make_orbit_search(a);
    row.bands = band_reports(a, search, opt.band_gap);
    if (auto c = find_outer_cage(a, search, opt.cage)) row.cage = summarize_cage(*c);
  }
  return row;
}

/// Rows ordered by the given folds, then by ascending length. Output does
/// not depend on the thread count.
inline std::vector<ClassifyRow> classify_scan(const StartConfig& start, const std::vector<int>& folds,
                                              const ScanSpec& spec, const ClassifyOptions& opt = {}) {
  const double cutoff = spec.max.value_or(2 * outer_radius(start));
  const auto lengths = scan_lengths(spec, cutoff);
  if (lengths.empty() || folds.empty()) throw std::invalid_argument("empty scan");
  std::vector<std::pair<int, const GoldenNumber*>> jobs;
  for (int f : folds)
    for (const auto& l : lengths) jobs.emplace_back(f, &l);
  std::vector<ClassifyRow> rows(jobs.size());
  parallel_for(jobs.size(), opt.threads,
               [&](std::size_t i) { rows[i] = classify_one(start, jobs[i].first, *jobs[i].second, opt); });
  return rows;
}

}  // namespace affico
