#pragma once

// Trivalent cage detection by distance-threshold search, face census via a
// rotation system, and the fullerene-level predicates built on top of it.

#include <affico/geometry.hpp>
#include <affico/group.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affico {

using Edge = std::pair<std::size_t, std::size_t>;

struct CageGraph {
  std::vector<Vec3d> vertices;
  std::vector<Edge> edges;  // i < j, in ascending length order
  double cutoff = 0;        // longest accepted distance
  double edge_min = 0;
  double edge_max = 0;

  std::size_t size() const { return vertices.size(); }
  double edge_ratio() const { return edge_min > 0 ? edge_max / edge_min : 0; }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (auto [i, j] : edges) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
    return adj;
  }
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(vertices.size(), 0);
    for (auto [i, j] : edges) ++d[i], ++d[j];
    return d;
  }
  bool trivalent() const {
    auto d = degrees();
    return !d.empty() && std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 3; });
  }
};

inline std::vector<Vec3d> to_double(const std::vector<Vec3E>& pts) {
  std::vector<Vec3d> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(p.to_double());
  return out;
}

namespace detail {

/// Relative tolerance for grouping equal distances in the sweep.
inline constexpr double kTieTol = 1e-9;

inline double dist(const Vec3d& a, const Vec3d& b) { return (a - b).norm(); }

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
  if (n == 0) return false;
  DisjointSets ds(n);
  std::size_t comps = n;
  for (auto [i, j] : edges)
    if (ds.unite(i, j)) --comps;
  return comps == 1;
}

/// Fourth-smallest entry of a stream, +inf if fewer than four.
struct Smallest4 {
  std::array<double, 4> v{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  void push(double d) {
    if (d >= v[3]) return;
    std::size_t i = 3;
    while (i > 0 && v[i - 1] > d) {
      v[i] = v[i - 1];
      --i;
    }
    v[i] = d;
  }
};

/// Walks candidate pairs in ascending distance, one tie group at a time.
/// `slots(e)` lists the degree counters touched by pair e. Returns the
/// index one past the last accepted pair on success, 0 on failure.
template <typename Pair, typename Slots>
std::size_t sweep(const std::vector<Pair>& pairs, std::vector<std::size_t>& deg, Slots&& slots) {
  auto below3 = static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [](std::size_t x) { return x < 3; }));
  std::size_t i = 0;
  while (i < pairs.size()) {
    const double d0 = pairs[i].d;
    std::size_t j = i;
    while (j < pairs.size() && pairs[j].d - d0 <= kTieTol * d0) {
      for (std::size_t s : slots(pairs[j])) {
        if (s == static_cast<std::size_t>(-1)) continue;
        if (++deg[s] == 3) --below3;
      }
      ++j;
    }
    for (std::size_t k = i; k < j; ++k)
      for (std::size_t s : slots(pairs[k]))
        if (s != static_cast<std::size_t>(-1) && deg[s] > 3) return 0;
    if (below3 == 0) return j;
    i = j;
  }
  return 0;
}

}  // namespace detail

/// Smallest distance cutoff at which every vertex has degree exactly 3,
/// provided no vertex exceeds degree 3 first and the resulting graph is
/// connected. Candidate cutoffs are the distinct pairwise distances.
inline std::optional<CageGraph> threshold_search(const std::vector<Vec3d>& pts) {
  const std::size_t n = pts.size();
  if (n < 4) return std::nullopt;
  // The sweep cannot get past the smallest fourth-neighbour distance, so
  // only pairs up to that bound need sorting.
  double bound = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    detail::Smallest4 s;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) s.push(detail::dist(pts[i], pts[j]));
    bound = std::min(bound, s.v[3]);
  }
  struct Pair {
    double d;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  const double limit = bound * (1 + 1e-6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = detail::dist(pts[i], pts[j]);
      if (d <= limit) pairs.push_back({d, i, j});
    }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  std::vector<std::size_t> deg(n, 0);
  const std::size_t used =
      detail::sweep(pairs, deg, [](const Pair& p) { return std::array<std::size_t, 2>{p.i, p.j}; });
  if (used == 0) return std::nullopt;
  CageGraph g;
  g.vertices = pts;
  g.edges.reserve(used);
  for (std::size_t k = 0; k < used; ++k) g.edges.emplace_back(pairs[k].i, pairs[k].j);
  if (!detail::connected(n, g.edges)) return std::nullopt;
  g.edge_min = pairs.front().d;
  g.edge_max = g.cutoff = pairs[used - 1].d;
  return g;
}

using Mat3d = std::array<double, 9>;

inline const std::vector<Mat3d>& float_group() {
  static const std::vector<Mat3d> mats = [] {
    std::vector<Mat3d> out;
    for (const auto& m : icosahedral_full().elements()) {
      Mat3d f{};
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) f[3 * r + c] = m(r, c).to_double();
      out.push_back(f);
    }
    return out;
  }();
  return mats;
}

inline Vec3d mat_apply(const Mat3d& m, const Vec3d& v) {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

/// Threshold search specialised to I_h-invariant point sets that are unions of
/// labelled shells. All points of one orbit have the same degree at every
/// cutoff, so the sweep only follows one representative per orbit. Queries
/// choose a subset of shells.
class OrbitSearch {
 public:
  OrbitSearch(std::vector<Vec3d> pts, std::vector<std::size_t> shell_of)
      : pts_(std::move(pts)), shell_of_(std::move(shell_of)) {
    if (pts_.size() != shell_of_.size()) throw std::invalid_argument("shell label count mismatch");
    build_orbits();
    build_lists();
  }

  std::size_t orbit_count() const { return reps_.size(); }

  /// Cage on the union of the selected shells, or none.
  std::optional<CageGraph> search(const std::vector<bool>& selected) const {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pts_.size(); ++i)
      if (is_selected(selected, shell_of_[i])) members.push_back(i);
    if (members.size() < 4) return std::nullopt;

    std::vector<std::size_t> active;  // orbit ids inside the subset
    for (std::size_t o = 0; o < reps_.size(); ++o)
      if (is_selected(selected, shell_of_[reps_[o]])) active.push_back(o);

    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t o : active) {
      std::size_t seen = 0;
      for (const auto& e : lists_[o]) {
        if (!is_selected(selected, shell_of_[e.j])) continue;
        if (++seen == 4) {
          bound = std::min(bound, e.d);
          break;
        }
      }
    }
    struct Pair {
      double d;
      std::size_t orbit;
      std::size_t j;
    };
    std::vector<Pair> pairs;
    const double limit = bound * (1 + 1e-6);
    for (std::size_t o : active)
      for (const auto& e : lists_[o]) {
        if (e.d > limit) break;
        if (is_selected(selected, shell_of_[e.j])) pairs.push_back({e.d, o, e.j});
      }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      if (a.d != b.d) return a.d < b.d;
      return a.orbit != b.orbit ? a.orbit < b.orbit : a.j < b.j;
    });
    std::vector<std::size_t> deg(reps_.size(), 0);
    // orbits outside the subset never block success
    for (std::size_t o = 0; o < reps_.size(); ++o)
      if (!is_selected(selected, shell_of_[reps_[o]])) deg[o] = 3;
    const std::size_t used = detail::sweep(
        pairs, deg, [](const Pair& p) { return std::array<std::size_t, 1>{p.orbit}; });
    if (used == 0) return std::nullopt;

    std::vector<Vec3d> sub;
    sub.reserve(members.size());
    for (std::size_t i : members) sub.push_back(pts_[i]);
    return threshold_search(sub);
  }

  const std::vector<Vec3d>& points() const { return pts_; }
  const std::vector<std::size_t>& shell_of() const { return shell_of_; }

 private:
  struct Entry {
    double d;
    std::size_t j;
  };

  static bool is_selected(const std::vector<bool>& sel, std::size_t shell) {
    return shell < sel.size() && sel[shell];
  }

  void build_orbits() {
    std::map<std::size_t, std::vector<std::size_t>> by_shell;
    for (std::size_t i = 0; i < pts_.size(); ++i) by_shell[shell_of_[i]].push_back(i);
    orbit_of_.assign(pts_.size(), static_cast<std::size_t>(-1));
    const auto& group = float_group();
    for (const auto& [shell, ids] : by_shell) {
      for (std::size_t i : ids) {
        if (orbit_of_[i] != static_cast<std::size_t>(-1)) continue;
        const std::size_t o = reps_.size();
        reps_.push_back(i);
        const double scale = std::max(1.0, pts_[i].norm());
        for (const auto& g : group) {
          const Vec3d img = mat_apply(g, pts_[i]);
          std::size_t best = ids.front();
          double bd = std::numeric_limits<double>::infinity();
          for (std::size_t j : ids) {
            const double d = detail::dist(img, pts_[j]);
            if (d < bd) bd = d, best = j;
          }
          if (bd > 1e-7 * scale) throw std::logic_error("point set is not I_h-invariant");
          if (orbit_of_[best] == static_cast<std::size_t>(-1)) orbit_of_[best] = o;
          else if (orbit_of_[best] != o) throw std::logic_error("inconsistent orbit decomposition");
        }
      }
    }
  }

  void build_lists() {
    lists_.resize(reps_.size());
    for (std::size_t o = 0; o < reps_.size(); ++o) {
      const Vec3d& p = pts_[reps_[o]];
      auto& l = lists_[o];
      l.reserve(pts_.size() - 1);
      for (std::size_t j = 0; j < pts_.size(); ++j)
        if (j != reps_[o]) l.push_back({detail::dist(p, pts_[j]), j});
      std::sort(l.begin(), l.end(), [](const Entry& a, const Entry& b) { return a.d != b.d ? a.d < b.d : a.j < b.j; });
    }
  }

  std::vector<Vec3d> pts_;
  std::vector<std::size_t> shell_of_;
  std::vector<std::size_t> orbit_of_;
  std::vector<std::size_t> reps_;
  std::vector<std::vector<Entry>> lists_;
};

struct FaceCensus {
  std::vector<std::vector<std::size_t>> faces;  // vertex cycles, outward (counter-clockwise seen from outside)
  std::map<std::size_t, std::size_t> by_size;

  std::size_t count(std::size_t n) const {
    auto it = by_size.find(n);
    return it == by_size.end() ? 0 : it->second;
  }
  std::size_t pentagons() const { return count(5); }
  std::size_t hexagons() const { return count(6); }
  std::size_t other() const { return faces.size() - pentagons() - hexagons(); }
};

class EulerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Traces faces of a cage embedded around the origin. Neighbours of each
/// vertex are ordered by angle in its tangent plane.
inline FaceCensus face_census(const CageGraph& g) {
  const std::size_t n = g.size();
  const auto adj = g.adjacency();
  std::vector<std::vector<std::size_t>> rot(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Vec3d p = g.vertices[v];
    const double r = p.norm();
    if (r == 0) throw EulerError("cage vertex at the origin");
    const Vec3d nrm = (1 / r) * p;
    Vec3d e1 = cross(nrm, std::abs(nrm.x) < 0.9 ? Vec3d{1, 0, 0} : Vec3d{0, 1, 0});
    e1 = (1 / e1.norm()) * e1;
    const Vec3d e2 = cross(nrm, e1);
    std::vector<std::pair<double, std::size_t>> ang;
    for (std::size_t w : adj[v]) {
      const Vec3d d = g.vertices[w] - p;
      ang.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
    }
    std::sort(ang.begin(), ang.end());
    for (auto& [a, w] : ang) rot[v].push_back(w);
  }
  auto pos = [&](std::size_t v, std::size_t w) {
    return static_cast<std::size_t>(std::find(rot[v].begin(), rot[v].end(), w) - rot[v].begin());
  };
  std::map<Edge, bool> used;
  FaceCensus fc;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : rot[u]) {
      if (used[{u, v}]) continue;
      std::vector<std::size_t> face;
      std::size_t a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        // turn: the neighbour of b just clockwise of a
        const auto& rb = rot[b];
        const std::size_t k = pos(b, a);
        const std::size_t c = rb[(k + rb.size() - 1) % rb.size()];
        a = b;
        b = c;
        if (face.size() > n) throw EulerError("face tracing did not close");
      }
      if (a != u || b != v) throw EulerError("face tracing did not close");
      // orient counter-clockwise seen from outside
      Vec3d c{}, nrm{};
      for (std::size_t i = 0; i < face.size(); ++i) {
        const Vec3d& p = g.vertices[face[i]];
        const Vec3d& q = g.vertices[face[(i + 1) % face.size()]];
        c = c + p;
        nrm = nrm + cross(p, q);
      }
      if (dot(nrm, c) < 0) std::reverse(face.begin(), face.end());
      ++fc.by_size[face.size()];
      fc.faces.push_back(std::move(face));
    }
  }
  const long chi = static_cast<long>(n) - static_cast<long>(g.edges.size()) + static_cast<long>(fc.faces.size());
  if (chi != 2)
    throw EulerError("Euler check failed: V - E + F = " + std::to_string(chi) + " (V=" + std::to_string(n) +
                     ", E=" + std::to_string(g.edges.size()) + ", F=" + std::to_string(fc.faces.size()) + ")");
  return fc;
}

/// Icosahedral fullerenes have n = 60z or 60z + 20 atoms.
inline bool kustov_allowable(long n) {
  if (n < 20) throw std::invalid_argument("kustov_allowable needs n >= 20");
  return n % 60 == 0 || n % 60 == 20;
}

enum class PentagonOrientation { none, vertex_to_vertex, edge_to_edge, mixed };

inline const char* to_string(PentagonOrientation o) {
  switch (o) {
    case PentagonOrientation::vertex_to_vertex: return "vertex-to-vertex";
    case PentagonOrientation::edge_to_edge: return "edge-to-edge";
    case PentagonOrientation::mixed: return "mixed";
    default: return "none";
  }
}

/// How each pentagon faces its nearest pentagons: the number of closest
/// vertex pairs between them is 1 (a vertex points at the other pentagon)
/// or 2 (an edge faces an edge).
inline PentagonOrientation pentagon_orientation(const CageGraph& g, const FaceCensus& fc) {
  std::vector<std::size_t> pent_of(g.size(), static_cast<std::size_t>(-1));
  std::vector<const std::vector<std::size_t>*> pents;
  for (const auto& f : fc.faces)
    if (f.size() == 5) {
      for (std::size_t v : f) pent_of[v] = pents.size();
      pents.push_back(&f);
    }
  if (pents.size() < 2) return PentagonOrientation::none;
  const auto adj = g.adjacency();
  auto bfs = [&](std::size_t s) {
    std::vector<std::size_t> d(g.size(), static_cast<std::size_t>(-1));
    std::queue<std::size_t> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (std::size_t w : adj[v])
        if (d[w] == static_cast<std::size_t>(-1)) d[w] = d[v] + 1, q.push(w);
    }
    return d;
  };
  std::set<std::size_t> signatures;
  for (std::size_t p = 0; p < pents.size(); ++p) {
    std::vector<std::vector<std::size_t>> dist;
    for (std::size_t u : *pents[p]) dist.push_back(bfs(u));
    std::size_t dmin = static_cast<std::size_t>(-1);
    for (const auto& d : dist)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (pent_of[v] != static_cast<std::size_t>(-1) && pent_of[v] != p) dmin = std::min(dmin, d[v]);
    std::map<std::size_t, std::size_t> pairs;  // neighbouring pentagon -> closest pair count
    for (const auto& d : dist)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (pent_of[v] != static_cast<std::size_t>(-1) && pent_of[v] != p && d[v] == dmin) ++pairs[pent_of[v]];
    for (auto [q, c] : pairs) signatures.insert(c);
  }
  if (signatures.size() != 1) return PentagonOrientation::mixed;
  switch (*signatures.begin()) {
    case 1: return PentagonOrientation::vertex_to_vertex;
    case 2: return PentagonOrientation::edge_to_edge;
    default: return PentagonOrientation::mixed;
  }
}

/// Radii sorted ascending and divided by the largest.
inline std::vector<double> normalized_radius_spectrum(const std::vector<Vec3d>& pts) {
  std::vector<double> r;
  r.reserve(pts.size());
  for (const auto& p : pts) r.push_back(p.norm());
  std::sort(r.begin(), r.end());
  if (!r.empty() && r.back() > 0)
    for (auto& x : r) x /= r.back();
  return r;
}

/// Heuristic similarity: same normalized radius spectrum, same trivalence
/// outcome and same face census. Not a graph-isomorphism certificate.
inline bool similar_up_to_scale(const std::vector<Vec3d>& a, const std::vector<Vec3d>& b) {
  if (a.size() != b.size()) return false;
  const auto ra = normalized_radius_spectrum(a), rb = normalized_radius_spectrum(b);
  for (std::size_t i = 0; i < ra.size(); ++i)
    if (std::abs(ra[i] - rb[i]) > 1e-9) return false;
  const auto ca = threshold_search(a), cb = threshold_search(b);
  if (ca.has_value() != cb.has_value()) return false;
  if (!ca) return true;
  if (ca->edges.size() != cb->edges.size()) return false;
  try {
    return face_census(*ca).by_size == face_census(*cb).by_size;
  } catch (const EulerError&) {
    return false;
  }
}

}  // namespace affico
