#pragma once

// Nested cages from repeated application of one translation.

#include <affico/classify.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace affico {

enum class FamilyTag { sixty_z2, twenty_z1_2 };

inline const char* to_string(FamilyTag f) { return f == FamilyTag::sixty_z2 ? "60z^2" : "20(z+1)^2"; }

inline FamilyTag parse_family_tag(const std::string& s) {
  if (s == "60z^2" || s == "60z2") return FamilyTag::sixty_z2;
  if (s == "20(z+1)^2" || s == "20(z+1)2") return FamilyTag::twenty_z1_2;
  throw std::invalid_argument("unknown family '" + s + "'");
}

/// n = 60 z^2 or n = 20 (z + 1)^2.
inline long family_formula(FamilyTag f, long z) {
  if (z < 1) throw std::invalid_argument("family index z must be >= 1");
  return f == FamilyTag::sixty_z2 ? 60 * z * z : 20 * (z + 1) * (z + 1);
}

/// The family whose first member (z = 1) has `n` vertices.
inline std::optional<FamilyTag> family_of(std::size_t n) {
  if (n == 60) return FamilyTag::sixty_z2;
  if (n == 80) return FamilyTag::twenty_z1_2;
  return std::nullopt;
}

enum class OnionMode { pruned, full };

inline OnionMode parse_onion_mode(const std::string& s) {
  if (s == "pruned") return OnionMode::pruned;
  if (s == "full") return OnionMode::full;
  throw std::invalid_argument("unknown onion mode '" + s + "'");
}

struct OnionLayer {
  int depth = 0;
  std::vector<std::size_t> shells;  // array shells forming the cage (empty at depth 0)
  std::vector<Vec3E> points;
  CageGraph graph;
  std::optional<FaceCensus> faces;
  PentagonOrientation orientation = PentagonOrientation::none;
  double outer_radius = 0;
  double axial_height = 0;  // largest projection on the translation axis

  std::size_t size() const { return points.size(); }
};

struct OnionReport {
  std::vector<OnionLayer> layers;
  bool complete = true;  // false when some depth produced no cage
  int failed_depth = -1;
  std::optional<FamilyTag> family;
};

namespace detail {

inline OnionLayer make_layer(int depth, std::vector<std::size_t> shells, std::vector<Vec3E> pts, CageGraph g,
                             int fold) {
  OnionLayer l;
  l.depth = depth;
  l.shells = std::move(shells);
  l.points = std::move(pts);
  l.graph = std::move(g);
  try {
    l.faces = face_census(l.graph);
    l.orientation = pentagon_orientation(l.graph, *l.faces);
  } catch (const EulerError&) {
  }
  Vec3d axis = canonical_axis_vector(fold).to_double();
  axis = (1 / axis.norm()) * axis;
  for (const auto& p : l.graph.vertices) {
    l.outer_radius = std::max(l.outer_radius, p.norm());
    l.axial_height = std::max(l.axial_height, dot(p, axis));
  }
  return l;
}

}  // namespace detail

/// Depth 0 is the start cage itself. In pruned mode depth j translates the
/// depth j-1 cage once; in full mode it takes the outer cage of the complete
/// depth-j array.
inline OnionReport build_onion(const StartConfig& start, const AffineTranslation& t, int depth,
                               OnionMode mode = OnionMode::pruned, const GenerateOptions& gen = {}) {
  if (depth < 1) throw std::invalid_argument("onion depth must be >= 1");
  OnionReport rep;
  auto base = threshold_search(to_double(start.vertices));
  if (!base) {
    rep.complete = false;
    rep.failed_depth = 0;
    return rep;
  }
  rep.layers.push_back(detail::make_layer(0, {}, start.vertices, std::move(*base), t.fold));
  rep.family = family_of(start.vertices.size());
  for (int j = 1; j <= depth; ++j) {
    const PointArray a = mode == OnionMode::pruned ? generate_array(rep.layers.back().points, t, 1, gen)
                                                   : generate_array(start.vertices, t, j, gen);
    auto cage = find_outer_cage(a);
    if (!cage) {
      rep.complete = false;
      rep.failed_depth = j;
      break;
    }
    rep.layers.push_back(
        detail::make_layer(j, std::move(cage->shells), std::move(cage->points), std::move(cage->graph), t.fold));
  }
  return rep;
}

/// Euclidean length of one translation vector, as a float.
inline double translation_norm(const AffineTranslation& t) { return t.vectors.front().to_double().norm(); }

}  // namespace affico
