#pragma once

// Writers for XYZ, OFF and exact CSV, and the CSV reader.

#include <affico/affine.hpp>
#include <affico/cage.hpp>
#include <affico/field_parser.hpp>

#include <algorithm>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace affico {

class ExportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kCarbonBond = 1.42;  // Angstrom

struct ExportOptions {
  int precision = 6;
  double scale = 1.0;  // multiplies every float coordinate
};

/// Factor mapping the smallest pairwise distance of `pts` to `bond`.
inline double bond_scale(const std::vector<Vec3d>& pts, double bond = kCarbonBond) {
  double dmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) dmin = std::min(dmin, (pts[i] - pts[j]).norm());
  if (!(dmin > 0) || dmin == std::numeric_limits<double>::infinity())
    throw ExportError("bond scaling needs at least two distinct points");
  return bond / dmin;
}

namespace detail {

inline std::string fixed(double v, int precision) {
  if (v == 0) v = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

/// Exact points in canonical order: radius, then float coordinates.
inline std::vector<Vec3E> canonical_order(const std::vector<Vec3E>& pts) {
  return make_point_array(pts).points;
}

}  // namespace detail

/// XYZ: count, one comment line, then "C x y z" in canonical order.
inline void export_xyz(std::ostream& out, const std::vector<Vec3E>& pts, const std::string& comment,
                       const ExportOptions& opt = {}) {
  if (pts.empty()) throw ExportError("nothing to export");
  if (comment.find('\n') != std::string::npos) throw ExportError("XYZ comment must be one line");
  out << pts.size() << '\n' << comment << '\n';
  for (const auto& p : detail::canonical_order(pts)) {
    const Vec3d f = p.to_double();
    out << "C " << detail::fixed(opt.scale * f.x, opt.precision) << ' ' << detail::fixed(opt.scale * f.y, opt.precision)
        << ' ' << detail::fixed(opt.scale * f.z, opt.precision) << '\n';
  }
}

/// OFF with faces oriented counter-clockwise seen from outside.
inline void export_off(std::ostream& out, const CageGraph& g, const FaceCensus& fc, const ExportOptions& opt = {}) {
  if (g.vertices.empty()) throw ExportError("nothing to export");
  if (!g.trivalent()) throw ExportError("OFF export needs a trivalent cage");
  const long chi = static_cast<long>(g.size()) - static_cast<long>(g.edges.size()) + static_cast<long>(fc.faces.size());
  if (chi != 2) throw ExportError("face census does not match the cage");
  out << "OFF\n" << g.size() << ' ' << g.edges.size() << ' ' << fc.faces.size() << '\n';
  for (const auto& v : g.vertices)
    out << detail::fixed(opt.scale * v.x, opt.precision) << ' ' << detail::fixed(opt.scale * v.y, opt.precision) << ' '
        << detail::fixed(opt.scale * v.z, opt.precision) << '\n';
  for (const auto& f : fc.faces) {
    out << f.size();
    for (std::size_t v : f) out << ' ' << v;
    out << '\n';
  }
}

/// Exact CSV: optional "# radicand k" line, header "x,y,z", field literals.
inline void export_csv(std::ostream& out, const std::vector<Vec3E>& pts) {
  if (pts.empty()) throw ExportError("nothing to export");
  const Radicand& k = pts.front().radicand();
  if (!k.is_one()) out << "# radicand " << format(k.value()) << '\n';
  out << "x,y,z\n";
  for (const auto& p : detail::canonical_order(pts)) out << format(p) << '\n';
}

inline std::vector<Vec3E> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Radicand k = Radicand::unit();
  std::vector<Vec3E> out;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      if (line.rfind("# radicand ", 0) == 0) {
        k = Radicand(parse_field_expr(line.substr(11)));
        continue;
      }
      if (line[0] == '#') continue;
      if (!header) {
        if (line != "x,y,z") throw ParseError("expected header 'x,y,z'", 0);
        header = true;
        continue;
      }
      auto c = parse_triple(line, k);
      out.emplace_back(c[0], c[1], c[2]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
    }
  }
  return out;
}

}  // namespace affico
