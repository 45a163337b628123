// affico: affine extensions of icosahedral symmetry, fullerene cages and
// carbon onions with exact golden-field arithmetic.

#include <affico/io.hpp>
#include <affico/report.hpp>
#include <affico/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace affico;

namespace {

enum Exit { ok = 0, usage = 1, parse = 2, no_cage = 3, resource = 4 };

struct CliError : std::runtime_error {
  int code;
  CliError(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

GoldenNumber parse_length(const std::string& s) {
  try {
    return parse_field_expr(s);
  } catch (const ParseError& e) {
    throw CliError(parse, "cannot parse length '" + s + "': " + e.what());
  } catch (const std::domain_error& e) {
    throw CliError(parse, "cannot evaluate length '" + s + "': " + e.what());
  }
}

StartConfig load_config(const std::string& name) {
  try {
    return resolve_config(name);
  } catch (const ParseError& e) {
    throw CliError(parse, "seed file '" + name + "': " + e.what());
  } catch (const std::runtime_error& e) {
    throw CliError(parse, e.what());
  } catch (const std::invalid_argument& e) {
    throw CliError(parse, "seed file '" + name + "': " + e.what());
  }
}

/// Writes to --out when given, stdout otherwise.
void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw CliError(parse, "cannot write '" + out + "'");
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct Common {
  std::string config = "c60";
  int axis = 5;
  std::string length;
  std::string length_unit = "axis";
  int depth = 1;
  double band_gap = 0.05;
  std::string emit = "json";
  std::string out;
  bool bond = false;
  unsigned threads = 1;
  std::size_t max_points = 1'000'000;
};

void add_translation_flags(CLI::App* app, Common& c, bool need_length) {
  app->add_option("--config", c.config, "start configuration: builtin name or seed file path")->capture_default_str();
  app->add_option("--axis", c.axis, "translation axis fold")->check(CLI::IsMember({2, 3, 5}))->capture_default_str();
  auto* len = app->add_option("--length", c.length, "translation length as a field literal, e.g. \"(7+tau)/5\"");
  if (need_length) len->required();
  app->add_option("--length-unit", c.length_unit, "axis: multiples of (0,1,tau)/(1,1,1)/(1,0,0); unit: unit vectors")
      ->check(CLI::IsMember({"axis", "unit"}))
      ->capture_default_str();
}

std::string shell_comment(const std::string& start, const AffineTranslation& t, int depth, const std::string& what) {
  std::ostringstream s;
  s << "affico start=" << start << " fold=" << t.fold << " length=" << format(t.length) << " unit=" << to_string(t.unit)
    << " depth=" << depth << " " << what;
  return s.str();
}

std::string shell_list(const std::vector<std::size_t>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s;
}

// Band-wise trivalence needs distance lists over the whole array.
constexpr std::size_t kBandSearchLimit = 20'000;

int run_extend(const Common& c, const std::string& target) {
  const StartConfig start = load_config(c.config);
  const auto t = make_translation(icosahedral_full(), c.axis, parse_length(c.length), parse_length_unit(c.length_unit));
  const PointArray a = generate_array(start, t, c.depth, {c.max_points, c.threads});
  std::optional<OuterCage> cage;
  std::optional<OrbitSearch> search;
  if (a.size() >= 4 && a.size() <= kBandSearchLimit) {
    search.emplace(make_orbit_search(a));
    cage = find_outer_cage(a, *search);
  } else if (a.size() >= 4) {
    cage = find_outer_cage(a);
  }
  std::optional<FaceCensus> faces;
  if (cage) {
    try {
      faces = face_census(cage->graph);
    } catch (const EulerError&) {
    }
  }

  if (c.emit == "json") {
    json shells = json::array();
    for (const auto& s : a.shells)
      shells.push_back({{"radius2", format(s.radius2)}, {"radius", s.radius}, {"count", s.size()}});
    json bands_j = json::array();
    if (search) {
      for (const auto& b : band_reports(a, *search, c.band_gap))
        bands_j.push_back(
            {{"rmin", b.band.rmin}, {"rmax", b.band.rmax}, {"count", b.band.count}, {"trivalent", b.trivalent}});
    } else {
      // too large for the band-wise search; trivalence left open
      for (const auto& b : bands(a, c.band_gap))
        bands_j.push_back({{"rmin", b.rmin}, {"rmax", b.rmax}, {"count", b.count}, {"trivalent", nullptr}});
    }
    const std::size_t generic = generic_cardinality(start.vertices.size(), t);
    json j{{"start", start.name},
           {"fold", t.fold},
           {"length", format(t.length)},
           {"length_float", t.length.to_double()},
           {"length_unit", to_string(t.unit)},
           {"translation_norm", translation_norm(t)},
           {"depth", c.depth},
           {"actual", a.size()},
           {"shells", shells},
           {"bands", bands_j}};
    if (c.depth == 1) {
      j["generic"] = generic;
      j["nontrivial"] = a.size() < generic;
    }
    if (cage) {
      CageSummary s = summarize_cage(*cage);
      j["cage"] = cage_json(s);
      if (faces) j["cage"]["pentagon_orientation"] = to_string(pentagon_orientation(cage->graph, *faces));
    } else {
      j["cage"] = nullptr;
    }
    emit(c.out, dump(j));
    return ok;
  }

  // point exports: the outer cage by default, or the whole array
  const bool whole = target == "array";
  if (!whole && !cage) {
    std::cerr << "affico: no trivalent outer cage for this translation\n";
    return no_cage;
  }
  const std::vector<Vec3E>& pts = whole ? a.points : cage->points;
  ExportOptions opt;
  if (c.bond) opt.scale = bond_scale(cage ? to_double(cage->points) : to_double(pts));
  std::ostringstream s;
  if (c.emit == "xyz") {
    export_xyz(s, pts,
               shell_comment(start.name, t, c.depth, whole ? "array" : "cage shells=" + shell_list(cage->shells)), opt);
  } else if (c.emit == "csv") {
    export_csv(s, pts);
  } else {  // off
    if (whole) throw CliError(usage, "OFF export needs --target cage");
    if (!faces) throw CliError(no_cage, "cage has no valid face census");
    // vertices in canonical order so the file is stable
    const auto g = threshold_search(to_double(make_point_array(cage->points).points));
    if (!g) throw CliError(no_cage, "cage vanished under canonical reordering");
    export_off(s, *g, face_census(*g), opt);
  }
  emit(c.out, s.str());
  return ok;
}

int run_classify(const Common& c, const std::vector<int>& folds, const std::string& scan) {
  const StartConfig start = load_config(c.config);
  ScanSpec spec;
  try {
    spec = parse_scan(scan);
  } catch (const ParseError& e) {
    throw CliError(parse, std::string("bad --scan: ") + e.what());
  }
  ClassifyOptions opt;
  opt.band_gap = c.band_gap;
  opt.threads = c.threads;
  opt.unit = parse_length_unit(c.length_unit);
  const auto rows = classify_scan(start, folds, spec, opt);
  json j = scan_json(start.name, rows, opt.unit);
  j["scan"] = {{"a", {spec.a_lo, spec.a_hi}},
               {"b", {spec.b_lo, spec.b_hi}},
               {"c", spec.c},
               {"max", spec.max.value_or(2 * outer_radius(start))}};
  emit(c.out, dump(j));
  return ok;
}

int run_onion(const Common& c, const std::string& mode) {
  const StartConfig start = load_config(c.config);
  const auto t = make_translation(icosahedral_full(), c.axis, parse_length(c.length), parse_length_unit(c.length_unit));
  const OnionReport rep = build_onion(start, t, c.depth, parse_onion_mode(mode), {c.max_points, c.threads});
  json j = onion_json(start.name, t, rep);
  if (c.emit == "xyz") {
    if (c.out.empty()) throw CliError(usage, "onion --emit xyz needs --out PREFIX");
    ExportOptions opt;
    if (c.bond && !rep.layers.empty()) opt.scale = bond_scale(rep.layers.front().graph.vertices);
    json files = json::array();
    for (const auto& l : rep.layers) {
      const std::string path = c.out + "_z" + std::to_string(l.depth + 1) + ".xyz";
      std::ofstream f(path, std::ios::binary);
      if (!f) throw CliError(parse, "cannot write '" + path + "'");
      export_xyz(f, l.points, shell_comment(start.name, t, l.depth, "onion layer z=" + std::to_string(l.depth + 1)),
                 opt);
      files.push_back(path);
    }
    j["files"] = files;
    j["scale"] = opt.scale;
    emit(c.out + ".json", dump(j));
  } else {
    emit(c.out, dump(j));
  }
  return rep.complete ? ok : no_cage;
}

int run_export(const std::string& input, const std::string& fmt, const std::string& out, bool bond,
               const std::string& comment) {
  std::ifstream f(input, std::ios::binary);
  if (!f) throw CliError(parse, "cannot open '" + input + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  std::vector<Vec3E> pts;
  try {
    pts = parse_csv(ss.str());
  } catch (const ParseError& e) {
    throw CliError(parse, input + ": " + e.what());
  }
  ExportOptions opt;
  if (bond) opt.scale = bond_scale(to_double(pts));
  std::ostringstream s;
  if (fmt == "xyz") {
    export_xyz(s, pts, comment.empty() ? "affico export " + input : comment, opt);
  } else if (fmt == "csv") {
    export_csv(s, pts);
  } else if (fmt == "off") {
    if (pts.empty()) throw ExportError("nothing to export");
    const auto g = threshold_search(to_double(make_point_array(pts).points));
    if (!g) {
      std::cerr << "affico: points do not form a trivalent cage\n";
      return no_cage;
    }
    export_off(s, *g, face_census(*g), opt);
  } else {  // json
    json arr = json::array();
    for (const auto& p : make_point_array(pts).points) {
      const Vec3d d = p.to_double();
      arr.push_back({{"exact", format(p)}, {"x", d.x}, {"y", d.y}, {"z", d.z}});
    }
    s << dump({{"count", pts.size()}, {"points", arr}});
  }
  emit(out, s.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affico: affine extensions of icosahedral symmetry, fullerene cages and carbon onions"};
  app.require_subcommand(1);
  Common c;

  auto* group = app.add_subcommand("group-info", "print order, axis counts and element orders of I or I_h");
  std::string group_name = "I_h";
  group->add_option("--group", group_name, "I or I_h")->check(CLI::IsMember({"I", "I_h"}))->capture_default_str();
  group->add_option("--out", c.out, "write JSON here instead of stdout");

  auto* configs = app.add_subcommand("configs", "list start configurations with sizes and squared radii");
  std::string config_filter;
  configs->add_option("--config", config_filter, "only this builtin name or seed file");
  configs->add_option("--out", c.out, "write JSON here instead of stdout");

  auto* pent = app.add_subcommand("pentagon", "planar C5 demo: translated pentagon and coinciding points");
  std::string pent_dir = "vertex";
  pent->add_option("--length", c.length, "translation length (field literal)")->required();
  pent->add_option("--direction", pent_dir, "vertex or edge")
      ->check(CLI::IsMember({"vertex", "edge"}))
      ->capture_default_str();
  pent->add_option("--emit", c.emit, "json or csv (float points for plotting)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  pent->add_option("--out", c.out, "write output here instead of stdout");

  auto* ext = app.add_subcommand("extend", "generate the point array of one translation and find its outer cage");
  std::string target = "cage";
  add_translation_flags(ext, c, true);
  ext->add_option("--depth", c.depth, "number of translation applications")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  ext->add_option("--band-gap", c.band_gap, "relative radial gap separating bands")->capture_default_str();
  ext->add_option("--emit", c.emit, "json, xyz, off or csv")
      ->check(CLI::IsMember({"json", "xyz", "off", "csv"}))
      ->capture_default_str();
  ext->add_option("--target", target, "points to export with xyz/csv: cage or array")
      ->check(CLI::IsMember({"cage", "array"}))
      ->capture_default_str();
  ext->add_option("--out", c.out, "write output here instead of stdout");
  ext->add_flag("--bond-scale", c.bond, "scale coordinates so the shortest bond is 1.42 Angstrom");
  ext->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  ext->add_option("--max-points", c.max_points, "resource cap on array points (exit 4 beyond it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* cls = app.add_subcommand("classify", "scan translation lengths (a+b*tau)/c and report cages");
  std::vector<int> folds{2, 3, 5};
  std::string scan;
  cls->add_option("--config", c.config, "start configuration")->capture_default_str();
  cls->add_option("--axis", folds, "folds to scan (repeatable)")
      ->check(CLI::IsMember({2, 3, 5}))
      ->capture_default_str();
  cls->add_option("--scan", scan, "\"a=lo..hi,b=lo..hi,c=1..5,max=real\" (defaults a,b in -6..6, c in 1..5, max = 2R)");
  cls->add_option("--band-gap", c.band_gap, "relative radial gap separating bands")->capture_default_str();
  cls->add_option("--length-unit", c.length_unit, "axis or unit")
      ->check(CLI::IsMember({"axis", "unit"}))
      ->capture_default_str();
  cls->add_option("--out", c.out, "write JSON here instead of stdout");
  cls->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();

  auto* oni = app.add_subcommand("onion", "iterate one translation and report the nested cages");
  std::string mode = "pruned";
  add_translation_flags(oni, c, true);
  oni->add_option("--depth", c.depth, "iterations")->check(CLI::Range(1, 8))->capture_default_str();
  oni->add_option("--mode", mode, "pruned (translate the previous cage) or full (whole depth-k array)")
      ->check(CLI::IsMember({"pruned", "full"}))
      ->capture_default_str();
  oni->add_option("--emit", c.emit, "json, or xyz (one file per layer plus PREFIX.json)")
      ->check(CLI::IsMember({"json", "xyz"}))
      ->capture_default_str();
  oni->add_option("--out", c.out, "output path (json) or file prefix (xyz)");
  oni->add_flag("--bond-scale", c.bond, "scale so the innermost cage's shortest bond is 1.42 Angstrom");
  oni->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  oni->add_option("--max-points", c.max_points, "resource cap on array points (exit 4 beyond it)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "run the reproduction checklist");
  std::vector<std::string> only;
  bool ver_json = false;
  std::size_t prop_cases = 1000;
  ver->add_option("--only", only, "criterion keys or numbers (repeatable or comma separated)")->delimiter(',');
  ver->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  ver->add_option("--property-cases", prop_cases, "cases per property suite")->capture_default_str();
  ver->add_flag("--json", ver_json, "print JSON instead of the table");
  ver->add_option("--out", c.out, "write the report here instead of stdout");

  auto* exp = app.add_subcommand("export", "convert an exact CSV point file to xyz, off, csv or json");
  std::string input, comment;
  exp->add_option("--input", input, "exact CSV (header x,y,z; optional '# radicand k')")->required();
  exp->add_option("--emit", c.emit, "xyz, off, csv or json")
      ->check(CLI::IsMember({"json", "xyz", "off", "csv"}))
      ->capture_default_str();
  exp->add_option("--comment", comment, "XYZ comment line");
  exp->add_option("--out", c.out, "write output here instead of stdout");
  exp->add_flag("--bond-scale", c.bond, "scale so the shortest distance is 1.42 Angstrom");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*group) {
      emit(c.out, dump(group_json(group_name == "I" ? icosahedral_rotations() : icosahedral_full())));
      return ok;
    }
    if (*configs) {
      std::vector<std::string> names = config_filter.empty() ? builtin_names() : std::vector{config_filter};
      json arr = json::array();
      for (const auto& n : names) {
        const StartConfig s = load_config(n);
        json radii = json::array();
        for (const auto& r : s.radius2_spectrum()) radii.push_back(format(r));
        arr.push_back({{"name", s.name},
                       {"vertices", s.vertices.size()},
                       {"radius2", radii},
                       {"outer_radius", outer_radius(s)},
                       {"invariant", is_invariant(icosahedral_full(), s.vertices)}});
      }
      emit(c.out, dump(arr));
      return ok;
    }
    if (*pent) {
      const GoldenNumber l = parse_length(c.length);
      const auto dir = parse_pentagon_direction(pent_dir);
      const auto a = pentagon_array(l, dir);
      if (c.emit == "csv") {
        std::ostringstream s;
        s << "x,y\n";
        char buf[96];
        for (const auto& p : a.points) {
          std::snprintf(buf, sizeof buf, "%.9f,%.9f\n", p.x.to_double(), p.y.to_double());
          s << buf;
        }
        emit(c.out, s.str());
      } else {
        emit(c.out, dump(pentagon_json(l, dir, a)));
      }
      return ok;
    }
    if (*ext) return run_extend(c, target);
    if (*cls) return run_classify(c, folds, scan);
    if (*oni) return run_onion(c, mode);
    if (*exp) return run_export(input, c.emit, c.out, c.bond, comment);
    if (*ver) {
      VerifyOptions vo;
      vo.only = only;
      vo.threads = c.threads;
      vo.property_cases = prop_cases;
      try {
        validate_only(only);
      } catch (const std::invalid_argument& e) {
        std::cerr << "affico: " << e.what() << "\n";
        return usage;
      }
      const auto results = run_verify(vo);
      bool all = true;
      std::ostringstream s;
      json arr = json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        s << format_result(r) << "\n";
        arr.push_back({{"id", r.id},
                       {"key", r.key},
                       {"title", r.title},
                       {"passed", r.passed},
                       {"known_discrepancy", r.known_discrepancy},
                       {"detail", r.detail}});
      }
      emit(c.out, ver_json ? dump({{"criteria", arr}, {"all_passed", all}}) : s.str());
      return all ? ok : usage;
    }
  } catch (const CliError& e) {
    std::cerr << "affico: " << e.what() << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "affico: " << e.what() << "\n";
    return parse;
  } catch (const ResourceLimit& e) {
    std::cerr << "affico: resource cap exceeded: " << e.what() << "\n";
    return resource;
  } catch (const ExportError& e) {
    std::cerr << "affico: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "affico: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "affico: " << e.what() << "\n";
    return parse;
  }
  return ok;
}
