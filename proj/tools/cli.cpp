#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "orikami/analysis.hpp"
#include "orikami/construct.hpp"
#include "orikami/error.hpp"
#include "orikami/generators.hpp"
#include "orikami/io.hpp"
#include "orikami/knotid.hpp"

namespace orikami::cli {

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("ORIKAMI_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("ORIKAMI_SEED: not an unsigned integer: ") + env);
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file_atomic(path, text);
  }
}

/// Writes folding.json, loop.json and report.json into `dir`.
void write_triple(const fs::path& dir, const Folding& f, const PaperLoop& loop,
                  std::uint64_t seed, const Tolerance& tol, std::ostream& out) {
  fs::create_directories(dir);
  const SpatialPolyline poly = fold_loop(f, loop, tol);
  const CertificationReport report = certify(poly, seed, tol);
  write_file_atomic(dir / "folding.json", to_json(f));
  write_file_atomic(dir / "loop.json", to_json(loop));
  write_file_atomic(dir / "report.json", to_json(report));
  out << "creases " << crease_edge_count(f) << ", determinant " << report.determinant
      << ", written to " << dir.string() << "\n";
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

}  // namespace

std::string crease_pattern_svg(const Folding& f, const PaperLoop* loop) {
  const auto sx = [](Vec2 p) { return fmt(1000.0 * p.x); };
  const auto sy = [](Vec2 p) { return fmt(1000.0 * (1.0 - p.y)); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\" "
        "stroke=\"black\" stroke-width=\"4\"/>\n";
  for (auto [a, b] : f.pattern.crease_edges) {
    const Vec2 p = f.pattern.vertices[a], q = f.pattern.vertices[b];
    os << "  <line x1=\"" << sx(p) << "\" y1=\"" << sy(p) << "\" x2=\"" << sx(q) << "\" y2=\""
       << sy(q) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  if (loop != nullptr && !loop->waypoints.empty()) {
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < loop->waypoints.size(); ++i) {
      if (i > 0) os << ' ';
      os << sx(loop->waypoints[i]) << ',' << sy(loop->waypoints[i]);
    }
    os << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string folded_obj(const Folding& f, const PaperLoop* loop, const Tolerance& tol) {
  std::ostringstream os;
  os << std::setprecision(12) << "o folding\n";
  int next = 1;
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < static_cast<int>(f.pattern.faces.size()); ++i) {
    std::vector<int> ids;
    for (Vec3 p : f.face_image(i)) {
      os << "v " << p.x << ' ' << p.y << ' ' << p.z << "\n";
      ids.push_back(next++);
    }
    faces.push_back(std::move(ids));
  }
  for (const auto& ids : faces) {
    os << 'f';
    for (int id : ids) os << ' ' << id;
    os << "\n";
  }
  if (loop != nullptr) {
    const SpatialPolyline poly = fold_loop(f, *loop, tol);
    os << "o loop\n";
    const int first = next;
    for (Vec3 p : poly.waypoints) {
      os << "v " << p.x << ' ' << p.y << ' ' << p.z << "\n";
      ++next;
    }
    os << 'l';
    for (int id = first; id < next; ++id) os << ' ' << id;
    os << ' ' << first << "\n";
  }
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Folded-paper knot toolkit", "orikami"};
  app.require_subcommand(1);
  double tolerance_scale = 1.0;
  app.add_option("--tolerance", tolerance_scale, "Scale the geometric tolerances")
      ->check(CLI::PositiveNumber);

  std::string folding_path, loop_path, poly_path, sticks_path, out_path;
  bool strict = false;
  std::uint64_t seed = 0;
  int torus_n = 0;

  auto* validate = app.add_subcommand("validate", "Check that a folding is piecewise isometric");
  validate->add_option("folding", folding_path)->required();
  validate->add_flag("--strict", strict, "Reject creases whose two sides agree");

  auto* fold = app.add_subcommand("fold", "Fold a paper loop into space");
  fold->add_option("--folding", folding_path)->required();
  fold->add_option("--loop", loop_path)->required();
  fold->add_option("-o,--output", out_path);

  auto* identify = app.add_subcommand("identify", "Knot invariants of a spatial polyline");
  identify->add_option("polyline", poly_path)->required();
  auto* seed_opt = identify->add_option("--seed", seed, "Projection seed");

  auto* construct = app.add_subcommand("construct", "Cone folding realising a stick diagram");
  construct->add_option("--sticks", sticks_path)->required();
  construct->add_option("-o,--output", out_path)->required();

  auto* torus = app.add_subcommand("torus", "Two-crease folding of T(2, 2n+3)");
  torus->add_option("--n", torus_n)->required()->check(CLI::NonNegativeNumber);
  torus->add_option("-o,--output", out_path)->required();

  auto* analyze = app.add_subcommand("analyze", "Self-intersections and properness");
  analyze->add_option("folding", folding_path)->required();

  auto* svg = app.add_subcommand("export-svg", "Crease pattern as SVG");
  svg->add_option("folding", folding_path)->required();
  svg->add_option("--loop", loop_path);
  svg->add_option("-o,--output", out_path)->required();

  auto* obj = app.add_subcommand("export-obj", "Folded state as Wavefront OBJ");
  obj->add_option("folding", folding_path)->required();
  obj->add_option("--loop", loop_path);
  obj->add_option("-o,--output", out_path)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Tolerance tol = kDefaultTolerance.scaled(tolerance_scale);
    if (seed_opt->count() == 0) seed = default_seed();
    const auto load_loop = [&]() -> std::optional<PaperLoop> {
      if (loop_path.empty()) return std::nullopt;
      PaperLoop l = read_loop(read_text_file(loop_path));
      validate_loop(l, tol);
      return l;
    };

    if (*validate) {
      const ValidationReport r = validate_folding(read_folding(read_text_file(folding_path)),
                                                  strict, tol);
      out << to_json(r);
      return r.valid() ? kExitOk : kExitFailure;
    }
    if (*fold) {
      const Folding f = read_folding(read_text_file(folding_path));
      const auto loop = load_loop();
      emit(out_path, to_json(fold_loop(f, *loop, tol)), out);
      return kExitOk;
    }
    if (*identify) {
      const SpatialPolyline poly = read_polyline(read_text_file(poly_path));
      out << to_json(certify(poly, seed, tol));
      return kExitOk;
    }
    if (*construct) {
      const Construction c = construct_from_sticks(read_sticks(read_text_file(sticks_path)), tol);
      write_triple(out_path, c.folding, c.loop, seed, tol, out);
      return kExitOk;
    }
    if (*torus) {
      auto [f, loop] = torus_folding(TorusParams{.n = torus_n}, tol);
      write_triple(out_path, f, loop, seed, tol, out);
      return kExitOk;
    }
    if (*analyze) {
      const PropernessVerdict v = properness_verdict(read_folding(read_text_file(folding_path)), tol);
      out << to_json(v);
      return kExitOk;
    }
    if (*svg) {
      const Folding f = read_folding(read_text_file(folding_path));
      const auto loop = load_loop();
      emit(out_path, crease_pattern_svg(f, loop ? &*loop : nullptr), out);
      return kExitOk;
    }
    if (*obj) {
      const Folding f = read_folding(read_text_file(folding_path));
      const auto loop = load_loop();
      emit(out_path, folded_obj(f, loop ? &*loop : nullptr, tol), out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace orikami::cli
