#include "orikami/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "orikami/error.hpp"

namespace orikami {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json document() { return json{{"format", kFormatTag}}; }

const json& require(const json& j, const std::string& key) {
  if (!j.is_object()) throw SchemaError("expected an object around key '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing key '" + key + "'");
  return *it;
}

void check_format(const json& j) {
  const json& f = require(j, "format");
  if (!f.is_string() || f.get<std::string>() != kFormatTag) {
    throw SchemaError("key 'format': expected \"" + std::string(kFormatTag) + "\"");
  }
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw SchemaError("key '" + key + "': expected a number");
  return j.get<double>();
}

std::int64_t integer(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw SchemaError("key '" + key + "': expected an integer");
  return j.get<std::int64_t>();
}

bool boolean(const json& j, const std::string& key) {
  if (!j.is_boolean()) throw SchemaError("key '" + key + "': expected a boolean");
  return j.get<bool>();
}

std::string string(const json& j, const std::string& key) {
  if (!j.is_string()) throw SchemaError("key '" + key + "': expected a string");
  return j.get<std::string>();
}

const json& array(const json& j, const std::string& key, std::size_t size = 0) {
  if (!j.is_array()) throw SchemaError("key '" + key + "': expected an array");
  if (size != 0 && j.size() != size) {
    throw SchemaError("key '" + key + "': expected " + std::to_string(size) + " entries");
  }
  return j;
}

json vec(Vec2 v) { return json::array({v.x, v.y}); }
json vec(Vec3 v) { return json::array({v.x, v.y, v.z}); }

Vec2 vec2(const json& j, const std::string& key) {
  array(j, key, 2);
  return {number(j[0], key), number(j[1], key)};
}

Vec3 vec3(const json& j, const std::string& key) {
  array(j, key, 3);
  return {number(j[0], key), number(j[1], key), number(j[2], key)};
}

int index(const json& j, const std::string& key, std::size_t bound) {
  const std::int64_t i = integer(j, key);
  if (i < 0 || static_cast<std::size_t>(i) >= bound) {
    throw SchemaError("key '" + key + "': index " + std::to_string(i) + " out of range");
  }
  return static_cast<int>(i);
}

json polynomial(const LaurentPolynomial& p) {
  return json{{"low", p.is_zero() ? 0 : p.low_exponent()},
              {"coefficients", p.coefficients()},
              {"text", p.to_string("t")}};
}

LaurentPolynomial polynomial(const json& j, const std::string& key) {
  const int low = static_cast<int>(integer(require(j, "low"), key + ".low"));
  std::vector<std::int64_t> coeffs;
  for (const json& c : array(require(j, "coefficients"), key + ".coefficients")) {
    coeffs.push_back(integer(c, key + ".coefficients"));
  }
  return LaurentPolynomial(low, std::move(coeffs));
}

IntersectionKind kind_from_string(const std::string& s) {
  for (auto k : {IntersectionKind::SharedCrease, IntersectionKind::CoincidentOverlap,
                 IntersectionKind::Touching, IntersectionKind::TransversalCrossing}) {
    if (to_string(k) == s) return k;
  }
  throw SchemaError("key 'kind': unknown value \"" + s + "\"");
}

Properness properness_from_string(const std::string& s) {
  for (auto p : {Properness::ProperInjective, Properness::ProperFlatContact,
                 Properness::ImproperTransversal, Properness::Unknown}) {
    if (to_string(p) == s) return p;
  }
  throw SchemaError("key 'verdict': unknown value \"" + s + "\"");
}

}  // namespace

std::string to_json(const Folding& f) {
  json j = document();
  j["vertices"] = json::array();
  for (Vec2 v : f.pattern.vertices) j["vertices"].push_back(vec(v));
  j["creases"] = json::array();
  for (auto [a, b] : f.pattern.crease_edges) j["creases"].push_back({a, b});
  j["faces"] = f.pattern.faces;
  j["face_maps"] = json::array();
  for (const RigidEmbedding& m : f.face_maps) {
    j["face_maps"].push_back(
        {{"linear", json::array({json::array({m.col_x.x, m.col_y.x}),
                                 json::array({m.col_x.y, m.col_y.y}),
                                 json::array({m.col_x.z, m.col_y.z})})},
         {"translation", vec(m.translation)}});
  }
  return dump(j);
}

Folding read_folding(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  CreasePattern p;
  for (const json& v : array(require(j, "vertices"), "vertices")) {
    p.vertices.push_back(vec2(v, "vertices"));
  }
  const std::size_t nv = p.vertices.size();
  for (const json& e : array(require(j, "creases"), "creases")) {
    array(e, "creases", 2);
    p.crease_edges.emplace_back(index(e[0], "creases", nv), index(e[1], "creases", nv));
  }
  for (const json& face : array(require(j, "faces"), "faces")) {
    array(face, "faces");
    if (face.size() < 3) throw SchemaError("key 'faces': a face needs at least 3 vertices");
    std::vector<int> cycle;
    for (const json& i : face) cycle.push_back(index(i, "faces", nv));
    p.faces.push_back(std::move(cycle));
  }
  std::vector<RigidEmbedding> maps;
  for (const json& m : array(require(j, "face_maps"), "face_maps")) {
    const json& lin = array(require(m, "linear"), "face_maps.linear", 3);
    Vec3 cx, cy;
    double* xs[3] = {&cx.x, &cx.y, &cx.z};
    double* ys[3] = {&cy.x, &cy.y, &cy.z};
    for (int r = 0; r < 3; ++r) {
      array(lin[r], "face_maps.linear", 2);
      *xs[r] = number(lin[r][0], "face_maps.linear");
      *ys[r] = number(lin[r][1], "face_maps.linear");
    }
    maps.push_back({cx, cy, vec3(require(m, "translation"), "face_maps.translation")});
  }
  if (maps.size() != p.faces.size()) {
    throw SchemaError("key 'face_maps': expected one entry per face");
  }
  return Folding(std::move(p), std::move(maps));
}

std::string to_json(const PaperLoop& loop) {
  json j = document();
  j["waypoints"] = json::array();
  for (Vec2 v : loop.waypoints) j["waypoints"].push_back(vec(v));
  return dump(j);
}

PaperLoop read_loop(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  PaperLoop loop;
  for (const json& v : array(require(j, "waypoints"), "waypoints")) {
    loop.waypoints.push_back(vec2(v, "waypoints"));
  }
  return loop;
}

std::string to_json(const SpatialPolyline& poly) {
  json j = document();
  j["injective"] = poly.injective;
  j["waypoints"] = json::array();
  for (Vec3 v : poly.waypoints) j["waypoints"].push_back(vec(v));
  return dump(j);
}

SpatialPolyline read_polyline(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  SpatialPolyline poly;
  for (const json& v : array(require(j, "waypoints"), "waypoints")) {
    poly.waypoints.push_back(vec3(v, "waypoints"));
  }
  // Older or hand-written files may omit the flag; recompute it then.
  if (auto it = j.find("injective"); it != j.end()) {
    poly.injective = boolean(*it, "injective");
  } else {
    poly.injective = polyline_is_injective(poly.waypoints);
  }
  return poly;
}

std::string to_json(const StickDiagram& s) {
  json j = document();
  j["vertices"] = json::array();
  for (Vec2 v : s.vertices) j["vertices"].push_back(vec(v));
  j["crossings"] = json::array();
  for (const StickCrossing& c : s.crossings) {
    j["crossings"].push_back({{"edges", {c.edge_a, c.edge_b}}, {"over", c.over}});
  }
  return dump(j);
}

StickDiagram read_sticks(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  StickDiagram s;
  for (const json& v : array(require(j, "vertices"), "vertices")) {
    s.vertices.push_back(vec2(v, "vertices"));
  }
  const std::size_t n = s.vertices.size();
  for (const json& c : array(require(j, "crossings"), "crossings")) {
    const json& e = array(require(c, "edges"), "crossings.edges", 2);
    StickCrossing x;
    x.edge_a = index(e[0], "crossings.edges", n);
    x.edge_b = index(e[1], "crossings.edges", n);
    x.over = index(require(c, "over"), "crossings.over", n);
    if (x.over != x.edge_a && x.over != x.edge_b) {
      throw SchemaError("key 'crossings.over': must be one of the two edges");
    }
    s.crossings.push_back(x);
  }
  return s;
}

std::string pd_entry_to_string(const std::array<int, 4>& x) {
  std::ostringstream os;
  os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  return os.str();
}

std::array<int, 4> pd_entry_from_string(std::string_view s) {
  const auto bad = [&] {
    return SchemaError("key 'pd_code': malformed entry \"" + std::string(s) + "\"");
  };
  if (s.size() < 4 || s.substr(0, 2) != "X[" || s.back() != ']') throw bad();
  std::string_view body = s.substr(2, s.size() - 3);
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) {
    const auto comma = body.find(',');
    if ((k < 3) == (comma == std::string_view::npos)) throw bad();
    const std::string_view tok = body.substr(0, comma);
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out[k]);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) throw bad();
    body = k < 3 ? body.substr(comma + 1) : std::string_view{};
  }
  return out;
}

std::string to_json(const CertificationReport& r) {
  json j = document();
  j["crossing_count"] = r.crossing_count;
  j["writhe"] = r.writhe;
  j["determinant"] = r.determinant;
  j["alexander"] = polynomial(r.alexander);
  j["jones"] = polynomial(r.jones);
  j["invariants_trivial"] = r.invariants_trivial;
  j["pd_code"] = json::array();
  for (const auto& x : r.pd_code) j["pd_code"].push_back(pd_entry_to_string(x));
  return dump(j);
}

CertificationReport read_certification(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  CertificationReport r;
  r.crossing_count = static_cast<int>(integer(require(j, "crossing_count"), "crossing_count"));
  r.writhe = static_cast<int>(integer(require(j, "writhe"), "writhe"));
  r.determinant = integer(require(j, "determinant"), "determinant");
  r.alexander = polynomial(require(j, "alexander"), "alexander");
  r.jones = polynomial(require(j, "jones"), "jones");
  r.invariants_trivial = boolean(require(j, "invariants_trivial"), "invariants_trivial");
  for (const json& x : array(require(j, "pd_code"), "pd_code")) {
    r.pd_code.push_back(pd_entry_from_string(string(x, "pd_code")));
  }
  return r;
}

std::string to_json(const ValidationReport& r) {
  json j = document();
  j["strict"] = r.strict;
  j["valid"] = r.valid();
  j["max_face_defect"] = r.max_face_defect;
  j["max_crease_defect"] = r.max_crease_defect;
  j["face_defects"] = json::array();
  for (const auto& d : r.face_defects) {
    j["face_defects"].push_back({{"face", d.face}, {"defect", d.defect}});
  }
  j["crease_defects"] = json::array();
  for (const auto& d : r.crease_defects) {
    j["crease_defects"].push_back({{"crease", d.crease}, {"defect", d.defect}});
  }
  j["spurious_creases"] = r.spurious_creases;
  return dump(j);
}

ValidationReport read_validation(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  ValidationReport r;
  r.strict = boolean(require(j, "strict"), "strict");
  r.max_face_defect = number(require(j, "max_face_defect"), "max_face_defect");
  r.max_crease_defect = number(require(j, "max_crease_defect"), "max_crease_defect");
  for (const json& d : array(require(j, "face_defects"), "face_defects")) {
    r.face_defects.push_back(
        {static_cast<int>(integer(require(d, "face"), "face_defects.face")),
         number(require(d, "defect"), "face_defects.defect")});
  }
  for (const json& d : array(require(j, "crease_defects"), "crease_defects")) {
    r.crease_defects.push_back(
        {static_cast<int>(integer(require(d, "crease"), "crease_defects.crease")),
         number(require(d, "defect"), "crease_defects.defect")});
  }
  for (const json& c : array(require(j, "spurious_creases"), "spurious_creases")) {
    r.spurious_creases.push_back(static_cast<int>(integer(c, "spurious_creases")));
  }
  if (boolean(require(j, "valid"), "valid") != r.valid()) {
    throw SchemaError("key 'valid': inconsistent with the defect lists");
  }
  return r;
}

std::string to_json(const PropernessVerdict& v) {
  json j = document();
  j["verdict"] = to_string(v.verdict);
  j["findings"] = json::array();
  for (const IntersectionFinding& f : v.findings) {
    j["findings"].push_back({{"faces", {f.face_a, f.face_b}},
                             {"kind", to_string(f.kind)},
                             {"witness", {vec(f.witness.a), vec(f.witness.b)}}});
  }
  return dump(j);
}

PropernessVerdict read_verdict(std::string_view text) {
  const json j = parse(text);
  check_format(j);
  PropernessVerdict v;
  v.verdict = properness_from_string(string(require(j, "verdict"), "verdict"));
  for (const json& f : array(require(j, "findings"), "findings")) {
    IntersectionFinding x;
    const json& faces = array(require(f, "faces"), "findings.faces", 2);
    x.face_a = static_cast<int>(integer(faces[0], "findings.faces"));
    x.face_b = static_cast<int>(integer(faces[1], "findings.faces"));
    x.kind = kind_from_string(string(require(f, "kind"), "findings.kind"));
    const json& w = array(require(f, "witness"), "findings.witness", 2);
    x.witness = {vec3(w[0], "findings.witness"), vec3(w[1], "findings.witness")};
    v.findings.push_back(x);
  }
  return v;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out.flush()) throw DomainError("cannot write '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw DomainError("cannot rename onto '" + path.string() + "': " + ec.message());
  }
}

}  // namespace orikami
