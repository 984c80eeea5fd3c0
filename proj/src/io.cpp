#include "tensegrity/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace tensegrity {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("]: "); pos != std::string::npos) what = what.substr(pos + 3);
    throw InputError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) { throw InputError(where + ": " + msg); }

const json& member(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

int as_int(const json& j, const std::string& where) {
  if (j.is_number_float()) fail(where, "floating point forbidden: " + j.dump());
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<int>();
}

Rational as_rational(const json& j, const std::string& where) {
  if (j.is_number_float()) fail(where, "floating point forbidden: " + j.dump());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Edge as_edge(const json& j, const std::string& where) {
  array_at(j, where);
  if (j.size() != 2) fail(where, "an edge has two endpoints");
  return Edge(as_int(j[0], at(where, 0)), as_int(j[1], at(where, 1)));
}

std::vector<int> int_list(const json& j, const std::string& where) {
  array_at(j, where);
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], at(where, i)));
  return out;
}

template <std::size_t N>
std::array<int, N> int_array(const json& j, const std::string& where) {
  const auto v = int_list(j, where);
  if (v.size() != N) fail(where, "expected " + std::to_string(N) + " indices");
  std::array<int, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

Framework FrameworkFile::framework() const {
  if (!config) throw InputError("file carries no vertex coordinates");
  return Framework(graph, *config);
}

bool FrameworkFile::operator==(const FrameworkFile& o) const {
  auto same_config = [](const std::optional<Configuration>& a, const std::optional<Configuration>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (a->d == b->d && a->points == b->points);
  };
  return d == o.d && graph == o.graph && same_config(config, o.config) && stress == o.stress;
}

FrameworkFile parse_framework(const std::string& text) {
  const json root = parse_json(text);
  FrameworkFile out;
  out.d = as_int(member(root, "d", "root"), "d");
  if (out.d < 1) fail("d", "dimension must be positive");

  int n = 0;
  if (root.contains("vertices")) {
    const json& vs = array_at(root["vertices"], "vertices");
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const json& p = array_at(vs[i], at("vertices", i));
      if (static_cast<int>(p.size()) != out.d)
        fail(at("vertices", i), "dimension mismatch: expected " + std::to_string(out.d) + " coordinates, got " + std::to_string(p.size()));
      Vector v;
      for (std::size_t k = 0; k < p.size(); ++k) v.push_back(as_rational(p[k], at(at("vertices", i), k)));
      pts.push_back(std::move(v));
    }
    n = static_cast<int>(pts.size());
    out.config = Configuration(out.d, std::move(pts));
    if (root.contains("n") && as_int(root["n"], "n") != n) fail("n", "does not match the number of vertices");
  } else {
    n = as_int(member(root, "n", "root"), "n");
    if (n < 0) fail("n", "must be nonnegative");
  }

  std::vector<std::pair<int, int>> pairs;
  if (root.contains("edges")) {
    const json& es = array_at(root["edges"], "edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
      const json& e = array_at(es[i], at("edges", i));
      if (e.size() != 2) fail(at("edges", i), "an edge has two endpoints");
      pairs.push_back({as_int(e[0], at(at("edges", i), 0)), as_int(e[1], at(at("edges", i), 1))});
    }
  }
  try {
    out.graph = Graph(n, pairs);
  } catch (const std::invalid_argument& e) {
    fail("edges", e.what());
  }

  if (root.contains("stress")) {
    const json& ss = array_at(root["stress"], "stress");
    Stress w;
    for (std::size_t i = 0; i < ss.size(); ++i) {
      const std::string where = at("stress", i);
      const Edge e = as_edge(member(ss[i], "edge", where), where + ".edge");
      if (!out.graph.has_edge(e.a, e.b)) fail(where, "not an edge of the graph");
      if (w.has(e)) fail(where, "duplicate tension");
      w.set(e, as_rational(member(ss[i], "tension", where), where + ".tension"));
    }
    out.stress = std::move(w);
  }
  return out;
}

std::string serialize_framework(const FrameworkFile& f) {
  json root;
  root["d"] = f.d;
  if (f.config) {
    json vs = json::array();
    for (const auto& p : f.config->points) {
      json row = json::array();
      for (const auto& x : p) row.push_back(to_string(x));
      vs.push_back(row);
    }
    root["vertices"] = vs;
  } else {
    root["n"] = f.graph.vertex_count();
  }
  json es = json::array();
  for (const auto& e : f.graph.edges()) es.push_back({e.a, e.b});
  root["edges"] = es;
  if (f.stress) {
    json ss = json::array();
    for (const auto& [e, t] : f.stress->tensions()) ss.push_back({{"edge", {e.a, e.b}}, {"tension", to_string(t)}});
    root["stress"] = ss;
  }
  return root.dump(2) + "\n";
}

ConditionFile parse_condition(const std::string& text) {
  const json root = parse_json(text);
  ConditionSystem s;
  s.base_count = as_int(member(root, "base_count", "root"), "base_count");
  if (root.contains("auxiliaries")) {
    const json& as = array_at(root["auxiliaries"], "auxiliaries");
    for (std::size_t i = 0; i < as.size(); ++i) {
      const std::string where = at("auxiliaries", i);
      const json& name = member(as[i], "name", where);
      if (!name.is_string()) fail(where + ".name", "expected a string");
      s.auxiliaries.push_back({name.get<std::string>(), int_array<4>(member(as[i], "lines", where), where + ".lines")});
    }
  }
  if (root.contains("conditions")) {
    const json& cs = array_at(root["conditions"], "conditions");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string where = at("conditions", i);
      const json& type = member(cs[i], "type", where);
      if (!type.is_string()) fail(where + ".type", "expected a string");
      const std::string t = type.get<std::string>();
      const json& idx = member(cs[i], "indices", where);
      if (t == "eq") {
        auto v = int_array<2>(idx, where + ".indices");
        s.conditions.push_back(Coincide{v[0], v[1]});
      } else if (t == "collinear") {
        auto v = int_array<3>(idx, where + ".indices");
        s.conditions.push_back(Collinear{v[0], v[1], v[2]});
      } else if (t == "intersect") {
        auto v = int_array<5>(idx, where + ".indices");
        s.conditions.push_back(IntersectionCondition{v[0], {v[1], v[2], v[3], v[4]}});
      } else {
        fail(where + ".type", "unknown condition type \"" + t + "\"");
      }
    }
  }
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return s;
}

std::string serialize_condition(const ConditionFile& c) {
  json root;
  root["base_count"] = c.base_count;
  json as = json::array();
  for (const auto& a : c.auxiliaries) as.push_back({{"name", a.name}, {"lines", a.lines}});
  root["auxiliaries"] = as;
  json cs = json::array();
  for (const auto& cond : c.conditions) {
    if (auto* e = std::get_if<Coincide>(&cond)) cs.push_back({{"type", "eq"}, {"indices", {e->i, e->j}}});
    else if (auto* l = std::get_if<Collinear>(&cond)) cs.push_back({{"type", "collinear"}, {"indices", {l->i, l->j, l->k}}});
    else {
      const auto& x = std::get<IntersectionCondition>(cond);
      cs.push_back({{"type", "intersect"}, {"indices", {x.i, x.lines[0], x.lines[1], x.lines[2], x.lines[3]}}});
    }
  }
  root["conditions"] = cs;
  return root.dump(2) + "\n";
}

PointsFile parse_points(const std::string& text) {
  const json root = parse_json(text);
  const json& ps = array_at(member(root, "points", "root"), "points");
  PointsFile out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::string where = at("points", i);
    const json& p = array_at(ps[i], where);
    if (p.size() != 2 && p.size() != 3) fail(where, "expected 2 affine or 3 homogeneous coordinates");
    Vector v;
    for (std::size_t k = 0; k < p.size(); ++k) v.push_back(as_rational(p[k], at(where, k)));
    if (v.size() == 2) v.push_back(1);
    try {
      out.emplace_back(v[0], v[1], v[2]);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }
  return out;
}

SurgerySpec parse_surgery_spec(const std::string& text) {
  const json root = parse_json(text);
  const json& type = member(root, "type", "root");
  if (!type.is_string()) fail("type", "expected a string");
  const std::string t = type.get<std::string>();
  SurgerySpec out;
  if (root.contains("direction")) {
    const json& dir = root["direction"];
    if (dir == "forward") out.direction = Direction::Forward;
    else if (dir == "backward") out.direction = Direction::Backward;
    else fail("direction", "expected \"forward\" or \"backward\"");
  }
  auto vertex = [&](const char* key) { return as_int(member(root, key, "root"), key); };
  if (t == "general") {
    GeneralSurgery g;
    g.h_vertices = int_list(member(root, "h", "root"), "h");
    g.e1 = as_edge(member(root, "e1", "root"), "e1");
    g.e2 = as_edge(member(root, "e2", "root"), "e2");
    out.op = g;
  } else if (t == "I") {
    out.op = SurgeryI{vertex("v1"), vertex("v2"), vertex("v3"), vertex("v4"), vertex("p"), vertex("q")};
  } else if (t == "II") {
    out.op = SurgeryII{vertex("v1"), vertex("v2"), vertex("v3"), vertex("v4"),
                       vertex("p"),  vertex("q"),  vertex("r"),  vertex("s")};
  } else {
    fail("type", "expected \"general\", \"I\" or \"II\"");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tensegrity
