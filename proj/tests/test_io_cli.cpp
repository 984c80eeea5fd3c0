#include <doctest.h>

#include "support.hpp"
#include "tensegrity/catalog.hpp"
#include "tensegrity/cli.hpp"
#include "tensegrity/io.hpp"
#include "tensegrity/svg.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace tensegrity;
namespace fs = std::filesystem;

namespace {

const char* kExample = R"({"d": 2, "vertices": [["0","0"],["1","0"],["2","2"],["0","1"]],
 "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]],
 "stress": [{"edge":[1,2],"tension":"6"},{"edge":[1,3],"tension":"-3"},{"edge":[1,4],"tension":"6"},
            {"edge":[2,3],"tension":"2"},{"edge":[2,4],"tension":"-4"},{"edge":[3,4],"tension":"2"}]})";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tensegrity_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = path / name;
    std::ofstream(p) << text;
    return p.string();
  }
};

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tensegrity");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string framework_json(const Framework& f, const std::optional<Stress>& w = std::nullopt) {
  FrameworkFile file;
  file.d = f.d();
  file.graph = f.graph;
  file.config = f.config;
  file.stress = w;
  return serialize_framework(file);
}

}  // namespace

TEST_CASE("framework files round-trip") {
  const FrameworkFile f = parse_framework(kExample);
  CHECK(f.d == 2);
  CHECK(f.graph == Graph::complete(4));
  REQUIRE(f.stress);
  CHECK(f.stress->get(Edge(2, 4)) == -4);
  const FrameworkFile again = parse_framework(serialize_framework(f));
  CHECK(again == f);

  const FrameworkFile graph_only = parse_framework(R"({"d": 2, "n": 3, "edges": [[1,2],[2,3]]})");
  CHECK_FALSE(graph_only.config);
  CHECK(parse_framework(serialize_framework(graph_only)) == graph_only);
  CHECK_THROWS_AS(graph_only.framework(), InputError);
}

TEST_CASE("framework parse errors") {
  CHECK_THROWS_WITH_AS(parse_framework(R"({"d": 2, "vertices": [["1.5","0"]]})"),
                       doctest::Contains("floating point forbidden"), InputError);
  CHECK_THROWS_WITH_AS(parse_framework(R"({"d": 2, "vertices": [[1.5, 0]]})"), doctest::Contains("floating point forbidden"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_framework("{\"d\": 2,\n  \"vertices\": [[\"0\" \"0\"]]}"),
                       doctest::Contains("line 2, column"), InputError);
  CHECK_THROWS_WITH_AS(parse_framework(R"({"d": 2, "vertices": [["0","0","0"]]})"), doctest::Contains("dimension mismatch"),
                       InputError);
  CHECK_THROWS_AS(parse_framework(R"({"d": 2, "vertices": [["0","0"]], "edges": [[1,2]]})"), InputError);
  CHECK_THROWS_AS(parse_framework(R"({"d": 2, "vertices": [["0","0"],["1","1"]], "edges": [[1,2]],
                                     "stress": [{"edge":[1,3],"tension":"1"}]})"),
                  InputError);
  CHECK_THROWS_AS(parse_framework(R"({"vertices": []})"), InputError);
}

TEST_CASE("condition files round-trip") {
  const ConditionSystem pascal = pascal_system();
  const ConditionFile parsed = parse_condition(serialize_condition(pascal));
  CHECK(parsed == pascal);
  ConditionSystem mixed;
  mixed.base_count = 5;
  mixed.conditions = {Coincide{1, 2}, Collinear{3, 4, 5}, IntersectionCondition{5, {1, 3, 2, 4}}};
  CHECK(parse_condition(serialize_condition(mixed)) == mixed);
  CHECK_THROWS_AS(parse_condition(R"({"base_count": 3, "conditions": [{"type": "meet", "indices": [1,2]}]})"), InputError);
  CHECK_THROWS_AS(parse_condition(R"({"base_count": 3, "auxiliaries": [{"name": "q", "lines": [1,2,3,4]}]})"), InputError);
}

TEST_CASE("points and surgery specs") {
  const auto pts = parse_points(R"({"points": [["1","2"], ["2","4","2"], ["1","0","0"]]})");
  REQUIRE(pts.size() == 3);
  CHECK(pts[0] == pts[1]);
  CHECK(pts[2].at_infinity());
  const auto spec = parse_surgery_spec(R"({"type": "I", "direction": "backward", "v1": 1, "v2": 2, "v3": 3, "v4": 4, "p": 5, "q": 6})");
  CHECK(spec.direction == Direction::Backward);
  CHECK(std::get<SurgeryI>(spec.op).q == 6);
  const auto general = parse_surgery_spec(R"({"type": "general", "h": [1,2,3,4], "e1": [2,1], "e2": [3,4]})");
  CHECK(std::get<GeneralSurgery>(general.op).e1 == Edge(1, 2));
  CHECK_THROWS_AS(parse_surgery_spec(R"({"type": "III"})"), InputError);
}

TEST_CASE("cli stress, signs and same-stratum") {
  TempDir tmp;
  const std::string ex = tmp.write("ex.json", kExample);
  auto r = run({"stress", ex});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim = 1\n") != std::string::npos);
  CHECK(r.out.find("basis_integer[1] = 6 -3 6 2 -4 2") != std::string::npos);

  const std::string empty = tmp.write("empty.json", R"({"d": 2, "vertices": [["0","0"],["1","0"]], "edges": []})");
  CHECK(run({"stress", empty}).out.find("dim = 0") != std::string::npos);

  const std::string bad = tmp.write("bad.json", R"({"d": 2, "vertices": [["1.5","0"]]})");
  r = run({"stress", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("floating point forbidden") != std::string::npos);

  r = run({"signs", ex});
  CHECK(r.code == 0);
  CHECK(r.out.find("symbols = 3") != std::string::npos);

  r = run({"same-stratum", ex, ex});
  CHECK(r.code == 0);
  CHECK(r.out.find("fiber-equivalent: yes") != std::string::npos);

  const std::string a = tmp.write("a.json", R"({"d": 1, "vertices": [["0"],["1"],["2"]], "edges": [[1,2],[1,3],[2,3]]})");
  const std::string b = tmp.write("b.json", R"({"d": 1, "vertices": [["0"],["0"],["1"]], "edges": [[1,2],[1,3],[2,3]]})");
  r = run({"same-stratum", a, b});
  CHECK(r.code == 1);
  CHECK(r.out.find("fiber-equivalent: no") != std::string::npos);

  const std::string other = tmp.write("c.json", R"({"d": 1, "vertices": [["0"],["1"],["2"]], "edges": [[1,2]]})");
  CHECK(run({"same-stratum", a, other}).code == 2);
}

TEST_CASE("cli tc") {
  TempDir tmp;
  auto r = run({"tc", "--graph", "k5_d2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tau = 3\n") != std::string::npos);

  r = run({"tc", "--graph", "k33_conic"});
  CHECK(r.out.find("tau ≤ 0; witness: conic → tau = 0") != std::string::npos);

  const std::string k4 = tmp.write("k4.json", R"({"d": 3, "n": 4, "edges": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]})");
  r = run({"tc", k4, "--dim", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("tau ≤ 0\n") != std::string::npos);

  // Global flags in either position; same seed, same bytes.
  const auto x = run({"--seed", "5", "tc", "--graph", "k33_conic"});
  const auto y = run({"tc", "--graph", "k33_conic", "--seed", "5"});
  CHECK(x.out == y.out);
  CHECK(x.out.find("seed = 5") != std::string::npos);
  CHECK(run({"tc", "--graph", "k5_d2", "--samples", "0"}).code == 2);
}

TEST_CASE("cli decompose and render") {
  TempDir tmp;
  const std::string ex = tmp.write("ex.json", kExample);
  auto r = run({"decompose", ex});
  CHECK(r.code == 0);
  CHECK(r.out.find("atoms = 1") != std::string::npos);
  CHECK(r.out.find("sum_matches_input = yes") != std::string::npos);

  const std::string svg_path = (tmp.path / "ex.svg").string();
  r = run({"render", ex, "-o", svg_path});
  CHECK(r.code == 0);
  const std::string svg = read_file(svg_path);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count("class=\"strut\"") == 4);
  CHECK(count("class=\"cable\"") == 2);
  CHECK(count("stroke-dasharray") == 2);
  CHECK(count("<text") == 4);
  CHECK(svg.find(">v4</text>") != std::string::npos);
  // Bounding box [0,2] x [-2,0] grown by 10% on each side.
  CHECK(svg.find("viewBox=\"-0.2 -2.2 2.4 2.4\"") != std::string::npos);

  const std::string zero = tmp.write("zero.json", R"({"d": 2, "vertices": [["0","0"],["1","0"],["0","1"]], "edges": [[1,2],[2,3]]})");
  const std::string zsvg = run({"render", zero}).out;
  CHECK(zsvg.find("stroke=\"red\"") == std::string::npos);
  CHECK(zsvg.find("stroke=\"blue\"") == std::string::npos);
  CHECK(zsvg.find("stroke=\"gray\"") != std::string::npos);

  const std::string one = tmp.write("one.json", R"({"d": 2, "vertices": [["3","4"]], "edges": []})");
  const std::string osvg = run({"render", one}).out;
  CHECK(osvg.find("<svg") == 0);
  CHECK(osvg.find(">v1</text>") != std::string::npos);
  CHECK(osvg.find("</svg>") != std::string::npos);

  const std::string spatial = tmp.write("s.json", R"({"d": 3, "vertices": [["0","0","0"]], "edges": []})");
  r = run({"render", spatial});
  CHECK(r.code == 2);
  CHECK(r.err.find("render supports d=2 only") != std::string::npos);
}

TEST_CASE("svg viewport for a single point") {
  const Framework f(Graph(1), Configuration(2, {{0, 0}}));
  const std::string svg = render_svg(f, Stress{});
  CHECK(svg.find("viewBox=\"-0.6 -0.6 1.2 1.2\"") != std::string::npos);
}

TEST_CASE("cli condition eval") {
  TempDir tmp;
  const std::string pascal = tmp.write("pascal.json", serialize_condition(pascal_system()));
  const std::string circle = tmp.write("circle.json", R"({"points": [["1","0"],["0","1"],["-1","0"],["0","-1"],["3/5","4/5"],["-4/5","3/5"]]})");
  auto r = run({"condition", "eval", pascal, circle});
  CHECK(r.code == 0);
  CHECK(r.out.find("\nsatisfied\n") != std::string::npos);
  const std::string off = tmp.write("off.json", R"({"points": [["1","0"],["0","1"],["-1","0"],["0","-1"],["3/5","4/5"],["-4/5","1/2"]]})");
  r = run({"condition", "eval", pascal, off});
  CHECK(r.code == 1);
  CHECK(r.out.find("not satisfied") != std::string::npos);
  const std::string few = tmp.write("few.json", R"({"points": [["1","0"]]})");
  CHECK(run({"condition", "eval", pascal, few}).code == 2);
}

TEST_CASE("cli catalog") {
  auto r = run({"catalog", "verify", "k33_conic"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k33_conic: PASS") != std::string::npos);
  CHECK(run({"catalog", "list"}).out.find("prism_g61 [derived-reconstruction]") != std::string::npos);
  CHECK(run({"catalog", "verify", "nope"}).code == 2);
}

TEST_CASE("cli surgery") {
  TempDir tmp;
  Lcg64 rng(1);
  const auto [g, spec] = testing_support::surgery_I_instance(rng);
  const std::string fw = tmp.write("g.json", framework_json(g));
  const std::string sp = tmp.write("spec.json", R"({"type": "I", "direction": "forward", "v1": 1, "v2": 2, "v3": 3, "v4": 4, "p": 5, "q": 6})");
  auto r = run({"surgery", "apply", sp, fw});
  CHECK(r.code == 0);
  CHECK(r.out.find("round_trip[1]: identity") != std::string::npos);

  auto pts = g.config.points;
  pts[5][0] += 1;  // q off the line v1v3
  const std::string moved = tmp.write("moved.json", framework_json(Framework(g.graph, Configuration(2, pts))));
  r = run({"surgery", "apply", sp, moved});
  CHECK(r.code == 2);
  CHECK(r.err.find("(q,v1,v3)") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"stress"}).code == 2);
  CHECK(run({"stress", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
