#include "tensegrity/cli.hpp"

#include "tensegrity/catalog.hpp"
#include "tensegrity/io.hpp"
#include "tensegrity/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <numeric>

namespace tensegrity {

namespace {

struct Options {
  std::uint64_t seed = 1;
  int samples = 3;
  std::vector<std::string> files;
  std::optional<int> dim;
  std::optional<std::string> graph_name;
  std::string output;
  std::string catalog_name;
};

std::string edge_name(const Edge& e) { return "{" + std::to_string(e.a) + "," + std::to_string(e.b) + "}"; }

std::string edge_list(const std::vector<Edge>& edges) {
  std::string s;
  for (std::size_t i = 0; i < edges.size(); ++i) s += (i ? " " : "") + edge_name(edges[i]);
  return s;
}

// Positive multiple with coprime integer entries; signs are preserved.
Vector primitive(const Vector& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
  for (const auto& x : v) g = gcd(g, mpz_class(x.get_num()));
  if (g == 0) return v;
  Vector out;
  for (const auto& x : v) out.push_back(Rational(x * l / g));
  return out;
}

std::string join_values(const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

void print_sign_matrix(std::ostream& out, const SignMatrix& m) {
  for (int i = 1; i <= m.n(); ++i) {
    out << " ";
    for (int j = 1; j <= m.n(); ++j) out << ' ' << sign_char(m.at(i, j));
    out << "\n";
  }
}

void print_stress(std::ostream& out, const std::string& key, const Stress& w) {
  out << key << ":";
  for (const auto& [e, t] : w.tensions()) out << " " << edge_name(e) << "=" << to_string(t);
  out << "\n";
}

FrameworkFile load_framework(const std::string& path) { return parse_framework(read_file(path)); }

Stress stress_or_first_basis(const FrameworkFile& file, const Framework& f) {
  if (file.stress) {
    Stress w = Stress::zero(f.graph);
    for (const auto& [e, t] : file.stress->tensions()) w.set(e, t);
    return w;
  }
  const auto space = self_stress_space(f);
  return space.dim() ? space.basis.front() : Stress::zero(f.graph);
}

int cmd_stress(const Options& o, std::ostream& out) {
  const FrameworkFile file = load_framework(o.files.at(0));
  const Framework f = file.framework();
  const SelfStressSpace space = self_stress_space(f);
  out << "dim = " << space.dim() << "\n";
  out << "edges = " << edge_list(space.edge_order) << "\n";
  for (std::size_t k = 0; k < space.dim(); ++k) {
    const Vector v = space.basis[k].to_vector(space.edge_order);
    out << "basis[" << k + 1 << "] = " << join_values(v) << "\n";
    out << "basis_integer[" << k + 1 << "] = " << join_values(primitive(v)) << "\n";
    out << "signs[" << k + 1 << "] =\n";
    print_sign_matrix(out, sign_matrix(space.basis[k], f.n()));
  }
  if (file.stress) {
    const bool ok = is_self_stress(f, *file.stress);
    out << "given_stress_is_self_stress = " << (ok ? "yes" : "no") << "\n";
    if (ok) {
      out << "given_signs =\n";
      print_sign_matrix(out, sign_matrix(*file.stress, f.n()));
    }
  }
  return 0;
}

int cmd_signs(const Options& o, std::ostream& out) {
  const Framework f = load_framework(o.files.at(0)).framework();
  const Fingerprint fp = fingerprint(f);
  out << "edges = " << edge_list(fp.edge_order) << "\n";
  out << "symbols = " << fp.symbols.size() << "\n";
  out << format_fingerprint(fp);
  out << "visible = " << (visible(fp) ? "yes" : "no") << "\n";
  return 0;
}

int cmd_same_stratum(const Options& o, std::ostream& out) {
  const Framework f1 = load_framework(o.files.at(0)).framework();
  const Framework f2 = load_framework(o.files.at(1)).framework();
  if (f1.graph != f2.graph) throw InputError("graph mismatch: both frameworks must have the same graph");
  const bool same = fiber_equivalent(f1, f2);
  out << "criterion = equal sets of realized stratum symbols (sign-preserving fiber equivalence)\n";
  out << "fiber-equivalent: " << (same ? "yes" : "no") << "\n";
  return same ? 0 : 1;
}

int cmd_tc(const Options& o, std::ostream& out) {
  Graph g;
  int d = o.dim.value_or(2);
  if (o.graph_name) {
    auto entry = catalog_lookup(*o.graph_name);
    if (!entry) throw InputError("unknown catalog entry " + *o.graph_name);
    g = entry->graph;
    if (!o.dim) d = entry->d;
  } else {
    if (o.files.empty()) throw InputError("tc needs a graph file or --graph");
    const FrameworkFile file = load_framework(o.files.at(0));
    g = file.graph;
    if (!o.dim) d = file.d;
  }
  if (o.samples < 1) throw InputError("--samples must be at least 1");
  if (d < 1) throw InputError("--dim must be positive");
  const TcReport r = tau_report(g, d, o.samples, o.seed, default_witnesses(g.vertex_count()));
  const BoundCheck b = bound_check(g, d);
  out << "n = " << g.vertex_count() << "\n";
  out << "edges = " << g.edge_count() << "\n";
  out << "d = " << d << "\n";
  out << "samples = " << o.samples << "\n";
  out << "seed = " << o.seed << "\n";
  out << "generic_dim = " << r.generic_dim << "\n";
  out << "lower_bound = " << b.lower_bound << "\n";
  if (b.predicted) out << "predicted = " << *b.predicted << "\n";
  if (r.positive) {
    out << "tau = " << r.generic_dim << "\n";
  } else if (r.witness_name) {
    out << "tau ≤ 0; witness: " << *r.witness_name << " → tau = 0\n";
    out << "witness_condition = " << *r.witness_description << "\n";
    out << "witness_configuration =";
    for (const auto& p : r.witness_configuration->points) out << " (" << to_string(p[0]) << "," << to_string(p[1]) << ")";
    out << "\n";
  } else {
    out << "tau ≤ 0\n";
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const FrameworkFile file = load_framework(o.files.at(0));
  const Framework f = file.framework();
  const Stress w = stress_or_first_basis(file, f);
  const auto atoms = decompose(f, w);
  out << "atoms = " << atoms.size() << "\n";
  Stress sum;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    const auto& a = atoms[k];
    out << "atom[" << k + 1 << "] support = {";
    for (std::size_t i = 0; i < a.support.size(); ++i) out << (i ? "," : "") << a.support[i];
    out << "} coefficient = " << to_string(a.coefficient) << "\n";
    print_stress(out, "atom[" + std::to_string(k + 1) + "] tensions", a.weighted());
    sum += a.weighted();
  }
  const bool match = sum.same_values(w);
  out << "sum_matches_input = " << (match ? "yes" : "no") << "\n";
  return match ? 0 : 1;
}

std::string direction_name(Direction d) { return d == Direction::Forward ? "forward" : "backward"; }

template <typename Spec, typename Apply>
int run_named_surgery(const Spec& spec, Direction dir, const char* kind, const FrameworkFile& file, Apply apply, std::ostream& out) {
  const Framework g = file.framework();
  const bool forward = dir == Direction::Forward;
  // Surgery I moves side 2 to side 1 forward; Surgery II moves side 1 to 2.
  const bool i_kind = std::string(kind) == "I";
  const int from = (i_kind == forward) ? 2 : 1;
  const SideFramework source = surgery_side(g, spec, from);
  const SideFramework target = surgery_side(g, spec, 3 - from);
  std::vector<Stress> inputs;
  if (file.stress) inputs.push_back(*file.stress);
  else
    for (const auto& b : self_stress_space(source.framework).basis) inputs.push_back(source.lift(b));

  out << "surgery: " << kind << " " << direction_name(dir) << "\n";
  out << "source_dim: " << self_stress_dim(source.framework) << "\n";
  out << "target_dim: " << self_stress_dim(target.framework) << "\n";
  bool all_ok = true;
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const SurgeryResult r = apply(g, spec, dir, inputs[k]);
    const bool ok = is_self_stress(r.target.framework, r.target.restrict(r.stress));
    const Direction back = forward ? Direction::Backward : Direction::Forward;
    const bool round = apply(g, spec, back, r.stress).stress.same_values(inputs[k]);
    print_stress(out, "transported[" + std::to_string(k + 1) + "]", r.stress);
    out << "self_stress[" << k + 1 << "]: " << (ok ? "yes" : "no") << "\n";
    out << "round_trip[" << k + 1 << "]: " << (round ? "identity" : "differs") << "\n";
    all_ok = all_ok && ok && round;
  }
  return all_ok ? 0 : 1;
}

int cmd_surgery(const Options& o, std::ostream& out) {
  const SurgerySpec spec = parse_surgery_spec(read_file(o.files.at(0)));
  const FrameworkFile file = load_framework(o.files.at(1));
  if (auto* g = std::get_if<GeneralSurgery>(&spec.op)) {
    const Framework full = file.framework();
    if (!file.stress) throw InputError("general surgery needs a stress on G - e1 in the framework file");
    const Stress result = general_surgery(full, *g, *file.stress);
    out << "surgery: general\n";
    print_stress(out, "transported", result);
    return 0;
  }
  if (auto* s1 = std::get_if<SurgeryI>(&spec.op))
    return run_named_surgery(*s1, spec.direction, "I", file,
                             [](const Framework& g, const SurgeryI& s, Direction d, const Stress& w) { return surgery_I(g, s, d, w); }, out);
  return run_named_surgery(std::get<SurgeryII>(spec.op), spec.direction, "II", file,
                           [](const Framework& g, const SurgeryII& s, Direction d, const Stress& w) { return surgery_II(g, s, d, w); }, out);
}

int cmd_condition(const Options& o, std::ostream& out) {
  const ConditionFile system = parse_condition(read_file(o.files.at(0)));
  const PointsFile points = parse_points(read_file(o.files.at(1)));
  if (static_cast<int>(points.size()) != system.base_count)
    throw InputError("expected " + std::to_string(system.base_count) + " points, got " + std::to_string(points.size()));
  const EvaluationResult r = evaluate_system(system, points);
  out << "conditional_number: " << system.conditional_number() << "\n";
  for (std::size_t k = 0; k < r.auxiliaries.size(); ++k) {
    out << "auxiliary " << system.auxiliaries[k].name << ": ";
    if (r.auxiliaries[k]) {
      const auto& c = r.auxiliaries[k]->coords();
      out << "(" << to_string(c[0]) << " : " << to_string(c[1]) << " : " << to_string(c[2]) << ")\n";
    } else {
      out << "not a single point\n";
    }
  }
  for (const auto& line : r.trace) out << "condition " << line << "\n";
  out << (r.satisfied ? "satisfied" : "not satisfied") << "\n";
  return r.satisfied ? 0 : 1;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : catalog_list())
    out << e.name << " [" << to_string(e.provenance) << "] d=" << e.d << ": " << e.description << "\n";
  return 0;
}

int cmd_catalog_verify(const Options& o, std::ostream& out) {
  std::vector<CatalogEntry> entries;
  if (o.catalog_name.empty()) {
    entries = catalog_list();
  } else {
    auto e = catalog_lookup(o.catalog_name);
    if (!e) throw InputError("unknown catalog entry " + o.catalog_name);
    entries.push_back(std::move(*e));
  }
  bool all = true;
  for (const auto& e : entries) {
    const VerifyReport r = verify(e, o.seed, o.samples);
    for (const auto& c : r.claims)
      out << "claim " << e.name << ": " << c.claim << ": " << (c.pass ? "PASS" : "FAIL")
          << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    for (const auto& line : r.labeling_search) out << "labeling " << e.name << ": " << line << "\n";
    out << e.name << ": " << r.status() << "\n";
    all = all && r.pass();
  }
  return all ? 0 : 1;
}

int cmd_render(const Options& o, std::ostream& out) {
  const FrameworkFile file = load_framework(o.files.at(0));
  if (file.d != 2) throw InputError("render supports d=2 only");
  const Framework f = file.framework();
  const std::string svg = render_svg(f, stress_or_first_basis(file, f));
  if (o.output.empty()) {
    out << svg;
  } else {
    std::ofstream os(o.output, std::ios::binary);
    if (!os) throw InputError("cannot write " + o.output);
    os << svg;
    out << "wrote " << o.output << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact tensegrity workbench"};
  app.name("tensegrity");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed of the deterministic generator")->capture_default_str();
  app.add_option("--samples", o.samples, "Random configurations per generic test")->capture_default_str();

  auto files = [&](CLI::App* sub, const char* what, int count) {
    sub->add_option("files", o.files, what)->required()->expected(count);
  };
  auto* stress = app.add_subcommand("stress", "Self-stress space of a framework");
  files(stress, "Framework file", 1);
  auto* signs = app.add_subcommand("signs", "Realized stratum symbols");
  files(signs, "Framework file", 1);
  auto* same = app.add_subcommand("same-stratum", "Fiber equivalence of two frameworks on one graph");
  files(same, "Two framework files", 2);
  auto* tc = app.add_subcommand("tc", "Tensegrity characteristic of a graph");
  tc->add_option("file", o.files, "Graph or framework file")->expected(0, 1);
  tc->add_option("--dim", o.dim, "Ambient dimension (default: the file's d)");
  tc->add_option("--graph", o.graph_name, "Use the graph of a catalog entry");
  auto* dec = app.add_subcommand("decompose", "Write a self-stress as a sum of atoms");
  files(dec, "Framework file", 1);
  auto* surgery = app.add_subcommand("surgery", "Transport self-stresses through a surgery");
  surgery->require_subcommand(1);
  auto* surgery_apply = surgery->add_subcommand("apply", "Apply a surgery spec to a framework");
  files(surgery_apply, "Surgery spec and framework file", 2);
  auto* condition = app.add_subcommand("condition", "Geometric condition systems");
  condition->require_subcommand(1);
  auto* condition_eval = condition->add_subcommand("eval", "Evaluate a condition system at points");
  files(condition_eval, "Condition system and points file", 2);
  auto* catalog = app.add_subcommand("catalog", "Named graphs and their verified claims");
  catalog->require_subcommand(1);
  auto* catalog_ls = catalog->add_subcommand("list", "List catalog entries");
  auto* catalog_verify = catalog->add_subcommand("verify", "Verify one entry or all");
  catalog_verify->add_option("name", o.catalog_name, "Entry name");
  auto* render = app.add_subcommand("render", "Draw a planar tensegrity as SVG");
  files(render, "Framework file", 1);
  render->add_option("-o,--output", o.output, "Output path (default: standard output)");

  for (auto* sub : {stress, signs, same, tc, dec, surgery, surgery_apply, condition, condition_eval, catalog, catalog_ls,
                    catalog_verify, render})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*stress) return cmd_stress(o, out);
    if (*signs) return cmd_signs(o, out);
    if (*same) return cmd_same_stratum(o, out);
    if (*tc) return cmd_tc(o, out);
    if (*dec) return cmd_decompose(o, out);
    if (*surgery_apply) return cmd_surgery(o, out);
    if (*condition_eval) return cmd_condition(o, out);
    if (*catalog_ls) return cmd_catalog_list(out);
    if (*catalog_verify) return cmd_catalog_verify(o, out);
    if (*render) return cmd_render(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace tensegrity
