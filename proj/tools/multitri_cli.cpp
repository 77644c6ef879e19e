// multitri-cli: enumerate, verify, render and flip multitriangulations.
//
// Exit codes: 0 ok, 1 assertion or structure failure, 2 usage or malformed
// input, 3 over the enumeration budget.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "multitri/bijection.hpp"
#include "multitri/complex.hpp"
#include "multitri/conjecture.hpp"
#include "multitri/errors.hpp"
#include "multitri/flip.hpp"
#include "multitri/io.hpp"
#include "multitri/pipedream.hpp"

using namespace multitri;
using nlohmann::json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Usage("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Usage("cannot write " + path);
  out << text;
}

EnumerationOptions options_from(int max_n, unsigned threads) {
  EnumerationOptions o;
  o.max_n = max_n;
  o.search.threads = threads;
  return o;
}

// Assertion suites print a verdict line and a JSON report; a false verdict
// exits 1 with the offending instance.
struct Verdict {
  bool ok = true;
  std::string line;
  json report = json::object();
};

int finish(const Verdict& v) {
  std::cout << (v.ok ? "" : "FAILED: ") << v.line << "\n" << v.report.dump(2) << "\n";
  return v.ok ? 0 : kExitFailure;
}

Verdict suite_counts(int n, int k, const EnumerationOptions& opts) {
  Verdict v;
  const auto ts = enumerate_cylinder(SurfaceDesc::cylinder(n, k), opts);
  const CountReport expected{n - 1, 2 * (n - 1), 2 * (2 * n - 1)};
  for (const auto& t : ts) {
    try {
      count_report(t);
    } catch (const Error& e) {
      v.ok = false;
      v.line = e.what();
      const auto c = observed_counts(t);
      v.report = {{"witness", to_json(t)}, {"observed", {c.stars, c.relevant, c.total}}};
      return v;
    }
  }
  std::ostringstream os;
  os << "all " << ts.size() << " triangulations have (stars, relevant, total) = (" << expected.stars << ", "
     << expected.relevant << ", " << expected.total << ")";
  v.line = os.str();
  v.report = {{"suite", "counts"}, {"n", n}, {"k", k}, {"triangulations", ts.size()},
              {"counts", {expected.stars, expected.relevant, expected.total}}};
  return v;
}

Verdict suite_regularity(int n, const EnumerationOptions& opts) {
  Verdict v;
  const auto g = build_flip_graph(n, opts, FlipBackend::Both);
  const int degree = 2 * (n - 1);
  v.ok = g.is_regular(degree);
  if (v.ok) {
    v.line = "all degrees = " + std::to_string(degree);
  } else {
    for (std::size_t i = 0; i < g.degrees.size(); ++i) {
      if (g.degrees[i] != degree) {
        v.line = "vertex " + std::to_string(i) + " has degree " + std::to_string(g.degrees[i]) + ", expected " +
                 std::to_string(degree);
        v.report["witness"] = to_json(g.vertices[i]);
        break;
      }
    }
  }
  v.report["suite"] = "regularity";
  v.report["n"] = n;
  v.report["vertices"] = g.vertices.size();
  v.report["edges"] = g.edges.size();
  v.report["components"] = g.component_count();
  return v;
}

Verdict suite_pseudomanifold(int n, int k, const EnumerationOptions& opts) {
  Verdict v;
  const auto r = analyze_complex(n, k, opts);
  v.ok = r.is_pure && r.is_weak_pseudomanifold;
  if (v.ok) {
    v.line = "pure of facet size " + std::to_string(r.facet_dimension) + "; every ridge in 2 facets";
  } else if (!r.is_pure) {
    v.line = "facet sizes range from " + std::to_string(r.min_facet_size) + " to " + std::to_string(r.max_facet_size);
  } else {
    v.line = "some ridge does not lie in exactly 2 facets";
  }
  v.report = to_json(r);
  v.report["suite"] = "pseudomanifold";
  return v;
}

Verdict suite_pipedreams(int n, int k, const EnumerationOptions& opts) {
  Verdict v;
  const auto ts = enumerate_cylinder(SurfaceDesc::cylinder(n, k), opts);
  for (const auto& c : ts) {
    const auto t = phi(c).inner;
    const auto chevron = chevron_from_staircase(staircase_from_triangulation(t));
    const auto trace = trace_pipes(chevron);
    std::string problem;
    if (!trace.each_pair_once()) problem = "some pipe pair does not cross exactly once";
    else if (!is_n_periodic(chevron, n)) problem = "chevron is not " + std::to_string(n) + "-periodic";
    else if (!is_reflection_symmetric(chevron)) problem = "chevron is not reflection symmetric";
    else if (!(triangulation_from_pipedream(chevron) == t)) problem = "chevron does not decode to its triangulation";
    if (!problem.empty()) {
      v.ok = false;
      v.line = problem;
      v.report = {{"witness", to_json(c)}, {"chevron", render_ascii(chevron)}};
      return v;
    }
  }
  v.line = "all " + std::to_string(ts.size()) + " chevrons: pipes cross once, periodic, symmetric";
  v.report = {{"suite", "pipedreams"}, {"n", n}, {"k", k}, {"triangulations", ts.size()}};
  return v;
}

int suite_conjectures(int n, int k, const EnumerationOptions& opts) {
  json reports = json::array();
  auto add = [&](const LabReport& r) {
    std::cout << r.check << " n=" << n << " k=" << k << ": " << (r.holds() ? "holds" : "fails") << " on "
              << r.instances - r.failures << "/" << r.instances << (r.control ? " (control)" : "") << "\n";
    reports.push_back(r.to_json());
  };
  add(check_star_decomposition_k(n, k, opts));
  add(check_bijection_k(n, k, opts));
  add(check_counts_k(n, k, opts));
  if (k == 2) add(check_translation_lemma(n, k, opts));
  std::cout << reports.dump(2) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, int n, int k, const EnumerationOptions& opts) {
  if (suite == "conjectures") return suite_conjectures(n, k, opts);
  if (k != 2) throw Usage("suite '" + suite + "' covers k=2; use --suite conjectures for other orders");
  if (suite == "counts") return finish(suite_counts(n, k, opts));
  if (suite == "regularity") return finish(suite_regularity(n, opts));
  if (suite == "pseudomanifold") return finish(suite_pseudomanifold(n, k, opts));
  return finish(suite_pipedreams(n, k, opts));
}

PolygonTriangulation polygon_of(const AnyTriangulation& t) {
  if (const auto* p = std::get_if<PolygonTriangulation>(&t)) {
    validate(*p);
    return *p;
  }
  const auto& c = std::get<CylinderTriangulation>(t);
  validate(c);
  return phi(c).inner;
}

int cmd_pipedream(const std::string& input, const std::string& shape, const std::string& format,
                  const std::string& out) {
  const auto t = polygon_of(parse_triangulation(read_input(input)));
  PipeDream p = staircase_from_triangulation(t);
  if (shape == "chevron") p = chevron_from_staircase(p);
  if (format == "ascii") write_output(render_ascii(p), out);
  else if (format == "svg") write_output(render_svg(p), out);
  else write_output(to_json(p).dump(2) + "\n", out);
  return 0;
}

std::pair<int, int> parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Usage("--edge expects a,b");
  try {
    std::size_t used_a = 0, used_b = 0;
    const int a = std::stoi(text.substr(0, comma), &used_a);
    const int b = std::stoi(text.substr(comma + 1), &used_b);
    if (used_a != comma || used_b != text.size() - comma - 1) throw Usage("--edge expects a,b");
    return {a, b};
  } catch (const std::logic_error&) {
    throw Usage("--edge expects a,b");
  }
}

int cmd_flip(const std::string& input, const std::string& edge_text) {
  const auto [a, b] = parse_edge(edge_text);
  if (a == b) throw Usage("--edge needs two distinct vertices");
  const auto t = parse_triangulation(read_input(input));
  if (const auto* c = std::get_if<CylinderTriangulation>(&t)) {
    validate(*c);
    const auto f = orbit_flip(*c, EdgeClass::of(Edge(a, b), c->surface.n));
    std::cout << to_json(f.result).dump() << "\n";
    std::cerr << "flipped to [" << f.added.rep.a << "," << f.added.rep.b << "]\n";
  } else {
    const auto& p = std::get<PolygonTriangulation>(t);
    validate(p);
    const auto [result, added] = polygon_flip(p, Edge(a, b));
    std::cout << to_json(result).dump() << "\n";
    std::cerr << "flipped to [" << added.a << "," << added.b << "]\n";
  }
  return 0;
}

int cmd_flip_graph(int n, const std::string& format, const std::string& out, const EnumerationOptions& opts) {
  const auto g = build_flip_graph(n, opts);
  write_output(format == "dot" ? to_dot(g) : to_json(g).dump(2) + "\n", out);
  return 0;
}

int cmd_enumerate(const std::string& surface, int n, int k, const std::string& format, const std::string& out,
                  const EnumerationOptions& opts) {
  std::size_t count = 0;
  json all = json::array();
  if (surface == "polygon") {
    const auto desc = SurfaceDesc::polygon(n, k);
    check_polygon_budget(desc, opts);
    const PolygonSpace space(desc);
    const auto masks = enumerate_polygon_masks(space, opts);
    count = masks.size();
    if (format == "json")
      for (Mask m : masks) all.push_back(to_json(space.triangulation(m)));
  } else {
    const auto ts = enumerate_cylinder(SurfaceDesc::cylinder(n, k), opts);
    count = ts.size();
    if (format == "json")
      for (const auto& t : ts) all.push_back(to_json(t));
  }
  write_output(format == "count" ? std::to_string(count) + "\n" : all.dump() + "\n", out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate, verify, render and flip multitriangulations of polygons and half-cylinders"};
  app.require_subcommand(1);
  int max_n = 0;
  unsigned threads = 0;
  app.add_option("--max-n", max_n, "Enumeration budget override (0 = default, negative = none)");
  app.add_option("--threads", threads, "Worker threads for enumeration (0 = all cores)");

  std::string surface, enum_format, pipe_format, graph_format, out, suite, input, shape, edge;
  int n = 0, k = 2;

  auto* enumerate = app.add_subcommand("enumerate", "List all k-triangulations of a surface");
  enumerate->add_option("--surface", surface)->required()->check(CLI::IsMember({"polygon", "cylinder"}));
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--format", enum_format, "json or count")->check(CLI::IsMember({"json", "count"}))->default_val("json");
  enumerate->add_option("--out", out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run a verification suite on the half-cylinder");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"counts", "regularity", "pseudomanifold", "pipedreams", "conjectures"}));
  verify->add_option("--n", n)->required();
  verify->add_option("--k", k)->required();

  auto* pipedream = app.add_subcommand("pipedream", "Draw the pipe dream of a triangulation");
  pipedream->add_option("--input", input, "Triangulation JSON (- for stdin)")->required();
  pipedream->add_option("--shape", shape)->check(CLI::IsMember({"staircase", "chevron"}))->default_val("staircase");
  pipedream->add_option("--format", pipe_format)->check(CLI::IsMember({"ascii", "svg", "json"}))->default_val("ascii");
  pipedream->add_option("--out", out, "Output file (default stdout)");

  auto* flip = app.add_subcommand("flip", "Flip one relevant edge (the whole orbit on the cylinder)");
  flip->add_option("--input", input, "Triangulation JSON (- for stdin)")->required();
  flip->add_option("--edge", edge, "Edge as a,b")->required();

  auto* flip_graph = app.add_subcommand("flip-graph", "Flip graph of 2-triangulations of C_n");
  flip_graph->add_option("--n", n)->required();
  flip_graph->add_option("--format", graph_format)->check(CLI::IsMember({"dot", "json"}))->default_val("dot");
  flip_graph->add_option("--out", out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto opts = options_from(max_n, threads);
  try {
    if (*enumerate) return cmd_enumerate(surface, n, k, enum_format, out, opts);
    if (*verify) return cmd_verify(suite, n, k, opts);
    if (*pipedream) return cmd_pipedream(input, shape, pipe_format, out);
    if (*flip) return cmd_flip(input, edge);
    if (*flip_graph) return cmd_flip_graph(n, graph_format, out, opts);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ErrorCode::TooLarge) return kExitBudget;
    if (e.code() == ErrorCode::InvalidInput) return kExitUsage;
    return kExitFailure;
  }
  return kExitUsage;
}
