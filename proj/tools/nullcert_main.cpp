#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nullcert/dual.hpp"
#include "nullcert/groebner.hpp"
#include "nullcert/json_io.hpp"
#include "nullcert/ordering.hpp"
#include "nullcert/primal.hpp"

using namespace nullcert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 10;
constexpr int kExitConstruction = 20;
constexpr int kExitUsage = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_path;
  int k = 3;
  int d = 0;
  int dmax = 4;
  std::string field;
  std::string out;
  std::string ordering = "greedy";
  std::string subgraph = "all";
  bool serial = false;
};

Graph load_graph(const std::string& path) {
  try {
    return read_dimacs_file(path);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const GraphError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

FieldSpec field_for(const Options& o, FieldSpec fallback) {
  FieldSpec spec = fallback;
  if (!o.field.empty()) {
    try {
      spec = FieldSpec::parse(o.field);
    } catch (const FieldError& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  if (!spec.supports_colors(o.k))
    throw UsageError("--field " + spec.to_string() + ": characteristic divides k=" + std::to_string(o.k));
  return spec;
}

void check_k(const Options& o) {
  if (o.k < 2) throw UsageError("--k must be at least 2, got " + std::to_string(o.k));
  if (o.d < 0) throw UsageError("--d must be non-negative, got " + std::to_string(o.d));
  if (o.dmax < 0) throw UsageError("--dmax must be non-negative, got " + std::to_string(o.dmax));
}

// JSON goes to --out; "-" means standard output.
void emit_json(const Options& o, const Json& j) {
  if (o.out.empty()) return;
  if (o.out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << j.dump(2) << '\n';
}

std::ostream& report(const Options& o) { return o.out == "-" ? std::cerr : std::cout; }

VertexOrdering ordering_for(const Options& o, const Graph& g) {
  if (o.ordering == "greedy") return greedy_ordering(g);
  if (o.ordering == "identity") return VertexOrdering::identity(g.num_vertices());
  if (o.ordering.rfind("file:", 0) == 0) {
    const auto path = o.ordering.substr(5);
    std::ifstream in(path);
    if (!in) throw UsageError("--ordering: cannot read " + path);
    std::vector<Vertex> labels{0};
    Vertex v = 0;
    while (in >> v) labels.push_back(v);
    if (!in.eof()) throw UsageError("--ordering: " + path + ": expected integers");
    if (static_cast<int>(labels.size()) - 1 != g.num_vertices())
      throw UsageError("--ordering: " + path + " lists " + std::to_string(labels.size() - 1) + " labels for " +
                       std::to_string(g.num_vertices()) + " vertices");
    try {
      return VertexOrdering::from_new_labels(std::move(labels));
    } catch (const GraphError& e) {
      throw UsageError(std::string("--ordering: ") + e.what());
    }
  }
  throw UsageError("--ordering must be greedy, identity or file:<path>, got " + o.ordering);
}

Edge parse_edge(const std::string& text, const Graph& g, const std::string& where) {
  Vertex u = 0, v = 0;
  char dash = 0;
  std::istringstream in(text);
  if (!(in >> u >> dash >> v) || dash != '-' || !in.eof()) throw UsageError(where + ": expected u-v, got '" + text + "'");
  if (!g.has_edge(u, v)) throw UsageError(where + ": " + text + " is not an edge of the graph");
  return Edge::of(u, v);
}

Subgraph subgraph_for(const Options& o, const Graph& g) {
  Subgraph h = whole_graph(g);
  if (o.subgraph == "all") return h;
  if (o.subgraph.rfind("drop:", 0) == 0) {
    std::istringstream list(o.subgraph.substr(5));
    std::string item;
    while (std::getline(list, item, ',')) {
      const Edge e = parse_edge(item, g, "--subgraph");
      std::erase(h.edges, e);
    }
    return h;
  }
  std::ifstream in(o.subgraph);
  if (!in) throw UsageError("--subgraph: cannot read " + o.subgraph);
  h.edges.clear();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Vertex u = 0, v = 0;
    if (!(ls >> u >> v)) throw UsageError(o.subgraph + ": line " + std::to_string(lineno) + ": expected 'u v'");
    if (!g.has_edge(u, v))
      throw UsageError(o.subgraph + ": line " + std::to_string(lineno) + ": " + std::to_string(u) + "-" +
                       std::to_string(v) + " is not an edge of the graph");
    h.edges.push_back(Edge::of(u, v));
  }
  std::sort(h.edges.begin(), h.edges.end());
  h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
  return h;
}

int cmd_stats(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto coloring = greedy_coloring(g);
  const auto order = ordering_for(o, g);
  const auto girth_value = girth(g);
  std::cout << "vertices " << g.num_vertices() << '\n';
  std::cout << "edges " << g.num_edges() << '\n';
  std::cout << "girth " << (girth_value ? std::to_string(*girth_value) : "infinite") << '\n';
  std::cout << "max_degree " << g.max_degree() << '\n';
  std::cout << "greedy_colors " << coloring.num_colors << '\n';
  std::cout << "ordering " << o.ordering << '\n';
  std::cout << "longest_increasing_path " << longest_increasing_path(relabel(g, order)) << '\n';
  return kExitOk;
}

int cmd_bounds(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto b = degree_bounds(g, o.k);
  std::cout << "kollar " << b.kollar.get_str() << '\n';
  std::cout << "lazard " << b.lazard << '\n';
  std::cout << "note: a-priori bounds for the full-ring system; searches use the quotient ring and never cap at them\n";
  return kExitOk;
}

int cmd_primal(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto spec = field_for(o, FieldSpec::prime(smallest_prime_not_dividing(o.k)));
  return visit_field(spec, [&](auto field) {
    using F = decltype(field);
    const CertificateQuery<F> q{g, o.k, o.d, field, std::nullopt};
    const auto cert = find_certificate(q);
    if (!cert) {
      report(o) << "no certificate of degree <= " << o.d << " over " << field.name() << " (k=" << o.k << ")\n";
      return kExitNegative;
    }
    report(o) << "certificate of degree " << cert->degree << " over " << field.name() << " (k=" << o.k
              << ", quotient ring), verified\n";
    emit_json(o, certificate_to_json(*cert, field));
    return kExitOk;
  });
}

int cmd_mindeg(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto spec = field_for(o, FieldSpec::prime(smallest_prime_not_dividing(o.k)));
  return visit_field(spec, [&](auto field) {
    const auto r = min_certificate_degree(g, o.k, field, o.dmax);
    if (!r.degree) {
      report(o) << "NotFoundUpTo(" << o.dmax << ")\n";
      return kExitNegative;
    }
    report(o) << "minimal degree " << *r.degree << " over " << field.name() << " (k=" << o.k << ", quotient ring)\n";
    emit_json(o, certificate_to_json(*r.certificate, field));
    return kExitOk;
  });
}

int cmd_dual(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto spec = field_for(o, FieldSpec::prime(smallest_prime_not_dividing(o.k)));
  return visit_field(spec, [&](auto field) {
    const auto lambda = find_dual_certificate(g, o.k, o.d, field);
    if (!lambda) {
      report(o) << "no dual certificate at degree " << o.d << " over " << field.name() << " (a certificate exists)\n";
      return kExitNegative;
    }
    const bool ok = verify_dual_certificate(*lambda, g);
    report(o) << "dual certificate at degree " << o.d << " over " << field.name() << ", " << lambda->values.size()
              << " nonzero entries, " << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
    emit_json(o, dual_to_json(*lambda, ok));
    return ok ? kExitOk : kExitConstruction;
  });
}

int cmd_patch(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  if (o.k == 2) std::cerr << "warning: the patching construction is only established for k >= 3\n";
  const auto spec = field_for(o, FieldSpec::prime(smallest_prime_one_mod(o.k)));
  const auto order = ordering_for(o, g);
  const auto girth_value = girth(g);
  return visit_field(spec, [&](auto field) {
    const auto exec = o.serial ? Execution::serial : Execution::parallel;
    const auto r = patch_dual_certificate(g, o.k, o.d, field, order, exec);
    const bool hypothesis = !girth_value || o.d + o.k - 1 < static_cast<double>(*girth_value) / (4.0 * o.k);
    auto& out = report(o);
    out << "monomials " << r.monomials << '\n';
    out << "girth_hypothesis " << (hypothesis ? "holds" : "does not hold") << " (advisory)\n";
    if (!r.ok()) {
      out << "failure " << r.failure->to_string() << '\n';
      emit_json(o, Json{{"failure",
                         {{"kind", r.failure->kind_name()},
                          {"monomial", exponents_to_json(r.failure->monomial)},
                          {"row", r.failure->row},
                          {"detail", r.failure->detail}}}});
      return kExitConstruction;
    }
    out << "largest_essential_graph " << r.largest_essential_graph << '\n';
    out << "dual certificate verified, " << r.certificate->values.size() << " nonzero entries\n";
    emit_json(o, dual_to_json(*r.certificate, true));
    return kExitOk;
  });
}

int cmd_groebner(const Options& o) {
  const Graph g = load_graph(o.graph_path);
  const auto spec = field_for(o, FieldSpec::rationals());
  const Subgraph h = subgraph_for(o, g);
  return visit_field(spec, [&](auto field) {
    using F = decltype(field);
    const auto gb = buchberger(ColoringIdeal<F>::of(h, o.k, g.num_vertices(), field));
    std::ostringstream text;
    for (const auto& line : leading_monomial_report(gb.leading_monomials())) text << line << '\n';
    if (o.out.empty() || o.out == "-") {
      std::cout << text.str();
    } else {
      std::ofstream f(o.out);
      if (!f) throw UsageError("cannot write " + o.out);
      f << text.str();
      std::cout << gb.polynomials.size() << " leading monomials written to " << o.out << '\n';
    }
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nullstellensatz certificates for graph coloring"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph_path, "DIMACS .col graph")->required();
    sub->add_option("--k", o.k, "number of colors")->capture_default_str();
  };
  auto add_field = [&](CLI::App* sub, const std::string& fallback) {
    sub->add_option("--field", o.field, "coefficient field gf:<p> or qq (default " + fallback + ")");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "JSON output path, - for stdout"); };

  auto* stats = app.add_subcommand("stats", "graph statistics and ordering summary");
  add_common(stats);
  stats->add_option("--ordering", o.ordering, "greedy, identity or file:<path>")->capture_default_str();

  auto* bounds = app.add_subcommand("bounds", "Kollar and Lazard degree bounds");
  add_common(bounds);

  auto* primal = app.add_subcommand("primal", "solve for a degree-d certificate");
  add_common(primal);
  primal->add_option("--d", o.d, "certificate degree")->capture_default_str();
  add_field(primal, "smallest prime not dividing k");
  add_out(primal);

  auto* mindeg = app.add_subcommand("mindeg", "smallest certificate degree up to --dmax");
  add_common(mindeg);
  mindeg->add_option("--dmax", o.dmax, "largest degree tried")->capture_default_str();
  add_field(mindeg, "smallest prime not dividing k");
  add_out(mindeg);

  auto* dual = app.add_subcommand("dual", "solve the dual system at degree d");
  add_common(dual);
  dual->add_option("--d", o.d, "certificate degree")->capture_default_str();
  add_field(dual, "smallest prime not dividing k");
  add_out(dual);

  auto* patch = app.add_subcommand("patch", "assemble a dual certificate from essential-graph solutions");
  add_common(patch);
  patch->add_option("--d", o.d, "certificate degree")->capture_default_str();
  patch->add_option("--ordering", o.ordering, "greedy, identity or file:<path>")->capture_default_str();
  patch->add_flag("--serial", o.serial, "run the local solves serially");
  add_field(patch, "smallest prime = 1 mod k");
  add_out(patch);

  auto* groebner = app.add_subcommand("groebner", "leading monomials of a coloring ideal's Groebner basis");
  add_common(groebner);
  groebner->add_option("--subgraph", o.subgraph, "all, drop:u-v[,u-v...] or a file of 'u v' lines")
      ->capture_default_str();
  add_field(groebner, "qq");
  add_out(groebner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    check_k(o);
    if (stats->parsed()) return cmd_stats(o);
    if (bounds->parsed()) return cmd_bounds(o);
    if (primal->parsed()) return cmd_primal(o);
    if (mindeg->parsed()) return cmd_mindeg(o);
    if (dual->parsed()) return cmd_dual(o);
    if (patch->parsed()) return cmd_patch(o);
    if (groebner->parsed()) return cmd_groebner(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
