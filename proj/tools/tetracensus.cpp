// tetracensus: command-line front end for the BGCG constructions and tables.
//
// Exit codes: 0 success, 1 usage or operational error, 2 computed result
// disagrees with the expected one.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tetra.hpp"

namespace fs = std::filesystem;
using namespace tetra;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Options {
  std::optional<std::string> bound;
  unsigned jobs = 1;
  bool verify = false;
  std::string out;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const Options& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) return;
  fs::create_directories(o.out);
  std::ofstream f(fs::path(o.out) / name);
  if (!f) throw InvalidParameter("cannot write " + (fs::path(o.out) / name).string());
  f << text;
}

struct Input {
  Multigraph graph;
  std::optional<std::vector<Color>> color;
  std::string label;
};

/// A graph file in the text format, or a family shorthand string.
Input load_graph(const std::string& arg) {
  if (fs::is_regular_file(arg)) {
    auto p = parse_graph_text(read_file(arg));
    return {p.graph, p.color, arg};
  }
  return {make_family(arg), std::nullopt, arg};
}

std::optional<Order> parse_bound(const Options& o) {
  if (!o.bound) return std::nullopt;
  Order v = 0;
  for (char c : *o.bound) {
    if (c < '0' || c > '9') throw InvalidParameter("--bound must be a positive integer");
    v = checked_mul(v, 10) + static_cast<Order>(c - '0');
  }
  if (v == 0) throw InvalidParameter("--bound must be a positive integer");
  return v;
}

std::string names_of(const Multigraph& g) {
  auto all = identify_all(g);
  if (all.empty()) return "(no catalogue name)";
  std::string s;
  for (std::size_t i = 0; i < all.size(); ++i) s += (i ? " = " : "") + all[i];
  return s;
}

std::string yes(bool b) { return b ? "yes" : "no"; }

/// Moves a split from a reference instance onto an isomorphic input graph.
SplitInstance transport_split(const SplitInstance& ref, const Multigraph& g) {
  auto iso = are_isomorphic(ref.gamma.graph, g);
  if (!iso) throw InvalidParameter("graph is not isomorphic to the reference graph of this split");
  std::vector<Color> col(g.vertex_count());
  for (Point v = 0; v < g.vertex_count(); ++v) col[(*iso)[v]] = ref.gamma.color[v];
  ColoredGraph cg(g, col);
  auto moved = transport(ref.gamma.graph, ref.split, *iso);
  return {cg, make_split(cg, moved.classes)};
}

EdgePartition transport_partition(const Multigraph& ref, const EdgePartition& p, const Multigraph& g) {
  auto iso = are_isomorphic(ref, g);
  if (!iso) throw InvalidParameter("graph is not isomorphic to the reference graph of this partition");
  auto q = transport(ref, p, *iso);
  q.kind = p.kind;
  return q;
}

SplitInstance named_split(const std::string& name, const Input& in) {
  if (name == "fig1") return transport_split(c10_fig1_split(), in.graph);
  if (name == "fig2") return transport_split(r10_fig2_split(), in.graph);
  if (name == "delta1" || name == "delta2") {
    std::size_t n = in.graph.vertex_count() / 2;
    return transport_split(name == "delta1" ? wreath_delta1(n) : wreath_delta2(n), in.graph);
  }
  auto parsed = parse_partition_text(read_file(name));
  std::vector<Color> col;
  if (in.color) {
    col = *in.color;
  } else {
    auto b = bipartition(in.graph);
    if (!b) throw InvalidParameter("graph has no colouring and is not bipartite");
    col = *b;
  }
  ColoredGraph cg(in.graph, col);
  return {cg, make_split(cg, parsed.partition.classes)};
}

EdgePartition named_partition(const std::string& name, const Multigraph& g) {
  if (name == "sum") return transport_partition(make_family("K5"), k5_sum_pairing(), g);
  if (name == "heawood") return transport_partition(make_family("Heawood"), heawood_parallel_classes(), g);
  if (name == "c3c3") {
    C3C3Example ex;
    return transport_partition(ex.graph, ex.pairing, g);
  }
  if (name == "singleton") return singleton_partition(g);
  if (name.rfind("wreath:", 0) == 0) {
    int idx = std::stoi(name.substr(7));
    std::size_t n = g.vertex_count() / 2;
    return transport_partition(make_family(family(Wreath{n})), wreath_pairing(n, idx), g);
  }
  auto parsed = parse_partition_text(read_file(name));
  if (parsed.graph_hash != graph_hash(g)) std::cerr << "warning: partition was written for a different graph\n";
  return parsed.partition;
}

Perm conjugate_edges(const Perm& kappa, const Perm& iso, std::size_t vertices, std::size_t edges) {
  Perm phi = iso.restricted(vertices, edges);
  return phi.inverse() * kappa * phi;
}

// ---------------------------------------------------------------------------

int cmd_aut(const std::string& arg, const Options& o) {
  auto in = load_graph(arg);
  auto a = automorphism_group(in.graph);
  auto tr = transitivity_report(in.graph, in.color ? &*in.color : nullptr);
  std::cout << "graph " << in.label << "  vertices " << in.graph.vertex_count() << "  edges " << in.graph.edge_count()
            << "\n";
  std::cout << "order " << to_string(a.order()) << "\n";
  std::cout << "generators " << a.group.generators().size() << "\n";
  std::cout << "vertex-transitive " << yes(tr.vertex_transitive) << "\n";
  std::cout << "edge-transitive " << yes(tr.edge_transitive) << "\n";
  std::cout << "dart-transitive " << yes(tr.dart_transitive) << "\n";
  if (tr.color_aut_order) {
    std::cout << "colour-preserving order " << to_string(tr.color_aut_order) << "\n";
    std::cout << "bi-transitive " << yes(tr.bi_transitive) << "\n";
    std::cout << "semisymmetric " << yes(tr.semisymmetric) << "\n";
  }
  auto cert = canonical_certificate(in.graph);
  std::cout << "certificate " << cert.digest() << "\n";
  std::string gens;
  for (const auto& g : a.group.generators()) gens += g.to_string() + "\n";
  write_file(o, "generators.txt", gens);
  write_file(o, "certificate.txt", cert.hex() + "\n");
  if (o.verify) {
    PermGroup again(in.graph.domain_size(), a.group.generators());
    for (const auto& g : a.group.generators())
      if (!in.graph.is_automorphism(g)) return kMismatch;
    if (again.order() != a.order() || canonical_certificate(in.graph) != cert) return kMismatch;
    std::cout << "verify ok\n";
  }
  return kOk;
}

int cmd_dissect(const std::string& arg, const std::string& split, const Options& o) {
  auto in = load_graph(arg);
  auto s = named_split(split, in);
  auto r = base_and_connection(s.gamma, s.split);
  std::cout << "graph " << in.label << "  split " << split << "\n";
  std::cout << "dissection vertices " << r.dissection.x.vertex_count() << "  edges " << r.dissection.x.edge_count()
            << "\n";
  std::cout << "base " << names_of(r.base) << "\n";
  std::cout << "k " << r.copies << "\n";
  std::cout << "connection " << names_of(r.connection) << "\n";
  write_file(o, "dissection.graph", to_text(r.dissection.x));
  write_file(o, "mate.partition", to_text(r.dissection.m, r.dissection.x));
  if (o.verify) {
    auto back = bgcg(r.dissection.x, r.dissection.m);
    if (!are_isomorphic(back, s.gamma)) return kMismatch;
    std::cout << "verify ok\n";
  }
  return kOk;
}

int cmd_bgcg(const std::string& arg, const std::string& partition, const Options& o) {
  auto in = load_graph(arg);
  auto p = named_partition(partition, in.graph);
  auto q = bgcg_quotient(in.graph, p);
  auto rep = analyze(q.gamma.graph);
  auto tr = transitivity_report(q.gamma.graph, &q.gamma.color);
  std::cout << "graph " << in.label << "  partition " << partition << "\n";
  std::cout << "vertices " << rep.vertex_count << "  edges " << rep.edge_count << "\n";
  std::cout << "valences";
  for (auto [v, c] : rep.valences) std::cout << " " << v << "x" << c;
  std::cout << "\n";
  std::cout << "simple " << yes(rep.is_simple) << "  connected " << yes(rep.is_connected) << "\n";
  std::cout << "edge-transitive " << yes(tr.edge_transitive) << "  bi-transitive " << yes(tr.bi_transitive) << "\n";
  std::cout << "pairing " << yes(p.classes.size() * 2 == in.graph.edge_count() && is_pairing(in.graph, p)) << "\n";
  std::cout << "name " << names_of(q.gamma.graph) << "\n";
  std::cout << "certificate " << canonical_certificate(q.gamma.graph).digest() << "\n";
  write_file(o, "bgcg.graph", to_text(q.gamma));
  write_file(o, "split.partition", to_text(q.split, q.gamma.graph));
  if (o.verify) {
    auto d = dissect(q.gamma, q.split);
    if (partition_certificate(d.x, d.m) != partition_certificate(in.graph, p)) return kMismatch;
    std::cout << "verify ok\n";
  }
  return kOk;
}

int cmd_pairings(const std::string& arg, const Options& o) {
  auto in = load_graph(arg);
  auto ps = enumerate_pairings(in.graph, parse_bound(o));
  std::cout << "graph " << in.label << "  pairings " << ps.size() << "\n";
  int i = 0;
  for (const auto& p : ps) {
    ++i;
    auto k1 = bgcg(in.graph, p.pairing).graph;
    auto k2 = bgcg_k2(in.graph, push_from_pairing(in.graph, p.pairing)).graph;
    std::cout << "#" << i << "  |G| " << to_string(p.stabilizer_order);
    if (p.wreath_index) std::cout << "  catalogue P" << *p.wreath_index;
    std::cout << "\n  K1 " << names_of(k1) << "  [" << canonical_certificate(k1).digest() << "]\n";
    std::cout << "  K2 " << names_of(k2) << "  [" << canonical_certificate(k2).digest() << "]\n";
    write_file(o, "pairing" + std::to_string(i) + ".partition", to_text(p.pairing, in.graph));
    if (o.verify && !is_pairing(in.graph, p.pairing)) return kMismatch;
  }
  if (o.verify) std::cout << "verify ok\n";
  return kOk;
}

int cmd_push_check(const std::string& arg, const std::string& push, const Options& o) {
  auto in = load_graph(arg);
  const Multigraph& b = in.graph;
  Perm kappa;
  std::optional<PermGroup> h;
  std::optional<WreathPushExample> ex;
  if (push == "wreath-even") ex = wreath_push_even(b.vertex_count() / 2);
  if (push == "wreath-mod4") ex = wreath_push_mod4(b.vertex_count() / 2);
  if (push == "wreath-odd") ex = wreath_push_odd(b.vertex_count() / 2);
  if (ex) {
    auto iso = are_isomorphic(ex->base, b);
    if (!iso) throw InvalidParameter("graph is not the wreath graph of this push");
    kappa = conjugate_edges(ex->kappa, *iso, b.vertex_count(), b.edge_count());
    std::vector<Perm> gens;
    for (const auto& g : ex->h.generators()) gens.push_back(iso->inverse() * g * *iso);
    h = PermGroup(b.domain_size(), gens);
  } else if (push == "c3c3") {
    C3C3Example c;
    auto iso = are_isomorphic(c.graph, b);
    if (!iso) throw InvalidParameter("graph is not C3xC3");
    kappa = conjugate_edges(c.kappa, *iso, b.vertex_count(), b.edge_count());
    PermGroup rot = c.rotation_group();
    std::vector<Perm> gens;
    for (const auto& g : rot.generators()) gens.push_back(iso->inverse() * g * *iso);
    h = PermGroup(b.domain_size(), gens);
  } else if (push == "identity") {
    kappa = Perm::identity(b.edge_count());
  } else {
    auto parsed = parse_push_text(read_file(push), b.edge_count());
    if (!parsed.base_hash.empty() && parsed.base_hash != graph_hash(b))
      std::cerr << "warning: push was written for a different graph\n";
    kappa = parsed.kappa;
  }
  if (kappa.size() != b.edge_count()) throw InvalidParameter("push does not permute the edges of the graph");
  bool push_ok = is_push(b, kappa);
  std::cout << "graph " << in.label << "  push " << push << "\n";
  std::cout << "kappa " << kappa.to_cycle_string() << "\n";
  std::cout << "order " << kappa.order() << "\n";
  std::cout << "push " << yes(push_ok) << "\n";
  bool ok = push_ok;
  if (h) {
    auto r = corollary_check(b, kappa, *h);
    std::cout << "corollary: dart-transitive " << yes(r.dart_transitive) << "  normalized " << yes(r.normalized)
              << "  square in Aut " << yes(r.square_is_automorphism) << "\n";
    ok = ok && r.ok();
  }
  auto k2 = bgcg_k2(b, kappa);
  std::cout << "K2 " << names_of(k2.graph) << "  [" << canonical_certificate(k2.graph).digest() << "]\n";
  write_file(o, "push.txt", push_to_text(b, kappa));
  write_file(o, "k2.graph", to_text(k2));
  return ok ? kOk : kMismatch;
}

int cmd_identify(const std::string& arg) {
  auto in = load_graph(arg);
  auto first = identify(in.graph);
  std::cout << (first ? *first : std::string("absent")) << "\n";
  auto all = identify_all(in.graph);
  if (all.size() > 1) {
    std::cout << "also";
    for (std::size_t i = 1; i < all.size(); ++i) std::cout << " " << all[i];
    std::cout << "\n";
  }
  return kOk;
}

int cmd_iso(const std::string& a, const std::string& b, const Options& o) {
  auto x = load_graph(a);
  auto y = load_graph(b);
  auto iso = are_isomorphic(x.graph, y.graph);
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  if (iso) write_file(o, "isomorphism.txt", iso->to_string() + "\n");
  return kOk;
}

std::string table_sidecar(const Table2& t) {
  std::ostringstream s;
  for (const auto& r : t.rows) {
    s << "P" << r.index << ".order=" << to_string(r.stabilizer_order) << "\n";
    s << "P" << r.index << ".k1.expected=" << r.k1.expected << "\n";
    s << "P" << r.index << ".k1.certificate=" << r.k1.certificate.hex() << "\n";
    s << "P" << r.index << ".k2.expected=" << r.k2.expected << "\n";
    s << "P" << r.index << ".k2.certificate=" << r.k2.certificate.hex() << "\n";
  }
  return s.str();
}

std::string table_sidecar(const Table3& t) {
  std::ostringstream s;
  for (const auto& b : t.bases)
    for (const auto& r : b.rows) {
      std::string key = b.base + "#" + std::to_string(r.pairing_index);
      s << key << ".order=" << to_string(r.stabilizer_order) << "\n";
      s << key << ".k1.expected=" << r.k1.expected << "\n";
      s << key << ".k1.certificate=" << r.k1.certificate.hex() << "\n";
      s << key << ".k2.expected=" << r.k2.expected << "\n";
      s << key << ".k2.certificate=" << r.k2.certificate.hex() << "\n";
    }
  return s.str();
}

bool verify_cell(const Cell& c) {
  if (canonical_certificate(c.graph) != c.certificate) return false;
  if (c.constructible && c.matches) return canonical_certificate(make_family(c.expected)) == c.certificate;
  return true;
}

int cmd_table2(std::size_t n, const Options& o) {
  auto t = table2(n);
  std::string text = to_text(t);
  std::cout << text;
  write_file(o, "table2.txt", text);
  write_file(o, "table2.kv", table_sidecar(t));
  if (o.verify) {
    for (const auto& r : t.rows)
      if (!verify_cell(r.k1) || !verify_cell(r.k2)) return kMismatch;
    std::cout << "verify ok\n";
  }
  return t.ok() ? kOk : kMismatch;
}

int cmd_table3(const Options& o) {
  auto t = table3(parse_bound(o));
  std::string text = to_text(t);
  std::cout << text;
  write_file(o, "table3.txt", text);
  write_file(o, "table3.kv", table_sidecar(t));
  if (o.verify) {
    for (const auto& b : t.bases)
      for (const auto& r : b.rows)
        if (!verify_cell(r.k1) || !verify_cell(r.k2)) return kMismatch;
    std::cout << "verify ok\n";
  }
  return t.ok() ? kOk : kMismatch;
}

void apply_budget_env() {
  const char* env = std::getenv("TETRACENSUS_BUDGET");
  if (!env) return;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw InvalidParameter("TETRACENSUS_BUDGET must be a positive integer");
  default_search_budget().store(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BGCG constructions, dart-transitive pairings and census tables"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--bound", o.bound, "order bound for the subgroup search");
  app.add_option("--jobs", o.jobs, "maximum worker count")->check(CLI::PositiveNumber);
  app.add_flag("--verify", o.verify, "recompute certificates and check the results");
  app.add_option("--out", o.out, "directory for certificate and result files");

  std::string g1, g2, split = "fig1", partition = "singleton", push = "identity";
  std::size_t n = 0;

  auto* aut = app.add_subcommand("aut", "symmetry group order and transitivity");
  aut->add_option("graph", g1, "family string or graph file")->required();
  auto* dis = app.add_subcommand("dissect", "dissect a 2-coloured graph along a split");
  dis->add_option("graph", g1, "family string or graph file")->required();
  dis->add_option("--split", split, "fig1, fig2, delta1, delta2 or a partition file");
  auto* bg = app.add_subcommand("bgcg", "BGCG of a graph and a separating relation");
  bg->add_option("graph", g1, "family string or graph file")->required();
  bg->add_option("--partition", partition, "sum, heawood, c3c3, wreath:<i>, singleton or a partition file");
  auto* pr = app.add_subcommand("pairings", "dart-transitive pairings up to conjugacy");
  pr->add_option("graph", g1, "family string or graph file")->required();
  auto* pc = app.add_subcommand("push-check", "check a push and build the K2 graph");
  pc->add_option("graph", g1, "family string or graph file")->required();
  pc->add_option("--push", push, "identity, c3c3, wreath-even, wreath-mod4, wreath-odd or a push file");
  auto* id = app.add_subcommand("identify", "catalogue name of a graph");
  id->add_option("graph", g1, "family string or graph file")->required();
  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("first", g1, "family string or graph file")->required();
  iso->add_option("second", g2, "family string or graph file")->required();
  auto* t2 = app.add_subcommand("table2", "wreath pairing table for W(n,2)");
  t2->add_option("n", n, "wreath parameter")->required()->check(CLI::Range(3, 64));
  auto* t3 = app.add_subcommand("table3", "pairing census of small non-wreath graphs");

  for (auto* sub : {aut, dis, bg, pr, pc, id, iso, t2, t3}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    apply_budget_env();
    if (*aut) return cmd_aut(g1, o);
    if (*dis) return cmd_dissect(g1, split, o);
    if (*bg) return cmd_bgcg(g1, partition, o);
    if (*pr) return cmd_pairings(g1, o);
    if (*pc) return cmd_push_check(g1, push, o);
    if (*id) return cmd_identify(g1);
    if (*iso) return cmd_iso(g1, g2, o);
    if (*t2) return cmd_table2(n, o);
    if (*t3) return cmd_table3(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
