#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "pi2/chromatic.hpp"
#include "pi2/complexes.hpp"
#include "pi2/covering.hpp"
#include "pi2/errors.hpp"
#include "pi2/homology.hpp"
#include "pi2/io.hpp"
#include "pi2/path.hpp"
#include "pi2/presentation.hpp"

namespace pi2::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string s;
  for (unsigned int i = 0; i < len; ++i) {
    s += hex[digest[i] >> 4];
    s += hex[digest[i] & 15];
  }
  return s;
}

// Small integers as numbers, the rest as decimal strings.
Json integer_json(const Integer& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return static_cast<long long>(n);
  return n.str();
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(integer_json(t));
  return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

Json sets_json(const std::vector<VertexSet>& sets) {
  Json a = Json::array();
  for (const auto& s : sets) a.push_back(s);
  return a;
}

Json square_json(const Square& s) { return Json(std::vector<Vertex>(s.corners.begin(), s.corners.end())); }

Json squares_json(const std::vector<Square>& squares) {
  Json a = Json::array();
  for (const auto& s : squares) a.push_back(square_json(s));
  return a;
}

const char* parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

// Relators are lists of letters: +(i+1) for generator i, -(i+1) for its
// inverse.
Json presentation_json(const GroupPresentation& p) {
  Json gens = Json::array();
  for (const auto& l : p.labels()) gens.push_back(l.name);
  Json rels = Json::array();
  for (const auto& r : p.relators()) rels.push_back(r);
  return {{"generators", gens}, {"relators", rels}};
}

// Parsed inputs and their digests, in the order they were read.
class Inputs {
 public:
  std::string file(const std::string& role, const std::string& path) {
    std::string text = io::read_file(path);
    record_[role] = {{"path", path}, {"sha256", sha256_hex(text)}};
    return text;
  }

  // FILE, or named:SPEC for a built-in family member.
  Graph graph(const std::string& role, const std::string& arg) {
    static const std::string prefix = "named:";
    if (arg.rfind(prefix, 0) == 0) {
      std::string spec = arg.substr(prefix.size());
      record_[role] = {{"named", spec}, {"sha256", sha256_hex(spec)}};
      return named_graph(spec);
    }
    return io::parse_graph(file(role, arg));
  }

  const Json& json() const { return record_; }

 private:
  Json record_ = Json::object();
};

void check_vertex(const Graph& g, Vertex v, const std::string& what) {
  if (!g.valid(v))
    throw DomainError(what + " " + std::to_string(v) + " is not a vertex (graph has " +
                      std::to_string(g.vertex_count()) + ")");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// Option values shared across subcommands. Unused ones stay at defaults.
struct Options {
  std::string graph, map, source, target, loops, tau, t, g, k1, k2, pieces, via = "h1", quotient;
  int base = 0, from = 0, vertex = 0, max_k = 6, depth = 4, threads = 1;
  std::optional<int> to, max_len;
  std::optional<long long> budget;
  bool simplify = false, elements = false, homology = false;
};

GraphMap load_map(Inputs& in, const Options& o) {
  std::string text = in.file("map", o.map);
  std::optional<Graph> source, target;
  if (!o.source.empty()) source = in.graph("source", o.source);
  if (!o.target.empty()) target = in.graph("target", o.target);
  return io::parse_map(text, source, target);
}

Json witness_json(const TwoCoveringWitness& w) {
  Json r = {{"verdict", w.verdict}, {"bijective", w.bijective}};
  if (w.failure)
    r["counterexample"] = {{"vertex", w.failure->v},
                           {"condition", to_string(w.failure->condition)},
                           {"offending", w.failure->offending}};
  return r;
}

Json cmd_h1(Inputs& in, const Options& o) { return group_json(h1_graph(in.graph("graph", o.graph))); }

Json cmd_nbhd(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  auto k = neighborhood_complex(g);
  return {{"dimension", k.dimension()}, {"facets", sets_json(k.facets())}};
}

Json cmd_nbhd_h1(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  check_vertex(g, o.base, "base");
  auto k = neighborhood_complex(g);
  auto [h0, h1] = simplicial_h01(k);
  Json r = {{"base", o.base}, {"h0", group_json(h0)}, {"h1", group_json(h1)}};
  if (g.degree(o.base) == 0) {
    r["component_h1"] = nullptr;
  } else {
    r["component_h1"] = group_json(simplicial_h01(k.component_of(o.base)).second);
  }
  return r;
}

Json cmd_present(Inputs& in, const Options& o, bool even) {
  Graph g = in.graph("graph", o.graph);
  check_vertex(g, o.base, "base");
  auto cw = cw_presentation(g, o.base);
  GroupPresentation p = even ? even_part_presentation(cw.presentation, cw.parity) : cw.presentation;
  std::vector<int> parity;
  if (even) {
    parity.assign(p.generator_count(), 0);
  } else {
    parity = cw.parity.parity;
  }
  if (o.simplify) {
    // Simplification may drop generators, so the parity map goes with it.
    p = simplify(p);
    parity.clear();
  }
  Json r = presentation_json(p);
  r["base"] = o.base;
  r["component_bipartite"] = cw.parity.is_zero();
  if (!o.simplify) r["parity"] = parity;
  r["abelianization"] = group_json(abelianize(p));
  return r;
}

Json cmd_check_cover(Inputs& in, const Options& o) {
  return witness_json(two_covering_witness(load_map(in, o)));
}

Json cmd_monodromy(Inputs& in, const Options& o) {
  GraphMap p = load_map(in, o);
  auto raw = io::parse_loops(in.file("loops", o.loops));
  check_vertex(p.target(), o.base, "base");
  std::vector<Path> loops;
  for (auto& l : raw) loops.emplace_back(p.target(), std::move(l));
  auto m = monodromy(p, o.base, loops);
  Json perms = Json::array();
  for (const auto& q : m.permutations) perms.push_back(q);
  std::vector<Permutation> gens(m.permutations.begin(), m.permutations.end());
  bool transitive = m.fiber.empty() || orbit(gens, 0).size() == m.fiber.size();
  return {{"basepoint", m.basepoint},
          {"fiber", m.fiber},
          {"permutations", perms},
          {"transitive", transitive}};
}

Json cmd_derived_cover(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  check_vertex(g, o.base, "base");
  auto cw = cw_presentation(g, o.base);
  auto rho = parse_voltages(o.quotient, cw);
  auto d = derived_cover(g, o.base, rho);
  return {{"degree", d.degree},
          {"base_lift", d.base},
          {"vertex_count", d.graph.vertex_count()},
          {"edge_count", d.graph.edge_count()},
          {"components", static_cast<int>(connected_components(d.graph).size())},
          {"two_covering", is_two_covering(d.projection)},
          {"bundle", io::write_bundle(d.projection)}};
}

Json cmd_oracle(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  check_vertex(g, o.from, "from");
  Vertex to = o.to.value_or(o.from);
  check_vertex(g, to, "to");
  if (!o.max_len) throw DomainError("oracle needs --max-len");
  auto t = oracle_classes(g, o.from, to, *o.max_len,
                          o.budget ? static_cast<std::size_t>(*o.budget) : kDefaultPathBudget);
  Json classes = Json::array();
  for (const auto& c : t.classes())
    classes.push_back(
        {{"shortest", c.shortest}, {"parity", parity_name(c.parity)}, {"size", c.size}});
  return {{"from", o.from},
          {"to", to},
          {"max_len", *o.max_len},
          {"paths", t.path_count()},
          {"classes", classes},
          {"stable", t.stable()}};
}

Json cmd_chromatic(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  if (o.max_k < 0) throw DomainError("--max-k must be nonnegative");
  auto chi = chromatic_number(g, o.max_k);
  Json r = {{"max_k", o.max_k}, {"has_loops", g.has_loops()}};
  r["chromatic_number"] = chi ? Json(*chi) : Json(nullptr);
  r["coloring"] = chi ? Json(*find_coloring(g, *chi)) : Json(nullptr);
  return r;
}

Json cmd_obstruction(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  ObstructionReport r;
  if (o.via == "h1") {
    r = three_color_obstruction(g);
  } else {
    r = nbhd_obstruction(g);
  }
  Json j = {{"verdict", to_string(r.verdict)}, {"via", o.via}};
  j["group"] = r.group ? group_json(*r.group) : Json(nullptr);
  return j;
}

Json cmd_involution(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  GraphMap m = io::parse_map(in.file("tau", o.tau), g, g);
  Involution tau(g, m.assignment());
  auto r = verify_involution_theorem(g, tau);
  return {{"parity", parity_name(r.parity)},
          {"h1", group_json(r.h1)},
          {"hypothesis", r.hypothesis},
          {"colorings", r.sweep.count},
          {"exhaustive", r.sweep.exhaustive},
          {"violations", r.violations},
          {"first_violation", r.first_violation ? Json(*r.first_violation) : Json(nullptr)},
          {"holds", r.holds()}};
}

std::vector<Subgraph> load_pieces(Inputs& in, const Options& o, const Graph& g) {
  std::vector<Subgraph> pieces;
  auto files = split_list(o.pieces);
  for (std::size_t i = 0; i < files.size(); ++i)
    pieces.push_back(io::parse_subgraph(in.file("piece" + std::to_string(i), files[i]), g));
  return pieces;
}

Json cmd_mv_check(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  std::vector<Subgraph> pieces;
  if (!o.k1.empty() || !o.k2.empty()) {
    if (o.k1.empty() || o.k2.empty()) throw DomainError("mv-check needs both --k1 and --k2");
    if (!o.pieces.empty()) throw DomainError("give either --k1/--k2 or --pieces");
    pieces.push_back(io::parse_subgraph(in.file("k1", o.k1), g));
    pieces.push_back(io::parse_subgraph(in.file("k2", o.k2), g));
  } else {
    pieces = load_pieces(in, o, g);
    if (pieces.size() != 2) throw DomainError("mv-check needs exactly two pieces");
  }
  auto r = mayer_vietoris_check(g, pieces[0], pieces[1], o.depth);
  Json groups = Json::array();
  for (const auto& a : r.groups) groups.push_back(group_json(a));
  return {{"covers", r.covers},
          {"undecomposed", squares_json(r.undecomposed)},
          {"inconclusive", r.inconclusive},
          {"groups", groups},
          {"exact", r.exact},
          {"union_matches_graph", r.union_matches_graph},
          {"inclusion_iso", r.inclusion_iso},
          {"passed", r.passed()}};
}

Json cmd_van_kampen(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  check_vertex(g, o.base, "base");
  auto pieces = load_pieces(in, o, g);
  auto r = van_kampen_presentation(g, o.base, pieces, o.depth);
  Json j = {{"covers", r.covers},
            {"triple_connected", r.triple_connected},
            {"squares_decompose", r.squares_decompose},
            {"inconclusive", squares_json(r.inconclusive)},
            {"refuted", squares_json(r.refuted)},
            {"hypotheses_hold", r.hypotheses_hold()}};
  GroupPresentation p = o.simplify ? simplify(r.presentation) : r.presentation;
  j["presentation"] = presentation_json(p);
  j["abelianization"] = group_json(abelianize(p));
  return j;
}

Json cmd_hom_poset(Inputs& in, const Options& o) {
  Graph t = in.graph("t", o.t);
  Graph g = in.graph("g", o.g);
  long long budget = o.budget.value_or(kDefaultHomBudget);
  auto h = hom_poset(t, g, budget);
  Json r = {{"size", h.elements.size()},
            {"minimal", h.poset.minimal().size()},
            {"maximal", h.poset.maximal().size()},
            {"connected", h.poset.is_connected()}};
  if (o.elements) {
    Json els = Json::array();
    for (const auto& e : h.elements) els.push_back(sets_json(e.values()));
    r["elements"] = els;
  }
  if (o.homology) {
    auto [h0, h1] = simplicial_h01(order_complex(h.poset, budget));
    r["h0"] = group_json(h0);
    r["h1"] = group_json(h1);
  }
  return r;
}

Json cmd_check_star(Inputs& in, const Options& o) {
  GraphMap p = load_map(in, o);
  check_vertex(p.target(), o.vertex, "vertex");
  auto r = star_decomposition_check(p, o.vertex);
  Json stars = Json::array();
  for (const auto& s : r.stars) stars.push_back(sets_json(s.facets()));
  Json j = {{"holds", r.holds},
            {"equal", r.equal},
            {"disjoint", r.disjoint},
            {"star_count", r.star_count},
            {"preimage", sets_json(r.preimage.facets())},
            {"stars", stars}};
  if (r.overlap)
    j["overlap"] = {{"first", r.overlap->first},
                    {"second", r.overlap->second},
                    {"shared", r.overlap->shared}};
  return j;
}

Json cmd_named(Inputs& in, const Options& o) {
  Graph g = in.graph("graph", o.graph);
  return {{"vertex_count", g.vertex_count()},
          {"edge_count", g.edge_count()},
          {"graph", io::write_graph(g)}};
}

Json report_head(const std::string& command, const std::vector<std::string>& args) {
  return {{"schema", kSchema}, {"command", command}, {"args", args}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"2-fundamental groups, 2-coverings and homology of finite graphs", "pi2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  std::string handled;
  std::function<Json(Inputs&)> action;

  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<Json(Inputs&, const Options&)> f) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&, name, f] {
      handled = name;
      action = [&o, f](Inputs& in) { return f(in, o); };
    });
    s->add_option("--threads", o.threads, "Worker threads (computation is sequential)")
        ->check(CLI::PositiveNumber);
    return s;
  };
  auto graph_opt = [&](CLI::App* s) {
    s->add_option("--graph", o.graph, "Graph file, or named:SPEC")->required();
  };
  auto map_opts = [&](CLI::App* s) {
    s->add_option("--map", o.map, "Map or bundle file")->required();
    s->add_option("--source", o.source, "Source graph (overrides the bundle)");
    s->add_option("--target", o.target, "Target graph (overrides the bundle)");
  };
  auto base_opt = [&](CLI::App* s) { s->add_option("--base", o.base, "Base vertex"); };
  auto depth_opt = [&](CLI::App* s) {
    s->add_option("--depth", o.depth, "Square decomposition depth")->check(CLI::NonNegativeNumber);
  };

  {
    auto s = sub("h1", "H1 of the square complex", cmd_h1);
    graph_opt(s);
  }
  {
    auto s = sub("nbhd", "Facets of the neighborhood complex", cmd_nbhd);
    graph_opt(s);
  }
  {
    auto s = sub("nbhd-h1", "Homology of the neighborhood complex", cmd_nbhd_h1);
    graph_opt(s);
    base_opt(s);
  }
  {
    auto s = sub("present", "Presentation of the 2-fundamental group",
                 [](Inputs& in, const Options& opt) { return cmd_present(in, opt, false); });
    graph_opt(s);
    base_opt(s);
    s->add_flag("--simplify", o.simplify, "Simplify the presentation");
  }
  {
    auto s = sub("even-part", "Presentation of the even part",
                 [](Inputs& in, const Options& opt) { return cmd_present(in, opt, true); });
    graph_opt(s);
    base_opt(s);
    s->add_flag("--simplify", o.simplify, "Simplify the presentation");
  }
  {
    auto s = sub("check-cover", "Is the map a 2-covering", cmd_check_cover);
    map_opts(s);
  }
  {
    auto s = sub("monodromy", "Fiber permutations of loops", cmd_monodromy);
    map_opts(s);
    s->add_option("--loops", o.loops, "Loops file")->required();
    base_opt(s);
  }
  {
    auto s = sub("derived-cover", "Cover from permutation voltages", cmd_derived_cover);
    graph_opt(s);
    base_opt(s);
    s->add_option("--quotient", o.quotient,
                  "trivial | parity | cyclic:M:A1,A2,... | perm:D:P1;P2;...")
        ->required();
  }
  {
    auto s = sub("oracle", "Brute-force 2-homotopy classes of bounded paths", cmd_oracle);
    graph_opt(s);
    s->add_option("--from", o.from, "Initial vertex");
    s->add_option("--to", o.to, "Terminal vertex (default: --from)");
    s->add_option("--max-len", o.max_len, "Length cutoff")->required();
    s->add_option("--budget", o.budget, "Path budget")->check(CLI::PositiveNumber);
  }
  {
    auto s = sub("chromatic", "Exact chromatic number", cmd_chromatic);
    graph_opt(s);
    s->add_option("--max-k", o.max_k, "Largest k tried");
  }
  {
    auto s = sub("obstruction", "Homological obstruction to 3-colorability", cmd_obstruction);
    graph_opt(s);
    s->add_option("--via", o.via, "h1 or nbhd")->check(CLI::IsMember({"h1", "nbhd"}));
  }
  {
    auto s = sub("involution-check", "Check 3-colorings against an involution", cmd_involution);
    graph_opt(s);
    s->add_option("--tau", o.tau, "Map file of the involution")->required();
  }
  {
    auto s = sub("mv-check", "Mayer-Vietoris exactness for two subgraphs", cmd_mv_check);
    graph_opt(s);
    s->add_option("--k1", o.k1, "First subgraph file");
    s->add_option("--k2", o.k2, "Second subgraph file");
    s->add_option("--pieces", o.pieces, "Comma-separated subgraph files");
    depth_opt(s);
  }
  {
    auto s = sub("van-kampen", "Amalgamated presentation from pieces", cmd_van_kampen);
    graph_opt(s);
    base_opt(s);
    s->add_option("--pieces", o.pieces, "Comma-separated subgraph files")->required();
    depth_opt(s);
    s->add_flag("--simplify", o.simplify, "Simplify the presentation");
  }
  {
    auto s = sub("hom-poset", "The poset of multihomomorphisms T -> G", cmd_hom_poset);
    s->add_option("--t", o.t, "Source graph T")->required();
    s->add_option("--g", o.g, "Target graph G")->required();
    s->add_option("--budget", o.budget, "Search budget")->check(CLI::PositiveNumber);
    s->add_flag("--elements", o.elements, "List every element");
    s->add_flag("--homology", o.homology, "H0 and H1 of the order complex");
  }
  {
    auto s = sub("check-star", "Star decomposition over a target vertex", cmd_check_star);
    map_opts(s);
    s->add_option("--vertex", o.vertex, "Target vertex")->required();
  }
  {
    auto s = sub("named", "Write a built-in graph in the text format", cmd_named);
    graph_opt(s);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Json report = report_head(handled, args);
  Inputs in;
  int code = 0;
  try {
    Json result = action(in);
    report["inputs"] = in.json();
    report["version"] = kVersion;
    report["result"] = std::move(result);
  } catch (const BudgetExceeded& e) {
    report["inputs"] = in.json();
    report["version"] = kVersion;
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    code = 1;
  } catch (const DomainError& e) {
    report["inputs"] = in.json();
    report["version"] = kVersion;
    report["error"] = {{"kind", "domain"}, {"message", e.what()}};
    code = 1;
  }
  out << report.dump(2) + "\n" << std::flush;
  return code;
}

}  // namespace pi2::cli
