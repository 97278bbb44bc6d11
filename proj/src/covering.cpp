#include "pi2/covering.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pi2/errors.hpp"

namespace pi2 {

namespace {

struct RestrictionCheck {
  std::optional<std::pair<Vertex, Vertex>> collision;
  VertexSet missed;
};

RestrictionCheck check_restriction(const GraphMap& p, const VertexSet& domain,
                                   const VertexSet& target) {
  RestrictionCheck r;
  std::vector<std::pair<Vertex, Vertex>> images;
  for (Vertex x : domain) images.emplace_back(p(x), x);
  std::sort(images.begin(), images.end());
  for (std::size_t i = 0; i + 1 < images.size() && !r.collision; ++i)
    if (images[i].first == images[i + 1].first)
      r.collision = std::pair{images[i].second, images[i + 1].second};
  for (Vertex y : target) {
    auto it = std::lower_bound(images.begin(), images.end(), std::pair{y, -1});
    if (it == images.end() || it->first != y) r.missed.push_back(y);
  }
  return r;
}

void require_covering(const GraphMap& p) {
  auto w = two_covering_witness(p);
  if (!w.verdict)
    throw DomainError(std::string("map is not a 2-covering: ") + to_string(w.failure->condition) +
                      " fails at vertex " + std::to_string(w.failure->v));
}

// Unique step from `current` over `next`; p is a verified 2-covering.
Vertex step_over(const GraphMap& p, Vertex current, Vertex next) {
  for (Vertex x : p.source().neighbors(current))
    if (p(x) == next) return x;
  throw std::logic_error("2-covering has no lift of a step");
}

std::vector<Vertex> lift_vertices(const GraphMap& p, const std::vector<Vertex>& path,
                                  Vertex start) {
  std::vector<Vertex> out{start};
  for (std::size_t i = 1; i < path.size(); ++i) out.push_back(step_over(p, out.back(), path[i]));
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

int parse_int(const std::string& s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("bad integer '" + s + "' in voltage spec");
  return v;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Permutation identity_permutation(int d) {
  Permutation p(d);
  for (int i = 0; i < d; ++i) p[i] = i;
  return p;
}

}  // namespace

const char* to_string(TwoCoveringWitness::Condition c) {
  switch (c) {
    case TwoCoveringWitness::Condition::n_injective: return "N-injective";
    case TwoCoveringWitness::Condition::n_surjective: return "N-surjective";
    case TwoCoveringWitness::Condition::n2_injective: return "N2-injective";
    case TwoCoveringWitness::Condition::n2_surjective: return "N2-surjective";
  }
  return "?";
}

TwoCoveringWitness two_covering_witness(const GraphMap& p) {
  using C = TwoCoveringWitness::Condition;
  TwoCoveringWitness w;
  const Graph& g = p.source();
  const Graph& h = p.target();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto n = check_restriction(p, neighborhood(g, v), neighborhood(h, p(v)));
    auto n2 = check_restriction(p, neighborhood2(g, v), neighborhood2(h, p(v)));
    const bool ok[4] = {!n.collision, n.missed.empty(), !n2.collision, n2.missed.empty()};
    if (!(ok[1] && ok[2])) w.verdict = false;
    if (!(ok[0] && ok[1] && ok[2] && ok[3])) w.bijective = false;
    if (!w.failure) {
      for (int c = 0; c < 4; ++c) {
        if (ok[c]) continue;
        VertexSet offending;
        const auto& r = c < 2 ? n : n2;
        if (c % 2 == 0)
          offending = {r.collision->first, r.collision->second};
        else
          offending = r.missed;
        w.failure = TwoCoveringWitness::Failure{v, static_cast<C>(c), offending};
        break;
      }
    }
  }
  if (w.verdict != w.bijective)
    throw std::logic_error("surjective/injective criterion disagrees with bijectivity");
  return w;
}

bool is_two_covering(const GraphMap& p) { return two_covering_witness(p).verdict; }

ActionWitness is_two_covering_action(const GroupAction& a) {
  ActionWitness w;
  const Graph& g = a.graph();
  std::vector<VertexSet> n2(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) n2[v] = neighborhood2(g, v);
  // A fixed point makes the clearest witness.
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int e = 0; e < a.order(); ++e)
      if (e != a.identity() && a.act(v, e) == v && !n2[v].empty()) {
        w.verdict = false;
        w.failure = ActionWitness::Failure{v, e, v};
        return w;
      }
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (int e = 0; e < a.order(); ++e) {
      if (e == a.identity()) continue;
      const VertexSet& other = n2[a.act(v, e)];
      VertexSet shared;
      std::set_intersection(n2[v].begin(), n2[v].end(), other.begin(), other.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        w.verdict = false;
        w.failure = ActionWitness::Failure{v, e, shared.front()};
        return w;
      }
    }
  return w;
}

CompositionFacts compose_covering_facts(const GraphMap& f, const GraphMap& g) {
  if (!(f.target() == g.source())) throw DomainError("maps do not compose");
  CompositionFacts c;
  c.f_covering = is_two_covering(f);
  c.g_covering = is_two_covering(g);
  c.gf_covering = is_two_covering(compose(f, g));
  c.f_surjective = f.is_surjective();
  c.composite_rule = !(c.f_covering && c.g_covering) || c.gf_covering;
  c.left_cancel_rule = !(c.g_covering && c.gf_covering) || c.f_covering;
  c.right_cancel_rule = !(c.f_surjective && c.f_covering && c.gf_covering) || c.g_covering;
  return c;
}

Pullback pullback(const GraphMap& f, const GraphMap& p) {
  if (!(f.target() == p.target())) throw DomainError("pullback needs a common target");
  const Graph& t = f.source();
  const Graph& k = p.source();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    for (Vertex y = 0; y < k.vertex_count(); ++y)
      if (f(x) == p(y)) pairs.emplace_back(x, y);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i; j < pairs.size(); ++j)
      if (t.adjacent(pairs[i].first, pairs[j].first) &&
          k.adjacent(pairs[i].second, pairs[j].second))
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  Graph graph(static_cast<int>(pairs.size()), edges);
  std::vector<Vertex> first, second;
  for (const auto& [x, y] : pairs) {
    first.push_back(x);
    second.push_back(y);
  }
  GraphMap to_first(graph, t, first);
  GraphMap to_second(graph, k, second);
  return Pullback{std::move(graph), std::move(pairs), std::move(to_first), std::move(to_second)};
}

Path lift_path(const GraphMap& p, const Path& phi, Vertex start) {
  if (!(phi.graph() == p.target())) throw DomainError("path is not in the target graph");
  p.source().check_vertex(start);
  if (p(start) != phi.initial()) throw DomainError("start is not over the initial vertex");
  require_covering(p);
  return Path(p.source(), lift_vertices(p, phi.vertices(), start));
}

Multihom lift_multihom(const GraphMap& p, const Graph& t, const Multihom& eta,
                       const Multihom& zeta, LiftDirection direction) {
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    if (t.degree(x) == 0) throw DomainError("source graph has an isolated vertex");
  require_covering(p);
  Multihom up(t, p.source(), eta.values());
  Multihom down(t, p.target(), zeta.values());
  Multihom image = push_forward(p, t, up);
  const bool comparable = direction == LiftDirection::down ? less_equal(down, image)
                                                           : less_equal(image, down);
  if (!comparable) throw DomainError("p∘η does not compare to ζ in the lift direction");

  const Graph& g = p.source();
  std::vector<VertexSet> values;
  for (Vertex x = 0; x < t.vertex_count(); ++x) {
    VertexSet out;
    const VertexSet& want = down(x);
    if (direction == LiftDirection::down) {
      for (Vertex a : up(x))
        if (std::binary_search(want.begin(), want.end(), p(a))) out.push_back(a);
    } else {
      for (Vertex a : neighborhood2(g, up(x).front()))
        if (std::binary_search(want.begin(), want.end(), p(a))) out.push_back(a);
    }
    values.push_back(std::move(out));
  }
  Multihom lifted(t, g, std::move(values));
  if (!(push_forward(p, t, lifted) == down)) throw std::logic_error("multihom lift is not over ζ");
  if (direction == LiftDirection::down ? !less_equal(lifted, up) : !less_equal(up, lifted))
    throw std::logic_error("multihom lift is on the wrong side of η");
  return lifted;
}

GraphMap lift_homotopy(const GraphMap& p, const Graph& t, int n, const GraphMap& homotopy,
                       const GraphMap& f) {
  if (n < 0) throw DomainError("homotopy length must be nonnegative");
  const Graph interval = looped_path(n);
  const Graph domain = product(t, interval);
  if (!(homotopy.source() == domain)) throw DomainError("homotopy source is not T × I_n");
  if (!(homotopy.target() == p.target())) throw DomainError("homotopy is not into the base");
  if (!(f.source() == t) || !(f.target() == p.source()))
    throw DomainError("initial lift must map T into the cover");
  const int levels = n + 1;
  for (Vertex x = 0; x < t.vertex_count(); ++x)
    if (p(f(x)) != homotopy(x * levels)) throw DomainError("p∘f differs from F(·, 0)");

  std::vector<Vertex> assignment(domain.vertex_count());
  std::vector<Vertex> current = f.assignment();
  for (Vertex x = 0; x < t.vertex_count(); ++x) assignment[x * levels] = current[x];
  for (int i = 0; i < n; ++i) {
    std::vector<VertexSet> eta, zeta, next;
    for (Vertex x = 0; x < t.vertex_count(); ++x) {
      eta.push_back({current[x]});
      zeta.push_back({homotopy(x * levels + i), homotopy(x * levels + i + 1)});
      next.push_back({homotopy(x * levels + i + 1)});
    }
    Multihom wide = lift_multihom(p, t, Multihom(t, p.source(), eta),
                                  Multihom(t, p.target(), zeta), LiftDirection::up);
    Multihom step = lift_multihom(p, t, wide, Multihom(t, p.target(), next), LiftDirection::down);
    for (Vertex x = 0; x < t.vertex_count(); ++x) {
      current[x] = step(x).front();
      assignment[x * levels + i + 1] = current[x];
    }
  }
  GraphMap lifted(domain, p.source(), std::move(assignment));
  if (!(compose(lifted, p) == homotopy)) throw std::logic_error("homotopy lift is not over F");
  return lifted;
}

std::optional<GraphMap> attempt_lift_map(const GraphMap& p, Vertex v, const GraphMap& f,
                                         Vertex x) {
  const Graph& t = f.source();
  if (!(f.target() == p.target())) throw DomainError("f does not map into the base of p");
  t.check_vertex(x);
  p.source().check_vertex(v);
  if (p(v) != f(x)) throw DomainError("basepoints do not match");
  if (!is_connected(t)) throw DomainError("lifting needs a connected source");
  require_covering(p);

  std::vector<Vertex> lift(t.vertex_count(), -1);
  lift[x] = v;
  std::queue<Vertex> q;
  q.push(x);
  while (!q.empty()) {
    Vertex y = q.front();
    q.pop();
    for (Vertex z : t.neighbors(y)) {
      if (lift[z] != -1) continue;
      lift[z] = step_over(p, lift[y], f(z));
      q.push(z);
    }
  }
  if (!is_graph_map(t, p.source(), lift)) return std::nullopt;
  return GraphMap(t, p.source(), std::move(lift));
}

Permutation then(const Permutation& first, const Permutation& second) {
  Permutation r(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Monodromy monodromy(const GraphMap& p, Vertex basepoint, const std::vector<Path>& loops) {
  p.target().check_vertex(basepoint);
  require_covering(p);
  Monodromy m;
  m.basepoint = basepoint;
  m.fiber = p.fiber(basepoint);
  for (const Path& loop : loops) {
    if (!(loop.graph() == p.target())) throw DomainError("loop is not in the target graph");
    if (loop.initial() != basepoint || loop.terminal() != basepoint)
      throw DomainError("loop is not based at the basepoint");
    Permutation perm;
    for (Vertex start : m.fiber) {
      Vertex end = lift_vertices(p, loop.vertices(), start).back();
      perm.push_back(static_cast<int>(std::lower_bound(m.fiber.begin(), m.fiber.end(), end) -
                                      m.fiber.begin()));
    }
    m.permutations.push_back(std::move(perm));
  }
  return m;
}

std::vector<int> orbit(const std::vector<Permutation>& generators, int start) {
  std::set<int> seen{start};
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int i = q.front();
    q.pop();
    for (const auto& g : generators)
      for (int j : {g[i], inverse_permutation(g)[i]})
        if (seen.insert(j).second) q.push(j);
  }
  return {seen.begin(), seen.end()};
}

TruncatedCover universal_cover_truncated(const Graph& g, Vertex v, int cutoff,
                                         std::size_t budget) {
  g.check_vertex(v);
  if (cutoff < 1) throw DomainError("cutoff must be at least 1");
  auto table = oracle_classes(g, v, std::nullopt, cutoff, budget);
  const int n = static_cast<int>(table.classes().size());
  std::set<Edge> edges;
  const auto& paths = table.paths();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (paths[i].size() < 2) continue;
    std::vector<Vertex> prefix(paths[i].begin(), paths[i].end() - 1);
    int a = *table.class_of(prefix), b = table.class_of_index(i);
    edges.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> edge_list(edges.begin(), edges.end());
  Graph cover(n, edge_list);
  std::vector<Vertex> projection;
  std::vector<std::vector<Vertex>> reps;
  for (const auto& c : table.classes()) {
    projection.push_back(c.shortest.back());
    reps.push_back(c.shortest);
  }
  Vertex base = *table.class_of({v});
  GraphMap map(cover, g, std::move(projection));
  return TruncatedCover{std::move(cover), std::move(map), base, cutoff, table.stable(),
                        std::move(reps)};
}

Voltages parse_voltages(const std::string& spec, const CwPresentation& cw) {
  const int gens = cw.presentation.generator_count();
  auto parts = split(spec, ':');
  Voltages r;
  if (spec == "trivial") {
    r.degree = 1;
    r.images.assign(gens, identity_permutation(1));
  } else if (spec == "parity") {
    r.degree = 2;
    for (int g = 0; g < gens; ++g)
      r.images.push_back(cw.parity.parity[g] ? Permutation{1, 0} : Permutation{0, 1});
  } else if (parts.size() == 3 && parts[0] == "cyclic") {
    r.degree = parse_int(parts[1]);
    if (r.degree < 1) throw DomainError("cyclic order must be positive");
    auto shifts = parts[2].empty() ? std::vector<std::string>{} : split(parts[2], ',');
    if (static_cast<int>(shifts.size()) != gens)
      throw DomainError("cyclic spec needs " + std::to_string(gens) + " shifts");
    for (const auto& s : shifts) {
      int a = ((parse_int(s) % r.degree) + r.degree) % r.degree;
      Permutation p(r.degree);
      for (int i = 0; i < r.degree; ++i) p[i] = (i + a) % r.degree;
      r.images.push_back(std::move(p));
    }
  } else if (parts.size() == 3 && parts[0] == "perm") {
    r.degree = parse_int(parts[1]);
    if (r.degree < 1) throw DomainError("permutation degree must be positive");
    auto perms = parts[2].empty() ? std::vector<std::string>{} : split(parts[2], ';');
    if (static_cast<int>(perms.size()) != gens)
      throw DomainError("perm spec needs " + std::to_string(gens) + " permutations");
    for (const auto& s : perms) {
      Permutation p;
      for (const auto& x : split(s, ',')) p.push_back(parse_int(x));
      r.images.push_back(std::move(p));
    }
  } else {
    throw DomainError("unknown voltage spec '" + spec + "'");
  }
  for (const auto& p : r.images) {
    if (static_cast<int>(p.size()) != r.degree) throw DomainError("permutation has wrong degree");
    std::vector<bool> hit(r.degree, false);
    for (int x : p) {
      if (x < 0 || x >= r.degree || hit[x]) throw DomainError("voltage is not a permutation");
      hit[x] = true;
    }
  }
  return r;
}

DerivedCover derived_cover(const Graph& g, Vertex v, const Voltages& rho) {
  g.check_vertex(v);
  if (!is_connected(g)) throw DomainError("derived covers need a connected graph");
  auto cw = cw_presentation(g, v);
  const int d = rho.degree;
  if (static_cast<int>(rho.images.size()) != cw.presentation.generator_count())
    throw DomainError("one voltage per generator is required");
  auto image_of = [&](int l) {
    const Permutation& p = rho.images[generator_of(l)];
    return l > 0 ? p : inverse_permutation(p);
  };
  const auto& relators = cw.presentation.relators();
  for (std::size_t k = 0; k < relators.size(); ++k) {
    Permutation acc = identity_permutation(d);
    for (int l : relators[k]) acc = then(acc, image_of(l));
    if (!is_identity(acc))
      throw DomainError("relator " + std::to_string(k) + " does not act trivially");
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    auto l = cw.letter_of_step(a, b);
    Permutation p = l ? image_of(*l) : identity_permutation(d);
    for (int i = 0; i < d; ++i) edges.emplace_back(a * d + i, b * d + p[i]);
  }
  Graph cover(g.vertex_count() * d, edges);
  std::vector<Vertex> proj(cover.vertex_count());
  for (Vertex x = 0; x < cover.vertex_count(); ++x) proj[x] = x / d;
  GraphMap map(cover, g, std::move(proj));
  auto w = two_covering_witness(map);
  if (!w.verdict)
    throw DomainError(std::string("voltage cover is not a 2-covering: ") +
                      to_string(w.failure->condition) + " at " + std::to_string(w.failure->v));
  return DerivedCover{std::move(cover), std::move(map), d, v * d};
}

GraphMap restrict_to_component(const GraphMap& p, Vertex vertex) {
  auto sub = induced_subgraph(p.source(), component_of(p.source(), vertex));
  std::vector<Vertex> a;
  for (Vertex x : sub.new_to_old) a.push_back(p(x));
  return GraphMap(sub.graph, p.target(), std::move(a));
}

std::optional<std::vector<Vertex>> covers_isomorphic(const GraphMap& p1, const GraphMap& p2,
                                                     long long budget) {
  if (!(p1.target() == p2.target())) throw DomainError("covers have different bases");
  const Graph& a = p1.source();
  const Graph& b = p2.source();
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  for (Vertex t = 0; t < p1.target().vertex_count(); ++t)
    if (p1.fiber(t).size() != p2.fiber(t).size()) return std::nullopt;

  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::queue<Vertex> q;
    q.push(s);
    placed[s] = true;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop();
      order.push_back(x);
      for (Vertex y : a.neighbors(x))
        if (!placed[y]) {
          placed[y] = true;
          q.push(y);
        }
    }
  }
  std::vector<Vertex> sigma(n, -1);
  std::vector<bool> used(n, false);
  long long nodes = 0;
  auto fits = [&](Vertex x, Vertex c) {
    if (a.has_loop(x) != b.has_loop(c)) return false;
    for (Vertex z = 0; z < n; ++z)
      if (sigma[z] != -1 && a.adjacent(x, z) != b.adjacent(c, sigma[z])) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (++nodes > budget) throw BudgetExceeded("cover isomorphism search exceeded its budget");
    if (depth == order.size()) return true;
    Vertex x = order[depth];
    for (Vertex c : p2.fiber(p1(x))) {
      if (used[c] || !fits(x, c)) continue;
      sigma[x] = c;
      used[c] = true;
      if (self(self, depth + 1)) return true;
      sigma[x] = -1;
      used[c] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return sigma;
}

}  // namespace pi2
