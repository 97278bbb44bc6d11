#include "pi2/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "pi2/errors.hpp"

namespace pi2 {

namespace {

void sort_unique(std::vector<Vertex>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

// ---- Graph -------------------------------------------------------------------

Graph::Graph(int vertex_count) : Graph(vertex_count, std::span<const Edge>{}) {}

Graph::Graph(int vertex_count, std::initializer_list<Edge> edges)
    : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph::Graph(int vertex_count, std::span<const Edge> edges) : n_(vertex_count) {
  if (vertex_count < 0) throw DomainError("negative vertex count");
  adj_.assign(n_, {});
  matrix_.assign(static_cast<std::size_t>(n_) * n_, false);
  for (auto [a, b] : edges) {
    if (!valid(a) || !valid(b)) {
      throw DomainError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                        ") has an endpoint outside 0.." +
                        std::to_string(n_ - 1));
    }
    if (matrix_[static_cast<std::size_t>(a) * n_ + b]) continue;
    matrix_[static_cast<std::size_t>(a) * n_ + b] = true;
    matrix_[static_cast<std::size_t>(b) * n_ + a] = true;
    adj_[a].push_back(b);
    if (a != b) adj_[b].push_back(a);
  }
  for (auto& row : adj_) std::sort(row.begin(), row.end());
}

bool Graph::has_loops() const {
  for (Vertex v = 0; v < n_; ++v)
    if (has_loop(v)) return true;
  return false;
}

void Graph::check_vertex(Vertex v) const {
  if (!valid(v))
    throw DomainError("vertex " + std::to_string(v) + " is not in 0.." +
                      std::to_string(n_ - 1));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b : adj_[a])
      if (a <= b) out.emplace_back(a, b);
  return out;
}

int Graph::edge_count() const {
  int count = 0;
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b : adj_[a])
      if (a <= b) ++count;
  return count;
}

// ---- GraphMap ------------------------------------------------------------------

bool is_graph_map(const Graph& source, const Graph& target,
                  std::span<const Vertex> assignment) {
  if (static_cast<int>(assignment.size()) != source.vertex_count()) return false;
  for (Vertex t : assignment)
    if (!target.valid(t)) return false;
  for (auto [a, b] : source.edges())
    if (!target.adjacent(assignment[a], assignment[b])) return false;
  return true;
}

GraphMap::GraphMap(Graph source, Graph target, std::vector<Vertex> assignment)
    : source_(std::move(source)),
      target_(std::move(target)),
      assignment_(std::move(assignment)) {
  if (static_cast<int>(assignment_.size()) != source_.vertex_count())
    throw DomainError("map assigns " + std::to_string(assignment_.size()) +
                      " vertices but the source has " +
                      std::to_string(source_.vertex_count()));
  for (Vertex t : assignment_) target_.check_vertex(t);
  for (auto [a, b] : source_.edges()) {
    if (!target_.adjacent(assignment_[a], assignment_[b]))
      throw DomainError("not a graph homomorphism: edge (" + std::to_string(a) +
                        "," + std::to_string(b) + ") maps to a non-edge");
  }
}

GraphMap GraphMap::identity(const Graph& g) {
  std::vector<Vertex> id(g.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  return GraphMap(g, g, std::move(id));
}

bool GraphMap::is_surjective() const {
  std::vector<bool> hit(target_.vertex_count(), false);
  for (Vertex t : assignment_) hit[t] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

VertexSet GraphMap::fiber(Vertex t) const {
  VertexSet out;
  for (Vertex v = 0; v < source_.vertex_count(); ++v)
    if (assignment_[v] == t) out.push_back(v);
  return out;
}

GraphMap compose(const GraphMap& first, const GraphMap& second) {
  if (!(first.target() == second.source()))
    throw DomainError("maps are not composable");
  std::vector<Vertex> out(first.source().vertex_count());
  for (Vertex v = 0; v < first.source().vertex_count(); ++v)
    out[v] = second(first(v));
  return GraphMap(first.source(), second.target(), std::move(out));
}

BasedGraph::BasedGraph(Graph g, Vertex base) : graph(std::move(g)), basepoint(base) {
  graph.check_vertex(basepoint);
}

// ---- GroupAction -------------------------------------------------------------

GroupAction::GroupAction(Graph g, std::vector<std::vector<int>> multiplication,
                         std::vector<std::vector<Vertex>> images)
    : graph_(std::move(g)), mult_(std::move(multiplication)), images_(std::move(images)) {
  const int k = static_cast<int>(mult_.size());
  if (k == 0) throw DomainError("a group has at least one element");
  if (static_cast<int>(images_.size()) != k)
    throw DomainError("one vertex image list per group element is required");
  for (const auto& row : mult_) {
    if (static_cast<int>(row.size()) != k)
      throw DomainError("multiplication table is not square");
    for (int x : row)
      if (x < 0 || x >= k) throw DomainError("multiplication table entry out of range");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw DomainError("multiplication table is not associative");
  identity_ = -1;
  for (int e = 0; e < k && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) ok = mult_[e][a] == a && mult_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("multiplication table has no identity");
  for (int a = 0; a < k; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < k && !has_inverse; ++b)
      has_inverse = mult_[a][b] == identity_ && mult_[b][a] == identity_;
    if (!has_inverse) throw DomainError("group element without inverse");
  }
  const int n = graph_.vertex_count();
  for (int a = 0; a < k; ++a) {
    if (static_cast<int>(images_[a].size()) != n)
      throw DomainError("action image list has the wrong length");
    for (Vertex v : images_[a]) graph_.check_vertex(v);
    for (auto [x, y] : graph_.edges())
      if (!graph_.adjacent(images_[a][x], images_[a][y]))
        throw DomainError("group element does not act by a graph map");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (images_[identity_][v] != v) throw DomainError("identity acts nontrivially");
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        if (images_[b][images_[a][v]] != images_[mult_[a][b]][v])
          throw DomainError("not a right action: (v·a)·b != v·(ab)");
  }
}

GroupAction GroupAction::cyclic(Graph g, std::vector<Vertex> generator) {
  const int n = g.vertex_count();
  if (static_cast<int>(generator.size()) != n)
    throw DomainError("generator must map every vertex");
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Vertex>> powers{id};
  std::vector<Vertex> current = generator;
  while (current != id) {
    powers.push_back(current);
    if (powers.size() > 100000) throw DomainError("generator has huge order");
    std::vector<Vertex> next(n);
    for (Vertex v = 0; v < n; ++v) {
      g.check_vertex(current[v]);
      next[v] = generator[current[v]];
    }
    current = std::move(next);
  }
  const int m = static_cast<int>(powers.size());
  std::vector<std::vector<int>> mult(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mult[a][b] = (a + b) % m;
  return GroupAction(std::move(g), std::move(mult), std::move(powers));
}

GroupAction GroupAction::trivial(Graph g) {
  std::vector<Vertex> id(g.vertex_count());
  std::iota(id.begin(), id.end(), 0);
  return GroupAction(std::move(g), {{0}}, {id});
}

bool GroupAction::is_free() const {
  for (int a = 0; a < order(); ++a) {
    if (a == identity_) continue;
    for (Vertex v = 0; v < graph_.vertex_count(); ++v)
      if (images_[a][v] == v) return false;
  }
  return true;
}

bool GroupAction::is_effective() const {
  for (int a = 0; a < order(); ++a) {
    if (a == identity_) continue;
    bool moves = false;
    for (Vertex v = 0; v < graph_.vertex_count() && !moves; ++v)
      moves = images_[a][v] != v;
    if (!moves) return false;
  }
  return true;
}

std::vector<VertexSet> GroupAction::orbits() const {
  const int n = graph_.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    VertexSet orbit;
    for (int a = 0; a < order(); ++a) orbit.push_back(images_[a][v]);
    sort_unique(orbit);
    for (Vertex w : orbit) seen[w] = true;
    out.push_back(std::move(orbit));
  }
  return out;
}

// ---- Subgraph ------------------------------------------------------------------

Subgraph::Subgraph(Graph graph, VertexSet vertices)
    : graph_(std::move(graph)), vertices_(std::move(vertices)) {
  member_.assign(graph_.vertex_count(), false);
  for (Vertex v : vertices_) member_[v] = true;
}

Subgraph::Subgraph(const Graph& parent, VertexSet vertices, std::vector<Edge> edges) {
  sort_unique(vertices);
  for (Vertex v : vertices) parent.check_vertex(v);
  std::vector<bool> member(parent.vertex_count(), false);
  for (Vertex v : vertices) member[v] = true;
  for (auto [a, b] : edges) {
    parent.check_vertex(a);
    parent.check_vertex(b);
    if (!parent.adjacent(a, b))
      throw DomainError("subgraph edge (" + std::to_string(a) + "," +
                        std::to_string(b) + ") is not an edge of the parent");
    if (!member[a] || !member[b])
      throw DomainError("subgraph edge endpoint is not a subgraph vertex");
  }
  *this = Subgraph(Graph(parent.vertex_count(), edges), std::move(vertices));
}

Subgraph Subgraph::whole(const Graph& parent) {
  VertexSet all(parent.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return Subgraph(parent, std::move(all), parent.edges());
}

Subgraph Subgraph::induced(const Graph& parent, VertexSet vertices) {
  sort_unique(vertices);
  std::vector<bool> member(parent.vertex_count(), false);
  for (Vertex v : vertices) {
    parent.check_vertex(v);
    member[v] = true;
  }
  std::vector<Edge> edges;
  for (auto [a, b] : parent.edges())
    if (member[a] && member[b]) edges.emplace_back(a, b);
  return Subgraph(parent, std::move(vertices), std::move(edges));
}

Graph Subgraph::compact() const {
  return induced_subgraph(graph_, vertices_).graph;
}

bool Subgraph::is_connected() const { return component_count() == 1; }

int Subgraph::component_count() const {
  auto comps = connected_components(compact());
  return static_cast<int>(comps.size());
}

Subgraph intersect(const Subgraph& a, const Subgraph& b) {
  if (a.parent_vertex_count() != b.parent_vertex_count())
    throw DomainError("subgraphs of different parents");
  VertexSet vs;
  std::set_intersection(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                        b.vertices_.end(), std::back_inserter(vs));
  std::vector<Edge> es;
  for (auto [x, y] : a.graph_.edges())
    if (b.graph_.adjacent(x, y)) es.emplace_back(x, y);
  return Subgraph(Graph(a.parent_vertex_count(), es), std::move(vs));
}

Subgraph unite(const Subgraph& a, const Subgraph& b) {
  if (a.parent_vertex_count() != b.parent_vertex_count())
    throw DomainError("subgraphs of different parents");
  VertexSet vs;
  std::set_union(a.vertices_.begin(), a.vertices_.end(), b.vertices_.begin(),
                 b.vertices_.end(), std::back_inserter(vs));
  std::vector<Edge> es = a.graph_.edges();
  for (auto e : b.graph_.edges()) es.push_back(e);
  return Subgraph(Graph(a.parent_vertex_count(), es), std::move(vs));
}

// ---- neighborhoods -------------------------------------------------------------

VertexSet neighborhood(const Graph& g, Vertex v) {
  g.check_vertex(v);
  auto nb = g.neighbors(v);
  return VertexSet(nb.begin(), nb.end());
}

VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> set) {
  VertexSet out;
  for (Vertex v : set) {
    g.check_vertex(v);
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  }
  sort_unique(out);
  return out;
}

VertexSet neighborhood2(const Graph& g, Vertex v) {
  auto n1 = neighborhood(g, v);
  return neighborhood_of_set(g, n1);
}

VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a);
  auto nb = g.neighbors(b);
  VertexSet out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                        std::back_inserter(out));
  return out;
}

// ---- constructions -------------------------------------------------------------

Graph product(const Graph& g, const Graph& h) {
  std::vector<Edge> edges;
  for (auto [x1, x2] : g.edges())
    for (auto [y1, y2] : h.edges()) {
      edges.emplace_back(product_id(h, x1, y1), product_id(h, x2, y2));
      edges.emplace_back(product_id(h, x1, y2), product_id(h, x2, y1));
    }
  return Graph(g.vertex_count() * h.vertex_count(), edges);
}

GraphMap first_projection(const Graph& g, const Graph& h) {
  std::vector<Vertex> a(g.vertex_count() * h.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = 0; y < h.vertex_count(); ++y) a[product_id(h, x, y)] = x;
  return GraphMap(product(g, h), g, std::move(a));
}

GraphMap second_projection(const Graph& g, const Graph& h) {
  std::vector<Vertex> a(g.vertex_count() * h.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    for (Vertex y = 0; y < h.vertex_count(); ++y) a[product_id(h, x, y)] = y;
  return GraphMap(product(g, h), h, std::move(a));
}

Graph coproduct(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int shift = g.vertex_count();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

Quotient quotient_by_relation(const Graph& g, const std::vector<VertexSet>& classes) {
  const int n = g.vertex_count();
  std::vector<Vertex> cls(n, -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw DomainError("empty class in partition");
    for (Vertex v : classes[i]) {
      g.check_vertex(v);
      if (cls[v] != -1) throw DomainError("classes overlap: not a partition");
      cls[v] = static_cast<Vertex>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (cls[v] == -1) throw DomainError("classes do not cover every vertex");
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(cls[a], cls[b]);
  Graph q(static_cast<int>(classes.size()), edges);
  GraphMap map(g, q, cls);
  return Quotient{std::move(q), std::move(map)};
}

Quotient quotient_by_action(const GroupAction& action) {
  return quotient_by_relation(action.graph(), action.orbits());
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  InducedSubgraph out;
  out.old_to_new.assign(g.vertex_count(), -1);
  for (Vertex v : keep) {
    g.check_vertex(v);
    if (out.old_to_new[v] != -1) continue;
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (out.old_to_new[a] >= 0 && out.old_to_new[b] >= 0)
      edges.emplace_back(out.old_to_new[a], out.old_to_new[b]);
  out.graph = Graph(static_cast<int>(out.new_to_old.size()), edges);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> find_folds(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nv = g.neighbors(v);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (w == v) continue;
      auto nw = g.neighbors(w);
      if (std::includes(nw.begin(), nw.end(), nv.begin(), nv.end()))
        out.emplace_back(v, w);
    }
  }
  return out;
}

Fold apply_fold(const Graph& g, Vertex v, Vertex w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) throw DomainError("fold needs two distinct vertices");
  auto nv = g.neighbors(v);
  auto nw = g.neighbors(w);
  if (!std::includes(nw.begin(), nw.end(), nv.begin(), nv.end()))
    throw DomainError("cannot fold " + std::to_string(v) + " onto " +
                      std::to_string(w) + ": N(v) is not contained in N(w)");
  VertexSet keep;
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (x != v) keep.push_back(x);
  auto sub = induced_subgraph(g, keep);
  std::vector<Vertex> fold_assignment(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    fold_assignment[x] = sub.old_to_new[x == v ? w : x];
  GraphMap folding(g, sub.graph, std::move(fold_assignment));
  GraphMap inclusion(sub.graph, g, sub.new_to_old);
  return Fold{sub.graph, std::move(folding), std::move(inclusion), sub.old_to_new,
              sub.new_to_old};
}

// ---- connectivity ----------------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet component_of(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<bool> seen(g.vertex_count(), false);
  VertexSet comp;
  std::deque<Vertex> queue{v};
  seen[v] = true;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    comp.push_back(x);
    for (Vertex y : g.neighbors(x))
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.vertex_count();
  Bipartition out{std::vector<int>(n, -1)};
  for (Vertex s = 0; s < n; ++s) {
    if (out.side[s] != -1) continue;
    out.side[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (out.side[y] == -1) {
          out.side[y] = 1 - out.side[x];
          queue.push_back(y);
        } else if (out.side[y] == out.side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return out;
}

namespace {

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<Vertex> order;
  std::vector<Vertex> map;
  std::vector<bool> used;
  std::size_t limit;
  std::vector<std::vector<Vertex>> found;

  bool extend(std::size_t depth) {
    if (depth == order.size()) {
      found.push_back(map);
      return found.size() >= limit;
    }
    Vertex x = order[depth];
    for (Vertex y = 0; y < h.vertex_count(); ++y) {
      if (used[y] || g.degree(x) != h.degree(y) || g.has_loop(x) != h.has_loop(y))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex px = order[i];
        ok = g.adjacent(x, px) == h.adjacent(y, map[px]);
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (extend(depth + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  }
};

// BFS order so each new vertex is constrained by earlier ones.
std::vector<Vertex> search_order(const Graph& g) {
  std::vector<Vertex> order;
  for (const auto& comp : connected_components(g)) {
    Vertex start = comp.front();
    for (Vertex v : comp)
      if (g.degree(v) > g.degree(start)) start = v;
    std::vector<bool> seen(g.vertex_count(), false);
    std::deque<Vertex> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
  }
  return order;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return std::nullopt;
  std::vector<int> dg, dh;
  for (Vertex v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
  for (Vertex v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;
  IsoSearch s{g, h, search_order(g), std::vector<Vertex>(g.vertex_count(), -1),
              std::vector<bool>(h.vertex_count(), false), 1, {}};
  s.extend(0);
  if (s.found.empty()) return std::nullopt;
  return s.found.front();
}

std::vector<std::vector<Vertex>> automorphisms(const Graph& g, std::size_t limit) {
  IsoSearch s{g, g, search_order(g), std::vector<Vertex>(g.vertex_count(), -1),
              std::vector<bool>(g.vertex_count(), false), limit, {}};
  s.extend(0);
  std::sort(s.found.begin(), s.found.end());
  return s.found;
}

// ---- named families --------------------------------------------------------------

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("K_n needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("C_n needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 0) throw DomainError("L_n needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n + 1, edges);
}

Graph looped_path(int n) {
  if (n < 0) throw DomainError("I_n needs n >= 0");
  std::vector<Edge> edges;
  for (Vertex a = 0; a <= n; ++a) {
    edges.emplace_back(a, a);
    if (a < n) edges.emplace_back(a, a + 1);
  }
  return Graph(n + 1, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph(10, edges);
}

Graph hypercube(int r) {
  if (r < 0 || r > 16) throw DomainError("hypercube dimension out of range");
  const int n = 1 << r;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < r; ++bit) {
      Vertex w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  return Graph(n, edges);
}

std::optional<Vertex> GridFamily::find(const std::vector<int>& point) const {
  auto it = std::lower_bound(points.begin(), points.end(), point);
  if (it == points.end() || *it != point) return std::nullopt;
  return static_cast<Vertex>(it - points.begin());
}

GridFamily grid_family(const std::vector<int>& sizes, int s) {
  const int r = static_cast<int>(sizes.size());
  if (r == 0) throw DomainError("G(n_1..n_r; s) needs r >= 1");
  for (int ni : sizes)
    if (ni < 1) throw DomainError("G(n_1..n_r; s) needs every n_i >= 1");
  if (s < 0 || s > r - 2)
    throw DomainError("G(n_1..n_r; s) needs 0 <= s <= r - 2");
  GridFamily out;
  std::vector<int> x(r, 0);
  while (true) {
    int boundary = 0;
    for (int i = 0; i < r; ++i)
      if (x[i] == 0 || x[i] == sizes[i]) ++boundary;
    if (boundary >= s) out.points.push_back(x);
    int i = r - 1;
    while (i >= 0 && x[i] == sizes[i]) x[i--] = 0;
    if (i < 0) break;
    ++x[i];
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < out.points.size(); ++a)
    for (int i = 0; i < r; ++i) {
      auto y = out.points[a];
      if (y[i] == sizes[i]) continue;
      ++y[i];
      if (auto b = out.find(y)) edges.emplace_back(static_cast<Vertex>(a), *b);
    }
  out.graph = Graph(static_cast<int>(out.points.size()), edges);
  return out;
}

}  // namespace pi2

namespace pi2 {

namespace {

int parse_parameter(const std::string& spec, const std::string& digits) {
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw DomainError("bad named graph '" + spec + "'");
  return std::stoi(digits);
}

Graph named_factor(const std::string& spec) {
  if (spec == "petersen" || spec == "Petersen") return petersen_graph();
  if (spec.size() >= 2 && spec[0] == 'G' && spec[1] == '(' && spec.back() == ')') {
    auto body = spec.substr(2, spec.size() - 3);
    auto semi = body.find(';');
    if (semi == std::string::npos) throw DomainError("bad named graph '" + spec + "'");
    std::vector<int> sizes;
    std::string sizes_text = body.substr(0, semi);
    std::size_t start = 0;
    while (true) {
      auto comma = sizes_text.find(',', start);
      sizes.push_back(parse_parameter(spec, sizes_text.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return grid_family(sizes, parse_parameter(spec, body.substr(semi + 1))).graph;
  }
  if (spec.empty()) throw DomainError("empty named graph");
  int n = parse_parameter(spec, spec.substr(1));
  switch (spec[0]) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'L': return path_graph(n);
    case 'I': return looped_path(n);
    case 'Q': return hypercube(n);
    default: throw DomainError("unknown named graph '" + spec + "'");
  }
}

}  // namespace

Graph named_graph(const std::string& spec) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i < spec.size() && spec[i] == '(') ++depth;
    if (i < spec.size() && spec[i] == ')') --depth;
    if (i == spec.size() || (spec[i] == 'x' && depth == 0)) {
      factors.push_back(spec.substr(start, i - start));
      start = i + 1;
    }
  }
  Graph g = named_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) g = product(g, named_factor(factors[i]));
  return g;
}

}  // namespace pi2
