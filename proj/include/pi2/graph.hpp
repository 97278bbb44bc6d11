#pragma once

// Finite graphs with loops, graph homomorphisms and the standard
// constructions on them (products, coproducts, quotients, folds).
//
// Vertices are dense ids 0..n-1. Every construction returns a fresh graph;
// constructions that delete or merge vertices also return the id maps.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pi2 {

using Vertex = int;
// Sorted, duplicate-free.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);
  // Edges are undirected; (a, a) is a loop; duplicates and reversed copies
  // are ignored.
  Graph(int vertex_count, std::span<const Edge> edges);
  Graph(int vertex_count, std::initializer_list<Edge> edges);

  int vertex_count() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool adjacent(Vertex a, Vertex b) const {
    return matrix_[static_cast<std::size_t>(a) * n_ + b];
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_loop(Vertex v) const { return adjacent(v, v); }
  bool has_loops() const;
  bool valid(Vertex v) const { return v >= 0 && v < n_; }
  void check_vertex(Vertex v) const;

  // Undirected edges as pairs a <= b in lexicographic order.
  std::vector<Edge> edges() const;
  int edge_count() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<bool> matrix_;
};

bool is_graph_map(const Graph& source, const Graph& target,
                  std::span<const Vertex> assignment);

// A vertex map verified to be a graph homomorphism.
class GraphMap {
 public:
  GraphMap(Graph source, Graph target, std::vector<Vertex> assignment);

  static GraphMap identity(const Graph& g);

  const Graph& source() const { return source_; }
  const Graph& target() const { return target_; }
  const std::vector<Vertex>& assignment() const { return assignment_; }
  Vertex operator()(Vertex v) const { return assignment_[v]; }
  bool is_surjective() const;
  // Vertices of the source mapped to t, ascending.
  VertexSet fiber(Vertex t) const;

  friend bool operator==(const GraphMap&, const GraphMap&) = default;

 private:
  Graph source_;
  Graph target_;
  std::vector<Vertex> assignment_;
};

// second ∘ first.
GraphMap compose(const GraphMap& first, const GraphMap& second);

struct BasedGraph {
  BasedGraph(Graph g, Vertex base);
  Graph graph;
  Vertex basepoint;
};

// Right action of a finite group on a graph. Elements are 0..order-1 with an
// explicit multiplication table; action(v, g) is v·g.
class GroupAction {
 public:
  // multiplication[a][b] = a·b; images[g][v] = v·g.
  GroupAction(Graph g, std::vector<std::vector<int>> multiplication,
              std::vector<std::vector<Vertex>> images);

  // The cyclic group generated by one automorphism.
  static GroupAction cyclic(Graph g, std::vector<Vertex> generator);
  static GroupAction trivial(Graph g);

  const Graph& graph() const { return graph_; }
  int order() const { return static_cast<int>(mult_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return mult_[a][b]; }
  Vertex act(Vertex v, int element) const { return images_[element][v]; }
  bool is_free() const;
  bool is_effective() const;
  // Orbits sorted by smallest member.
  std::vector<VertexSet> orbits() const;

 private:
  Graph graph_;
  std::vector<std::vector<int>> mult_;
  std::vector<std::vector<Vertex>> images_;
  int identity_ = 0;
};

// A subgraph of a fixed parent: a vertex subset with a subset of the edges
// among those vertices. Not necessarily induced.
class Subgraph {
 public:
  Subgraph(const Graph& parent, VertexSet vertices, std::vector<Edge> edges);
  static Subgraph whole(const Graph& parent);
  static Subgraph induced(const Graph& parent, VertexSet vertices);

  int parent_vertex_count() const { return graph_.vertex_count(); }
  const VertexSet& vertices() const { return vertices_; }
  bool contains_vertex(Vertex v) const { return member_[v]; }
  bool contains_edge(Vertex a, Vertex b) const { return graph_.adjacent(a, b); }
  // The subgraph's edges on the parent's vertex ids; non-members are
  // isolated.
  const Graph& as_graph() const { return graph_; }
  // Members only, compacted to ids 0..k-1 in ascending parent order.
  Graph compact() const;
  bool is_connected() const;
  int component_count() const;

  friend bool operator==(const Subgraph& a, const Subgraph& b) {
    return a.vertices_ == b.vertices_ && a.graph_ == b.graph_;
  }

 private:
  Subgraph(Graph graph, VertexSet vertices);
  Graph graph_;
  VertexSet vertices_;
  std::vector<bool> member_;
  friend Subgraph intersect(const Subgraph&, const Subgraph&);
  friend Subgraph unite(const Subgraph&, const Subgraph&);
};

Subgraph intersect(const Subgraph& a, const Subgraph& b);
Subgraph unite(const Subgraph& a, const Subgraph& b);

// ---- neighborhoods ---------------------------------------------------------

VertexSet neighborhood(const Graph& g, Vertex v);
VertexSet neighborhood_of_set(const Graph& g, std::span<const Vertex> set);
// N(N(v)).
VertexSet neighborhood2(const Graph& g, Vertex v);
VertexSet common_neighbors(const Graph& g, Vertex a, Vertex b);

// ---- constructions ---------------------------------------------------------

// Vertex (x, y) gets id x * |V(h)| + y.
Graph product(const Graph& g, const Graph& h);
inline Vertex product_id(const Graph& h, Vertex x, Vertex y) {
  return x * h.vertex_count() + y;
}
GraphMap first_projection(const Graph& g, const Graph& h);
GraphMap second_projection(const Graph& g, const Graph& h);

// h's ids are shifted by g.vertex_count().
Graph coproduct(const Graph& g, const Graph& h);

struct Quotient {
  Graph graph;
  GraphMap map;
};

// Class i of the partition becomes vertex i.
Quotient quotient_by_relation(const Graph& g,
                              const std::vector<VertexSet>& classes);
// Orbits in order of smallest member.
Quotient quotient_by_action(const GroupAction& action);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> new_to_old;
  std::vector<Vertex> old_to_new;  // -1 for dropped vertices
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Pairs (v, w), v != w, with N(v) ⊆ N(w), lexicographic.
std::vector<std::pair<Vertex, Vertex>> find_folds(const Graph& g);

struct Fold {
  Graph graph;  // G \ v, ids compacted
  GraphMap folding;   // G -> G \ v, v ↦ w
  GraphMap inclusion; // G \ v -> G
  std::vector<Vertex> old_to_new;  // -1 at v
  std::vector<Vertex> new_to_old;
};
Fold apply_fold(const Graph& g, Vertex v, Vertex w);

// ---- connectivity ----------------------------------------------------------

// Components as sorted id lists, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
VertexSet component_of(const Graph& g, Vertex v);
// By convention the empty graph is not connected.
bool is_connected(const Graph& g);

// side[v] ∈ {0, 1}; in each component the smallest id has side 0. Loops make
// a component non-bipartite.
struct Bipartition {
  std::vector<int> side;
};
std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Brute-force isomorphism search; returns the vertex bijection g -> h.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g,
                                                    const Graph& h);
// All automorphisms (brute force, small graphs only).
std::vector<std::vector<Vertex>> automorphisms(const Graph& g,
                                               std::size_t limit = 100000);

// ---- named families ----------------------------------------------------------

Graph complete_graph(int n);
// C_n, n >= 3; vertex i ~ i±1 mod n.
Graph cycle_graph(int n);
// L_n: vertices 0..n, i ~ i+1.
Graph path_graph(int n);
// I_n: L_n with a loop at every vertex.
Graph looped_path(int n);
// Outer 5-cycle 0..4, spokes i ~ i+5, inner pentagram i+5 ~ (i+2 mod 5)+5.
Graph petersen_graph();
// Q_r on bit vectors; vertex id = the integer with those bits.
Graph hypercube(int r);

// The graph G(n_1, ..., n_r; s): integer points x with 0 <= x_i <= n_i and
// at least s coordinates on the boundary {0, n_i}, adjacent at L1 distance 1.
// Ids enumerate the points lexicographically (x_1 most significant).
struct GridFamily {
  Graph graph;
  std::vector<std::vector<int>> points;
  std::optional<Vertex> find(const std::vector<int>& point) const;
};
GridFamily grid_family(const std::vector<int>& sizes, int s);

// "K4", "C5", "L3", "I2", "Q3", "petersen", "G(2,2;0)", or "K2xC5" for a
// product of any of these.
Graph named_graph(const std::string& spec);

}  // namespace pi2
