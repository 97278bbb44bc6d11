#pragma once

// Neighborhood complexes, multihomomorphisms and Hom posets, order
// complexes, and the covering checks for complexes and posets. Also the
// translation between even loops of a graph and edge loops of its
// neighborhood complex.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pi2/graph.hpp"
#include "pi2/path.hpp"
#include "pi2/simplicial.hpp"

namespace pi2 {

// Facets are the maximal nonempty N(v).
SimplicialComplex neighborhood_complex(const Graph& g);

// η: V(source) -> nonempty subsets of V(target) with η(v) × η(w) ⊆ E for
// every edge (v, w) of the source.
class Multihom {
 public:
  Multihom(const Graph& source, const Graph& target, std::vector<VertexSet> values);

  const std::vector<VertexSet>& values() const { return values_; }
  const VertexSet& operator()(Vertex v) const { return values_[v]; }
  int source_size() const { return static_cast<int>(values_.size()); }
  // Every value is a singleton.
  bool is_graph_map() const;

  friend bool operator==(const Multihom&, const Multihom&) = default;
  friend auto operator<=>(const Multihom&, const Multihom&) = default;

 private:
  std::vector<VertexSet> values_;
};

// Pointwise inclusion.
bool less_equal(const Multihom& a, const Multihom& b);
// v ↦ f(η(v)).
Multihom push_forward(const GraphMap& f, const Graph& source, const Multihom& eta);

// A finite poset on 0..n-1.
class Poset {
 public:
  Poset() = default;
  // leq[i][j] is i <= j. Throws DomainError unless reflexive, antisymmetric
  // and transitive.
  explicit Poset(const std::vector<std::vector<bool>>& leq);

  int size() const { return n_; }
  bool leq(int a, int b) const { return rows_[a][b >> 6] >> (b & 63) & 1; }
  std::vector<int> minimal() const;
  std::vector<int> maximal() const;
  // b covers a: a < b with nothing strictly between.
  std::vector<int> upper_covers(int a) const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Elements are sorted values vectors; the poset order is pointwise
// inclusion.
struct HomPoset {
  std::vector<Multihom> elements;
  Poset poset;
  std::optional<int> index_of(const Multihom& eta) const;
};

inline constexpr long long kDefaultHomBudget = 2'000'000;

// All multihoms T -> G. Targets are limited to 64 vertices. Throws
// BudgetExceeded if more than budget search nodes are visited.
HomPoset hom_poset(const Graph& t, const Graph& g, long long budget = kDefaultHomBudget);

// Facets are the maximal chains. Throws BudgetExceeded past budget chains.
SimplicialComplex order_complex(const Poset& p, long long budget = kDefaultHomBudget);

// A map of posets, verified order preserving.
class PosetMap {
 public:
  PosetMap(Poset source, Poset target, std::vector<int> images);

  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  int operator()(int x) const { return images_[x]; }

 private:
  Poset source_;
  Poset target_;
  std::vector<int> images_;
};

// η ↦ p ∘ η between two Hom posets with the same source graph.
PosetMap induced_hom_map(const GraphMap& p, const Graph& t, const HomPoset& upstairs,
                         const HomPoset& downstairs);

struct PosetCoveringReport {
  bool holds = true;
  // First failure: x in the source, y in the target comparable to f(x), and
  // the number of lifts of y on the same side of x (which must be 1).
  struct Failure {
    int x;
    int y;
    bool below;
    int lifts;
  };
  std::optional<Failure> failure;
};

// For every x and every y <= f(x) (resp. y >= f(x)) there is exactly one
// x' <= x (resp. x' >= x) with f(x') = y.
PosetCoveringReport poset_covering_check(const PosetMap& f);

struct StarReport {
  bool holds = false;
  // p⁻¹(st(v)) and ∐ st(vᵢ) span the same subcomplex of 𝒩(source).
  bool equal = false;
  bool disjoint = false;
  int star_count = 0;
  SimplicialComplex preimage;
  std::vector<SimplicialComplex> stars;
  // Two fiber points and a vertex their stars share.
  struct Overlap {
    Vertex first;
    Vertex second;
    Vertex shared;
  };
  std::optional<Overlap> overlap;
};

// Compares p⁻¹(st(v)) with the union of st(vᵢ) over the fiber of v, inside
// 𝒩(source). Throws DomainError if v is isolated in the target.
StarReport star_decomposition_check(const GraphMap& p, Vertex v);

// Even-position subsequence φ(0), φ(2), ... of an even loop; an edge loop in
// 𝒩(G). Throws DomainError on odd length.
std::vector<Vertex> phi_map(const Path& phi);

// Interleaves the smallest common neighbor of each consecutive pair. Throws
// DomainError if some pair has none.
Path psi_map(const Graph& g, const std::vector<Vertex>& edge_path);

}  // namespace pi2
