#pragma once

// Abstract simplicial complexes stored by their facets.

#include <vector>

#include "pi2/graph.hpp"

namespace pi2 {

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Drops duplicates, empty sets and non-maximal sets.
  explicit SimplicialComplex(std::vector<VertexSet> facets);

  const std::vector<VertexSet>& facets() const { return facets_; }
  const VertexSet& vertices() const { return vertices_; }
  int dimension() const;
  bool contains(const VertexSet& simplex) const;
  // All simplices with dim + 1 vertices, sorted.
  std::vector<VertexSet> simplices(int dim) const;
  // Facets through v (closed star, as a subcomplex).
  SimplicialComplex star(Vertex v) const;
  // Connected component (through shared vertices) containing v.
  SimplicialComplex component_of(Vertex v) const;
  std::vector<SimplicialComplex> components() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<VertexSet> facets_;
  VertexSet vertices_;
};

}  // namespace pi2
