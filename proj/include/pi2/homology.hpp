#pragma once

// Integer homology in degrees 0 and 1: graphs through the square complex
// |G|, simplicial complexes through their 2-skeleton, and a cellular
// Mayer-Vietoris checker.

#include <string>
#include <utility>
#include <vector>

#include "pi2/graph.hpp"
#include "pi2/integer_matrix.hpp"
#include "pi2/presentation.hpp"
#include "pi2/simplicial.hpp"

namespace pi2 {

// Cells of |G|: vertices; edges a <= b (loops included) oriented a -> b;
// 2-cells for the canonical nondegenerate squares (oriented by corner order)
// followed by one cell per loop with boundary twice the loop.
struct ChainComplex2 {
  IntMatrix boundary1;  // vertices x edges
  IntMatrix boundary2;  // edges x 2-cells
  std::vector<Edge> edges;
  std::vector<Square> squares;
  std::vector<Vertex> loops;
  int vertex_count = 0;
  int square_cell(const Square& canonical_square) const;  // -1 if absent
};

ChainComplex2 square_complex(const Graph& g);

// Both the chain complex route and the sum of presentation
// abelianizations over components; throws std::logic_error if they differ.
AbelianGroup h1_graph(const Graph& g);
AbelianGroup h0_graph(const Graph& g);
AbelianGroup h1_chain_complex(const ChainComplex2& c);

// (H_0, H_1).
std::pair<AbelianGroup, AbelianGroup> simplicial_h01(const SimplicialComplex& k);

struct MayerVietorisReport {
  // Hypotheses.
  bool covers = false;
  std::vector<Square> undecomposed;  // squares of G not carried by K1 or K2
  bool inconclusive = false;         // some square only decomposes past the limit
  // H1(K1∩K2), H1(K1)+H1(K2), H1(U), H0(K1∩K2), H0(K1)+H0(K2), H0(U),
  // with U = |K1| ∪ |K2|.
  std::vector<AbelianGroup> groups;
  // im = ker at the four interior spots, then surjectivity at the end.
  std::vector<bool> exact;
  bool union_matches_graph = false;  // H1(|G|) ≅ H1(U)
  bool inclusion_iso = false;        // and the inclusion U -> |G| induces it
  bool passed() const;
};

// Throws DomainError unless K1 ∪ K2 = G.
MayerVietorisReport mayer_vietoris_check(const Graph& g, const Subgraph& k1, const Subgraph& k2,
                                         int depth_limit = 4);

}  // namespace pi2
