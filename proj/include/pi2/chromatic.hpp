#pragma once

// Exact chromatic numbers by backtracking, the homological obstruction to
// 3-colorability, and checks for 3-colorings against involutions of
// bipartite graphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pi2/graph.hpp"
#include "pi2/integer_matrix.hpp"
#include "pi2/path.hpp"

namespace pi2 {

using Coloring = std::vector<int>;

bool is_proper_coloring(const Graph& g, const Coloring& colors, int k);

// A proper k-coloring, if any. Vertices are tried in descending degree.
std::optional<Coloring> find_coloring(const Graph& g, int k);

// Least k <= max_k with a proper k-coloring; absent if none, and always
// absent when g has a loop.
std::optional<int> chromatic_number(const Graph& g, int max_k);

inline constexpr int kExhaustiveColoringVertices = 20;

struct ColoringSweep {
  std::uint64_t count = 0;
  // False when the graph was too large and colorings were sampled.
  bool exhaustive = true;
};

// Calls visit on every proper k-coloring (exhaustive up to
// kExhaustiveColoringVertices vertices). Larger graphs get `samples`
// colorings from randomized backtracking with a fixed seed.
ColoringSweep for_each_coloring(const Graph& g, int k,
                                const std::function<void(const Coloring&)>& visit,
                                int samples = 2000);

enum class ObstructionVerdict { bipartite, chi_at_least_4, no_obstruction };
const char* to_string(ObstructionVerdict v);

struct ObstructionReport {
  ObstructionVerdict verdict = ObstructionVerdict::bipartite;
  // The group whose free rank decided the verdict (absent for bipartite).
  std::optional<AbelianGroup> group;
};

// Non-bipartite and H1(G) of free rank 0 certifies χ >= 4. Throws
// DomainError on disconnected input.
ObstructionReport three_color_obstruction(const Graph& g);

// Same verdict from H1 of the component of vertex 0 in the neighborhood
// complex. Throws DomainError on disconnected or bipartite input.
ObstructionReport nbhd_obstruction(const Graph& g);

// τ: g -> g with τ ∘ τ = id.
class Involution {
 public:
  Involution(const Graph& g, std::vector<Vertex> images);
  const std::vector<Vertex>& images() const { return images_; }
  Vertex operator()(Vertex v) const { return images_[v]; }
  bool has_fixed_point() const;

 private:
  std::vector<Vertex> images_;
};

// Even iff τ keeps the bipartition classes. Throws DomainError unless g is
// connected and bipartite.
Parity involution_parity(const Graph& g, const Involution& tau);

struct InvolutionReport {
  Parity parity = Parity::even;
  AbelianGroup h1;
  // Connected, bipartite, and H1 has no free summand.
  bool hypothesis = false;
  ColoringSweep sweep;
  // Colorings where the conclusion fails: no v with f(v) = f(τv) (even), or
  // f = f∘τ (odd).
  std::uint64_t violations = 0;
  std::optional<Coloring> first_violation;
  bool holds() const { return !hypothesis || violations == 0; }
};

// Throws DomainError unless g is connected and bipartite.
InvolutionReport verify_involution_theorem(const Graph& g, const Involution& tau);

// g plus the edges (x, τx); fixed points become loops.
Graph g_tau(const Graph& g, const Involution& tau);

}  // namespace pi2
