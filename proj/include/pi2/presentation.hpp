#pragma once

// Group presentations of 2-fundamental groups read off the square complex
// |G|: one generator per non-tree edge and per loop, one relator per
// nondegenerate square class and one (l^2) per loop.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pi2/graph.hpp"
#include "pi2/integer_matrix.hpp"
#include "pi2/path.hpp"

namespace pi2 {

// ---- squares -----------------------------------------------------------------

struct Square {
  std::array<Vertex, 4> corners;
  Vertex operator[](int i) const { return corners[i & 3]; }
  bool degenerate() const { return corners[0] == corners[2] || corners[1] == corners[3]; }
  friend auto operator<=>(const Square&, const Square&) = default;
};

bool is_square(const Graph& g, const Square& s);
// Lexicographically least of the 8 rotations and reflections.
Square canonical(const Square& s);
// Every graph map C_4 -> G, degenerate ones included.
std::vector<Square> all_squares(const Graph& g);
// Canonical representatives of the nondegenerate classes, sorted.
std::vector<Square> enumerate_squares(const Graph& g);

// ---- presentations -----------------------------------------------------------

// Letter g + 1 is generator g, -(g + 1) its inverse.
using Word = std::vector<int>;

inline int letter(int generator, bool inverse = false) {
  return inverse ? -(generator + 1) : generator + 1;
}
inline int generator_of(int letter) { return letter > 0 ? letter - 1 : -letter - 1; }

Word free_reduce(const Word& w);
// Also cancels letters across the ends.
Word cyclic_reduce(const Word& w);
Word inverse(const Word& w);

struct GeneratorLabel {
  enum class Kind { edge, loop, schreier, other };
  Kind kind = Kind::other;
  Vertex a = -1;  // edge a -> b (a < b); loop at a
  Vertex b = -1;
  std::string name;
};

class GroupPresentation {
 public:
  GroupPresentation() = default;
  // Relators are cyclically reduced; letters are checked against the
  // generator count.
  GroupPresentation(std::vector<GeneratorLabel> labels, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }
  const std::vector<Word>& relators() const { return relators_; }

 private:
  std::vector<GeneratorLabel> labels_;
  std::vector<Word> relators_;
};

// Drops empty relators and eliminates generators killed by a one-letter
// relator, until neither applies.
GroupPresentation simplify(const GroupPresentation& p);

// Relator exponent sums: one row per relator.
IntMatrix exponent_matrix(const GroupPresentation& p);
AbelianGroup abelianize(const GroupPresentation& p);

// The abelianization as a concrete map: evaluate() sends a word to its
// normal form coordinates (torsion coordinates reduced mod d_i, then free
// coordinates), so two words agree in H_1 iff their images are equal.
class AbelianizationMap {
 public:
  explicit AbelianizationMap(const GroupPresentation& p);
  const AbelianGroup& group() const { return group_; }
  std::vector<Integer> evaluate(const Word& w) const;

 private:
  int generators_;
  IntMatrix v_;
  std::vector<Integer> moduli_;  // per coordinate; 0 means free
  std::vector<int> coordinates_;
  AbelianGroup group_;
};

struct ParityMap {
  std::vector<int> parity;  // per generator, 0 or 1
  bool is_zero() const;
  int of(const Word& w) const;
};

// Presentation of the component of `base`, with the bookkeeping needed to
// turn paths into words.
struct CwPresentation {
  GroupPresentation presentation;
  ParityMap parity;
  Vertex base = 0;
  VertexSet component;
  std::vector<Vertex> parent;  // BFS tree; -1 at base and outside
  std::vector<int> depth;      // -1 outside the component
  std::vector<Square> squares;
  std::vector<Vertex> loops;

  // Generator of the step a -> b (edge or loop), or nullopt for tree edges.
  std::optional<int> letter_of_step(Vertex a, Vertex b) const;
  Word word_of_path(const std::vector<Vertex>& path) const;
  // Tree path from the base to x.
  std::vector<Vertex> tree_path(Vertex x) const;
  // base -> a, the generator's edge, b -> base.
  std::vector<Vertex> generator_loop(int generator) const;
  // base -> corner, around the cell, back.
  std::vector<Vertex> relator_loop(int relator) const;

  Graph graph;
  std::map<Edge, int> edge_generator;  // (a, b) with a <= b
};

CwPresentation cw_presentation(const Graph& g, Vertex base);

// Index-2 (or 1) subgroup of even elements, by Reidemeister-Schreier with
// transversal {1, t}, t the first odd generator. Returned unchanged when
// every generator is even.
GroupPresentation even_part_presentation(const GroupPresentation& p, const ParityMap& parity);

// ---- decomposition and van Kampen ------------------------------------------

struct Decomposition {
  enum class Status { decomposed, inconclusive, refuted };
  Status status;
  // Leaves of the decomposition sequence in order, when decomposed.
  std::vector<Square> sequence;
  int depth = 0;  // split levels used, or needed when inconclusive
};

// A square lies in a subgraph when its corners and its four edges do.
bool square_in(const Subgraph& piece, const Square& s);

// Splits sigma = tau u tau' (replace corner 2 of tau / corner 0 of tau', or
// corner 3 / corner 1 by a new vertex) until every leaf lies in some piece.
// The set of decomposable squares is a finite fixpoint, so failure is
// reported as refuted when no depth would do, inconclusive when only a
// depth beyond the limit would.
Decomposition decompose_square(const Graph& g, const Square& sigma,
                               const std::vector<Subgraph>& pieces, int depth_limit = 4);

struct VanKampenReport {
  bool covers = false;               // union is G and the base is in every piece
  bool triple_connected = false;
  bool squares_decompose = false;    // every square decomposed within the limit
  std::vector<Square> inconclusive;  // squares needing a larger depth
  std::vector<Square> refuted;       // squares no depth decomposes
  GroupPresentation presentation;    // amalgamated over pairwise intersections
  bool hypotheses_hold() const { return covers && triple_connected && squares_decompose; }
};

// Throws DomainError if the pieces do not cover G or miss the base.
VanKampenReport van_kampen_presentation(const Graph& g, Vertex base,
                                        const std::vector<Subgraph>& pieces, int depth_limit = 4);

// Deletes backtracks v_{x-1} = v_{x+1} until none remain.
std::vector<Vertex> reduce_backtracks(const std::vector<Vertex>& path);
Path reduce_backtracks(const Path& p);

}  // namespace pi2
