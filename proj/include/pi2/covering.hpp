#pragma once

// 2-covering maps: verification for maps and group actions, pullbacks,
// unique lifting of paths, multihoms, homotopies and maps, monodromy on
// fibers, truncated universal covers and voltage-graph covers.

#include <optional>
#include <string>
#include <vector>

#include "pi2/complexes.hpp"
#include "pi2/graph.hpp"
#include "pi2/path.hpp"
#include "pi2/presentation.hpp"

namespace pi2 {

struct TwoCoveringWitness {
  enum class Condition { n_injective, n_surjective, n2_injective, n2_surjective };
  // N(v) -> N(pv) onto and N2(v) -> N2(pv) one-to-one at every v.
  bool verdict = true;
  // All four restrictions bijective everywhere. Always equals verdict.
  bool bijective = true;
  struct Failure {
    Vertex v;
    Condition condition;
    // Two vertices with the same image, or the target vertices missed.
    VertexSet offending;
  };
  // First failure by vertex, then in Condition order.
  std::optional<Failure> failure;
};

const char* to_string(TwoCoveringWitness::Condition c);

TwoCoveringWitness two_covering_witness(const GraphMap& p);
bool is_two_covering(const GraphMap& p);

struct ActionWitness {
  bool verdict = true;
  // N2(v) and N2(v·element) share `shared`.
  struct Failure {
    Vertex v;
    int element;
    Vertex shared;
  };
  std::optional<Failure> failure;
};

// N2(v) ∩ N2(vγ) = ∅ for every v and every γ other than the identity.
ActionWitness is_two_covering_action(const GroupAction& a);

struct CompositionFacts {
  bool f_covering, g_covering, gf_covering, f_surjective;
  // f, g coverings => gf; g, gf => f; f onto covering, gf => g.
  bool composite_rule, left_cancel_rule, right_cancel_rule;
  bool all_rules_hold() const { return composite_rule && left_cancel_rule && right_cancel_rule; }
};

// f: A -> B and g: B -> C. Throws DomainError if they do not compose.
CompositionFacts compose_covering_facts(const GraphMap& f, const GraphMap& g);

struct Pullback {
  Graph graph;
  // Vertex i is pairs[i] = (t, k) with f(t) = p(k), in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> pairs;
  GraphMap to_first;   // onto the source of f
  GraphMap to_second;  // onto the source of p
};

// f*K for f: T -> H and p: K -> H. Throws DomainError if the targets differ.
Pullback pullback(const GraphMap& f, const GraphMap& p);

// The unique path from start over phi. Throws DomainError unless p is a
// 2-covering with p(start) = phi(0).
Path lift_path(const GraphMap& p, const Path& phi, Vertex start);

enum class LiftDirection { down, up };

// The unique η' <= η (down) or η' >= η (up) with p ∘ η' = ζ. Throws
// DomainError unless t has no isolated vertices, p is a 2-covering and p ∘ η
// compares to ζ as the direction requires.
Multihom lift_multihom(const GraphMap& p, const Graph& t, const Multihom& eta,
                       const Multihom& zeta, LiftDirection direction);

// F: T × I_n -> H (vertex (x, i) is x * (n + 1) + i), f: T -> G with
// p ∘ f = F(·, 0). Returns the unique F̃: T × I_n -> G with F̃(·, 0) = f and
// p ∘ F̃ = F.
GraphMap lift_homotopy(const GraphMap& p, const Graph& t, int n, const GraphMap& homotopy,
                       const GraphMap& f);

// A lift of f: (T, x) -> (H, p(v)) to (G, v), built along a BFS tree of T
// and then checked on every edge; absent if some edge fails.
std::optional<GraphMap> attempt_lift_map(const GraphMap& p, Vertex v, const GraphMap& f,
                                         Vertex x);

// Fiber permutations act on the right: the permutation of φ·ψ is
// perm(φ) followed by perm(ψ), i.e. i ↦ perm_ψ[perm_φ[i]].
struct Monodromy {
  Vertex basepoint = 0;
  VertexSet fiber;
  // permutations[k][i] = index in fiber of the end of the lift of loop k
  // starting at fiber[i].
  std::vector<std::vector<int>> permutations;
};

using Permutation = std::vector<int>;
Permutation then(const Permutation& first, const Permutation& second);
bool is_identity(const Permutation& p);

Monodromy monodromy(const GraphMap& p, Vertex basepoint, const std::vector<Path>& loops);

// Orbit of index 0 under the given permutations.
std::vector<int> orbit(const std::vector<Permutation>& generators, int start);

struct TruncatedCover {
  Graph graph;
  GraphMap projection;
  Vertex base = 0;
  int cutoff = 0;
  bool stable = false;
  // Class representatives, aligned with vertex ids.
  std::vector<std::vector<Vertex>> representatives;
};

// Vertices are the oracle classes of paths from v of length <= cutoff;
// ψ and ψ followed by one step are joined. Faithful within distance
// cutoff - 2 of the base.
TruncatedCover universal_cover_truncated(const Graph& g, Vertex v, int cutoff,
                                         std::size_t budget = kDefaultPathBudget);

// Permutation voltages on the generators of cw_presentation(g, v).
struct Voltages {
  int degree = 1;
  std::vector<Permutation> images;  // one per generator
};

// "trivial", "parity", "cyclic:m:a1,a2,..." (generator i ↦ +a_i mod m), or
// "perm:d:p1;p2;..." with each p_i a comma-separated image list.
Voltages parse_voltages(const std::string& spec, const CwPresentation& cw);

struct DerivedCover {
  Graph graph;
  GraphMap projection;
  // (x, i) has id x * degree + i.
  int degree = 1;
  Vertex base = 0;
};

// The permutation-voltage cover of a connected g. Throws DomainError if a
// relator does not act trivially, or if the result is not a 2-covering.
DerivedCover derived_cover(const Graph& g, Vertex v, const Voltages& rho);

// The component of `vertex` as a cover of the target.
GraphMap restrict_to_component(const GraphMap& p, Vertex vertex);

// σ with p2 ∘ σ = p1 and σ an isomorphism. Throws BudgetExceeded past the
// node budget.
std::optional<std::vector<Vertex>> covers_isomorphic(const GraphMap& p1, const GraphMap& p2,
                                                     long long budget = 10'000'000);

}  // namespace pi2
