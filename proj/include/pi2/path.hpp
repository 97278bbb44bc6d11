#pragma once

// Paths in a graph and 2-homotopy of paths.
//
// compose(first, second) runs first, then second. Moves:
//   (i)   delete a backtrack: v_x = v_{x+2} lets v_{x+1}, v_{x+2} go
//   (ii)' replace one interior vertex v_x by another common neighbor of
//         v_{x-1} and v_{x+1}
// These generate 2-homotopy. oracle_classes enumerates every path up to a
// length cutoff and merges along the moves with a union-find.

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pi2/graph.hpp"

namespace pi2 {

enum class Parity { even = 0, odd = 1 };

class Path {
 public:
  // Throws unless consecutive vertices are adjacent; vertices nonempty.
  Path(std::shared_ptr<const Graph> g, std::vector<Vertex> vertices);
  Path(const Graph& g, std::vector<Vertex> vertices);
  static Path constant(std::shared_ptr<const Graph> g, Vertex v);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex initial() const { return vertices_.front(); }
  Vertex terminal() const { return vertices_.back(); }
  Vertex operator[](int i) const { return vertices_[i]; }
  bool is_loop() const { return initial() == terminal(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.vertices_ == b.vertices_ && *a.graph_ == *b.graph_;
  }

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<Vertex> vertices_;
};

bool is_path(const Graph& g, const std::vector<Vertex>& vertices);

// first, then second; needs first.terminal() == second.initial().
Path compose(const Path& first, const Path& second);
Path reverse(const Path& p);
Parity parity(const Path& p);
// f ∘ p as a path in f's target.
Path map_path(const GraphMap& f, const Path& p);

// One entry per backtrack position x (v_x = v_{x+2}), ascending x.
std::vector<Path> move_i_reduce(const Path& p);
// Every path differing from p at exactly one position 0 < x < n; the
// original is not included. Ordered by x, then by the substitute.
std::vector<Path> move_ii_prime_neighbors(const Path& p);

// reverse(γ), then φ, then γ: a loop at the terminal point of γ.
// Needs φ to be a loop at the initial point of γ.
Path conjugate(const Path& gamma, const Path& phi);

struct VertexSeqHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept;
};

struct OracleClass {
  std::vector<Vertex> shortest;  // shortest, then lexicographically least
  Parity parity;
  std::size_t size;  // enumerated members
};

inline constexpr std::size_t kDefaultPathBudget = 5'000'000;

// 2-homotopy classes of the paths v -> w of length <= cutoff, as seen by
// moves that stay within the cutoff. Classes are sorted by representative.
// With to = nullopt every endpoint is allowed (classes never mix endpoints).
//
// The count over-approximates the true classes: a 2-homotopy may need
// longer intermediate paths. stable is set when every class found at
// cutoff - 2 survives unmerged, i.e. the classes with a representative of
// length <= cutoff - 2 number exactly as many as at cutoff - 2.
class ClassTable {
 public:
  const Graph& graph() const { return graph_; }
  Vertex from() const { return from_; }
  std::optional<Vertex> to() const { return to_; }
  int cutoff() const { return cutoff_; }
  bool stable() const { return stable_; }
  const std::vector<OracleClass>& classes() const { return classes_; }
  std::size_t path_count() const { return paths_.size(); }
  // Every enumerated path and the class it belongs to.
  const std::vector<std::vector<Vertex>>& paths() const { return paths_; }
  int class_of_index(std::size_t i) const { return class_of_path_[i]; }

  std::optional<int> class_of(const std::vector<Vertex>& path) const;
  // Both paths must be in the table.
  bool equivalent(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const;

 private:
  friend struct OracleBuilder;
  Graph graph_;
  Vertex from_ = 0;
  std::optional<Vertex> to_;
  int cutoff_ = 0;
  bool stable_ = false;
  std::vector<OracleClass> classes_;
  std::vector<std::vector<Vertex>> paths_;
  std::vector<int> class_of_path_;
  std::unordered_map<std::vector<Vertex>, int, VertexSeqHash> index_;
};

// Throws BudgetExceeded when more than `budget` paths would be stored.
ClassTable oracle_classes(const Graph& g, Vertex from, std::optional<Vertex> to, int cutoff,
                          std::size_t budget = kDefaultPathBudget);

}  // namespace pi2
