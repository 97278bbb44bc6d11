#include "pi2/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pi2/complexes.hpp"
#include "pi2/errors.hpp"
#include "pi2/homology.hpp"

namespace pi2 {

namespace {

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

bool allowed(const Graph& g, const Coloring& colors, Vertex v, int c) {
  for (Vertex w : g.neighbors(v))
    if (colors[w] == c) return false;
  return true;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& colors, int k) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (int c : colors)
    if (c < 0 || c >= k) return false;
  for (const auto& [a, b] : g.edges())
    if (colors[a] == colors[b]) return false;
  return true;
}

std::optional<Coloring> find_coloring(const Graph& g, int k) {
  if (g.has_loops()) return std::nullopt;
  const auto order = degree_order(g);
  Coloring colors(g.vertex_count(), -1);
  auto search = [&](auto&& self, std::size_t depth, int used) -> bool {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    // Colors beyond the first unused one are symmetric.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
      if (!allowed(g, colors, v, c)) continue;
      colors[v] = c;
      if (self(self, depth + 1, std::max(used, c + 1))) return true;
    }
    colors[v] = -1;
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;
  return colors;
}

std::optional<int> chromatic_number(const Graph& g, int max_k) {
  if (g.has_loops()) return std::nullopt;
  for (int k = 0; k <= max_k; ++k)
    if (find_coloring(g, k)) return k;
  return std::nullopt;
}

ColoringSweep for_each_coloring(const Graph& g, int k,
                                const std::function<void(const Coloring&)>& visit, int samples) {
  ColoringSweep sweep;
  if (g.has_loops()) return sweep;
  const auto order = degree_order(g);
  Coloring colors(g.vertex_count(), -1);
  if (g.vertex_count() <= kExhaustiveColoringVertices) {
    auto search = [&](auto&& self, std::size_t depth) -> void {
      if (depth == order.size()) {
        ++sweep.count;
        visit(colors);
        return;
      }
      Vertex v = order[depth];
      for (int c = 0; c < k; ++c) {
        if (!allowed(g, colors, v, c)) continue;
        colors[v] = c;
        self(self, depth + 1);
      }
      colors[v] = -1;
    };
    search(search, 0);
    return sweep;
  }
  std::mt19937 rng(12345);
  std::vector<int> palette(k);
  std::iota(palette.begin(), palette.end(), 0);
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == order.size()) return true;
    Vertex v = order[depth];
    auto shuffled = palette;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (int c : shuffled) {
      if (!allowed(g, colors, v, c)) continue;
      colors[v] = c;
      if (self(self, depth + 1)) return true;
    }
    colors[v] = -1;
    return false;
  };
  for (int s = 0; s < samples; ++s) {
    std::fill(colors.begin(), colors.end(), -1);
    if (!search(search, 0)) return sweep;  // the full tree was searched: none exist
    sweep.exhaustive = false;
    ++sweep.count;
    visit(colors);
  }
  return sweep;
}

const char* to_string(ObstructionVerdict v) {
  switch (v) {
    case ObstructionVerdict::bipartite: return "bipartite";
    case ObstructionVerdict::chi_at_least_4: return "chi-at-least-4-certified";
    case ObstructionVerdict::no_obstruction: return "no-obstruction";
  }
  return "?";
}

ObstructionReport three_color_obstruction(const Graph& g) {
  if (!is_connected(g)) throw DomainError("obstruction needs a connected graph");
  ObstructionReport r;
  if (is_bipartite(g)) return r;
  r.group = h1_graph(g);
  r.verdict = r.group->free_rank == 0 ? ObstructionVerdict::chi_at_least_4
                                      : ObstructionVerdict::no_obstruction;
  return r;
}

ObstructionReport nbhd_obstruction(const Graph& g) {
  if (!is_connected(g)) throw DomainError("obstruction needs a connected graph");
  if (is_bipartite(g))
    throw DomainError("the neighborhood complex of a bipartite graph is disconnected");
  ObstructionReport r;
  r.group = simplicial_h01(neighborhood_complex(g).component_of(0)).second;
  r.verdict = r.group->free_rank == 0 ? ObstructionVerdict::chi_at_least_4
                                      : ObstructionVerdict::no_obstruction;
  return r;
}

Involution::Involution(const Graph& g, std::vector<Vertex> images) : images_(std::move(images)) {
  GraphMap check(g, g, images_);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (images_[images_[v]] != v)
      throw DomainError("map is not an involution at " + std::to_string(v));
}

bool Involution::has_fixed_point() const {
  for (std::size_t v = 0; v < images_.size(); ++v)
    if (images_[v] == static_cast<Vertex>(v)) return true;
  return false;
}

Parity involution_parity(const Graph& g, const Involution& tau) {
  if (!is_connected(g)) throw DomainError("involution parity needs a connected graph");
  auto bp = bipartition(g);
  if (!bp) throw DomainError("involution parity needs a bipartite graph");
  return bp->side[tau(0)] == bp->side[0] ? Parity::even : Parity::odd;
}

InvolutionReport verify_involution_theorem(const Graph& g, const Involution& tau) {
  InvolutionReport r;
  r.parity = involution_parity(g, tau);
  r.h1 = h1_graph(g);
  r.hypothesis = r.h1.free_rank == 0;
  const int n = g.vertex_count();
  r.sweep = for_each_coloring(g, 3, [&](const Coloring& f) {
    bool some_equal = false, some_different = false;
    for (Vertex v = 0; v < n; ++v) (f[v] == f[tau(v)] ? some_equal : some_different) = true;
    bool ok = r.parity == Parity::even ? some_equal : some_different;
    if (!ok) {
      ++r.violations;
      if (!r.first_violation) r.first_violation = f;
    }
  });
  return r;
}

Graph g_tau(const Graph& g, const Involution& tau) {
  auto edges = g.edges();
  for (Vertex v = 0; v < g.vertex_count(); ++v) edges.emplace_back(v, tau(v));
  return Graph(g.vertex_count(), edges);
}

}  // namespace pi2
