#pragma once

// Brute-force reference computations used to cross-check the library.
// Deliberately naive: nothing here calls into the code under test except
// the Graph container itself.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "pi2/graph.hpp"

namespace oracle {

using pi2::Graph;
using pi2::Vertex;

inline bool same_edges_under(const Graph& g, const Graph& h,
                             const std::vector<int>& perm) {
  for (int a = 0; a < g.vertex_count(); ++a)
    for (int b = 0; b < g.vertex_count(); ++b)
      if (g.adjacent(a, b) != h.adjacent(perm[a], perm[b])) return false;
  return true;
}

// Tries every permutation; fine up to about 10 vertices.
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (same_edges_under(g, h, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::set<int> n1(const Graph& g, int v) {
  std::set<int> out;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (g.adjacent(v, w)) out.insert(w);
  return out;
}

inline std::set<int> n2(const Graph& g, int v) {
  std::set<int> out;
  for (int u : n1(g, v))
    for (int w : n1(g, u)) out.insert(w);
  return out;
}

// Walks every vertex pair for adjacency; no union-find.
inline int components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (g.adjacent(a, b) && label[b] > label[a]) {
          label[b] = label[a];
          changed = true;
        }
  }
  return static_cast<int>(std::set<int>(label.begin(), label.end()).size());
}

// Exhaustive k-coloring existence over all k^n assignments.
inline bool colorable(const Graph& g, int k) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.has_loop(v)) return false;
  std::vector<int> c(n, 0);
  while (true) {
    bool ok = true;
    for (auto [a, b] : g.edges())
      if (c[a] == c[b]) {
        ok = false;
        break;
      }
    if (ok) return true;
    int i = 0;
    while (i < n && c[i] == k - 1) c[i++] = 0;
    if (i == n) return false;
    ++c[i];
  }
}

inline Graph random_connected(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<pi2::Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    Graph g(n, edges);
    if (n > 0 && components(g) == 1) return g;
  }
}

}  // namespace oracle

namespace oracle {

// 2-homotopy classes of paths from -> to of length <= cutoff, computed by
// flood fill over the explicit move graph (breadth-first, no union-find).
// Returns the shortest-then-least representative of every class, sorted.
inline std::vector<std::vector<int>> flood_classes(const Graph& g, int from, int to,
                                                   int cutoff) {
  std::vector<std::vector<int>> all;
  std::vector<std::vector<int>> frontier{{from}};
  for (int len = 0; len <= cutoff; ++len) {
    std::vector<std::vector<int>> next;
    for (auto& p : frontier) {
      if (p.back() == to) all.push_back(p);
      if (len < cutoff)
        for (int y = 0; y < g.vertex_count(); ++y)
          if (g.adjacent(p.back(), y)) {
            auto q = p;
            q.push_back(y);
            next.push_back(std::move(q));
          }
    }
    frontier = std::move(next);
  }
  std::set<std::vector<int>> members(all.begin(), all.end());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> reps;
  for (const auto& start : all) {
    if (seen.count(start)) continue;
    std::vector<std::vector<int>> queue{start};
    seen.insert(start);
    std::vector<int> best = start;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto p = queue[head];
      auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
      };
      if (better(p, best)) best = p;
      std::vector<std::vector<int>> nbrs;
      // Insert or delete a backtrack.
      for (std::size_t x = 0; x + 2 < p.size(); ++x)
        if (p[x] == p[x + 2]) {
          auto q = p;
          q.erase(q.begin() + x + 1, q.begin() + x + 3);
          nbrs.push_back(q);
        }
      for (std::size_t x = 0; x < p.size(); ++x)
        for (int u = 0; u < g.vertex_count(); ++u)
          if (g.adjacent(p[x], u)) {
            auto q = p;
            q.insert(q.begin() + x + 1, {u, p[x]});
            nbrs.push_back(q);
          }
      // Change one interior vertex.
      for (std::size_t x = 1; x + 1 < p.size(); ++x)
        for (int u = 0; u < g.vertex_count(); ++u)
          if (u != p[x] && g.adjacent(p[x - 1], u) && g.adjacent(u, p[x + 1])) {
            auto q = p;
            q[x] = u;
            nbrs.push_back(q);
          }
      for (auto& q : nbrs)
        if (members.count(q) && seen.insert(q).second) queue.push_back(q);
    }
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return reps;
}

// Signed winding of a closed walk in C_n (steps of +-1 mod n).
inline int winding(int n, const std::vector<int>& loop) {
  int total = 0;
  for (std::size_t i = 1; i < loop.size(); ++i) {
    int d = ((loop[i] - loop[i - 1]) % n + n) % n;
    total += d == 1 ? 1 : -1;
  }
  return total / n;
}

}  // namespace oracle
