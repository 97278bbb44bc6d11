#include "doctest.h"
#include "oracles.hpp"
#include "pi2/errors.hpp"
#include "pi2/homology.hpp"

using namespace pi2;

namespace {

AbelianGroup Z(int r) { return AbelianGroup{r, {}}; }

// Rank over the rationals, by elimination modulo a large prime.
int rank_mod_p(const IntMatrix& m) {
  const long long p = 1000000007LL;
  std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      Integer x = m.at(i, j) % p;
      if (x < 0) x += p;
      a[i][j] = static_cast<long long>(x);
    }
  auto power = [&](long long b, long long e) {
    long long r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (a[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    long long inv = power(a[rank][col], p - 2);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || !a[i][col]) continue;
      long long f = a[i][col] * inv % p;
      for (int j = col; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("H1 of graphs") {
  for (int n = 4; n <= 7; ++n) CHECK(h1_graph(complete_graph(n)) == AbelianGroup{0, {2}});
  CHECK(h1_graph(complete_graph(3)) == Z(1));
  CHECK(h1_graph(complete_graph(2)).is_trivial());
  for (int r : {3, 5, 6, 7, 8, 9}) CHECK(h1_graph(cycle_graph(r)) == Z(1));
  CHECK(h1_graph(cycle_graph(4)).is_trivial());
  CHECK(h1_graph(coproduct(cycle_graph(5), complete_graph(4))) == AbelianGroup{1, {2}});
  CHECK(h1_graph(Graph(0)).is_trivial());

  CHECK(h0_graph(coproduct(cycle_graph(3), cycle_graph(3))) == Z(2));
  CHECK(h0_graph(Graph(0)).is_trivial());
  CHECK(h0_graph(petersen_graph()) == Z(1));
}

TEST_CASE("square complex invariants") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_connected(rng, 5 + trial % 4, 0.4);
    if (trial % 5 == 0) {
      auto edges = g.edges();
      edges.emplace_back(0, 0);
      g = Graph(g.vertex_count(), edges);
    }
    auto c = square_complex(g);
    CHECK((c.boundary1 * c.boundary2).is_zero());
    const int v = g.vertex_count(), e = static_cast<int>(c.edges.size());
    const int comps = oracle::components(g);
    auto h = h1_graph(g);
    CHECK(h.free_rank >= 0);
    CHECK(h.free_rank == e - v + comps - rank_mod_p(c.boundary2));
    if (c.squares.empty() && c.loops.empty()) CHECK(h.free_rank == e - v + comps);
  }
}

TEST_CASE("simplicial H0 and H1") {
  SimplicialComplex hollow({{0, 1}, {1, 2}, {0, 2}});
  CHECK(simplicial_h01(hollow).second == Z(1));
  SimplicialComplex sphere({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(simplicial_h01(sphere).second.is_trivial());
  CHECK(simplicial_h01(sphere).first == Z(1));
  SimplicialComplex two({{0, 1}, {2, 3}});
  CHECK(simplicial_h01(two).first == Z(2));
  // Real projective plane (6-vertex triangulation): H1 = Z/2.
  SimplicialComplex rp2({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  CHECK(simplicial_h01(rp2).second == AbelianGroup{0, {2}});
  CHECK(simplicial_h01(SimplicialComplex{}).first.is_trivial());
}

TEST_CASE("Mayer-Vietoris") {
  Graph wedge(9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 0}});
  auto w = mayer_vietoris_check(wedge, Subgraph::induced(wedge, {0, 1, 2, 3, 4}),
                                Subgraph::induced(wedge, {0, 5, 6, 7, 8}));
  CHECK(w.passed());
  CHECK(w.groups[2] == Z(2));

  Graph c4 = cycle_graph(4);
  auto arc = Subgraph(c4, {0, 1, 2}, {{0, 1}, {1, 2}});
  auto c = mayer_vietoris_check(c4, Subgraph::whole(c4), arc);
  CHECK(c.passed());
  CHECK(c.groups[2].is_trivial());

  Graph k4 = complete_graph(4);
  auto same = mayer_vietoris_check(k4, Subgraph::whole(k4), Subgraph::whole(k4));
  CHECK(same.passed());
  CHECK(same.groups[0] == AbelianGroup{0, {2}});
  CHECK(same.groups[1] == AbelianGroup{0, {2, 2}});

  auto grid = grid_family({1, 2}, 0).graph;
  auto g = mayer_vietoris_check(grid, Subgraph::induced(grid, {0, 1, 3, 4}),
                                Subgraph::induced(grid, {1, 2, 4, 5}));
  CHECK(g.passed());
  CHECK(g.groups[0].is_trivial());
  CHECK(g.groups[3] == Z(1));

  Graph k23(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto s = mayer_vietoris_check(k23, Subgraph::induced(k23, {0, 1, 2, 4}),
                                Subgraph::induced(k23, {0, 1, 3, 4}));
  CHECK(s.passed());
  CHECK(s.undecomposed.empty());

  // Missing squares: the sequence is still exact for |K1| ∪ |K2| but that
  // space is not |G|.
  auto bad = mayer_vietoris_check(k4, Subgraph::induced(k4, {0, 1, 2}),
                                  Subgraph(k4, {0, 1, 2, 3}, {{0, 3}, {1, 3}, {2, 3}}));
  CHECK(!bad.undecomposed.empty());
  for (bool b : bad.exact) CHECK(b);
  CHECK(!bad.inclusion_iso);
  CHECK(!bad.passed());

  CHECK_THROWS_AS(mayer_vietoris_check(c4, arc, arc), DomainError);
}
