#include <queue>

#include "doctest.h"
#include "oracles.hpp"
#include "pi2/covering.hpp"
#include "pi2/errors.hpp"

using namespace pi2;

namespace {

GraphMap mod_map(int big, int small) {
  std::vector<Vertex> a(big);
  for (int x = 0; x < big; ++x) a[x] = x % small;
  return GraphMap(cycle_graph(big), cycle_graph(small), a);
}

// Both restrictions bijective at every vertex, straight from the definition.
bool brute_two_covering(const GraphMap& p) {
  auto bijective = [&](const std::set<int>& from, const std::set<int>& to) {
    std::set<int> img;
    for (int x : from) img.insert(p(x));
    return img.size() == from.size() && img == to;
  };
  for (Vertex v = 0; v < p.source().vertex_count(); ++v) {
    if (!bijective(oracle::n1(p.source(), v), oracle::n1(p.target(), p(v)))) return false;
    if (!bijective(oracle::n2(p.source(), v), oracle::n2(p.target(), p(v)))) return false;
  }
  return true;
}

std::vector<Vertex> reflection(int n) {
  std::vector<Vertex> r(n);
  for (int x = 0; x < n; ++x) r[x] = ((-1 - x) % n + n) % n;
  return r;
}

std::vector<Vertex> shift(int n, int k) {
  std::vector<Vertex> r(n);
  for (int x = 0; x < n; ++x) r[x] = (x + k) % n;
  return r;
}

// All paths upstairs from start lying over phi.
int count_lifts(const GraphMap& p, const std::vector<Vertex>& phi, Vertex start) {
  std::vector<std::vector<Vertex>> partial{{start}};
  for (std::size_t i = 1; i < phi.size(); ++i) {
    std::vector<std::vector<Vertex>> next;
    for (const auto& q : partial)
      for (Vertex x : p.source().neighbors(q.back()))
        if (p(x) == phi[i]) {
          auto r = q;
          r.push_back(x);
          next.push_back(r);
        }
    partial = next;
  }
  return static_cast<int>(partial.size());
}

}  // namespace

TEST_CASE("2-covering truth table") {
  Graph k2 = complete_graph(2);
  for (const Graph& g : {complete_graph(3), complete_graph(4), complete_graph(5), cycle_graph(5),
                         petersen_graph()}) {
    CHECK(is_two_covering(second_projection(k2, g)));
    CHECK(is_two_covering(GraphMap::identity(g)));
  }
  for (auto [n, k] : {std::pair{3, 2}, {3, 3}, {5, 2}, {6, 2}})
    CHECK(is_two_covering(mod_map(n * k, n)));
  for (auto [n, k] : {std::pair{4, 2}, {4, 3}}) CHECK(!is_two_covering(mod_map(n * k, n)));

  auto w = two_covering_witness(mod_map(12, 4));
  CHECK(!w.verdict);
  REQUIRE(w.failure.has_value());
  CHECK(w.failure->v == 0);
  CHECK(w.failure->condition == TwoCoveringWitness::Condition::n2_injective);
  CHECK(w.failure->offending == VertexSet{2, 10});

  // The empty graph includes into anything as a 2-covering.
  CHECK(is_two_covering(GraphMap(Graph(0), complete_graph(3), {})));
  // Folding a pendant edge is not.
  CHECK(!is_two_covering(GraphMap(path_graph(2), complete_graph(2), {0, 1, 0})));
}

TEST_CASE("witness agrees with the definition") {
  std::mt19937 rng(31);
  int positives = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_connected(rng, 6, 0.45);
    auto autos = automorphisms(g);
    std::uniform_int_distribution<std::size_t> pick(0, autos.size() - 1);
    auto gen = autos[pick(rng)];
    auto q = quotient_by_action(GroupAction::cyclic(g, gen));
    bool brute = brute_two_covering(q.map);
    CHECK(two_covering_witness(q.map).verdict == brute);
    positives += brute;
    // Random vertex maps into K3 that happen to be homomorphisms.
    std::vector<Vertex> a(6);
    std::uniform_int_distribution<int> col(0, 2);
    for (auto& x : a) x = col(rng);
    if (is_graph_map(g, complete_graph(3), a)) {
      GraphMap f(g, complete_graph(3), a);
      CHECK(is_two_covering(f) == brute_two_covering(f));
    }
  }
  CHECK(positives > 0);
  Graph k2k4 = product(complete_graph(2), complete_graph(4));
  CHECK(brute_two_covering(second_projection(complete_graph(2), complete_graph(4))));
  CHECK(k2k4.vertex_count() == 8);
}

TEST_CASE("2-covering actions") {
  // Z/n acting on C_{nk} by x + k.
  for (auto [n, k] : {std::pair{2, 3}, {3, 5}, {2, 6}, {4, 3}}) {
    auto a = GroupAction::cyclic(cycle_graph(n * k), shift(n * k, k));
    CHECK(is_two_covering_action(a).verdict);
    CHECK(quotient_by_action(a).graph == cycle_graph(k));
  }
  // A long cycle standing in for the line, shifted by k.
  auto line = GroupAction::cyclic(cycle_graph(30), shift(30, 5));
  CHECK(is_two_covering_action(line).verdict);
  CHECK(quotient_by_action(line).graph == cycle_graph(5));

  for (int r : {2, 3, 4}) {
    auto a = GroupAction::cyclic(cycle_graph(2 * r), reflection(2 * r));
    CHECK(is_two_covering_action(a).verdict);
    auto q = quotient_by_action(a).graph;
    int looped = 0;
    for (Vertex v = 0; v < q.vertex_count(); ++v) looped += q.has_loop(v);
    CHECK(looped == 2);
  }
  for (int r : {1, 2, 3}) {
    auto w = is_two_covering_action(GroupAction::cyclic(cycle_graph(2 * r + 1), reflection(2 * r + 1)));
    CHECK(!w.verdict);
    REQUIRE(w.failure.has_value());
    CHECK(w.failure->v == r);
    CHECK(w.failure->shared == r);
  }
  CHECK(is_two_covering_action(GroupAction::trivial(petersen_graph())).verdict);
}

TEST_CASE("actions versus quotient maps") {
  std::vector<GroupAction> actions;
  for (auto [n, k] : {std::pair{2, 3}, {3, 5}, {2, 4}, {3, 4}})
    actions.push_back(GroupAction::cyclic(cycle_graph(n * k), shift(n * k, k)));
  for (int n : {5, 6, 7, 8}) actions.push_back(GroupAction::cyclic(cycle_graph(n), reflection(n)));
  std::mt19937 rng(37);
  while (actions.size() < 28) {
    Graph g = oracle::random_connected(rng, 5 + actions.size() % 4, 0.5);
    auto autos = automorphisms(g);
    if (autos.size() < 2) continue;
    std::uniform_int_distribution<std::size_t> pick(1, autos.size() - 1);
    actions.push_back(GroupAction::cyclic(g, autos[pick(rng)]));
  }
  for (const auto& a : actions) {
    bool lhs = is_two_covering_action(a).verdict;
    bool rhs = a.is_free() && is_two_covering(quotient_by_action(a).map);
    bool effective = a.is_effective() && is_two_covering(quotient_by_action(a).map);
    CHECK(lhs == rhs);
    CHECK(lhs == effective);
  }
}

TEST_CASE("composition rules") {
  auto c12_6 = mod_map(12, 6);
  auto c6_3 = mod_map(6, 3);
  auto facts = compose_covering_facts(c12_6, c6_3);
  CHECK(facts.f_covering);
  CHECK(facts.g_covering);
  CHECK(facts.gf_covering);
  CHECK(facts.all_rules_hold());

  auto c12_4 = mod_map(12, 4);
  auto c4_2 = GraphMap(cycle_graph(4), complete_graph(2), {0, 1, 0, 1});
  auto bad = compose_covering_facts(c12_4, c4_2);
  CHECK(!bad.f_covering);
  CHECK(bad.all_rules_hold());
  CHECK_THROWS_AS(compose_covering_facts(c6_3, c12_6), DomainError);

  std::mt19937 rng(41);
  Graph k3 = complete_graph(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_connected(rng, 5, 0.5);
    std::vector<Vertex> a(5);
    std::uniform_int_distribution<int> col(0, 2);
    for (auto& x : a) x = col(rng);
    if (!is_graph_map(g, k3, a)) continue;
    GraphMap f(g, k3, a);
    CHECK(compose_covering_facts(f, GraphMap::identity(k3)).all_rules_hold());
    CHECK(compose_covering_facts(f, GraphMap(k3, k3, {1, 2, 0})).all_rules_hold());
  }
}

TEST_CASE("pullbacks") {
  Graph k3 = complete_graph(3);
  auto p = mod_map(6, 3);
  auto id = pullback(GraphMap::identity(k3), p);
  CHECK(oracle::isomorphic(id.graph, cycle_graph(6)));
  CHECK(is_two_covering(id.to_first));

  // Along any f: T -> G, K2 × G pulls back to K2 × T.
  std::mt19937 rng(43);
  Graph k2 = complete_graph(2);
  for (int trial = 0; trial < 10; ++trial) {
    Graph t = oracle::random_connected(rng, 5, 0.5);
    std::vector<Vertex> a(5);
    std::uniform_int_distribution<int> col(0, 3);
    for (auto& x : a) x = col(rng);
    if (!is_graph_map(t, complete_graph(4), a)) continue;
    GraphMap f(t, complete_graph(4), a);
    auto pb = pullback(f, second_projection(k2, complete_graph(4)));
    CHECK(is_two_covering(pb.to_first));
    auto iso = covers_isomorphic(pb.to_first, second_projection(k2, t));
    CHECK(iso.has_value());
  }
  CHECK_THROWS_AS(pullback(GraphMap::identity(k3), mod_map(10, 5)), DomainError);

  // Pulling back twice matches pulling back along the composite.
  auto c15 = mod_map(15, 5);
  GraphMap f(cycle_graph(10), cycle_graph(5), [] {
    std::vector<Vertex> v(10);
    for (int x = 0; x < 10; ++x) v[x] = x % 5;
    return v;
  }());
  GraphMap g = GraphMap::identity(cycle_graph(10));
  auto once = pullback(compose(g, f), c15);
  auto inner = pullback(f, c15);
  auto twice = pullback(g, inner.to_first);
  CHECK(covers_isomorphic(once.to_first, twice.to_first).has_value());
}

TEST_CASE("path lifting") {
  Graph k3 = complete_graph(3);
  auto p = second_projection(complete_graph(2), k3);
  auto lift = lift_path(p, Path(k3, {0, 1, 2}), product_id(k3, 0, 0));
  CHECK(lift.vertices() == std::vector<Vertex>{product_id(k3, 0, 0), product_id(k3, 1, 1),
                                               product_id(k3, 0, 2)});
  CHECK(lift_path(p, Path::constant(std::make_shared<const Graph>(k3), 1), 4).vertices() ==
        std::vector<Vertex>{4});

  auto c15 = mod_map(15, 5);
  Path wind(cycle_graph(5), {0, 1, 2, 3, 4, 0});
  CHECK(lift_path(c15, wind, 0).terminal() == 5);
  CHECK_THROWS_AS(lift_path(c15, wind, 1), DomainError);
  CHECK_THROWS_AS(lift_path(mod_map(8, 4), Path(cycle_graph(4), {0, 1}), 0), DomainError);

  // Uniqueness against exhaustive search.
  std::mt19937 rng(47);
  std::vector<GraphMap> covers{p, c15, second_projection(complete_graph(2), petersen_graph())};
  for (const auto& cov : covers) {
    const Graph& h = cov.target();
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Vertex> walk{0};
      for (int s = 0; s < 6; ++s) {
        auto nb = h.neighbors(walk.back());
        std::uniform_int_distribution<std::size_t> pick(0, nb.size() - 1);
        walk.push_back(nb[pick(rng)]);
      }
      for (Vertex start : cov.fiber(0)) {
        CHECK(count_lifts(cov, walk, start) == 1);
        CHECK(map_path(cov, lift_path(cov, Path(h, walk), start)).vertices() == walk);
      }
    }
  }
}

TEST_CASE("multihom lifting") {
  Graph k2 = complete_graph(2);
  Graph k4 = complete_graph(4);
  auto p = second_projection(k2, k4);
  Graph up = p.source();
  Multihom eta(k2, up, {{product_id(k4, 0, 0)}, {product_id(k4, 1, 1)}});
  Multihom image = push_forward(p, k2, eta);
  CHECK(lift_multihom(p, k2, eta, image, LiftDirection::down) == eta);
  CHECK(lift_multihom(p, k2, eta, image, LiftDirection::up) == eta);

  // Up to the largest multihom above p∘η: 0 ↦ {0}, 1 ↦ N(0).
  Multihom big(k2, k4, {{0}, {1, 2, 3}});
  auto lifted = lift_multihom(p, k2, eta, big, LiftDirection::up);
  CHECK(push_forward(p, k2, lifted) == big);
  CHECK(less_equal(eta, lifted));
  CHECK(lifted(1) == VertexSet{product_id(k4, 1, 1), product_id(k4, 1, 2), product_id(k4, 1, 3)});

  // Down from a wide multihom to a graph map.
  Multihom wide(k2, up, {{product_id(k4, 0, 0), product_id(k4, 0, 2)}, {product_id(k4, 1, 1)}});
  auto down = lift_multihom(p, k2, wide, Multihom(k2, k4, {{2}, {1}}), LiftDirection::down);
  CHECK(down.is_graph_map());
  CHECK(down(0) == VertexSet{product_id(k4, 0, 2)});

  CHECK_THROWS_AS(lift_multihom(p, k2, eta, Multihom(k2, k4, {{2}, {1}}), LiftDirection::down),
                  DomainError);
  CHECK_THROWS_AS(lift_multihom(p, Graph(1), Multihom(Graph(1), up, {{0}}),
                                Multihom(Graph(1), k4, {{0}}), LiftDirection::down),
                  DomainError);
}

TEST_CASE("homotopy lifting") {
  auto c15 = mod_map(15, 5);
  Graph t = complete_graph(2);
  Graph c5 = cycle_graph(5);
  // F(·, i): K2 -> C5, the edge walking around the cycle one endpoint at a
  // time.
  const int n = 4;
  Graph domain = product(t, looped_path(n));
  const int ends[2][5] = {{0, 2, 2, 4, 4}, {1, 1, 3, 3, 0}};
  std::vector<Vertex> values(domain.vertex_count());
  for (Vertex x = 0; x < 2; ++x)
    for (int i = 0; i <= n; ++i) values[x * (n + 1) + i] = ends[x][i];
  GraphMap F(domain, c5, values);
  GraphMap f(t, cycle_graph(15), {0, 1});
  auto lifted = lift_homotopy(c15, t, n, F, f);
  CHECK(compose(lifted, c15) == F);
  CHECK(lifted(0) == 0);
  CHECK(lifted(n) == 4);
  CHECK(lifted(2 * (n + 1) - 1) == 5);

  GraphMap F0(product(t, looped_path(0)), c5, {0, 1});
  CHECK(lift_homotopy(c15, t, 0, F0, f).assignment() == f.assignment());

  std::vector<Vertex> still(domain.vertex_count());
  for (Vertex x = 0; x < 2; ++x)
    for (int i = 0; i <= n; ++i) still[x * (n + 1) + i] = x;
  auto constant = lift_homotopy(c15, t, n, GraphMap(domain, c5, still), f);
  for (Vertex x = 0; x < 2; ++x)
    for (int i = 0; i <= n; ++i) CHECK(constant(x * (n + 1) + i) == x);

  CHECK_THROWS_AS(lift_homotopy(c15, t, n, F, GraphMap(t, cycle_graph(15), {1, 2})), DomainError);
}

TEST_CASE("lifting maps") {
  auto p = mod_map(6, 3);
  CHECK(attempt_lift_map(p, 0, p, 0).value() == GraphMap::identity(cycle_graph(6)));
  CHECK(!attempt_lift_map(p, 0, GraphMap::identity(cycle_graph(3)), 0).has_value());

  // A map that factors through p.
  GraphMap factor(path_graph(3), cycle_graph(6), {0, 1, 2, 3});
  auto f = compose(factor, p);
  auto lifted = attempt_lift_map(p, 0, f, 0);
  REQUIRE(lifted.has_value());
  CHECK(*lifted == factor);

  auto k2k4 = second_projection(complete_graph(2), complete_graph(4));
  CHECK(!attempt_lift_map(k2k4, 0, GraphMap::identity(complete_graph(4)), 0).has_value());
  CHECK_THROWS_AS(attempt_lift_map(p, 1, p, 0), DomainError);
}

TEST_CASE("monodromy") {
  Graph k4 = complete_graph(4);
  auto p = second_projection(complete_graph(2), k4);
  auto shared = std::make_shared<const Graph>(k4);
  Path triangle(shared, {0, 1, 2, 0});
  Path square(shared, {0, 1, 2, 3, 0});
  auto m = monodromy(p, 0, {triangle, square, Path::constant(shared, 0)});
  CHECK(m.fiber == VertexSet{0, 4});
  CHECK(m.permutations[0] == Permutation{1, 0});
  CHECK(is_identity(m.permutations[1]));
  CHECK(is_identity(m.permutations[2]));

  // Functoriality: perm(φ·ψ) = perm(φ) then perm(ψ).
  auto c15 = mod_map(15, 5);
  auto c5 = std::make_shared<const Graph>(cycle_graph(5));
  Path a(c5, {0, 1, 2, 3, 4, 0});
  Path b(c5, {0, 4, 3, 2, 1, 0, 1, 0});
  auto mm = monodromy(c15, 0, {a, b, compose(a, b), compose(a, a)});
  CHECK(mm.permutations[2] == then(mm.permutations[0], mm.permutations[1]));
  CHECK(mm.permutations[3] == then(mm.permutations[0], mm.permutations[0]));
  CHECK(orbit({mm.permutations[0]}, 0) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(monodromy(c15, 0, {Path(c5, {1, 2})}), DomainError);
}

TEST_CASE("relators act trivially and generators act transitively") {
  std::vector<GraphMap> covers;
  Graph k2 = complete_graph(2);
  for (const Graph& g : {complete_graph(3), complete_graph(4), complete_graph(5), cycle_graph(5),
                         petersen_graph()})
    covers.push_back(second_projection(k2, g));
  for (auto [n, k] : {std::pair{3, 2}, {3, 3}, {5, 2}, {6, 2}}) covers.push_back(mod_map(n * k, n));
  for (const auto& p : covers) {
    REQUIRE(is_two_covering(p));
    REQUIRE(is_connected(p.source()));
    auto cw = cw_presentation(p.target(), 0);
    std::vector<Path> relators, generators;
    for (std::size_t r = 0; r < cw.presentation.relators().size(); ++r)
      relators.emplace_back(p.target(), cw.relator_loop(static_cast<int>(r)));
    for (int g = 0; g < cw.presentation.generator_count(); ++g)
      generators.emplace_back(p.target(), cw.generator_loop(g));
    for (const auto& perm : monodromy(p, 0, relators).permutations) CHECK(is_identity(perm));
    auto m = monodromy(p, 0, generators);
    CHECK(orbit(m.permutations, 0).size() == m.fiber.size());
  }
}

TEST_CASE("truncated universal covers") {
  auto c5 = universal_cover_truncated(cycle_graph(5), 0, 12);
  CHECK(c5.graph.vertex_count() == 25);
  CHECK(find_isomorphism(c5.graph, path_graph(24)).has_value());
  CHECK(c5.projection(c5.base) == 0);

  auto k2 = universal_cover_truncated(complete_graph(2), 0, 6);
  CHECK(k2.graph == complete_graph(2));

  auto k4 = universal_cover_truncated(complete_graph(4), 0, 6);
  CHECK(k4.stable);
  CHECK(k4.graph.vertex_count() == 8);
  CHECK(covers_isomorphic(k4.projection, second_projection(complete_graph(2), complete_graph(4)))
            .has_value());

  // Within distance cutoff - 2 of the base the projection is a 2-covering.
  auto pet = universal_cover_truncated(petersen_graph(), 0, 6);
  auto ball = pet.graph;
  std::vector<int> dist(ball.vertex_count(), -1);
  std::queue<Vertex> q;
  q.push(pet.base);
  dist[pet.base] = 0;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : ball.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
  }
  for (Vertex x = 0; x < ball.vertex_count(); ++x) {
    if (dist[x] > 6 - 2) continue;
    auto n1 = neighborhood(ball, x);
    std::set<Vertex> img;
    for (Vertex y : n1) img.insert(pet.projection(y));
    CHECK(img.size() == n1.size());
    auto target = neighborhood(petersen_graph(), pet.projection(x));
    CHECK(std::vector<Vertex>(img.begin(), img.end()) == target);
  }
}

TEST_CASE("derived covers") {
  Graph k4 = complete_graph(4);
  auto cw = cw_presentation(k4, 0);
  auto par = derived_cover(k4, 0, parse_voltages("parity", cw));
  CHECK(covers_isomorphic(par.projection, second_projection(complete_graph(2), k4)).has_value());
  auto triv = derived_cover(k4, 0, parse_voltages("trivial", cw));
  CHECK(triv.graph == k4);

  Graph c5 = cycle_graph(5);
  auto c5cw = cw_presentation(c5, 0);
  REQUIRE(c5cw.presentation.generator_count() == 1);
  auto three = derived_cover(c5, 0, parse_voltages("cyclic:3:1", c5cw));
  CHECK(covers_isomorphic(three.projection, mod_map(15, 5)).has_value());
  auto perm = derived_cover(c5, 0, parse_voltages("perm:3:1,2,0", c5cw));
  CHECK(covers_isomorphic(perm.projection, mod_map(15, 5)).has_value());

  // Z/2 voltages on the generators of K4: those killing the relators give
  // connected covers K4 or K2 × K4 only.
  const int gens = cw.presentation.generator_count();
  int accepted = 0;
  for (int mask = 0; mask < (1 << gens); ++mask) {
    std::string spec = "cyclic:2:";
    for (int g = 0; g < gens; ++g) spec += (g ? "," : "") + std::to_string(mask >> g & 1);
    auto rho = parse_voltages(spec, cw);
    try {
      auto d = derived_cover(k4, 0, rho);
      ++accepted;
      auto comp = restrict_to_component(d.projection, d.base);
      bool plain = covers_isomorphic(comp, GraphMap::identity(k4)).has_value();
      bool doubled =
          covers_isomorphic(comp, second_projection(complete_graph(2), k4)).has_value();
      CHECK(plain != doubled);
    } catch (const DomainError&) {
    }
  }
  CHECK(accepted == 2);

  CHECK_THROWS_AS(parse_voltages("cyclic:3:1,1", c5cw), DomainError);
  CHECK_THROWS_AS(parse_voltages("perm:2:0,0", c5cw), DomainError);
  CHECK_THROWS_AS(parse_voltages("bogus", c5cw), DomainError);
  CHECK_THROWS_AS(derived_cover(cycle_graph(4), 0,
                                parse_voltages("cyclic:2:1", cw_presentation(cycle_graph(4), 0))),
                  DomainError);
}

TEST_CASE("cover isomorphism") {
  Graph k4 = complete_graph(4);
  auto p = second_projection(complete_graph(2), k4);
  CHECK(covers_isomorphic(p, p).has_value());
  GraphMap two(coproduct(k4, k4), k4, {0, 1, 2, 3, 0, 1, 2, 3});
  CHECK(!covers_isomorphic(p, two).has_value());

  // Ends of G × I1 pull back isomorphic covers.
  Graph g = cycle_graph(5);
  Graph gi = product(g, looped_path(1));
  auto e = second_projection(complete_graph(2), gi);
  std::vector<Vertex> at0(5), at1(5);
  for (int x = 0; x < 5; ++x) {
    at0[x] = product_id(looped_path(1), x, 0);
    at1[x] = product_id(looped_path(1), x, 1);
  }
  auto i0 = pullback(GraphMap(g, gi, at0), e);
  auto i1 = pullback(GraphMap(g, gi, at1), e);
  CHECK(covers_isomorphic(i0.to_first, i1.to_first).has_value());
}

TEST_CASE("pullback monodromy is the pulled-back action") {
  auto p = mod_map(15, 5);
  Graph t = cycle_graph(10);
  std::vector<Vertex> a(10);
  for (int x = 0; x < 10; ++x) a[x] = (2 * 5 - x) % 5;
  GraphMap f(t, cycle_graph(5), a);
  auto pb = pullback(f, p);
  auto cw = cw_presentation(t, 0);
  for (int g = 0; g < cw.presentation.generator_count(); ++g) {
    Path loop(t, cw.generator_loop(g));
    auto up = monodromy(pb.to_first, 0, {loop});
    auto down = monodromy(p, f(0), {map_path(f, loop)});
    CHECK(up.permutations == down.permutations);
  }
}
