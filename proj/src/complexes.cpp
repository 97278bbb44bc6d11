#include "pi2/complexes.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>

#include "pi2/errors.hpp"

namespace pi2 {

namespace {

using Mask = std::uint64_t;
using Bits = std::vector<Mask>;

Bits empty_bits(int n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, int i) { b[i >> 6] |= Mask(1) << (i & 63); }
bool test_bit(const Bits& b, int i) { return b[i >> 6] >> (i & 63) & 1; }
bool subset(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & ~b[k]) return false;
  return true;
}
bool intersects(const Bits& a, const Bits& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] & b[k]) return true;
  return false;
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace

SimplicialComplex neighborhood_complex(const Graph& g) {
  std::vector<VertexSet> sets;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) sets.push_back(neighborhood(g, v));
  return SimplicialComplex(std::move(sets));
}

// ---- multihoms ---------------------------------------------------------------

Multihom::Multihom(const Graph& source, const Graph& target, std::vector<VertexSet> values)
    : values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != source.vertex_count())
    throw DomainError("multihom needs one value per source vertex");
  for (auto& s : values_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw DomainError("multihom values must be nonempty");
    for (Vertex x : s) target.check_vertex(x);
  }
  for (const auto& [a, b] : source.edges())
    for (Vertex x : values_[a])
      for (Vertex y : values_[b])
        if (!target.adjacent(x, y))
          throw DomainError("multihom sends edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ") to non-edge (" + std::to_string(x) + "," +
                            std::to_string(y) + ")");
}

bool Multihom::is_graph_map() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const VertexSet& s) { return s.size() == 1; });
}

bool less_equal(const Multihom& a, const Multihom& b) {
  if (a.source_size() != b.source_size()) return false;
  for (int v = 0; v < a.source_size(); ++v)
    if (!std::includes(b(v).begin(), b(v).end(), a(v).begin(), a(v).end())) return false;
  return true;
}

Multihom push_forward(const GraphMap& f, const Graph& source, const Multihom& eta) {
  std::vector<VertexSet> values;
  for (const auto& s : eta.values()) {
    VertexSet img;
    for (Vertex x : s) img.push_back(f(x));
    values.push_back(std::move(img));
  }
  return Multihom(source, f.target(), std::move(values));
}

// ---- posets ----------------------------------------------------------------

Poset::Poset(const std::vector<std::vector<bool>>& leq) : n_(static_cast<int>(leq.size())) {
  rows_.assign(n_, empty_bits(n_));
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(leq[i].size()) != n_) throw DomainError("order relation is not square");
    for (int j = 0; j < n_; ++j)
      if (leq[i][j]) set_bit(rows_[i], j);
  }
  for (int i = 0; i < n_; ++i) {
    if (!leq[i][i]) throw DomainError("order is not reflexive at " + std::to_string(i));
    for (int j = 0; j < n_; ++j) {
      if (!leq[i][j]) continue;
      if (i != j && leq[j][i])
        throw DomainError("order is not antisymmetric at " + std::to_string(i) + "," +
                          std::to_string(j));
      if (!subset(rows_[j], rows_[i]))
        throw DomainError("order is not transitive through " + std::to_string(j));
    }
  }
}

std::vector<int> Poset::minimal() const {
  std::vector<int> out;
  for (int b = 0; b < n_; ++b) {
    bool min = true;
    for (int a = 0; a < n_ && min; ++a) min = a == b || !leq(a, b);
    if (min) out.push_back(b);
  }
  return out;
}

std::vector<int> Poset::maximal() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    bool max = true;
    for (int b = 0; b < n_ && max; ++b) max = a == b || !leq(a, b);
    if (max) out.push_back(a);
  }
  return out;
}

std::vector<int> Poset::upper_covers(int a) const {
  std::vector<int> above;
  for (int b = 0; b < n_; ++b)
    if (b != a && leq(a, b)) above.push_back(b);
  std::vector<int> out;
  for (int b : above) {
    bool cover = std::none_of(above.begin(), above.end(),
                              [&](int c) { return c != b && leq(c, b); });
    if (cover) out.push_back(b);
  }
  return out;
}

bool Poset::is_connected() const {
  if (n_ == 0) return false;
  std::vector<bool> seen(n_, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int a = q.front();
    q.pop();
    for (int b = 0; b < n_; ++b)
      if (!seen[b] && (leq(a, b) || leq(b, a))) {
        seen[b] = true;
        ++count;
        q.push(b);
      }
  }
  return count == n_;
}

std::optional<int> HomPoset::index_of(const Multihom& eta) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), eta);
  if (it == elements.end() || !(*it == eta)) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

HomPoset hom_poset(const Graph& t, const Graph& g, long long budget) {
  const int n = t.vertex_count(), m = g.vertex_count();
  if (m > 64) throw DomainError("hom_poset supports targets with at most 64 vertices");
  if (n == 0) throw DomainError("hom_poset needs a nonempty source graph");
  std::vector<Mask> nbr(m, 0);
  for (Vertex x = 0; x < m; ++x)
    for (Vertex y : g.neighbors(x)) nbr[x] |= Mask(1) << y;
  const Mask all = m == 64 ? ~Mask(0) : (Mask(1) << m) - 1;

  // Breadth-first order so most vertices see an assigned neighbor.
  std::vector<Vertex> order;
  std::vector<bool> placed(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (placed[s]) continue;
    std::queue<Vertex> q;
    q.push(s);
    placed[s] = true;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      order.push_back(v);
      for (Vertex w : t.neighbors(v))
        if (!placed[w]) {
          placed[w] = true;
          q.push(w);
        }
    }
  }

  std::vector<Mask> value(n, 0);
  std::vector<std::vector<Mask>> found;
  long long nodes = 0;
  auto common = [&](Mask s) {
    Mask c = all;
    for (; s; s &= s - 1) c &= nbr[std::countr_zero(s)];
    return c;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (++nodes > budget) throw BudgetExceeded("hom_poset exceeded its search budget");
    if (depth == order.size()) {
      found.push_back(value);
      return;
    }
    Vertex v = order[depth];
    Mask allowed = all;
    for (Vertex w : t.neighbors(v))
      if (w != v && value[w]) allowed &= common(value[w]);
    for (Mask s = allowed; s; s = (s - 1) & allowed) {
      if (t.has_loop(v) && (s & ~common(s))) continue;
      value[v] = s;
      self(self, depth + 1);
    }
    value[v] = 0;
  };
  search(search, 0);

  HomPoset out;
  std::vector<std::pair<Multihom, std::vector<Mask>>> items;
  for (const auto& masks : found) {
    std::vector<VertexSet> vals;
    for (Mask s : masks) vals.push_back(to_set(s));
    items.emplace_back(Multihom(t, g, std::move(vals)), masks);
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  const int k = static_cast<int>(items.size());
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      bool le = true;
      for (int v = 0; v < n && le; ++v) le = !(items[i].second[v] & ~items[j].second[v]);
      leq[i][j] = le;
    }
  for (auto& it : items) out.elements.push_back(std::move(it.first));
  out.poset = Poset(leq);
  return out;
}

SimplicialComplex order_complex(const Poset& p, long long budget) {
  const int n = p.size();
  std::vector<std::vector<int>> covers(n);
  for (int a = 0; a < n; ++a) covers[a] = p.upper_covers(a);
  std::vector<VertexSet> chains;
  std::vector<Vertex> chain;
  auto walk = [&](auto&& self, int a) -> void {
    chain.push_back(a);
    if (covers[a].empty()) {
      if (static_cast<long long>(chains.size()) >= budget)
        throw BudgetExceeded("order_complex exceeded its chain budget");
      chains.push_back(chain);
    }
    for (int b : covers[a]) self(self, b);
    chain.pop_back();
  };
  for (int a : p.minimal()) walk(walk, a);
  return SimplicialComplex(std::move(chains));
}

PosetMap::PosetMap(Poset source, Poset target, std::vector<int> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != source_.size())
    throw DomainError("poset map needs one image per element");
  for (int x : images_)
    if (x < 0 || x >= target_.size()) throw DomainError("poset map image out of range");
  for (int a = 0; a < source_.size(); ++a)
    for (int b = 0; b < source_.size(); ++b)
      if (source_.leq(a, b) && !target_.leq(images_[a], images_[b]))
        throw DomainError("poset map is not order preserving at " + std::to_string(a) + " <= " +
                          std::to_string(b));
}

PosetMap induced_hom_map(const GraphMap& p, const Graph& t, const HomPoset& upstairs,
                         const HomPoset& downstairs) {
  std::vector<int> images;
  for (const auto& eta : upstairs.elements) {
    auto idx = downstairs.index_of(push_forward(p, t, eta));
    if (!idx) throw DomainError("downstairs Hom poset is missing an image");
    images.push_back(*idx);
  }
  return PosetMap(upstairs.poset, downstairs.poset, std::move(images));
}

PosetCoveringReport poset_covering_check(const PosetMap& f) {
  const Poset& P = f.source();
  const Poset& Q = f.target();
  PosetCoveringReport report;
  std::vector<int> count(Q.size());
  for (int below = 1; below >= 0; --below)
    for (int x = 0; x < P.size(); ++x) {
      std::fill(count.begin(), count.end(), 0);
      for (int x2 = 0; x2 < P.size(); ++x2)
        if (below ? P.leq(x2, x) : P.leq(x, x2)) ++count[f(x2)];
      for (int y = 0; y < Q.size(); ++y) {
        bool related = below ? Q.leq(y, f(x)) : Q.leq(f(x), y);
        if (related && count[y] != 1) {
          report.holds = false;
          report.failure = PosetCoveringReport::Failure{x, y, below == 1, count[y]};
          return report;
        }
      }
    }
  return report;
}

// ---- stars -------------------------------------------------------------------

StarReport star_decomposition_check(const GraphMap& p, Vertex v) {
  const Graph& g = p.source();
  const Graph& h = p.target();
  h.check_vertex(v);
  if (h.degree(v) == 0) throw DomainError("vertex " + std::to_string(v) + " is isolated");

  StarReport r;
  std::vector<VertexSet> pieces;
  for (Vertex u : h.neighbors(v)) {
    auto nu = neighborhood(h, u);
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      VertexSet piece;
      for (Vertex x : g.neighbors(w))
        if (std::binary_search(nu.begin(), nu.end(), p(x))) piece.push_back(x);
      pieces.push_back(std::move(piece));
    }
  }
  r.preimage = SimplicialComplex(std::move(pieces));

  SimplicialComplex nbhd = neighborhood_complex(g);
  const VertexSet fiber = p.fiber(v);
  std::vector<VertexSet> all;
  std::vector<Bits> vertex_bits;
  for (Vertex vi : fiber) {
    SimplicialComplex st = g.degree(vi) > 0 ? nbhd.star(vi) : SimplicialComplex{};
    all.insert(all.end(), st.facets().begin(), st.facets().end());
    Bits b = empty_bits(g.vertex_count());
    for (Vertex x : st.vertices()) set_bit(b, x);
    vertex_bits.push_back(std::move(b));
    r.stars.push_back(std::move(st));
  }
  r.star_count = static_cast<int>(fiber.size());
  r.equal = r.preimage == SimplicialComplex(std::move(all));
  r.disjoint = true;
  for (std::size_t i = 0; i < fiber.size() && r.disjoint; ++i)
    for (std::size_t j = i + 1; j < fiber.size() && r.disjoint; ++j)
      if (intersects(vertex_bits[i], vertex_bits[j])) {
        r.disjoint = false;
        Vertex shared = 0;
        while (!(test_bit(vertex_bits[i], shared) && test_bit(vertex_bits[j], shared))) ++shared;
        r.overlap = StarReport::Overlap{fiber[i], fiber[j], shared};
      }
  r.holds = r.equal && r.disjoint;
  return r;
}

// ---- Φ and Ψ -------------------------------------------------------------------

std::vector<Vertex> phi_map(const Path& phi) {
  if (phi.length() % 2) throw DomainError("phi_map needs an even path");
  std::vector<Vertex> out;
  for (int i = 0; i <= phi.length(); i += 2) out.push_back(phi.vertices()[i]);
  return out;
}

Path psi_map(const Graph& g, const std::vector<Vertex>& edge_path) {
  if (edge_path.empty()) throw DomainError("psi_map needs a nonempty edge path");
  for (Vertex x : edge_path) g.check_vertex(x);
  std::vector<Vertex> out{edge_path.front()};
  for (std::size_t i = 0; i + 1 < edge_path.size(); ++i) {
    auto c = common_neighbors(g, edge_path[i], edge_path[i + 1]);
    if (c.empty())
      throw DomainError("no common neighbor of " + std::to_string(edge_path[i]) + " and " +
                        std::to_string(edge_path[i + 1]));
    out.push_back(c.front());
    out.push_back(edge_path[i + 1]);
  }
  return Path(g, std::move(out));
}

}  // namespace pi2
