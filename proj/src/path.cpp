#include "pi2/path.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "pi2/errors.hpp"

namespace pi2 {

bool is_path(const Graph& g, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) return false;
  for (Vertex v : vertices)
    if (!g.valid(v)) return false;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (!g.adjacent(vertices[i - 1], vertices[i])) return false;
  return true;
}

Path::Path(std::shared_ptr<const Graph> g, std::vector<Vertex> vertices)
    : graph_(std::move(g)), vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("a path has at least one vertex");
  for (Vertex v : vertices_) graph_->check_vertex(v);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    if (!graph_->adjacent(vertices_[i - 1], vertices_[i]))
      throw DomainError("not a path: " + std::to_string(vertices_[i - 1]) + " and " +
                        std::to_string(vertices_[i]) + " are not adjacent");
}

Path::Path(const Graph& g, std::vector<Vertex> vertices)
    : Path(std::make_shared<const Graph>(g), std::move(vertices)) {}

Path Path::constant(std::shared_ptr<const Graph> g, Vertex v) {
  return Path(std::move(g), {v});
}

Path compose(const Path& first, const Path& second) {
  if (first.terminal() != second.initial())
    throw DomainError("paths are not composable: " + std::to_string(first.terminal()) +
                      " != " + std::to_string(second.initial()));
  if (!(first.graph() == second.graph())) throw DomainError("paths live in different graphs");
  std::vector<Vertex> v = first.vertices();
  v.insert(v.end(), second.vertices().begin() + 1, second.vertices().end());
  return Path(first.graph_ptr(), std::move(v));
}

Path reverse(const Path& p) {
  std::vector<Vertex> v(p.vertices().rbegin(), p.vertices().rend());
  return Path(p.graph_ptr(), std::move(v));
}

Parity parity(const Path& p) { return p.length() % 2 == 0 ? Parity::even : Parity::odd; }

Path map_path(const GraphMap& f, const Path& p) {
  if (!(f.source() == p.graph())) throw DomainError("path is not in the map's source");
  std::vector<Vertex> v;
  v.reserve(p.vertices().size());
  for (Vertex x : p.vertices()) v.push_back(f(x));
  return Path(f.target(), std::move(v));
}

namespace {

void reductions(const std::vector<Vertex>& p, std::vector<std::vector<Vertex>>& out) {
  for (std::size_t x = 0; x + 2 < p.size(); ++x) {
    if (p[x] != p[x + 2]) continue;
    std::vector<Vertex> q(p.begin(), p.begin() + x + 1);
    q.insert(q.end(), p.begin() + x + 3, p.end());
    out.push_back(std::move(q));
  }
}

void substitutions(const Graph& g, const std::vector<Vertex>& p,
                   std::vector<std::vector<Vertex>>& out) {
  for (std::size_t x = 1; x + 1 < p.size(); ++x) {
    for (Vertex u : common_neighbors(g, p[x - 1], p[x + 1])) {
      if (u == p[x]) continue;
      auto q = p;
      q[x] = u;
      out.push_back(std::move(q));
    }
  }
}

}  // namespace

std::vector<Path> move_i_reduce(const Path& p) {
  std::vector<std::vector<Vertex>> raw;
  reductions(p.vertices(), raw);
  std::vector<Path> out;
  for (auto& q : raw) out.emplace_back(p.graph_ptr(), std::move(q));
  return out;
}

std::vector<Path> move_ii_prime_neighbors(const Path& p) {
  std::vector<std::vector<Vertex>> raw;
  substitutions(p.graph(), p.vertices(), raw);
  std::vector<Path> out;
  for (auto& q : raw) out.emplace_back(p.graph_ptr(), std::move(q));
  return out;
}

Path conjugate(const Path& gamma, const Path& phi) {
  if (!phi.is_loop() || phi.initial() != gamma.initial())
    throw DomainError("conjugation needs a loop at the initial point of the path");
  return compose(compose(reverse(gamma), phi), gamma);
}

std::size_t VertexSeqHash::operator()(const std::vector<Vertex>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Vertex x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

bool shorter_or_lex(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::optional<int> ClassTable::class_of(const std::vector<Vertex>& path) const {
  auto it = index_.find(path);
  if (it == index_.end()) return std::nullopt;
  return class_of_path_[it->second];
}

bool ClassTable::equivalent(const std::vector<Vertex>& a, const std::vector<Vertex>& b) const {
  auto ca = class_of(a);
  auto cb = class_of(b);
  if (!ca || !cb) throw DomainError("path is outside the class table");
  return *ca == *cb;
}

struct OracleBuilder {
  static ClassTable build(const Graph& g, Vertex from, std::optional<Vertex> to, int cutoff,
                          std::size_t budget, bool with_stability);
};

ClassTable oracle_classes(const Graph& g, Vertex from, std::optional<Vertex> to, int cutoff,
                          std::size_t budget) {
  return OracleBuilder::build(g, from, to, cutoff, budget, true);
}

ClassTable OracleBuilder::build(const Graph& g, Vertex from, std::optional<Vertex> to,
                                int cutoff, std::size_t budget, bool with_stability) {
  g.check_vertex(from);
  if (to) g.check_vertex(*to);
  if (cutoff < 0) throw DomainError("cutoff must be nonnegative");

  ClassTable t;
  t.graph_ = g;
  t.from_ = from;
  t.to_ = to;
  t.cutoff_ = cutoff;

  const int n = g.vertex_count();
  std::vector<int> dist(n, -1);
  if (to) {
    std::deque<Vertex> queue{*to};
    dist[*to] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x))
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
  }
  auto reachable = [&](Vertex x, int steps_left) {
    return !to || (dist[x] >= 0 && dist[x] <= steps_left);
  };

  // Depth-first enumeration in lexicographic order.
  std::vector<Vertex> prefix{from};
  std::vector<std::size_t> next_child{0};
  if (reachable(from, cutoff)) {
    while (!prefix.empty()) {
      const int len = static_cast<int>(prefix.size()) - 1;
      if (next_child.back() == 0 && (!to || prefix.back() == *to)) {
        if (t.paths_.size() >= budget)
          throw BudgetExceeded("more than " + std::to_string(budget) + " paths of length <= " +
                               std::to_string(cutoff));
        t.index_.emplace(prefix, static_cast<int>(t.paths_.size()));
        t.paths_.push_back(prefix);
      }
      auto nb = g.neighbors(prefix.back());
      std::size_t& k = next_child.back();
      bool descended = false;
      while (len < cutoff && k < nb.size()) {
        Vertex y = nb[k++];
        if (!reachable(y, cutoff - len - 1)) continue;
        prefix.push_back(y);
        next_child.push_back(0);
        descended = true;
        break;
      }
      if (!descended) {
        prefix.pop_back();
        next_child.pop_back();
      }
    }
  }

  UnionFind uf(t.paths_.size());
  std::vector<std::vector<Vertex>> moved;
  for (std::size_t id = 0; id < t.paths_.size(); ++id) {
    moved.clear();
    reductions(t.paths_[id], moved);
    substitutions(g, t.paths_[id], moved);
    for (const auto& q : moved) {
      auto it = t.index_.find(q);
      if (it == t.index_.end())
        throw std::logic_error("oracle: moved path missing from the enumeration");
      uf.unite(static_cast<int>(id), it->second);
    }
  }

  // Representative per root, then sort classes by representative.
  std::unordered_map<int, int> root_rep;
  std::unordered_map<int, std::size_t> root_size;
  for (std::size_t id = 0; id < t.paths_.size(); ++id) {
    int r = uf.find(static_cast<int>(id));
    ++root_size[r];
    auto it = root_rep.find(r);
    if (it == root_rep.end() || shorter_or_lex(t.paths_[id], t.paths_[it->second]))
      root_rep[r] = static_cast<int>(id);
  }
  std::vector<std::pair<int, int>> reps(root_rep.begin(), root_rep.end());
  std::sort(reps.begin(), reps.end(), [&](const auto& a, const auto& b) {
    return shorter_or_lex(t.paths_[a.second], t.paths_[b.second]);
  });
  std::unordered_map<int, int> root_class;
  for (const auto& [root, rep] : reps) {
    root_class[root] = static_cast<int>(t.classes_.size());
    const auto& path = t.paths_[rep];
    t.classes_.push_back(OracleClass{path, (path.size() - 1) % 2 == 0 ? Parity::even : Parity::odd,
                                     root_size[root]});
  }
  t.class_of_path_.resize(t.paths_.size());
  for (std::size_t id = 0; id < t.paths_.size(); ++id) {
    int c = root_class[uf.find(static_cast<int>(id))];
    t.class_of_path_[id] = c;
    if ((t.paths_[id].size() - 1) % 2 != static_cast<std::size_t>(t.classes_[c].parity))
      throw std::logic_error("oracle merged paths of different parity");
  }

  if (with_stability && cutoff >= 2) {
    std::size_t short_classes = 0;
    for (const auto& c : t.classes_)
      if (static_cast<int>(c.shortest.size()) - 1 <= cutoff - 2) ++short_classes;
    ClassTable smaller = build(g, from, to, cutoff - 2, budget, false);
    t.stable_ = short_classes == smaller.classes_.size();
  }
  return t;
}

}  // namespace pi2
