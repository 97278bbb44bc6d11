#include "pi2/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "pi2/errors.hpp"

namespace pi2 {

// ---- squares -----------------------------------------------------------------

bool is_square(const Graph& g, const Square& s) {
  for (int i = 0; i < 4; ++i)
    if (!g.valid(s[i])) return false;
  for (int i = 0; i < 4; ++i)
    if (!g.adjacent(s[i], s[i + 1])) return false;
  return true;
}

Square canonical(const Square& s) {
  Square best = s;
  for (int k = 0; k < 4; ++k) {
    Square rot{{s[k], s[k + 1], s[k + 2], s[k + 3]}};
    Square refl{{s[k], s[k + 3], s[k + 2], s[k + 1]}};
    best = std::min({best, rot, refl});
  }
  return best;
}

std::vector<Square> all_squares(const Graph& g) {
  std::vector<Square> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(b))
        for (Vertex d : common_neighbors(g, c, a)) out.push_back(Square{{a, b, c, d}});
  return out;
}

std::vector<Square> enumerate_squares(const Graph& g) {
  std::vector<Square> out;
  for (const Square& s : all_squares(g))
    if (!s.degenerate() && canonical(s) == s) out.push_back(s);
  return out;
}

// ---- words -------------------------------------------------------------------

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + lo, r.begin() + hi);
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

GroupPresentation::GroupPresentation(std::vector<GeneratorLabel> labels,
                                     std::vector<Word> relators)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  for (auto& r : relators) {
    for (int x : r)
      if (x == 0 || generator_of(x) >= n)
        throw std::invalid_argument("relator letter out of range");
    relators_.push_back(cyclic_reduce(r));
  }
}

GroupPresentation simplify(const GroupPresentation& p) {
  std::vector<bool> alive(p.generator_count(), true);
  std::vector<Word> rels = p.relators();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Word& r : rels)
      if (r.size() == 1 && alive[generator_of(r[0])]) {
        alive[generator_of(r[0])] = false;
        changed = true;
      }
    if (!changed) break;
    for (Word& r : rels) {
      Word kept;
      for (int x : r)
        if (alive[generator_of(x)]) kept.push_back(x);
      r = cyclic_reduce(kept);
    }
  }
  std::vector<int> renumber(p.generator_count(), -1);
  std::vector<GeneratorLabel> labels;
  for (int g = 0; g < p.generator_count(); ++g)
    if (alive[g]) {
      renumber[g] = static_cast<int>(labels.size());
      labels.push_back(p.labels()[g]);
    }
  std::vector<Word> out;
  std::set<Word> seen;
  for (const Word& r : rels) {
    if (r.empty()) continue;
    Word w;
    for (int x : r) w.push_back(letter(renumber[generator_of(x)], x < 0));
    if (seen.insert(w).second) out.push_back(std::move(w));
  }
  return GroupPresentation(std::move(labels), std::move(out));
}

IntMatrix exponent_matrix(const GroupPresentation& p) {
  IntMatrix m(static_cast<int>(p.relators().size()), p.generator_count());
  for (std::size_t r = 0; r < p.relators().size(); ++r)
    for (int x : p.relators()[r]) m.at(static_cast<int>(r), generator_of(x)) += x > 0 ? 1 : -1;
  return m;
}

AbelianGroup abelianize(const GroupPresentation& p) {
  return cokernel_of_rows(exponent_matrix(p), p.generator_count());
}

AbelianizationMap::AbelianizationMap(const GroupPresentation& p)
    : generators_(p.generator_count()) {
  IntMatrix rel = exponent_matrix(p);
  if (rel.rows() == 0) rel = IntMatrix(0, generators_);
  SmithForm s = smith_normal_form(rel);
  v_ = s.V;
  for (int i = 0; i < generators_; ++i) {
    Integer d = i < s.rank ? s.D.at(i, i) : Integer(0);
    if (d == 1) continue;
    coordinates_.push_back(i);
    moduli_.push_back(d);
  }
  std::vector<Integer> orders;
  int free = 0;
  for (const auto& d : moduli_) {
    if (d == 0)
      ++free;
    else
      orders.push_back(d);
  }
  group_ = abelian_from_orders(free, orders);
}

std::vector<Integer> AbelianizationMap::evaluate(const Word& w) const {
  std::vector<Integer> x(generators_, 0);
  for (int l : w) x[generator_of(l)] += l > 0 ? 1 : -1;
  std::vector<Integer> out;
  for (std::size_t k = 0; k < coordinates_.size(); ++k) {
    int i = coordinates_[k];
    Integer y = 0;
    for (int j = 0; j < generators_; ++j)
      if (x[j] != 0) y += x[j] * v_.at(j, i);
    if (moduli_[k] != 0) {
      y %= moduli_[k];
      if (y < 0) y += moduli_[k];
    }
    out.push_back(y);
  }
  return out;
}

bool ParityMap::is_zero() const {
  return std::all_of(parity.begin(), parity.end(), [](int x) { return x == 0; });
}

int ParityMap::of(const Word& w) const {
  int total = 0;
  for (int x : w) total += parity[generator_of(x)];
  return total % 2;
}

// ---- the square complex ----------------------------------------------------------

std::optional<int> CwPresentation::letter_of_step(Vertex a, Vertex b) const {
  if (!graph.valid(a) || !graph.valid(b) || !graph.adjacent(a, b))
    throw DomainError("step " + std::to_string(a) + " -> " + std::to_string(b) +
                      " is not an edge");
  auto it = edge_generator.find(Edge{std::min(a, b), std::max(a, b)});
  if (it == edge_generator.end()) return std::nullopt;
  return letter(it->second, a > b);
}

Word CwPresentation::word_of_path(const std::vector<Vertex>& path) const {
  Word w;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (auto l = letter_of_step(path[i - 1], path[i])) w.push_back(*l);
  return free_reduce(w);
}

std::vector<Vertex> CwPresentation::tree_path(Vertex x) const {
  if (!graph.valid(x) || depth[x] < 0) throw DomainError("vertex outside the base component");
  std::vector<Vertex> up;
  for (Vertex y = x; y != -1; y = parent[y]) up.push_back(y);
  std::reverse(up.begin(), up.end());
  return up;
}

std::vector<Vertex> CwPresentation::generator_loop(int generator) const {
  const auto& label = presentation.labels().at(generator);
  std::vector<Vertex> out = tree_path(label.a);
  Vertex b = label.kind == GeneratorLabel::Kind::loop ? label.a : label.b;
  auto back = tree_path(b);
  out.insert(out.end(), back.rbegin(), back.rend());
  return out;
}

std::vector<Vertex> CwPresentation::relator_loop(int relator) const {
  const int squares_count = static_cast<int>(squares.size());
  std::vector<Vertex> cell;
  if (relator < squares_count) {
    const Square& s = squares[relator];
    cell = {s[0], s[1], s[2], s[3], s[0]};
  } else {
    Vertex x = loops.at(relator - squares_count);
    cell = {x, x, x};
  }
  std::vector<Vertex> out = tree_path(cell.front());
  out.insert(out.end(), cell.begin() + 1, cell.end());
  auto back = tree_path(cell.front());
  out.insert(out.end(), back.rbegin() + 1, back.rend());
  return out;
}

CwPresentation cw_presentation(const Graph& g, Vertex base) {
  g.check_vertex(base);
  CwPresentation cw;
  cw.graph = g;
  cw.base = base;
  const int n = g.vertex_count();
  cw.parent.assign(n, -1);
  cw.depth.assign(n, -1);
  std::set<Edge> tree;
  std::deque<Vertex> queue{base};
  cw.depth[base] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    cw.component.push_back(x);
    for (Vertex y : g.neighbors(x))
      if (cw.depth[y] < 0) {
        cw.depth[y] = cw.depth[x] + 1;
        cw.parent[y] = x;
        tree.insert(Edge{std::min(x, y), std::max(x, y)});
        queue.push_back(y);
      }
  }
  std::sort(cw.component.begin(), cw.component.end());

  std::vector<GeneratorLabel> labels;
  std::vector<int> parity;
  for (auto [a, b] : g.edges()) {
    if (a == b || cw.depth[a] < 0 || tree.count(Edge{a, b})) continue;
    cw.edge_generator[Edge{a, b}] = static_cast<int>(labels.size());
    labels.push_back(GeneratorLabel{GeneratorLabel::Kind::edge, a, b,
                                    "e" + std::to_string(a) + "_" + std::to_string(b)});
    parity.push_back((cw.depth[a] + cw.depth[b] + 1) % 2);
  }
  for (Vertex x : cw.component)
    if (g.has_loop(x)) {
      cw.edge_generator[Edge{x, x}] = static_cast<int>(labels.size());
      labels.push_back(GeneratorLabel{GeneratorLabel::Kind::loop, x, x, "l" + std::to_string(x)});
      parity.push_back(1);
      cw.loops.push_back(x);
    }

  std::vector<Word> relators;
  for (const Square& s : enumerate_squares(g)) {
    if (cw.depth[s[0]] < 0) continue;
    cw.squares.push_back(s);
    Word w;
    for (int i = 0; i < 4; ++i)
      if (auto l = cw.letter_of_step(s[i], s[i + 1])) w.push_back(*l);
    relators.push_back(w);
  }
  for (Vertex x : cw.loops) {
    int l = letter(cw.edge_generator.at(Edge{x, x}));
    relators.push_back(Word{l, l});
  }
  cw.presentation = GroupPresentation(std::move(labels), std::move(relators));
  cw.parity = ParityMap{std::move(parity)};
  for (const Word& r : cw.presentation.relators())
    if (cw.parity.of(r) != 0) throw std::logic_error("odd relator in the square complex");
  return cw;
}

// ---- even part ---------------------------------------------------------------

GroupPresentation even_part_presentation(const GroupPresentation& p, const ParityMap& parity) {
  if (parity.is_zero()) return p;
  const int n = p.generator_count();
  int t = -1;
  for (int g = 0; g < n && t < 0; ++g)
    if (parity.parity[g]) t = g;
  // Schreier generator s(r, g) = r g rep(r g)^-1 for cosets r in {0 = 1, 1 = t}.
  std::vector<std::array<int, 2>> index(n, {-1, -1});
  std::vector<GeneratorLabel> labels;
  for (int r = 0; r < 2; ++r)
    for (int g = 0; g < n; ++g) {
      if (r == 0 && g == t) continue;  // t t^-1 is trivial
      index[g][r] = static_cast<int>(labels.size());
      const auto& base_label = p.labels()[g];
      GeneratorLabel label = base_label;
      label.kind = GeneratorLabel::Kind::schreier;
      label.name = (r == 0 ? "" : p.labels()[t].name + "*") + base_label.name;
      labels.push_back(label);
    }
  auto rewrite = [&](const Word& w, int start) {
    Word out;
    int r = start;
    for (int x : w) {
      int g = generator_of(x);
      if (x > 0) {
        if (index[g][r] >= 0) out.push_back(letter(index[g][r]));
        r ^= parity.parity[g];
      } else {
        int r2 = r ^ parity.parity[g];
        if (index[g][r2] >= 0) out.push_back(letter(index[g][r2], true));
        r = r2;
      }
    }
    if (r != start) throw std::logic_error("rewriting an odd word");
    return out;
  };
  std::vector<Word> relators;
  for (const Word& w : p.relators()) {
    if (parity.of(w) != 0) throw DomainError("relator has odd parity");
    relators.push_back(rewrite(w, 0));
    relators.push_back(rewrite(w, 1));
  }
  return simplify(GroupPresentation(std::move(labels), std::move(relators)));
}

// ---- decomposition ---------------------------------------------------------------

bool square_in(const Subgraph& piece, const Square& s) {
  for (int i = 0; i < 4; ++i)
    if (!piece.contains_vertex(s[i]) || !piece.contains_edge(s[i], s[i + 1])) return false;
  return true;
}

namespace {

struct Split {
  Square first, second;
};

std::vector<Split> splits(const Graph& g, const Square& s) {
  std::vector<Split> out;
  // Type (1): corner 2 of the first half and corner 0 of the second become u.
  for (Vertex u : common_neighbors(g, s[1], s[3])) {
    if (u == s[0] || u == s[2]) continue;
    out.push_back({Square{{s[0], s[1], u, s[3]}}, Square{{u, s[1], s[2], s[3]}}});
  }
  // Type (2): corner 3 / corner 1.
  for (Vertex u : common_neighbors(g, s[0], s[2])) {
    if (u == s[1] || u == s[3]) continue;
    out.push_back({Square{{s[0], s[1], s[2], u}}, Square{{s[0], u, s[2], s[3]}}});
  }
  return out;
}

struct DecompositionSolver {
  const Graph& g;
  std::map<Square, int> level;  // least split depth, for decomposable squares
  std::map<Square, Split> how;

  DecompositionSolver(const Graph& graph, const std::vector<Subgraph>& pieces) : g(graph) {
    std::vector<Square> all = all_squares(g);
    std::vector<Square> pending;
    for (const Square& s : all) {
      bool inside = std::any_of(pieces.begin(), pieces.end(),
                                [&](const Subgraph& p) { return square_in(p, s); });
      if (inside)
        level[s] = 0;
      else
        pending.push_back(s);
    }
    for (int depth = 1; !pending.empty(); ++depth) {
      std::vector<std::pair<Square, Split>> found;
      std::vector<Square> still;
      for (const Square& s : pending) {
        bool ok = false;
        for (const Split& sp : splits(g, s)) {
          auto a = level.find(sp.first);
          auto b = level.find(sp.second);
          if (a != level.end() && b != level.end() && a->second < depth && b->second < depth) {
            found.emplace_back(s, sp);
            ok = true;
            break;
          }
        }
        if (!ok) still.push_back(s);
      }
      if (found.empty()) break;
      for (auto& [s, sp] : found) {
        level[s] = depth;
        how[s] = sp;
      }
      pending = std::move(still);
    }
  }

  void leaves(const Square& s, std::vector<Square>& out) const {
    auto it = how.find(s);
    if (it == how.end()) {
      out.push_back(s);
      return;
    }
    leaves(it->second.first, out);
    leaves(it->second.second, out);
  }

  Decomposition query(const Square& sigma, int depth_limit) const {
    auto it = level.find(sigma);
    if (it == level.end()) return {Decomposition::Status::refuted, {}, 0};
    if (it->second > depth_limit) return {Decomposition::Status::inconclusive, {}, it->second};
    Decomposition d{Decomposition::Status::decomposed, {}, it->second};
    leaves(sigma, d.sequence);
    return d;
  }
};

}  // namespace

Decomposition decompose_square(const Graph& g, const Square& sigma,
                               const std::vector<Subgraph>& pieces, int depth_limit) {
  if (!is_square(g, sigma)) throw DomainError("not a square of the graph");
  if (sigma.degenerate()) throw DomainError("square is degenerate");
  for (const auto& p : pieces)
    if (p.parent_vertex_count() != g.vertex_count())
      throw DomainError("piece is not a subgraph of this graph");
  return DecompositionSolver(g, pieces).query(sigma, depth_limit);
}

// ---- van Kampen ------------------------------------------------------------------

namespace {

Vertex compact_id(const Subgraph& s, Vertex v) {
  const auto& vs = s.vertices();
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) throw DomainError("vertex not in subgraph");
  return static_cast<Vertex>(it - vs.begin());
}

}  // namespace

VanKampenReport van_kampen_presentation(const Graph& g, Vertex base,
                                        const std::vector<Subgraph>& pieces, int depth_limit) {
  g.check_vertex(base);
  if (pieces.empty()) throw DomainError("no pieces");
  VanKampenReport report;
  Subgraph all = pieces.front();
  for (const auto& p : pieces) {
    if (p.parent_vertex_count() != g.vertex_count())
      throw DomainError("piece is not a subgraph of this graph");
    if (!p.contains_vertex(base)) throw DomainError("base vertex missing from a piece");
    all = unite(all, p);
  }
  if (!(all == Subgraph::whole(g))) throw DomainError("pieces do not cover the graph");
  report.covers = true;

  report.triple_connected = true;
  const std::size_t k = pieces.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b)
      for (std::size_t c = b; c < k; ++c)
        if (!intersect(intersect(pieces[a], pieces[b]), pieces[c]).is_connected())
          report.triple_connected = false;

  DecompositionSolver solver(g, pieces);
  for (const Square& s : enumerate_squares(g)) {
    auto d = solver.query(s, depth_limit);
    if (d.status == Decomposition::Status::inconclusive) report.inconclusive.push_back(s);
    if (d.status == Decomposition::Status::refuted) report.refuted.push_back(s);
  }
  report.squares_decompose = report.inconclusive.empty() && report.refuted.empty();

  std::vector<CwPresentation> cws;
  std::vector<int> offset;
  std::vector<GeneratorLabel> labels;
  std::vector<Word> relators;
  auto shifted = [](const Word& w, int by) {
    Word out;
    for (int x : w) out.push_back(x > 0 ? x + by : x - by);
    return out;
  };
  for (std::size_t a = 0; a < k; ++a) {
    cws.push_back(cw_presentation(pieces[a].compact(), compact_id(pieces[a], base)));
    offset.push_back(static_cast<int>(labels.size()));
    for (auto label : cws.back().presentation.labels()) {
      // Report edge endpoints on the parent's ids.
      if (label.a >= 0) label.a = pieces[a].vertices()[label.a];
      if (label.b >= 0) label.b = pieces[a].vertices()[label.b];
      label.name = "G" + std::to_string(a) + ":" + label.name;
      labels.push_back(label);
    }
    for (const Word& r : cws.back().presentation.relators())
      relators.push_back(shifted(r, offset.back()));
  }
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Subgraph meet = intersect(pieces[a], pieces[b]);
      auto cw = cw_presentation(meet.compact(), compact_id(meet, base));
      for (int gen = 0; gen < cw.presentation.generator_count(); ++gen) {
        auto loop = cw.generator_loop(gen);
        std::vector<Vertex> in_a, in_b;
        for (Vertex x : loop) {
          Vertex parent = meet.vertices()[x];
          in_a.push_back(compact_id(pieces[a], parent));
          in_b.push_back(compact_id(pieces[b], parent));
        }
        Word wa = shifted(cws[a].word_of_path(in_a), offset[a]);
        Word wb = shifted(cws[b].word_of_path(in_b), offset[b]);
        Word rel = inverse(wa);
        rel.insert(rel.end(), wb.begin(), wb.end());
        relators.push_back(rel);
      }
    }
  report.presentation = GroupPresentation(std::move(labels), std::move(relators));
  return report;
}

std::vector<Vertex> reduce_backtracks(const std::vector<Vertex>& path) {
  std::vector<Vertex> out;
  for (Vertex v : path) {
    if (out.size() >= 2 && out[out.size() - 2] == v)
      out.pop_back();
    else
      out.push_back(v);
  }
  return out;
}

Path reduce_backtracks(const Path& p) {
  return Path(p.graph_ptr(), reduce_backtracks(p.vertices()));
}

}  // namespace pi2
