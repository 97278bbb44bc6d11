#include "pi2/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pi2/errors.hpp"

namespace pi2 {

int ChainComplex2::square_cell(const Square& s) const {
  auto it = std::lower_bound(squares.begin(), squares.end(), s);
  if (it == squares.end() || !(*it == s)) return -1;
  return static_cast<int>(it - squares.begin());
}

namespace {

int edge_index(const std::vector<Edge>& edges, Vertex a, Vertex b) {
  Edge e{std::min(a, b), std::max(a, b)};
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) throw std::logic_error("edge missing from the complex");
  return static_cast<int>(it - edges.begin());
}

}  // namespace

ChainComplex2 square_complex(const Graph& g) {
  ChainComplex2 c;
  c.vertex_count = g.vertex_count();
  c.edges = g.edges();
  c.squares = enumerate_squares(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.has_loop(v)) c.loops.push_back(v);
  const int ne = static_cast<int>(c.edges.size());
  c.boundary1 = IntMatrix(c.vertex_count, ne);
  for (int e = 0; e < ne; ++e) {
    auto [a, b] = c.edges[e];
    if (a == b) continue;
    c.boundary1.at(a, e) -= 1;
    c.boundary1.at(b, e) += 1;
  }
  const int nf = static_cast<int>(c.squares.size() + c.loops.size());
  c.boundary2 = IntMatrix(ne, nf);
  for (std::size_t f = 0; f < c.squares.size(); ++f) {
    const Square& s = c.squares[f];
    for (int i = 0; i < 4; ++i) {
      Vertex a = s[i], b = s[i + 1];
      c.boundary2.at(edge_index(c.edges, a, b), static_cast<int>(f)) += a <= b ? 1 : -1;
    }
  }
  for (std::size_t k = 0; k < c.loops.size(); ++k)
    c.boundary2.at(edge_index(c.edges, c.loops[k], c.loops[k]),
                   static_cast<int>(c.squares.size() + k)) = 2;
  if (!(c.boundary1 * c.boundary2).is_zero())
    throw std::logic_error("square complex boundaries do not compose to zero");
  return c;
}

AbelianGroup h1_chain_complex(const ChainComplex2& c) {
  return homology(c.boundary1, c.boundary2);
}

AbelianGroup h1_graph(const Graph& g) {
  AbelianGroup by_presentation;
  for (const auto& comp : connected_components(g))
    by_presentation = direct_sum(by_presentation, abelianize(cw_presentation(g, comp.front()).presentation));
  AbelianGroup by_chains = h1_chain_complex(square_complex(g));
  if (!(by_presentation == by_chains))
    throw std::logic_error("H1 mismatch: presentation gives " + by_presentation.to_string() +
                           ", chains give " + by_chains.to_string());
  return by_chains;
}

AbelianGroup h0_graph(const Graph& g) {
  return free_abelian(static_cast<int>(connected_components(g).size()));
}

std::pair<AbelianGroup, AbelianGroup> simplicial_h01(const SimplicialComplex& k) {
  auto v = k.simplices(0);
  auto e = k.simplices(1);
  auto t = k.simplices(2);
  std::map<Vertex, int> vi;
  for (std::size_t i = 0; i < v.size(); ++i) vi[v[i][0]] = static_cast<int>(i);
  std::map<VertexSet, int> ei;
  for (std::size_t i = 0; i < e.size(); ++i) ei[e[i]] = static_cast<int>(i);
  IntMatrix d1(static_cast<int>(v.size()), static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    d1.at(vi[e[i][0]], static_cast<int>(i)) -= 1;
    d1.at(vi[e[i][1]], static_cast<int>(i)) += 1;
  }
  IntMatrix d2(static_cast<int>(e.size()), static_cast<int>(t.size()));
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& s = t[i];
    int col = static_cast<int>(i);
    d2.at(ei[{s[1], s[2]}], col) += 1;
    d2.at(ei[{s[0], s[2]}], col) -= 1;
    d2.at(ei[{s[0], s[1]}], col) += 1;
  }
  if (!(d1 * d2).is_zero()) throw std::logic_error("simplicial boundaries do not compose to zero");
  IntMatrix d0(0, static_cast<int>(v.size()));
  return {homology(d0, d1), homology(d1, d2)};
}

// ---- Mayer-Vietoris --------------------------------------------------------------

bool MayerVietorisReport::passed() const {
  return covers && std::all_of(exact.begin(), exact.end(), [](bool b) { return b; }) &&
         union_matches_graph && inclusion_iso;
}

namespace {

using Mask = std::vector<bool>;

IntMatrix block_stack(const IntMatrix& top, const IntMatrix& bottom) {
  return IntMatrix::vconcat(top, bottom);
}

IntMatrix pick_columns(const IntMatrix& m, const Mask& cols) {
  int k = static_cast<int>(std::count(cols.begin(), cols.end(), true));
  IntMatrix out(m.rows(), k);
  int j = 0;
  for (int c = 0; c < m.cols(); ++c) {
    if (!cols[c]) continue;
    for (int r = 0; r < m.rows(); ++r) out.at(r, j) = m.at(r, c);
    ++j;
  }
  return out;
}

IntMatrix pick(const IntMatrix& m, const Mask& rows, const Mask& cols) {
  IntMatrix c = pick_columns(m, cols).transpose();
  return pick_columns(c, rows).transpose();
}

// Columns e_i for i in the mask.
IntMatrix coordinate_basis(const Mask& mask) {
  return pick_columns(IntMatrix::identity(static_cast<int>(mask.size())), mask);
}

struct Sub {
  Mask v, e, f;
};

// Cycles of X in global edge coordinates.
Lattice cycles1(const ChainComplex2& c, const Sub& x) {
  IntMatrix restricted = pick(c.boundary1, x.v, x.e);
  IntMatrix k = kernel_basis(restricted);
  return Lattice(coordinate_basis(x.e) * k);
}

Lattice boundaries1(const ChainComplex2& c, const Sub& x) {
  return Lattice(pick_columns(c.boundary2, x.f));
}

Lattice boundaries0(const ChainComplex2& c, const Sub& x) {
  return Lattice(pick_columns(c.boundary1, x.e));
}

Lattice chains0(const Sub& x) { return Lattice(coordinate_basis(x.v)); }

Lattice direct(const Lattice& a, const Lattice& b) {
  const IntMatrix& ga = a.generators();
  const IntMatrix& gb = b.generators();
  IntMatrix m(ga.rows() + gb.rows(), ga.cols() + gb.cols());
  for (int r = 0; r < ga.rows(); ++r)
    for (int col = 0; col < ga.cols(); ++col) m.at(r, col) = ga.at(r, col);
  for (int r = 0; r < gb.rows(); ++r)
    for (int col = 0; col < gb.cols(); ++col) m.at(ga.rows() + r, ga.cols() + col) = gb.at(r, col);
  return Lattice(std::move(m));
}

AbelianGroup group_of(const ChainComplex2& c, const Sub& x, int degree) {
  IntMatrix d1 = pick(c.boundary1, x.v, x.e);
  if (degree == 0) return homology(IntMatrix(0, d1.rows()), d1);
  return homology(d1, pick(c.boundary2, x.e, x.f));
}

Sub cells_of(const ChainComplex2& c, const Subgraph& k) {
  Sub s;
  for (Vertex v = 0; v < c.vertex_count; ++v) s.v.push_back(k.contains_vertex(v));
  for (auto [a, b] : c.edges) s.e.push_back(k.contains_edge(a, b));
  for (const Square& sq : c.squares) s.f.push_back(square_in(k, sq));
  for (Vertex l : c.loops) s.f.push_back(k.contains_edge(l, l));
  return s;
}

Sub combine(const Sub& a, const Sub& b, bool both) {
  Sub s;
  auto op = [both](const Mask& x, const Mask& y) {
    Mask out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = both ? (x[i] && y[i]) : (x[i] || y[i]);
    return out;
  };
  s.v = op(a.v, b.v);
  s.e = op(a.e, b.e);
  s.f = op(a.f, b.f);
  return s;
}

}  // namespace

MayerVietorisReport mayer_vietoris_check(const Graph& g, const Subgraph& k1, const Subgraph& k2,
                                         int depth_limit) {
  if (k1.parent_vertex_count() != g.vertex_count() || k2.parent_vertex_count() != g.vertex_count())
    throw DomainError("subgraphs are not subgraphs of this graph");
  if (!(unite(k1, k2) == Subgraph::whole(g))) throw DomainError("K1 ∪ K2 is not the whole graph");
  MayerVietorisReport rep;
  rep.covers = true;
  for (const Square& s : enumerate_squares(g)) {
    auto d = decompose_square(g, s, {k1, k2}, depth_limit);
    if (d.status != Decomposition::Status::decomposed) rep.undecomposed.push_back(s);
    if (d.status == Decomposition::Status::inconclusive) rep.inconclusive = true;
  }

  ChainComplex2 c = square_complex(g);
  const int nv = c.vertex_count;
  const int ne = static_cast<int>(c.edges.size());
  Sub a = cells_of(c, k1);
  Sub b = cells_of(c, k2);
  Sub u = combine(a, b, false);
  Sub in = combine(a, b, true);
  Sub whole{Mask(nv, true), Mask(ne, true), Mask(c.boundary2.cols(), true)};

  rep.groups = {group_of(c, in, 1),
                direct_sum(group_of(c, a, 1), group_of(c, b, 1)),
                group_of(c, u, 1),
                group_of(c, in, 0),
                direct_sum(group_of(c, a, 0), group_of(c, b, 0)),
                group_of(c, u, 0)};

  IntMatrix id_e = IntMatrix::identity(ne);
  IntMatrix id_v = IntMatrix::identity(nv);
  IntMatrix neg_e = id_e, neg_v = id_v;
  for (int i = 0; i < ne; ++i) neg_e.at(i, i) = -1;
  for (int i = 0; i < nv; ++i) neg_v.at(i, i) = -1;
  IntMatrix f1 = block_stack(id_e, id_e);
  IntMatrix f2 = IntMatrix::hconcat(id_e, neg_e);
  IntMatrix f4 = block_stack(id_v, id_v);
  IntMatrix f5 = IntMatrix::hconcat(id_v, neg_v);
  // Connecting map: the part of a cycle on K1's edges, then its boundary.
  IntMatrix restrict_a(ne, ne);
  for (int i = 0; i < ne; ++i) restrict_a.at(i, i) = a.e[i] ? 1 : 0;
  IntMatrix delta = c.boundary1 * restrict_a;

  Lattice z1_in = cycles1(c, in), z1_u = cycles1(c, u);
  Lattice z1_ab = direct(cycles1(c, a), cycles1(c, b));
  Lattice b1_ab = direct(boundaries1(c, a), boundaries1(c, b));
  Lattice b1_u = boundaries1(c, u);
  Lattice c0_in = chains0(in), c0_u = chains0(u);
  Lattice c0_ab = direct(chains0(a), chains0(b));
  Lattice b0_in = boundaries0(c, in), b0_u = boundaries0(c, u);
  Lattice b0_ab = direct(boundaries0(c, a), boundaries0(c, b));

  if (!c0_in.contains(z1_u.image(delta)))
    throw std::logic_error("connecting map leaves the intersection");

  rep.exact.push_back(z1_in.image(f1) + b1_ab == z1_ab.preimage_within(f2, b1_u));
  rep.exact.push_back(z1_ab.image(f2) + b1_u == z1_u.preimage_within(delta, b0_in));
  rep.exact.push_back(z1_u.image(delta) + b0_in == c0_in.preimage_within(f4, b0_ab));
  rep.exact.push_back(c0_in.image(f4) + b0_ab == c0_ab.preimage_within(f5, b0_u));
  rep.exact.push_back(c0_ab.image(f5) + b0_u == c0_u);

  rep.union_matches_graph = group_of(c, u, 1) == group_of(c, whole, 1);
  rep.inclusion_iso = cycles1(c, u) == cycles1(c, whole) && b1_u == boundaries1(c, whole);
  return rep;
}

}  // namespace pi2
