#include "pi2/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pi2 {

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> facets) {
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(facets.begin(), facets.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto& f : facets) {
    if (f.empty()) continue;
    bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& big) {
      return std::includes(big.begin(), big.end(), f.begin(), f.end());
    });
    if (!covered) facets_.push_back(f);
  }
  std::sort(facets_.begin(), facets_.end());
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  vertices_.assign(vs.begin(), vs.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::contains(const VertexSet& simplex) const {
  VertexSet s = simplex;
  std::sort(s.begin(), s.end());
  if (s.empty()) return true;
  return std::any_of(facets_.begin(), facets_.end(), [&](const VertexSet& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

std::vector<VertexSet> SimplicialComplex::simplices(int dim) const {
  std::set<VertexSet> out;
  const std::size_t k = static_cast<std::size_t>(dim + 1);
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + k, true);
    do {
      VertexSet s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) s.push_back(f[i]);
      out.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::vector<VertexSet>(out.begin(), out.end());
}

SimplicialComplex SimplicialComplex::star(Vertex v) const {
  std::vector<VertexSet> fs;
  for (const auto& f : facets_)
    if (std::binary_search(f.begin(), f.end(), v)) fs.push_back(f);
  return SimplicialComplex(std::move(fs));
}

SimplicialComplex SimplicialComplex::component_of(Vertex v) const {
  std::set<Vertex> reached{v};
  std::vector<bool> used(facets_.size(), false);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
      if (used[i]) continue;
      bool touches = std::any_of(facets_[i].begin(), facets_[i].end(),
                                 [&](Vertex x) { return reached.count(x) > 0; });
      if (!touches) continue;
      used[i] = true;
      reached.insert(facets_[i].begin(), facets_[i].end());
      grew = true;
    }
  }
  std::vector<VertexSet> fs;
  for (std::size_t i = 0; i < facets_.size(); ++i)
    if (used[i]) fs.push_back(facets_[i]);
  return SimplicialComplex(std::move(fs));
}

std::vector<SimplicialComplex> SimplicialComplex::components() const {
  std::vector<SimplicialComplex> out;
  std::set<Vertex> seen;
  for (Vertex v : vertices_) {
    if (seen.count(v)) continue;
    auto c = component_of(v);
    seen.insert(c.vertices().begin(), c.vertices().end());
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pi2
