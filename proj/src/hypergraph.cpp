#include "tenjoin/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace tenjoin {

namespace {

bool edge_less(const Edge& a, const Edge& b) {
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  return a.weight < b.weight;
}

}  // namespace

WeightTable::WeightTable(const Rational& default_value) : default_(default_value) {
  if (default_ < 0) throw std::invalid_argument("negative default weight");
}

void WeightTable::set(int cardinality, const Rational& w) {
  if (cardinality < 2) throw std::invalid_argument("weight table cardinality must be >= 2");
  if (w < 0) throw std::invalid_argument("negative weight");
  entries_[cardinality] = w;
}

Rational WeightTable::at(int cardinality) const {
  auto it = entries_.find(cardinality);
  return it == entries_.end() ? default_ : it->second;
}

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), edge_less);
}

Rational Hypergraph::valency(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  Rational sum = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.vertices.begin(), e.vertices.end(), v)) sum += e.weight;
  return sum;
}

int Hypergraph::degree(Vertex v) const {
  if (v < 1 || v > n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  int count = 0;
  for (const auto& e : edges_)
    if (std::binary_search(e.vertices.begin(), e.vertices.end(), v)) ++count;
  return count;
}

std::optional<Rational> Hypergraph::regular_valency() const {
  if (n_ == 0) return std::nullopt;
  Rational r = valency(1);
  for (Vertex v = 2; v <= n_; ++v)
    if (valency(v) != r) return std::nullopt;
  return r;
}

std::optional<int> Hypergraph::uniform_cardinality() const {
  if (edges_.empty()) return std::nullopt;
  int m = static_cast<int>(edges_.front().vertices.size());
  for (const auto& e : edges_)
    if (static_cast<int>(e.vertices.size()) != m) return std::nullopt;
  return m;
}

StructuralProfile Hypergraph::profile() const {
  StructuralProfile p;
  for (const auto& e : edges_) {
    int c = static_cast<int>(e.vertices.size());
    p.cardinalities.insert(c);
  }
  if (!p.cardinalities.empty()) {
    p.corank = *p.cardinalities.begin();
    p.rank = *p.cardinalities.rbegin();
    if (p.rank == p.corank) p.uniform = p.rank;
  }
  p.regular = regular_valency();
  return p;
}

bool Hypergraph::has_loops() const {
  for (const auto& e : edges_)
    if (e.vertices.size() == 1) return true;
  return false;
}

bool Hypergraph::has_duplicate_vertex_sets() const {
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].vertices == edges_[i - 1].vertices) return true;
  return false;
}

std::set<int> Hypergraph::cardinality_set() const {
  std::set<int> out;
  for (const auto& e : edges_) out.insert(static_cast<int>(e.vertices.size()));
  return out;
}

Hypergraph build_hypergraph(int n, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    if (e.vertices.empty()) throw std::invalid_argument("empty edge");
    std::sort(e.vertices.begin(), e.vertices.end());
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
      if (e.vertices[i] < 1 || e.vertices[i] > n)
        throw std::invalid_argument("vertex " + std::to_string(e.vertices[i]) + " out of range 1.." +
                                    std::to_string(n));
      if (i > 0 && e.vertices[i] == e.vertices[i - 1])
        throw std::invalid_argument("repeated vertex " + std::to_string(e.vertices[i]) + " in edge");
    }
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph edgeless(int n) { return build_hypergraph(n, {}); }

namespace {

void subsets_of_size(int n, int r, const std::function<void(const VertexSet&)>& visit) {
  VertexSet current;
  current.reserve(r);
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == r) {
      visit(current);
      return;
    }
    int needed = r - static_cast<int>(current.size());
    for (int v = next; v + needed - 1 <= n; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(1);
}

}  // namespace

Hypergraph complete(int n, const WeightTable& w) {
  if (n < 2) throw std::invalid_argument("complete hypergraph needs n >= 2");
  std::vector<Edge> edges;
  for (int c = 2; c <= n; ++c)
    subsets_of_size(n, c, [&](const VertexSet& s) { edges.push_back({s, w.at(c)}); });
  return build_hypergraph(n, std::move(edges));
}

Hypergraph complete_uniform(int n, int r, const Rational& w) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform cardinality out of range");
  std::vector<Edge> edges;
  if (r >= 1)
    subsets_of_size(n, r, [&](const VertexSet& s) { edges.push_back({s, w}); });
  return build_hypergraph(n, std::move(edges));  // r = 0: edgeless
}

Hypergraph s_complement(const Hypergraph& h, const WeightTable& w) {
  if (h.has_duplicate_vertex_sets())
    throw std::invalid_argument("complement undefined for duplicate vertex sets");
  std::set<VertexSet> present;
  for (const auto& e : h.edges()) present.insert(e.vertices);
  std::vector<Edge> edges;
  for (int c : h.cardinality_set()) {
    subsets_of_size(h.vertex_count(), c, [&](const VertexSet& s) {
      if (!present.count(s)) edges.push_back({s, w.at(c)});
    });
  }
  return build_hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph total_complement(const Hypergraph& h, const WeightTable& w) {
  if (h.has_duplicate_vertex_sets())
    throw std::invalid_argument("complement undefined for duplicate vertex sets");
  std::set<VertexSet> present;
  for (const auto& e : h.edges()) present.insert(e.vertices);
  std::vector<Edge> edges;
  for (int c = 2; c <= h.vertex_count(); ++c) {
    subsets_of_size(h.vertex_count(), c, [&](const VertexSet& s) {
      if (!present.count(s)) edges.push_back({s, w.at(c)});
    });
  }
  return build_hypergraph(h.vertex_count(), std::move(edges));
}

Hypergraph reweight(const Hypergraph& h, const WeightTable& w) {
  std::vector<Edge> edges = h.edges();
  for (auto& e : edges) e.weight = w.at(static_cast<int>(e.vertices.size()));
  return build_hypergraph(h.vertex_count(), std::move(edges));
}

std::pair<Hypergraph, std::vector<int>> disjoint_union(const std::vector<Hypergraph>& parts) {
  std::vector<int> offsets;
  int total = 0;
  for (const auto& p : parts) {
    offsets.push_back(total);
    total += p.vertex_count();
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& e : parts[i].edges()) {
      Edge shifted = e;
      for (auto& v : shifted.vertices) v += offsets[i];
      edges.push_back(std::move(shifted));
    }
  }
  return {build_hypergraph(total, std::move(edges)), offsets};
}

Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm) {
  int n = h.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel permutation size mismatch");
  std::vector<bool> seen(n + 1, false);
  for (Vertex v : perm) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("relabel argument is not a permutation");
    seen[v] = true;
  }
  std::vector<Edge> edges = h.edges();
  for (auto& e : edges)
    for (auto& v : e.vertices) v = perm[v - 1];
  return build_hypergraph(n, std::move(edges));
}

}  // namespace tenjoin
