#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tenjoin/rational.hpp"

namespace tenjoin {

using Vertex = int;                     // 1-based
using VertexSet = std::vector<Vertex>;  // kept sorted and duplicate-free

struct Edge {
  VertexSet vertices;
  Rational weight;

  bool operator==(const Edge& other) const = default;
};

// Weight per edge cardinality for newly created join edges, with a default
// for cardinalities that were not listed.
class WeightTable {
 public:
  explicit WeightTable(const Rational& default_value = 1);

  void set(int cardinality, const Rational& w);
  Rational at(int cardinality) const;
  const Rational& default_value() const { return default_; }
  const std::map<int, Rational>& entries() const { return entries_; }

 private:
  std::map<int, Rational> entries_;
  Rational default_;
};

struct StructuralProfile {
  int rank = 0;    // max edge cardinality (0 when edgeless)
  int corank = 0;  // min edge cardinality (0 when edgeless)
  std::optional<int> uniform;
  std::optional<Rational> regular;
  std::set<int> cardinalities;
};

// Weighted hypergraph on vertices 1..n with a multiset of weighted edges.
// Edges are stored canonically sorted; parallel edges are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  Rational valency(Vertex v) const;  // sum of weights of edges through v
  int degree(Vertex v) const;        // number of edges through v

  std::optional<Rational> regular_valency() const;
  std::optional<int> uniform_cardinality() const;
  StructuralProfile profile() const;

  bool has_loops() const;
  bool has_duplicate_vertex_sets() const;
  std::set<int> cardinality_set() const;

  bool operator==(const Hypergraph& other) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Validating constructor used everywhere; throws std::invalid_argument on a
// vertex out of range, an empty edge, a repeated vertex or a negative weight.
Hypergraph build_hypergraph(int n, std::vector<Edge> edges);

Hypergraph edgeless(int n);
// All subsets of cardinality 2..n, weighted by cardinality.
Hypergraph complete(int n, const WeightTable& w);
// All r-subsets with a common weight.
Hypergraph complete_uniform(int n, int r, const Rational& w = 1);
// Complement within the cardinality set of h; rejects duplicate vertex sets.
Hypergraph s_complement(const Hypergraph& h, const WeightTable& w);
// Complement within all cardinalities >= 2.
Hypergraph total_complement(const Hypergraph& h, const WeightTable& w);
// Every edge reweighted to w(|e|).
Hypergraph reweight(const Hypergraph& h, const WeightTable& w);
// Vertex i of part p becomes offset_p + i; returns the offsets.
std::pair<Hypergraph, std::vector<int>> disjoint_union(const std::vector<Hypergraph>& parts);
// perm[old - 1] = new vertex id; perm must be a permutation of 1..n.
Hypergraph relabel(const Hypergraph& h, const std::vector<Vertex>& perm);

}  // namespace tenjoin
