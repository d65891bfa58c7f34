#pragma once

#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "tenjoin/hypergraph.hpp"

namespace tenjoin {

// Ordered sequence of pairwise disjoint vertex classes; the per-class vertex
// order matters for the aligned constructions.
struct ClassSequence {
  std::vector<std::vector<Vertex>> classes;

  static ClassSequence contiguous(const std::vector<int>& sizes);

  int k() const { return static_cast<int>(classes.size()); }
  int total() const;
  std::vector<int> sizes() const;
  // 0-based class index of v, or -1 when v belongs to no class.
  int class_of(Vertex v) const;
  // u_{i,l}: the l-th vertex (1-based) of class i (1-based).
  Vertex aligned_vertex(int class_index, int position) const;

  bool operator==(const ClassSequence& other) const = default;
};

// A validated set of cross-class vertex subsets over a class sequence: no
// member lies inside a single class, members are sorted and duplicate-free.
struct EdgeFamily {
  ClassSequence classes;
  std::vector<VertexSet> members;
};

// Enumeration guard: constructors refuse to build more members than this
// unless allow_huge is set. TENJOIN_MAX_FAMILY overrides the default 10^6.
std::size_t family_member_limit();

EdgeFamily family_explicit(ClassSequence cs, std::vector<VertexSet> members);
// All subsets with cardinality in B meeting every class; B must lie in {k..N}.
EdgeFamily family_b_spanning(ClassSequence cs, const std::set<int>& b, bool allow_huge = false);
// All m-subsets of the union not inside a single class.
EdgeFamily family_uniform_max(ClassSequence cs, int m, bool allow_huge = false);
// All cross subsets of any cardinality >= 2.
EdgeFamily family_full(ClassSequence cs, bool allow_huge = false);
// Requires equal class sizes n: one member per r-subset L of positions,
// containing the aligned vertices of L in every class.
EdgeFamily family_aligned(ClassSequence cs, int r);
EdgeFamily family_identity(ClassSequence cs);  // aligned with r = 1
// For each edge of the pattern (a hypergraph on positions 1..n) and each
// ordered partition of it into k nonempty blocks, one member collecting the
// block's aligned vertices per class.
EdgeFamily family_backbone(ClassSequence cs, const Hypergraph& pattern, bool allow_huge = false);
EdgeFamily family_minus(const EdgeFamily& f, const EdgeFamily& g);
EdgeFamily family_plus(const EdgeFamily& f, const EdgeFamily& g);

// Per class pair i <= j (1-based) and member cardinality c, the number of
// members through a fixed vertex pair, when that number does not depend on
// the pair chosen.
struct CrossCounts {
  std::map<std::tuple<int, int, int>, long long> table;

  long long at(int i, int j, int c) const;
  std::set<int> cardinalities() const;

  bool operator==(const CrossCounts& other) const = default;
};

struct NonConstantWitness {
  int i, j, c;
  Vertex p1, q1;
  long long count1;
  Vertex p2, q2;
  long long count2;
};

std::variant<CrossCounts, NonConstantWitness> cross_counts(const EdgeFamily& f);
// Convenience that throws std::invalid_argument on a witness.
CrossCounts require_constant_counts(const EdgeFamily& f);

// Disjoint union of the parts plus one edge per family member, weighted by
// member cardinality. Class i of f must have exactly |V(part_i)| vertices;
// member vertices are mapped by class position onto the offset union.
Hypergraph tensor_join(const std::vector<Hypergraph>& parts, const EdgeFamily& f, const WeightTable& w);

// The class sequence (in union coordinates) spanned by the classes of a
// pattern edge, given all part sizes.
ClassSequence backbone_classes(const std::vector<int>& sizes, const VertexSet& pattern_edge);

// Join over a pattern hypergraph on class indices 1..k: families[t] sits on
// backbone_classes(sizes, pattern.edges()[t].vertices) and every member must
// meet every class of its edge. Members join as parallel edges when repeated.
Hypergraph backbone_join(const Hypergraph& pattern, const std::vector<Hypergraph>& parts,
                         const std::vector<EdgeFamily>& families, const WeightTable& w);

// Merge per-edge families into one family over the full class sequence.
EdgeFamily flatten(const ClassSequence& all, const Hypergraph& pattern,
                   const std::vector<EdgeFamily>& families);

// Split a family by the set of classes each member touches; keys are sorted
// 1-based class index sets.
std::map<std::vector<int>, EdgeFamily> subset_families(const EdgeFamily& f);

struct Decomposition {
  std::vector<Hypergraph> parts;   // induced, relabeled to 1..|part|
  EdgeFamily family;               // in union coordinates of the partition order
  WeightTable cross_weights;       // weight by cardinality of the cross edges
  std::vector<Vertex> relabeling;  // union coordinate -> original vertex id
};

// Views h as a join of the subhypergraphs induced by the partition; fails when
// two cross edges of equal cardinality carry different weights (a single
// weight per cardinality cannot express them) or when cross edges repeat.
Decomposition decompose(const Hypergraph& h, const std::vector<VertexSet>& partition);

using IMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

// 0-1 matrices M_ij (keyed by 1-based i < j) <-> the family of cross pairs.
EdgeFamily mjoin_family(const ClassSequence& cs, const std::map<std::pair<int, int>, IMatrix>& ms);
std::map<std::pair<int, int>, IMatrix> family_to_mjoin(const EdgeFamily& f);

}  // namespace tenjoin
