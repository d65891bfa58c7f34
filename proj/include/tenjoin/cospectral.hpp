#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tenjoin/family.hpp"
#include "tenjoin/hypergraph.hpp"
#include "tenjoin/poly.hpp"

namespace tenjoin {

// Lexicographically minimal edge-list encoding over all vertex permutations;
// equal forms certify isomorphism. Full permutation search, so n <= 8.
struct CanonicalForm {
  std::vector<std::pair<VertexSet, Rational>> edges;

  bool operator==(const CanonicalForm& other) const = default;
  bool operator<(const CanonicalForm& other) const;
  std::string str() const;
};

CanonicalForm canonical_form(const Hypergraph& h);

// One representative per isomorphism class of the unweighted hypergraphs on
// n vertices with the given edge cardinalities, optionally restricted to a
// single cardinality or to regular ones. Exhaustive, so small scales only.
std::vector<Hypergraph> enumerate_hypergraphs(int n, const std::set<int>& cardinalities,
                                              std::optional<int> uniform_m, bool regular_only);

// Pairs with equal exact adjacency characteristic polynomial but different
// canonical forms; exhaustive over the input.
std::vector<std::pair<Hypergraph, Hypergraph>> find_cospectral_pairs(const std::vector<Hypergraph>& hs);

struct CospectralReport {
  bool adjacency = false;
  bool laplacian = false;
  std::optional<bool> normalized;  // empty when an isolated vertex blocks it
  RationalPoly adjacency_poly_1, adjacency_poly_2;
  RationalPoly laplacian_poly_1, laplacian_poly_2;
  RationalPoly normalized_poly_1, normalized_poly_2;  // of D^{-1} L

  bool all_three() const { return adjacency && laplacian && normalized && *normalized; }
};

// Exact comparison of the characteristic polynomials of A, L and D^{-1}L.
CospectralReport verify_cospectral(const Hypergraph& a, const Hypergraph& b);

// Joins the two sides of every slot with one shared family and weight table.
// Each slot must hold hypergraphs of equal order, equal valency and equal
// exact adjacency characteristic polynomial, and the family must have
// constant pair counts.
std::pair<Hypergraph, Hypergraph> cospectral_join_family(
    const std::vector<std::pair<Hypergraph, Hypergraph>>& slots, const EdgeFamily& f, const WeightTable& w);

// Same guarantee along a pattern hypergraph.
std::pair<Hypergraph, Hypergraph> cospectral_backbone_family(
    const Hypergraph& pattern, const std::vector<std::pair<Hypergraph, Hypergraph>>& slots,
    const std::vector<EdgeFamily>& families, const WeightTable& w);

struct SearchScale {
  int n = 0;
  int m = 0;
};

// How a scale was covered. Exhaustive scales enumerate every isomorphism
// class, so "no pair" is a proof at that scale. Larger scales stream the
// labeled candidates and detect pairs sharing one adjacency matrix (filtered
// by an isomorphism invariant); a miss there is not a nonexistence proof.
enum class SearchMode { Exhaustive, MatrixEqual };

struct ScaleOutcome {
  SearchScale scale;
  SearchMode mode = SearchMode::Exhaustive;
};

struct SearchReport {
  std::vector<ScaleOutcome> exhausted;  // scales searched without a find
  std::optional<ScaleOutcome> found_at;
  std::vector<std::pair<Hypergraph, Hypergraph>> pairs;  // at found_at
  std::string summary() const;
};

std::vector<SearchScale> default_search_ladder();

// Walks the ladder of (n, m) scales over unweighted m-uniform regular
// hypergraphs and stops at the first scale producing a pair.
SearchReport cospectral_search(const std::vector<SearchScale>& ladder);

}  // namespace tenjoin
