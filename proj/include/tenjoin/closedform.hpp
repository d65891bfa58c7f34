#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tenjoin/counting.hpp"
#include "tenjoin/family.hpp"
#include "tenjoin/matrices.hpp"
#include "tenjoin/poly.hpp"

namespace tenjoin {

// Factored characteristic polynomial: exact rational roots, exact residual
// factors whose roots may be irrational (with their floating values carried
// alongside), and a small quotient matrix holding the remaining spectrum.
// expanded() multiplies everything back together, exactly.
struct CharPolyFactored {
  std::vector<std::pair<Rational, int>> linear;        // (root, multiplicity)
  std::vector<std::pair<RationalPoly, int>> residual;  // (factor, multiplicity)
  std::vector<double> residual_roots;                  // one per residual root, with multiplicity
  RMatrix quotient;                                    // exact matrix carrying the quotient spectrum
  DMatrix quotient_sym;                                // symmetric floating form of the same spectrum

  RationalPoly expanded() const;
  std::vector<double> spectrum(double tol = 1e-12) const;
  int order() const;
};

// Regular constituent summary: size, common valency, exact adjacency
// characteristic polynomial and its floating spectrum.
struct ConstituentSpec {
  int n = 0;
  Rational valency;
  RationalPoly adj_charpoly;
  std::vector<double> adj_spectrum;
};

// Throws when g is not regular.
ConstituentSpec make_constituent(const Hypergraph& g, double tol = 1e-12);

struct JoinSpec {
  std::vector<ConstituentSpec> parts;
  CrossCounts counts;  // constant pair counts, 1-based class indices
  WeightTable weights;
  MatrixKind kind = MatrixKind::Adjacency;
};

// sum_c w_c * n_ij^(c) / (c - 1)
Rational weighted_pair_sum(const CrossCounts& counts, const WeightTable& w, int i, int j);

// Valency of every vertex of class i in the join described by the spec.
Rational join_class_valency(const JoinSpec& spec, int i);

// Generic block engine: diagonal blocks with known characteristic polynomial
// and constant row sum, constant off-diagonal blocks rho_ij * J. Removes one
// row-sum copy per block and forms the quotient with entries rho_ij * n_j.
struct BlockInput {
  RationalPoly charpoly;
  Rational row_sum;
  std::vector<double> spectrum;  // optional floating spectrum (may be empty)
};
CharPolyFactored block_spectrum(const std::vector<BlockInput>& blocks, const RMatrix& rho);

// Characteristic polynomial of the join of regular constituents along a
// family with constant pair counts, for the requested matrix.
CharPolyFactored join_charpoly(const JoinSpec& spec);

// Single-cardinality restriction of join_charpoly; rejects counts outside m.
CharPolyFactored uniform_join_charpoly(const JoinSpec& spec, int m);

// Join over a pattern hypergraph: aggregates the per-edge constant counts
// (keyed by global class indices, aligned with pattern.edges()) and delegates.
CharPolyFactored backbone_join_charpoly(const Hypergraph& pattern, const std::vector<ConstituentSpec>& parts,
                                        const std::vector<CrossCounts>& per_edge_counts, const WeightTable& w,
                                        MatrixKind kind);

// Computes the per-edge counts from explicit families (local class indices
// are translated to global ones) and verifies their constancy.
std::vector<CrossCounts> backbone_counts_from_families(const Hypergraph& pattern, const std::vector<int>& sizes,
                                                       const std::vector<EdgeFamily>& families);

// ---- two-copy joins of a hypergraph and its derived companions ----------

// The five constituents derived from a base hypergraph h, all carrying the
// cardinality weight table: h itself, its complement within its own
// cardinality set, the complete hypergraph, the edgeless hypergraph, and the
// complement within all cardinalities.
enum class DerivedPart { Base, SComplement, Complete, Empty, TotalComplement };

// Families over two equal classes used by the two-copy join.
struct TwoCopyFamily {
  enum Kind { Aligned, Identity, Full, FullMinusAligned, FullMinusIdentity } kind = Identity;
  int r = 1;
};

Hypergraph derived_part(const Hypergraph& h, const WeightTable& w, DerivedPart which);
Rational derived_valency(const Hypergraph& h, const WeightTable& w, DerivedPart which);
EdgeFamily two_copy_family(int n, const TwoCopyFamily& t);

// Adjacency-level structure constants of a two-class family on classes of
// size n: within-class off-diagonal gamma (beta = -gamma), aligned cross
// entry a + b and cross entry b.
struct FamilyConstants {
  Rational beta, gamma, a, b;
};
FamilyConstants two_copy_constants(int n, const TwoCopyFamily& t, const WeightTable& w);

// Characteristic polynomial of the two-copy join g1 v_T g2 where g1 and g2
// are derived from the same regular base h; computed from co-eigenvalue
// quadratics, never from the assembled join matrix.
CharPolyFactored two_copy_charpoly(const Hypergraph& h, const WeightTable& w, DerivedPart g1, DerivedPart g2,
                                   const TwoCopyFamily& t, MatrixKind kind);

// Specialized product for g1 = g2; must agree with the general route.
CharPolyFactored two_copy_equal_charpoly(const Hypergraph& h, const WeightTable& w, DerivedPart g,
                                         const TwoCopyFamily& t, MatrixKind kind);

// Builds the actual two-copy join (for cross-checks and the CLI).
Hypergraph two_copy_build(const Hypergraph& h, const WeightTable& w, DerivedPart g1, DerivedPart g2,
                          const TwoCopyFamily& t);

// ---- k copies ------------------------------------------------------------

enum class KCopyOp { Mirror, JoinNeighbourhood, VCNeighbourhood };

// Characteristic polynomial of k copies of a regular hypergraph joined by
// the chosen family on every l-subset of copies: per co-eigenvalue pair
// (d_t, mu_t) the factor is (x - d_t + mu_t)^(k-1) (x - d_t - (k-1) mu_t).
CharPolyFactored k_copy_charpoly(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op,
                                 MatrixKind kind);

// The same object built edge by edge (members repeated once per generating
// l-subset of copies).
Hypergraph k_copy_build(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op);

// Adjacency-level constants (beta, gamma, a, b) of the k-copy operation and
// the common valency z of the built hypergraph.
struct KCopyStructure {
  FamilyConstants adj;
  Rational z;
};
KCopyStructure k_copy_structure(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op);

// ---- catalog -------------------------------------------------------------

// Lexicographic product h[h'] via the backbone route; a fast path covers the
// uniform adjacency case. The backbone h contributes structure only.
CharPolyFactored lexicographic_charpoly(const Hypergraph& h, const Hypergraph& hprime, const WeightTable& w,
                                        MatrixKind kind);
// Adjacency fast path for a uniform backbone.
CharPolyFactored lexicographic_charpoly_uniform(const Hypergraph& h, const Hypergraph& hprime,
                                                const WeightTable& w);
Hypergraph lexicographic_build(const Hypergraph& h, const Hypergraph& hprime, const WeightTable& w);

// Complete strong partite hypergraphs: one vertex per chosen class. With m
// given, only members of cardinality m (requires 2 <= m <= k); otherwise all
// cardinalities 2..k.
CharPolyFactored strong_partite_charpoly(const std::vector<int>& sizes, std::optional<int> m,
                                         const WeightTable& w, MatrixKind kind);

enum class CatalogRow {
  UniformMPartite = 1,     // complete m-uniform m-partite
  UniformWeakPartite = 2,  // complete m-uniform weak k-partite, k <= m
  CompleteWeakPartite = 3, // complete weak k-partite
  JoinNonUniform = 4,      // join of regular hypergraphs, cardinalities B
  JoinUniform = 5,         // join of regular m-uniform hypergraphs, k <= m
};

struct CatalogParams {
  std::vector<int> sizes;         // rows 1-3
  std::vector<Hypergraph> parts;  // rows 4-5
  int m = 0;                      // rows 1, 2, 5
  std::set<int> b;                // row 4
};

CharPolyFactored catalog_charpoly(CatalogRow row, const CatalogParams& params, const WeightTable& w,
                                  MatrixKind kind);

}  // namespace tenjoin
