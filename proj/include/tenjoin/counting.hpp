#pragma once

#include <utility>
#include <vector>

#include "tenjoin/hypergraph.hpp"
#include "tenjoin/rational.hpp"

namespace tenjoin {

// Number of c-subsets of the disjoint union of classes with the given sizes
// that contain a fixed vertex of class i and a fixed (distinct) vertex of
// class j and meet every class; composition-sum form. Classes are 1-based.
Integer n_cross(const std::vector<int>& sizes, int i, int j, int c);

// Same quantity by explicit subset enumeration. Total size capped at 20.
Integer n_cross_oracle(const std::vector<int>& sizes, int i, int j, int c);

// Number of c-subsets through a fixed cross pair taking at most one vertex
// per class: the strong-partite count. Zero when i == j or c < 2.
Integer q_cross(const std::vector<int>& sizes, int i, int j, int c);
Integer q_cross_oracle(const std::vector<int>& sizes, int i, int j, int c);

// Pair counts over l equal classes of size n. p1: members through two fixed
// vertices of class 1 that meet some other class; p2: members through one
// fixed vertex each of classes 1 and 2, unrestricted elsewhere.
Integer p1(int n, int l, int c);
Integer p2(int n, int l, int c);
Integer p1_oracle(int n, int l, int c);
Integer p2_oracle(int n, int l, int c);

// x1 = C(n-1, r-1)/(2r-1); x2 = C(n-2, r-2)/(2r-1), with x2 = 0 at r = 1.
std::pair<Rational, Rational> x1x2(int n, int r);

// Constants of the k-copy factorization for l-subset families of aligned
// cardinality r on k copies of an n-vertex constituent, over X = {2..ln}.
struct KCopyConstants {
  Rational p1_prime, p2_prime, p12, p21, p22;
};
KCopyConstants k_copy_constants(int k, int l, int n, int r, const WeightTable& w);

}  // namespace tenjoin
