#pragma once

#include "tenjoin/hypergraph.hpp"
#include "tenjoin/rational.hpp"

namespace tenjoin {

enum class MatrixKind { Adjacency, Laplacian, NormalizedLaplacian };

const char* kind_name(MatrixKind kind);

// Entry (i, j), i != j, is the sum of w_e / (|e| - 1) over edges containing
// both; the diagonal is zero. Rejects loops.
RMatrix adjacency(const Hypergraph& h);

RMatrix valency_diagonal(const Hypergraph& h);
RMatrix laplacian(const Hypergraph& h);

// Floating D^{-1/2} L D^{-1/2}; throws naming the vertex when one is isolated.
DMatrix normalized_laplacian(const Hypergraph& h);

// Exact D^{-1} L, similar to the normalized Laplacian (same spectrum).
RMatrix normalized_similar(const Hypergraph& h);

// Exact track for a matrix kind: A, L or D^{-1} L.
RMatrix matrix_of(const Hypergraph& h, MatrixKind kind);

// Floating track: A, L or D^{-1/2} L D^{-1/2}.
DMatrix matrix_of_float(const Hypergraph& h, MatrixKind kind);

}  // namespace tenjoin
