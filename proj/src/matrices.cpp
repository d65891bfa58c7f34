#include "tenjoin/matrices.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace tenjoin {

const char* kind_name(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adjacency";
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::NormalizedLaplacian: return "normalized-laplacian";
  }
  return "?";
}

namespace {

void reject_loops(const Hypergraph& h) {
  for (const auto& e : h.edges())
    if (e.vertices.size() == 1)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.vertices[0]) +
                                  ": matrix builders require edges of cardinality >= 2");
}

}  // namespace

RMatrix adjacency(const Hypergraph& h) {
  reject_loops(h);
  const int n = h.vertex_count();
  RMatrix a = RMatrix::Zero(n, n);
  for (const auto& e : h.edges()) {
    Rational share = e.weight / Rational(static_cast<long>(e.vertices.size()) - 1);
    for (std::size_t i = 0; i < e.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < e.vertices.size(); ++j) {
        a(e.vertices[i] - 1, e.vertices[j] - 1) += share;
        a(e.vertices[j] - 1, e.vertices[i] - 1) += share;
      }
  }
  return a;
}

RMatrix valency_diagonal(const Hypergraph& h) {
  const int n = h.vertex_count();
  RMatrix d = RMatrix::Zero(n, n);
  for (const auto& e : h.edges())
    for (Vertex v : e.vertices) d(v - 1, v - 1) += e.weight;
  return d;
}

RMatrix laplacian(const Hypergraph& h) {
  reject_loops(h);
  return RMatrix(valency_diagonal(h) - adjacency(h));
}

namespace {

RMatrix require_positive_valencies(const Hypergraph& h) {
  RMatrix d = valency_diagonal(h);
  for (Index i = 0; i < d.rows(); ++i)
    if (d(i, i) == 0)
      throw std::invalid_argument("vertex " + std::to_string(i + 1) +
                                  " is isolated: normalized Laplacian undefined");
  return d;
}

}  // namespace

DMatrix normalized_laplacian(const Hypergraph& h) {
  reject_loops(h);
  RMatrix d = require_positive_valencies(h);
  DMatrix l = to_double(laplacian(h));
  const Index n = l.rows();
  DVector dinv_sqrt(n);
  for (Index i = 0; i < n; ++i) dinv_sqrt(i) = 1.0 / std::sqrt(d(i, i).get_d());
  return dinv_sqrt.asDiagonal() * l * dinv_sqrt.asDiagonal();
}

RMatrix normalized_similar(const Hypergraph& h) {
  reject_loops(h);
  RMatrix d = require_positive_valencies(h);
  RMatrix l = laplacian(h);
  for (Index i = 0; i < l.rows(); ++i) {
    Rational inv = 1 / d(i, i);
    for (Index j = 0; j < l.cols(); ++j) l(i, j) *= inv;
  }
  return l;
}

RMatrix matrix_of(const Hypergraph& h, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency(h);
    case MatrixKind::Laplacian: return laplacian(h);
    case MatrixKind::NormalizedLaplacian: return normalized_similar(h);
  }
  throw std::logic_error("unknown matrix kind");
}

DMatrix matrix_of_float(const Hypergraph& h, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return to_double(adjacency(h));
    case MatrixKind::Laplacian: return to_double(laplacian(h));
    case MatrixKind::NormalizedLaplacian: return normalized_laplacian(h);
  }
  throw std::logic_error("unknown matrix kind");
}

}  // namespace tenjoin
