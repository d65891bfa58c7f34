#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tenjoin/eigensolve.hpp"
#include "tenjoin/hypergraph.hpp"
#include "tenjoin/matrices.hpp"

using namespace tenjoin;

namespace {

Hypergraph triangle() { return build_hypergraph(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}}); }

Hypergraph random_hypergraph(std::mt19937& rng, int n) {
  std::vector<Edge> edges;
  std::uniform_int_distribution<int> card(2, std::min(4, n));
  std::uniform_int_distribution<int> count(1, 2 * n);
  std::uniform_int_distribution<int> vert(1, n);
  std::uniform_int_distribution<int> num(0, 4);
  int m = count(rng);
  for (int i = 0; i < m; ++i) {
    int c = card(rng);
    std::set<Vertex> verts;
    while (static_cast<int>(verts.size()) < c) verts.insert(vert(rng));
    edges.push_back({VertexSet(verts.begin(), verts.end()), make_rational(num(rng) + 1, num(rng) + 1)});
  }
  return build_hypergraph(n, edges);
}

}  // namespace

TEST_CASE("adjacency of a single weighted edge") {
  Hypergraph h = build_hypergraph(3, {{{1, 2, 3}, 2}});
  RMatrix a = adjacency(h);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(a(i, j) == (i == j ? Rational(0) : Rational(1)));
}

TEST_CASE("adjacency of the edgeless hypergraph is zero") {
  RMatrix a = adjacency(edgeless(4));
  CHECK(a == RMatrix::Zero(4, 4));
}

TEST_CASE("adjacency of the complete 3-uniform hypergraph on 4 vertices is J - I") {
  RMatrix a = adjacency(complete_uniform(4, 3));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a(i, j) == (i == j ? Rational(0) : Rational(1)));
}

TEST_CASE("loops are rejected by every builder") {
  Hypergraph loop = build_hypergraph(2, {{{1}, 1}});
  CHECK(loop.has_loops());
  CHECK_THROWS_AS(adjacency(loop), std::invalid_argument);
  CHECK_THROWS_AS(laplacian(loop), std::invalid_argument);
  CHECK_THROWS_AS(normalized_laplacian(loop), std::invalid_argument);
}

TEST_CASE("laplacian of the triangle") {
  RMatrix l = laplacian(triangle());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(l(i, j) == (i == j ? Rational(2) : Rational(-1)));
  CHECK(laplacian(edgeless(3)) == RMatrix::Zero(3, 3));
}

TEST_CASE("laplacian row sums vanish") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Hypergraph h = random_hypergraph(rng, 5);
    RMatrix l = laplacian(h);
    for (int i = 0; i < 5; ++i) {
      Rational row = 0;
      for (int j = 0; j < 5; ++j) row += l(i, j);
      CHECK(row == 0);
    }
  }
}

TEST_CASE("normalized laplacian of the triangle") {
  auto spec = sorted_spectrum(normalized_laplacian(triangle()));
  CHECK(spec.size() == 3);
  CHECK(spec[0] == doctest::Approx(0).epsilon(1e-12));
  CHECK(spec[1] == doctest::Approx(1.5));
  CHECK(spec[2] == doctest::Approx(1.5));
}

TEST_CASE("normalized laplacian of a regular hypergraph is I - A/r") {
  Hypergraph h = complete_uniform(4, 3);  // 3-regular
  DMatrix nl = normalized_laplacian(h);
  DMatrix expected = DMatrix::Identity(4, 4) - to_double(adjacency(h)) / 3.0;
  CHECK((nl - expected).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("isolated vertices are refused by name") {
  Hypergraph h = build_hypergraph(3, {{{1, 2}, 1}});
  CHECK_THROWS_WITH_AS(normalized_laplacian(h), doctest::Contains("vertex 3"), std::invalid_argument);
  CHECK_THROWS_AS(normalized_similar(h), std::invalid_argument);
}

TEST_CASE("laplacian is positive semidefinite") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    Hypergraph h = random_hypergraph(rng, 6);
    auto spec = sorted_spectrum(to_double(laplacian(h)));
    CHECK(spec.front() >= -1e-9);
  }
}

TEST_CASE("similar rational matrix shares the normalized spectrum") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    Hypergraph h = random_hypergraph(rng, 5);
    bool isolated = false;
    for (Vertex v = 1; v <= 5; ++v)
      if (h.valency(v) == 0) isolated = true;
    if (isolated) continue;
    auto direct = sorted_spectrum(normalized_laplacian(h));
    RationalPoly p = charpoly_exact(normalized_similar(h));
    for (double root : direct) CHECK(std::abs(p.evaluate(root)) < 1e-9);
  }
}

TEST_CASE("unweighted specialization matches on the complete 3-uniform hypergraph") {
  // with unit weights each pair of K_4^3 lies in two triples, each giving 1/2
  RMatrix a = adjacency(complete_uniform(4, 3, 1));
  CHECK(a(0, 1) == 1);
}
