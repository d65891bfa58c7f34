#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tenjoin/cospectral.hpp"
#include "tenjoin/eigensolve.hpp"
#include "tenjoin/matrices.hpp"

using namespace tenjoin;

namespace {

Hypergraph triangle() { return build_hypergraph(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}}); }

Hypergraph c4_plus_isolated() {
  return build_hypergraph(5, {{{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{1, 4}, 1}});
}

Hypergraph star4() {
  return build_hypergraph(5, {{{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{1, 5}, 1}});
}

}  // namespace

TEST_CASE("canonical form is a relabeling invariant") {
  Hypergraph h = build_hypergraph(4, {{{1, 2}, 1}, {{2, 3, 4}, 1}});
  Hypergraph g = relabel(h, {4, 3, 2, 1});
  CHECK(canonical_form(h) == canonical_form(g));
  // the pair inside the triple cannot be mapped to a pair meeting it once
  Hypergraph other = build_hypergraph(4, {{{1, 2}, 1}, {{1, 2, 3}, 1}});
  CHECK(!(canonical_form(h) == canonical_form(other)));
  CHECK_THROWS_AS(canonical_form(edgeless(9)), std::invalid_argument);
}

TEST_CASE("enumeration of small scales") {
  // graphs on 3 vertices: empty, one edge, path, triangle
  CHECK(enumerate_hypergraphs(3, {2}, std::nullopt, false).size() == 4);

  auto regular43 = enumerate_hypergraphs(4, {3}, 3, true);
  bool has_k43 = false;
  for (const auto& h : regular43)
    if (h == complete_uniform(4, 3)) has_k43 = true;
  CHECK(has_k43);

  CHECK(enumerate_hypergraphs(2, {3}, 3, false).size() == 1);  // only the edgeless one
  CHECK_THROWS_AS(enumerate_hypergraphs(9, {2}, std::nullopt, true), std::invalid_argument);
}

TEST_CASE("pair finder on the classic graph pair") {
  auto pairs = find_cospectral_pairs({c4_plus_isolated(), star4()});
  REQUIRE(pairs.size() == 1);

  // isomorphic copies produce nothing
  auto none = find_cospectral_pairs({triangle(), relabel(triangle(), {2, 3, 1})});
  CHECK(none.empty());
}

TEST_CASE("verification reports") {
  CospectralReport self = verify_cospectral(triangle(), triangle());
  CHECK(self.adjacency);
  CHECK(self.laplacian);
  REQUIRE(self.normalized.has_value());
  CHECK(*self.normalized);

  CospectralReport classic = verify_cospectral(c4_plus_isolated(), star4());
  CHECK(classic.adjacency);
  CHECK(!classic.laplacian);
  CHECK(!classic.normalized.has_value());  // isolated vertex: refusal

  // symmetry
  CospectralReport swapped = verify_cospectral(star4(), c4_plus_isolated());
  CHECK(swapped.adjacency == classic.adjacency);
  CHECK(swapped.laplacian == classic.laplacian);

  CHECK_THROWS_AS(verify_cospectral(triangle(), star4()), std::invalid_argument);
}

TEST_CASE("join factory with isomorphic slots is a sanity floor") {
  WeightTable w(1);
  std::vector<std::pair<Hypergraph, Hypergraph>> slots{{triangle(), relabel(triangle(), {2, 3, 1})},
                                                       {triangle(), triangle()}};
  auto f = family_b_spanning(ClassSequence::contiguous({3, 3}), {2});
  auto [j1, j2] = cospectral_join_family(slots, f, w);
  CHECK(j1 == j2);  // the relabeled triangle is the triangle itself
  CospectralReport rep = verify_cospectral(j1, j2);
  CHECK(rep.all_three());
}

TEST_CASE("join factory validates slots") {
  WeightTable w(1);
  auto f = family_b_spanning(ClassSequence::contiguous({3, 3}), {2});
  Hypergraph path = build_hypergraph(3, {{{1, 2}, 1}, {{2, 3}, 1}});
  std::vector<std::pair<Hypergraph, Hypergraph>> bad{{triangle(), path}, {triangle(), triangle()}};
  CHECK_THROWS_AS(cospectral_join_family(bad, f, w), std::invalid_argument);

  auto varying = family_explicit(ClassSequence::contiguous({3, 3}), {{1, 4}});
  std::vector<std::pair<Hypergraph, Hypergraph>> ok{{triangle(), triangle()}, {triangle(), triangle()}};
  CHECK_THROWS_AS(cospectral_join_family(ok, varying, w), std::invalid_argument);
}

TEST_CASE("search ladder over the small scales") {
  // scales up to n = 5 hold no regular uniform cospectral pair
  std::vector<SearchScale> ladder;
  for (int n = 4; n <= 5; ++n)
    for (int m = 2; m < n; ++m) ladder.push_back({n, m});
  SearchReport report = cospectral_search(ladder);
  CHECK(!report.found_at.has_value());
  CHECK(report.exhausted.size() == ladder.size());
  CHECK(!report.summary().empty());
}

TEST_CASE("full ladder finds a pair and the factory certifies it") {
  SearchReport report = cospectral_search(default_search_ladder());
  REQUIRE(report.found_at.has_value());
  CHECK(report.found_at->scale.n == 7);
  CHECK(report.found_at->scale.m == 3);
  REQUIRE(!report.pairs.empty());
  const auto& [h1, h2] = report.pairs.front();
  CHECK(!(canonical_form(h1) == canonical_form(h2)));
  CHECK(charpoly_exact(adjacency(h1)) == charpoly_exact(adjacency(h2)));
  REQUIRE(h1.regular_valency().has_value());
  CHECK(h1.regular_valency() == h2.regular_valency());

  // the factory output is simultaneously cospectral in all three matrices
  WeightTable w(1);
  int n = h1.vertex_count();
  std::vector<std::pair<Hypergraph, Hypergraph>> slots{{h1, h2}, {h1, h1}};
  auto f = family_b_spanning(ClassSequence::contiguous({n, n}), {2});
  auto [j1, j2] = cospectral_join_family(slots, f, w);
  CospectralReport rep = verify_cospectral(j1, j2);
  CHECK(rep.adjacency);
  CHECK(rep.laplacian);
  REQUIRE(rep.normalized.has_value());
  CHECK(*rep.normalized);
}

TEST_CASE("factory along a pattern hypergraph") {
  WeightTable w(1);
  Hypergraph pattern = build_hypergraph(2, {{{1, 2}, 1}});
  std::vector<int> sizes{3, 3};
  std::vector<EdgeFamily> fams{family_b_spanning(backbone_classes(sizes, {1, 2}), {2})};
  std::vector<std::pair<Hypergraph, Hypergraph>> slots{{triangle(), relabel(triangle(), {3, 1, 2})},
                                                       {triangle(), triangle()}};
  auto [j1, j2] = cospectral_backbone_family(pattern, slots, fams, w);
  CHECK(verify_cospectral(j1, j2).all_three());
}
