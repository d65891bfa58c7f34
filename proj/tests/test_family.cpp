#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "tenjoin/counting.hpp"
#include "tenjoin/family.hpp"
#include "tenjoin/matrices.hpp"

using namespace tenjoin;

namespace {

Hypergraph triangle() { return build_hypergraph(3, {{{1, 2}, 1}, {{1, 3}, 1}, {{2, 3}, 1}}); }

ClassSequence worked_example_classes() {
  ClassSequence cs;
  cs.classes = {{1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10}};
  return cs;
}

}  // namespace

TEST_CASE("explicit family: the three-class worked example") {
  EdgeFamily f = family_explicit(worked_example_classes(), {{1, 2, 7}, {1, 2, 8}});
  CHECK(f.members.size() == 2);

  CHECK_THROWS_WITH_AS(family_explicit(worked_example_classes(), {{1, 2}}),
                       doctest::Contains("single class"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(family_explicit(worked_example_classes(), {{1, 99}}),
                       doctest::Contains("unknown vertex"), std::invalid_argument);
  CHECK(family_explicit(worked_example_classes(), {}).members.empty());
}

TEST_CASE("spanning families") {
  CHECK(family_b_spanning(ClassSequence::contiguous({3, 3}), {2}).members.size() == 9);
  CHECK(family_b_spanning(ClassSequence::contiguous({2, 2}), {4}).members.size() == 1);
  CHECK(family_b_spanning(ClassSequence::contiguous({2, 2, 2}), {3}).members.size() == 8);
  CHECK_THROWS_AS(family_b_spanning(ClassSequence::contiguous({2, 2}), {1}), std::invalid_argument);
  CHECK_THROWS_AS(family_b_spanning(ClassSequence::contiguous({2, 2}), {5}), std::invalid_argument);
}

TEST_CASE("uniform cross families") {
  CHECK(family_uniform_max(ClassSequence::contiguous({2, 2}), 2).members.size() == 4);
  CHECK(family_uniform_max(ClassSequence::contiguous({3, 3}), 6).members.size() == 1);
  CHECK(family_uniform_max(ClassSequence::contiguous({2, 2}), 3).members.size() == 4);
  CHECK_THROWS_AS(family_uniform_max(ClassSequence::contiguous({2, 2}), 5), std::invalid_argument);

  // |family| = C(N, m) - sum_i C(n_i, m)
  for (int m = 2; m <= 7; ++m) {
    auto f = family_uniform_max(ClassSequence::contiguous({3, 4}), m);
    Integer expected = binomial(7, m) - binomial(3, m) - binomial(4, m);
    CHECK(Integer(static_cast<long>(f.members.size())) == expected);
  }
}

TEST_CASE("full cross family") {
  CHECK(family_full(ClassSequence::contiguous({2, 2})).members.size() == 9);
  CHECK(family_full(ClassSequence::contiguous({1, 1})).members.size() == 1);
  // sizes (2,1): of the 7 nonempty subsets, 3 sit inside the first class and
  // 1 inside the second, leaving {1,3}, {2,3} and {1,2,3}
  CHECK(family_full(ClassSequence::contiguous({2, 1})).members.size() == 3);

  // full = disjoint union of the uniform families over all cardinalities
  ClassSequence cs = ClassSequence::contiguous({2, 3});
  auto full = family_full(cs);
  std::set<VertexSet> collected;
  for (int m = 2; m <= 5; ++m)
    for (const auto& member : family_uniform_max(cs, m).members) collected.insert(member);
  CHECK(collected == std::set<VertexSet>(full.members.begin(), full.members.end()));
}

TEST_CASE("aligned families") {
  auto identity = family_identity(ClassSequence::contiguous({3, 3}));
  CHECK(identity.members.size() == 3);
  CHECK(identity.members[0] == VertexSet{1, 4});

  CHECK(family_aligned(ClassSequence::contiguous({2, 2}), 2).members.size() == 1);
  auto f = family_aligned(ClassSequence::contiguous({3, 3, 3}), 2);
  CHECK(f.members.size() == 3);
  for (const auto& m : f.members) CHECK(m.size() == 6);
  CHECK_THROWS_AS(family_aligned(ClassSequence::contiguous({2, 3}), 1), std::invalid_argument);
  CHECK_THROWS_AS(family_aligned(ClassSequence::contiguous({2, 2}), 3), std::invalid_argument);

  // |aligned| = C(n, r)
  for (int r = 1; r <= 4; ++r)
    CHECK(Integer(static_cast<long>(family_aligned(ClassSequence::contiguous({4, 4}), r).members.size())) ==
          binomial(4, r));
}

TEST_CASE("backbone families") {
  ClassSequence cs = ClassSequence::contiguous({2, 2});
  Hypergraph single = build_hypergraph(2, {{{1, 2}, 1}});
  auto f = family_backbone(cs, single);
  CHECK(f.members.size() == 2);
  CHECK(std::set<VertexSet>(f.members.begin(), f.members.end()) == std::set<VertexSet>{{1, 4}, {2, 3}});

  CHECK(family_backbone(cs, edgeless(2)).members.empty());

  ClassSequence cs33 = ClassSequence::contiguous({3, 3});
  Hypergraph triple = build_hypergraph(3, {{{1, 2, 3}, 1}});
  auto g = family_backbone(cs33, triple);
  CHECK(g.members.size() == 6);  // 2^3 - 2 surjections
  for (const auto& m : g.members) CHECK(m.size() == 3);

  // member count = sum over edges of k! S(|e|, k)
  Hypergraph mixed = build_hypergraph(4, {{{1, 2}, 1}, {{1, 2, 3}, 1}, {{1, 2, 3, 4}, 1}});
  auto h = family_backbone(ClassSequence::contiguous({4, 4}), mixed);
  CHECK(h.members.size() == 2 + 6 + 14);

  // more classes than the pattern co-rank leaves some block empty
  CHECK_THROWS_AS(family_backbone(ClassSequence::contiguous({2, 2, 2}), single), std::invalid_argument);
}

TEST_CASE("family difference and union") {
  ClassSequence cs = ClassSequence::contiguous({2, 2});
  auto full = family_full(cs);
  auto identity = family_identity(cs);
  auto vc = family_minus(full, identity);
  CHECK(vc.members.size() == 7);
  CHECK(family_minus(full, full).members.empty());

  Hypergraph single = build_hypergraph(2, {{{1, 2}, 1}});
  auto mixed = family_plus(family_backbone(cs, single), family_aligned(cs, 1));
  CHECK(mixed.members.size() == 4);

  CHECK_THROWS_AS(family_minus(identity, full), std::invalid_argument);
  CHECK_THROWS_AS(family_plus(full, identity), std::invalid_argument);
}

TEST_CASE("cross counts") {
  auto counts = require_constant_counts(family_b_spanning(ClassSequence::contiguous({3, 3}), {2}));
  CHECK(counts.at(1, 2, 2) == 1);
  CHECK(counts.at(1, 1, 2) == 0);
  CHECK(counts.at(2, 2, 2) == 0);

  auto varying = cross_counts(family_explicit(worked_example_classes(), {{1, 2, 7}, {1, 2, 8}}));
  REQUIRE(std::holds_alternative<NonConstantWitness>(varying));
  CHECK_THROWS_WITH_AS(require_constant_counts(family_explicit(worked_example_classes(), {{1, 2, 7}})),
                       doctest::Contains("not constant"), std::invalid_argument);

  auto aligned = cross_counts(family_aligned(ClassSequence::contiguous({3, 3}), 2));
  CHECK(std::holds_alternative<NonConstantWitness>(aligned));

  // spanning family counts match the composition formula
  std::vector<int> sizes{2, 3, 2};
  auto big = require_constant_counts(family_b_spanning(ClassSequence::contiguous(sizes), {3, 4}));
  for (int c = 3; c <= 4; ++c)
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        if (i == j && sizes[i - 1] < 2) continue;
        CHECK(Integer(static_cast<long>(big.at(i, j, c))) == n_cross(sizes, i, j, c));
      }
}

TEST_CASE("tensor join") {
  // worked example: three constituents, two added edges
  std::vector<Hypergraph> parts{build_hypergraph(3, {{{1, 2}, 1}}),
                                build_hypergraph(4, {{{1, 2, 3}, 2}}),
                                build_hypergraph(3, {{{2, 3}, Rational(1, 2)}})};
  EdgeFamily f = family_explicit(worked_example_classes(), {{1, 2, 7}, {1, 2, 8}});
  WeightTable w(1);
  Hypergraph joined = tensor_join(parts, f, w);
  CHECK(joined.vertex_count() == 10);
  CHECK(joined.edges().size() == 5);
  std::set<VertexSet> sets;
  for (const auto& e : joined.edges()) sets.insert(e.vertices);
  CHECK(sets.count({1, 2, 7}) == 1);
  CHECK(sets.count({1, 2, 8}) == 1);
  CHECK(sets.count({4, 5, 6}) == 1);  // second constituent offset by 3
  CHECK(sets.count({9, 10}) == 1);    // third constituent offset by 7

  // empty family: disjoint union
  EdgeFamily empty = family_explicit(worked_example_classes(), {});
  CHECK(tensor_join(parts, empty, w).edges().size() == 3);

  // two triangles with the full pair family give K6
  std::vector<Hypergraph> tris{triangle(), triangle()};
  Hypergraph k6 = tensor_join(tris, family_b_spanning(ClassSequence::contiguous({3, 3}), {2}), w);
  CHECK(k6.edges().size() == 15);
  RMatrix a = adjacency(k6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(a(i, j) == (i == j ? Rational(0) : Rational(1)));

  CHECK_THROWS_AS(tensor_join({triangle()}, f, w), std::invalid_argument);
}

TEST_CASE("backbone join") {
  WeightTable w(1);
  std::vector<int> sizes{3, 3};
  Hypergraph pair_pattern = build_hypergraph(2, {{{1, 2}, 1}});
  std::vector<EdgeFamily> fams{family_b_spanning(backbone_classes(sizes, {1, 2}), {2})};
  Hypergraph via_backbone = backbone_join(pair_pattern, {triangle(), triangle()}, fams, w);
  Hypergraph direct =
      tensor_join({triangle(), triangle()}, family_b_spanning(ClassSequence::contiguous({3, 3}), {2}), w);
  CHECK(via_backbone == direct);

  // edgeless pattern: disjoint union
  CHECK(backbone_join(edgeless(2), {triangle(), triangle()}, {}, w).edges().size() == 6);

  // path pattern on singleton constituents gives the path graph
  Hypergraph path = build_hypergraph(3, {{{1, 2}, 1}, {{2, 3}, 1}});
  std::vector<Hypergraph> dots(3, edgeless(1));
  std::vector<int> ones{1, 1, 1};
  std::vector<EdgeFamily> path_fams;
  for (const auto& e : path.edges()) path_fams.push_back(family_full(backbone_classes(ones, e.vertices)));
  Hypergraph joined = backbone_join(path, dots, path_fams, w);
  CHECK(joined.edges().size() == 2);
  std::set<VertexSet> sets;
  for (const auto& e : joined.edges()) sets.insert(e.vertices);
  CHECK(sets == std::set<VertexSet>{{1, 2}, {2, 3}});
}

TEST_CASE("flatten and subset split") {
  WeightTable w(1);
  std::vector<int> sizes{2, 2};
  Hypergraph single = build_hypergraph(2, {{{1, 2}, 1}});
  std::vector<EdgeFamily> fams{family_b_spanning(backbone_classes(sizes, {1, 2}), {2})};
  ClassSequence all = ClassSequence::contiguous(sizes);
  EdgeFamily flat = flatten(all, single, fams);
  CHECK(flat.members == fams[0].members);

  auto split = subset_families(flat);
  REQUIRE(split.size() == 1);
  CHECK(split.begin()->first == std::vector<int>{1, 2});

  // split then reunite is the identity on random families over three classes
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    ClassSequence cs = ClassSequence::contiguous({3, 3, 3});
    auto full = family_full(cs);
    std::vector<VertexSet> picked;
    for (const auto& m : full.members)
      if (rng() % 8 == 0) picked.push_back(m);
    EdgeFamily f = family_explicit(cs, picked);
    auto parts = subset_families(f);
    std::set<VertexSet> reunited;
    for (const auto& [key, sub] : parts)
      for (const auto& m : sub.members) reunited.insert(m);
    CHECK(reunited == std::set<VertexSet>(f.members.begin(), f.members.end()));
  }
}

TEST_CASE("decompose") {
  WeightTable w(1);
  std::vector<Hypergraph> tris{triangle(), triangle()};
  Hypergraph k6 = tensor_join(tris, family_b_spanning(ClassSequence::contiguous({3, 3}), {2}), w);
  Decomposition dec = decompose(k6, {{1, 2, 3}, {4, 5, 6}});
  CHECK(dec.parts[0] == triangle());
  CHECK(dec.parts[1] == triangle());
  CHECK(dec.family.members.size() == 9);
  CHECK(tensor_join(dec.parts, dec.family, dec.cross_weights) == k6);

  // single part: the hypergraph itself, no cross members
  Decomposition whole = decompose(k6, {{1, 2, 3, 4, 5, 6}});
  CHECK(whole.family.members.empty());
  CHECK(whole.parts[0] == k6);

  // conflicting cross weights are refused
  Hypergraph bad = build_hypergraph(4, {{{1, 3}, 1}, {{2, 4}, 2}});
  CHECK_THROWS_WITH_AS(decompose(bad, {{1, 2}, {3, 4}}), doctest::Contains("different weights"),
                       std::invalid_argument);
}

TEST_CASE("decompose recovers the worked three-class example") {
  std::vector<Hypergraph> parts{build_hypergraph(3, {{{1, 2}, 1}}),
                                build_hypergraph(4, {{{1, 2, 3}, 2}}),
                                build_hypergraph(3, {{{2, 3}, Rational(1, 2)}})};
  EdgeFamily f = family_explicit(
      ClassSequence{{{1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10}}}, {{1, 2, 7}, {1, 2, 8}});
  WeightTable w(1);
  Hypergraph joined = tensor_join(parts, f, w);
  Decomposition dec = decompose(joined, {{1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10}});
  CHECK(dec.parts[0] == parts[0]);
  CHECK(dec.parts[1] == parts[1]);
  CHECK(dec.parts[2] == parts[2]);
  CHECK(dec.family.members == std::vector<VertexSet>{{1, 2, 7}, {1, 2, 8}});
  CHECK(tensor_join(dec.parts, dec.family, dec.cross_weights) == joined);
}

TEST_CASE("pair join matrices") {
  ClassSequence cs = ClassSequence::contiguous({2, 2});
  std::map<std::pair<int, int>, IMatrix> ms;
  ms[{1, 2}] = IMatrix::Ones(2, 2);
  CHECK(mjoin_family(cs, ms).members.size() == 4);

  ms[{1, 2}] = IMatrix::Identity(2, 2);
  EdgeFamily identity = mjoin_family(cs, ms);
  CHECK(identity.members == family_identity(cs).members);

  // round trip on random 0-1 matrices
  std::mt19937 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    ClassSequence cs3 = ClassSequence::contiguous({2, 3, 2});
    std::map<std::pair<int, int>, IMatrix> input;
    std::vector<std::pair<int, int>> keys{{1, 2}, {1, 3}, {2, 3}};
    std::vector<int> sizes{2, 3, 2};
    for (auto [i, j] : keys) {
      IMatrix m(sizes[i - 1], sizes[j - 1]);
      for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) m(r, c) = static_cast<int>(rng() % 2);
      input[{i, j}] = m;
    }
    auto family = mjoin_family(cs3, input);
    auto back = family_to_mjoin(family);
    for (auto [i, j] : keys) CHECK(back[{i, j}] == input[{i, j}]);
  }

  EdgeFamily triple = family_explicit(ClassSequence::contiguous({2, 2}), {{1, 2, 3}});
  CHECK_THROWS_AS(family_to_mjoin(triple), std::invalid_argument);
}

TEST_CASE("family size guard") {
  CHECK(family_member_limit() == 1000000);
  // 2^24 cross subsets would blow the limit
  CHECK_THROWS_AS(family_full(ClassSequence::contiguous({12, 12})), std::length_error);
  // the override lifts it only when the caller insists
  CHECK_NOTHROW(family_uniform_max(ClassSequence::contiguous({12, 12}), 2, true));
}

TEST_CASE("equivalence of the pattern and flat joins on random instances") {
  std::mt19937 rng(41);
  WeightTable w(1);
  w.set(2, Rational(1, 2));
  w.set(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    std::vector<int> sizes;
    std::vector<Hypergraph> parts;
    for (int i = 0; i < k; ++i) {
      int n = 1 + static_cast<int>(rng() % 3);
      sizes.push_back(n);
      std::vector<Edge> edges;
      if (n >= 2 && rng() % 2) edges.push_back({{1, 2}, 1});
      if (n >= 3 && rng() % 2) edges.push_back({{1, 2, 3}, Rational(1, 3)});
      parts.push_back(build_hypergraph(n, edges));
    }
    // random simple pattern on the class indices
    std::vector<Edge> pattern_edges;
    for (int mask = 1; mask < (1 << k); ++mask) {
      VertexSet s;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) s.push_back(b + 1);
      if (s.size() >= 2 && rng() % 2) pattern_edges.push_back({s, 1});
    }
    Hypergraph pattern = build_hypergraph(k, pattern_edges);

    std::vector<EdgeFamily> fams;
    for (const auto& e : pattern.edges()) {
      ClassSequence cs = backbone_classes(sizes, e.vertices);
      int total = cs.total();
      std::set<int> b;
      for (int c = cs.k(); c <= total; ++c)
        if (rng() % 2) b.insert(c);
      if (b.empty()) b.insert(cs.k());
      auto base = family_b_spanning(cs, b);
      std::vector<VertexSet> picked;
      for (const auto& m : base.members)
        if (rng() % 2) picked.push_back(m);
      fams.push_back(family_explicit(cs, picked));
    }

    Hypergraph via_pattern = backbone_join(pattern, parts, fams, w);
    Hypergraph via_flat = tensor_join(parts, flatten(ClassSequence::contiguous(sizes), pattern, fams), w);
    CHECK(via_pattern == via_flat);
  }
}
