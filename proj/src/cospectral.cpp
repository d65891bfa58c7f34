#include "tenjoin/cospectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "tenjoin/eigensolve.hpp"
#include "tenjoin/matrices.hpp"

namespace tenjoin {

bool CanonicalForm::operator<(const CanonicalForm& other) const {
  return std::lexicographical_compare(
      edges.begin(), edges.end(), other.edges.begin(), other.edges.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

std::string CanonicalForm::str() const {
  std::ostringstream os;
  for (const auto& [verts, weight] : edges) {
    os << "{";
    for (std::size_t i = 0; i < verts.size(); ++i) os << (i ? "," : "") << verts[i];
    os << "}:" << to_string(weight) << ";";
  }
  return os.str();
}

CanonicalForm canonical_form(const Hypergraph& h) {
  const int n = h.vertex_count();
  if (n > 8) throw std::invalid_argument("canonical form by permutation search supports n <= 8");
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::optional<CanonicalForm> best;
  do {
    CanonicalForm candidate;
    candidate.edges.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
      VertexSet mapped;
      mapped.reserve(e.vertices.size());
      for (Vertex v : e.vertices) mapped.push_back(perm[v - 1]);
      std::sort(mapped.begin(), mapped.end());
      candidate.edges.push_back({std::move(mapped), e.weight});
    }
    std::sort(candidate.edges.begin(), candidate.edges.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    if (!best || candidate < *best) best = std::move(candidate);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (!best) return CanonicalForm{};
  return *best;
}

namespace {

void subsets_of_size(int n, int r, std::vector<VertexSet>& out) {
  VertexSet current;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(current.size()) == r) {
      out.push_back(current);
      return;
    }
    for (int v = next; v <= n - (r - static_cast<int>(current.size())) + 1; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(1);
  return;
}

std::vector<VertexSet> candidate_edges(int n, const std::set<int>& cardinalities) {
  std::vector<VertexSet> out;
  for (int c : cardinalities) {
    if (c < 1 || c > n) continue;
    subsets_of_size(n, c, out);
  }
  return out;
}

Hypergraph from_edge_subset(int n, const std::vector<VertexSet>& candidates, const std::vector<int>& chosen) {
  std::vector<Edge> edges;
  edges.reserve(chosen.size());
  for (int idx : chosen) edges.push_back({candidates[idx], Rational(1)});
  return build_hypergraph(n, std::move(edges));
}

// Enumerates labeled edge subsets with all degrees equal to r, pruning on the
// remaining degree capacity of the lowest-indexed deficient vertex.
void enumerate_regular(int n, const std::vector<VertexSet>& candidates, int r,
                       const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> degree(n + 1, 0);
  std::vector<int> remaining(n + 1, 0);  // candidates not yet decided that touch v
  for (const auto& e : candidates)
    for (Vertex v : e) ++remaining[v];
  std::vector<int> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == candidates.size()) {
      for (int v = 1; v <= n; ++v)
        if (degree[v] != r) return;
      visit(chosen);
      return;
    }
    for (int v = 1; v <= n; ++v)
      if (degree[v] + remaining[v] < r) return;  // cannot reach r any more
    const auto& e = candidates[idx];
    for (Vertex v : e) --remaining[v];
    bool fits = true;
    for (Vertex v : e)
      if (degree[v] + 1 > r) fits = false;
    if (fits) {
      for (Vertex v : e) ++degree[v];
      chosen.push_back(static_cast<int>(idx));
      rec(idx + 1);
      chosen.pop_back();
      for (Vertex v : e) --degree[v];
    }
    rec(idx + 1);
    for (Vertex v : e) ++remaining[v];
  };
  rec(0);
}

}  // namespace

std::vector<Hypergraph> enumerate_hypergraphs(int n, const std::set<int>& cardinalities,
                                              std::optional<int> uniform_m, bool regular_only) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumeration supports 1 <= n <= 8");
  std::set<int> cards = cardinalities;
  if (uniform_m) cards = {*uniform_m};
  auto candidates = candidate_edges(n, cards);

  std::map<CanonicalForm, Hypergraph> forms;
  auto consider = [&](const Hypergraph& h) {
    if (uniform_m && !h.edges().empty() && h.uniform_cardinality() != *uniform_m) return;
    forms.try_emplace(canonical_form(h), h);
  };

  if (regular_only) {
    std::vector<int> touch(n + 1, 0);
    for (const auto& e : candidates)
      for (Vertex v : e) ++touch[v];
    int rmax = *std::max_element(touch.begin() + 1, touch.end());
    for (int r = 0; r <= rmax; ++r)
      enumerate_regular(n, candidates, r,
                        [&](const std::vector<int>& chosen) { consider(from_edge_subset(n, candidates, chosen)); });
  } else {
    if (candidates.size() > 22)
      throw std::length_error("exhaustive enumeration over " + std::to_string(candidates.size()) +
                              " candidate edges is not feasible");
    const std::size_t total = std::size_t(1) << candidates.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      std::vector<int> chosen;
      for (std::size_t b = 0; b < candidates.size(); ++b)
        if (mask & (std::size_t(1) << b)) chosen.push_back(static_cast<int>(b));
      consider(from_edge_subset(n, candidates, chosen));
    }
  }
  std::vector<Hypergraph> out;
  out.reserve(forms.size());
  for (auto& [form, h] : forms) out.push_back(std::move(h));
  return out;
}

namespace {

std::string poly_key(const RationalPoly& p) {
  std::ostringstream os;
  for (const auto& c : p.coeffs()) os << to_string(c) << ",";
  return os.str();
}

}  // namespace

std::vector<std::pair<Hypergraph, Hypergraph>> find_cospectral_pairs(const std::vector<Hypergraph>& hs) {
  // exact bucketing by the adjacency charpoly, then isomorphism rejection
  std::map<std::string, std::vector<std::size_t>> exact;
  for (std::size_t i = 0; i < hs.size(); ++i)
    exact[poly_key(charpoly_exact(adjacency(hs[i])))].push_back(i);

  std::vector<std::pair<Hypergraph, Hypergraph>> out;
  for (const auto& [pkey, members] : exact) {
    if (members.size() < 2) continue;
    std::map<CanonicalForm, std::size_t> forms;
    for (std::size_t idx : members) forms.try_emplace(canonical_form(hs[idx]), idx);
    if (forms.size() < 2) continue;
    std::vector<std::size_t> reps;
    for (const auto& [form, idx] : forms) reps.push_back(idx);
    for (std::size_t a = 0; a < reps.size(); ++a)
      for (std::size_t b = a + 1; b < reps.size(); ++b) out.push_back({hs[reps[a]], hs[reps[b]]});
  }
  return out;
}

CospectralReport verify_cospectral(const Hypergraph& a, const Hypergraph& b) {
  if (a.vertex_count() != b.vertex_count())
    throw std::invalid_argument("cospectrality comparison requires equal vertex counts");
  CospectralReport rep;
  rep.adjacency_poly_1 = charpoly_exact(adjacency(a));
  rep.adjacency_poly_2 = charpoly_exact(adjacency(b));
  rep.adjacency = rep.adjacency_poly_1 == rep.adjacency_poly_2;
  rep.laplacian_poly_1 = charpoly_exact(laplacian(a));
  rep.laplacian_poly_2 = charpoly_exact(laplacian(b));
  rep.laplacian = rep.laplacian_poly_1 == rep.laplacian_poly_2;
  try {
    rep.normalized_poly_1 = charpoly_exact(normalized_similar(a));
    rep.normalized_poly_2 = charpoly_exact(normalized_similar(b));
    rep.normalized = rep.normalized_poly_1 == rep.normalized_poly_2;
  } catch (const std::invalid_argument&) {
    rep.normalized = std::nullopt;  // isolated vertex: stated refusal
  }
  return rep;
}

std::pair<Hypergraph, Hypergraph> cospectral_join_family(
    const std::vector<std::pair<Hypergraph, Hypergraph>>& slots, const EdgeFamily& f, const WeightTable& w) {
  if (static_cast<int>(slots.size()) != f.classes.k())
    throw std::invalid_argument("one slot per class required");
  std::vector<Hypergraph> firsts, seconds;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& [g, gp] = slots[i];
    if (g.vertex_count() != gp.vertex_count())
      throw std::invalid_argument("slot " + std::to_string(i + 1) + " mixes vertex counts");
    auto r1 = g.regular_valency();
    auto r2 = gp.regular_valency();
    if (!r1 || !r2) throw std::invalid_argument("slot " + std::to_string(i + 1) + " is not regular");
    if (*r1 != *r2) throw std::invalid_argument("slot " + std::to_string(i + 1) + " mixes valencies");
    if (charpoly_exact(adjacency(g)) != charpoly_exact(adjacency(gp)))
      throw std::invalid_argument("slot " + std::to_string(i + 1) + " is not adjacency-cospectral");
    firsts.push_back(g);
    seconds.push_back(gp);
  }
  require_constant_counts(f);
  return {tensor_join(firsts, f, w), tensor_join(seconds, f, w)};
}

std::pair<Hypergraph, Hypergraph> cospectral_backbone_family(
    const Hypergraph& pattern, const std::vector<std::pair<Hypergraph, Hypergraph>>& slots,
    const std::vector<EdgeFamily>& families, const WeightTable& w) {
  if (pattern.vertex_count() != static_cast<int>(slots.size()))
    throw std::invalid_argument("pattern must have one vertex per slot");
  std::vector<Hypergraph> firsts, seconds;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& [g, gp] = slots[i];
    if (g.vertex_count() != gp.vertex_count() || !g.regular_valency() || !gp.regular_valency() ||
        *g.regular_valency() != *gp.regular_valency() ||
        charpoly_exact(adjacency(g)) != charpoly_exact(adjacency(gp)))
      throw std::invalid_argument("slot " + std::to_string(i + 1) +
                                  " must pair regular adjacency-cospectral hypergraphs of one valency");
    firsts.push_back(g);
    seconds.push_back(gp);
  }
  for (const auto& f : families) require_constant_counts(f);
  return {backbone_join(pattern, firsts, families, w), backbone_join(pattern, seconds, families, w)};
}

std::string SearchReport::summary() const {
  std::ostringstream os;
  for (const auto& s : exhausted) {
    os << "searched n=" << s.scale.n << " m=" << s.scale.m << " ("
       << (s.mode == SearchMode::Exhaustive ? "exhaustive" : "matrix-equal stream")
       << "): no cospectral regular pair";
    if (s.mode == SearchMode::MatrixEqual) os << " sharing an adjacency matrix";
    os << "\n";
  }
  if (found_at)
    os << "found " << pairs.size() << " cospectral regular pair(s) at n=" << found_at->scale.n
       << " m=" << found_at->scale.m << "\n";
  else
    os << "no cospectral regular pair up to the last scale\n";
  return os.str();
}

std::vector<SearchScale> default_search_ladder() {
  std::vector<SearchScale> ladder;
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m < n; ++m) ladder.push_back({n, m});
  ladder.push_back({7, 2});
  ladder.push_back({7, 3});
  return ladder;
}

namespace {

// Isomorphism invariant: the sorted multiset of per-edge sorted profiles of
// intersection sizes with the other edges. Distinct values certify
// non-isomorphic hypergraphs; equal values decide nothing.
std::vector<std::vector<int>> intersection_signature(const std::vector<VertexSet>& edges) {
  std::vector<std::vector<int>> profile;
  profile.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<int> row;
    row.reserve(edges.size());
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      std::vector<int> inter;
      std::set_intersection(edges[i].begin(), edges[i].end(), edges[j].begin(), edges[j].end(),
                            std::back_inserter(inter));
      row.push_back(static_cast<int>(inter.size()));
    }
    std::sort(row.begin(), row.end());
    profile.push_back(std::move(row));
  }
  std::sort(profile.begin(), profile.end());
  return profile;
}

// Streams the labeled m-uniform regular hypergraphs on n vertices in order
// of increasing valency and reports the first two that share an adjacency
// matrix without being isomorphic. Same-matrix candidates with equal
// signatures are resolved by canonical forms only within a fixed budget.
std::optional<std::pair<Hypergraph, Hypergraph>> matrix_equal_scale(int n, int m) {
  auto candidates = candidate_edges(n, {m});
  const int pair_count = n * (n - 1) / 2;
  int max_degree = static_cast<int>(binomial(n - 1, m - 1).get_ui());
  std::optional<std::pair<Hypergraph, Hypergraph>> found;
  long long leaf_budget = 50000000;

  for (int r = 1; r <= max_degree && !found; ++r) {
    if ((static_cast<long>(n) * r) % m != 0) continue;
    std::unordered_map<std::string, std::vector<int>> first_by_matrix;
    int canon_budget = 512;
    enumerate_regular(n, candidates, r, [&](const std::vector<int>& chosen) {
      if (found) return;
      if (--leaf_budget < 0)
        throw std::length_error("scale n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                " exceeds the streaming search budget");
      std::string key(pair_count, '\0');
      for (int idx : chosen) {
        const auto& e = candidates[idx];
        for (std::size_t a = 0; a < e.size(); ++a)
          for (std::size_t b = a + 1; b < e.size(); ++b) {
            int i = e[a] - 1, j = e[b] - 1;
            ++key[i * (2 * n - i - 1) / 2 + (j - i - 1)];
          }
      }
      auto [it, inserted] = first_by_matrix.try_emplace(std::move(key), chosen);
      if (inserted) return;
      std::vector<VertexSet> ea, eb;
      for (int idx : it->second) ea.push_back(candidates[idx]);
      for (int idx : chosen) eb.push_back(candidates[idx]);
      bool distinct = intersection_signature(ea) != intersection_signature(eb);
      if (!distinct && canon_budget > 0) {
        --canon_budget;
        distinct = !(canonical_form(from_edge_subset(n, candidates, it->second)) ==
                     canonical_form(from_edge_subset(n, candidates, chosen)));
      }
      if (distinct)
        found = {from_edge_subset(n, candidates, it->second), from_edge_subset(n, candidates, chosen)};
    });
  }
  return found;
}

}  // namespace

SearchReport cospectral_search(const std::vector<SearchScale>& ladder) {
  SearchReport report;
  for (const auto& scale : ladder) {
    bool exhaustive = scale.n <= 6 || binomial(scale.n, scale.m) <= 21;
    if (exhaustive) {
      auto hs = enumerate_hypergraphs(scale.n, {scale.m}, scale.m, true);
      auto pairs = find_cospectral_pairs(hs);
      if (!pairs.empty()) {
        report.found_at = ScaleOutcome{scale, SearchMode::Exhaustive};
        report.pairs = std::move(pairs);
        return report;
      }
      report.exhausted.push_back({scale, SearchMode::Exhaustive});
    } else {
      auto pair = matrix_equal_scale(scale.n, scale.m);
      if (pair) {
        report.found_at = ScaleOutcome{scale, SearchMode::MatrixEqual};
        report.pairs.push_back(*pair);
        return report;
      }
      report.exhausted.push_back({scale, SearchMode::MatrixEqual});
    }
  }
  return report;
}

}  // namespace tenjoin
