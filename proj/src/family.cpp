#include "tenjoin/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

namespace tenjoin {

ClassSequence ClassSequence::contiguous(const std::vector<int>& sizes) {
  ClassSequence cs;
  int next = 1;
  for (int s : sizes) {
    if (s < 1) throw std::invalid_argument("class sizes must be positive");
    std::vector<Vertex> cls(s);
    for (int i = 0; i < s; ++i) cls[i] = next++;
    cs.classes.push_back(std::move(cls));
  }
  return cs;
}

int ClassSequence::total() const {
  int t = 0;
  for (const auto& c : classes) t += static_cast<int>(c.size());
  return t;
}

std::vector<int> ClassSequence::sizes() const {
  std::vector<int> s;
  for (const auto& c : classes) s.push_back(static_cast<int>(c.size()));
  return s;
}

int ClassSequence::class_of(Vertex v) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (Vertex u : classes[i])
      if (u == v) return static_cast<int>(i);
  return -1;
}

Vertex ClassSequence::aligned_vertex(int class_index, int position) const {
  return classes.at(class_index - 1).at(position - 1);
}

namespace {

void validate_class_sequence(const ClassSequence& cs) {
  std::set<Vertex> seen;
  for (const auto& cls : cs.classes) {
    if (cls.empty()) throw std::invalid_argument("empty class");
    for (Vertex v : cls)
      if (!seen.insert(v).second)
        throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two classes");
  }
}

// Condition (i): a member inside one class indicates nothing to join.
void validate_member(const ClassSequence& cs, const VertexSet& member) {
  if (member.size() < 2) throw std::invalid_argument("family member needs at least two vertices");
  int first_class = -1;
  bool crosses = false;
  for (Vertex v : member) {
    int c = cs.class_of(v);
    if (c < 0) throw std::invalid_argument("family member uses unknown vertex " + std::to_string(v));
    if (first_class < 0)
      first_class = c;
    else if (c != first_class)
      crosses = true;
  }
  if (!crosses) throw std::invalid_argument("family member lies inside a single class");
}

void guard_member_count(std::size_t predicted, bool allow_huge) {
  if (!allow_huge && predicted > family_member_limit())
    throw std::length_error("family would have " + std::to_string(predicted) + " members (limit " +
                            std::to_string(family_member_limit()) + "); pass the huge override to proceed");
}

std::vector<VertexSet> canonical_members(std::vector<VertexSet> members) {
  for (auto& m : members) std::sort(m.begin(), m.end());
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::size_t family_member_limit() {
  static const std::size_t limit = [] {
    if (const char* env = std::getenv("TENJOIN_MAX_FAMILY")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return static_cast<std::size_t>(1000000);
  }();
  return limit;
}

EdgeFamily family_explicit(ClassSequence cs, std::vector<VertexSet> members) {
  validate_class_sequence(cs);
  members = canonical_members(std::move(members));
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 1; j < members[i].size(); ++j)
      if (members[i][j] == members[i][j - 1])
        throw std::invalid_argument("family member has a repeated vertex");
    if (i > 0 && members[i] == members[i - 1]) throw std::invalid_argument("duplicate family member");
    validate_member(cs, members[i]);
  }
  return EdgeFamily{std::move(cs), std::move(members)};
}

namespace {

// Visits every way of picking a nonempty-or-optional subset from each class
// with prescribed total size; used by the exhaustive constructors.
void cross_subsets_of_size(const ClassSequence& cs, int c, const std::function<void(const VertexSet&)>& visit) {
  const int n = cs.total();
  if (c < 2 || c > n) return;
  std::vector<Vertex> all;
  for (const auto& cls : cs.classes) all.insert(all.end(), cls.begin(), cls.end());
  std::sort(all.begin(), all.end());
  VertexSet current;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (static_cast<int>(current.size()) == c) {
      visit(current);
      return;
    }
    std::size_t needed = c - current.size();
    for (std::size_t idx = next; idx + needed <= all.size() + 0u; ++idx) {
      current.push_back(all[idx]);
      rec(idx + 1);
      current.pop_back();
    }
  };
  rec(0);
}

bool inside_one_class(const ClassSequence& cs, const VertexSet& member) {
  int c0 = cs.class_of(member.front());
  for (Vertex v : member)
    if (cs.class_of(v) != c0) return false;
  return true;
}

bool meets_every_class(const ClassSequence& cs, const VertexSet& member) {
  std::vector<bool> hit(cs.classes.size(), false);
  for (Vertex v : member) hit[cs.class_of(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Integer count_uniform_cross(const std::vector<int>& sizes, int m) {
  int n = 0;
  for (int s : sizes) n += s;
  Integer count = binomial(n, m);
  for (int s : sizes) count -= binomial(s, m);
  return count;
}

Integer count_spanning(const std::vector<int>& sizes, int c) {
  // Inclusion-exclusion over missed classes.
  const int k = static_cast<int>(sizes.size());
  int n = 0;
  for (int s : sizes) n += s;
  Integer total = 0;
  for (int mask = 0; mask < (1 << k); ++mask) {
    int missed = 0;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) missed += sizes[i];
    Integer term = binomial(n - missed, c);
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 == 1) term = -term;
    total += term;
  }
  return total;
}

std::size_t checked_size(const Integer& count) {
  if (count < 0) return 0;
  if (!count.fits_ulong_p()) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(count.get_ui());
}

}  // namespace

EdgeFamily family_b_spanning(ClassSequence cs, const std::set<int>& b, bool allow_huge) {
  validate_class_sequence(cs);
  const int k = cs.k();
  const int n = cs.total();
  Integer predicted = 0;
  for (int c : b) {
    if (c < k || c > n)
      throw std::invalid_argument("spanning cardinality " + std::to_string(c) + " outside {" +
                                  std::to_string(k) + ".." + std::to_string(n) + "}");
    predicted += count_spanning(cs.sizes(), c);
  }
  guard_member_count(checked_size(predicted), allow_huge);
  std::vector<VertexSet> members;
  for (int c : b)
    cross_subsets_of_size(cs, c, [&](const VertexSet& s) {
      if (meets_every_class(cs, s)) members.push_back(s);
    });
  return EdgeFamily{std::move(cs), canonical_members(std::move(members))};
}

EdgeFamily family_uniform_max(ClassSequence cs, int m, bool allow_huge) {
  validate_class_sequence(cs);
  if (m < 2 || m > cs.total()) throw std::invalid_argument("uniform cardinality out of range");
  guard_member_count(checked_size(count_uniform_cross(cs.sizes(), m)), allow_huge);
  std::vector<VertexSet> members;
  cross_subsets_of_size(cs, m, [&](const VertexSet& s) {
    if (!inside_one_class(cs, s)) members.push_back(s);
  });
  return EdgeFamily{std::move(cs), canonical_members(std::move(members))};
}

EdgeFamily family_full(ClassSequence cs, bool allow_huge) {
  validate_class_sequence(cs);
  Integer predicted = 0;
  for (int c = 2; c <= cs.total(); ++c) predicted += count_uniform_cross(cs.sizes(), c);
  guard_member_count(checked_size(predicted), allow_huge);
  std::vector<VertexSet> members;
  for (int c = 2; c <= cs.total(); ++c)
    cross_subsets_of_size(cs, c, [&](const VertexSet& s) {
      if (!inside_one_class(cs, s)) members.push_back(s);
    });
  return EdgeFamily{std::move(cs), canonical_members(std::move(members))};
}

namespace {

int require_equal_class_sizes(const ClassSequence& cs) {
  const auto sizes = cs.sizes();
  for (int s : sizes)
    if (s != sizes.front()) throw std::invalid_argument("classes must share one size");
  return sizes.empty() ? 0 : sizes.front();
}

}  // namespace

EdgeFamily family_aligned(ClassSequence cs, int r) {
  validate_class_sequence(cs);
  const int n = require_equal_class_sizes(cs);
  if (r < 1 || r > n) throw std::invalid_argument("aligned cardinality out of range");
  if (cs.k() < 2) throw std::invalid_argument("aligned family needs at least two classes");
  std::vector<VertexSet> members;
  std::vector<int> positions;
  std::function<void(int)> rec = [&](int next) {
    if (static_cast<int>(positions.size()) == r) {
      VertexSet member;
      for (int i = 1; i <= cs.k(); ++i)
        for (int l : positions) member.push_back(cs.aligned_vertex(i, l));
      members.push_back(std::move(member));
      return;
    }
    for (int l = next; l <= n - (r - static_cast<int>(positions.size())) + 1; ++l) {
      positions.push_back(l);
      rec(l + 1);
      positions.pop_back();
    }
  };
  rec(1);
  return EdgeFamily{std::move(cs), canonical_members(std::move(members))};
}

EdgeFamily family_identity(ClassSequence cs) { return family_aligned(std::move(cs), 1); }

EdgeFamily family_backbone(ClassSequence cs, const Hypergraph& pattern, bool allow_huge) {
  validate_class_sequence(cs);
  const int n = require_equal_class_sizes(cs);
  const int k = cs.k();
  if (pattern.vertex_count() != n)
    throw std::invalid_argument("pattern must live on the class positions 1..n");
  const auto prof = pattern.profile();
  if (!pattern.edges().empty() && (k <= 1 || k > prof.corank))
    throw std::invalid_argument("need 1 < k <= pattern co-rank");
  Integer predicted = 0;
  for (const auto& e : pattern.edges()) {
    // surjections from the edge onto [k], by inclusion-exclusion
    const long s = static_cast<long>(e.vertices.size());
    for (int t = 0; t <= k; ++t) {
      Integer power = 1;
      for (long x = 0; x < s; ++x) power *= (k - t);
      Integer term = binomial(k, t) * power;
      predicted += (t % 2 == 1) ? -term : term;
    }
  }
  guard_member_count(checked_size(predicted), allow_huge);

  std::vector<VertexSet> members;
  for (const auto& e : pattern.edges()) {
    const auto& verts = e.vertices;
    std::vector<int> assign(verts.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (idx == verts.size()) {
        std::vector<bool> used(k, false);
        for (int a : assign) used[a] = true;
        if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
        VertexSet member;
        for (std::size_t t = 0; t < verts.size(); ++t)
          member.push_back(cs.aligned_vertex(assign[t] + 1, verts[t]));
        members.push_back(std::move(member));
        return;
      }
      for (int cls = 0; cls < k; ++cls) {
        assign[idx] = cls;
        rec(idx + 1);
      }
    };
    rec(0);
  }
  auto canon = canonical_members(std::move(members));
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return EdgeFamily{std::move(cs), std::move(canon)};
}

EdgeFamily family_minus(const EdgeFamily& f, const EdgeFamily& g) {
  if (!(f.classes == g.classes)) throw std::invalid_argument("families live on different class sequences");
  std::set<VertexSet> fs(f.members.begin(), f.members.end());
  for (const auto& m : g.members)
    if (!fs.erase(m)) throw std::invalid_argument("subtrahend member missing from the family");
  return EdgeFamily{f.classes, std::vector<VertexSet>(fs.begin(), fs.end())};
}

EdgeFamily family_plus(const EdgeFamily& f, const EdgeFamily& g) {
  if (!(f.classes == g.classes)) throw std::invalid_argument("families live on different class sequences");
  std::set<VertexSet> fs(f.members.begin(), f.members.end());
  for (const auto& m : g.members)
    if (!fs.insert(m).second) throw std::invalid_argument("families overlap; disjoint union required");
  return EdgeFamily{f.classes, std::vector<VertexSet>(fs.begin(), fs.end())};
}

long long CrossCounts::at(int i, int j, int c) const {
  auto it = table.find({i, j, c});
  return it == table.end() ? 0 : it->second;
}

std::set<int> CrossCounts::cardinalities() const {
  std::set<int> out;
  for (const auto& [key, count] : table)
    if (count != 0) out.insert(std::get<2>(key));
  return out;
}

std::variant<CrossCounts, NonConstantWitness> cross_counts(const EdgeFamily& f) {
  const int k = f.classes.k();
  CrossCounts result;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      const auto& ci = f.classes.classes[i - 1];
      const auto& cj = f.classes.classes[j - 1];
      bool have_reference = false;
      Vertex ref_p = 0, ref_q = 0;
      std::map<int, long long> reference;
      for (Vertex p : ci) {
        for (Vertex q : cj) {
          if (i == j && p >= q) continue;
          std::map<int, long long> counts;
          for (const auto& m : f.members)
            if (std::binary_search(m.begin(), m.end(), p) && std::binary_search(m.begin(), m.end(), q))
              ++counts[static_cast<int>(m.size())];
          if (!have_reference) {
            reference = counts;
            ref_p = p;
            ref_q = q;
            have_reference = true;
          } else if (counts != reference) {
            int c = 0;
            for (const auto& [card, cnt] : counts)
              if (reference.count(card) == 0 || reference.at(card) != cnt) c = card;
            if (c == 0)
              for (const auto& [card, cnt] : reference)
                if (counts.count(card) == 0) c = card;
            long long c1 = reference.count(c) ? reference.at(c) : 0;
            long long c2 = counts.count(c) ? counts.at(c) : 0;
            return NonConstantWitness{i, j, c, ref_p, ref_q, c1, p, q, c2};
          }
        }
      }
      for (const auto& [card, cnt] : reference)
        if (cnt != 0) result.table[{i, j, card}] = cnt;
    }
  }
  return result;
}

CrossCounts require_constant_counts(const EdgeFamily& f) {
  auto res = cross_counts(f);
  if (auto* witness = std::get_if<NonConstantWitness>(&res))
    throw std::invalid_argument(
        "family pair counts are not constant: classes (" + std::to_string(witness->i) + "," +
        std::to_string(witness->j) + ") cardinality " + std::to_string(witness->c) + ": pair (" +
        std::to_string(witness->p1) + "," + std::to_string(witness->q1) + ") lies in " +
        std::to_string(witness->count1) + " members but (" + std::to_string(witness->p2) + "," +
        std::to_string(witness->q2) + ") in " + std::to_string(witness->count2));
  return std::get<CrossCounts>(res);
}

namespace {

// Maps a member from class coordinates onto the offset union by position.
VertexSet remap_member(const ClassSequence& cs, const std::vector<int>& offsets, const VertexSet& member) {
  VertexSet out;
  out.reserve(member.size());
  for (Vertex v : member) {
    int cls = cs.class_of(v);
    const auto& class_list = cs.classes[cls];
    int pos = static_cast<int>(std::find(class_list.begin(), class_list.end(), v) - class_list.begin());
    out.push_back(offsets[cls] + pos + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Hypergraph tensor_join(const std::vector<Hypergraph>& parts, const EdgeFamily& f, const WeightTable& w) {
  if (static_cast<int>(parts.size()) != f.classes.k())
    throw std::invalid_argument("one constituent per class required");
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i].vertex_count() != static_cast<int>(f.classes.classes[i].size()))
      throw std::invalid_argument("class " + std::to_string(i + 1) + " size differs from its constituent");
  auto [base, offsets] = disjoint_union(parts);
  std::vector<Edge> edges = base.edges();
  for (const auto& m : f.members) {
    VertexSet mapped = remap_member(f.classes, offsets, m);
    Rational weight = w.at(static_cast<int>(mapped.size()));
    edges.push_back({std::move(mapped), weight});
  }
  return build_hypergraph(base.vertex_count(), std::move(edges));
}

ClassSequence backbone_classes(const std::vector<int>& sizes, const VertexSet& pattern_edge) {
  std::vector<int> offsets;
  int total = 0;
  for (int s : sizes) {
    offsets.push_back(total);
    total += s;
  }
  ClassSequence cs;
  for (Vertex cls : pattern_edge) {
    if (cls < 1 || cls > static_cast<int>(sizes.size()))
      throw std::invalid_argument("pattern edge uses unknown class index");
    std::vector<Vertex> members(sizes[cls - 1]);
    for (int i = 0; i < sizes[cls - 1]; ++i) members[i] = offsets[cls - 1] + i + 1;
    cs.classes.push_back(std::move(members));
  }
  return cs;
}

Hypergraph backbone_join(const Hypergraph& pattern, const std::vector<Hypergraph>& parts,
                         const std::vector<EdgeFamily>& families, const WeightTable& w) {
  if (pattern.vertex_count() != static_cast<int>(parts.size()))
    throw std::invalid_argument("pattern must have one vertex per constituent");
  if (families.size() != pattern.edges().size())
    throw std::invalid_argument("one family per pattern edge required");
  std::vector<int> sizes;
  for (const auto& p : parts) sizes.push_back(p.vertex_count());
  auto [base, offsets] = disjoint_union(parts);
  std::vector<Edge> edges = base.edges();
  for (std::size_t t = 0; t < families.size(); ++t) {
    const auto& e = pattern.edges()[t].vertices;
    ClassSequence expected = backbone_classes(sizes, e);
    if (!(families[t].classes == expected))
      throw std::invalid_argument("family " + std::to_string(t + 1) +
                                  " does not sit on the classes of its pattern edge");
    for (const auto& m : families[t].members) {
      if (!meets_every_class(families[t].classes, m))
        throw std::invalid_argument("family member misses a class of its pattern edge");
      edges.push_back({m, w.at(static_cast<int>(m.size()))});
    }
  }
  return build_hypergraph(base.vertex_count(), std::move(edges));
}

EdgeFamily flatten(const ClassSequence& all, const Hypergraph& pattern,
                   const std::vector<EdgeFamily>& families) {
  if (families.size() != pattern.edges().size())
    throw std::invalid_argument("one family per pattern edge required");
  std::set<VertexSet> members;
  for (const auto& f : families)
    for (const auto& m : f.members) members.insert(m);
  return family_explicit(all, std::vector<VertexSet>(members.begin(), members.end()));
}

std::map<std::vector<int>, EdgeFamily> subset_families(const EdgeFamily& f) {
  std::map<std::vector<int>, std::vector<VertexSet>> grouped;
  for (const auto& m : f.members) {
    std::set<int> touched;
    for (Vertex v : m) touched.insert(f.classes.class_of(v) + 1);
    grouped[std::vector<int>(touched.begin(), touched.end())].push_back(m);
  }
  std::map<std::vector<int>, EdgeFamily> out;
  for (auto& [key, members] : grouped) {
    ClassSequence sub;
    for (int idx : key) sub.classes.push_back(f.classes.classes[idx - 1]);
    out.emplace(key, family_explicit(std::move(sub), std::move(members)));
  }
  return out;
}

Decomposition decompose(const Hypergraph& h, const std::vector<VertexSet>& partition) {
  std::vector<bool> covered(h.vertex_count() + 1, false);
  for (const auto& part : partition) {
    if (part.empty()) throw std::invalid_argument("empty partition class");
    for (Vertex v : part) {
      if (v < 1 || v > h.vertex_count()) throw std::invalid_argument("partition vertex out of range");
      if (covered[v]) throw std::invalid_argument("partition classes overlap");
      covered[v] = true;
    }
  }
  for (Vertex v = 1; v <= h.vertex_count(); ++v)
    if (!covered[v]) throw std::invalid_argument("partition misses vertex " + std::to_string(v));

  ClassSequence cs;
  for (const auto& part : partition) {
    VertexSet sorted = part;
    std::sort(sorted.begin(), sorted.end());
    cs.classes.push_back(sorted);
  }

  Decomposition out;
  std::map<Vertex, std::pair<int, int>> place;  // vertex -> (class, position)
  std::vector<int> offsets;
  int total = 0;
  for (std::size_t i = 0; i < cs.classes.size(); ++i) {
    offsets.push_back(total);
    total += static_cast<int>(cs.classes[i].size());
    for (std::size_t pos = 0; pos < cs.classes[i].size(); ++pos)
      place[cs.classes[i][pos]] = {static_cast<int>(i), static_cast<int>(pos)};
  }
  out.relabeling.resize(h.vertex_count());
  for (const auto& [v, loc] : place) out.relabeling[offsets[loc.first] + loc.second] = v;

  std::vector<std::vector<Edge>> part_edges(partition.size());
  std::vector<VertexSet> members;
  WeightTable cross(0);
  std::map<int, Rational> seen_weight;
  std::set<VertexSet> seen_cross;
  for (const auto& e : h.edges()) {
    int cls = place.at(e.vertices.front()).first;
    bool inside = std::all_of(e.vertices.begin(), e.vertices.end(),
                              [&](Vertex v) { return place.at(v).first == cls; });
    if (inside) {
      Edge local = e;
      for (auto& v : local.vertices) v = place.at(v).second + 1;
      std::sort(local.vertices.begin(), local.vertices.end());
      part_edges[cls].push_back(std::move(local));
    } else {
      if (!seen_cross.insert(e.vertices).second)
        throw std::invalid_argument("parallel cross edges cannot be expressed by a single family");
      int c = static_cast<int>(e.vertices.size());
      auto it = seen_weight.find(c);
      if (it == seen_weight.end()) {
        seen_weight.emplace(c, e.weight);
        cross.set(c, e.weight);
      } else if (it->second != e.weight) {
        throw std::invalid_argument("cross edges of cardinality " + std::to_string(c) +
                                    " carry different weights; one weight per cardinality required");
      }
      members.push_back(e.vertices);
    }
  }
  for (std::size_t i = 0; i < partition.size(); ++i)
    out.parts.push_back(build_hypergraph(static_cast<int>(partition[i].size()), std::move(part_edges[i])));
  out.family = family_explicit(cs, std::move(members));
  out.cross_weights = cross;
  return out;
}

EdgeFamily mjoin_family(const ClassSequence& cs, const std::map<std::pair<int, int>, IMatrix>& ms) {
  validate_class_sequence(cs);
  std::vector<VertexSet> members;
  for (const auto& [key, m] : ms) {
    auto [i, j] = key;
    if (i < 1 || j <= i || j > cs.k()) throw std::invalid_argument("matrix key must satisfy 1 <= i < j <= k");
    if (m.rows() != static_cast<Index>(cs.classes[i - 1].size()) ||
        m.cols() != static_cast<Index>(cs.classes[j - 1].size()))
      throw std::invalid_argument("matrix size differs from its class pair");
    for (Index r = 0; r < m.rows(); ++r)
      for (Index t = 0; t < m.cols(); ++t) {
        if (m(r, t) != 0 && m(r, t) != 1) throw std::invalid_argument("join matrices must be 0-1");
        if (m(r, t) == 1)
          members.push_back({cs.aligned_vertex(i, static_cast<int>(r) + 1),
                             cs.aligned_vertex(j, static_cast<int>(t) + 1)});
      }
  }
  return family_explicit(cs, std::move(members));
}

std::map<std::pair<int, int>, IMatrix> family_to_mjoin(const EdgeFamily& f) {
  std::map<std::pair<int, int>, IMatrix> out;
  for (int i = 1; i < f.classes.k(); ++i)
    for (int j = i + 1; j <= f.classes.k(); ++j)
      out[{i, j}] = IMatrix::Zero(f.classes.classes[i - 1].size(), f.classes.classes[j - 1].size());
  for (const auto& m : f.members) {
    if (m.size() != 2) throw std::invalid_argument("pair-join conversion requires members of cardinality 2");
    int ci = f.classes.class_of(m[0]);
    int cj = f.classes.class_of(m[1]);
    const auto& list_i = f.classes.classes[ci];
    const auto& list_j = f.classes.classes[cj];
    int pi = static_cast<int>(std::find(list_i.begin(), list_i.end(), m[0]) - list_i.begin());
    int pj = static_cast<int>(std::find(list_j.begin(), list_j.end(), m[1]) - list_j.begin());
    if (ci < cj)
      out[{ci + 1, cj + 1}](pi, pj) = 1;
    else
      out[{cj + 1, ci + 1}](pj, pi) = 1;
  }
  return out;
}

}  // namespace tenjoin
