#include "tenjoin/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "tenjoin/eigensolve.hpp"

namespace tenjoin {

RationalPoly CharPolyFactored::expanded() const {
  RationalPoly out = RationalPoly::constant(1);
  for (const auto& [root, mult] : linear) out = out * RationalPoly::linear_root(root).pow(mult);
  for (const auto& [factor, mult] : residual) out = out * factor.pow(mult);
  out = out * charpoly_exact(quotient);
  return out;
}

int CharPolyFactored::order() const {
  int total = static_cast<int>(quotient.rows());
  for (const auto& [root, mult] : linear) total += mult;
  for (const auto& [factor, mult] : residual) total += mult * factor.degree();
  return total;
}

std::vector<double> CharPolyFactored::spectrum(double tol) const {
  int residual_degree = 0;
  for (const auto& [factor, mult] : residual) residual_degree += mult * factor.degree();
  if (static_cast<int>(residual_roots.size()) != residual_degree)
    throw std::logic_error("floating roots of the residual factors are unavailable");
  if (quotient_sym.rows() != quotient.rows())
    throw std::logic_error("no symmetric floating form of the quotient is available");
  std::vector<double> out = residual_roots;
  for (const auto& [root, mult] : linear)
    for (int i = 0; i < mult; ++i) out.push_back(to_double(root));
  if (quotient_sym.rows() > 0) {
    DVector qs = jacobi_eigenvalues(quotient_sym, tol);
    out.insert(out.end(), qs.data(), qs.data() + qs.size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

ConstituentSpec make_constituent(const Hypergraph& g, double tol) {
  if (g.vertex_count() < 1) throw std::invalid_argument("constituent needs at least one vertex");
  auto r = g.regular_valency();
  if (!r) throw std::invalid_argument("constituent is not regular");
  ConstituentSpec spec;
  spec.n = g.vertex_count();
  spec.valency = *r;
  RMatrix a = adjacency(g);
  spec.adj_charpoly = charpoly_exact(a);
  spec.adj_spectrum = sorted_spectrum(to_double(a), tol);
  return spec;
}

Rational weighted_pair_sum(const CrossCounts& counts, const WeightTable& w, int i, int j) {
  if (i > j) std::swap(i, j);
  Rational sum = 0;
  for (const auto& [key, count] : counts.table) {
    if (std::get<0>(key) != i || std::get<1>(key) != j) continue;
    int c = std::get<2>(key);
    sum += w.at(c) * Rational(static_cast<long>(count)) / Rational(static_cast<long>(c) - 1);
  }
  return sum;
}

namespace {

std::vector<double> remove_closest(std::vector<double> values, double target) {
  if (values.empty()) throw std::logic_error("cannot remove a value from an empty spectrum");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i] - target) < std::abs(values[best] - target)) best = i;
  values.erase(values.begin() + static_cast<long>(best));
  return values;
}

struct TableValues {
  Rational alpha, beta, gamma;
};

TableValues table_values(MatrixKind kind, const Rational& s_ii, const Rational& z_i) {
  switch (kind) {
    case MatrixKind::Adjacency: return {Rational(1), -s_ii, s_ii};
    case MatrixKind::Laplacian: return {Rational(-1), z_i + s_ii, -s_ii};
    case MatrixKind::NormalizedLaplacian: {
      if (z_i <= 0)
        throw std::invalid_argument("normalized Laplacian needs positive class valencies");
      return {Rational(-1) / z_i, 1 + s_ii / z_i, -s_ii / z_i};
    }
  }
  throw std::logic_error("unknown matrix kind");
}

}  // namespace

Rational join_class_valency(const JoinSpec& spec, int i) {
  const int k = static_cast<int>(spec.parts.size());
  Rational z = spec.parts[i - 1].valency;
  z += Rational(spec.parts[i - 1].n - 1) * weighted_pair_sum(spec.counts, spec.weights, i, i);
  for (int j = 1; j <= k; ++j)
    if (j != i) z += Rational(spec.parts[j - 1].n) * weighted_pair_sum(spec.counts, spec.weights, i, j);
  return z;
}

CharPolyFactored block_spectrum(const std::vector<BlockInput>& blocks, const RMatrix& rho) {
  const int k = static_cast<int>(blocks.size());
  if (k == 0) throw std::invalid_argument("at least one block required");
  if (rho.rows() != k || rho.cols() != k) throw std::invalid_argument("rho must be k x k");

  CharPolyFactored out;
  bool have_floats = true;
  for (int i = 0; i < k; ++i) {
    const auto& b = blocks[i];
    if (b.charpoly.degree() < 1) throw std::invalid_argument("each block needs order >= 1");
    RationalPoly rest;
    try {
      rest = b.charpoly.divide_exact(RationalPoly::linear_root(b.row_sum));
    } catch (const std::domain_error&) {
      throw std::invalid_argument("row sum of block " + std::to_string(i + 1) +
                                  " is not an eigenvalue of the block");
    }
    if (rest.degree() > 0) out.residual.push_back({rest, 1});
    if (b.spectrum.empty()) {
      have_floats = false;
    } else {
      if (static_cast<int>(b.spectrum.size()) != b.charpoly.degree())
        throw std::invalid_argument("block spectrum length differs from its order");
      auto remaining = remove_closest(b.spectrum, to_double(b.row_sum));
      out.residual_roots.insert(out.residual_roots.end(), remaining.begin(), remaining.end());
    }
  }
  if (!have_floats) out.residual_roots.clear();

  out.quotient = RMatrix::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    out.quotient(i, i) = blocks[i].row_sum;
    for (int j = 0; j < k; ++j)
      if (i != j) out.quotient(i, j) = rho(i, j) * Rational(blocks[j].charpoly.degree());
  }
  if (rho.transpose() == rho) {
    out.quotient_sym = DMatrix::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      out.quotient_sym(i, i) = to_double(blocks[i].row_sum);
      for (int j = 0; j < k; ++j)
        if (i != j)
          out.quotient_sym(i, j) = to_double(rho(i, j)) *
                                   std::sqrt(double(blocks[i].charpoly.degree()) *
                                             double(blocks[j].charpoly.degree()));
    }
  }
  return out;
}

CharPolyFactored join_charpoly(const JoinSpec& spec) {
  const int k = static_cast<int>(spec.parts.size());
  if (k == 0) throw std::invalid_argument("join of zero constituents");
  for (const auto& [key, count] : spec.counts.table) {
    auto [i, j, c] = key;
    if (i < 1 || i > j || j > k || c < 2) throw std::invalid_argument("malformed cross count key");
    if (count < 0) throw std::invalid_argument("negative cross count");
  }

  std::vector<Rational> z(k + 1);
  for (int i = 1; i <= k; ++i) z[i] = join_class_valency(spec, i);

  CharPolyFactored out;
  std::vector<TableValues> tv(k + 1);
  for (int i = 1; i <= k; ++i) {
    Rational s_ii = spec.parts[i - 1].n >= 2 ? weighted_pair_sum(spec.counts, spec.weights, i, i) : Rational(0);
    tv[i] = table_values(spec.kind, s_ii, z[i]);
    const auto& part = spec.parts[i - 1];
    RationalPoly q = part.adj_charpoly.divide_exact(RationalPoly::linear_root(part.valency));
    if (q.degree() > 0) out.residual.push_back({q.affine_image(tv[i].alpha, tv[i].beta), 1});
    auto rest = remove_closest(part.adj_spectrum, to_double(part.valency));
    double af = to_double(tv[i].alpha), bf = to_double(tv[i].beta);
    for (double lambda : rest) out.residual_roots.push_back(af * lambda + bf);
  }

  out.quotient = RMatrix::Zero(k, k);
  out.quotient_sym = DMatrix::Zero(k, k);
  for (int i = 1; i <= k; ++i) {
    const auto& part = spec.parts[i - 1];
    Rational diag = part.valency * tv[i].alpha + tv[i].beta + Rational(part.n) * tv[i].gamma;
    out.quotient(i - 1, i - 1) = diag;
    out.quotient_sym(i - 1, i - 1) = to_double(diag);
    for (int j = 1; j <= k; ++j) {
      if (i == j) continue;
      Rational s = weighted_pair_sum(spec.counts, spec.weights, i, j);
      double scale = std::sqrt(double(part.n) * double(spec.parts[j - 1].n));
      switch (spec.kind) {
        case MatrixKind::Adjacency:
          out.quotient(i - 1, j - 1) = Rational(spec.parts[j - 1].n) * s;
          out.quotient_sym(i - 1, j - 1) = scale * to_double(s);
          break;
        case MatrixKind::Laplacian:
          out.quotient(i - 1, j - 1) = -Rational(spec.parts[j - 1].n) * s;
          out.quotient_sym(i - 1, j - 1) = -scale * to_double(s);
          break;
        case MatrixKind::NormalizedLaplacian:
          // row-scaled similar form: exact entries -n_j s / z_i share the
          // spectrum of the true quotient with entries -n_j s / sqrt(z_i z_j)
          out.quotient(i - 1, j - 1) = -Rational(spec.parts[j - 1].n) * s / z[i];
          out.quotient_sym(i - 1, j - 1) =
              -scale * to_double(s) / std::sqrt(to_double(z[i]) * to_double(z[j]));
          break;
      }
    }
  }
  return out;
}

CharPolyFactored uniform_join_charpoly(const JoinSpec& spec, int m) {
  for (int c : spec.counts.cardinalities())
    if (c != m)
      throw std::invalid_argument("uniform join restricted to cardinality " + std::to_string(m) +
                                  " but counts mention " + std::to_string(c));
  return join_charpoly(spec);
}

CharPolyFactored backbone_join_charpoly(const Hypergraph& pattern, const std::vector<ConstituentSpec>& parts,
                                        const std::vector<CrossCounts>& per_edge_counts, const WeightTable& w,
                                        MatrixKind kind) {
  if (pattern.vertex_count() != static_cast<int>(parts.size()))
    throw std::invalid_argument("pattern must have one vertex per constituent");
  if (per_edge_counts.size() != pattern.edges().size())
    throw std::invalid_argument("one count table per pattern edge required");
  CrossCounts total;
  for (std::size_t t = 0; t < per_edge_counts.size(); ++t) {
    const auto& e = pattern.edges()[t].vertices;
    for (const auto& [key, count] : per_edge_counts[t].table) {
      auto [i, j, c] = key;
      if (!std::binary_search(e.begin(), e.end(), i) || !std::binary_search(e.begin(), e.end(), j))
        throw std::invalid_argument("count for classes outside the pattern edge");
      total.table[key] += count;
    }
  }
  JoinSpec spec{parts, std::move(total), w, kind};
  return join_charpoly(spec);
}

std::vector<CrossCounts> backbone_counts_from_families(const Hypergraph& pattern, const std::vector<int>& sizes,
                                                       const std::vector<EdgeFamily>& families) {
  if (families.size() != pattern.edges().size())
    throw std::invalid_argument("one family per pattern edge required");
  std::vector<CrossCounts> out;
  for (std::size_t t = 0; t < families.size(); ++t) {
    const auto& e = pattern.edges()[t].vertices;
    ClassSequence expected = backbone_classes(sizes, e);
    if (!(families[t].classes == expected))
      throw std::invalid_argument("family " + std::to_string(t + 1) +
                                  " does not sit on the classes of its pattern edge");
    CrossCounts local = require_constant_counts(families[t]);
    CrossCounts global;
    for (const auto& [key, count] : local.table) {
      auto [li, lj, c] = key;
      global.table[{e[li - 1], e[lj - 1], c}] = count;
    }
    out.push_back(std::move(global));
  }
  return out;
}

// ---- two-copy machinery ----------------------------------------------------

Hypergraph derived_part(const Hypergraph& h, const WeightTable& w, DerivedPart which) {
  switch (which) {
    case DerivedPart::Base: return reweight(h, w);
    case DerivedPart::SComplement: return s_complement(h, w);
    case DerivedPart::Complete: return complete(h.vertex_count(), w);
    case DerivedPart::Empty: return edgeless(h.vertex_count());
    case DerivedPart::TotalComplement: return total_complement(h, w);
  }
  throw std::logic_error("unknown derived part");
}

namespace {

struct DerivedCoeffs {
  Rational xi, eta;  // A(part) = xi * A(h_w) + eta * (J - I)
  Rational valency;
};

DerivedCoeffs derived_coeffs(const Hypergraph& h, const WeightTable& w, DerivedPart which,
                             const Rational& base_valency) {
  const int n = h.vertex_count();
  Rational mu = 0, m_prime = 0;
  for (int c : h.cardinality_set()) {
    mu += w.at(c) * Rational(binomial(n - 2, c - 2)) / Rational(static_cast<long>(c) - 1);
    m_prime += w.at(c) * Rational(binomial(n - 1, c - 1));
  }
  Rational mu_hat = 0, m_full = 0;
  for (int c = 2; c <= n; ++c) {
    mu_hat += w.at(c) * Rational(binomial(n - 2, c - 2)) / Rational(static_cast<long>(c) - 1);
    m_full += w.at(c) * Rational(binomial(n - 1, c - 1));
  }
  switch (which) {
    case DerivedPart::Base: return {Rational(1), Rational(0), base_valency};
    case DerivedPart::SComplement: return {Rational(-1), mu, m_prime - base_valency};
    case DerivedPart::Complete: return {Rational(0), mu_hat, m_full};
    case DerivedPart::Empty: return {Rational(0), Rational(0), Rational(0)};
    case DerivedPart::TotalComplement: return {Rational(-1), mu_hat, m_full - base_valency};
  }
  throw std::logic_error("unknown derived part");
}

}  // namespace

Rational derived_valency(const Hypergraph& h, const WeightTable& w, DerivedPart which) {
  auto base = reweight(h, w).regular_valency();
  if (!base) throw std::invalid_argument("base hypergraph is not regular under the weight table");
  return derived_coeffs(h, w, which, *base).valency;
}

EdgeFamily two_copy_family(int n, const TwoCopyFamily& t) {
  ClassSequence cs = ClassSequence::contiguous({n, n});
  switch (t.kind) {
    case TwoCopyFamily::Aligned: return family_aligned(cs, t.r);
    case TwoCopyFamily::Identity: return family_aligned(cs, 1);
    case TwoCopyFamily::Full: return family_full(cs);
    case TwoCopyFamily::FullMinusAligned: return family_minus(family_full(cs), family_aligned(cs, t.r));
    case TwoCopyFamily::FullMinusIdentity: return family_minus(family_full(cs), family_aligned(cs, 1));
  }
  throw std::logic_error("unknown two-copy family");
}

FamilyConstants two_copy_constants(int n, const TwoCopyFamily& t, const WeightTable& w) {
  auto aligned_constants = [&](int r) {
    auto [x1, x2] = x1x2(n, r);
    Rational w2r = w.at(2 * r);
    return FamilyConstants{-x2 * w2r, x2 * w2r, w2r * (x1 - x2), w2r * x2};
  };
  auto full_constants = [&] {
    Rational sum1 = 0, sum2 = 0;
    for (int c = 2; c <= 2 * n; ++c) {
      Rational cm1(static_cast<long>(c) - 1);
      sum1 += w.at(c) * Rational(p1(n, 2, c)) / cm1;
      sum2 += w.at(c) * Rational(p2(n, 2, c)) / cm1;
    }
    return FamilyConstants{-sum1, sum1, Rational(0), sum2};
  };
  switch (t.kind) {
    case TwoCopyFamily::Aligned: return aligned_constants(t.r);
    case TwoCopyFamily::Identity: return aligned_constants(1);
    case TwoCopyFamily::Full: return full_constants();
    case TwoCopyFamily::FullMinusAligned: {
      auto f = full_constants();
      auto a = aligned_constants(t.r);
      return {f.beta - a.beta, f.gamma - a.gamma, f.a - a.a, f.b - a.b};
    }
    case TwoCopyFamily::FullMinusIdentity: {
      auto f = full_constants();
      auto a = aligned_constants(1);
      return {f.beta - a.beta, f.gamma - a.gamma, f.a - a.a, f.b - a.b};
    }
  }
  throw std::logic_error("unknown two-copy family");
}

namespace {

struct BlockCombo {
  Rational a;  // coefficient of A(h_w)
  Rational i;  // coefficient of I
  Rational j;  // coefficient of J
};

struct TwoCopySetup {
  ConstituentSpec base;     // of the weighted base h_w
  BlockCombo diag[2];       // kind-level diagonal blocks
  Rational cross_i;         // adjacency-level cross aI + bJ
  Rational cross_j;
  Rational z[2];
  MatrixKind kind;
  int n;
};

TwoCopySetup two_copy_setup(const Hypergraph& h, const WeightTable& w, DerivedPart g1, DerivedPart g2,
                            const TwoCopyFamily& t, MatrixKind kind) {
  if (h.has_duplicate_vertex_sets())
    throw std::invalid_argument("base hypergraph must not repeat vertex sets");
  TwoCopySetup s;
  s.kind = kind;
  s.n = h.vertex_count();
  s.base = make_constituent(reweight(h, w));
  DerivedPart parts[2] = {g1, g2};
  FamilyConstants fc = two_copy_constants(s.n, t, w);
  s.cross_i = fc.a;
  s.cross_j = fc.b;
  for (int side = 0; side < 2; ++side) {
    DerivedCoeffs dc = derived_coeffs(h, w, parts[side], s.base.valency);
    s.z[side] = dc.valency + fc.beta + Rational(s.n) * fc.gamma + fc.a + Rational(s.n) * fc.b;
    switch (kind) {
      case MatrixKind::Adjacency:
        s.diag[side] = {dc.xi, fc.beta - dc.eta, fc.gamma + dc.eta};
        break;
      case MatrixKind::Laplacian:
        s.diag[side] = {-dc.xi, s.z[side] - fc.beta + dc.eta, -(fc.gamma + dc.eta)};
        break;
      case MatrixKind::NormalizedLaplacian:
        if (s.z[side] <= 0)
          throw std::invalid_argument("normalized Laplacian needs positive class valencies");
        s.diag[side] = {-dc.xi / s.z[side], (s.z[side] - fc.beta + dc.eta) / s.z[side],
                        -(fc.gamma + dc.eta) / s.z[side]};
        break;
    }
  }
  return s;
}

// Kind-level cross eigenvalues: on non-perron vectors and on the all-ones
// vector. For the normalized kind these are the exact row-scaled pair whose
// product equals the squared true value.
void cross_eigen_pair(const TwoCopySetup& s, Rational& u_np, Rational& v_np, Rational& u_per,
                      Rational& v_per) {
  Rational a = s.cross_i;
  Rational per = s.cross_i + Rational(s.n) * s.cross_j;
  switch (s.kind) {
    case MatrixKind::Adjacency:
      u_np = v_np = a;
      u_per = v_per = per;
      break;
    case MatrixKind::Laplacian:
      u_np = v_np = -a;
      u_per = v_per = -per;
      break;
    case MatrixKind::NormalizedLaplacian:
      u_np = -a / s.z[0];
      v_np = -a / s.z[1];
      u_per = -per / s.z[0];
      v_per = -per / s.z[1];
      break;
  }
}

}  // namespace

CharPolyFactored two_copy_charpoly(const Hypergraph& h, const WeightTable& w, DerivedPart g1, DerivedPart g2,
                                   const TwoCopyFamily& t, MatrixKind kind) {
  TwoCopySetup s = two_copy_setup(h, w, g1, g2, t, kind);
  Rational u_np, v_np, u_per, v_per;
  cross_eigen_pair(s, u_np, v_np, u_per, v_per);

  CharPolyFactored out;
  const int n = s.n;
  RationalPoly q = s.base.adj_charpoly.divide_exact(RationalPoly::linear_root(s.base.valency));
  const int d = q.degree();
  if (d > 0) {
    RMatrix comp = q.companion();
    RMatrix big = RMatrix::Zero(2 * d, 2 * d);
    RMatrix eye = RMatrix::Identity(d, d);
    big.topLeftCorner(d, d) = comp * s.diag[0].a + eye * s.diag[0].i;
    big.bottomRightCorner(d, d) = comp * s.diag[1].a + eye * s.diag[1].i;
    big.topRightCorner(d, d) = eye * u_np;
    big.bottomLeftCorner(d, d) = eye * v_np;
    out.residual.push_back({charpoly_exact(big), 1});

    auto rest = remove_closest(s.base.adj_spectrum, to_double(s.base.valency));
    double g2f = to_double(u_np * v_np);
    for (double lambda : rest) {
      double f1 = to_double(s.diag[0].a) * lambda + to_double(s.diag[0].i);
      double f2 = to_double(s.diag[1].a) * lambda + to_double(s.diag[1].i);
      double disc = std::sqrt(std::max(0.0, (f1 - f2) * (f1 - f2) + 4 * g2f));
      out.residual_roots.push_back((f1 + f2 - disc) / 2);
      out.residual_roots.push_back((f1 + f2 + disc) / 2);
    }
  }

  Rational e1 = s.diag[0].a * s.base.valency + s.diag[0].i + Rational(n) * s.diag[0].j;
  Rational e2 = s.diag[1].a * s.base.valency + s.diag[1].i + Rational(n) * s.diag[1].j;
  out.quotient = RMatrix::Zero(2, 2);
  out.quotient(0, 0) = e1;
  out.quotient(1, 1) = e2;
  out.quotient(0, 1) = u_per;
  out.quotient(1, 0) = v_per;
  out.quotient_sym = DMatrix::Zero(2, 2);
  out.quotient_sym(0, 0) = to_double(e1);
  out.quotient_sym(1, 1) = to_double(e2);
  double off = std::sqrt(std::max(0.0, to_double(u_per * v_per)));
  if (u_per < 0 || (u_per == 0 && v_per < 0)) off = -off;
  out.quotient_sym(0, 1) = off;
  out.quotient_sym(1, 0) = off;
  return out;
}

CharPolyFactored two_copy_equal_charpoly(const Hypergraph& h, const WeightTable& w, DerivedPart g,
                                         const TwoCopyFamily& t, MatrixKind kind) {
  TwoCopySetup s = two_copy_setup(h, w, g, g, t, kind);
  Rational u_np, v_np, u_per, v_per;
  cross_eigen_pair(s, u_np, v_np, u_per, v_per);
  // equal copies share one valency, so the cross eigenvalues are rational
  CharPolyFactored out;
  RationalPoly q = s.base.adj_charpoly.divide_exact(RationalPoly::linear_root(s.base.valency));
  if (q.degree() > 0) {
    out.residual.push_back({q.affine_image(s.diag[0].a, s.diag[0].i + u_np), 1});
    out.residual.push_back({q.affine_image(s.diag[0].a, s.diag[0].i - u_np), 1});
    auto rest = remove_closest(s.base.adj_spectrum, to_double(s.base.valency));
    for (double lambda : rest) {
      double f = to_double(s.diag[0].a) * lambda + to_double(s.diag[0].i);
      out.residual_roots.push_back(f + to_double(u_np));
      out.residual_roots.push_back(f - to_double(u_np));
    }
  }
  Rational e = s.diag[0].a * s.base.valency + s.diag[0].i + Rational(s.n) * s.diag[0].j;
  out.linear.push_back({e + u_per, 1});
  out.linear.push_back({e - u_per, 1});
  out.quotient = RMatrix(0, 0);
  out.quotient_sym = DMatrix(0, 0);
  return out;
}

Hypergraph two_copy_build(const Hypergraph& h, const WeightTable& w, DerivedPart g1, DerivedPart g2,
                          const TwoCopyFamily& t) {
  std::vector<Hypergraph> parts{derived_part(h, w, g1), derived_part(h, w, g2)};
  return tensor_join(parts, two_copy_family(h.vertex_count(), t), w);
}

// ---- k copies --------------------------------------------------------------

KCopyStructure k_copy_structure(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op) {
  const int n = h.vertex_count();
  auto base = reweight(h, w).regular_valency();
  if (!base) throw std::invalid_argument("base hypergraph is not regular under the weight table");
  KCopyConstants c = k_copy_constants(k, l, n, r, w);
  KCopyStructure out;
  switch (op) {
    case KCopyOp::Mirror:
      out.adj = {-c.p12, c.p12, c.p21 - c.p22, c.p22};
      break;
    case KCopyOp::JoinNeighbourhood:
      out.adj = {-c.p1_prime, c.p1_prime, Rational(0), c.p2_prime};
      break;
    case KCopyOp::VCNeighbourhood:
      out.adj = {c.p12 - c.p1_prime, c.p1_prime - c.p12, c.p22 - c.p21, c.p2_prime - c.p22};
      break;
  }
  out.z = *base + out.adj.beta + Rational(n) * out.adj.gamma +
          Rational(k - 1) * (out.adj.a + Rational(n) * out.adj.b);
  return out;
}

CharPolyFactored k_copy_charpoly(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op,
                                 MatrixKind kind) {
  if (k < 2) throw std::invalid_argument("need at least two copies");
  const int n = h.vertex_count();
  ConstituentSpec base = make_constituent(reweight(h, w));
  KCopyStructure st = k_copy_structure(h, w, k, l, r, op);

  Rational alpha, beta, gamma, a, b;
  switch (kind) {
    case MatrixKind::Adjacency:
      alpha = 1;
      beta = st.adj.beta;
      gamma = st.adj.gamma;
      a = st.adj.a;
      b = st.adj.b;
      break;
    case MatrixKind::Laplacian:
      alpha = -1;
      beta = st.z - st.adj.beta;
      gamma = -st.adj.gamma;
      a = -st.adj.a;
      b = -st.adj.b;
      break;
    case MatrixKind::NormalizedLaplacian:
      if (st.z <= 0) throw std::invalid_argument("normalized Laplacian needs positive valencies");
      alpha = Rational(-1) / st.z;
      beta = (st.z - st.adj.beta) / st.z;
      gamma = -st.adj.gamma / st.z;
      a = -st.adj.a / st.z;
      b = -st.adj.b / st.z;
      break;
  }

  CharPolyFactored out;
  RationalPoly q = base.adj_charpoly.divide_exact(RationalPoly::linear_root(base.valency));
  if (q.degree() > 0) {
    out.residual.push_back({q.affine_image(alpha, beta - a), k - 1});
    out.residual.push_back({q.affine_image(alpha, beta + Rational(k - 1) * a), 1});
    auto rest = remove_closest(base.adj_spectrum, to_double(base.valency));
    double af = to_double(alpha), bf = to_double(beta), crossf = to_double(a);
    for (int copy = 0; copy < k - 1; ++copy)
      for (double lambda : rest) out.residual_roots.push_back(af * lambda + bf - crossf);
    for (double lambda : rest) out.residual_roots.push_back(af * lambda + bf + double(k - 1) * crossf);
  }
  Rational d_per = alpha * base.valency + beta + Rational(n) * gamma;
  Rational mu_per = a + Rational(n) * b;
  out.linear.push_back({d_per - mu_per, k - 1});
  out.linear.push_back({d_per + Rational(k - 1) * mu_per, 1});
  out.quotient = RMatrix(0, 0);
  out.quotient_sym = DMatrix(0, 0);
  return out;
}

Hypergraph k_copy_build(const Hypergraph& h, const WeightTable& w, int k, int l, int r, KCopyOp op) {
  if (l < 2 || l > k) throw std::invalid_argument("need 2 <= l <= k");
  const int n = h.vertex_count();
  std::vector<Hypergraph> parts(k, reweight(h, w));
  auto [base, offsets] = disjoint_union(parts);
  std::vector<Edge> edges = base.edges();

  std::vector<int> subset;
  std::function<void()> rec = [&] {
    if (static_cast<int>(subset.size()) == l) {
      ClassSequence cs;
      for (int cls : subset) {
        std::vector<Vertex> members(n);
        for (int i = 0; i < n; ++i) members[i] = offsets[cls - 1] + i + 1;
        cs.classes.push_back(std::move(members));
      }
      EdgeFamily fam;
      switch (op) {
        case KCopyOp::Mirror: fam = family_aligned(cs, r); break;
        case KCopyOp::JoinNeighbourhood: fam = family_full(cs); break;
        case KCopyOp::VCNeighbourhood: fam = family_minus(family_full(cs), family_aligned(cs, r)); break;
      }
      // members repeat across generating subsets on purpose: parallel edges
      for (const auto& m : fam.members)
        edges.push_back({m, w.at(static_cast<int>(m.size()))});
      return;
    }
    for (int cls = subset.empty() ? 1 : subset.back() + 1; cls <= k; ++cls) {
      subset.push_back(cls);
      rec();
      subset.pop_back();
    }
  };
  rec();
  return build_hypergraph(base.vertex_count(), std::move(edges));
}

// ---- catalog ---------------------------------------------------------------

CharPolyFactored lexicographic_charpoly(const Hypergraph& h, const Hypergraph& hprime, const WeightTable& w,
                                        MatrixKind kind) {
  if (h.has_loops()) throw std::invalid_argument("backbone must be loop-free");
  const int k = h.vertex_count();
  const int m = hprime.vertex_count();
  std::vector<ConstituentSpec> parts(k, make_constituent(hprime));
  std::vector<CrossCounts> per_edge;
  for (const auto& e : h.edges()) {
    const int c = static_cast<int>(e.vertices.size());
    Integer count = 1;
    for (int t = 0; t < c - 2; ++t) count *= m;
    CrossCounts cc;
    for (std::size_t x = 0; x < e.vertices.size(); ++x)
      for (std::size_t y = x + 1; y < e.vertices.size(); ++y)
        cc.table[{e.vertices[x], e.vertices[y], c}] = count.get_si();
    per_edge.push_back(std::move(cc));
  }
  return backbone_join_charpoly(h, parts, per_edge, w, kind);
}

// Adjacency fast path for a uniform backbone: one factor (x - lambda)^k per
// non-perron eigenvalue of the constituent, quotient r I + w_u m^(u-1) A(h).
CharPolyFactored lexicographic_charpoly_uniform(const Hypergraph& h, const Hypergraph& hprime,
                                                const WeightTable& w) {
  if (h.has_loops()) throw std::invalid_argument("backbone must be loop-free");
  auto u = h.uniform_cardinality();
  if (!u) throw std::invalid_argument("fast path requires a uniform backbone");
  const int k = h.vertex_count();
  const int m = hprime.vertex_count();
  ConstituentSpec part = make_constituent(hprime);

  CharPolyFactored out;
  RationalPoly q = part.adj_charpoly.divide_exact(RationalPoly::linear_root(part.valency));
  if (q.degree() > 0) {
    out.residual.push_back({q, k});
    auto rest = remove_closest(part.adj_spectrum, to_double(part.valency));
    for (int copy = 0; copy < k; ++copy)
      for (double lambda : rest) out.residual_roots.push_back(lambda);
  }
  Rational scale = w.at(*u);
  for (int t = 0; t < *u - 1; ++t) scale *= m;
  RMatrix structure = adjacency(reweight(h, WeightTable(1)));
  out.quotient = RMatrix(structure * scale);
  for (int i = 0; i < k; ++i) out.quotient(i, i) += part.valency;
  out.quotient_sym = to_double(out.quotient);
  return out;
}

Hypergraph lexicographic_build(const Hypergraph& h, const Hypergraph& hprime, const WeightTable& w) {
  if (h.has_loops()) throw std::invalid_argument("backbone must be loop-free");
  const int k = h.vertex_count();
  std::vector<Hypergraph> parts(k, hprime);
  std::vector<int> sizes(k, hprime.vertex_count());
  std::vector<EdgeFamily> families;
  for (const auto& e : h.edges())
    families.push_back(family_b_spanning(backbone_classes(sizes, e.vertices),
                                         {static_cast<int>(e.vertices.size())}));
  return backbone_join(h, parts, families, w);
}

namespace {

ConstituentSpec edgeless_spec(int n) {
  ConstituentSpec spec;
  spec.n = n;
  spec.valency = 0;
  spec.adj_charpoly = RationalPoly::monomial(n);
  spec.adj_spectrum.assign(n, 0.0);
  return spec;
}

}  // namespace

CharPolyFactored strong_partite_charpoly(const std::vector<int>& sizes, std::optional<int> m,
                                         const WeightTable& w, MatrixKind kind) {
  const int k = static_cast<int>(sizes.size());
  if (k < 2) throw std::invalid_argument("need at least two classes");
  std::vector<int> cards;
  if (m) {
    if (*m < 2 || *m > k) throw std::invalid_argument("uniform cardinality must lie in 2..k");
    cards.push_back(*m);
  } else {
    for (int c = 2; c <= k; ++c) cards.push_back(c);
  }
  JoinSpec spec;
  for (int s : sizes) spec.parts.push_back(edgeless_spec(s));
  for (int c : cards)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        Integer count = q_cross(sizes, i, j, c);
        if (count != 0) spec.counts.table[{i, j, c}] = count.get_si();
      }
  spec.weights = w;
  spec.kind = kind;
  return join_charpoly(spec);
}

CharPolyFactored catalog_charpoly(CatalogRow row, const CatalogParams& params, const WeightTable& w,
                                  MatrixKind kind) {
  JoinSpec spec;
  spec.weights = w;
  spec.kind = kind;
  switch (row) {
    case CatalogRow::UniformMPartite: {
      const int k = static_cast<int>(params.sizes.size());
      if (k < 2) throw std::invalid_argument("need at least two classes");
      for (int s : params.sizes) spec.parts.push_back(edgeless_spec(s));
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
          Integer count = 1;
          for (int p = 1; p <= k; ++p)
            if (p != i && p != j) count *= params.sizes[p - 1];
          spec.counts.table[{i, j, k}] = count.get_si();
        }
      return join_charpoly(spec);
    }
    case CatalogRow::UniformWeakPartite:
    case CatalogRow::CompleteWeakPartite: {
      const int k = static_cast<int>(params.sizes.size());
      if (k < 2) throw std::invalid_argument("need at least two classes");
      int total = 0;
      for (int s : params.sizes) total += s;
      std::vector<int> cards;
      if (row == CatalogRow::UniformWeakPartite) {
        if (params.m < k || params.m > total)
          throw std::invalid_argument("uniform cardinality must lie in k..N");
        cards.push_back(params.m);
      } else {
        for (int c = k; c <= total; ++c) cards.push_back(c);
      }
      for (int s : params.sizes) spec.parts.push_back(edgeless_spec(s));
      for (int c : cards)
        for (int i = 1; i <= k; ++i)
          for (int j = i; j <= k; ++j) {
            if (i == j && params.sizes[i - 1] < 2) continue;
            Integer count = n_cross(params.sizes, i, j, c);
            if (count != 0) spec.counts.table[{i, j, c}] = count.get_si();
          }
      return join_charpoly(spec);
    }
    case CatalogRow::JoinNonUniform:
    case CatalogRow::JoinUniform: {
      const int k = static_cast<int>(params.parts.size());
      if (k < 1) throw std::invalid_argument("need at least one constituent");
      std::vector<int> sizes;
      for (const auto& p : params.parts) {
        spec.parts.push_back(make_constituent(p));
        sizes.push_back(p.vertex_count());
      }
      int total = 0;
      for (int s : sizes) total += s;
      std::set<int> cards = params.b;
      if (row == CatalogRow::JoinUniform) {
        if (params.m < k) throw std::invalid_argument("uniform join requires k <= m");
        cards = {params.m};
      }
      if (k == 1) cards.clear();  // no cross members over a single class
      for (int c : cards) {
        if (c < k || c > total) throw std::invalid_argument("join cardinalities must lie in k..N");
        for (int i = 1; i <= k; ++i)
          for (int j = i; j <= k; ++j) {
            if (i == j && sizes[i - 1] < 2) continue;
            Integer count = n_cross(sizes, i, j, c);
            if (count != 0) spec.counts.table[{i, j, c}] = count.get_si();
          }
      }
      return join_charpoly(spec);
    }
  }
  throw std::logic_error("unknown catalog row");
}

}  // namespace tenjoin
