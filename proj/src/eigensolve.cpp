#include "tenjoin/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tenjoin {

namespace {

double off_diagonal_norm(const DMatrix& a) {
  double sum = 0;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

void check_symmetric(const DMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("matrix is not symmetric");
}

EigenSystem jacobi_impl(DMatrix a, double tol, bool with_vectors) {
  check_symmetric(a);
  const Index n = a.rows();
  DMatrix v = with_vectors ? DMatrix::Identity(n, n) : DMatrix();
  int sweeps = 0;
  while (off_diagonal_norm(a) >= tol) {
    if (++sweeps > 100) throw std::runtime_error("Jacobi iteration did not converge in 100 sweeps");
    for (Index p = 0; p < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        double theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        double tau = s / (1 + c);
        double apq = a(p, q);
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0;
        a(q, p) = 0;
        for (Index r = 0; r < n; ++r) {
          if (r != p && r != q) {
            double arp = a(r, p), arq = a(r, q);
            a(r, p) = arp - s * (arq + tau * arp);
            a(p, r) = a(r, p);
            a(r, q) = arq + s * (arp - tau * arq);
            a(q, r) = a(r, q);
          }
          if (with_vectors) {
            double vrp = v(r, p), vrq = v(r, q);
            v(r, p) = vrp - s * (vrq + tau * vrp);
            v(r, q) = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
  }
  EigenSystem out;
  out.values = a.diagonal();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](Index x, Index y) { return out.values(x) < out.values(y); });
  DVector sorted(n);
  for (Index i = 0; i < n; ++i) sorted(i) = out.values(order[i]);
  out.values = sorted;
  if (with_vectors) {
    out.vectors.resize(n, n);
    for (Index i = 0; i < n; ++i) out.vectors.col(i) = v.col(order[i]);
  }
  return out;
}

}  // namespace

DVector jacobi_eigenvalues(const DMatrix& m, double tol) { return jacobi_impl(m, tol, false).values; }

EigenSystem jacobi_eigen(const DMatrix& m, double tol) { return jacobi_impl(m, tol, true); }

std::vector<double> sorted_spectrum(const DMatrix& sym, double tol) {
  DVector v = jacobi_eigenvalues(sym, tol);
  return std::vector<double>(v.data(), v.data() + v.size());
}

RationalPoly charpoly_exact(const RMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const Index n = m.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  if (n == 0) return RationalPoly(coeffs);
  RMatrix mk = m;
  coeffs[n - 1] = -mk.trace();
  for (Index k = 2; k <= n; ++k) {
    RMatrix shifted = mk;
    for (Index i = 0; i < n; ++i) shifted(i, i) += coeffs[n - k + 1];
    mk = m * shifted;
    coeffs[n - k] = -mk.trace() / Rational(static_cast<long>(k));
  }
  return RationalPoly(coeffs);
}

namespace {

// Refines an orthonormal basis block so that every remaining matrix is
// diagonal on it; fills the rows of `values` for basis columns col0..col0+m.
void simdiag_recurse(const std::vector<DMatrix>& ms, std::size_t level, DMatrix& basis, Index col0,
                     Index m, DMatrix& values, double tol) {
  if (level == ms.size()) return;
  DMatrix block = basis.middleCols(col0, m);
  DMatrix projected = block.transpose() * ms[level] * block;
  projected = ((projected + projected.transpose()) / 2).eval();
  EigenSystem es = jacobi_eigen(projected, tol * 1e-4);
  basis.middleCols(col0, m) = block * es.vectors;
  for (Index t = 0; t < m; ++t) values(static_cast<Index>(level), col0 + t) = es.values(t);
  Index start = 0;
  while (start < m) {
    Index end = start + 1;
    while (end < m && std::abs(es.values(end) - es.values(start)) <= tol) ++end;
    simdiag_recurse(ms, level + 1, basis, col0 + start, end - start, values, tol);
    start = end;
  }
}

}  // namespace

CoEigenSystem co_eigen(const std::vector<RMatrix>& ms, double tol) {
  if (ms.empty()) throw std::invalid_argument("co_eigen needs at least one matrix");
  const Index n = ms.front().rows();
  for (const auto& m : ms)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("co_eigen matrices must share one order");
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      RMatrix ab = ms[i] * ms[j];
      RMatrix ba = ms[j] * ms[i];
      if (ab != ba)
        throw std::invalid_argument("matrices " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                    " do not commute");
    }
  std::vector<DMatrix> fs;
  fs.reserve(ms.size());
  for (const auto& m : ms) fs.push_back(to_double(m));

  CoEigenSystem out;
  out.basis = DMatrix::Identity(n, n);
  out.values = DMatrix::Zero(static_cast<Index>(ms.size()), n);
  simdiag_recurse(fs, 0, out.basis, 0, n, out.values, tol);
  return out;
}

bool spectra_equal(std::vector<double> a, std::vector<double> b, double tol) {
  if (a.size() != b.size()) throw std::invalid_argument("spectra have different lengths");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

}  // namespace tenjoin
