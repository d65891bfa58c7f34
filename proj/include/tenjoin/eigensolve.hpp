#pragma once

#include <vector>

#include "tenjoin/poly.hpp"
#include "tenjoin/rational.hpp"

namespace tenjoin {

struct EigenSystem {
  DVector values;   // ascending
  DMatrix vectors;  // orthonormal columns, aligned with values
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol; at most 100 sweeps, then an error. Input must be symmetric.
DVector jacobi_eigenvalues(const DMatrix& m, double tol = 1e-12);
EigenSystem jacobi_eigen(const DMatrix& m, double tol = 1e-12);

std::vector<double> sorted_spectrum(const DMatrix& sym, double tol = 1e-12);

// Monic characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
// recurrence; exact, works for non-symmetric input.
RationalPoly charpoly_exact(const RMatrix& m);

struct CoEigenSystem {
  DMatrix basis;   // columns form a common orthonormal eigenbasis
  DMatrix values;  // values(i, t) = eigenvalue of matrix i on basis column t
};

// Simultaneous diagonalization of commuting symmetric matrices. Commutation
// is verified in exact arithmetic first; eigenspace membership is decided
// with the given tolerance.
CoEigenSystem co_eigen(const std::vector<RMatrix>& ms, double tol = 1e-8);

// Pairwise sorted comparison; throws on length mismatch.
bool spectra_equal(std::vector<double> a, std::vector<double> b, double tol);

}  // namespace tenjoin
