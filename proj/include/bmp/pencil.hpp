#pragma once

#include "bmp/types.hpp"

namespace bmp {

/// Orthonormal basis of the hyperplane {x : ell.x = 0}, as the trailing
/// columns of a Householder reflection mapping ell to a coordinate axis.
/// Requires ell != 0. Returns an N x (N-1) matrix.
Matrix constraint_kernel_basis(const Vector& ell);

struct PencilResult {
    double lambda_min = 0.0;
    int multiplicity = 0;
    Vector witness;  ///< minimizing coefficients in the full basis, unit norm
    Vector spectrum; ///< all constrained eigenvalues, ascending
};

/// Smallest eigenvalue of the pencil (A, B) restricted to {ell.x = 0}:
/// project both forms onto the constraint kernel, reduce by the Cholesky
/// factor of the projected B, and solve the dense symmetric problem.
/// Eigenvalues within mult_tol of the minimum count toward the multiplicity.
/// Throws SpecError if the projected B is not positive definite.
PencilResult constrained_pencil_min(const Matrix& A, const Matrix& B, const Vector& ell,
                                    double mult_tol = 1e-7);

/// Eigenvalues (ascending) of a symmetric matrix restricted to {ell.x = 0}.
Vector constrained_eigenvalues(const Matrix& M, const Vector& ell);

} // namespace bmp
