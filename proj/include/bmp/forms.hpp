#pragma once

#include "bmp/body.hpp"
#include "bmp/harmonics.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/weingarten.hpp"

namespace bmp {

/// Galerkin matrices of the quadratic forms entering the constrained
/// Rayleigh-quotient certification, over a harmonic basis {phi_m}:
///
///   A_mn  = int sum_ij C_ij (phi_m)_i (phi_n)_j      (weighted Dirichlet)
///   B_mn  = int tr(C) phi_m phi_n                    (weighted mass)
///   ell_m = int phi_m det(Q)                         (volume-form constraint)
///   G_mn  = int phi_m phi_n det(Q)                   (boundary mass, pulled back)
///   D_mn  = int (Q^{-1} grad phi_m, Q^{-1} grad phi_n) det(Q)
///                                                    (boundary Dirichlet, pulled back)
///
/// All integrals are over the unit sphere against the quadrature weights;
/// boundary integrals use dH(x) = det(Q) dH(u) and grad_boundary = Q^{-1} grad.
struct PoincareForms {
    Matrix A, B, G, D;
    Vector ell;
    int dim = 0;
    int basis_degree = 0;

    /// Largest diagonal entry of B; reference magnitude for tolerances.
    double scale() const { return B.diagonal().maxCoeff(); }
};

/// Assembles the forms with the cofactor matrix. Throws InvalidBodyError on
/// invalid bodies; requires the quadrature degree to cover products of two
/// basis elements (degree >= 2L; smooth bodies additionally need curvature
/// headroom, which the default resolutions provide).
PoincareForms assemble_forms(const SupportFunction& h, const HarmonicBasis& basis,
                             const SphereQuadrature& quad);

/// Same integrals evaluated through the boundary change of variables
/// (det(Q), Q^{-1} and pullback gradients) instead of the cofactor matrix.
/// Agreement with assemble_forms certifies the change-of-variables algebra.
PoincareForms assemble_boundary_forms(const SupportFunction& h, const HarmonicBasis& basis,
                                      const SphereQuadrature& quad);

} // namespace bmp
