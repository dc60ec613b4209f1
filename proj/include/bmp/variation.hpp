#pragma once

#include "bmp/body.hpp"
#include "bmp/fields.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/weingarten.hpp"

#include <vector>

namespace bmp {

/// Volume functional along h + s*phi: value, first and second derivatives at
/// s = 0, and the second derivative of its n-th root.
struct VariationResult {
    double f0 = 0.0; ///< F(h)
    double f1 = 0.0; ///< d/ds F(h + s phi) at 0
    double f2 = 0.0; ///< d^2/ds^2 F(h + s phi) at 0
    double g2 = 0.0; ///< d^2/ds^2 F(h + s phi)^{1/n} at 0
    /// Step bound |s| below which h + s*phi is guaranteed strictly convex:
    /// validity margin of h divided by the largest curvature contribution of
    /// phi over the nodes.
    double safe_step = 0.0;
};

/// First derivative of the volume along phi: integral of phi det(Q).
double first_variation(const SupportFunction& h, const ScalarField& phi,
                       const SphereQuadrature& quad);

/// Second derivative: integral of phi * sum_ij C_ij (phi_ij + phi delta_ij).
double second_variation(const SupportFunction& h, const ScalarField& phi,
                        const SphereQuadrature& quad);

VariationResult variation_profile(const SupportFunction& h, const ScalarField& phi,
                                  const SphereQuadrature& quad);

/// Midpoint-concavity scan of t -> volume((1-t) h0 + t h1)^{1/n}.
struct BmScanResult {
    std::vector<double> t;
    std::vector<double> g;
    /// Least value of g((ta+tb)/2) - (g(ta)+g(tb))/2 over distinct grid pairs
    /// whose midpoint is a grid point.
    double min_margin = 0.0;
    bool all_valid = true;
};

BmScanResult bm_concavity_scan(const SupportFunction& h0, const SupportFunction& h1,
                               const std::vector<double>& t_grid, const SphereQuadrature& quad);

std::vector<double> uniform_grid(std::size_t points);

/// |S(f,g) - S(g,f)| with S(f,g) = integral of f * sum_ij C_ij g_ij.
/// Vanishes in exact arithmetic because the cofactor rows are
/// divergence-free; the returned defect measures quadrature error.
double weak_divergence_defect(const SupportFunction& h, const ScalarField& f,
                              const ScalarField& g, const SphereQuadrature& quad);

/// All-pairs matrix S_mn = S(basis_m, basis_n) for the defect check.
Matrix weak_divergence_matrix(const SupportFunction& h, const HarmonicBasis& basis,
                              const SphereQuadrature& quad);

} // namespace bmp
