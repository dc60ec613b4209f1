#pragma once

#include "bmp/body.hpp"
#include "bmp/forms.hpp"
#include "bmp/harmonics.hpp"
#include "bmp/pencil.hpp"
#include "bmp/quadrature.hpp"

#include <map>
#include <string>

namespace bmp {

/// Outcome of one certification run: named scalars, integer counts and the
/// pass flags derived from them at the recorded tolerance.
struct VerificationReport {
    std::string body;
    int dim = 0;
    int resolution = 0;
    int basis_degree = 0;
    double tolerance = 0.0;
    std::map<std::string, double> scalars;
    std::map<std::string, int> counts;
    std::map<std::string, bool> flags;
    bool pass = false;
};

/// Certifies the sphere-form inequality: on {ell(phi)=0} the weighted
/// Dirichlet form A dominates the weighted mass form B. Passes when the
/// constrained Rayleigh minimum of (A,B) is >= 1 - tol, the constrained
/// spectrum of A - B is >= -tol*scale, and the degree-1 basis elements are
/// numerical equality directions (residuals <= tol*scale).
VerificationReport certify_sphere_inequality(const SupportFunction& h,
                                             const HarmonicBasis& basis,
                                             const SphereQuadrature& quad, double tol);

/// Certifies the boundary form: re-evaluates the mean, mass and Dirichlet
/// integrals through the boundary change of variables, compares them with the
/// sphere-side forms entrywise, re-runs the constrained eigensolve on the
/// boundary-assembled matrices, and checks the linear equality direction.
VerificationReport certify_boundary_form(const SupportFunction& h,
                                         const HarmonicBasis& basis,
                                         const SphereQuadrature& quad, double tol);

/// Lichnerowicz-type bound: least boundary Laplace eigenvalue estimate vs
/// (n-1) alpha^2 with alpha the least principal curvature.
VerificationReport lichnerowicz_check(const SupportFunction& h, const HarmonicBasis& basis,
                                      const SphereQuadrature& quad, double tol);

/// Equality case phi(u) = (u, u0): the constraint integral vanishes and the
/// two quadratic forms agree on phi.
VerificationReport equality_case_check(const SupportFunction& h, const Vector& u0,
                                       const SphereQuadrature& quad, double tol);

} // namespace bmp
