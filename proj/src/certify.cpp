#include "bmp/certify.hpp"

#include "bmp/fields.hpp"

#include <cmath>
#include <vector>

namespace bmp {

namespace {

std::vector<std::size_t> degree_one_indices(const HarmonicBasis& basis) {
    std::vector<std::size_t> idx;
    for (std::size_t m = 0; m < basis.size(); ++m)
        if (basis[m].degree == 1) idx.push_back(m);
    return idx;
}

void stamp(VerificationReport& r, const SupportFunction& h, const SphereQuadrature& quad,
           int basis_degree, double tol) {
    r.body = h.description();
    r.dim = quad.dim();
    r.resolution = quad.dim() == 2 ? static_cast<int>(quad.size())
                                   : static_cast<int>(std::lround(std::sqrt(quad.size() / 2.0)));
    r.basis_degree = basis_degree;
    r.tolerance = tol;
}

// (ell(phi), A(phi,phi), B(phi,phi)) for phi(u) = (u, u0), by direct quadrature.
struct LinearProbe {
    double ell, a, b;
};

LinearProbe linear_direction_probe(const WeingartenData& data, const Vector& u0,
                                   const SphereQuadrature& quad) {
    LinearField phi(u0);
    LinearProbe p{0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const Vector& u = quad.node(i);
        const double w = quad.weight(i);
        const Jet j0 = phi.jet0(u);
        const Vector g = covariant_gradient(j0, quad.frame(i));
        p.ell += w * j0.value * data.det(i);
        p.a += w * g.dot(data.cofactor(i) * g);
        p.b += w * data.cofactor(i).trace() * j0.value * j0.value;
    }
    return p;
}

} // namespace

VerificationReport certify_sphere_inequality(const SupportFunction& h,
                                             const HarmonicBasis& basis,
                                             const SphereQuadrature& quad, double tol) {
    require(tol > 0.0, "tolerance must be positive");
    const PoincareForms forms = assemble_forms(h, basis, quad);
    const double scale = forms.scale();

    VerificationReport r;
    stamp(r, h, quad, basis.max_degree(), tol);

    const PencilResult pencil = constrained_pencil_min(forms.A, forms.B, forms.ell);
    const Matrix gap = forms.A - forms.B;
    const Vector gap_spectrum = constrained_eigenvalues(gap, forms.ell);

    double ell_residual_max = 0.0, gap_residual_max = 0.0, witness_degree1 = 0.0;
    const auto deg1 = degree_one_indices(basis);
    for (std::size_t k : deg1) {
        ell_residual_max = std::max(ell_residual_max, std::abs(forms.ell[k]));
        gap_residual_max = std::max(gap_residual_max, gap.col(k).norm());
        witness_degree1 += pencil.witness[k] * pencil.witness[k];
    }

    r.scalars["lambda_min"] = pencil.lambda_min;
    r.scalars["min_eig_gap"] = gap_spectrum[0];
    r.scalars["scale"] = scale;
    r.scalars["kernel_ell_residual"] = ell_residual_max;
    r.scalars["kernel_gap_residual"] = gap_residual_max;
    r.scalars["witness_degree1_fraction"] = witness_degree1;
    r.counts["multiplicity"] = pencil.multiplicity;

    r.flags["rayleigh_ok"] = pencil.lambda_min >= 1.0 - tol;
    r.flags["gap_semidefinite_ok"] = gap_spectrum[0] >= -tol * scale;
    r.flags["kernel_ok"] =
        ell_residual_max <= tol * scale && gap_residual_max <= tol * scale;
    r.pass = r.flags["rayleigh_ok"] && r.flags["gap_semidefinite_ok"] && r.flags["kernel_ok"];
    return r;
}

VerificationReport certify_boundary_form(const SupportFunction& h,
                                         const HarmonicBasis& basis,
                                         const SphereQuadrature& quad, double tol) {
    require(tol > 0.0, "tolerance must be positive");
    const PoincareForms sphere = assemble_forms(h, basis, quad);
    const PoincareForms boundary = assemble_boundary_forms(h, basis, quad);

    VerificationReport r;
    stamp(r, h, quad, basis.max_degree(), tol);

    const auto rel_defect = [](const Matrix& x, const Matrix& y) {
        const double denom = std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff());
        return denom > 0.0 ? (x - y).cwiseAbs().maxCoeff() / denom : 0.0;
    };
    const double defect_mean =
        (sphere.ell - boundary.ell).cwiseAbs().maxCoeff() /
        std::max(sphere.ell.cwiseAbs().maxCoeff(), 1e-300);
    const double defect_mass = rel_defect(sphere.B, boundary.B);
    const double defect_dirichlet = rel_defect(sphere.A, boundary.A);

    const PencilResult pencil =
        constrained_pencil_min(boundary.A, boundary.B, boundary.ell);

    const WeingartenData data = reverse_weingarten(h, quad);
    Vector e1 = Vector::Zero(quad.dim());
    e1[0] = 1.0;
    const LinearProbe probe = linear_direction_probe(data, e1, quad);

    r.scalars["defect_mean"] = defect_mean;
    r.scalars["defect_mass"] = defect_mass;
    r.scalars["defect_dirichlet"] = defect_dirichlet;
    r.scalars["boundary_lambda_min"] = pencil.lambda_min;
    r.scalars["linear_mean_residual"] = std::abs(probe.ell);
    r.scalars["linear_form_gap_rel"] = std::abs(probe.a - probe.b) / probe.a;
    r.counts["multiplicity"] = pencil.multiplicity;

    r.flags["pullback_ok"] =
        defect_mean <= tol && defect_mass <= tol && defect_dirichlet <= tol;
    r.flags["rayleigh_ok"] = pencil.lambda_min >= 1.0 - tol;
    r.flags["equality_direction_ok"] =
        std::abs(probe.ell) <= tol * sphere.scale() &&
        std::abs(probe.a - probe.b) / probe.a <= tol;
    r.pass = r.flags["pullback_ok"] && r.flags["rayleigh_ok"] && r.flags["equality_direction_ok"];
    return r;
}

VerificationReport lichnerowicz_check(const SupportFunction& h, const HarmonicBasis& basis,
                                      const SphereQuadrature& quad, double tol) {
    require(tol > 0.0, "tolerance must be positive");
    const PoincareForms forms = assemble_forms(h, basis, quad);
    const WeingartenData data = reverse_weingarten(h, quad);
    const double alpha = min_principal_curvature(data);
    const int n = quad.dim();
    const double bound = (n - 1) * alpha * alpha;
    const double scale = forms.D.diagonal().maxCoeff();

    VerificationReport r;
    stamp(r, h, quad, basis.max_degree(), tol);

    const PencilResult pencil = constrained_pencil_min(forms.D, forms.G, forms.ell);
    const Matrix margin = forms.D - bound * forms.G;
    const Vector margin_spectrum = constrained_eigenvalues(margin, forms.ell);

    r.scalars["alpha"] = alpha;
    r.scalars["lambda1_estimate"] = pencil.lambda_min;
    r.scalars["bound"] = bound;
    r.scalars["margin_min_eig"] = margin_spectrum[0];
    r.scalars["scale"] = scale;
    r.counts["multiplicity"] = pencil.multiplicity;

    r.flags["bound_ok"] = margin_spectrum[0] >= -tol * scale;
    r.pass = r.flags["bound_ok"];
    return r;
}

VerificationReport equality_case_check(const SupportFunction& h, const Vector& u0,
                                       const SphereQuadrature& quad, double tol) {
    require(tol > 0.0, "tolerance must be positive");
    require(u0.size() == quad.dim(), "direction length must equal the dimension");
    require(u0.norm() > 0.0, "direction must be non-zero");
    const WeingartenData data = reverse_weingarten(h, quad);
    if (!data.is_strictly_convex())
        throw InvalidBodyError("equality_case_check: body is not strictly convex");
    const LinearProbe probe = linear_direction_probe(data, u0, quad);

    VerificationReport r;
    stamp(r, h, quad, 0, tol);
    r.scalars["ell_residual"] = std::abs(probe.ell);
    r.scalars["form_gap_rel"] = std::abs(probe.a - probe.b) / probe.a;
    r.scalars["dirichlet_value"] = probe.a;
    r.scalars["mass_value"] = probe.b;
    r.flags["mean_zero_ok"] = std::abs(probe.ell) <= tol;
    r.flags["equality_ok"] = std::abs(probe.a - probe.b) / probe.a <= tol;
    r.pass = r.flags["mean_zero_ok"] && r.flags["equality_ok"];
    return r;
}

} // namespace bmp
