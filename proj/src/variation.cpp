#include "bmp/variation.hpp"

#include <cmath>
#include <limits>

namespace bmp {

namespace {

void require_valid(const WeingartenData& data, const char* who) {
    if (!data.is_strictly_convex())
        throw InvalidBodyError(std::string(who) + ": body is not strictly convex");
}

// Curvature contribution of phi at one node: tangent restriction of the
// Hessian of the 1-homogeneous extension, i.e. phi_ij + phi delta_ij.
Matrix perturbation_block(const Jet& j0, const Vector& u, const Matrix& frame) {
    const Jet j1 = jet0_to_jet1(j0, u);
    Matrix m = frame.transpose() * j1.hess * frame;
    return 0.5 * (m + m.transpose());
}

} // namespace

double first_variation(const SupportFunction& h, const ScalarField& phi,
                       const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    require_valid(data, "first_variation");
    double sum = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i)
        sum += quad.weight(i) * phi.value(quad.node(i)) * data.det(i);
    return sum;
}

double second_variation(const SupportFunction& h, const ScalarField& phi,
                        const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    require_valid(data, "second_variation");
    double sum = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const Jet j0 = phi.jet0(quad.node(i));
        const Matrix block = perturbation_block(j0, quad.node(i), quad.frame(i));
        sum += quad.weight(i) * j0.value * data.cofactor(i).cwiseProduct(block).sum();
    }
    return sum;
}

VariationResult variation_profile(const SupportFunction& h, const ScalarField& phi,
                                  const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    require_valid(data, "variation_profile");
    const int n = quad.dim();

    VariationResult r;
    double f0 = 0.0, f1 = 0.0, f2 = 0.0, max_block_norm = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const Vector& u = quad.node(i);
        const double w = quad.weight(i);
        const Jet j0 = phi.jet0(u);
        const Matrix block = perturbation_block(j0, u, quad.frame(i));
        f0 += w * data.support(i) * data.det(i);
        f1 += w * j0.value * data.det(i);
        f2 += w * j0.value * data.cofactor(i).cwiseProduct(block).sum();
        const Eigen::SelfAdjointEigenSolver<Matrix> es(block);
        max_block_norm = std::max(max_block_norm,
                                  es.eigenvalues().cwiseAbs().maxCoeff());
    }
    r.f0 = f0 / n;
    r.f1 = f1;
    r.f2 = f2;
    const double inv_n = 1.0 / n;
    r.g2 = inv_n * (inv_n - 1.0) * std::pow(r.f0, inv_n - 2.0) * r.f1 * r.f1
           + inv_n * std::pow(r.f0, inv_n - 1.0) * r.f2;
    r.safe_step = max_block_norm > 0.0
                      ? data.min_eigenvalue() / max_block_norm
                      : std::numeric_limits<double>::infinity();
    return r;
}

std::vector<double> uniform_grid(std::size_t points) {
    require(points >= 3, "t-grid needs at least 3 points");
    std::vector<double> t(points);
    for (std::size_t i = 0; i < points; ++i)
        t[i] = static_cast<double>(i) / static_cast<double>(points - 1);
    return t;
}

BmScanResult bm_concavity_scan(const SupportFunction& h0, const SupportFunction& h1,
                               const std::vector<double>& t_grid,
                               const SphereQuadrature& quad) {
    require(h0.dim() == h1.dim(), "bodies must share the dimension");
    BmScanResult result;
    result.t = t_grid;
    result.g.resize(t_grid.size());
    const double inv_n = 1.0 / quad.dim();

    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        const SupportFunction blend =
            SupportFunction::combination({{1.0 - t, h0}, {t, h1}});
        const WeingartenData data = reverse_weingarten(blend, quad);
        if (!data.is_strictly_convex()) {
            result.all_valid = false;
            result.g[i] = std::numeric_limits<double>::quiet_NaN();
            continue;
        }
        result.g[i] = std::pow(volume(data, quad), inv_n);
    }

    if (!result.all_valid) {
        result.min_margin = std::numeric_limits<double>::quiet_NaN();
        return result;
    }
    double min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < t_grid.size(); ++a) {
        for (std::size_t b = a + 2; b < t_grid.size(); b += 2) {
            const std::size_t mid = (a + b) / 2;
            const double margin = result.g[mid] - 0.5 * (result.g[a] + result.g[b]);
            min_margin = std::min(min_margin, margin);
        }
    }
    result.min_margin = min_margin;
    return result;
}

double weak_divergence_defect(const SupportFunction& h, const ScalarField& f,
                              const ScalarField& g, const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    require_valid(data, "weak_divergence_defect");
    double s_fg = 0.0, s_gf = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const Vector& u = quad.node(i);
        const Matrix& frame = quad.frame(i);
        const double w = quad.weight(i);
        const Jet jf = f.jet0(u);
        const Jet jg = g.jet0(u);
        const Matrix hess_f = covariant_hessian(jf, frame);
        const Matrix hess_g = covariant_hessian(jg, frame);
        s_fg += w * jf.value * data.cofactor(i).cwiseProduct(hess_g).sum();
        s_gf += w * jg.value * data.cofactor(i).cwiseProduct(hess_f).sum();
    }
    return std::abs(s_fg - s_gf);
}

Matrix weak_divergence_matrix(const SupportFunction& h, const HarmonicBasis& basis,
                              const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    require_valid(data, "weak_divergence_matrix");
    const std::size_t nb = basis.size();
    Matrix s = Matrix::Zero(nb, nb);
    for (std::size_t i = 0; i < quad.size(); ++i) {
        const Vector& u = quad.node(i);
        const Matrix& frame = quad.frame(i);
        const double w = quad.weight(i);
        Vector values(nb);
        Vector weighted_lap(nb); // cofactor-contracted covariant Hessians
        for (std::size_t m = 0; m < nb; ++m) {
            const Jet j0 = basis[m].jet0(u);
            values[m] = j0.value;
            weighted_lap[m] = data.cofactor(i).cwiseProduct(covariant_hessian(j0, frame)).sum();
        }
        s += w * (values * weighted_lap.transpose());
    }
    return s;
}

} // namespace bmp
