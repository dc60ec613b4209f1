// Acceptance suite: every certified property of the toolkit at its stated
// tolerance, one pass/fail line each. Runs in well under two minutes at the
// default resolutions.

#include "bmp/certify.hpp"
#include "bmp/fields.hpp"
#include "bmp/forms.hpp"
#include "bmp/pencil.hpp"
#include "bmp/variation.hpp"
#include "bmp/weingarten.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <string>

using namespace bmp;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                seconds, error.empty() ? "" : " error: ", error.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool expect(bool cond, const char* what, double got, double bound) {
    if (!cond)
        std::printf("       failed: %s (got %.6e, bound %.6e)\n", what, got, bound);
    return cond;
}

SupportFunction from_json(const std::string& text, int dim) {
    return SupportFunction(parse_body_spec(text), dim);
}

const char* kBall = R"({"type":"ball","radius":1})";
const char* kEllipsoid = R"({"type":"ellipsoid","semiaxes":[1,1.5,2]})";
const char* kPerturbed = R"({"type":"harmonic_perturbation","base":{"type":"ball","radius":1},)"
                         R"("coefficients":{"2,0":0.08}})";

constexpr double kFourPi = 4.0 * std::numbers::pi;

} // namespace

int main() {
    const SphereQuadrature quad3 = build_quadrature(3, 24);
    const SphereQuadrature quad2 = build_quadrature(2, 128);

    criterion(1, "sharp constant on the unit sphere (n=3 and n=2)", [&] {
        const HarmonicBasis basis3 = build_basis(3, 8);
        const PoincareForms f3 = assemble_forms(from_json(kBall, 3), basis3, quad3);
        const PencilResult p3 = constrained_pencil_min(f3.A, f3.B, f3.ell);
        bool ok = expect(std::abs(p3.lambda_min - 1.0) <= 1e-9, "n=3 |lambda-1|",
                         std::abs(p3.lambda_min - 1.0), 1e-9);
        ok &= expect(p3.multiplicity == 3, "n=3 multiplicity", p3.multiplicity, 3);

        const HarmonicBasis basis2 = build_basis(2, 8);
        const PoincareForms f2 = assemble_forms(from_json(kBall, 2), basis2, quad2);
        const PencilResult p2 = constrained_pencil_min(f2.A, f2.B, f2.ell);
        ok &= expect(std::abs(p2.lambda_min - 1.0) <= 1e-10, "n=2 |lambda-1|",
                     std::abs(p2.lambda_min - 1.0), 1e-10);
        ok &= expect(p2.multiplicity == 2, "n=2 multiplicity", p2.multiplicity, 2);
        return ok;
    });

    criterion(2, "constrained inequality on non-spherical bodies", [&] {
        const HarmonicBasis basis = build_basis(3, 8);
        bool ok = true;
        for (const char* body : {kEllipsoid, kPerturbed}) {
            const PoincareForms f = assemble_forms(from_json(body, 3), basis, quad3);
            const double scale = f.scale();
            const PencilResult p = constrained_pencil_min(f.A, f.B, f.ell);
            ok &= expect(p.lambda_min >= 1.0 - 1e-7, "lambda_min", p.lambda_min, 1.0 - 1e-7);
            const Vector gap = constrained_eigenvalues(f.A - f.B, f.ell);
            ok &= expect(gap[0] >= -1e-7 * scale, "min eig of A-B", gap[0], -1e-7 * scale);
            for (int k = 1; k <= 3; ++k) {
                ok &= expect(std::abs(f.ell[k]) <= 1e-8, "degree-1 constraint residual",
                             std::abs(f.ell[k]), 1e-8);
                ok &= expect((f.A - f.B).col(k).norm() <= 1e-8, "degree-1 gap residual",
                             (f.A - f.B).col(k).norm(), 1e-8);
            }
        }
        return ok;
    });

    criterion(3, "equality direction on the ellipsoid", [&] {
        const Vector u0 = Vector::Constant(3, 1.0 / std::sqrt(3.0));
        const VerificationReport r =
            equality_case_check(from_json(kEllipsoid, 3), u0, quad3, 1e-9);
        bool ok = expect(r.scalars.at("ell_residual") <= 1e-9, "constraint residual",
                         r.scalars.at("ell_residual"), 1e-9);
        ok &= expect(r.scalars.at("form_gap_rel") <= 1e-9, "relative form gap",
                     r.scalars.at("form_gap_rel"), 1e-9);
        return ok && r.pass;
    });

    criterion(4, "boundary and sphere forms agree for all basis pairs (L=4)", [&] {
        const HarmonicBasis basis = build_basis(3, 4);
        const SupportFunction h = from_json(kEllipsoid, 3);
        const PoincareForms sphere = assemble_forms(h, basis, quad3);
        const PoincareForms boundary = assemble_boundary_forms(h, basis, quad3);
        const auto defect = [](const Matrix& a, const Matrix& b) {
            return (a - b).cwiseAbs().maxCoeff() / a.cwiseAbs().maxCoeff();
        };
        bool ok = expect(defect(sphere.A, boundary.A) <= 1e-10, "Dirichlet defect",
                         defect(sphere.A, boundary.A), 1e-10);
        ok &= expect(defect(sphere.B, boundary.B) <= 1e-10, "mass defect",
                     defect(sphere.B, boundary.B), 1e-10);
        const double mean_defect = (sphere.ell - boundary.ell).cwiseAbs().maxCoeff()
                                   / sphere.ell.cwiseAbs().maxCoeff();
        ok &= expect(mean_defect <= 1e-10, "mean defect", mean_defect, 1e-10);
        return ok;
    });

    criterion(5, "volume formula: ball, ellipsoid, translation invariance", [&] {
        const double v_ball = volume(from_json(kBall, 3), quad3);
        bool ok = expect(std::abs(v_ball - kFourPi / 3.0) <= 1e-12, "unit ball volume",
                         std::abs(v_ball - kFourPi / 3.0), 1e-12);
        const double v_ell = volume(from_json(kEllipsoid, 3), quad3);
        ok &= expect(std::abs(v_ell - kFourPi) <= 1e-8 * kFourPi, "ellipsoid volume",
                     std::abs(v_ell - kFourPi), 1e-8 * kFourPi);
        const double v_moved = volume(from_json(
            R"({"type":"translate","inner":{"type":"ellipsoid","semiaxes":[1,1.5,2]},)"
            R"("vector":[5,7,-2]})", 3), quad3);
        ok &= expect(std::abs(v_moved - v_ell) <= 1e-10 * v_ell, "translation invariance",
                     std::abs(v_moved - v_ell), 1e-10 * v_ell);
        return ok;
    });

    criterion(6, "first/second variations vs finite differences (20 random pairs)", [&] {
        const HarmonicBasis basis = build_basis(3, 4);
        std::mt19937 rng(20240815);
        std::uniform_real_distribution<double> axis(0.8, 2.2);
        std::uniform_real_distribution<double> coeff(-0.15, 0.15);
        std::uniform_real_distribution<double> bulk(0.2, 0.6);
        std::uniform_int_distribution<int> which(0, 1);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);

        bool ok = true;
        int checked = 0;
        while (checked < 20) {
            SupportFunction body = [&]() -> SupportFunction {
                if (which(rng) == 0) {
                    char buf[160];
                    std::snprintf(buf, sizeof(buf),
                                  R"({"type":"ellipsoid","semiaxes":[%g,%g,%g]})",
                                  axis(rng), axis(rng), axis(rng));
                    return from_json(buf, 3);
                }
                char buf[220];
                std::snprintf(buf, sizeof(buf),
                              R"({"type":"harmonic_perturbation","base":)"
                              R"({"type":"ball","radius":1.2},)"
                              R"("coefficients":{"2,1":%g,"3,-2":%g}})",
                              coeff(rng), coeff(rng));
                return from_json(buf, 3);
            }();
            if (!validate_c2plus(body, quad3).first) continue;
            ++checked;

            auto phi = std::make_shared<CombinationField>();
            phi->add(bulk(rng), std::make_shared<ConstantField>(1.0));
            for (int k = 0; k < 3; ++k)
                phi->add(coeff(rng), std::make_shared<HarmonicField>(basis[pick(rng)]));

            const auto F = [&](double s) {
                return volume(SupportFunction::perturbed(body, phi, s), quad3);
            };
            const double f1 = first_variation(body, *phi, quad3);
            const double fd1 = (F(1e-4) - F(-1e-4)) / 2e-4;
            ok &= expect(std::abs(f1 - fd1) <= 1e-6 * std::abs(f1), "first variation",
                         std::abs(f1 - fd1) / std::abs(f1), 1e-6);

            const double f2 = second_variation(body, *phi, quad3);
            const double fd2 = (F(1e-3) - 2.0 * F(0.0) + F(-1e-3)) / 1e-6;
            ok &= expect(std::abs(f2 - fd2) <= 1e-4 * std::abs(f2), "second variation",
                         std::abs(f2 - fd2) / std::abs(f2), 1e-4);
        }

        // Translation directions: both derivatives vanish.
        const SupportFunction ell = from_json(kEllipsoid, 3);
        const double f0 = volume(ell, quad3);
        const LinearField lin(Vector::Constant(3, 1.0 / std::sqrt(3.0)));
        const double f1 = first_variation(ell, lin, quad3);
        const double f2 = second_variation(ell, lin, quad3);
        ok &= expect(std::abs(f1) <= 1e-9 * 3.0 * f0, "f'(0) for a translation",
                     std::abs(f1), 1e-9 * 3.0 * f0);
        ok &= expect(std::abs(f2) <= 1e-9 * 6.0 * f0, "f''(0) for a translation",
                     std::abs(f2), 1e-9 * 6.0 * f0);
        return ok;
    });

    criterion(7, "midpoint concavity of the volume root on 33-point grids", [&] {
        const std::vector<double> grid = uniform_grid(33);
        const SupportFunction ball = from_json(kBall, 3);

        const BmScanResult ell =
            bm_concavity_scan(ball, from_json(kEllipsoid, 3), grid, quad3);
        bool ok = expect(ell.all_valid && ell.min_margin >= -1e-10, "ball-ellipsoid margin",
                         ell.min_margin, -1e-10);

        const BmScanResult moved = bm_concavity_scan(
            ball,
            from_json(R"({"type":"translate","inner":{"type":"ball","radius":1},)"
                      R"("vector":[0.6,-0.3,0.2]})", 3),
            grid, quad3);
        ok &= expect(std::abs(moved.min_margin) <= 1e-12, "ball-translate margin",
                     std::abs(moved.min_margin), 1e-12);

        const BmScanResult scaled = bm_concavity_scan(
            ball,
            from_json(R"({"type":"scale","inner":{"type":"ball","radius":1},"factor":3})", 3),
            grid, quad3);
        ok &= expect(std::abs(scaled.min_margin) <= 1e-12, "ball-homothet margin",
                     std::abs(scaled.min_margin), 1e-12);
        return ok;
    });

    criterion(8, "cofactor identities pointwise; weak divergence defect (L=4)", [&] {
        bool ok = true;
        for (const char* body : {kEllipsoid, kPerturbed}) {
            const WeingartenData data = reverse_weingarten(from_json(body, 3), quad3);
            double worst_trace = 0.0, worst_adj = 0.0;
            for (std::size_t i = 0; i < data.size(); ++i) {
                const double contraction = data.cofactor(i).cwiseProduct(data.Q(i)).sum();
                worst_trace = std::max(worst_trace,
                                       std::abs(contraction - 2.0 * data.det(i))
                                           / std::abs(data.det(i)));
                const Matrix product = data.det(i) * data.inverse(i);
                worst_adj = std::max(worst_adj,
                                     (data.cofactor(i) - product).cwiseAbs().maxCoeff()
                                         / data.cofactor(i).cwiseAbs().maxCoeff());
            }
            ok &= expect(worst_trace <= 1e-10, "trace identity", worst_trace, 1e-10);
            ok &= expect(worst_adj <= 1e-10, "cofactor-inverse identity", worst_adj, 1e-10);
        }
        const HarmonicBasis basis = build_basis(3, 4);
        const Matrix s = weak_divergence_matrix(from_json(kEllipsoid, 3), basis, quad3);
        const double defect = (s - s.transpose()).cwiseAbs().maxCoeff();
        ok &= expect(defect <= 1e-8, "weak divergence defect", defect, 1e-8);
        return ok;
    });

    criterion(9, "eigenvalue bound from the least principal curvature", [&] {
        const HarmonicBasis basis = build_basis(3, 8);
        const VerificationReport ball = lichnerowicz_check(from_json(kBall, 3), basis, quad3, 1e-9);
        bool ok = expect(std::abs(ball.scalars.at("lambda1_estimate") - 2.0) <= 1e-9,
                         "unit ball spectral estimate",
                         std::abs(ball.scalars.at("lambda1_estimate") - 2.0), 1e-9);
        const VerificationReport ell =
            lichnerowicz_check(from_json(kEllipsoid, 3), basis, quad3, 1e-9);
        ok &= expect(ell.scalars.at("margin_min_eig") >= -1e-9 * ell.scalars.at("scale"),
                     "ellipsoid margin", ell.scalars.at("margin_min_eig"),
                     -1e-9 * ell.scalars.at("scale"));
        return ok && ball.pass && ell.pass;
    });

    criterion(10, "convergence: certified scalars stable under refinement", [&] {
        const SphereQuadrature fine = build_quadrature(3, 48);
        const HarmonicBasis basis = build_basis(3, 4);
        bool ok = true;
        for (const char* body : {kEllipsoid, kPerturbed}) {
            const SupportFunction h = from_json(body, 3);

            const double v24 = volume(h, quad3);
            const double v48 = volume(h, fine);
            ok &= expect(std::abs(v24 - v48) <= 1e-8 * v48, "volume drift",
                         std::abs(v24 - v48) / v48, 1e-8);

            const PoincareForms f24 = assemble_forms(h, basis, quad3);
            const PoincareForms f48 = assemble_forms(h, basis, fine);
            const double l24 = constrained_pencil_min(f24.A, f24.B, f24.ell).lambda_min;
            const double l48 = constrained_pencil_min(f48.A, f48.B, f48.ell).lambda_min;
            ok &= expect(std::abs(l24 - l48) <= 1e-8, "constrained minimum drift",
                         std::abs(l24 - l48), 1e-8);

            const double e24 = constrained_pencil_min(f24.D, f24.G, f24.ell).lambda_min;
            const double e48 = constrained_pencil_min(f48.D, f48.G, f48.ell).lambda_min;
            ok &= expect(std::abs(e24 - e48) <= 1e-8 * e48, "spectral estimate drift",
                         std::abs(e24 - e48) / e48, 1e-8);

            const auto drift = [](const Matrix& a, const Matrix& b) {
                return (a - b).cwiseAbs().maxCoeff() / b.cwiseAbs().maxCoeff();
            };
            const double worst = std::max({drift(f24.A, f48.A), drift(f24.B, f48.B),
                                           drift(f24.G, f48.G), drift(f24.D, f48.D)});
            ok &= expect(worst <= 1e-8, "form matrix drift", worst, 1e-8);
        }

        // Basis enlargement is monotone for the constrained minimum.
        const SupportFunction ell = from_json(kEllipsoid, 3);
        const PoincareForms f4 = assemble_forms(ell, build_basis(3, 4), quad3);
        const PoincareForms f8 = assemble_forms(ell, build_basis(3, 8), quad3);
        const double l4 = constrained_pencil_min(f4.A, f4.B, f4.ell).lambda_min;
        const double l8 = constrained_pencil_min(f8.A, f8.B, f8.ell).lambda_min;
        ok &= expect(l8 <= l4 + 1e-10, "monotone under basis enlargement", l8 - l4, 1e-10);
        return ok;
    });

    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
