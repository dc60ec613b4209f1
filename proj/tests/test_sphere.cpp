#include "bmp/fields.hpp"
#include "bmp/harmonics.hpp"
#include "bmp/quadrature.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace bmp;
using bmp::testing::fd_jet;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;
} // namespace

TEST_CASE("circle quadrature: equispaced nodes and uniform weights") {
    const SphereQuadrature q = build_quadrature(2, 64);
    CHECK(q.size() == 64);
    for (std::size_t i = 0; i < q.size(); ++i)
        CHECK(q.weight(i) == doctest::Approx(kTwoPi / 64).epsilon(1e-15));
    CHECK(std::abs(q.total_weight() - kTwoPi) < 1e-12);
}

TEST_CASE("sphere quadrature: weights positive, total measure, frames orthonormal") {
    for (const int dim : {2, 3}) {
        const SphereQuadrature q = build_quadrature(dim, 24);
        const double total = dim == 2 ? kTwoPi : kFourPi;
        CHECK(std::abs(q.total_weight() - total) < 1e-12);
        for (std::size_t i = 0; i < q.size(); ++i) {
            CHECK(q.weight(i) > 0.0);
            CHECK(std::abs(q.node(i).norm() - 1.0) < 1e-14);
            const Matrix& f = q.frame(i);
            const Matrix gram = f.transpose() * f;
            CHECK((gram - Matrix::Identity(dim - 1, dim - 1)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((f.transpose() * q.node(i)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("quadrature integrates harmonics of degree 1..degree to zero") {
    for (const int dim : {2, 3}) {
        const SphereQuadrature q = build_quadrature(dim, dim == 2 ? 32 : 8);
        const int max_l = std::min(q.degree(), 15);
        for (int l = 1; l <= max_l; ++l) {
            const int m_lo = dim == 2 ? 0 : -l;
            const int m_hi = dim == 2 ? 0 : l;
            for (int m = m_lo; m <= m_hi; ++m) {
                const BasisFunction f = dim == 2 ? make_harmonic(2, l) : make_harmonic(3, l, m);
                double integral = 0.0;
                for (std::size_t i = 0; i < q.size(); ++i)
                    integral += q.weight(i) * f.value(q.node(i));
                CHECK(std::abs(integral) < 1e-12);
            }
        }
    }
}

TEST_CASE("surface integral of u1^2 over the 2-sphere") {
    const SphereQuadrature q = build_quadrature(3, 24);
    double integral = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i)
        integral += q.weight(i) * q.node(i)[0] * q.node(i)[0];
    CHECK(std::abs(integral - kFourPi / 3.0) < 1e-12);
}

TEST_CASE("quadrature rejects bad arguments") {
    CHECK_THROWS_AS(build_quadrature(4, 24), SpecError);
    CHECK_THROWS_AS(build_quadrature(1, 24), SpecError);
    CHECK_THROWS_AS(build_quadrature(3, 3), SpecError);
}

TEST_CASE("basis sizes and normalization") {
    const HarmonicBasis b2 = build_basis(2, 3);
    CHECK(b2.size() == 7);
    const Vector east = (Vector(2) << 1.0, 0.0).finished();
    CHECK(b2[0].value(east) == doctest::Approx(1.0 / std::sqrt(kTwoPi)));
    // cos k theta / sqrt(pi) at theta = 0
    CHECK(b2[1].value(east) == doctest::Approx(1.0 / std::sqrt(std::numbers::pi)));
    CHECK(b2[2].value(east) == 0.0);

    const HarmonicBasis b3 = build_basis(3, 2);
    CHECK(b3.size() == 9);
    CHECK(build_basis(3, 8).size() == 81);
    CHECK_THROWS_AS(build_basis(3, 0), SpecError);
}

TEST_CASE("basis index lookup follows the declared ordering") {
    const HarmonicBasis b2 = build_basis(2, 3);
    CHECK(b2.index_of(0) == 0);
    CHECK(b2.index_of(2) == 3);
    CHECK(b2.index_of(-2) == 4);
    const HarmonicBasis b3 = build_basis(3, 4);
    CHECK(b3.index_of(0, 0) == 0);
    CHECK(b3.index_of(1, 0) == 1);
    CHECK(b3.index_of(1, 1) == 2);
    CHECK(b3.index_of(1, -1) == 3);
    CHECK(b3.index_of(2, 0) == 4);
    CHECK(b3.index_of(2, -2) == 8);
    for (std::size_t i = 0; i < b3.size(); ++i) CHECK(b3[i].degree <= 4);
}

TEST_CASE("basis polynomials are harmonic") {
    for (const int dim : {2, 3}) {
        const HarmonicBasis basis = build_basis(dim, dim == 2 ? 8 : 6);
        for (std::size_t m = 0; m < basis.size(); ++m) {
            const HomogeneousPolynomial lap = basis[m].poly.laplacian();
            CHECK(lap.max_abs_coeff() < 1e-10 * std::max(1.0, basis[m].poly.max_abs_coeff()));
        }
    }
}

TEST_CASE("Gram matrix under quadrature is the identity") {
    for (const int dim : {2, 3}) {
        const int L = dim == 2 ? 8 : 8;
        const HarmonicBasis basis = build_basis(dim, L);
        const SphereQuadrature q = build_quadrature(dim, dim == 2 ? 64 : 24);
        REQUIRE(q.degree() >= 2 * L);
        Matrix gram = Matrix::Zero(basis.size(), basis.size());
        Vector vals(basis.size());
        for (std::size_t i = 0; i < q.size(); ++i) {
            for (std::size_t m = 0; m < basis.size(); ++m)
                vals[m] = basis[m].value(q.node(i));
            gram += q.weight(i) * (vals * vals.transpose());
        }
        CHECK((gram - Matrix::Identity(basis.size(), basis.size())).cwiseAbs().maxCoeff()
              < 1e-10);
    }
}

TEST_CASE("covariant Hessian trace is the Laplace-Beltrami eigenvalue") {
    std::mt19937 rng(7);
    for (const int dim : {2, 3}) {
        const HarmonicBasis basis = build_basis(dim, 6);
        for (int trial = 0; trial < 8; ++trial) {
            const Vector u = bmp::testing::random_direction(rng, dim);
            const Matrix frame = tangent_frame(u);
            for (std::size_t m = 0; m < basis.size(); ++m) {
                const Jet j0 = basis[m].jet0(u);
                const Matrix hess = covariant_hessian(j0, frame);
                const int l = basis[m].degree;
                CHECK(std::abs(hess.trace() + l * (l + dim - 2) * j0.value) < 1e-9);
            }
        }
    }
}

TEST_CASE("covariant gradient: constant and linear fields") {
    const Vector u = (Vector(3) << 0.0, 1.0, 0.0).finished();
    Matrix frame(3, 2); // {e1, e3}
    frame << 1, 0, 0, 0, 0, 1;

    ConstantField c(3.5);
    CHECK(covariant_gradient(c, u, frame).norm() == 0.0);
    CHECK(covariant_hessian(c, u, frame).norm() == 0.0);

    LinearField lin((Vector(3) << 1.0, 0.0, 0.0).finished());
    const Vector g = covariant_gradient(lin, u, frame);
    CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(g[1]) < 1e-15);
}

TEST_CASE("linear field satisfies hess + value * identity = 0 on the tangent plane") {
    std::mt19937 rng(3);
    for (const int dim : {2, 3}) {
        const Vector u0 = bmp::testing::random_direction(rng, dim) * 1.7;
        LinearField lin(u0);
        for (int trial = 0; trial < 10; ++trial) {
            const Vector u = bmp::testing::random_direction(rng, dim);
            const Matrix frame = tangent_frame(u);
            const Jet j0 = lin.jet0(u);
            const Matrix sum = covariant_hessian(j0, frame)
                               + j0.value * Matrix::Identity(dim - 1, dim - 1);
            CHECK(sum.cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("degree-1 basis elements are singleton support directions") {
    const HarmonicBasis basis = build_basis(3, 1);
    std::mt19937 rng(11);
    for (std::size_t m = 1; m <= 3; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            const Vector u = bmp::testing::random_direction(rng, 3);
            const Matrix frame = tangent_frame(u);
            const Jet j0 = basis[m].jet0(u);
            const Matrix sum =
                covariant_hessian(j0, frame) + j0.value * Matrix::Identity(2, 2);
            CHECK(sum.cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("covariant derivatives match finite differences of the extension") {
    std::mt19937 rng(23);
    for (const int dim : {2, 3}) {
        const HarmonicBasis basis = build_basis(dim, 4);
        const BasisFunction& f = basis[basis.size() - 2];
        HarmonicField field(f);
        const auto ext = bmp::testing::extension_of(field);
        for (int trial = 0; trial < 6; ++trial) {
            const Vector u = bmp::testing::random_direction(rng, dim);
            const Matrix frame = tangent_frame(u);
            const Jet exact = f.jet0(u);
            const Jet fd = fd_jet(ext, u, 1e-4);
            const Vector g_exact = covariant_gradient(exact, frame);
            const Vector g_fd = covariant_gradient(fd, frame);
            CHECK((g_exact - g_fd).norm() <= 1e-6 * std::max(1.0, g_exact.norm()));
            const Matrix h_exact = covariant_hessian(exact, frame);
            const Matrix h_fd = covariant_hessian(fd, frame);
            CHECK((h_exact - h_fd).cwiseAbs().maxCoeff()
                  <= 1e-5 * std::max(1.0, h_exact.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("frame covariance: gradient norm and Hessian spectrum") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    const HarmonicBasis basis = build_basis(3, 5);
    const BasisFunction& f = basis[17];
    for (int trial = 0; trial < 10; ++trial) {
        const Vector u = bmp::testing::random_direction(rng, 3);
        const Matrix frame = tangent_frame(u);
        // Rotate the frame in the tangent plane.
        const double a = angle(rng);
        Matrix rotated(3, 2);
        rotated.col(0) = std::cos(a) * frame.col(0) + std::sin(a) * frame.col(1);
        rotated.col(1) = -std::sin(a) * frame.col(0) + std::cos(a) * frame.col(1);

        const Jet j0 = f.jet0(u);
        CHECK(std::abs(covariant_gradient(j0, frame).norm()
                       - covariant_gradient(j0, rotated).norm()) < 1e-12);
        const Eigen::SelfAdjointEigenSolver<Matrix> e1(covariant_hessian(j0, frame));
        const Eigen::SelfAdjointEigenSolver<Matrix> e2(covariant_hessian(j0, rotated));
        CHECK((e1.eigenvalues() - e2.eigenvalues()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("quadrature exactness for products of basis elements") {
    // Orthogonality relations for combined degree within the quadrature degree.
    const HarmonicBasis basis = build_basis(3, 6);
    const SphereQuadrature q = build_quadrature(3, 8); // degree 15 >= 12
    Matrix gram = Matrix::Zero(basis.size(), basis.size());
    Vector vals(basis.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t m = 0; m < basis.size(); ++m) vals[m] = basis[m].value(q.node(i));
        gram += q.weight(i) * (vals * vals.transpose());
    }
    CHECK((gram - Matrix::Identity(basis.size(), basis.size())).cwiseAbs().maxCoeff() < 1e-10);
}
