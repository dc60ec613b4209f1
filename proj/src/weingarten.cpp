#include "bmp/weingarten.hpp"

#include "bmp/parallel.hpp"

#include <cmath>
#include <limits>

namespace bmp {

namespace {

Matrix adjugate(const Matrix& q) {
    const int k = static_cast<int>(q.rows());
    if (k == 1) {
        Matrix c(1, 1);
        c(0, 0) = 1.0;
        return c;
    }
    Matrix c(2, 2);
    c(0, 0) = q(1, 1);
    c(1, 1) = q(0, 0);
    c(0, 1) = -q(0, 1);
    c(1, 0) = -q(1, 0);
    return c;
}

} // namespace

WeingartenData reverse_weingarten(const SupportFunction& h, const SphereQuadrature& quad) {
    require(h.dim() == quad.dim(), "body and quadrature dimensions differ");
    const std::size_t n = quad.size();
    WeingartenData data;
    data.h_.resize(n);
    data.det_.resize(n);
    data.mineig_.resize(n);
    data.maxeig_.resize(n);
    data.q_.resize(n);
    data.qinv_.resize(n);
    data.cof_.resize(n);

    parallel_chunks(n, 64, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const Vector& u = quad.node(i);
            const Matrix& frame = quad.frame(i);
            const Jet jet = h.jet(u);
            Matrix q = frame.transpose() * jet.hess * frame;
            q = 0.5 * (q + q.transpose());

            const Eigen::SelfAdjointEigenSolver<Matrix> es(q);
            const Vector& eig = es.eigenvalues();
            data.h_[i] = jet.value;
            data.q_[i] = q;
            data.mineig_[i] = eig.minCoeff();
            data.maxeig_[i] = eig.maxCoeff();
            data.det_[i] = (q.rows() == 1) ? q(0, 0)
                                           : q(0, 0) * q(1, 1) - q(0, 1) * q(1, 0);
            data.cof_[i] = adjugate(q);
            if (std::abs(data.det_[i]) > 1e3 * std::numeric_limits<double>::min()) {
                const Vector inv_eig = eig.cwiseInverse();
                data.qinv_[i] = es.eigenvectors() * inv_eig.asDiagonal() *
                                es.eigenvectors().transpose();
            } else {
                data.qinv_[i] = Matrix::Zero(q.rows(), q.cols());
            }
        }
    });

    data.global_min_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        data.global_min_ = std::min(data.global_min_, data.mineig_[i]);
        if (data.mineig_[i] < kValidityMargin) ++data.flagged_;
    }
    return data;
}

std::pair<bool, double> validate_c2plus(const SupportFunction& h, const SphereQuadrature& quad) {
    const WeingartenData data = reverse_weingarten(h, quad);
    return {data.is_strictly_convex(), data.min_eigenvalue()};
}

double volume(const WeingartenData& data, const SphereQuadrature& quad) {
    if (!data.is_strictly_convex())
        throw InvalidBodyError("volume: body is not strictly convex (least curvature eigenvalue "
                               + std::to_string(data.min_eigenvalue()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < quad.size(); ++i)
        sum += quad.weight(i) * data.support(i) * data.det(i);
    return sum / quad.dim();
}

double volume(const SupportFunction& h, const SphereQuadrature& quad) {
    return volume(reverse_weingarten(h, quad), quad);
}

double min_principal_curvature(const WeingartenData& data) {
    if (!data.is_strictly_convex())
        throw InvalidBodyError("principal curvature: body is not strictly convex");
    double max_radius = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i)
        max_radius = std::max(max_radius, data.max_eigenvalue(i));
    return 1.0 / max_radius;
}

double min_principal_curvature(const SupportFunction& h, const SphereQuadrature& quad) {
    return min_principal_curvature(reverse_weingarten(h, quad));
}

} // namespace bmp
