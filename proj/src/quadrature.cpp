#include "bmp/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

namespace bmp {

namespace {

// Legendre P_n and P_n' at x via the three-term recurrence.
void legendre_pair(int n, double x, double& p, double& dp) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    p = (n == 0) ? p0 : p1;
    dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

} // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Root in (0,1]; descending i gives ascending nodes after mirroring.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 1.0;
        for (int it = 0; it < 100; ++it) {
            legendre_pair(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_pair(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        weights[n - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

Matrix tangent_frame(const Vector& u) {
    const int n = static_cast<int>(u.size());
    // Axes sorted by |u_k| ascending, ties by index.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.begin() + n,
              [&](int a, int b) { return std::abs(u[a]) != std::abs(u[b])
                                             ? std::abs(u[a]) < std::abs(u[b])
                                             : a < b; });
    Matrix frame(n, n - 1);
    for (int c = 0; c < n - 1; ++c) {
        Vector t = Vector::Zero(n);
        t[order[c]] = 1.0;
        t -= t.dot(u) * u;
        for (int prev = 0; prev < c; ++prev)
            t -= t.dot(frame.col(prev)) * frame.col(prev);
        frame.col(c) = t / t.norm();
    }
    return frame;
}

double SphereQuadrature::total_weight() const {
    return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

SphereQuadrature build_quadrature(int dim, int resolution) {
    require(dim == 2 || dim == 3, "quadrature: dim must be 2 or 3");
    require(resolution >= 4, "quadrature: resolution must be at least 4");

    SphereQuadrature q;
    q.dim_ = dim;

    if (dim == 2) {
        const int m = resolution;
        const double w = 2.0 * std::numbers::pi / m;
        q.degree_ = m - 1;
        q.nodes_.reserve(m);
        for (int k = 0; k < m; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / m;
            Vector u(2);
            u << std::cos(theta), std::sin(theta);
            u /= u.norm();
            q.nodes_.push_back(u);
            q.weights_.push_back(w);
            q.frames_.push_back(tangent_frame(u));
        }
        return q;
    }

    const int n_lat = resolution;
    const int n_lon = 2 * resolution;
    std::vector<double> z, wz;
    gauss_legendre(n_lat, z, wz);
    const double wphi = 2.0 * std::numbers::pi / n_lon;
    q.degree_ = std::min(2 * n_lat - 1, n_lon - 1);
    q.nodes_.reserve(static_cast<std::size_t>(n_lat) * n_lon);
    for (int i = 0; i < n_lat; ++i) {
        const double s = std::sqrt(1.0 - z[i] * z[i]);
        for (int j = 0; j < n_lon; ++j) {
            const double phi = 2.0 * std::numbers::pi * j / n_lon;
            Vector u(3);
            u << s * std::cos(phi), s * std::sin(phi), z[i];
            u /= u.norm();
            q.nodes_.push_back(u);
            q.weights_.push_back(wz[i] * wphi);
            q.frames_.push_back(tangent_frame(u));
        }
    }
    return q;
}

} // namespace bmp
