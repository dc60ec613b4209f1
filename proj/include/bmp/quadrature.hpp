#pragma once

#include "bmp/types.hpp"

#include <cstddef>
#include <vector>

namespace bmp {

/// Quadrature rule on the unit sphere S^{n-1}, n in {2,3}, with positive
/// weights and a deterministic orthonormal tangent frame at every node.
///
/// n=2: equispaced angles, weight 2*pi/resolution each.
/// n=3: Gauss-Legendre latitudes (resolution nodes, poles excluded) times
///      2*resolution equispaced longitudes.
///
/// degree() is the largest d such that every spherical harmonic of degree
/// 1..d integrates to zero exactly (up to roundoff).
class SphereQuadrature {
public:
    int dim() const { return dim_; }
    int degree() const { return degree_; }
    std::size_t size() const { return nodes_.size(); }

    const Vector& node(std::size_t i) const { return nodes_[i]; }
    double weight(std::size_t i) const { return weights_[i]; }
    /// n x (n-1) matrix whose columns are the tangent frame at node i.
    const Matrix& frame(std::size_t i) const { return frames_[i]; }

    double total_weight() const;

private:
    friend SphereQuadrature build_quadrature(int dim, int resolution);
    int dim_ = 0;
    int degree_ = 0;
    std::vector<Vector> nodes_;
    std::vector<double> weights_;
    std::vector<Matrix> frames_;
};

/// Builds the rule described above. Requires dim in {2,3} and resolution >= 4.
SphereQuadrature build_quadrature(int dim, int resolution);

/// Deterministic orthonormal tangent frame at a unit vector u: the coordinate
/// axes least aligned with u, projected to the tangent plane and
/// Gram-Schmidt orthonormalized. Returns an n x (n-1) matrix of columns.
Matrix tangent_frame(const Vector& u);

/// Gauss-Legendre nodes and weights on [-1,1], ascending, exactly symmetric.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

} // namespace bmp
