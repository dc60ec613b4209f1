#pragma once

#include "bmp/body.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/types.hpp"

#include <cstddef>
#include <vector>

namespace bmp {

/// Per-node curvature data of a body: the reverse Weingarten matrix
/// Q = (h_ij + h delta_ij) in the node frame, its determinant, inverse and
/// cofactor matrix, together with the support value.
///
/// Q is assembled as the tangent-frame restriction of the Euclidean Hessian
/// of the 1-homogeneous extension. The inverse comes from an eigenvalue
/// decomposition and the cofactor matrix from the adjugate, so the identity
/// C = det(Q) Q^{-1} is a genuine cross-check of two routes.
class WeingartenData {
public:
    std::size_t size() const { return det_.size(); }

    double support(std::size_t i) const { return h_[i]; }
    const Matrix& Q(std::size_t i) const { return q_[i]; }
    double det(std::size_t i) const { return det_[i]; }
    const Matrix& inverse(std::size_t i) const { return qinv_[i]; }
    const Matrix& cofactor(std::size_t i) const { return cof_[i]; }
    double min_eigenvalue(std::size_t i) const { return mineig_[i]; }
    double max_eigenvalue(std::size_t i) const { return maxeig_[i]; }

    /// Least eigenvalue of Q over all nodes.
    double min_eigenvalue() const { return global_min_; }
    /// Nodes whose least eigenvalue falls below the validity margin.
    std::size_t flagged_count() const { return flagged_; }
    bool is_strictly_convex() const { return global_min_ >= kValidityMargin; }

private:
    friend WeingartenData reverse_weingarten(const SupportFunction&, const SphereQuadrature&);
    std::vector<double> h_, det_, mineig_, maxeig_;
    std::vector<Matrix> q_, qinv_, cof_;
    double global_min_ = 0.0;
    std::size_t flagged_ = 0;
};

WeingartenData reverse_weingarten(const SupportFunction& h, const SphereQuadrature& quad);

/// (flag, least eigenvalue of Q over nodes); flag is true when the least
/// eigenvalue clears the validity margin.
std::pair<bool, double> validate_c2plus(const SupportFunction& h, const SphereQuadrature& quad);

/// Volume (1/n) * integral of h det(Q). Throws InvalidBodyError when the
/// strict-convexity check fails.
double volume(const SupportFunction& h, const SphereQuadrature& quad);
double volume(const WeingartenData& data, const SphereQuadrature& quad);

/// Least principal curvature over all nodes (grid minimum of the least
/// eigenvalue of Q^{-1}). Throws InvalidBodyError on invalid bodies.
double min_principal_curvature(const SupportFunction& h, const SphereQuadrature& quad);
double min_principal_curvature(const WeingartenData& data);

} // namespace bmp
