#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace bmp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Value and Euclidean derivatives of a homogeneous extension, evaluated at a
/// unit vector. Which extension (0- or 1-homogeneous) is context-dependent.
struct Jet {
    double value = 0.0;
    Vector grad;
    Matrix hess;
};

/// Raised when a body fails the strict-convexity check (least eigenvalue of
/// the reverse Weingarten matrix below the validity margin).
class InvalidBodyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on malformed input documents or inconsistent configuration.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Least eigenvalue of the reverse Weingarten matrix below which a body is
/// reported as not strictly convex.
inline constexpr double kValidityMargin = 1e-8;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw SpecError(msg);
}

} // namespace bmp
