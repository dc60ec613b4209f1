#pragma once

#include "bmp/fields.hpp"
#include "bmp/types.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bmp {

/// Recursive description of a convex body through its support function.
/// Composites compose by support-function addition.
struct BodySpec {
    enum class Kind { Ball, Ellipsoid, Translate, Scale, MinkowskiSum, HarmonicPerturbation };

    Kind kind = Kind::Ball;
    double radius = 0.0;                  // Ball
    std::vector<double> semiaxes;         // Ellipsoid
    std::vector<double> vector;           // Translate
    double factor = 1.0;                  // Scale
    std::vector<BodySpec> parts;          // children: sum parts, or single inner/base
    std::vector<std::pair<std::string, double>> coefficients; // HarmonicPerturbation, sorted by key
};

/// Parses the body JSON document. Validates structure and positivity of
/// size parameters; dimension consistency is checked when the support
/// function is built.
BodySpec parse_body_spec(const std::string& json_text);

/// Canonical JSON serialization (sorted keys, round-trip floats).
std::string body_spec_to_json(const BodySpec& spec);

/// Support function h of a convex body, evaluated through its 1-homogeneous
/// extension H(x) = |x| h(x/|x|). jet() returns H, its Euclidean gradient and
/// Hessian at a unit vector; these satisfy grad.u = h and hess.u = 0.
class SupportFunction {
public:
    class Impl;

    SupportFunction(const BodySpec& spec, int dim);

    int dim() const { return dim_; }
    /// Canonical JSON of the originating spec, or a synthetic description
    /// for fixtures and blends.
    const std::string& description() const { return description_; }

    Jet jet(const Vector& u) const;
    double value(const Vector& u) const;

    /// Support function of the singleton {point}: h(u) = (u, point).
    /// Degenerate (zero curvature); used as the equality-direction fixture.
    static SupportFunction singleton(const Vector& point);
    /// Non-negative combination sum_i w_i h_i (Minkowski combination).
    static SupportFunction combination(const std::vector<std::pair<double, SupportFunction>>& parts);
    /// h + s * phi for a smooth field phi.
    static SupportFunction perturbed(const SupportFunction& base,
                                     std::shared_ptr<const ScalarField> phi, double s);

private:
    SupportFunction(std::shared_ptr<const Impl> impl, int dim, std::string description);

    std::shared_ptr<const Impl> impl_;
    int dim_ = 0;
    std::string description_;
};

/// Inverse Gauss map: the boundary point whose outer normal is u. Equals the
/// gradient of the 1-homogeneous extension. Throws InvalidBodyError if the
/// body is not strictly convex at u.
Vector gauss_preimage(const SupportFunction& h, const Vector& u);

/// A support function viewed as a test field on the sphere.
class SupportField : public ScalarField {
public:
    explicit SupportField(const SupportFunction& h) : h_(&h) {}
    Jet jet0(const Vector& u) const override { return jet1_to_jet0(h_->jet(u), u); }

private:
    const SupportFunction* h_;
};

} // namespace bmp
