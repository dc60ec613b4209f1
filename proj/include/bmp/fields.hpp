#pragma once

#include "bmp/harmonics.hpp"
#include "bmp/types.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace bmp {

/// Smooth scalar field on the sphere, presented through the Euclidean
/// derivatives of its 0-homogeneous extension at unit vectors.
class ScalarField {
public:
    virtual ~ScalarField() = default;
    virtual Jet jet0(const Vector& u) const = 0;
    double value(const Vector& u) const { return jet0(u).value; }
};

/// Conversions between the 0- and 1-homogeneous extensions of the same
/// sphere function, at a unit vector u.
Jet jet0_to_jet1(const Jet& j0, const Vector& u);
Jet jet1_to_jet0(const Jet& j1, const Vector& u);

/// Components of the covariant gradient in the given tangent frame
/// (n x (n-1) matrix of orthonormal columns).
Vector covariant_gradient(const Jet& jet0, const Matrix& frame);
/// Covariant Hessian in frame coordinates: the restriction of the Euclidean
/// Hessian of the 0-homogeneous extension to the tangent plane. Symmetric.
Matrix covariant_hessian(const Jet& jet0, const Matrix& frame);

Vector covariant_gradient(const ScalarField& f, const Vector& u, const Matrix& frame);
Matrix covariant_hessian(const ScalarField& f, const Vector& u, const Matrix& frame);

/// phi(u) = (u, u0) for a fixed vector u0.
class LinearField : public ScalarField {
public:
    explicit LinearField(Vector u0) : u0_(std::move(u0)) {}
    Jet jet0(const Vector& u) const override;
    const Vector& direction() const { return u0_; }

private:
    Vector u0_;
};

/// A harmonic-basis element viewed as a field (non-owning).
class HarmonicField : public ScalarField {
public:
    explicit HarmonicField(const BasisFunction& f) : f_(&f) {}
    Jet jet0(const Vector& u) const override { return f_->jet0(u); }
    int degree() const { return f_->degree; }

private:
    const BasisFunction* f_;
};

class ConstantField : public ScalarField {
public:
    explicit ConstantField(double c) : c_(c) {}
    Jet jet0(const Vector& u) const override;

private:
    double c_;
};

/// Finite linear combination of owned fields.
class CombinationField : public ScalarField {
public:
    void add(double weight, std::shared_ptr<const ScalarField> field) {
        parts_.emplace_back(weight, std::move(field));
    }
    Jet jet0(const Vector& u) const override;

private:
    std::vector<std::pair<double, std::shared_ptr<const ScalarField>>> parts_;
};

} // namespace bmp
