#include "bmp/fields.hpp"

namespace bmp {

Jet jet0_to_jet1(const Jet& j0, const Vector& u) {
    const int n = static_cast<int>(u.size());
    Jet j1;
    j1.value = j0.value;
    j1.grad = j0.grad + j0.value * u;
    j1.hess = j0.hess + j0.grad * u.transpose() + u * j0.grad.transpose()
              + j0.value * (Matrix::Identity(n, n) - u * u.transpose());
    return j1;
}

Jet jet1_to_jet0(const Jet& j1, const Vector& u) {
    const int n = static_cast<int>(u.size());
    Jet j0;
    j0.value = j1.value;
    j0.grad = j1.grad - j1.value * u;
    j0.hess = j1.hess - j1.grad * u.transpose() - u * j1.grad.transpose()
              + j1.value * (3.0 * (u * u.transpose()) - Matrix::Identity(n, n));
    return j0;
}

Vector covariant_gradient(const Jet& jet0, const Matrix& frame) {
    return frame.transpose() * jet0.grad;
}

Matrix covariant_hessian(const Jet& jet0, const Matrix& frame) {
    Matrix m = frame.transpose() * jet0.hess * frame;
    return 0.5 * (m + m.transpose());
}

Vector covariant_gradient(const ScalarField& f, const Vector& u, const Matrix& frame) {
    return covariant_gradient(f.jet0(u), frame);
}

Matrix covariant_hessian(const ScalarField& f, const Vector& u, const Matrix& frame) {
    return covariant_hessian(f.jet0(u), frame);
}

Jet LinearField::jet0(const Vector& u) const {
    const int n = static_cast<int>(u.size());
    Jet j;
    j.value = u.dot(u0_);
    j.grad = u0_ - j.value * u;
    j.hess = -(u0_ * u.transpose() + u * u0_.transpose())
             + j.value * (3.0 * (u * u.transpose()) - Matrix::Identity(n, n));
    return j;
}

Jet ConstantField::jet0(const Vector& u) const {
    const int n = static_cast<int>(u.size());
    Jet j;
    j.value = c_;
    j.grad = Vector::Zero(n);
    j.hess = Matrix::Zero(n, n);
    return j;
}

Jet CombinationField::jet0(const Vector& u) const {
    const int n = static_cast<int>(u.size());
    Jet j;
    j.value = 0.0;
    j.grad = Vector::Zero(n);
    j.hess = Matrix::Zero(n, n);
    for (const auto& [w, f] : parts_) {
        const Jet p = f->jet0(u);
        j.value += w * p.value;
        j.grad += w * p.grad;
        j.hess += w * p.hess;
    }
    return j;
}

} // namespace bmp
