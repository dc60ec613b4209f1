#include "bmp/pencil.hpp"

#include <cmath>

namespace bmp {

Matrix constraint_kernel_basis(const Vector& ell) {
    const Eigen::Index n = ell.size();
    const double norm = ell.norm();
    require(norm > 0.0, "constraint vector must be non-zero");
    Vector v = ell / norm;
    // Householder vector w with (I - 2 w w^T) v = -sign(v_0) e_0.
    Vector w = v;
    w[0] += (v[0] >= 0.0 ? 1.0 : -1.0);
    const double wn = w.norm();
    Matrix h = Matrix::Identity(n, n);
    if (wn > 0.0) {
        w /= wn;
        h -= 2.0 * (w * w.transpose());
    }
    return h.rightCols(n - 1);
}

PencilResult constrained_pencil_min(const Matrix& A, const Matrix& B, const Vector& ell,
                                    double mult_tol) {
    const Matrix z = constraint_kernel_basis(ell);
    const Matrix ap = z.transpose() * A * z;
    const Matrix bp = z.transpose() * B * z;

    const Eigen::LLT<Matrix> llt(0.5 * (bp + bp.transpose()));
    require(llt.info() == Eigen::Success,
            "projected mass form is not positive definite");
    const Matrix l = llt.matrixL();
    // S = L^{-1} Ap L^{-T}
    Matrix s = l.triangularView<Eigen::Lower>().solve(ap);
    s = l.triangularView<Eigen::Lower>().solve(s.transpose().eval());
    s = 0.5 * (s + s.transpose()).eval();

    const Eigen::SelfAdjointEigenSolver<Matrix> es(s);
    require(es.info() == Eigen::Success, "eigensolver failed to converge");

    PencilResult r;
    r.spectrum = es.eigenvalues();
    r.lambda_min = r.spectrum[0];
    r.multiplicity = 0;
    for (Eigen::Index i = 0; i < r.spectrum.size(); ++i)
        if (r.spectrum[i] - r.lambda_min <= mult_tol) ++r.multiplicity;

    const Vector y = es.eigenvectors().col(0);
    Vector x = l.transpose().triangularView<Eigen::Upper>().solve(y);
    r.witness = z * x;
    r.witness /= r.witness.norm();
    return r;
}

Vector constrained_eigenvalues(const Matrix& M, const Vector& ell) {
    const Matrix z = constraint_kernel_basis(ell);
    Matrix mp = z.transpose() * M * z;
    mp = 0.5 * (mp + mp.transpose()).eval();
    const Eigen::SelfAdjointEigenSolver<Matrix> es(mp);
    require(es.info() == Eigen::Success, "eigensolver failed to converge");
    return es.eigenvalues();
}

} // namespace bmp
