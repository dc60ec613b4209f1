#include "bmp/forms.hpp"

#include "bmp/parallel.hpp"

#include <vector>

namespace bmp {

namespace {

struct Partial {
    Matrix A, B, G, D;
    Vector ell;
};

enum class Route { Cofactor, Boundary };

PoincareForms assemble(const SupportFunction& h, const HarmonicBasis& basis,
                       const SphereQuadrature& quad, Route route) {
    require(h.dim() == quad.dim() && basis.dim() == quad.dim(),
            "assemble_forms: dimension mismatch");
    require(quad.degree() >= 2 * basis.max_degree(),
            "assemble_forms: quadrature degree below twice the basis degree");
    const WeingartenData data = reverse_weingarten(h, quad);
    if (!data.is_strictly_convex())
        throw InvalidBodyError("assemble_forms: body is not strictly convex");

    const std::size_t nb = basis.size();
    const std::size_t nq = quad.size();
    const int tdim = quad.dim() - 1;

    constexpr std::size_t kChunk = 64;
    const std::size_t n_chunks = (nq + kChunk - 1) / kChunk;
    std::vector<Partial> partials(n_chunks);

    parallel_chunks(nq, kChunk, [&](std::size_t begin, std::size_t end) {
        Partial p;
        p.A = Matrix::Zero(nb, nb);
        p.B = Matrix::Zero(nb, nb);
        p.G = Matrix::Zero(nb, nb);
        p.D = Matrix::Zero(nb, nb);
        p.ell = Vector::Zero(nb);
        Vector values(nb);
        Matrix grads(nb, tdim);
        for (std::size_t i = begin; i < end; ++i) {
            const Vector& u = quad.node(i);
            const Matrix& frame = quad.frame(i);
            const double w = quad.weight(i);
            for (std::size_t m = 0; m < nb; ++m) {
                const Jet j0 = basis[m].jet0(u);
                values[m] = j0.value;
                grads.row(m) = (frame.transpose() * j0.grad).transpose();
            }
            const double det = data.det(i);
            p.ell += (w * det) * values;
            p.G += (w * det) * (values * values.transpose());
            if (route == Route::Cofactor) {
                const Matrix& cof = data.cofactor(i);
                p.A += w * (grads * cof * grads.transpose());
                p.B += (w * cof.trace()) * (values * values.transpose());
                const Matrix pulled = grads * data.inverse(i); // rows: Q^{-1} grad phi_m
                p.D += (w * det) * (pulled * pulled.transpose());
            } else {
                const Matrix& qinv = data.inverse(i);
                const Matrix pulled = grads * qinv;
                // ((Dnu)^{-1} grad psi_m, grad psi_n) = (Q b_m, b_n), b = Q^{-1} grad phi
                p.A += (w * det) * (pulled * data.Q(i) * pulled.transpose());
                p.B += (w * det * qinv.trace()) * (values * values.transpose());
                p.D += (w * det) * (pulled * pulled.transpose());
            }
        }
        partials[begin / kChunk] = std::move(p);
    });

    PoincareForms f;
    f.dim = quad.dim();
    f.basis_degree = basis.max_degree();
    f.A = Matrix::Zero(nb, nb);
    f.B = Matrix::Zero(nb, nb);
    f.G = Matrix::Zero(nb, nb);
    f.D = Matrix::Zero(nb, nb);
    f.ell = Vector::Zero(nb);
    for (const Partial& p : partials) {
        f.A += p.A;
        f.B += p.B;
        f.G += p.G;
        f.D += p.D;
        f.ell += p.ell;
    }
    f.A = 0.5 * (f.A + f.A.transpose()).eval();
    f.B = 0.5 * (f.B + f.B.transpose()).eval();
    f.G = 0.5 * (f.G + f.G.transpose()).eval();
    f.D = 0.5 * (f.D + f.D.transpose()).eval();
    return f;
}

} // namespace

PoincareForms assemble_forms(const SupportFunction& h, const HarmonicBasis& basis,
                             const SphereQuadrature& quad) {
    return assemble(h, basis, quad, Route::Cofactor);
}

PoincareForms assemble_boundary_forms(const SupportFunction& h, const HarmonicBasis& basis,
                                      const SphereQuadrature& quad) {
    return assemble(h, basis, quad, Route::Boundary);
}

} // namespace bmp
