#include "bmp/polynomial.hpp"

#include <cmath>

namespace bmp {

namespace {

constexpr int kMaxPow = 64;

// powers[c][e] = x_c^e, for e up to deg.
void fill_powers(const Vector& x, int deg, double powers[3][kMaxPow]) {
    for (int c = 0; c < x.size(); ++c) {
        powers[c][0] = 1.0;
        for (int e = 1; e <= deg; ++e) powers[c][e] = powers[c][e - 1] * x[c];
    }
    for (int c = static_cast<int>(x.size()); c < 3; ++c) powers[c][0] = 1.0;
}

} // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int dim, int degree, const CoeffMap& coeffs)
    : dim_(dim), degree_(degree) {
    terms_.reserve(coeffs.size());
    for (const auto& [exp, c] : coeffs) {
        if (c == 0.0) continue;
        terms_.push_back({exp, c});
    }
}

double HomogeneousPolynomial::value(const Vector& x) const {
    double powers[3][kMaxPow];
    fill_powers(x, degree_, powers);
    double v = 0.0;
    for (const Term& t : terms_)
        v += t.coeff * powers[0][t.exp[0]] * powers[1][t.exp[1]] * powers[2][t.exp[2]];
    return v;
}

Vector HomogeneousPolynomial::gradient(const Vector& x) const {
    double v;
    Vector g;
    Matrix h;
    jet(x, v, g, h);
    return g;
}

Matrix HomogeneousPolynomial::hessian(const Vector& x) const {
    double v;
    Vector g;
    Matrix h;
    jet(x, v, g, h);
    return h;
}

void HomogeneousPolynomial::jet(const Vector& x, double& v, Vector& g, Matrix& h) const {
    const int n = dim_;
    double powers[3][kMaxPow];
    fill_powers(x, degree_, powers);
    v = 0.0;
    g = Vector::Zero(n);
    h = Matrix::Zero(n, n);
    for (const Term& t : terms_) {
        const auto& e = t.exp;
        const double mono = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
        v += t.coeff * mono;
        for (int a = 0; a < n; ++a) {
            if (e[a] == 0) continue;
            double ga = t.coeff * e[a];
            for (int c = 0; c < n; ++c) ga *= powers[c][c == a ? e[c] - 1 : e[c]];
            g[a] += ga;
            for (int b = a; b < n; ++b) {
                if (b != a && e[b] == 0) continue;
                if (b == a && e[a] < 2) continue;
                const double factor = t.coeff * e[a] * ((b == a) ? (e[a] - 1) : e[b]);
                std::array<int, 3> ee = e;
                ee[a] -= 1;
                ee[b] -= 1;
                h(a, b) += factor * powers[0][ee[0]] * powers[1][ee[1]] * powers[2][ee[2]];
            }
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) h(b, a) = h(a, b);
}

HomogeneousPolynomial HomogeneousPolynomial::laplacian() const {
    CoeffMap out;
    for (const Term& t : terms_) {
        for (int a = 0; a < dim_; ++a) {
            if (t.exp[a] < 2) continue;
            std::array<int, 3> e = t.exp;
            e[a] -= 2;
            out[e] += t.coeff * t.exp[a] * (t.exp[a] - 1);
        }
    }
    return HomogeneousPolynomial(dim_, degree_ >= 2 ? degree_ - 2 : 0, out);
}

double HomogeneousPolynomial::max_abs_coeff() const {
    double m = 0.0;
    for (const Term& t : terms_) m = std::max(m, std::abs(t.coeff));
    return m;
}

HomogeneousPolynomial::CoeffMap poly_product(const HomogeneousPolynomial::CoeffMap& a,
                                             const HomogeneousPolynomial::CoeffMap& b) {
    HomogeneousPolynomial::CoeffMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            out[e] += ca * cb;
        }
    return out;
}

void poly_axpy(HomogeneousPolynomial::CoeffMap& dst, double scale,
               const HomogeneousPolynomial::CoeffMap& src) {
    for (const auto& [e, c] : src) dst[e] += scale * c;
}

Jet homogeneous_jet(const HomogeneousPolynomial& poly, double a, const Vector& u) {
    const int n = poly.dim();
    Jet j;
    Vector gp;
    Matrix hp;
    poly.jet(u, j.value, gp, hp);
    // P(x) |x|^a at |x| = 1: grad |x|^a = a u, hess |x|^a = a I + a(a-2) u u^T.
    j.grad = gp + a * j.value * u;
    j.hess = hp + a * (gp * u.transpose() + u * gp.transpose())
             + j.value * (a * Matrix::Identity(n, n) + a * (a - 2.0) * (u * u.transpose()));
    return j;
}

} // namespace bmp
