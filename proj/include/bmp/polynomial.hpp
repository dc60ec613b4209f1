#pragma once

#include "bmp/types.hpp"

#include <array>
#include <map>
#include <vector>

namespace bmp {

/// Sparse homogeneous polynomial in n in {2,3} variables. The third exponent
/// is always zero when n = 2.
class HomogeneousPolynomial {
public:
    struct Term {
        std::array<int, 3> exp;
        double coeff;
    };
    using CoeffMap = std::map<std::array<int, 3>, double>;

    HomogeneousPolynomial() = default;
    HomogeneousPolynomial(int dim, int degree, const CoeffMap& coeffs);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::vector<Term>& terms() const { return terms_; }

    double value(const Vector& x) const;
    Vector gradient(const Vector& x) const;
    Matrix hessian(const Vector& x) const;
    void jet(const Vector& x, double& v, Vector& g, Matrix& h) const;

    HomogeneousPolynomial laplacian() const;
    double max_abs_coeff() const;

private:
    int dim_ = 0;
    int degree_ = 0;
    std::vector<Term> terms_;
};

/// Map-level helpers used when constructing harmonic polynomials.
HomogeneousPolynomial::CoeffMap poly_product(const HomogeneousPolynomial::CoeffMap& a,
                                             const HomogeneousPolynomial::CoeffMap& b);
void poly_axpy(HomogeneousPolynomial::CoeffMap& dst, double scale,
               const HomogeneousPolynomial::CoeffMap& src);

/// Jet at a unit vector u of P(x) * |x|^a for a homogeneous polynomial P.
/// a = -degree gives the 0-homogeneous extension, a = 1-degree the
/// 1-homogeneous one.
Jet homogeneous_jet(const HomogeneousPolynomial& poly, double a, const Vector& u);

} // namespace bmp
