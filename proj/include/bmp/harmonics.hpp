#pragma once

#include "bmp/polynomial.hpp"
#include "bmp/quadrature.hpp"
#include "bmp/types.hpp"

#include <string>
#include <vector>

namespace bmp {

/// One real orthonormal spherical harmonic, stored as a harmonic homogeneous
/// polynomial P of its degree; on the sphere the function is P itself, and
/// off the sphere the 0-homogeneous extension is P(x)/|x|^degree.
struct BasisFunction {
    int degree = 0;
    HomogeneousPolynomial poly;

    double value(const Vector& u) const { return poly.value(u); }
    /// Jet of the 0-homogeneous extension at unit u.
    Jet jet0(const Vector& u) const { return homogeneous_jet(poly, -degree, u); }
    /// Jet of the 1-homogeneous extension at unit u.
    Jet jet1(const Vector& u) const { return homogeneous_jet(poly, 1.0 - degree, u); }
};

/// Real orthonormal harmonics up to a maximal degree.
///
/// n=2 ordering: 1/sqrt(2pi), then cos k / sin k pairs for k = 1..L
///   (normalized by 1/sqrt(pi)); size 2L+1.
/// n=3 ordering: degrees l = 0..L; within a degree the zonal element first,
///   then cos/sin pairs for m = 1..l; size (L+1)^2.
class HarmonicBasis {
public:
    int dim() const { return dim_; }
    int max_degree() const { return max_degree_; }
    std::size_t size() const { return funcs_.size(); }
    const BasisFunction& operator[](std::size_t i) const { return funcs_[i]; }

    /// Index of the element with degree l and signed order m (n=3):
    /// m = 0 zonal, m > 0 cosine, m < 0 sine. For n=2 pass the signed wave
    /// number as l and m = 0.
    std::size_t index_of(int l, int m = 0) const;

private:
    friend HarmonicBasis build_basis(int dim, int max_degree);
    int dim_ = 0;
    int max_degree_ = 0;
    std::vector<BasisFunction> funcs_;
};

/// Builds the basis above. Requires dim in {2,3} and max_degree >= 1.
HarmonicBasis build_basis(int dim, int max_degree);

/// Single harmonic by degree and signed order, same conventions as
/// HarmonicBasis::index_of. Unit L2 norm on the sphere.
BasisFunction make_harmonic(int dim, int l, int m = 0);

/// Parses a perturbation-coefficient key: "k" (signed, n=2) or "l,m"
/// (m signed, n=3). Returns {l, m}.
std::pair<int, int> parse_harmonic_key(const std::string& key, int dim);

} // namespace bmp
