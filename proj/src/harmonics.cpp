#include "bmp/harmonics.hpp"

#include <cmath>
#include <numbers>

namespace bmp {

namespace {

using CoeffMap = HomogeneousPolynomial::CoeffMap;

// Coefficients of the Legendre polynomial P_l in one variable.
std::vector<double> legendre_coeffs(int l) {
    std::vector<double> p0{1.0};
    if (l == 0) return p0;
    std::vector<double> p1{0.0, 1.0};
    for (int k = 1; k < l; ++k) {
        std::vector<double> p2(k + 2, 0.0);
        for (std::size_t i = 0; i < p1.size(); ++i)
            p2[i + 1] += (2.0 * k + 1.0) * p1[i] / (k + 1.0);
        for (std::size_t i = 0; i < p0.size(); ++i)
            p2[i] -= static_cast<double>(k) * p0[i] / (k + 1.0);
        p0 = std::move(p1);
        p1 = std::move(p2);
    }
    return p1;
}

std::vector<double> differentiate(std::vector<double> c, int m) {
    for (int j = 0; j < m; ++j) {
        if (c.size() <= 1) return {0.0};
        std::vector<double> d(c.size() - 1, 0.0);
        for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
        c = std::move(d);
    }
    return c;
}

// Re(x+iy)^m and Im(x+iy)^m as polynomials in (x, y).
void sector_pair(int m, CoeffMap& re, CoeffMap& im) {
    re = {{{{0, 0, 0}}, 1.0}};
    im = {};
    for (int k = 0; k < m; ++k) {
        CoeffMap re2, im2;
        for (const auto& [e, c] : re) {
            re2[{e[0] + 1, e[1], e[2]}] += c;
            im2[{e[0], e[1] + 1, e[2]}] += c;
        }
        for (const auto& [e, c] : im) {
            re2[{e[0], e[1] + 1, e[2]}] -= c;
            im2[{e[0] + 1, e[1], e[2]}] += c;
        }
        re = std::move(re2);
        im = std::move(im2);
    }
}

// (x^2 + y^2 + z^2)^p
CoeffMap radius_sq_power(int p) {
    CoeffMap out{{{{0, 0, 0}}, 1.0}};
    const CoeffMap r2{{{{2, 0, 0}}, 1.0}, {{{0, 2, 0}}, 1.0}, {{{0, 0, 2}}, 1.0}};
    for (int k = 0; k < p; ++k) out = poly_product(out, r2);
    return out;
}

// Homogeneous form of r^{l-m} (d^m P_l)(z/r): polynomial in z and r^2.
CoeffMap zonal_factor(int l, int m) {
    const std::vector<double> q = differentiate(legendre_coeffs(l), m);
    CoeffMap out;
    for (std::size_t k = 0; k < q.size(); ++k) {
        if (q[k] == 0.0) continue;
        const int rest = l - m - static_cast<int>(k); // even by parity of P_l
        CoeffMap zk{{{{0, 0, static_cast<int>(k)}}, q[k]}};
        poly_axpy(out, 1.0, poly_product(zk, radius_sq_power(rest / 2)));
    }
    return out;
}

// sqrt((l-m)! / (l+m)!) computed as a running product.
double factorial_ratio_sqrt(int l, int m) {
    double r = 1.0;
    for (int j = l - m + 1; j <= l + m; ++j) r /= static_cast<double>(j);
    return std::sqrt(r);
}

BasisFunction harmonic_2d(int k) {
    const int a = std::abs(k);
    if (a == 0) {
        CoeffMap c{{{{0, 0, 0}}, 1.0 / std::sqrt(2.0 * std::numbers::pi)}};
        return {0, HomogeneousPolynomial(2, 0, c)};
    }
    CoeffMap re, im;
    sector_pair(a, re, im);
    CoeffMap& part = (k > 0) ? re : im;
    CoeffMap scaled;
    poly_axpy(scaled, 1.0 / std::sqrt(std::numbers::pi), part);
    return {a, HomogeneousPolynomial(2, a, scaled)};
}

BasisFunction harmonic_3d(int l, int m) {
    const int a = std::abs(m);
    const double norm = (a == 0)
        ? std::sqrt((2.0 * l + 1.0) / (4.0 * std::numbers::pi))
        : std::sqrt((2.0 * l + 1.0) / (2.0 * std::numbers::pi)) * factorial_ratio_sqrt(l, a);
    CoeffMap zonal = zonal_factor(l, a);
    CoeffMap poly;
    if (a == 0) {
        poly_axpy(poly, norm, zonal);
    } else {
        CoeffMap re, im;
        sector_pair(a, re, im);
        poly_axpy(poly, norm, poly_product((m > 0) ? re : im, zonal));
    }
    return {l, HomogeneousPolynomial(3, l, poly)};
}

} // namespace

BasisFunction make_harmonic(int dim, int l, int m) {
    require(dim == 2 || dim == 3, "harmonics: dim must be 2 or 3");
    if (dim == 2) {
        require(m == 0, "harmonics: n=2 elements are indexed by a single signed wave number");
        require(std::abs(l) <= 32, "harmonics: wave number too large");
        return harmonic_2d(l);
    }
    require(l >= 0 && l <= 32, "harmonics: degree out of range");
    require(std::abs(m) <= l, "harmonics: order exceeds degree");
    return harmonic_3d(l, m);
}

HarmonicBasis build_basis(int dim, int max_degree) {
    require(dim == 2 || dim == 3, "basis: dim must be 2 or 3");
    require(max_degree >= 1, "basis: max_degree must be at least 1");
    require(max_degree <= 32, "basis: max_degree too large");

    HarmonicBasis basis;
    basis.dim_ = dim;
    basis.max_degree_ = max_degree;
    if (dim == 2) {
        basis.funcs_.push_back(harmonic_2d(0));
        for (int k = 1; k <= max_degree; ++k) {
            basis.funcs_.push_back(harmonic_2d(k));
            basis.funcs_.push_back(harmonic_2d(-k));
        }
    } else {
        for (int l = 0; l <= max_degree; ++l) {
            basis.funcs_.push_back(harmonic_3d(l, 0));
            for (int m = 1; m <= l; ++m) {
                basis.funcs_.push_back(harmonic_3d(l, m));
                basis.funcs_.push_back(harmonic_3d(l, -m));
            }
        }
    }
    return basis;
}

std::size_t HarmonicBasis::index_of(int l, int m) const {
    if (dim_ == 2) {
        require(m == 0, "basis: n=2 elements are indexed by a single signed wave number");
        const int a = std::abs(l);
        require(a <= max_degree_, "basis: wave number exceeds max_degree");
        if (a == 0) return 0;
        return static_cast<std::size_t>(2 * a - (l > 0 ? 1 : 0));
    }
    require(l >= 0 && l <= max_degree_, "basis: degree out of range");
    require(std::abs(m) <= l, "basis: order exceeds degree");
    const std::size_t base = static_cast<std::size_t>(l) * l;
    if (m == 0) return base;
    return base + 2 * std::abs(m) - (m > 0 ? 1 : 0);
}

std::pair<int, int> parse_harmonic_key(const std::string& key, int dim) {
    const auto parse_int = [&](const std::string& s) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(s, &pos);
        } catch (const std::exception&) {
            throw SpecError("harmonic coefficient key is not an integer: '" + key + "'");
        }
        require(pos == s.size(), "harmonic coefficient key has trailing characters: '" + key + "'");
        return v;
    };
    const auto comma = key.find(',');
    if (dim == 2) {
        require(comma == std::string::npos, "n=2 harmonic keys use a single signed integer");
        return {parse_int(key), 0};
    }
    require(comma != std::string::npos, "n=3 harmonic keys use the form \"l,m\"");
    const int l = parse_int(key.substr(0, comma));
    const int m = parse_int(key.substr(comma + 1));
    require(l >= 0, "harmonic degree must be non-negative");
    require(std::abs(m) <= l, "harmonic order exceeds degree");
    return {l, m};
}

} // namespace bmp
