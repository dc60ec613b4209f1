#include "bmp/body.hpp"
#include "bmp/certify.hpp"
#include "bmp/driver.hpp"
#include "bmp/fields.hpp"
#include "bmp/forms.hpp"
#include "bmp/harmonics.hpp"
#include "bmp/pencil.hpp"
#include "bmp/variation.hpp"
#include "bmp/weingarten.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

namespace py = pybind11;
using namespace bmp;

namespace {

class OwnedHarmonicField : public ScalarField {
public:
    explicit OwnedHarmonicField(BasisFunction f) : f_(std::move(f)) {}
    Jet jet0(const Vector& u) const override { return f_.jet0(u); }

private:
    BasisFunction f_;
};

py::dict report_to_dict(const VerificationReport& r) {
    py::dict d;
    d["body"] = r.body;
    d["dim"] = r.dim;
    d["resolution"] = r.resolution;
    d["basis_degree"] = r.basis_degree;
    d["tolerance"] = r.tolerance;
    d["scalars"] = py::cast(r.scalars);
    d["counts"] = py::cast(r.counts);
    d["flags"] = py::cast(r.flags);
    d["pass"] = r.pass;
    return d;
}

} // namespace

PYBIND11_MODULE(bmpoincare, m) {
    m.doc() = "Support-function toolkit for smooth convex bodies: volumes, first and "
              "second volume variations, Brunn-Minkowski concavity scans, and "
              "certification of a constrained Poincare-type inequality on the sphere "
              "and on the body boundary (n = 2, 3)";

    py::register_exception<InvalidBodyError>(m, "InvalidBodyError", PyExc_ValueError);
    py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

    py::class_<SphereQuadrature>(m, "SphereQuadrature")
        .def_property_readonly("dim", &SphereQuadrature::dim)
        .def_property_readonly("degree", &SphereQuadrature::degree)
        .def("__len__", &SphereQuadrature::size)
        .def("node", &SphereQuadrature::node, py::arg("i"))
        .def("weight", &SphereQuadrature::weight, py::arg("i"))
        .def("total_weight", &SphereQuadrature::total_weight);
    m.def("build_quadrature", &build_quadrature, py::arg("dim"), py::arg("resolution"));

    py::class_<HarmonicBasis>(m, "HarmonicBasis")
        .def_property_readonly("dim", &HarmonicBasis::dim)
        .def_property_readonly("max_degree", &HarmonicBasis::max_degree)
        .def("__len__", &HarmonicBasis::size)
        .def("index_of", &HarmonicBasis::index_of, py::arg("l"), py::arg("m") = 0)
        .def("degree", [](const HarmonicBasis& b, std::size_t i) { return b[i].degree; },
             py::arg("i"))
        .def("value", [](const HarmonicBasis& b, std::size_t i, const Vector& u) {
            return b[i].value(u);
        }, py::arg("i"), py::arg("u"));
    m.def("build_basis", &build_basis, py::arg("dim"), py::arg("max_degree"));

    py::class_<SupportFunction>(m, "SupportFunction")
        .def_property_readonly("dim", &SupportFunction::dim)
        .def_property_readonly("description", &SupportFunction::description)
        .def("value", &SupportFunction::value, py::arg("u"))
        .def_static("singleton", &SupportFunction::singleton, py::arg("point"));
    m.def("body_from_json", [](const std::string& text, int dim) {
        return SupportFunction(parse_body_spec(text), dim);
    }, py::arg("text"), py::arg("dim"));

    py::class_<ScalarField, std::shared_ptr<ScalarField>>(m, "ScalarField")
        .def("value", &ScalarField::value, py::arg("u"));
    m.def("linear_field", [](const Vector& u0) -> std::shared_ptr<ScalarField> {
        return std::make_shared<LinearField>(u0);
    }, py::arg("u0"), "phi(u) = (u, u0)");
    m.def("harmonic_field", [](int dim, int l, int m_) -> std::shared_ptr<ScalarField> {
        return std::make_shared<OwnedHarmonicField>(make_harmonic(dim, l, m_));
    }, py::arg("dim"), py::arg("l"), py::arg("m") = 0);

    m.def("validate", &validate_c2plus, py::arg("body"), py::arg("quad"),
          "(is_strictly_convex, least curvature eigenvalue)");
    m.def("volume", py::overload_cast<const SupportFunction&, const SphereQuadrature&>(&volume),
          py::arg("body"), py::arg("quad"));
    m.def("min_principal_curvature",
          py::overload_cast<const SupportFunction&, const SphereQuadrature&>(
              &min_principal_curvature),
          py::arg("body"), py::arg("quad"));
    m.def("gauss_preimage", &gauss_preimage, py::arg("body"), py::arg("u"),
          "boundary point with outer normal u");

    m.def("first_variation", [](const SupportFunction& h, const std::shared_ptr<ScalarField>& phi,
                                const SphereQuadrature& quad) {
        return first_variation(h, *phi, quad);
    }, py::arg("body"), py::arg("phi"), py::arg("quad"));
    m.def("second_variation", [](const SupportFunction& h, const std::shared_ptr<ScalarField>& phi,
                                 const SphereQuadrature& quad) {
        return second_variation(h, *phi, quad);
    }, py::arg("body"), py::arg("phi"), py::arg("quad"));
    m.def("variation_profile", [](const SupportFunction& h,
                                  const std::shared_ptr<ScalarField>& phi,
                                  const SphereQuadrature& quad) {
        const VariationResult r = variation_profile(h, *phi, quad);
        py::dict d;
        d["f0"] = r.f0;
        d["f1"] = r.f1;
        d["f2"] = r.f2;
        d["g2"] = r.g2;
        d["safe_step"] = r.safe_step;
        return d;
    }, py::arg("body"), py::arg("phi"), py::arg("quad"));

    m.def("bm_concavity_scan", [](const SupportFunction& h0, const SupportFunction& h1,
                                  const SphereQuadrature& quad, int t_points) {
        const BmScanResult r = bm_concavity_scan(h0, h1, uniform_grid(t_points), quad);
        py::dict d;
        d["t"] = py::cast(r.t);
        d["g"] = py::cast(r.g);
        d["min_margin"] = r.min_margin;
        d["all_valid"] = r.all_valid;
        return d;
    }, py::arg("body0"), py::arg("body1"), py::arg("quad"), py::arg("t_points") = 33);

    m.def("weak_divergence_defect", [](const SupportFunction& h,
                                       const std::shared_ptr<ScalarField>& f,
                                       const std::shared_ptr<ScalarField>& g,
                                       const SphereQuadrature& quad) {
        return weak_divergence_defect(h, *f, *g, quad);
    }, py::arg("body"), py::arg("f"), py::arg("g"), py::arg("quad"));

    py::class_<PoincareForms>(m, "PoincareForms")
        .def_readonly("A", &PoincareForms::A, "weighted Dirichlet matrix")
        .def_readonly("B", &PoincareForms::B, "weighted mass matrix")
        .def_readonly("G", &PoincareForms::G, "boundary mass matrix")
        .def_readonly("D", &PoincareForms::D, "boundary Dirichlet matrix")
        .def_readonly("ell", &PoincareForms::ell, "volume-form constraint vector")
        .def("scale", &PoincareForms::scale);
    m.def("assemble_forms", &assemble_forms, py::arg("body"), py::arg("basis"), py::arg("quad"));
    m.def("assemble_boundary_forms", &assemble_boundary_forms,
          py::arg("body"), py::arg("basis"), py::arg("quad"));

    m.def("min_constrained_rayleigh", [](const Matrix& a, const Matrix& b, const Vector& ell) {
        const PencilResult r = constrained_pencil_min(a, b, ell);
        return py::make_tuple(r.lambda_min, r.multiplicity, r.witness);
    }, py::arg("A"), py::arg("B"), py::arg("ell"),
       "smallest constrained eigenvalue, its multiplicity and a witness vector");

    m.def("certify_sphere_inequality", [](const SupportFunction& h, const HarmonicBasis& b,
                                          const SphereQuadrature& q, double tol) {
        return report_to_dict(certify_sphere_inequality(h, b, q, tol));
    }, py::arg("body"), py::arg("basis"), py::arg("quad"), py::arg("tolerance") = 1e-7);
    m.def("certify_boundary_form", [](const SupportFunction& h, const HarmonicBasis& b,
                                      const SphereQuadrature& q, double tol) {
        return report_to_dict(certify_boundary_form(h, b, q, tol));
    }, py::arg("body"), py::arg("basis"), py::arg("quad"), py::arg("tolerance") = 1e-7);
    m.def("lichnerowicz_check", [](const SupportFunction& h, const HarmonicBasis& b,
                                   const SphereQuadrature& q, double tol) {
        return report_to_dict(lichnerowicz_check(h, b, q, tol));
    }, py::arg("body"), py::arg("basis"), py::arg("quad"), py::arg("tolerance") = 1e-7);
    m.def("equality_case_check", [](const SupportFunction& h, const Vector& u0,
                                    const SphereQuadrature& q, double tol) {
        return report_to_dict(equality_case_check(h, u0, q, tol));
    }, py::arg("body"), py::arg("u0"), py::arg("quad"), py::arg("tolerance") = 1e-7);

    m.attr("__version__") = "0.1.0";
}
