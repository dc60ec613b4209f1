#include "bmp/body.hpp"

#include "bmp/harmonics.hpp"
#include "bmp/quadrature.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace bmp {

using nlohmann::json;

namespace {

double positive_number(const json& j, const char* what) {
    if (!j.is_number()) throw SpecError(std::string(what) + " must be a number");
    const double v = j.get<double>();
    if (!(v > 0.0) || !std::isfinite(v))
        throw SpecError(std::string(what) + " must be positive and finite");
    return v;
}

std::vector<double> number_list(const json& j, const char* what, bool positive) {
    if (!j.is_array() || j.empty())
        throw SpecError(std::string(what) + " must be a non-empty array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw SpecError(std::string(what) + " must contain numbers only");
        const double v = e.get<double>();
        if (!std::isfinite(v)) throw SpecError(std::string(what) + " must be finite");
        if (positive && !(v > 0.0)) throw SpecError(std::string(what) + " must be positive");
        out.push_back(v);
    }
    return out;
}

BodySpec parse_node(const json& j) {
    if (!j.is_object()) throw SpecError("body spec must be a JSON object");
    if (!j.contains("type") || !j.at("type").is_string())
        throw SpecError("body spec needs a string \"type\" field");
    const std::string type = j.at("type").get<std::string>();

    BodySpec spec;
    if (type == "ball") {
        spec.kind = BodySpec::Kind::Ball;
        if (!j.contains("radius")) throw SpecError("ball needs \"radius\"");
        spec.radius = positive_number(j.at("radius"), "ball radius");
    } else if (type == "ellipsoid") {
        spec.kind = BodySpec::Kind::Ellipsoid;
        if (!j.contains("semiaxes")) throw SpecError("ellipsoid needs \"semiaxes\"");
        spec.semiaxes = number_list(j.at("semiaxes"), "ellipsoid semiaxes", true);
    } else if (type == "translate") {
        spec.kind = BodySpec::Kind::Translate;
        if (!j.contains("inner") || !j.contains("vector"))
            throw SpecError("translate needs \"inner\" and \"vector\"");
        spec.parts.push_back(parse_node(j.at("inner")));
        spec.vector = number_list(j.at("vector"), "translate vector", false);
    } else if (type == "scale") {
        spec.kind = BodySpec::Kind::Scale;
        if (!j.contains("inner") || !j.contains("factor"))
            throw SpecError("scale needs \"inner\" and \"factor\"");
        spec.parts.push_back(parse_node(j.at("inner")));
        spec.factor = positive_number(j.at("factor"), "scale factor");
    } else if (type == "minkowski_sum") {
        spec.kind = BodySpec::Kind::MinkowskiSum;
        if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").empty())
            throw SpecError("minkowski_sum needs a non-empty \"parts\" array");
        for (const auto& p : j.at("parts")) spec.parts.push_back(parse_node(p));
    } else if (type == "harmonic_perturbation") {
        spec.kind = BodySpec::Kind::HarmonicPerturbation;
        if (!j.contains("base") || !j.contains("coefficients"))
            throw SpecError("harmonic_perturbation needs \"base\" and \"coefficients\"");
        spec.parts.push_back(parse_node(j.at("base")));
        const auto& coeffs = j.at("coefficients");
        if (!coeffs.is_object()) throw SpecError("coefficients must be an object");
        for (const auto& [key, val] : coeffs.items()) {
            if (!val.is_number()) throw SpecError("coefficient values must be numbers");
            spec.coefficients.emplace_back(key, val.get<double>());
        }
        std::sort(spec.coefficients.begin(), spec.coefficients.end());
    } else {
        throw SpecError("unknown body type: '" + type + "'");
    }
    return spec;
}

json to_json_node(const BodySpec& s) {
    json j;
    switch (s.kind) {
        case BodySpec::Kind::Ball:
            j["type"] = "ball";
            j["radius"] = s.radius;
            break;
        case BodySpec::Kind::Ellipsoid:
            j["type"] = "ellipsoid";
            j["semiaxes"] = s.semiaxes;
            break;
        case BodySpec::Kind::Translate:
            j["type"] = "translate";
            j["inner"] = to_json_node(s.parts.at(0));
            j["vector"] = s.vector;
            break;
        case BodySpec::Kind::Scale:
            j["type"] = "scale";
            j["inner"] = to_json_node(s.parts.at(0));
            j["factor"] = s.factor;
            break;
        case BodySpec::Kind::MinkowskiSum: {
            j["type"] = "minkowski_sum";
            j["parts"] = json::array();
            for (const auto& p : s.parts) j["parts"].push_back(to_json_node(p));
            break;
        }
        case BodySpec::Kind::HarmonicPerturbation: {
            j["type"] = "harmonic_perturbation";
            j["base"] = to_json_node(s.parts.at(0));
            json c = json::object();
            for (const auto& [k, v] : s.coefficients) c[k] = v;
            j["coefficients"] = c;
            break;
        }
    }
    return j;
}

} // namespace

BodySpec parse_body_spec(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw SpecError(std::string("body spec is not valid JSON: ") + e.what());
    }
    return parse_node(doc);
}

std::string body_spec_to_json(const BodySpec& spec) {
    return to_json_node(spec).dump();
}

// --- evaluation ---

class SupportFunction::Impl {
public:
    virtual ~Impl() = default;
    virtual Jet jet(const Vector& u) const = 0;
    virtual double value(const Vector& u) const { return jet(u).value; }
};

namespace {

using ImplPtr = std::shared_ptr<const SupportFunction::Impl>;

class BallImpl : public SupportFunction::Impl {
public:
    BallImpl(double r, int n) : r_(r), n_(n) {}
    Jet jet(const Vector& u) const override {
        Jet j;
        j.value = r_;
        j.grad = r_ * u;
        j.hess = r_ * (Matrix::Identity(n_, n_) - u * u.transpose());
        return j;
    }
    double value(const Vector&) const override { return r_; }

private:
    double r_;
    int n_;
};

class EllipsoidImpl : public SupportFunction::Impl {
public:
    EllipsoidImpl(const std::vector<double>& semiaxes, int n) : d2_(n) {
        for (int k = 0; k < n; ++k) d2_[k] = semiaxes[k] * semiaxes[k];
    }
    Jet jet(const Vector& u) const override {
        const Vector m = d2_.cwiseProduct(u);
        const double h = std::sqrt(m.dot(u));
        Jet j;
        j.value = h;
        j.grad = m / h;
        j.hess = d2_.asDiagonal().toDenseMatrix() / h - (m * m.transpose()) / (h * h * h);
        return j;
    }
    double value(const Vector& u) const override {
        return std::sqrt(d2_.cwiseProduct(u).dot(u));
    }

private:
    Vector d2_;
};

class LinearImpl : public SupportFunction::Impl {
public:
    explicit LinearImpl(Vector v) : v_(std::move(v)) {}
    Jet jet(const Vector& u) const override {
        Jet j;
        j.value = u.dot(v_);
        j.grad = v_;
        j.hess = Matrix::Zero(v_.size(), v_.size());
        return j;
    }
    double value(const Vector& u) const override { return u.dot(v_); }

private:
    Vector v_;
};

class SumImpl : public SupportFunction::Impl {
public:
    explicit SumImpl(std::vector<std::pair<double, ImplPtr>> parts) : parts_(std::move(parts)) {}
    Jet jet(const Vector& u) const override {
        Jet j = parts_.front().second->jet(u);
        j.value *= parts_.front().first;
        j.grad *= parts_.front().first;
        j.hess *= parts_.front().first;
        for (std::size_t i = 1; i < parts_.size(); ++i) {
            const Jet p = parts_[i].second->jet(u);
            const double w = parts_[i].first;
            j.value += w * p.value;
            j.grad += w * p.grad;
            j.hess += w * p.hess;
        }
        return j;
    }
    double value(const Vector& u) const override {
        double v = 0.0;
        for (const auto& [w, p] : parts_) v += w * p->value(u);
        return v;
    }

private:
    std::vector<std::pair<double, ImplPtr>> parts_;
};

class HarmonicTermImpl : public SupportFunction::Impl {
public:
    HarmonicTermImpl(BasisFunction f, double c) : f_(std::move(f)), c_(c) {}
    Jet jet(const Vector& u) const override {
        Jet j = f_.jet1(u);
        j.value *= c_;
        j.grad *= c_;
        j.hess *= c_;
        return j;
    }
    double value(const Vector& u) const override { return c_ * f_.value(u); }

private:
    BasisFunction f_;
    double c_;
};

class FieldPerturbationImpl : public SupportFunction::Impl {
public:
    FieldPerturbationImpl(ImplPtr base, std::shared_ptr<const ScalarField> phi, double s)
        : base_(std::move(base)), phi_(std::move(phi)), s_(s) {}
    Jet jet(const Vector& u) const override {
        Jet j = base_->jet(u);
        const Jet p = jet0_to_jet1(phi_->jet0(u), u);
        j.value += s_ * p.value;
        j.grad += s_ * p.grad;
        j.hess += s_ * p.hess;
        return j;
    }

private:
    ImplPtr base_;
    std::shared_ptr<const ScalarField> phi_;
    double s_;
};

ImplPtr build_impl(const BodySpec& spec, int dim) {
    switch (spec.kind) {
        case BodySpec::Kind::Ball:
            return std::make_shared<BallImpl>(spec.radius, dim);
        case BodySpec::Kind::Ellipsoid:
            require(static_cast<int>(spec.semiaxes.size()) == dim,
                    "ellipsoid semiaxes count must equal the dimension");
            return std::make_shared<EllipsoidImpl>(spec.semiaxes, dim);
        case BodySpec::Kind::Translate: {
            require(static_cast<int>(spec.vector.size()) == dim,
                    "translate vector length must equal the dimension");
            Vector v(dim);
            for (int k = 0; k < dim; ++k) v[k] = spec.vector[k];
            std::vector<std::pair<double, ImplPtr>> parts;
            parts.emplace_back(1.0, build_impl(spec.parts.at(0), dim));
            parts.emplace_back(1.0, std::make_shared<LinearImpl>(std::move(v)));
            return std::make_shared<SumImpl>(std::move(parts));
        }
        case BodySpec::Kind::Scale: {
            std::vector<std::pair<double, ImplPtr>> parts;
            parts.emplace_back(spec.factor, build_impl(spec.parts.at(0), dim));
            return std::make_shared<SumImpl>(std::move(parts));
        }
        case BodySpec::Kind::MinkowskiSum: {
            std::vector<std::pair<double, ImplPtr>> parts;
            parts.reserve(spec.parts.size());
            for (const auto& p : spec.parts) parts.emplace_back(1.0, build_impl(p, dim));
            return std::make_shared<SumImpl>(std::move(parts));
        }
        case BodySpec::Kind::HarmonicPerturbation: {
            std::vector<std::pair<double, ImplPtr>> parts;
            parts.emplace_back(1.0, build_impl(spec.parts.at(0), dim));
            for (const auto& [key, c] : spec.coefficients) {
                const auto [l, m] = parse_harmonic_key(key, dim);
                parts.emplace_back(1.0, std::make_shared<HarmonicTermImpl>(
                                            make_harmonic(dim, l, m), c));
            }
            return std::make_shared<SumImpl>(std::move(parts));
        }
    }
    throw SpecError("unreachable body kind");
}

} // namespace

SupportFunction::SupportFunction(const BodySpec& spec, int dim)
    : impl_(build_impl(spec, dim)), dim_(dim), description_(body_spec_to_json(spec)) {
    require(dim == 2 || dim == 3, "support function: dim must be 2 or 3");
}

SupportFunction::SupportFunction(std::shared_ptr<const Impl> impl, int dim, std::string description)
    : impl_(std::move(impl)), dim_(dim), description_(std::move(description)) {}

Jet SupportFunction::jet(const Vector& u) const { return impl_->jet(u); }

double SupportFunction::value(const Vector& u) const { return impl_->value(u); }

SupportFunction SupportFunction::singleton(const Vector& point) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "singleton{%g,%g,%g}", point[0], point[1],
                  point.size() > 2 ? point[2] : 0.0);
    return SupportFunction(std::make_shared<LinearImpl>(point),
                           static_cast<int>(point.size()), buf);
}

SupportFunction SupportFunction::combination(
    const std::vector<std::pair<double, SupportFunction>>& parts) {
    require(!parts.empty(), "combination needs at least one part");
    const int dim = parts.front().second.dim();
    std::vector<std::pair<double, ImplPtr>> impls;
    std::ostringstream desc;
    for (const auto& [w, h] : parts) {
        require(w >= 0.0, "combination weights must be non-negative");
        require(h.dim() == dim, "combination parts must share the dimension");
        impls.emplace_back(w, h.impl_);
        desc << (impls.size() > 1 ? " + " : "") << w << "*" << h.description();
    }
    return SupportFunction(std::make_shared<SumImpl>(std::move(impls)), dim, desc.str());
}

SupportFunction SupportFunction::perturbed(const SupportFunction& base,
                                           std::shared_ptr<const ScalarField> phi, double s) {
    std::ostringstream desc;
    desc << base.description() << " + " << s << "*phi";
    return SupportFunction(
        std::make_shared<FieldPerturbationImpl>(base.impl_, std::move(phi), s),
        base.dim(), desc.str());
}

Vector gauss_preimage(const SupportFunction& h, const Vector& u) {
    const Jet j = h.jet(u);
    const Matrix frame = tangent_frame(u);
    Matrix q = frame.transpose() * j.hess * frame;
    q = 0.5 * (q + q.transpose());
    const Eigen::SelfAdjointEigenSolver<Matrix> es(q);
    if (es.eigenvalues().minCoeff() < kValidityMargin)
        throw InvalidBodyError("body is not strictly convex at the requested direction");
    return j.grad;
}

} // namespace bmp
