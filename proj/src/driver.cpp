#include "bmp/driver.hpp"

#include "bmp/body.hpp"
#include "bmp/certify.hpp"
#include "bmp/fields.hpp"
#include "bmp/forms.hpp"
#include "bmp/harmonics.hpp"
#include "bmp/variation.hpp"
#include "bmp/weingarten.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

namespace bmp {

namespace {

JsonValue from_nlohmann(const nlohmann::json& j) {
    using nlohmann::json;
    switch (j.type()) {
        case json::value_t::object: {
            JsonValue::Object o;
            for (const auto& [k, v] : j.items()) o.emplace(k, from_nlohmann(v));
            return JsonValue(std::move(o));
        }
        case json::value_t::array: {
            JsonValue::Array a;
            for (const auto& v : j) a.push_back(from_nlohmann(v));
            return JsonValue(std::move(a));
        }
        case json::value_t::string: return JsonValue(j.get<std::string>());
        case json::value_t::boolean: return JsonValue(j.get<bool>());
        case json::value_t::number_integer:
        case json::value_t::number_unsigned: return JsonValue(j.get<std::int64_t>());
        case json::value_t::number_float: return JsonValue(j.get<double>());
        default: return JsonValue();
    }
}

JsonValue body_echo(const BodySpec& spec) {
    return from_nlohmann(nlohmann::json::parse(body_spec_to_json(spec)));
}

void merge_report(JsonValue& scalars, JsonValue& flags, const VerificationReport& r,
                  const std::string& prefix = "") {
    for (const auto& [k, v] : r.scalars) scalars[prefix + k] = v;
    for (const auto& [k, v] : r.counts) scalars[prefix + k] = static_cast<std::int64_t>(v);
    for (const auto& [k, v] : r.flags) flags[prefix + k] = v;
}

std::string two_digits(std::size_t i) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02zu", i);
    return buf;
}

struct CommandContext {
    RunConfig config;
    BodySpec body;
    SupportFunction support;
    SphereQuadrature quad;
    JsonValue inputs;
};

Vector resolve_u0(const RunConfig& c) {
    Vector u0 = Vector::Zero(c.dim);
    if (c.u0.empty()) {
        u0[0] = 1.0;
        return u0;
    }
    require(static_cast<int>(c.u0.size()) == c.dim, "u0 length must equal the dimension");
    for (int k = 0; k < c.dim; ++k) u0[k] = c.u0[k];
    require(u0.norm() > 0.0, "u0 must be non-zero");
    return u0 / u0.norm();
}

int run_command(CommandContext& ctx, JsonValue& scalars, JsonValue& flags) {
    const RunConfig& c = ctx.config;
    const std::string& cmd = c.command;
    bool pass = true;

    if (cmd == "validate") {
        const auto [valid, min_eig] = validate_c2plus(ctx.support, ctx.quad);
        scalars["min_eigenvalue"] = min_eig;
        scalars["validity_margin"] = kValidityMargin;
        flags["valid"] = valid;
        flags["pass"] = valid;
        return valid ? kExitPass : kExitInvalidBody;
    }

    if (cmd == "volume") {
        const WeingartenData data = reverse_weingarten(ctx.support, ctx.quad);
        scalars["min_eigenvalue"] = data.min_eigenvalue();
        flags["valid"] = data.is_strictly_convex();
        if (!data.is_strictly_convex()) {
            flags["pass"] = false;
            return kExitInvalidBody;
        }
        scalars["volume"] = volume(data, ctx.quad);
        flags["pass"] = true;
        return kExitPass;
    }

    if (cmd == "bm-scan") {
        require(c.body2_json.has_value(), "bm-scan needs a second body (--body2)");
        require(c.t_points >= 3 && c.t_points <= 99, "t-points must be in [3, 99]");
        const BodySpec spec2 = parse_body_spec(*c.body2_json);
        const SupportFunction h1(spec2, c.dim);
        ctx.inputs["body2"] = body_echo(spec2);
        ctx.inputs["t_points"] = static_cast<std::int64_t>(c.t_points);
        const auto [v0, e0] = validate_c2plus(ctx.support, ctx.quad);
        const auto [v1, e1] = validate_c2plus(h1, ctx.quad);
        scalars["min_eigenvalue_body"] = e0;
        scalars["min_eigenvalue_body2"] = e1;
        if (!v0 || !v1) {
            flags["valid"] = false;
            flags["pass"] = false;
            return kExitInvalidBody;
        }
        const BmScanResult scan =
            bm_concavity_scan(ctx.support, h1, uniform_grid(c.t_points), ctx.quad);
        for (std::size_t i = 0; i < scan.g.size(); ++i)
            scalars["g_" + two_digits(i)] = scan.g[i];
        scalars["min_margin"] = scan.min_margin;
        flags["valid"] = true;
        flags["interior_valid"] = scan.all_valid;
        pass = scan.all_valid && scan.min_margin >= -c.tolerance;
        flags["concave_ok"] = pass;
        flags["pass"] = pass;
        return pass ? kExitPass : kExitCheckFailed;
    }

    if (cmd == "variation") {
        std::shared_ptr<const ScalarField> phi;
        bool linear_direction = false;
        if (c.phi_basis.has_value()) {
            const HarmonicBasis basis = build_basis(c.dim, c.basis_degree);
            require(*c.phi_basis >= 0 &&
                        static_cast<std::size_t>(*c.phi_basis) < basis.size(),
                    "phi basis index out of range");
            ctx.inputs["phi_basis"] = static_cast<std::int64_t>(*c.phi_basis);
            struct Owner : ScalarField {
                BasisFunction f;
                Jet jet0(const Vector& u) const override { return f.jet0(u); }
            };
            auto owner = std::make_shared<Owner>();
            owner->f = basis[static_cast<std::size_t>(*c.phi_basis)];
            phi = owner;
        } else {
            const Vector u0 = resolve_u0(c);
            JsonValue::Array arr;
            for (int k = 0; k < c.dim; ++k) arr.push_back(JsonValue(u0[k]));
            ctx.inputs["u0"] = JsonValue(std::move(arr));
            phi = std::make_shared<LinearField>(u0);
            linear_direction = true;
        }
        const VariationResult prof = variation_profile(ctx.support, *phi, ctx.quad);
        scalars["f0"] = prof.f0;
        scalars["f1"] = prof.f1;
        scalars["f2"] = prof.f2;
        scalars["g2"] = prof.g2;
        scalars["safe_step"] = prof.safe_step;
        const int n = c.dim;
        const bool concave_ok = prof.g2 <= c.tolerance * std::pow(prof.f0, 1.0 / n);
        flags["concave_ok"] = concave_ok;
        pass = concave_ok;
        if (linear_direction) {
            const bool f1_zero = std::abs(prof.f1) <= c.tolerance * n * prof.f0;
            const bool f2_zero = std::abs(prof.f2) <= c.tolerance * n * (n - 1) * prof.f0;
            flags["first_variation_zero"] = f1_zero;
            flags["second_variation_zero"] = f2_zero;
            pass = pass && f1_zero && f2_zero;
        }
        flags["pass"] = pass;
        return pass ? kExitPass : kExitCheckFailed;
    }

    const HarmonicBasis basis = build_basis(c.dim, c.basis_degree);

    if (cmd == "poincare") {
        const VerificationReport sphere =
            certify_sphere_inequality(ctx.support, basis, ctx.quad, c.tolerance);
        const VerificationReport boundary =
            certify_boundary_form(ctx.support, basis, ctx.quad, c.tolerance);
        merge_report(scalars, flags, sphere);
        merge_report(scalars, flags, boundary, "boundary_");
        pass = sphere.pass && boundary.pass;
        flags["pass"] = pass;
        return pass ? kExitPass : kExitCheckFailed;
    }

    if (cmd == "lichnerowicz") {
        const VerificationReport r = lichnerowicz_check(ctx.support, basis, ctx.quad, c.tolerance);
        merge_report(scalars, flags, r);
        flags["pass"] = r.pass;
        return r.pass ? kExitPass : kExitCheckFailed;
    }

    if (cmd == "equality") {
        const Vector u0 = resolve_u0(c);
        JsonValue::Array arr;
        for (int k = 0; k < c.dim; ++k) arr.push_back(JsonValue(u0[k]));
        ctx.inputs["u0"] = JsonValue(std::move(arr));
        const VerificationReport r = equality_case_check(ctx.support, u0, ctx.quad, c.tolerance);
        merge_report(scalars, flags, r);
        flags["pass"] = r.pass;
        return r.pass ? kExitPass : kExitCheckFailed;
    }

    if (cmd == "dump-forms") {
        const PoincareForms forms = assemble_forms(ctx.support, basis, ctx.quad);
        scalars["basis_size"] = static_cast<std::int64_t>(basis.size());
        scalars["scale"] = forms.scale();
        scalars["dirichlet_max_diag"] = forms.A.diagonal().maxCoeff();
        flags["pass"] = true;
        if (c.format == "csv") {
            require(!c.output.empty(), "dump-forms with --format csv needs --output PREFIX");
            const auto dump = [&](const std::string& name, const auto& m) {
                const std::string path = c.output + "." + name + ".csv";
                std::ofstream os(path);
                if (!os) throw std::ios_base::failure("cannot open " + path);
                write_csv(os, m);
                if (!os.good()) throw std::ios_base::failure("write failed: " + path);
            };
            dump("A", forms.A);
            dump("B", forms.B);
            dump("ell", forms.ell);
            dump("G", forms.G);
            dump("D", forms.D);
        }
        return kExitPass;
    }

    throw SpecError("unknown command: '" + cmd + "'");
}

} // namespace

int default_resolution(int dim) { return dim == 2 ? 128 : 24; }

RunOutcome run(const RunConfig& config) {
    const auto t_start = std::chrono::steady_clock::now();
    RunOutcome out;
    JsonValue& report = out.report;
    report["command"] = config.command;
    JsonValue scalars{JsonValue::Object{}};
    JsonValue flags{JsonValue::Object{}};
    JsonValue inputs{JsonValue::Object{}};

    try {
        require(config.dim == 2 || config.dim == 3, "dim must be 2 or 3");
        require(config.tolerance > 0.0, "tolerance must be positive");
        require(config.format == "json" || config.format == "csv",
                "format must be json or csv");
        require(config.format == "json" || config.command == "dump-forms",
                "--format csv applies to dump-forms only");
        const int resolution =
            config.resolution > 0 ? config.resolution : default_resolution(config.dim);
        require(config.basis_degree >= 1, "basis degree must be at least 1");

        const BodySpec body = parse_body_spec(config.body_json);
        CommandContext ctx{config, body, SupportFunction(body, config.dim),
                           build_quadrature(config.dim, resolution), JsonValue{}};
        ctx.inputs["body"] = body_echo(ctx.body);
        ctx.inputs["dim"] = static_cast<std::int64_t>(config.dim);
        ctx.inputs["resolution"] = static_cast<std::int64_t>(resolution);
        ctx.inputs["basis_degree"] = static_cast<std::int64_t>(config.basis_degree);
        ctx.inputs["tolerance"] = config.tolerance;
        ctx.inputs["format"] = config.format;

        out.exit_code = run_command(ctx, scalars, flags);
        inputs = std::move(ctx.inputs);
    } catch (const InvalidBodyError& e) {
        flags["valid"] = false;
        flags["pass"] = false;
        std::cerr << "invalid body: " << e.what() << "\n";
        out.exit_code = kExitInvalidBody;
    } catch (const SpecError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        out.exit_code = kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        out.exit_code = kExitIoError;
    }

    report["inputs"] = std::move(inputs);
    report["scalars"] = std::move(scalars);
    report["flags"] = std::move(flags);
    const auto t_end = std::chrono::steady_clock::now();
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(t_end - t_start).count();
    return out;
}

int run_and_emit(const RunConfig& config) {
    const RunOutcome out = run(config);
    const std::string text = out.report.dump();
    if (config.output.empty()) {
        std::cout << text;
        return out.exit_code;
    }
    std::ofstream os(config.output);
    if (!os) {
        std::cerr << "i/o error: cannot open " << config.output << "\n";
        return kExitIoError;
    }
    os << text;
    os.flush();
    if (!os.good()) {
        std::cerr << "i/o error: write failed: " << config.output << "\n";
        return kExitIoError;
    }
    return out.exit_code;
}

} // namespace bmp
