#include "bmp/driver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw CLI::ValidationError("--body", "cannot read file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::vector<double> parse_vector(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw CLI::ValidationError("--u0", "expected comma-separated numbers");
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Support-function toolkit: volume variations, Brunn-Minkowski "
                 "concavity scans and Poincare-type inequality certification "
                 "for smooth convex bodies (n = 2, 3)"};
    app.require_subcommand(1);

    bmp::RunConfig config;
    std::string body_path, body2_path, u0_text;

    const auto add_common = [&](CLI::App* sub, bool needs_basis) {
        sub->add_option("--body", body_path, "body spec JSON file")->required();
        sub->add_option("--dim", config.dim, "ambient dimension (2 or 3)");
        sub->add_option("-r,--resolution", config.resolution,
                        "quadrature resolution (default 24 for n=3, 128 for n=2)");
        if (needs_basis)
            sub->add_option("-L,--basis-degree", config.basis_degree,
                            "harmonic basis degree");
        sub->add_option("--tolerance", config.tolerance, "pass/fail tolerance");
        sub->add_option("-o,--output", config.output, "report path (default stdout)");
        sub->add_option("--format", config.format, "report format: json or csv");
    };

    add_common(app.add_subcommand("validate", "check strict convexity"), false);
    add_common(app.add_subcommand("volume", "volume from the support function"), false);

    CLI::App* bm = app.add_subcommand("bm-scan", "midpoint-concavity scan of the "
                                                 "volume root along a Minkowski segment");
    add_common(bm, false);
    bm->add_option("--body2", body2_path, "second body spec JSON file")->required();
    bm->add_option("--t-points", config.t_points, "grid size on [0,1]");

    CLI::App* var = app.add_subcommand("variation", "first/second volume variation profile");
    add_common(var, true);
    var->add_option("--u0", u0_text, "direction for phi(u) = (u,u0), comma-separated");
    int phi_basis = -1;
    var->add_option("--phi-basis", phi_basis, "use a harmonic basis element as phi");

    add_common(app.add_subcommand("poincare", "certify the constrained Poincare-type "
                                              "inequality (sphere and boundary forms)"),
               true);
    add_common(app.add_subcommand("lichnerowicz", "eigenvalue lower bound from the "
                                                  "least principal curvature"),
               true);
    CLI::App* eq = app.add_subcommand("equality", "equality-direction residuals");
    add_common(eq, false);
    eq->add_option("--u0", u0_text, "direction u0, comma-separated");

    add_common(app.add_subcommand("dump-forms", "assembled Galerkin matrices"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bmp::kExitUsage;
    }

    config.command = app.get_subcommands().front()->get_name();
    try {
        config.body_json = read_file(body_path);
        if (!body2_path.empty()) config.body2_json = read_file(body2_path);
        if (!u0_text.empty()) config.u0 = parse_vector(u0_text);
        if (phi_basis >= 0) config.phi_basis = phi_basis;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return bmp::kExitUsage;
    }

    return bmp::run_and_emit(config);
}
