#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dilkit/cli.hpp"
#include "dilkit/verify.hpp"

namespace {

using dilkit::Complex;
using dilkit::DiscModel;
using dilkit::QuadraticForm;
using dilkit::RealLinearMap;

std::vector<double> parse_reals(const std::string& text, std::size_t count,
                                const char* what) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        out.push_back(std::stod(item));
    if (out.size() != count)
        throw CLI::ValidationError(
            std::string(what) + " wants " + std::to_string(count) +
            " comma-separated reals, got '" + text + "'");
    return out;
}

RealLinearMap parse_matrix(const std::string& text) {
    auto v = parse_reals(text, 4, "--matrix");
    return {v[0], v[1], v[2], v[3]};
}

Complex parse_complex(const std::string& text, const char* what) {
    auto v = parse_reals(text, 2, what);
    return {v[0], v[1]};
}

QuadraticForm parse_form(const std::string& text) {
    auto v = parse_reals(text, 3, "--form");
    return {v[0], v[1], v[2]};
}

DiscModel parse_model(const std::string& text, const char* what) {
    if (text == "klein")
        return DiscModel::klein;
    if (text == "poincare")
        return DiscModel::poincare;
    throw CLI::ValidationError(std::string(what) +
                               " must be 'klein' or 'poincare'");
}

int emit(const dilkit::cli::CommandResult& result, bool as_json) {
    if (as_json) {
        std::cout << result.output.dump() << "\n";
    } else {
        for (const auto& [key, value] : result.output.items())
            std::cout << key << " = " << value.dump() << "\n";
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex dilatation toolkit: quadratic forms on the plane, "
                 "Klein/Poincare disc models, Mobius actions, and a seeded "
                 "verification harness"};
    app.require_subcommand(1);

    std::string matrix_arg, point_arg, form_arg, tau_arg, basis_arg;
    std::string from_arg = "klein", to_arg = "poincare";
    std::string property_arg;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    double tol = 0.0;
    bool as_json = true;
    bool serial = false;

    auto add_json_flag = [&](CLI::App* cmd) {
        cmd->add_flag("--json,!--no-json", as_json,
                      "emit a single JSON document (default on)");
    };

    CLI::App* mu = app.add_subcommand(
        "mu", "complex dilatation of a real 2x2 matrix");
    mu->add_option("--matrix", matrix_arg, "m11,m12,m21,m22 row-major")
        ->required();
    add_json_flag(mu);

    CLI::App* convert = app.add_subcommand(
        "convert", "convert a disc point between Klein and Poincare models");
    convert->add_option("--point", point_arg, "re,im")->required();
    convert->add_option("--from", from_arg, "klein|poincare");
    convert->add_option("--to", to_arg, "klein|poincare");
    add_json_flag(convert);

    CLI::App* pullback = app.add_subcommand(
        "pullback", "pull a quadratic form back along a linear map");
    pullback->add_option("--matrix", matrix_arg, "m11,m12,m21,m22 row-major");
    pullback->add_option("--tau", tau_arg,
                         "re,im of a multiplication map z -> tau*z");
    pullback->add_option("--form", form_arg, "a,b,c")->required();
    add_json_flag(pullback);

    CLI::App* diagonalize = app.add_subcommand(
        "diagonalize", "axis coefficients and rotation angle of a form");
    diagonalize->add_option("--form", form_arg, "a,b,c")->required();
    add_json_flag(diagonalize);

    CLI::App* automorphism = app.add_subcommand(
        "automorphism", "disc automorphism induced by an invertible map");
    automorphism->add_option("--matrix", matrix_arg, "m11,m12,m21,m22")
        ->required();
    add_json_flag(automorphism);

    CLI::App* tensor = app.add_subcommand(
        "tensor", "basis-independent dilatation tensor coefficient");
    tensor->add_option("--matrix", matrix_arg, "m11,m12,m21,m22")->required();
    tensor->add_option("--basis", basis_arg, "re,im of the source basis")
        ->required();
    add_json_flag(tensor);

    CLI::App* verify = app.add_subcommand(
        "verify", "run seeded randomized checks of a named property");
    verify->add_option("--property", property_arg, "property id")->required();
    verify->add_option("--trials", trials, "number of trials");
    verify->add_option("--seed", seed, "stream seed");
    verify->add_option("--tol", tol, "override the property tolerance");
    verify->add_flag("--serial", serial, "run the serial reference path");
    add_json_flag(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (mu->parsed())
            return emit(dilkit::cli::cmd_mu(parse_matrix(matrix_arg)),
                        as_json);
        if (convert->parsed())
            return emit(dilkit::cli::cmd_convert(
                            parse_complex(point_arg, "--point"),
                            parse_model(from_arg, "--from"),
                            parse_model(to_arg, "--to")),
                        as_json);
        if (pullback->parsed()) {
            QuadraticForm q = parse_form(form_arg);
            if (!matrix_arg.empty() && !tau_arg.empty())
                throw CLI::ValidationError(
                    "pullback wants --matrix or --tau, not both");
            if (!matrix_arg.empty())
                return emit(
                    dilkit::cli::cmd_pullback(parse_matrix(matrix_arg), q),
                    as_json);
            if (!tau_arg.empty())
                return emit(dilkit::cli::cmd_pullback(
                                parse_complex(tau_arg, "--tau"), q),
                            as_json);
            throw CLI::ValidationError("pullback wants --matrix or --tau");
        }
        if (diagonalize->parsed())
            return emit(dilkit::cli::cmd_diagonalize(parse_form(form_arg)),
                        as_json);
        if (automorphism->parsed())
            return emit(
                dilkit::cli::cmd_automorphism(parse_matrix(matrix_arg)),
                as_json);
        if (tensor->parsed())
            return emit(dilkit::cli::cmd_tensor(
                            parse_matrix(matrix_arg),
                            parse_complex(basis_arg, "--basis")),
                        as_json);
        if (verify->parsed()) {
            std::optional<double> tol_opt;
            if (tol > 0.0)
                tol_opt = tol;
            return emit(dilkit::cli::cmd_verify(
                            property_arg, trials, seed, tol_opt,
                            serial ? dilkit::RunMode::serial
                                   : dilkit::RunMode::parallel),
                        as_json);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
