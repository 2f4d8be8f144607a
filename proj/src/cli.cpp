#include "dilkit/cli.hpp"

#include <stdexcept>

#include "dilkit/action.hpp"
#include "dilkit/dilatation.hpp"
#include "dilkit/errors.hpp"
#include "dilkit/framed.hpp"
#include "dilkit/models.hpp"

namespace dilkit::cli {

namespace {

template <typename Fn>
CommandResult guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        int code = e.code() == ErrorCode::unknown_property ? 3 : 2;
        return {code, Json{{"error", to_string(e.code())}}};
    } catch (const std::invalid_argument&) {
        return {2, Json{{"error", "invalid_argument"}}};
    }
}

} // namespace

CommandResult cmd_mu(const RealLinearMap& map) {
    return guarded([&]() -> CommandResult {
        PoincarePoint mu = poincare_dilatation(map);
        AxisData axes = axis_data(map);
        KleinPoint klein = poincare_to_klein(mu);
        return {0, Json{{"mu", to_json(mu.value)},
                        {"axis_ratio", axes.ratio},
                        {"alpha", axes.alpha},
                        {"alpha_defined", axes.alpha_defined},
                        {"klein", to_json(klein.value)}}};
    });
}

CommandResult cmd_convert(Complex point, DiscModel from, DiscModel to) {
    return guarded([&]() -> CommandResult {
        if (std::abs(point) >= 1.0)
            throw Error(ErrorCode::out_of_disc,
                        "point is not inside the disc");
        Complex value = point;
        if (from == DiscModel::klein && to == DiscModel::poincare)
            value = klein_to_poincare(KleinPoint{point}).value;
        else if (from == DiscModel::poincare && to == DiscModel::klein)
            value = poincare_to_klein(PoincarePoint{point}).value;
        Json out{{"model", to_string(to)},
                 {"re", value.real()},
                 {"im", value.imag()}};
        if (near_boundary(point) || near_boundary(value))
            out["near_boundary"] = true;
        return {0, out};
    });
}

CommandResult cmd_pullback(const RealLinearMap& map, const QuadraticForm& q) {
    return guarded([&]() -> CommandResult {
        return {0, to_json(pullback(map, q))};
    });
}

CommandResult cmd_pullback(Complex tau, const QuadraticForm& q) {
    return guarded([&]() -> CommandResult {
        return {0, to_json(mult_pullback(tau, q))};
    });
}

CommandResult cmd_diagonalize(const QuadraticForm& q) {
    return guarded([&]() -> CommandResult {
        DiagonalForm d = diagonalize(q);
        return {0, Json{{"a", d.a}, {"c", d.c}, {"theta", d.theta}}};
    });
}

CommandResult cmd_automorphism(const RealLinearMap& map) {
    return guarded([&]() -> CommandResult {
        return {0, to_json(induced_automorphism(map))};
    });
}

CommandResult cmd_tensor(const RealLinearMap& map, Complex basis) {
    return guarded([&]() -> CommandResult {
        DilatationTensor tensor = dilatation_tensor(map, FramedLine{basis});
        return {0, to_json(tensor)};
    });
}

CommandResult cmd_verify(std::string_view property, std::uint64_t trials,
                         std::uint64_t seed, std::optional<double> tol,
                         RunMode mode) {
    return guarded([&]() -> CommandResult {
        VerificationReport report =
            run_property(property, trials, seed, tol.value_or(0.0), mode);
        return {report.failures == 0 ? 0 : 1, to_json(report)};
    });
}

} // namespace dilkit::cli
