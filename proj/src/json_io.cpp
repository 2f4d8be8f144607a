#include "dilkit/json_io.hpp"

#include <stdexcept>

namespace dilkit {

Json to_json(Complex z) {
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

Json to_json(const QuadraticForm& q) {
    return Json{{"a", q.a}, {"b", q.b}, {"c", q.c}};
}

Json to_json(const RealLinearMap& map) {
    return Json{{"m", {map.m11, map.m12, map.m21, map.m22}}};
}

namespace {

Json tagged_point(Complex value, DiscModel model) {
    return Json{{"model", to_string(model)},
                {"re", value.real()},
                {"im", value.imag()}};
}

} // namespace

Json to_json(const KleinPoint& p) {
    return tagged_point(p.value, DiscModel::klein);
}

Json to_json(const PoincarePoint& mu) {
    return tagged_point(mu.value, DiscModel::poincare);
}

Json to_json(const HemispherePoint& h) {
    return Json{{"re", h.x.real()}, {"im", h.x.imag()}, {"w", h.w}};
}

Json to_json(const DiscAutomorphism& phi) {
    return Json{{"A", to_json(phi.A)}, {"B", to_json(phi.B)}};
}

Json to_json(const FramedLine& line) {
    return Json{{"basis", to_json(line.basis)}};
}

Json to_json(const DilatationTensor& tensor) {
    return Json{{"coeff", to_json(tensor.coeff)}};
}

Json to_json(const VerificationReport& report) {
    return Json{{"property", report.property},
                {"trials", report.trials},
                {"failures", report.failures},
                {"max_error", report.max_error},
                {"seed", report.seed},
                {"tolerance", report.tolerance},
                {"elapsed_ms", report.elapsed_ms}};
}

Complex complex_from_json(const Json& j) {
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

QuadraticForm form_from_json(const Json& j) {
    return {j.at("a").get<double>(), j.at("b").get<double>(),
            j.at("c").get<double>()};
}

RealLinearMap matrix_from_json(const Json& j) {
    const Json& m = j.at("m");
    if (!m.is_array() || m.size() != 4)
        throw std::invalid_argument("matrix wants 4 row-major entries");
    return {m[0].get<double>(), m[1].get<double>(), m[2].get<double>(),
            m[3].get<double>()};
}

std::pair<Complex, DiscModel> disc_point_from_json(const Json& j) {
    std::string model = j.at("model").get<std::string>();
    if (model != "klein" && model != "poincare")
        throw std::invalid_argument("model must be 'klein' or 'poincare'");
    return {complex_from_json(j),
            model == "klein" ? DiscModel::klein : DiscModel::poincare};
}

} // namespace dilkit
