#include "dilkit/framed.hpp"

#include <stdexcept>

#include "dilkit/dilatation.hpp"

namespace dilkit {

namespace {

void require_basis(const FramedLine& line) {
    if (line.basis == Complex{0.0, 0.0})
        throw std::invalid_argument("framed line needs a nonzero basis");
}

} // namespace

Complex coordinate_map(const FramedLine& line, Complex w) {
    require_basis(line);
    return w / line.basis;
}

double form_qv(const FramedLine& line, Complex w) {
    require_basis(line);
    return std::norm(w / line.basis);
}

PoincarePoint dilatation_wrt_bases(const RealLinearMap& map,
                                   const FramedLine& src,
                                   const FramedLine& dst) {
    require_basis(src);
    require_basis(dst);
    // z |-> coordinate in dst of T(src.basis * z).
    RealLinearMap composite =
        compose(RealLinearMap::multiplication(1.0 / dst.basis),
                compose(map, RealLinearMap::multiplication(src.basis)));
    return poincare_dilatation(composite);
}

DilatationTensor dilatation_tensor(const RealLinearMap& map,
                                   const FramedLine& src) {
    PoincarePoint pi = dilatation_wrt_bases(map, src, FramedLine::reference());
    Complex a = src.basis;
    return {pi.value * (a / std::conj(a))};
}

} // namespace dilkit
