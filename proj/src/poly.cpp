#include "geospec/poly.hpp"

namespace geospec {

CountingPolynomial marginalize(const CountingPolynomial& p, int var) {
    if (var < 0 || var >= p.arity())
        throw std::invalid_argument("marginalize: variable not active in this polynomial");
    // dropping the last active variable lowers the arity (Z:=1 turns a
    // tetrahedron polynomial into a triangle one, and so on)
    int arity = p.arity();
    if (var == arity - 1 && arity > 1) --arity;
    CountingPolynomial out(arity);
    for (const auto& [e, c] : p.terms()) {
        Exponents reduced = e;
        reduced.e[var] = 0;
        out.add_term(reduced, c);
    }
    return out;
}

}  // namespace geospec
