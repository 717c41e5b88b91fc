// Sparse counting polynomials in up to three dummy exponents (X, Y, Z) with
// exact unsigned-64 coefficients and mandatory overflow detection.
#ifndef GEOSPEC_POLY_HPP
#define GEOSPEC_POLY_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace geospec {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("counting coefficient overflow (exceeds 2^64-1)");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("counting coefficient overflow (exceeds 2^64-1)");
    return r;
}

/// Exponent tuple (i, j, h); slots beyond the arity stay zero.
struct Exponents {
    std::array<std::uint16_t, 3> e{0, 0, 0};
    auto operator<=>(const Exponents&) const = default;
};

inline Exponents exps(unsigned i, unsigned j = 0, unsigned h = 0) {
    return Exponents{{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j),
                      static_cast<std::uint16_t>(h)}};
}

/// Sparse exact-integer polynomial; stored terms have strictly positive
/// coefficients, sorted lexicographically by exponent.
class CountingPolynomial {
public:
    using TermMap = std::map<Exponents, std::uint64_t>;

    explicit CountingPolynomial(int arity) : arity_(arity) {
        if (arity < 1 || arity > 3) throw std::invalid_argument("polynomial arity must be 1..3");
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    std::uint64_t coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Exponents& e, std::uint64_t c) {
        if (c == 0) return;
        check_exponents(e);
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) it->second = checked_add(it->second, c);
    }

    /// *this += p shifted by the monomial X^s0 Y^s1 Z^s2 (the recursion kernel).
    void add_shifted(const CountingPolynomial& p, const Exponents& shift) {
        for (const auto& [e, c] : p.terms_) {
            Exponents moved{{static_cast<std::uint16_t>(e.e[0] + shift.e[0]),
                             static_cast<std::uint16_t>(e.e[1] + shift.e[1]),
                             static_cast<std::uint16_t>(e.e[2] + shift.e[2])}};
            add_term(moved, c);
        }
    }

    std::uint64_t total_mass() const {
        std::uint64_t m = 0;
        for (const auto& [e, c] : terms_) m = checked_add(m, c);
        return m;
    }

    bool operator==(const CountingPolynomial&) const = default;

private:
    void check_exponents(const Exponents& e) const {
        for (int v = arity_; v < 3; ++v)
            if (e.e[v] != 0)
                throw std::invalid_argument("exponent set on inactive variable");
    }

    int arity_;
    TermMap terms_;
};

/// Evaluates the given variable at 1: zeroes its exponent and merges terms.
/// var: 0 = X, 1 = Y, 2 = Z. Throws if the variable is not active.
CountingPolynomial marginalize(const CountingPolynomial& p, int var);

}  // namespace geospec

#endif
