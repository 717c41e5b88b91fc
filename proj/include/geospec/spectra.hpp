// Weight, triangle, and tetrahedron enumerating functions via the trellis
// recursion over the counting-polynomial ring, plus a brute-force oracle and
// the sum/symmetry identity checks.
#ifndef GEOSPEC_SPECTRA_HPP
#define GEOSPEC_SPECTRA_HPP

#include <span>
#include <string>
#include <vector>

#include "geospec/code.hpp"
#include "geospec/poly.hpp"
#include "geospec/trellis.hpp"

#include <json.hpp>

namespace geospec {

struct WeightSpectrum {
    std::string code_id;
    int q;
    std::size_t n, k;
    CountingPolynomial poly;   // arity 1: A_i X^i
};

struct TriangleSpectrum {
    std::string code_id;
    int q;
    std::size_t n, k;
    Codeword ref1;
    int d1;                    // W_H(c1)
    CountingPolynomial poly;   // arity 2: B_{i,j} X^i Y^j
};

struct TetrahedronSpectrum {
    std::string code_id;
    int q;
    std::size_t n, k;
    Codeword ref1, ref2;
    int d1, d2, d12;           // W_H(c1), W_H(c2), W_H(c2 - c1)
    CountingPolynomial poly;   // arity 3: C_{i,j,h} X^i Y^j Z^h
};

/// Forward recursion alpha_{t+1}(s) = sum alpha_t(from(b)) * gamma_t(b) over
/// the trellis, with branch monomials X^i [Y^j [Z^h]] built from the branch
/// label and the reference paths' labels. 0, 1 or 2 references select the
/// weight, triangle, or tetrahedron enumerating function.
CountingPolynomial forward_spectrum(const Trellis& trellis, std::span<const Word> refs);

WeightSpectrum wef(const LinearCode& code);
TriangleSpectrum tref(const LinearCode& code, const Word& ref1);
TetrahedronSpectrum teef(const LinearCode& code, const Word& ref1, const Word& ref2);

/// Histogram of (W_H(c), W_H(c - c1), W_H(c - c2)) over all q^k codewords;
/// the independent oracle for forward_spectrum. Enumeration-capped.
CountingPolynomial brute_force_spectrum(const LinearCode& code, std::span<const Word> refs,
                                        std::uint64_t cap = kEnumerationCap);

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// A_0 = 1; sum_{i>=1} A_i = q^k - 1; for binary codes with the all-one
/// codeword, A_i = A_{n-i}.
IdentityReport check_identities(const WeightSpectrum& ws);
/// Sum over i,j >= 1 equals q^k - 2; boundary terms Y^d1 and X^d1 have
/// coefficient 1; with an all-one reference, B_{i,j} = A_i iff i + j = n.
IdentityReport check_identities(const TriangleSpectrum& ts);
/// Sum over i,j,h >= 1 equals q^k - 3, plus the three boundary terms.
IdentityReport check_identities(const TetrahedronSpectrum& tes);

nlohmann::ordered_json spectrum_json(const WeightSpectrum& ws);
nlohmann::ordered_json spectrum_json(const TriangleSpectrum& ts);
nlohmann::ordered_json spectrum_json(const TetrahedronSpectrum& tes);

}  // namespace geospec

#endif
