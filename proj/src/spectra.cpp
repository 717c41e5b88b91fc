#include "geospec/spectra.hpp"

#include <stdexcept>

namespace geospec {

namespace {

void validate_refs(const LinearCode& code, std::span<const Word> refs) {
    if (refs.size() > 2)
        throw std::invalid_argument("forward_spectrum: at most two reference codewords");
    for (const Word& r : refs) {
        if (r.size() != code.n())
            throw std::invalid_argument("reference codeword has wrong length");
        if (!code.contains(r))
            throw std::invalid_argument("reference is not a codeword (parity check failed)");
        if (hamming_weight(r) == 0)
            throw std::invalid_argument("reference codeword must be non-zero");
    }
    if (refs.size() == 2 && hamming_distance(refs[0], refs[1]) == 0)
        throw std::invalid_argument("reference codewords must be distinct");
}

}  // namespace

CountingPolynomial forward_spectrum(const Trellis& trellis, std::span<const Word> refs) {
    const LinearCode& code = trellis.code();
    validate_refs(code, refs);
    const PrimeField f = code.field();
    const int arity = static_cast<int>(refs.size()) + 1;

    std::vector<CountingPolynomial> alpha;
    alpha.emplace_back(arity);
    alpha[0].add_term(exps(0), 1);   // alpha_0(0) = 1

    for (std::size_t t = 0; t < trellis.num_stages(); ++t) {
        std::vector<CountingPolynomial> next(trellis.state_count(t + 1),
                                             CountingPolynomial(arity));
        for (const Branch& b : trellis.section(t).branches) {
            if (alpha[b.from].empty()) continue;
            Exponents gamma;
            gamma.e[0] = b.label != 0;
            for (std::size_t r = 0; r < refs.size(); ++r)
                gamma.e[r + 1] = f.sub(b.label, refs[r][t]) != 0;
            next[b.to].add_shifted(alpha[b.from], gamma);
        }
        alpha = std::move(next);
    }

    CountingPolynomial result = std::move(alpha.at(0));
    if (result.total_mass() != code.size())
        throw std::logic_error("forward_spectrum: coefficient mass != q^k");
    return result;
}

WeightSpectrum wef(const LinearCode& code) {
    Trellis tr = Trellis::build(code);
    return WeightSpectrum{code_id(code), code.q(), code.n(), code.k(),
                          forward_spectrum(tr, {})};
}

TriangleSpectrum tref(const LinearCode& code, const Word& ref1) {
    Trellis tr = Trellis::build(code);
    const Word refs[] = {ref1};
    CountingPolynomial poly = forward_spectrum(tr, refs);
    return TriangleSpectrum{code_id(code), code.q(), code.n(), code.k(),
                            Codeword{ref1, std::nullopt}, hamming_weight(ref1),
                            std::move(poly)};
}

TetrahedronSpectrum teef(const LinearCode& code, const Word& ref1, const Word& ref2) {
    Trellis tr = Trellis::build(code);
    const Word refs[] = {ref1, ref2};
    CountingPolynomial poly = forward_spectrum(tr, refs);
    const int d12 = hamming_distance(ref1, ref2);
    return TetrahedronSpectrum{code_id(code),
                               code.q(),
                               code.n(),
                               code.k(),
                               Codeword{ref1, std::nullopt},
                               Codeword{ref2, std::nullopt},
                               hamming_weight(ref1),
                               hamming_weight(ref2),
                               d12,
                               std::move(poly)};
}

CountingPolynomial brute_force_spectrum(const LinearCode& code, std::span<const Word> refs,
                                        std::uint64_t cap) {
    validate_refs(code, refs);
    const PrimeField f = code.field();
    CountingPolynomial out(static_cast<int>(refs.size()) + 1);
    for (const Codeword& c : code.codewords(cap)) {
        Exponents e;
        e.e[0] = static_cast<std::uint16_t>(hamming_weight(c.symbols));
        for (std::size_t r = 0; r < refs.size(); ++r)
            e.e[r + 1] =
                static_cast<std::uint16_t>(hamming_weight(word_sub(f, c.symbols, refs[r])));
        out.add_term(e, 1);
    }
    return out;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

IdentityCheck sum_check(const std::string& name, std::uint64_t got, std::uint64_t want) {
    return {name, got == want,
            "got " + std::to_string(got) + ", expected " + std::to_string(want)};
}

}  // namespace

IdentityReport check_identities(const WeightSpectrum& ws) {
    IdentityReport rep;
    const std::uint64_t qk = pow_u64(ws.q, ws.k);
    rep.checks.push_back({"A_0 = 1", ws.poly.coeff(exps(0)) == 1, ""});
    std::uint64_t nonzero_sum = 0;
    for (const auto& [e, c] : ws.poly.terms())
        if (e.e[0] >= 1) nonzero_sum = checked_add(nonzero_sum, c);
    rep.checks.push_back(sum_check("sum_{i>=1} A_i = q^k - 1", nonzero_sum, qk - 1));
    if (ws.q == 2 && ws.poly.coeff(exps(static_cast<unsigned>(ws.n))) == 1) {
        bool sym = true;
        for (std::size_t i = 0; i <= ws.n; ++i)
            sym = sym && ws.poly.coeff(exps(static_cast<unsigned>(i))) ==
                             ws.poly.coeff(exps(static_cast<unsigned>(ws.n - i)));
        rep.checks.push_back({"A_i = A_{n-i} (all-one codeword present)", sym, ""});
    }
    return rep;
}

IdentityReport check_identities(const TriangleSpectrum& ts) {
    IdentityReport rep;
    const std::uint64_t qk = pow_u64(ts.q, ts.k);
    std::uint64_t interior = 0;
    for (const auto& [e, c] : ts.poly.terms())
        if (e.e[0] >= 1 && e.e[1] >= 1) interior = checked_add(interior, c);
    rep.checks.push_back(sum_check("sum_{i,j>=1} B_{i,j} = q^k - 2", interior, qk - 2));
    rep.checks.push_back({"boundary term Y^d1 = 1",
                          ts.poly.coeff(exps(0, static_cast<unsigned>(ts.d1))) == 1, ""});
    rep.checks.push_back({"boundary term X^d1 = 1",
                          ts.poly.coeff(exps(static_cast<unsigned>(ts.d1), 0)) == 1, ""});
    if (ts.q == 2 && ts.d1 == static_cast<int>(ts.n)) {
        // all-one reference: B_{i,j} = A_i when i+j = n and 0 otherwise,
        // with A recovered by evaluating B at Y = 1
        CountingPolynomial a = marginalize(ts.poly, 1);
        bool pass = true;
        std::string detail;
        for (const auto& [e, c] : ts.poly.terms()) {
            if (e.e[0] + e.e[1] != ts.n) {
                pass = false;
                detail = "term with i+j != n present";
                break;
            }
            if (a.coeff(exps(e.e[0])) != c) {
                pass = false;
                detail = "B_{i,n-i} != A_i";
                break;
            }
        }
        rep.checks.push_back({"B_{i,j} = A_i iff i+j = n (all-one reference)", pass, detail});
    }
    return rep;
}

IdentityReport check_identities(const TetrahedronSpectrum& tes) {
    IdentityReport rep;
    const std::uint64_t qk = pow_u64(tes.q, tes.k);
    std::uint64_t interior = 0;
    for (const auto& [e, c] : tes.poly.terms())
        if (e.e[0] >= 1 && e.e[1] >= 1 && e.e[2] >= 1) interior = checked_add(interior, c);
    rep.checks.push_back(sum_check("sum_{i,j,h>=1} C_{i,j,h} = q^k - 3", interior, qk - 3));
    rep.checks.push_back(
        {"boundary term Y^d1 Z^d2 = 1",
         tes.poly.coeff(exps(0, static_cast<unsigned>(tes.d1), static_cast<unsigned>(tes.d2))) ==
             1,
         ""});
    rep.checks.push_back(
        {"boundary term X^d1 Z^d12 = 1",
         tes.poly.coeff(exps(static_cast<unsigned>(tes.d1), 0, static_cast<unsigned>(tes.d12))) ==
             1,
         ""});
    rep.checks.push_back(
        {"boundary term X^d2 Y^d12 = 1",
         tes.poly.coeff(exps(static_cast<unsigned>(tes.d2), static_cast<unsigned>(tes.d12), 0)) ==
             1,
         ""});
    return rep;
}

namespace {

nlohmann::ordered_json terms_json(const CountingPolynomial& poly) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : poly.terms()) {
        nlohmann::ordered_json t;
        std::vector<int> exps_out;
        for (int v = 0; v < poly.arity(); ++v) exps_out.push_back(e.e[v]);
        t["e"] = exps_out;
        t["c"] = std::to_string(c);
        terms.push_back(std::move(t));
    }
    return terms;
}

nlohmann::ordered_json header_json(const std::string& kind, const std::string& id, int q,
                                   std::size_t n, std::size_t k) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["code_id"] = id;
    j["q"] = q;
    j["n"] = n;
    j["k"] = k;
    return j;
}

}  // namespace

nlohmann::ordered_json spectrum_json(const WeightSpectrum& ws) {
    auto j = header_json("wef", ws.code_id, ws.q, ws.n, ws.k);
    j["refs"] = nlohmann::ordered_json::array();
    j["terms"] = terms_json(ws.poly);
    return j;
}

nlohmann::ordered_json spectrum_json(const TriangleSpectrum& ts) {
    auto j = header_json("tref", ts.code_id, ts.q, ts.n, ts.k);
    j["refs"] = {{{"weight", ts.d1}}};
    j["terms"] = terms_json(ts.poly);
    return j;
}

nlohmann::ordered_json spectrum_json(const TetrahedronSpectrum& tes) {
    auto j = header_json("teef", tes.code_id, tes.q, tes.n, tes.k);
    j["refs"] = {{{"weight", tes.d1}}, {{"weight", tes.d2}}};
    j["d12"] = tes.d12;
    j["terms"] = terms_json(tes.poly);
    return j;
}

}  // namespace geospec
