#include "geospec/code.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace geospec {

int hamming_weight(const Word& w) {
    int wt = 0;
    for (auto s : w) wt += (s != 0);
    return wt;
}

int hamming_distance(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t t = 0; t < u.size(); ++t) d += (u[t] != v[t]);
    return d;
}

Word word_sub(const PrimeField& f, const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("word_sub: length mismatch");
    Word out(u.size());
    for (std::size_t t = 0; t < u.size(); ++t)
        out[t] = static_cast<std::uint8_t>(f.sub(u[t], v[t]));
    return out;
}

Word word_add(const PrimeField& f, const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("word_add: length mismatch");
    Word out(u.size());
    for (std::size_t t = 0; t < u.size(); ++t)
        out[t] = static_cast<std::uint8_t>(f.add(u[t], v[t]));
    return out;
}

LinearCode LinearCode::from_generator(FieldMatrix generator) {
    if (generator.rows == 0 || generator.cols == 0)
        throw std::invalid_argument("generator matrix must have positive dimensions");
    if (generator.rows > generator.cols)
        throw std::invalid_argument("code dimension k exceeds block length n");
    for (auto& e : generator.entries)
        e = static_cast<std::uint8_t>(generator.field.reduce(e));
    FieldMatrix h = parity_from_generator(generator);   // validates full rank
    return LinearCode(std::move(generator), std::move(h));
}

std::uint64_t LinearCode::size() const {
    std::uint64_t total = 1;
    const std::uint64_t base = static_cast<std::uint64_t>(q());
    for (std::size_t i = 0; i < k(); ++i) {
        if (total > (std::uint64_t{1} << 63) / base)
            throw std::overflow_error("q^k exceeds 2^63");
        total *= base;
    }
    return total;
}

Codeword LinearCode::encode(const Word& message) const {
    if (message.size() != k())
        throw std::invalid_argument("encode: message length != k");
    const PrimeField& f = field();
    Word out(n(), 0);
    for (std::size_t j = 0; j < n(); ++j) {
        long long acc = 0;
        for (std::size_t i = 0; i < k(); ++i)
            acc += static_cast<long long>(message[i]) * generator_.at(i, j);
        out[j] = static_cast<std::uint8_t>(f.reduce(acc));
    }
    return Codeword{std::move(out), std::nullopt};
}

Word LinearCode::message_for_index(std::uint64_t index) const {
    // base-q digits, first symbol most significant (lexicographic order)
    Word msg(k(), 0);
    const std::uint64_t base = static_cast<std::uint64_t>(q());
    for (std::size_t i = k(); i-- > 0;) {
        msg[i] = static_cast<std::uint8_t>(index % base);
        index /= base;
    }
    return msg;
}

std::vector<Codeword> LinearCode::codewords(std::uint64_t cap) const {
    const std::uint64_t total = size();
    if (total > cap)
        throw std::invalid_argument("codeword enumeration cap exceeded: q^k = " +
                                    std::to_string(total));
    std::vector<Codeword> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) {
        Codeword c = encode(message_for_index(i));
        c.index = i;
        out.push_back(std::move(c));
    }
    return out;
}

bool LinearCode::contains(const Word& w) const {
    if (w.size() != n()) return false;
    const PrimeField& f = field();
    for (std::size_t r = 0; r < parity_.rows; ++r) {
        long long acc = 0;
        for (std::size_t t = 0; t < n(); ++t)
            acc += static_cast<long long>(parity_.at(r, t)) * w[t];
        if (f.reduce(acc) != 0) return false;
    }
    return true;
}

std::uint64_t code_fingerprint(const LinearCode& code) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h](std::uint64_t byte) {
        h ^= byte & 0xff;
        h *= 0x100000001b3ull;
    };
    mix(static_cast<std::uint64_t>(code.q()));
    mix(code.n());
    mix(code.k());
    for (auto e : code.generator().entries) mix(e);
    return h;
}

std::string code_id(const LinearCode& code) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = code_fingerprint(code);
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[h & 0xf];
        h >>= 4;
    }
    return s;
}

LinearCode parse_generator_text(std::istream& in) {
    long long q = 0, n = 0, k = 0;
    if (!(in >> q >> n >> k))
        throw std::invalid_argument("matrix file: expected header 'q n k'");
    if (q < 2 || q > 251)
        throw std::invalid_argument("matrix file: q out of range");
    if (!is_prime(static_cast<int>(q)))
        throw std::invalid_argument("matrix file: q = " + std::to_string(q) +
                                    " is not prime (extension fields are not supported)");
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("matrix file: need 1 <= k <= n");
    PrimeField f(static_cast<int>(q));
    FieldMatrix g(f, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < g.rows; ++r)
        for (std::size_t c = 0; c < g.cols; ++c) {
            long long e;
            if (!(in >> e))
                throw std::invalid_argument("matrix file: missing entry at row " +
                                            std::to_string(r));
            if (e < 0 || e >= q)
                throw std::invalid_argument("matrix file: entry out of [0, q)");
            g.at(r, c) = static_cast<std::uint8_t>(e);
        }
    return LinearCode::from_generator(std::move(g));
}

LinearCode load_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open code file: " + path);
    return parse_generator_text(in);
}

namespace {

LinearCode make_hamming74() {
    PrimeField f2(2);
    FieldMatrix g(f2, 4, 7);
    const int rows[4][7] = {
        {1, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 1, 0, 1},
        {0, 0, 1, 0, 0, 1, 1},
        {0, 0, 0, 1, 1, 1, 1},
    };
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 7; ++c) g.at(r, c) = static_cast<std::uint8_t>(rows[r][c]);
    return LinearCode::from_generator(std::move(g));
}

LinearCode make_simplex73() {
    PrimeField f2(2);
    FieldMatrix g(f2, 3, 7);
    const int rows[3][7] = {
        {1, 1, 0, 1, 1, 0, 0},
        {1, 0, 1, 1, 0, 1, 0},
        {0, 1, 1, 1, 0, 0, 1},
    };
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 7; ++c) g.at(r, c) = static_cast<std::uint8_t>(rows[r][c]);
    return LinearCode::from_generator(std::move(g));
}

LinearCode make_repetition(std::size_t n) {
    PrimeField f2(2);
    FieldMatrix g(f2, 1, n);
    for (std::size_t c = 0; c < n; ++c) g.at(0, c) = 1;
    return LinearCode::from_generator(std::move(g));
}

}  // namespace

bool is_builtin_code_name(const std::string& name) {
    if (name == "hamming74" || name == "simplex73") return true;
    if (name.size() > 3 && name.rfind("rep", 0) == 0)
        return name.find_first_not_of("0123456789", 3) == std::string::npos;
    return false;
}

LinearCode builtin_code(const std::string& name) {
    if (name == "hamming74") return make_hamming74();
    if (name == "simplex73") return make_simplex73();
    if (name.rfind("rep", 0) == 0) {
        const std::string digits = name.substr(3);
        if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
            const unsigned long n = std::stoul(digits);
            if (n < 1 || n > 1024)
                throw std::invalid_argument("rep<n>: n out of range [1, 1024]");
            return make_repetition(n);
        }
    }
    throw std::invalid_argument("unknown built-in code: " + name);
}

LinearCode resolve_code(const std::string& name_or_path) {
    if (is_builtin_code_name(name_or_path)) return builtin_code(name_or_path);
    return load_code_file(name_or_path);
}

}  // namespace geospec
