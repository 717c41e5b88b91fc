// Linear block codes over prime fields: encoding, enumeration, Hamming metrics.
#ifndef GEOSPEC_CODE_HPP
#define GEOSPEC_CODE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "geospec/field.hpp"

namespace geospec {

using Word = std::vector<std::uint8_t>;   // field-element sequence

struct Codeword {
    Word symbols;
    std::optional<std::uint64_t> index;   // enumeration index, 0 = all-zero
};

int hamming_weight(const Word& w);
int hamming_distance(const Word& u, const Word& v);   // throws on length mismatch
Word word_sub(const PrimeField& f, const Word& u, const Word& v);
Word word_add(const PrimeField& f, const Word& u, const Word& v);

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

/// A q-ary [n, k] linear code given by a full-rank generator matrix.
/// Immutable after construction; the user's column order is preserved.
class LinearCode {
public:
    static LinearCode from_generator(FieldMatrix generator);

    const PrimeField& field() const { return generator_.field; }
    int q() const { return generator_.field.modulus(); }
    std::size_t n() const { return generator_.cols; }
    std::size_t k() const { return generator_.rows; }
    const FieldMatrix& generator() const { return generator_; }
    const FieldMatrix& parity() const { return parity_; }

    /// q^k; throws std::overflow_error if it exceeds 2^63.
    std::uint64_t size() const;

    Codeword encode(const Word& message) const;
    Word message_for_index(std::uint64_t index) const;

    /// All q^k codewords in lexicographic message order (index 0 = all-zero).
    /// Throws std::invalid_argument when q^k exceeds `cap`.
    std::vector<Codeword> codewords(std::uint64_t cap = kEnumerationCap) const;

    /// Syndrome test: w * H^T == 0.
    bool contains(const Word& w) const;

private:
    LinearCode(FieldMatrix g, FieldMatrix h) : generator_(std::move(g)), parity_(std::move(h)) {}
    FieldMatrix generator_;
    FieldMatrix parity_;
};

/// FNV-1a over (q, n, k, generator entries); stable across runs.
std::uint64_t code_fingerprint(const LinearCode& code);
std::string code_id(const LinearCode& code);   // fingerprint as 16 hex digits

/// Generator-matrix text format: first line "q n k", then k lines of n
/// base-10 entries separated by spaces.
LinearCode parse_generator_text(std::istream& in);
LinearCode load_code_file(const std::string& path);

/// Built-in codes: "hamming74", "rep<n>", "simplex73".
LinearCode builtin_code(const std::string& name);
bool is_builtin_code_name(const std::string& name);

/// Resolves a built-in name or a path to a generator-matrix file.
LinearCode resolve_code(const std::string& name_or_path);

}  // namespace geospec

#endif
