// Prime-field arithmetic and matrices over GF(p).
#ifndef GEOSPEC_FIELD_HPP
#define GEOSPEC_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace geospec {

/// Prime field GF(p), 2 <= p <= 251. Elements are ints in [0, p).
class PrimeField {
public:
    explicit PrimeField(int p);

    int modulus() const { return p_; }

    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const { return (a * b) % p_; }
    int neg(int a) const { return (p_ - a) % p_; }
    int inv(int a) const;   // multiplicative inverse, a != 0
    int reduce(long long a) const;

    bool operator==(const PrimeField&) const = default;

private:
    int p_;
};

bool is_prime(int p);

/// Dense row-major matrix over a prime field.
struct FieldMatrix {
    FieldMatrix(PrimeField f, std::size_t rows, std::size_t cols);

    PrimeField field;
    std::size_t rows;
    std::size_t cols;
    std::vector<std::uint8_t> entries;   // row-major, reduced mod p

    std::uint8_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    std::uint8_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    bool operator==(const FieldMatrix&) const = default;
};

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix transpose(const FieldMatrix& m);
bool is_zero(const FieldMatrix& m);

struct RowReduceResult {
    FieldMatrix rref;
    std::size_t rank;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form; preserves row space.
RowReduceResult row_reduce(const FieldMatrix& m);

/// Parity-check matrix H with G * H^T = 0 and rank n-k. Throws
/// std::invalid_argument if the generator is rank deficient.
FieldMatrix parity_from_generator(const FieldMatrix& generator);

}  // namespace geospec

#endif
