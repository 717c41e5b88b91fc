#include "geospec/field.hpp"

#include <stdexcept>
#include <string>

namespace geospec {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

PrimeField::PrimeField(int p) : p_(p) {
    if (p < 2 || p > 251 || !is_prime(p))
        throw std::invalid_argument("field size must be a prime in [2, 251], got " +
                                    std::to_string(p));
}

int PrimeField::inv(int a) const {
    if (a % p_ == 0) throw std::invalid_argument("inverse of zero");
    // extended Euclid on (a, p)
    int t = 0, new_t = 1, r = p_, new_r = a % p_;
    while (new_r != 0) {
        int q = r / new_r;
        int tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return t < 0 ? t + p_ : t;
}

int PrimeField::reduce(long long a) const {
    long long r = a % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
}

FieldMatrix::FieldMatrix(PrimeField f, std::size_t r, std::size_t c)
    : field(f), rows(r), cols(c), entries(r * c, 0) {}

FieldMatrix matmul(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols != b.rows || !(a.field == b.field))
        throw std::invalid_argument("matmul: incompatible shapes or fields");
    FieldMatrix out(a.field, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) {
            long long acc = 0;
            for (std::size_t l = 0; l < a.cols; ++l)
                acc += static_cast<long long>(a.at(i, l)) * b.at(l, j);
            out.at(i, j) = static_cast<std::uint8_t>(a.field.reduce(acc));
        }
    return out;
}

FieldMatrix transpose(const FieldMatrix& m) {
    FieldMatrix out(m.field, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

bool is_zero(const FieldMatrix& m) {
    for (auto e : m.entries)
        if (e != 0) return false;
    return true;
}

RowReduceResult row_reduce(const FieldMatrix& m) {
    FieldMatrix a = m;
    const PrimeField& f = a.field;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t piv = row;
        while (piv < a.rows && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows) continue;
        if (piv != row)
            for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(row, c), a.at(piv, c));
        const int s = f.inv(a.at(row, col));
        for (std::size_t c = col; c < a.cols; ++c)
            a.at(row, c) = static_cast<std::uint8_t>(f.mul(a.at(row, c), s));
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (r == row || a.at(r, col) == 0) continue;
            const int factor = a.at(r, col);
            for (std::size_t c = col; c < a.cols; ++c)
                a.at(r, c) = static_cast<std::uint8_t>(
                    f.sub(a.at(r, c), f.mul(factor, a.at(row, c))));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), row, std::move(pivots)};
}

FieldMatrix parity_from_generator(const FieldMatrix& generator) {
    const auto rr = row_reduce(generator);
    if (rr.rank != generator.rows)
        throw std::invalid_argument("generator matrix is rank deficient: rank " +
                                    std::to_string(rr.rank) + " < " +
                                    std::to_string(generator.rows) + " rows");
    const PrimeField& f = generator.field;
    const std::size_t n = generator.cols;
    const std::size_t k = generator.rows;
    std::vector<bool> is_pivot(n, false);
    for (auto c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    // G_rref restricted to pivot columns is I_k, so for each free column c the
    // vector with -G_rref(:,c) at the pivot positions and 1 at c annihilates G.
    FieldMatrix h(f, n - k, n);
    for (std::size_t r = 0; r < free_cols.size(); ++r) {
        const std::size_t c = free_cols[r];
        h.at(r, c) = 1;
        for (std::size_t i = 0; i < k; ++i)
            h.at(r, rr.pivot_cols[i]) = static_cast<std::uint8_t>(f.neg(rr.rref.at(i, c)));
    }
    return h;
}

}  // namespace geospec
