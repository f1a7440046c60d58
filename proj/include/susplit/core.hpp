#pragma once

// Shared arithmetic kernel: exact integers, dense integer matrices, error
// types, and small bit-set helpers used across the toolkit.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace susplit {

// All coefficients are exact; no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input. CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A theorem hypothesis does not hold, so the verification refuses to run
// (outside the hypothesis the theorem asserts nothing). CLI exit code 2.
struct HypothesisError : Error {
    using Error::Error;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix product: dimension mismatch");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Int& w = o(k, j);
                    if (w != 0) r(i, j) += v * w;
                }
            }
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    // row i -= q * row j
    void row_submul(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= q * (*this)(j, c);
    }
    // col i -= q * col j
    void col_submul(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) -= q * (*this)(r, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix m) {
    if (m.rows() != m.cols()) throw Error("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            m.swap_rows(piv, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = num / prev;  // exact by Bareiss
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Fixed-width bit rows used by the poset tables.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    BitRow operator&(const BitRow& o) const {
        BitRow r(bits_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    // true iff this is a subset of o
    bool subset_of(const BitRow& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool operator==(const BitRow& o) const { return bits_ == o.bits_ && w_ == o.w_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> w_;
};

inline int popcount32(std::uint32_t x) {
    int c = 0;
    while (x) {
        x &= x - 1;
        ++c;
    }
    return c;
}

inline int popcount64(std::uint64_t x) {
    int c = 0;
    while (x) {
        x &= x - 1;
        ++c;
    }
    return c;
}

}  // namespace susplit
