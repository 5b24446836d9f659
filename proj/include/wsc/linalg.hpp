#pragma once

#include <cstddef>
#include <vector>

#include "wsc/rational.hpp"

namespace wsc {

/// Dense matrix over the exact rationals. Everything here is deterministic:
/// elimination always picks the first nonzero pivot, so bases computed from
/// kernels and images are reproducible bit for bit.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Reduced row echelon form in place; returns the pivot columns.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Basis of the right kernel, one column vector per basis element.
    std::vector<std::vector<Rational>> kernel_basis() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

} // namespace wsc
