#include "wsc/linalg.hpp"

namespace wsc {

std::vector<std::size_t> RatMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t c = col; c < cols_; ++c)
                std::swap(at(row, c), at(pivot, c));
        Rational inv = 1 / at(row, col);
        for (std::size_t c = col; c < cols_; ++c) at(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || at(r, col) == 0) continue;
            Rational factor = at(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                at(r, c) -= factor * at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t RatMatrix::rank() const {
    RatMatrix copy = *this;
    return copy.rref().size();
}

std::vector<std::vector<Rational>> RatMatrix::kernel_basis() const {
    RatMatrix copy = *this;
    std::vector<std::size_t> pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> vec(cols_);
        vec[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            vec[pivots[i]] = -copy.at(i, free_col);
        basis.push_back(std::move(vec));
    }
    return basis;
}

} // namespace wsc
