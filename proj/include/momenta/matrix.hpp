#ifndef MOMENTA_MATRIX_HPP
#define MOMENTA_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "momenta/rational.hpp"

namespace momenta {

/// Small dense matrix of exact rationals.  Row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_symmetric() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> data_;
};

/// Exact determinant by fraction-free Bareiss elimination: denominators are
/// cleared row-wise, the integer Bareiss recurrence runs with row-swap
/// pivoting, and the scale is divided back out.  Empty matrix gives 1.
Rat det_bareiss(const RatMatrix& m);

} // namespace momenta

#endif
