#include "momenta/matrix.hpp"

#include <utility>

#include "momenta/errors.hpp"

namespace momenta {

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

Rat det_bareiss(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    // Clear denominators row-wise so the Bareiss recurrence stays in Z.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Int scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        Int rowden(1);
        for (std::size_t j = 0; j < n; ++j)
            rowden = lcm(rowden, denominator(m(i, j)));
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& e = m(i, j);
            a[i][j] = numerator(e) * (rowden / denominator(e));
        }
        scale *= rowden;
    }

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k;
            for (std::size_t r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { swap_row = r; break; }
            if (swap_row == k) return Rat(0); // column is zero below
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = t / prev; // exact by Sylvester's identity
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det = Rat(a[n - 1][n - 1]) / Rat(scale);
    return sign < 0 ? Rat(-det) : det;
}

} // namespace momenta
