#include "exact_matrix.hpp"

#include <utility>

#include "rainbow/error.hpp"

namespace rainbow::detail {

mpq_class determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) {
        throw ParameterError("determinant of a non-square matrix");
    }
    const std::size_t n = m.rows();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m.at(pivot, col)) == 0) ++pivot;
        if (pivot == n) {
            return 0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
            det = -det;
        }
        det *= m.at(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (sgn(m.at(r, col)) == 0) continue;
            const mpq_class factor = m.at(r, col) / m.at(col, col);
            for (std::size_t c = col; c < n; ++c) {
                m.at(r, c) -= factor * m.at(col, c);
            }
        }
    }
    return det;
}

std::optional<std::vector<mpq_class>> solve(RationalMatrix a, std::vector<mpq_class> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) {
        throw ParameterError("solve needs a square system");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(a.at(pivot, col)) == 0) ++pivot;
        if (pivot == n) {
            return std::nullopt;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(a.at(r, col)) == 0) continue;
            const mpq_class factor = a.at(r, col) / a.at(col, col);
            for (std::size_t c = col; c < n; ++c) {
                a.at(r, c) -= factor * a.at(col, c);
            }
            b[r] -= factor * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        b[i] /= a.at(i, i);
    }
    return b;
}

}  // namespace rainbow::detail
