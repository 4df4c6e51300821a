#pragma once

#include <optional>
#include <vector>

#include <gmpxx.h>

namespace rainbow::detail {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const mpq_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<mpq_class> data_;
};

mpq_class determinant(RationalMatrix m);

/// Solves a x = b for square a; nullopt when a is singular.
std::optional<std::vector<mpq_class>> solve(RationalMatrix a, std::vector<mpq_class> b);

}  // namespace rainbow::detail
