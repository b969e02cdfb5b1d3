#ifndef WMORSE_INT_MATRIX_HPP
#define WMORSE_INT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "wmorse/numeric.hpp"

namespace wmorse
{

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix
{
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Integer> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Integer> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<Integer> column(std::size_t c) const;

    /// Appends one column; `values` must have rows() entries.
    IntMatrix with_column(std::span<const Integer> values) const;

    IntMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& a);

std::string to_string(const IntMatrix& a);

} // namespace wmorse

#endif // WMORSE_INT_MATRIX_HPP
