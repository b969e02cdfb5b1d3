#include "wmorse/int_matrix.hpp"

#include <cassert>

#include "wmorse/errors.hpp"

namespace wmorse
{

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows)
    {
        if (row.size() != c)
            throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
        std::size_t j = 0;
        for (long long v : row)
            m(i, j++) = v;
        ++i;
    }
    return m;
}

std::vector<Integer> IntMatrix::column(std::size_t c) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = (*this)(r, c);
    return out;
}

IntMatrix IntMatrix::with_column(std::span<const Integer> values) const
{
    if (values.size() != rows_)
        throw Error(ErrorCode::InvalidArgument, "column length does not match row count");
    IntMatrix out(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c);
        out(r, cols_) = values[r];
    }
    return out;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(c, r) = (*this)(r, c);
    return out;
}

bool IntMatrix::is_zero() const
{
    for (const Integer& v : data_)
        if (v != 0)
            return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::InvalidArgument, "matrix shapes do not compose");
    IntMatrix out(a.rows(), b.cols());
    const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel for schedule(static) if (a.rows() * b.cols() * a.cols() > 50000)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
        {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    out(i, j) += aik * b(k, j);
        }
    return out;
}

std::vector<Integer> operator*(const IntMatrix& a, std::span<const Integer> x)
{
    if (a.cols() != x.size())
        throw Error(ErrorCode::InvalidArgument, "vector length does not match column count");
    std::vector<Integer> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (x[j] != 0)
                out[i] += a(i, j) * x[j];
    return out;
}

Integer determinant(const IntMatrix& a)
{
    if (a.rows() != a.cols())
        throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    IntMatrix m = a;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
            {
                m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                assert(m(i, j) % prev == 0);
                m(i, j) /= prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::string to_string(const IntMatrix& a)
{
    std::string out = "[";
    for (std::size_t r = 0; r < a.rows(); ++r)
    {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < a.cols(); ++c)
            out += (c ? ", " : "") + a(r, c).str();
        out += "]";
    }
    return out + "]";
}

} // namespace wmorse
