// Serial Smith normal form, deliberately plain: first nonzero column, the
// smallest entry of the current column (row) as pivot for each reduction
// pass, no parallel sweeps. Used to cross-check
// the production kernel and as the benchmark baseline.

#include "wmorse/smith.hpp"

#include <utility>

namespace wmorse::reference
{

namespace
{

using boost::multiprecision::abs;

struct State
{
    IntMatrix m;
    bool track;
    IntMatrix u;
    IntMatrix v;

    void row_swap(std::size_t a, std::size_t b)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            std::swap(m(a, c), m(b, c));
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c)
                std::swap(u(a, c), u(b, c));
    }

    void col_swap(std::size_t a, std::size_t b)
    {
        for (std::size_t r = 0; r < m.rows(); ++r)
            std::swap(m(r, a), m(r, b));
        if (track)
            for (std::size_t r = 0; r < v.rows(); ++r)
                std::swap(v(r, a), v(r, b));
    }

    void row_axpy(std::size_t dst, std::size_t src, const Integer& q)
    {
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(dst, c) += q * m(src, c);
        if (track)
            for (std::size_t c = 0; c < u.cols(); ++c)
                u(dst, c) += q * u(src, c);
    }

    void col_axpy(std::size_t dst, std::size_t src, const Integer& q)
    {
        for (std::size_t r = 0; r < m.rows(); ++r)
            m(r, dst) += q * m(r, src);
        if (track)
            for (std::size_t r = 0; r < v.rows(); ++r)
                v(r, dst) += q * v(r, src);
    }
};

} // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a, bool want_transforms)
{
    State s{a, want_transforms, IntMatrix::identity(want_transforms ? a.rows() : 0),
            IntMatrix::identity(want_transforms ? a.cols() : 0)};
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();

    SmithDecomposition out;
    std::size_t t = 0;
    while (t < rows && t < cols)
    {
        // first column with a nonzero entry at or below row t
        std::size_t pc = cols;
        std::size_t pr = rows;
        for (std::size_t c = t; c < cols && pc == cols; ++c)
            for (std::size_t r = t; r < rows; ++r)
                if (s.m(r, c) != 0)
                {
                    pc = c;
                    pr = r;
                    break;
                }
        if (pc == cols)
            break;
        s.col_swap(t, pc);
        s.row_swap(t, pr);

        bool done = false;
        while (!done)
        {
            done = true;
            for (;;)
            {
                std::size_t best = t;
                for (std::size_t r = t + 1; r < rows; ++r)
                    if (s.m(r, t) != 0 && abs(s.m(r, t)) < abs(s.m(best, t)))
                        best = r;
                s.row_swap(t, best);
                bool clear = true;
                for (std::size_t r = t + 1; r < rows; ++r)
                    if (s.m(r, t) != 0)
                    {
                        s.row_axpy(r, t, -(s.m(r, t) / s.m(t, t)));
                        clear = clear && s.m(r, t) == 0;
                    }
                if (clear)
                    break;
            }
            for (;;)
            {
                std::size_t best = t;
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (s.m(t, c) != 0 && abs(s.m(t, c)) < abs(s.m(t, best)))
                        best = c;
                if (best != t)
                {
                    s.col_swap(t, best);
                    done = false;
                }
                bool clear = true;
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (s.m(t, c) != 0)
                    {
                        s.col_axpy(c, t, -(s.m(t, c) / s.m(t, t)));
                        clear = clear && s.m(t, c) == 0;
                    }
                if (clear)
                    break;
                done = false;
            }
            if (!done)
                continue;
            for (std::size_t r = t + 1; r < rows && done; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (s.m(r, c) % s.m(t, t) != 0)
                    {
                        s.row_axpy(t, r, 1);
                        done = false;
                        break;
                    }
        }

        if (s.m(t, t) < 0)
        {
            for (std::size_t c = 0; c < cols; ++c)
                s.m(t, c) = -s.m(t, c);
            if (s.track)
                for (std::size_t c = 0; c < s.u.cols(); ++c)
                    s.u(t, c) = -s.u(t, c);
        }
        out.invariant_factors.push_back(s.m(t, t));
        ++t;
    }

    if (want_transforms)
    {
        out.left = std::move(s.u);
        out.right = std::move(s.v);
    }
    return out;
}

} // namespace wmorse::reference
