#include "wmorse/smith.hpp"

#include <algorithm>
#include <cstddef>
#include <utility>

namespace wmorse
{

namespace
{

// Below this many active entries the sweeps stay serial.
constexpr std::size_t kParallelThreshold = 4096;

using boost::multiprecision::abs;

struct Workspace
{
    IntMatrix m;
    std::optional<IntMatrix> u;
    std::optional<IntMatrix> v;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(m.row(a).begin(), m.row(a).end(), m.row(b).begin());
        if (u)
            std::swap_ranges(u->row(a).begin(), u->row(a).end(), u->row(b).begin());
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t r = 0; r < m.rows(); ++r)
            std::swap(m(r, a), m(r, b));
        if (v)
            for (std::size_t r = 0; r < v->rows(); ++r)
                std::swap((*v)(r, a), (*v)(r, b));
    }

    // row_dst += q * row_src on columns [from, cols) of m and all of u
    void add_row(std::size_t dst, std::size_t src, const Integer& q, std::size_t from)
    {
        for (std::size_t c = from; c < m.cols(); ++c)
            if (m(src, c) != 0)
                m(dst, c) += q * m(src, c);
        if (u)
            for (std::size_t c = 0; c < u->cols(); ++c)
                if ((*u)(src, c) != 0)
                    (*u)(dst, c) += q * (*u)(src, c);
    }

    // col_dst += q * col_src on rows [from, rows) of m and all of v
    void add_col(std::size_t dst, std::size_t src, const Integer& q, std::size_t from)
    {
        for (std::size_t r = from; r < m.rows(); ++r)
            if (m(r, src) != 0)
                m(r, dst) += q * m(r, src);
        if (v)
            for (std::size_t r = 0; r < v->rows(); ++r)
                if ((*v)(r, src) != 0)
                    (*v)(r, dst) += q * (*v)(r, src);
    }
};

// Position of the nonzero entry of least magnitude in the block [t.., t..].
bool find_min_pivot(const IntMatrix& m, std::size_t t, std::size_t& pr, std::size_t& pc)
{
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
        {
            const Integer& x = m(r, c);
            if (x == 0)
                continue;
            if (!found || abs(x) < best)
            {
                best = abs(x);
                pr = r;
                pc = c;
                found = true;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

// Subtracts multiples of row t from every row below; returns the row holding
// the smallest nonzero remainder in column t, or rows() if the column is clear.
std::size_t sweep_column(Workspace& w, std::size_t t)
{
    const std::size_t rows = w.m.rows();
    const bool parallel = (rows - t) * (w.m.cols() - t) > kParallelThreshold;
    const Integer pivot = w.m(t, t);
    const auto first = static_cast<std::ptrdiff_t>(t + 1);
    const auto last = static_cast<std::ptrdiff_t>(rows);

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::ptrdiff_t i = first; i < last; ++i)
    {
        if (w.m(i, t) == 0)
            continue;
        Integer q = w.m(i, t) / pivot;
        if (q != 0)
            w.add_row(static_cast<std::size_t>(i), t, -q, t);
    }

    std::size_t best = rows;
    for (std::size_t i = t + 1; i < rows; ++i)
        if (w.m(i, t) != 0 && (best == rows || abs(w.m(i, t)) < abs(w.m(best, t))))
            best = i;
    return best;
}

std::size_t sweep_row(Workspace& w, std::size_t t)
{
    const std::size_t cols = w.m.cols();
    const bool parallel = (w.m.rows() - t) * (cols - t) > kParallelThreshold;
    const Integer pivot = w.m(t, t);
    const auto first = static_cast<std::ptrdiff_t>(t + 1);
    const auto last = static_cast<std::ptrdiff_t>(cols);

#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::ptrdiff_t j = first; j < last; ++j)
    {
        if (w.m(t, j) == 0)
            continue;
        Integer q = w.m(t, j) / pivot;
        if (q != 0)
            w.add_col(static_cast<std::size_t>(j), t, -q, t);
    }

    std::size_t best = cols;
    for (std::size_t j = t + 1; j < cols; ++j)
        if (w.m(t, j) != 0 && (best == cols || abs(w.m(t, j)) < abs(w.m(t, best))))
            best = j;
    return best;
}

// s * a + t * b == gcd(a, b) for a, b > 0
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t)
{
    Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0)
    {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1;
        Integer s2 = s0 - q * s1;
        Integer t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    g = r0;
    s = s0;
    t = t0;
}

// Turns positive diagonal entries d into a divisibility chain by replacing
// pairs (a, b) with (gcd, lcm). With a workspace the matching 2x2 unimodular
// transforms are applied to U (rows i, j) and V (columns i, j).
void normalize_diagonal(std::vector<Integer>& d, Workspace* w)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
        {
            if (d[j] % d[i] == 0)
                continue;
            Integer g, s, t;
            extended_gcd(d[i], d[j], g, s, t);
            const Integer a = d[i] / g;
            const Integer b = d[j] / g;
            if (w && w->u)
            {
                IntMatrix& u = *w->u;
                for (std::size_t c = 0; c < u.cols(); ++c)
                {
                    Integer ui = u(i, c), uj = u(j, c);
                    u(i, c) = s * ui + t * uj;
                    u(j, c) = a * uj - b * ui;
                }
            }
            if (w && w->v)
            {
                IntMatrix& v = *w->v;
                for (std::size_t r = 0; r < v.rows(); ++r)
                {
                    Integer vi = v(r, i), vj = v(r, j);
                    v(r, i) = vi + vj;
                    v(r, j) = s * d[i] * vj - t * d[j] * vi;
                    v(r, j) /= g;
                }
            }
            d[j] = d[i] / g * d[j];
            d[i] = g;
            if (w)
            {
                w->m(i, i) = d[i];
                w->m(j, j) = d[j];
            }
        }
}

struct SparseEntry
{
    std::size_t col;
    Integer value;
};

using SparseRow = std::vector<SparseEntry>;

// Invariant factors without transforms. Rows are stored sparsely with a
// column index; each pivot is eliminated by row operations on the rows that
// meet its column, after which the remaining entries of the pivot row only
// need column operations confined to that row. Boundary matrices stay sparse
// under this scheme, so the cost tracks the nonzeros rather than rows x cols.
class SparseEliminator
{
public:
    explicit SparseEliminator(const IntMatrix& a)
        : rows_(a.rows()), col_rows_(a.cols()), col_count_(a.cols(), 0), row_done_(a.rows(), 0)
    {
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                if (a(r, c) != 0)
                {
                    rows_[r].push_back({c, a(r, c)});
                    col_rows_[c].push_back(r);
                    ++col_count_[c];
                }
    }

    std::vector<Integer> run()
    {
        std::vector<Integer> diagonal;
        std::size_t r = 0, c = 0;
        while (choose_pivot(r, c))
            diagonal.push_back(eliminate(r, c));
        return diagonal;
    }

private:
    struct Delta
    {
        std::vector<std::size_t> added;
        std::vector<std::size_t> removed;
    };

    const Integer* find(std::size_t r, std::size_t c) const
    {
        const SparseRow& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const SparseEntry& e, std::size_t col) { return e.col < col; });
        return (it != row.end() && it->col == c) ? &it->value : nullptr;
    }

    // Least magnitude first, then the smallest fill-in estimate.
    bool choose_pivot(std::size_t& pr, std::size_t& pc) const
    {
        bool found = false;
        Integer best;
        std::size_t best_cost = 0;
        for (std::size_t r = 0; r < rows_.size(); ++r)
        {
            if (row_done_[r] || rows_[r].empty())
                continue;
            const std::size_t row_len = rows_[r].size() - 1;
            for (const SparseEntry& e : rows_[r])
            {
                const std::size_t cost = row_len * (col_count_[e.col] - 1);
                const Integer mag = abs(e.value);
                if (!found || mag < best || (mag == best && cost < best_cost))
                {
                    found = true;
                    best = mag;
                    best_cost = cost;
                    pr = r;
                    pc = e.col;
                    if (best == 1 && cost == 0)
                        return true;
                }
            }
        }
        return found;
    }

    // Rows other than r with a nonzero entry in column c, ascending.
    std::vector<std::size_t> rows_meeting(std::size_t c, std::size_t r)
    {
        std::vector<std::size_t>& list = col_rows_[c];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        std::erase_if(list, [&](std::size_t i) { return row_done_[i] || find(i, c) == nullptr; });
        std::vector<std::size_t> out;
        for (std::size_t i : list)
            if (i != r)
                out.push_back(i);
        return out;
    }

    // rows_[dst] += q * rows_[src]
    Delta axpy(std::size_t dst, const Integer& q, std::size_t src)
    {
        Delta delta;
        const SparseRow& a = rows_[dst];
        const SparseRow& b = rows_[src];
        SparseRow out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size())
        {
            if (j == b.size() || (i < a.size() && a[i].col < b[j].col))
            {
                out.push_back(a[i++]);
            }
            else if (i == a.size() || b[j].col < a[i].col)
            {
                out.push_back({b[j].col, q * b[j].value});
                delta.added.push_back(b[j].col);
                ++j;
            }
            else
            {
                Integer sum = a[i].value + q * b[j].value;
                if (sum != 0)
                    out.push_back({a[i].col, std::move(sum)});
                else
                    delta.removed.push_back(a[i].col);
                ++i;
                ++j;
            }
        }
        rows_[dst] = std::move(out);
        return delta;
    }

    void apply(std::size_t row, const Delta& delta)
    {
        for (std::size_t c : delta.added)
        {
            col_rows_[c].push_back(row);
            ++col_count_[c];
        }
        for (std::size_t c : delta.removed)
            --col_count_[c];
    }

    Integer eliminate(std::size_t r, std::size_t c)
    {
        for (;;)
        {
            const std::vector<std::size_t> targets = rows_meeting(c, r);
            const Integer pivot = *find(r, c);
            std::vector<Delta> deltas(targets.size());
            const bool parallel = targets.size() > 8;
            const auto count = static_cast<std::ptrdiff_t>(targets.size());

#pragma omp parallel for schedule(dynamic, 2) if (parallel)
            for (std::ptrdiff_t k = 0; k < count; ++k)
            {
                const std::size_t i = targets[static_cast<std::size_t>(k)];
                Integer q = *find(i, c) / pivot;
                if (q != 0)
                    deltas[static_cast<std::size_t>(k)] = axpy(i, -q, r);
            }
            for (std::size_t k = 0; k < targets.size(); ++k)
                apply(targets[k], deltas[k]);

            std::size_t next = rows_.size();
            for (std::size_t i : targets)
                if (const Integer* x = find(i, c); x && (next == rows_.size() || abs(*x) < abs(*find(next, c))))
                    next = i;
            if (next != rows_.size())
            {
                r = next;
                continue;
            }

            // Column c now meets only row r, so column operations against it
            // change nothing but row r: every other entry drops to its remainder.
            SparseRow& row = rows_[r];
            SparseRow kept;
            std::size_t next_col = c;
            const Integer* best = nullptr;
            for (SparseEntry& e : row)
            {
                if (e.col != c)
                {
                    e.value %= pivot;
                    if (e.value == 0)
                    {
                        --col_count_[e.col];
                        continue;
                    }
                }
                kept.push_back(std::move(e));
            }
            row = std::move(kept);
            for (const SparseEntry& e : row)
                if (e.col != c && (!best || abs(e.value) < abs(*best)))
                {
                    best = &e.value;
                    next_col = e.col;
                }
            if (next_col == c)
                break;
            c = next_col;
        }

        Integer d = abs(*find(r, c));
        for (const SparseEntry& e : rows_[r])
            --col_count_[e.col];
        rows_[r].clear();
        row_done_[r] = 1;
        col_rows_[c].clear();
        return d;
    }

    std::vector<SparseRow> rows_;
    std::vector<std::vector<std::size_t>> col_rows_;   // may hold stale or repeated rows
    std::vector<std::size_t> col_count_;
    std::vector<char> row_done_;
};

} // namespace

std::vector<Integer> SmithDecomposition::torsion() const
{
    std::vector<Integer> out;
    for (const Integer& d : invariant_factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a, bool want_transforms)
{
    SmithDecomposition out;
    if (!want_transforms)
    {
        out.invariant_factors = SparseEliminator(a).run();
        normalize_diagonal(out.invariant_factors, nullptr);
        return out;
    }

    Workspace w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};

    const std::size_t limit = std::min(a.rows(), a.cols());
    for (std::size_t t = 0; t < limit; ++t)
    {
        std::size_t pr = 0, pc = 0;
        if (!find_min_pivot(w.m, t, pr, pc))
            break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;)
        {
            if (std::size_t r = sweep_column(w, t); r != w.m.rows())
            {
                w.swap_rows(t, r);
                continue;
            }
            if (std::size_t c = sweep_row(w, t); c != w.m.cols())
            {
                w.swap_cols(t, c);
                continue;
            }
            break;
        }

        if (w.m(t, t) < 0)
        {
            for (std::size_t c = t; c < w.m.cols(); ++c)
                w.m(t, c) = -w.m(t, c);
            if (w.u)
                for (std::size_t c = 0; c < w.u->cols(); ++c)
                    (*w.u)(t, c) = -(*w.u)(t, c);
        }
        out.invariant_factors.push_back(w.m(t, t));
    }

    normalize_diagonal(out.invariant_factors, &w);
    out.left = std::move(w.u);
    out.right = std::move(w.v);
    return out;
}

std::size_t rank(const IntMatrix& a)
{
    return smith_normal_form(a, false).rank();
}

IntMatrix padded_diagonal(const SmithDecomposition& snf, std::size_t rows, std::size_t cols)
{
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < snf.invariant_factors.size(); ++i)
        d(i, i) = snf.invariant_factors[i];
    return d;
}

} // namespace wmorse
