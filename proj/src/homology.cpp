#include "wmorse/homology.hpp"

#include <algorithm>
#include <cassert>

#include "wmorse/errors.hpp"

namespace wmorse
{

ChainBasis::ChainBasis(const WeightedComplex& k)
    : cells_(static_cast<std::size_t>(std::max(k.dimension() + 1, 0)))
{
    const auto weights = k.weights();
    const auto simplices = k.simplices();
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (weights[i] != 0)
            cells_[static_cast<std::size_t>(simplices[i].dimension())].push_back(simplices[i]);
}

std::span<const Simplex> ChainBasis::cells(int dim) const
{
    if (dim < 0 || dim > top_dimension())
        return {};
    return cells_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> ChainBasis::index_of(int dim, const Simplex& s) const
{
    auto c = cells(dim);
    auto it = std::lower_bound(c.begin(), c.end(), s);
    if (it == c.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - c.begin());
}

IntMatrix WeightedBoundary::matrix(int n) const
{
    if (n >= 0 && static_cast<std::size_t>(n) < matrices.size())
        return matrices[static_cast<std::size_t>(n)];
    return IntMatrix(basis.rank(n - 1), basis.rank(n));
}

std::vector<Integer> weighted_boundary_of(const WeightedComplex& k, const ChainBasis& basis,
                                          const Simplex& s)
{
    const int n = s.dimension();
    std::vector<Integer> column(basis.rank(n - 1));
    if (n == 0)
        return column;
    const Integer& ws = k.weight(s);
    if (ws == 0)
        throw Error(ErrorCode::ZeroWeight, to_string(s) + " has zero weight", {s});
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        Simplex f = s.face(i);
        const Integer& wf = k.weight(f);
        // nonzero since w(f) | w(s) != 0
        assert(wf != 0 && ws % wf == 0);
        auto row = basis.index_of(n - 1, f);
        assert(row);
        Integer ratio = ws / wf;
        column[*row] = (i % 2 == 0) ? ratio : Integer(-ratio);
    }
    return column;
}

WeightedBoundary boundary_matrices(const WeightedComplex& k)
{
    WeightedBoundary out{ChainBasis(k), {}};
    const int top = k.dimension();
    out.matrices.reserve(static_cast<std::size_t>(std::max(top + 1, 0)));
    for (int n = 0; n <= top; ++n)
    {
        auto cols = out.basis.cells(n);
        IntMatrix m(out.basis.rank(n - 1), cols.size());
        if (n > 0)
        {
            const auto count = static_cast<std::ptrdiff_t>(cols.size());
#pragma omp parallel for schedule(static) if (count > 256)
            for (std::ptrdiff_t j = 0; j < count; ++j)
            {
                auto column = weighted_boundary_of(k, out.basis, cols[j]);
                for (std::size_t r = 0; r < column.size(); ++r)
                    if (column[r] != 0)
                        m(r, static_cast<std::size_t>(j)) = std::move(column[r]);
            }
        }
        out.matrices.push_back(std::move(m));
    }
    return out;
}

std::string to_string(const HomologyGroup& h)
{
    if (h.is_zero())
        return "0";
    std::string out;
    if (h.free_rank > 0)
        out = "Z^" + std::to_string(h.free_rank);
    for (const Integer& t : h.torsion)
        out += (out.empty() ? "" : " (+) ") + ("Z/" + t.str());
    return out;
}

HomologyGroup make_group(std::size_t free_rank, std::vector<long long> torsion)
{
    HomologyGroup h{free_rank, {}};
    for (long long t : torsion)
        h.torsion.emplace_back(t);
    return h;
}

HomologyGroup homology_from(std::size_t chain_rank, const IntMatrix& incoming, const IntMatrix& outgoing)
{
    const std::size_t in_rank = incoming.empty() ? 0 : rank(incoming);
    SmithDecomposition out = outgoing.empty() ? SmithDecomposition{} : smith_normal_form(outgoing);
    HomologyGroup h;
    h.free_rank = chain_rank - in_rank - out.rank();
    h.torsion = out.torsion();
    return h;
}

std::vector<HomologyGroup> homology(const WeightedComplex& k, std::optional<int> max_dim)
{
    const int top = max_dim ? *max_dim : k.dimension();
    if (top < 0)
        return {};
    WeightedBoundary b = boundary_matrices(k);
    const int last_matrix = std::min(top + 1, k.dimension());

    // SNF of every matrix d_1 .. d_{top+1}; independent, so fan out
    std::vector<SmithDecomposition> snf(static_cast<std::size_t>(std::max(last_matrix + 1, 1)));
#pragma omp parallel for schedule(dynamic, 1) if (k.size() > 64)
    for (int n = 1; n <= last_matrix; ++n)
        snf[static_cast<std::size_t>(n)] = smith_normal_form(b.matrices[static_cast<std::size_t>(n)]);

    auto rank_of = [&](int n) -> std::size_t {
        return (n >= 1 && n <= last_matrix) ? snf[static_cast<std::size_t>(n)].rank() : 0;
    };

    std::vector<HomologyGroup> out(static_cast<std::size_t>(top + 1));
    for (int n = 0; n <= std::min(top, k.dimension()); ++n)
    {
        HomologyGroup& h = out[static_cast<std::size_t>(n)];
        h.free_rank = b.basis.rank(n) - rank_of(n) - rank_of(n + 1);
        if (n + 1 <= last_matrix)
            h.torsion = snf[static_cast<std::size_t>(n + 1)].torsion();
    }
    return out;
}

std::string to_string(const ClassOrder& c)
{
    switch (c.kind)
    {
    case ClassOrder::Kind::Zero: return "zero";
    case ClassOrder::Kind::Torsion: return "torsion(" + c.order.str() + ")";
    case ClassOrder::Kind::Infinite: return "infinite";
    }
    return "?";
}

ClassOrder class_order_modulo(const IntMatrix& boundary, std::span<const Integer> z)
{
    if (z.size() != boundary.rows())
        throw Error(ErrorCode::InvalidArgument, "cycle length does not match the chain rank");
    if (std::all_of(z.begin(), z.end(), [](const Integer& x) { return x == 0; }))
        return {};

    SmithDecomposition snf = smith_normal_form(boundary, true);
    std::vector<Integer> y = *snf.left * z;

    Integer order = 1;
    for (std::size_t i = 0; i < y.size(); ++i)
    {
        if (i >= snf.rank())
        {
            if (y[i] != 0)
                return {ClassOrder::Kind::Infinite, 0};
            continue;
        }
        const Integer& d = snf.invariant_factors[i];
        Integer need = d / gcd(d, y[i]);
        order = lcm(order, need);
    }
    if (order == 1)
        return {};
    return {ClassOrder::Kind::Torsion, order};
}

ClassOrder homology_class_order(const WeightedComplex& k, int n, std::span<const Integer> z)
{
    WeightedBoundary b = boundary_matrices(k);
    if (z.size() != b.basis.rank(n))
        throw Error(ErrorCode::InvalidArgument, "cycle length does not match rank of C_" + std::to_string(n));
    if (n >= 1)
    {
        auto image = b.matrix(n) * z;
        if (std::any_of(image.begin(), image.end(), [](const Integer& x) { return x != 0; }))
            throw Error(ErrorCode::NotACycle, "chain is not a cycle in dimension " + std::to_string(n));
    }
    return class_order_modulo(b.matrix(n + 1), z);
}

} // namespace wmorse
