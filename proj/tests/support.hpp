#ifndef WMORSE_TESTS_SUPPORT_HPP
#define WMORSE_TESTS_SUPPORT_HPP

// Builders, random generators and independent oracles shared by the unit
// tests and the acceptance runner. The oracles deliberately avoid the
// library's elimination code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wmorse/complex.hpp"
#include "wmorse/errors.hpp"
#include "wmorse/homology.hpp"
#include "wmorse/int_matrix.hpp"

namespace wmorse::testing
{

using Rational = boost::multiprecision::cpp_rational;

// Code of the wmorse::Error thrown by fn, if any.
template <class Fn>
std::optional<ErrorCode> error_of(Fn&& fn)
{
    try
    {
        fn();
    }
    catch (const Error& e)
    {
        return e.code();
    }
    return std::nullopt;
}

struct Cell
{
    std::vector<Vertex> vertices;
    long long weight;
};

inline WeightedComplex wsc(const std::vector<Cell>& cells)
{
    WeightedComplex::Candidate c;
    for (const Cell& x : cells)
        c.emplace_back(x.vertices, Integer(x.weight));
    return WeightedComplex::validate(c);
}

inline Simplex S(std::initializer_list<Vertex> v)
{
    return Simplex(v);
}

// The weighted 2-simplex of the running collapse example.
inline WeightedComplex k0()
{
    return wsc({{{0}, 1}, {{1}, 1}, {{2}, 2}, {{0, 1}, 2}, {{0, 2}, 2}, {{1, 2}, 4}, {{0, 1, 2}, 4}});
}

// Hollow triangle, vertices weight 1, edges weight 2.
inline WeightedComplex triangle_boundary()
{
    return wsc({{{0}, 1}, {{1}, 1}, {{2}, 1}, {{0, 1}, 2}, {{0, 2}, 2}, {{1, 2}, 2}});
}

inline SimplicialComplex full_simplex(unsigned n_vertices)
{
    std::vector<Vertex> v(n_vertices);
    for (unsigned i = 0; i < n_vertices; ++i)
        v[i] = i;
    Simplex top = Simplex::from_vertices(v);
    return SimplicialComplex::from_maximal(std::span<const Simplex>(&top, 1));
}

inline SimplicialComplex simplex_boundary(unsigned n_vertices)
{
    SimplicialComplex full = full_simplex(n_vertices);
    std::vector<Simplex> cells;
    for (const Simplex& s : full.simplices())
        if (s.size() < n_vertices)
            cells.push_back(s);
    return SimplicialComplex::from_simplices(std::move(cells));
}

// Morse function on the order complex of xyyy, with vertex ids in
// lexicographic string order: x=0, xy=1, xyy=2, y=3, yy=4, yyy=5.
inline std::vector<std::pair<Simplex, Rational>> xyyy_morse_values()
{
    std::vector<std::pair<Simplex, Rational>> v;
    auto at = [&](long long value, std::initializer_list<std::initializer_list<Vertex>> cells) {
        for (auto c : cells)
            v.emplace_back(Simplex(c), Rational(value));
    };
    at(1, {{0}, {1}, {3}});
    at(2, {{0, 1}, {1, 3}});
    at(3, {{2}, {4}, {1, 2}, {3, 4}});
    at(4, {{5}, {4, 5}, {2, 3}, {1, 2, 3}});
    at(5, {{0, 2}, {2, 4}, {3, 5}, {0, 1, 2}, {2, 3, 4}, {3, 4, 5}});
    return v;
}

// ---------------------------------------------------------------------------
// random weighted complexes

struct RandomWscOptions
{
    unsigned max_vertices = 8;
    unsigned max_generators = 5;
    unsigned max_generator_size = 4;
    double zero_vertex_probability = 0.04;
    double negate_probability = 0.15;
    double keep_weight_probability = 0.55;
};

inline long long pick(std::mt19937_64& rng, std::initializer_list<long long> values)
{
    std::uniform_int_distribution<std::size_t> d(0, values.size() - 1);
    return *(values.begin() + d(rng));
}

inline bool coin(std::mt19937_64& rng, double p)
{
    return std::bernoulli_distribution(p)(rng);
}

/**
 * Random valid WSC: random generators on at most max_vertices vertices,
 * weights assigned bottom-up as lcm(facet weights) times a small factor,
 * with occasional sign flips and zero vertices (zero then propagates up).
 */
inline WeightedComplex random_wsc(std::mt19937_64& rng, const RandomWscOptions& o = {})
{
    std::uniform_int_distribution<unsigned> nv(2, o.max_vertices);
    const unsigned n = nv(rng);
    std::uniform_int_distribution<unsigned> ng(1, o.max_generators);
    std::uniform_int_distribution<unsigned> gs(1, std::min(o.max_generator_size, n));
    std::vector<Simplex> gens;
    const unsigned count = ng(rng);
    for (unsigned g = 0; g < count; ++g)
    {
        std::vector<Vertex> all(n);
        for (unsigned i = 0; i < n; ++i)
            all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(gs(rng));
        gens.push_back(Simplex::from_vertices(all));
    }
    SimplicialComplex k = SimplicialComplex::from_maximal(gens);

    std::map<Simplex, Integer> w;
    std::vector<Simplex> by_dim(k.simplices().begin(), k.simplices().end());
    std::stable_sort(by_dim.begin(), by_dim.end(),
                     [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    for (const Simplex& s : by_dim)
    {
        Integer value;
        if (s.size() == 1)
            value = coin(rng, o.zero_vertex_probability) ? 0 : pick(rng, {1, 1, 1, 2, 3, 2, 5});
        else
        {
            Integer l = 1;
            bool zero = false;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                const Integer& fw = w.at(s.face(i));
                if (fw == 0)
                    zero = true;
                else
                    l = boost::multiprecision::lcm(l, boost::multiprecision::abs(fw));
            }
            if (zero)
                value = 0;
            else if (coin(rng, o.keep_weight_probability))
                value = l;
            else
                value = l * pick(rng, {1, 2, 3, 2});
        }
        if (coin(rng, o.negate_probability))
            value = -value;
        w[s] = value;
    }
    std::vector<std::pair<Simplex, Integer>> listing(w.begin(), w.end());
    return WeightedComplex::from_weights(std::move(listing));
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long long range)
{
    std::uniform_int_distribution<long long> d(-range, range);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

// ---------------------------------------------------------------------------
// oracles

// Determinant by rational Gaussian elimination.
inline Integer oracle_determinant(const std::vector<std::vector<Integer>>& a)
{
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j];
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c)
    {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c)
        {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r)
        {
            Rational f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[r][j] -= f * m[c][j];
        }
    }
    return boost::multiprecision::numerator(det);
}

inline void for_each_subset(std::size_t n, std::size_t k, const auto& fn)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    if (k > n)
        return;
    while (true)
    {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1},
// D_k = gcd of all k x k minors. Minors beyond the rational rank vanish, and
// the enumeration for one k stops once the gcd reaches 1.
inline std::size_t rational_rank(const IntMatrix& a);

inline std::vector<Integer> minor_invariant_factors(const IntMatrix& a)
{
    std::vector<Integer> out;
    Integer previous = 1;
    const std::size_t r = rational_rank(a);
    for (std::size_t k = 1; k <= r; ++k)
    {
        Integer g = 0;
        bool unit = false;
        for_each_subset(a.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (unit)
                return;
            for_each_subset(a.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (unit)
                    return;
                std::vector<std::vector<Integer>> sub(k, std::vector<Integer>(k));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j)
                        sub[i][j] = a(rows[i], cols[j]);
                g = boost::multiprecision::gcd(g, oracle_determinant(sub));
                unit = boost::multiprecision::abs(g) == 1;
            });
        });
        g = boost::multiprecision::abs(g);
        out.push_back(g / previous);
        previous = g;
    }
    return out;
}

// Rank over Q.
inline std::size_t rational_rank(const IntMatrix& a)
{
    std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m[i][j] = a(i, j);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c)
    {
        std::size_t p = rank;
        while (p < a.rows() && m[p][c] == 0)
            ++p;
        if (p == a.rows())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < a.rows(); ++r)
        {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < a.cols(); ++j)
                m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Classical (+-1) boundary matrix from dim n to dim n-1, built directly from
// the simplex list.
inline IntMatrix classical_boundary(const SimplicialComplex& k, int n)
{
    std::vector<Simplex> rows, cols;
    for (const Simplex& s : k.simplices())
    {
        if (s.dimension() == n - 1)
            rows.push_back(s);
        if (s.dimension() == n)
            cols.push_back(s);
    }
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
    {
        for (std::size_t i = 0; i < cols[c].size(); ++i)
        {
            std::vector<Vertex> f;
            for (std::size_t j = 0; j < cols[c].size(); ++j)
                if (j != i)
                    f.push_back(cols[c][j]);
            auto it = std::find_if(rows.begin(), rows.end(), [&](const Simplex& r) {
                return std::equal(r.vertices().begin(), r.vertices().end(), f.begin(), f.end());
            });
            m(static_cast<std::size_t>(it - rows.begin()), c) = (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// Classical integral homology through determinantal divisors.
inline std::vector<HomologyGroup> classical_homology_oracle(const SimplicialComplex& k)
{
    std::vector<HomologyGroup> out;
    for (int n = 0; n <= k.dimension(); ++n)
    {
        std::size_t cells = 0;
        for (const Simplex& s : k.simplices())
            cells += s.dimension() == n ? 1 : 0;
        const std::size_t out_rank = n == 0 ? 0 : minor_invariant_factors(classical_boundary(k, n)).size();
        const auto in = minor_invariant_factors(classical_boundary(k, n + 1));
        HomologyGroup h;
        h.free_rank = cells - out_rank - in.size();
        for (const Integer& d : in)
            if (d > 1)
                h.torsion.push_back(d);
        out.push_back(h);
    }
    return out;
}

} // namespace wmorse::testing

#endif // WMORSE_TESTS_SUPPORT_HPP
