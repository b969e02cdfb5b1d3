#include "wmorse/morse.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wmorse
{

namespace
{

// Codimension-one incidence by index into k.simplices().
struct Incidence
{
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::vector<std::size_t>> cofacets;

    explicit Incidence(const SimplicialComplex& k)
        : facets(k.size()), cofacets(k.size())
    {
        const auto cells = k.simplices();
        for (std::size_t i = 0; i < cells.size(); ++i)
            for (const Simplex& f : faces(cells[i]))
            {
                std::size_t j = *k.index_of(f);
                facets[i].push_back(j);
                cofacets[j].push_back(i);
            }
    }
};

std::string list(std::span<const Simplex> cells)
{
    std::string out;
    for (const Simplex& s : cells)
        out += (out.empty() ? "" : " ") + to_string(s);
    return out;
}

std::string violation_summary(const std::vector<MorseViolation>& v)
{
    std::string out = std::to_string(v.size()) + " Morse condition violation(s)";
    if (!v.empty())
        out += "; first: " + to_string(v.front());
    return out;
}

std::vector<Simplex> witnesses_of(const std::vector<MorseViolation>& v)
{
    std::vector<Simplex> out;
    for (const auto& x : v)
        out.push_back(x.cell);
    return out;
}

} // namespace

std::string to_string(const MorseViolation& v)
{
    return to_string(v.cell) + " condition " + std::to_string(v.condition) + " witnesses " + list(v.witnesses);
}

MorseError::MorseError(std::vector<MorseViolation> violations)
    : Error(ErrorCode::MorseViolation, violation_summary(violations), witnesses_of(violations)),
      violations_(std::move(violations))
{
}

MorseFunction MorseFunction::validate(const SimplicialComplex& k,
                                      std::vector<std::pair<Simplex, Rational>> values)
{
    std::vector<std::optional<Rational>> slot(k.size());
    for (auto& [s, v] : values)
    {
        auto i = k.index_of(s);
        if (!i)
            throw Error(ErrorCode::NotInComplex, "value given for " + to_string(s) + " outside the complex", {s});
        if (slot[*i])
            throw Error(ErrorCode::InvalidArgument, "two values given for " + to_string(s), {s});
        slot[*i] = std::move(v);
    }
    std::vector<Rational> f;
    f.reserve(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
    {
        if (!slot[i])
            throw Error(ErrorCode::InvalidArgument, "no value for " + to_string(k.simplices()[i]),
                        {k.simplices()[i]});
        f.push_back(std::move(*slot[i]));
    }

    const Incidence inc(k);
    const auto cells = k.simplices();
    const auto n = static_cast<std::ptrdiff_t>(cells.size());
    std::vector<std::vector<MorseViolation>> found(cells.size());

#pragma omp parallel for schedule(dynamic, 32) if (n > 1024)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        std::vector<Simplex> low_up;
        for (std::size_t j : inc.cofacets[i])
            if (f[j] <= f[i])
                low_up.push_back(cells[j]);
        std::vector<Simplex> high_down;
        for (std::size_t j : inc.facets[i])
            if (f[j] >= f[i])
                high_down.push_back(cells[j]);
        if (low_up.size() > 1)
            found[i].push_back({cells[i], 1, std::move(low_up)});
        if (high_down.size() > 1)
            found[i].push_back({cells[i], 2, std::move(high_down)});
    }

    std::vector<MorseViolation> violations;
    for (auto& v : found)
        for (auto& x : v)
            violations.push_back(std::move(x));
    if (!violations.empty())
        throw MorseError(std::move(violations));
    return MorseFunction(k, std::move(f));
}

const Rational& MorseFunction::value(const Simplex& s) const
{
    auto i = complex_.index_of(s);
    if (!i)
        throw Error(ErrorCode::NotInComplex, to_string(s) + " is not in the complex", {s});
    return values_[*i];
}

std::vector<Rational> MorseFunction::distinct_values() const
{
    std::vector<Rational> out(values_.begin(), values_.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MorseFunction dimension_morse_function(const SimplicialComplex& k)
{
    std::vector<std::pair<Simplex, Rational>> values;
    for (const Simplex& s : k.simplices())
        values.emplace_back(s, Rational(s.dimension()));
    return MorseFunction::validate(k, std::move(values));
}

MorseFunction apex_pairing_morse_function(const SimplicialComplex& full_simplex)
{
    auto vertices = full_simplex.of_dimension(0);
    if (vertices.empty())
        throw Error(ErrorCode::EmptyComplex, "empty complex");
    std::vector<Vertex> ids;
    for (const Simplex& v : vertices)
        ids.push_back(v[0]);
    const Simplex top = Simplex::from_vertices(ids);
    if (full_simplex.size() != (std::size_t{1} << ids.size()) - 1 || !full_simplex.contains(top))
        throw Error(ErrorCode::InvalidArgument, "complex is not a full simplex");

    const Vertex apex = ids.front();
    std::map<Simplex, Rational> f;
    f.emplace(Simplex{apex}, Rational(1));

    // cells avoiding the apex, by dimension then lexicographically
    std::vector<Simplex> avoiding;
    for (const Simplex& s : full_simplex.simplices())
        if (!s.contains(apex))
            avoiding.push_back(s);
    std::stable_sort(avoiding.begin(), avoiding.end(),
                     [](const Simplex& x, const Simplex& y) { return x.dimension() < y.dimension(); });
    long next = 2;
    for (const Simplex& s : avoiding)
        f.emplace(s, Rational(next++));

    for (const Simplex& s : full_simplex.simplices())
        if (s.contains(apex) && s.dimension() > 0)
        {
            std::vector<Vertex> rest;
            for (Vertex v : s.vertices())
                if (v != apex)
                    rest.push_back(v);
            f.emplace(s, f.at(Simplex::from_vertices(rest)));
        }

    return MorseFunction::validate(full_simplex, {f.begin(), f.end()});
}

std::vector<CellInfo> classify(const WeightedComplex& k, const MorseFunction& f)
{
    if (!(k.complex() == f.complex()))
        throw Error(ErrorCode::InvalidArgument, "Morse function was validated on a different complex");
    const Incidence inc(k.complex());
    const auto cells = k.simplices();
    const auto weights = k.weights();
    const auto values = f.values();
    const auto n = static_cast<std::ptrdiff_t>(cells.size());

    std::vector<CellInfo> out(cells.size());
#pragma omp parallel for schedule(dynamic, 32) if (n > 1024)
    for (std::ptrdiff_t i = 0; i < n; ++i)
    {
        CellInfo& c = out[i];
        c.cell = cells[i];
        c.value = values[i];
        for (std::size_t j : inc.cofacets[i])
            if (values[j] <= values[i])
                c.low_cofacets.push_back(cells[j]);
        bool same_weight = true;
        for (std::size_t j : inc.facets[i])
            if (values[j] >= values[i])
            {
                c.high_facets.push_back(cells[j]);
                same_weight = same_weight && weights[j] == weights[i];
            }
        c.critical = c.low_cofacets.empty() && c.high_facets.empty();
        c.w_simple = weights[i] != 0 && same_weight;
        if (!c.low_cofacets.empty())
            c.partner = c.low_cofacets.front();
        else if (!c.high_facets.empty())
            c.partner = c.high_facets.front();
    }

    for (const CellInfo& c : out)
        if (!c.low_cofacets.empty() && !c.high_facets.empty())
            throw std::logic_error("cell " + to_string(c.cell) + " fails both Morse conditions");
    return out;
}

bool in_level_subcomplex(const SimplicialComplex& k, const MorseFunction& f, const Simplex& s,
                         const Rational& c)
{
    if (f.value(s) <= c)
        return true;
    for (const Simplex& t : k.cofaces(s))
        if (f.value(t) <= c)
            return true;
    return false;
}

LevelSubcomplex level_subcomplex(const WeightedComplex& k, const MorseFunction& f, const Rational& c)
{
    const auto cells = k.simplices();
    const auto values = f.values();
    std::vector<char> member(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (values[i] <= c && !member[i])
            for (const Simplex& face : closure(cells[i]))
                member[*k.complex().index_of(face)] = 1;
    std::vector<Simplex> keep;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (member[i])
            keep.push_back(cells[i]);
    return {c, k.restrict(keep)};
}

bool CollapseCertificate::all_same_weight() const
{
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const PreservationVerdict& v) { return v.tag == Verdict::SameWeight; });
}

CollapseCertificate morse_collapse(const WeightedComplex& k, const MorseFunction& f, const Rational& a,
                                   const Rational& b)
{
    if (!(a < b))
        throw Error(ErrorCode::InvalidArgument, "collapse window needs a < b");

    const auto info = classify(k, f);
    for (const CellInfo& c : info)
    {
        if (!(a < c.value && c.value <= b))
            continue;
        if (c.critical)
            throw Error(ErrorCode::HypothesisFailed, to_string(c.cell) + " is critical", {c.cell});
        if (!c.w_simple)
            throw Error(ErrorCode::HypothesisFailed, to_string(c.cell) + " is not w-simple", {c.cell});
    }

    std::vector<Rational> levels;
    for (const Rational& v : f.distinct_values())
        if (a < v && v <= b)
            levels.push_back(v);

    CollapseCertificate cert{a, b, level_subcomplex(k, f, b).complex, {}, {}, {}, {}, {}};
    WeightedComplex current = cert.from;

    // one distinct value at a time, from the top of the window down
    for (std::size_t li = levels.size(); li-- > 0;)
    {
        const Rational& v = levels[li];
        const Rational& below = li > 0 ? levels[li - 1] : a;
        WeightedComplex target = level_subcomplex(k, f, below).complex;

        std::vector<Simplex> removed;
        for (const Simplex& s : current.simplices())
            if (!target.contains(s))
                removed.push_back(s);

        // pair each removed cell at value v with its unique high facet
        std::vector<CollapseStep> pairs;
        std::vector<Simplex> used;
        for (const CellInfo& c : info)
        {
            if (c.value != v || c.high_facets.empty() || !current.contains(c.cell) || target.contains(c.cell))
                continue;
            pairs.push_back({c.high_facets.front(), c.cell});
            used.push_back(c.high_facets.front());
            used.push_back(c.cell);
        }
        std::sort(used.begin(), used.end());
        if (used != removed)
            throw Error(ErrorCode::HypothesisFailed,
                        "cells leaving K(" + to_string(v) + ") do not pair off into collapses");

        std::stable_sort(pairs.begin(), pairs.end(), [](const CollapseStep& x, const CollapseStep& y) {
            if (x.coface.dimension() != y.coface.dimension())
                return x.coface.dimension() > y.coface.dimension();
            return x.coface < y.coface;
        });

        while (!pairs.empty())
        {
            auto it = std::find_if(pairs.begin(), pairs.end(), [&](const CollapseStep& p) {
                auto up = free_face_of(current.complex(), p.face);
                return up && *up == p.coface;
            });
            if (it == pairs.end())
                throw Error(ErrorCode::HypothesisFailed,
                            "no free pair left while collapsing level " + to_string(v));
            auto [next, step] = elementary_collapse(current, it->face);
            cert.verdicts.push_back(check_preservation(current, step));
            cert.steps.push_back(std::move(step));
            current = std::move(next);
            pairs.erase(it);
        }
        if (!(current == target))
            throw std::logic_error("collapse did not reach the lower level subcomplex");
    }

    cert.to = std::move(current);
    cert.homology_from = homology(cert.from, k.dimension());
    cert.homology_to = homology(cert.to, k.dimension());
    return cert;
}

RemovalCertificate critical_window(const WeightedComplex& k, const MorseFunction& f, const Simplex& cell,
                                   const Rational& a, const Rational& b, bool require_w_simple)
{
    const auto info = classify(k, f);
    auto self = std::find_if(info.begin(), info.end(), [&](const CellInfo& c) { return c.cell == cell; });
    if (self == info.end())
        throw Error(ErrorCode::NotInComplex, to_string(cell) + " is not in the complex", {cell});
    if (!self->critical)
        throw Error(ErrorCode::NotCritical, to_string(cell) + " is not critical", {cell});
    const Rational fa = self->value;
    if (!(a < fa && fa <= b))
        throw Error(ErrorCode::HypothesisFailed, "f" + to_string(cell) + " = " + to_string(fa)
                                                     + " is outside (" + to_string(a) + ", " + to_string(b) + "]",
                    {cell});

    Rational a_prime = a;
    for (const CellInfo& c : info)
    {
        if (c.cell == cell)
            continue;
        if (c.critical && a < c.value && c.value <= b)
            throw Error(ErrorCode::ExtraCritical, to_string(c.cell) + " is also critical in the window", {c.cell});
        if (c.value == fa)
            throw Error(ErrorCode::NoValidAPrime, to_string(c.cell) + " shares the value " + to_string(fa),
                        {c.cell});
        if (a <= c.value && c.value < fa && c.value > a_prime)
            a_prime = c.value;
    }

    RemovalCertificate cert;
    cert.critical = cell;
    cert.a = a;
    cert.b = b;
    cert.a_prime = a_prime;
    cert.level_a_prime = level_subcomplex(k, f, a_prime).complex;
    cert.level_critical = level_subcomplex(k, f, fa).complex;
    cert.critical_is_maximal = cert.level_critical.contains(cell) && cert.level_critical.complex().is_maximal(cell);
    if (cert.level_critical.contains(cell))
    {
        const Simplex gone[] = {cell};
        cert.removal_matches = cert.level_critical.without(gone) == cert.level_a_prime;
    }
    cert.homology_critical = homology(cert.level_critical, k.dimension());

    for (const CellInfo& c : info)
    {
        const bool lower_band = a < c.value && c.value <= a_prime;
        const bool upper_band = fa < c.value && c.value <= b;
        if ((lower_band || upper_band) && !c.w_simple)
        {
            cert.w_simple_failure = c.cell;
            break;
        }
    }
    if (cert.w_simple_failure)
    {
        if (require_w_simple)
            throw Error(ErrorCode::WSimpleFailed, to_string(*cert.w_simple_failure) + " is not w-simple",
                        {*cert.w_simple_failure});
        return cert;
    }

    auto collapse_or_empty = [&](const Rational& lo, const Rational& hi) {
        if (lo < hi)
            return morse_collapse(k, f, lo, hi);
        CollapseCertificate same{lo, hi, level_subcomplex(k, f, hi).complex, {}, {}, {}, {}, {}};
        same.to = same.from;
        same.homology_from = homology(same.from, k.dimension());
        same.homology_to = same.homology_from;
        return same;
    };
    cert.upper = collapse_or_empty(fa, b);
    cert.lower = collapse_or_empty(a, a_prime);

    if (k.weight(cell) != 0 && cert.critical_is_maximal)
        cert.relations = elementary_removal(cert.level_critical, cell).second;
    return cert;
}

} // namespace wmorse
