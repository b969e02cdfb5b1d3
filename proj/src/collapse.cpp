#include "wmorse/collapse.hpp"

#include "wmorse/errors.hpp"

namespace wmorse
{

std::string_view to_string(Verdict v)
{
    switch (v)
    {
    case Verdict::SameWeight: return "SameWeight";
    case Verdict::Associate: return "Associate";
    case Verdict::NotGuaranteed: return "NotGuaranteed";
    case Verdict::BothZero: return "BothZero";
    }
    return "?";
}

std::pair<WeightedComplex, CollapseStep> elementary_collapse(const WeightedComplex& k, const Simplex& face)
{
    if (!k.contains(face))
        throw Error(ErrorCode::NotFreeFace, to_string(face) + " is not in the complex", {face});
    auto coface = free_face_of(k.complex(), face);
    if (!coface)
        throw Error(ErrorCode::NotFreeFace, to_string(face) + " is not a free face", {face});
    CollapseStep step{face, *coface};
    const Simplex removed[] = {face, *coface};
    return {k.without(removed), std::move(step)};
}

PreservationVerdict check_preservation(const WeightedComplex& k, const CollapseStep& step)
{
    PreservationVerdict v{Verdict::NotGuaranteed, k.weight(step.face), k.weight(step.coface)};
    if (v.face_weight == 0 && v.coface_weight == 0)
        v.tag = Verdict::BothZero;
    else if (v.face_weight != 0 && v.face_weight == v.coface_weight)
        v.tag = Verdict::SameWeight;
    else if (v.face_weight != 0 && v.coface_weight == -v.face_weight)
        v.tag = Verdict::Associate;
    return v;
}

bool CollapseTrace::guaranteed() const
{
    for (const auto& v : verdicts)
        if (!v.guaranteed())
            return false;
    return true;
}

CollapseTrace collapse_sequence(const WeightedComplex& k, std::span<const Simplex> faces)
{
    CollapseTrace trace{k, {}, {}};
    for (std::size_t i = 0; i < faces.size(); ++i)
    {
        std::pair<WeightedComplex, CollapseStep> next;
        try
        {
            next = elementary_collapse(trace.result, faces[i]);
        }
        catch (const Error& e)
        {
            throw Error(e.code(), "step " + std::to_string(i + 1) + ": " + e.what(), e.witnesses());
        }
        trace.verdicts.push_back(check_preservation(trace.result, next.second));
        trace.steps.push_back(std::move(next.second));
        trace.result = std::move(next.first);
    }
    return trace;
}

std::vector<Simplex> free_faces(const SimplicialComplex& k)
{
    std::vector<Simplex> out;
    for (const Simplex& s : k.simplices())
        if (free_face_of(k, s))
            out.push_back(s);
    return out;
}

CollapseTrace greedy_collapse(const WeightedComplex& k)
{
    CollapseTrace trace{k, {}, {}};
    for (;;)
    {
        std::optional<Simplex> pick;
        for (const Simplex& s : trace.result.simplices())
            if (free_face_of(trace.result.complex(), s))
            {
                pick = s;
                break;
            }
        if (!pick)
            return trace;
        auto [next, step] = elementary_collapse(trace.result, *pick);
        trace.verdicts.push_back(check_preservation(trace.result, step));
        trace.steps.push_back(std::move(step));
        trace.result = std::move(next);
    }
}

std::vector<HomologyGroup> RemovalReport::predicted_before() const
{
    std::vector<HomologyGroup> out = homology_after;
    const int n = dimension();
    if (static_cast<int>(out.size()) <= n)
        out.resize(static_cast<std::size_t>(n + 1));
    if (n >= 1)
        out[static_cast<std::size_t>(n - 1)] = predicted_lower;
    out[static_cast<std::size_t>(n)] = predicted_upper;
    return out;
}

std::pair<WeightedComplex, RemovalReport> elementary_removal(const WeightedComplex& k, const Simplex& s)
{
    if (!k.contains(s))
        throw Error(ErrorCode::NotInComplex, to_string(s) + " is not in the complex", {s});
    if (!k.complex().is_maximal(s))
        throw Error(ErrorCode::NotMaximal, to_string(s) + " is not a maximal face", {s});
    if (k.weight(s) == 0)
        throw Error(ErrorCode::ZeroWeight, to_string(s) + " has zero weight", {s});

    const Simplex removed[] = {s};
    WeightedComplex l = k.without(removed);
    const int n = s.dimension();

    WeightedBoundary bl = boundary_matrices(l);
    RemovalReport report;
    report.removed = s;
    // C_{n-1}(L) = C_{n-1}(K): only an n-cell was removed
    report.boundary = weighted_boundary_of(k, bl.basis, s);
    report.homology_after = homology(l, k.dimension());

    const IntMatrix into_lower = bl.matrix(n);   // d_n of L
    report.class_order = (n == 0) ? ClassOrder{} : class_order_modulo(into_lower, report.boundary);

    if (n >= 1)
    {
        // H_{n-1}(L) / <[d s]>: append the column to d_n of L
        report.predicted_lower
            = homology_from(bl.basis.rank(n - 1), bl.matrix(n - 1), into_lower.with_column(report.boundary));
    }

    report.predicted_upper = report.homology_after[static_cast<std::size_t>(n)];
    if (report.class_order.is_torsion())
        report.predicted_upper.free_rank += 1;

    return {std::move(l), std::move(report)};
}

} // namespace wmorse
