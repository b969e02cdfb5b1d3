#include <doctest.h>

#include <string>

#include "support.hpp"
#include "wmorse/collapse.hpp"

using namespace wmorse;
using namespace wmorse::testing;

TEST_CASE("collapse sequence of K0 and its verdicts")
{
    const WeightedComplex k = k0();
    std::vector<Simplex> faces{S({1, 2}), S({1}), S({0})};
    CollapseTrace t = collapse_sequence(k, faces);
    REQUIRE(t.steps.size() == 3);
    CHECK(t.steps[0] == CollapseStep{S({1, 2}), S({0, 1, 2})});
    CHECK(t.steps[1] == CollapseStep{S({1}), S({0, 1})});
    CHECK(t.steps[2] == CollapseStep{S({0}), S({0, 2})});
    CHECK(t.verdicts[0].tag == Verdict::SameWeight);
    CHECK(t.verdicts[1].tag == Verdict::NotGuaranteed);
    CHECK(t.verdicts[2].tag == Verdict::NotGuaranteed);
    CHECK(t.verdicts[1].face_weight == 1);
    CHECK(t.verdicts[1].coface_weight == 2);
    CHECK_FALSE(t.guaranteed());
    CHECK(t.result.simplices().size() == 1);
    CHECK(t.result.simplices()[0] == S({2}));

    // the first step is guaranteed and preserves homology; the second changes
    // H0; the third preserves it without a guarantee
    auto h = [&](const WeightedComplex& x) { return homology(x, 2); };
    WeightedComplex k1 = elementary_collapse(k, S({1, 2})).first;
    WeightedComplex k2 = elementary_collapse(k1, S({1})).first;
    WeightedComplex k3 = elementary_collapse(k2, S({0})).first;
    CHECK(h(k) == h(k1));
    CHECK(h(k1) != h(k2));
    CHECK(h(k2) == h(k3));
}

TEST_CASE("non-free faces are rejected with the step index")
{
    const WeightedComplex k = k0();
    CHECK(error_of([&] { elementary_collapse(k, S({1})); }) == ErrorCode::NotFreeFace);
    CHECK(error_of([&] { elementary_collapse(k, S({5})); }) == ErrorCode::NotFreeFace);
    std::vector<Simplex> faces{S({1, 2}), S({0, 1})};
    try
    {
        collapse_sequence(k, faces);
        FAIL("expected NotFreeFace");
    }
    catch (const Error& e)
    {
        CHECK(e.code() == ErrorCode::NotFreeFace);
        CHECK(std::string(e.what()).starts_with("step 2: "));
    }
}

TEST_CASE("verdict tags")
{
    WeightedComplex k = wsc({{{0}, 1}, {{1}, 2}, {{0, 1}, -2}});
    CHECK(check_preservation(k, {S({1}), S({0, 1})}).tag == Verdict::Associate);
    CHECK(check_preservation(k, {S({0}), S({0, 1})}).tag == Verdict::NotGuaranteed);

    WeightedComplex z = wsc({{{0}, 0}, {{1}, 1}, {{0, 1}, 0}});
    auto v = check_preservation(z, {S({0}), S({0, 1})});
    CHECK(v.tag == Verdict::BothZero);
    CHECK_FALSE(v.guaranteed());
    CHECK(to_string(Verdict::SameWeight) == "SameWeight");
}

TEST_CASE("greedy collapse of a constant-weight triangle")
{
    WeightedComplex k = WeightedComplex::constant(full_simplex(3), 1);
    CollapseTrace t = greedy_collapse(k);
    CHECK(t.steps.size() == 3);
    CHECK(t.result.size() == 1);
    CHECK(t.guaranteed());
    CHECK(t.steps[0].face == S({0, 1}));
    CHECK(free_faces(k.complex()) == std::vector<Simplex>{S({0, 1}), S({0, 2}), S({1, 2})});
}

TEST_CASE("guaranteed collapses preserve homology on random complexes")
{
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial)
    {
        WeightedComplex k = random_wsc(rng);
        const auto before = homology(k);
        for (const Simplex& f : free_faces(k.complex()))
        {
            auto [l, step] = elementary_collapse(k, f);
            if (!check_preservation(k, step).guaranteed())
                continue;
            auto after = homology(l, k.dimension());
            CHECK(after == before);
            ++checked;
        }
    }
    CHECK(checked > 50);
}

TEST_CASE("removing an edge of the hollow triangle")
{
    const WeightedComplex k = triangle_boundary();
    auto [l, r] = elementary_removal(k, S({1, 2}));
    CHECK(l.size() == 5);
    CHECK(r.class_order.kind == ClassOrder::Kind::Zero);
    auto hl = homology(l, 1);
    CHECK(hl[0] == make_group(1, {2, 2}));
    CHECK(hl[1] == make_group(0));
    CHECK(r.predicted_lower == make_group(1, {2, 2}));
    CHECK(r.predicted_upper == make_group(1));
    CHECK(r.predicted_before() == homology(k));
}

TEST_CASE("removing the 2-cell of K0")
{
    const WeightedComplex k = k0();
    auto [l, r] = elementary_removal(k, S({0, 1, 2}));
    CHECK(r.boundary == std::vector<Integer>{2, -2, 1});
    const auto hk = homology(k);
    const auto hl = homology(l, 2);
    // the boundary generates H1(L) = Z, so its class has infinite order and
    // H1 is killed while H2 stays zero
    CHECK(hl[1] == make_group(1));
    CHECK(r.class_order.kind == ClassOrder::Kind::Infinite);
    CHECK(r.predicted_lower == hk[1]);
    CHECK(r.predicted_upper == hk[2]);
    CHECK(r.predicted_before() == hk);
}

TEST_CASE("removal preconditions")
{
    const WeightedComplex k = k0();
    CHECK(error_of([&] { elementary_removal(k, S({0, 1})); }) == ErrorCode::NotMaximal);
    CHECK(error_of([&] { elementary_removal(k, S({3})); }) == ErrorCode::NotInComplex);
    WeightedComplex z = wsc({{{0}, 0}, {{1}, 1}, {{0, 1}, 0}});
    CHECK(error_of([&] { elementary_removal(z, S({0, 1})); }) == ErrorCode::ZeroWeight);
}
