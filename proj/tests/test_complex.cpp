#include <doctest.h>

#include "support.hpp"
#include "wmorse/complex.hpp"
#include "wmorse/numeric.hpp"

using namespace wmorse;
using namespace wmorse::testing;

TEST_CASE("simplex construction sorts and rejects bad vertex lists")
{
    Simplex s = Simplex::from_vertices({2, 0, 1});
    CHECK(to_string(s) == "[0,1,2]");
    CHECK(s.dimension() == 2);
    CHECK(error_of([] { Simplex::from_vertices({}); }) == ErrorCode::EmptySimplex);
    CHECK(error_of([] { Simplex::from_vertices({1, 1}); }) == ErrorCode::DuplicateVertex);
}

TEST_CASE("faces drop one vertex each in index order")
{
    Simplex s{0, 1, 2};
    auto f = faces(s);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == S({1, 2}));
    CHECK(f[1] == S({0, 2}));
    CHECK(f[2] == S({0, 1}));
    CHECK(faces(S({4})).empty());
    CHECK(closure(s).size() == 7);
    CHECK(S({0, 2}).is_proper_face_of(s));
    CHECK_FALSE(s.is_proper_face_of(s));
    CHECK(S({0, 1}) < S({0, 2}));
    CHECK(S({0, 1}) < S({1}));
}

TEST_CASE("complex validation reports the first missing face")
{
    auto missing = [] { SimplicialComplex::from_simplices({S({0, 1}), S({0})}); };
    CHECK(error_of(missing) == ErrorCode::NotFaceClosed);
    try
    {
        missing();
    }
    catch (const Error& e)
    {
        REQUIRE(e.witnesses().size() == 1);
        CHECK(e.witnesses()[0] == S({1}));
    }
    CHECK(error_of([] { SimplicialComplex::from_simplices({S({0}), S({0})}); }) == ErrorCode::DuplicateSimplex);
}

TEST_CASE("weighted validation")
{
    CHECK_NOTHROW(k0());
    CHECK(k0().weight(S({1, 2})) == 4);

    // 2 does not divide 3
    CHECK(error_of([] { wsc({{{0}, 2}, {{1}, 1}, {{0, 1}, 3}}); }) == ErrorCode::DivisibilityViolation);
    // zero divides only zero
    CHECK(error_of([] { wsc({{{0}, 0}, {{1}, 1}, {{0, 1}, 5}}); }) == ErrorCode::DivisibilityViolation);
    CHECK_NOTHROW(wsc({{{0}, 0}, {{1}, 1}, {{0, 1}, 0}}));
    // signs are allowed
    CHECK_NOTHROW(wsc({{{0}, -1}, {{1}, 2}, {{0, 1}, -2}}));

    // checks run in a fixed order: duplicate vertex before closure
    WeightedComplex::Candidate c{{{0, 0}, Integer(1)}, {{5, 6}, Integer(1)}};
    CHECK(error_of([&] { WeightedComplex::validate(c); }) == ErrorCode::DuplicateVertex);
    CHECK(error_of([&] { k0().weight(S({7})); }) == ErrorCode::NotInComplex);
}

TEST_CASE("free faces and restriction")
{
    const WeightedComplex k = k0();
    CHECK(free_face_of(k.complex(), S({1, 2})) == S({0, 1, 2}));
    CHECK_FALSE(free_face_of(k.complex(), S({1})).has_value());
    CHECK_FALSE(free_face_of(k.complex(), S({0, 1, 2})).has_value());

    std::vector<Simplex> k1{S({0}), S({0, 1}), S({0, 2}), S({1}), S({2})};
    WeightedComplex r = k.restrict(k1);
    CHECK(r.size() == 5);
    CHECK(r.weight(S({0, 2})) == 2);
    std::vector<Simplex> gone{S({1, 2}), S({0, 1, 2})};
    CHECK(k.without(gone) == r);
    std::vector<Simplex> not_closed{S({0, 1})};
    CHECK(error_of([&] { k.restrict(not_closed); }) == ErrorCode::NotFaceClosed);
}

TEST_CASE("random generator yields valid complexes")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i)
    {
        WeightedComplex k = random_wsc(rng);
        const auto cells = k.simplices();
        for (std::size_t j = 0; j < cells.size(); ++j)
            for (const Simplex& f : faces(cells[j]))
                CHECK(divides(k.weight(f), k.weights()[j]));
    }
}

TEST_CASE("number parsing is exact")
{
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("2.5e-1") == Rational(1, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(parse_integer("-123456789012345678901234567890") < 0);
    CHECK(error_of([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
    CHECK(error_of([] { parse_integer("12a"); }) == ErrorCode::ParseError);
    CHECK(lcm(Integer(-4), Integer(6)) == 12);
    CHECK(divides(Integer(0), Integer(0)));
    CHECK_FALSE(divides(Integer(0), Integer(3)));
}
