#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wmorse/sequence.hpp"

using namespace wmorse;
using namespace wmorse::testing;

namespace
{

const LetterWeights kDna{{'A', 1}, {'C', 2}, {'G', 3}, {'T', 4}};
const LetterWeights kDnaAlt{{'A', 1}, {'C', 2}, {'G', 1}, {'T', 3}};

std::vector<HomologyGroup> fp(std::string_view s, const LetterWeights& w, WocType t,
                              const Alphabet& alphabet = Alphabet::dna())
{
    return sequence_fingerprint(Sequence::parse(s, alphabet), w, t);
}

// Brute-force substrings of length 1 .. n-1.
std::set<std::string> all_proper_substrings(const std::string& s)
{
    std::set<std::string> out;
    for (std::size_t len = 1; len < s.size(); ++len)
        for (std::size_t i = 0; i + len <= s.size(); ++i)
            out.insert(s.substr(i, len));
    return out;
}

std::string random_sequence(std::mt19937_64& rng, std::size_t n, const std::string& symbols)
{
    std::uniform_int_distribution<std::size_t> d(0, symbols.size() - 1);
    std::string s;
    for (std::size_t i = 0; i < n; ++i)
        s += symbols[d(rng)];
    return s;
}

} // namespace

TEST_CASE("substring poset of CTC")
{
    SubstringPoset p = substrings(Sequence::parse("CTC", Alphabet::dna()));
    CHECK(p.elements() == std::vector<std::string>{"C", "CT", "T", "TC"});
    auto at = [&](const char* s) { return *p.index_of(s); };
    CHECK(p.precedes(at("C"), at("CT")));
    CHECK(p.precedes(at("T"), at("CT")));
    CHECK(p.precedes(at("C"), at("TC")));
    CHECK(p.precedes(at("T"), at("TC")));
    CHECK_FALSE(p.precedes(at("CT"), at("TC")));
    CHECK_FALSE(p.precedes(at("CT"), at("C")));

    SubstringPoset q = substrings(Sequence::parse("ACTGG", Alphabet::dna()));
    CHECK(q.index_of("AC").has_value());
    CHECK_FALSE(q.index_of("AT").has_value());
    CHECK_FALSE(q.index_of("ACTGG").has_value());
}

TEST_CASE("poset axioms and size bound on random sequences")
{
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<std::size_t> len(1, 9);
    for (int trial = 0; trial < 120; ++trial)
    {
        const std::string s = random_sequence(rng, len(rng), "ACGT");
        SubstringPoset p = substrings(Sequence::parse(s, Alphabet::dna()));
        const auto expected = all_proper_substrings(s);
        CHECK(std::set<std::string>(p.elements().begin(), p.elements().end()) == expected);
        CHECK(p.size() <= s.size() * (s.size() + 1) / 2 - 1);
        const std::size_t n = p.size();
        for (std::size_t i = 0; i < n; ++i)
        {
            CHECK(p.precedes(i, i));
            for (std::size_t j = 0; j < n; ++j)
            {
                CHECK(p.precedes(i, j) == (p.elements()[j].find(p.elements()[i]) != std::string::npos));
                if (i != j && p.precedes(i, j))
                    CHECK_FALSE(p.precedes(j, i));
                for (std::size_t k = 0; k < n; ++k)
                    if (p.precedes(i, j) && p.precedes(j, k))
                        CHECK(p.precedes(i, k));
            }
        }
    }
}

TEST_CASE("order complex of CTC is a 4-cycle")
{
    OrderComplex oc = order_complex(substrings(Sequence::parse("CTC", Alphabet::dna())));
    CHECK(oc.names == std::vector<std::string>{"C", "CT", "T", "TC"});
    CHECK(oc.complex.of_dimension(0).size() == 4);
    // C=0, CT=1, T=2, TC=3
    CHECK(oc.complex.of_dimension(1) == std::vector<Simplex>{S({0, 1}), S({0, 3}), S({1, 2}), S({2, 3})});
    CHECK(oc.complex.of_dimension(2).empty());
}

TEST_CASE("order complex of xyyy")
{
    OrderComplex oc = order_complex(substrings(Sequence::parse("xyyy", Alphabet::custom("xy"))));
    CHECK(oc.names == std::vector<std::string>{"x", "xy", "xyy", "y", "yy", "yyy"});
    CHECK(oc.complex.of_dimension(1).size() == 9);
    CHECK(oc.complex.of_dimension(2)
          == std::vector<Simplex>{S({0, 1, 2}), S({1, 2, 3}), S({2, 3, 4}), S({3, 4, 5})});
}

TEST_CASE("simplices of the order complex are exactly the chains")
{
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 40; ++trial)
    {
        const std::string s = random_sequence(rng, 5, "AB");
        SubstringPoset p = substrings(Sequence::parse(s, Alphabet::custom("AB")));
        OrderComplex oc = order_complex(p);
        const std::size_t n = p.size();
        REQUIRE(n < 16);
        std::size_t chains = 0;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask)
        {
            std::vector<Vertex> v;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i))
                    v.push_back(static_cast<Vertex>(i));
            bool chain = true;
            for (std::size_t a = 0; a < v.size() && chain; ++a)
                for (std::size_t b = a + 1; b < v.size() && chain; ++b)
                    chain = p.precedes(v[a], v[b]) || p.precedes(v[b], v[a]);
            CHECK(oc.complex.contains(Simplex::from_vertices(v)) == chain);
            chains += chain ? 1 : 0;
        }
        CHECK(oc.complex.size() == chains);
    }
}

TEST_CASE("WOC weights of CTC and xyyy")
{
    auto woc = build_woc(Sequence::parse("CTC", Alphabet::dna()), kDna, WocType::Type2);
    // C=0, CT=1, T=2, TC=3
    CHECK(woc.complex.weight(S({1})) == 4);
    CHECK(woc.complex.weight(S({3})) == 4);
    CHECK(woc.complex.weight(S({0, 3})) == 8);

    const long long a = 6, b = 10;
    auto x = build_woc(Sequence::parse("xyyy", Alphabet::custom("xy")), {{'x', a}, {'y', b}}, WocType::Type3);
    // x, xy, xyy, y, yy, yyy
    const std::vector<long long> vertex{a, a * b, a * b * b, b, b * b, b * b * b};
    for (Vertex i = 0; i < 6; ++i)
        CHECK(x.complex.weight(S({i})) == vertex[i]);
    CHECK(x.complex.weight(S({0, 1, 2})) == lcm(lcm(Integer(a), Integer(a * b)), Integer(a * b * b)));
}

TEST_CASE("WOC weights match the type rules on random sequences")
{
    std::mt19937_64 rng(303);
    const LetterWeights w{{'A', 2}, {'C', 3}, {'G', 4}, {'T', 6}};
    for (int trial = 0; trial < 40; ++trial)
    {
        const std::string s = random_sequence(rng, 6, "ACGT");
        for (int t = 1; t <= 4; ++t)
        {
            const WocType type = woc_type_from_int(t);
            const bool string_product = t == 3 || t == 4;
            const bool chain_product = t == 2 || t == 4;
            auto woc = build_woc(Sequence::parse(s, Alphabet::dna()), w, type);
            auto vertex_weight = [&](const std::string& str) {
                Integer acc = 1;
                for (char c : str)
                    acc = string_product ? acc * w.at(c) : lcm(acc, w.at(c));
                return acc;
            };
            for (std::size_t i = 0; i < woc.complex.size(); ++i)
            {
                const Simplex& sigma = woc.complex.simplices()[i];
                Integer acc = 1;
                for (Vertex v : sigma.vertices())
                {
                    Integer vw = vertex_weight(woc.names[v]);
                    acc = chain_product ? acc * vw : lcm(acc, vw);
                }
                CHECK(woc.complex.weights()[i] == acc);
            }
        }
    }
}

TEST_CASE("DNA fingerprints")
{
    CHECK(fp("CTC", kDna, WocType::Type2)[0] == make_group(1, {2, 2, 4}));
    CHECK(fp("GTG", kDna, WocType::Type2)[0] == make_group(1, {12}));
    CHECK(fp("AAA", kDna, WocType::Type2)[0] == make_group(1));
    // CCT is not told apart from CTC in H0 under these weights ...
    CHECK(fp("CCT", kDna, WocType::Type2)[0] == fp("CTC", kDna, WocType::Type2)[0]);
    // ... but is under the alternative weights
    CHECK(fp("CTC", kDnaAlt, WocType::Type2)[0] == make_group(1, {6}));
    CHECK(fp("CCT", kDnaAlt, WocType::Type2)[0] == make_group(1, {2, 6}));
}

TEST_CASE("xyyy fingerprint is Z + Z/gcd(a,b)")
{
    for (long long a = 1; a <= 12; ++a)
        for (long long b = 1; b <= 12; ++b)
        {
            auto h = fp("xyyy", {{'x', a}, {'y', b}}, WocType::Type3, Alphabet::custom("xy"));
            REQUIRE(h.size() == 3);
            const long long g = std::gcd(a, b);
            CHECK(h[0] == (g == 1 ? make_group(1) : make_group(1, {g})));
            CHECK(h[1].is_zero());
            CHECK(h[2].is_zero());
        }
}

TEST_CASE("x^n fingerprint is Z")
{
    for (std::size_t n = 2; n <= 8; ++n)
        for (long long a : {1LL, 2LL, 7LL})
        {
            auto h = fp(std::string(n, 'x'), {{'x', a}}, WocType::Type3, Alphabet::custom("x"));
            CHECK(h[0] == make_group(1));
            for (std::size_t i = 1; i < h.size(); ++i)
                CHECK(h[i].is_zero());
        }
}

TEST_CASE("sequence input errors")
{
    CHECK(error_of([] { Sequence::parse("", Alphabet::dna()); }) == ErrorCode::EmptySequence);
    CHECK(error_of([] { Sequence::parse("ACX", Alphabet::dna()); }) == ErrorCode::UnknownSymbol);
    CHECK(error_of([] { fp("ACG", {{'A', 1}, {'C', 2}}, WocType::Type1); }) == ErrorCode::UnweightedSymbol);
    CHECK(error_of([] { fp("AC", {{'A', 0}, {'C', 2}}, WocType::Type1); }) == ErrorCode::ZeroLetterWeight);
    CHECK(error_of([] { woc_type_from_int(5); }) == ErrorCode::InvalidArgument);
    CHECK(parse_letter_weights("A=1, C=20") == LetterWeights{{'A', 1}, {'C', 20}});
    CHECK(error_of([] { parse_letter_weights("A1"); }) == ErrorCode::ParseError);
    CHECK(Alphabet::from_name("rna").symbols() == "ACGU");
    CHECK(Alphabet::from_name("bin").contains('1'));
}

TEST_CASE("dimension cap")
{
    auto full = fp("xxxxx", {{'x', 2}}, WocType::Type3, Alphabet::custom("x"));
    CHECK(full.size() == 4);
    auto capped = sequence_fingerprint(Sequence::parse("xxxxx", Alphabet::custom("x")), {{'x', 2}}, WocType::Type3, 1);
    CHECK(capped.size() == 2);
    CHECK(capped[0] == full[0]);
    CHECK(capped[1] == full[1]);
}
