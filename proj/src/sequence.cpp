#include "wmorse/sequence.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "wmorse/errors.hpp"

namespace wmorse
{

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {}

Alphabet Alphabet::dna() { return Alphabet("ACGT"); }
Alphabet Alphabet::rna() { return Alphabet("ACGU"); }
Alphabet Alphabet::binary() { return Alphabet("01"); }
Alphabet Alphabet::hex() { return Alphabet("0123456789ABCDEF"); }

Alphabet Alphabet::custom(std::string_view symbols)
{
    std::string s(symbols);
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error(ErrorCode::InvalidArgument, "alphabet must list distinct symbols");
    return Alphabet(std::move(s));
}

Alphabet Alphabet::from_name(std::string_view name)
{
    if (name == "dna")
        return dna();
    if (name == "rna")
        return rna();
    if (name == "bin")
        return binary();
    if (name == "hex")
        return hex();
    return custom(name);
}

Sequence Sequence::parse(std::string_view text, const Alphabet& alphabet)
{
    if (text.empty())
        throw Error(ErrorCode::EmptySequence, "empty sequence");
    for (char c : text)
        if (!alphabet.contains(c))
            throw Error(ErrorCode::UnknownSymbol,
                        std::string("symbol '") + c + "' is not in the alphabet {" + alphabet.symbols() + "}");
    return Sequence(std::string(text));
}

// ---------------------------------------------------------------------------

SubstringPoset::SubstringPoset(std::vector<std::string> elements) : elements_(std::move(elements))
{
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const std::size_t n = elements_.size();
    relation_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            relation_[i * n + j] = elements_[j].find(elements_[i]) != std::string::npos;
}

std::optional<std::size_t> SubstringPoset::index_of(std::string_view s) const
{
    auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
    if (it == elements_.end() || *it != s)
        return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

SubstringPoset substrings(const Sequence& s)
{
    const std::string& text = s.str();
    std::set<std::string> found;
    for (std::size_t len = 1; len < text.size(); ++len)
        for (std::size_t start = 0; start + len <= text.size(); ++start)
            found.insert(text.substr(start, len));
    return SubstringPoset(std::vector<std::string>(found.begin(), found.end()));
}

OrderComplex order_complex(const SubstringPoset& p, std::optional<int> max_dim)
{
    const std::size_t n = p.size();
    const std::size_t max_len = max_dim ? static_cast<std::size_t>(std::max(*max_dim, 0)) + 1 : n;

    // strict successors of each element
    std::vector<std::vector<std::size_t>> above(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && p.precedes(i, j))
                above[i].push_back(j);

    std::vector<std::vector<Simplex>> per_start(n);
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1) if (n > 32)
    for (std::ptrdiff_t start = 0; start < count; ++start)
    {
        std::vector<Vertex> chain{static_cast<Vertex>(start)};
        auto& out = per_start[start];
        // iterative DFS; each chain is visited once, growing upward
        std::vector<std::size_t> cursor{0};
        out.push_back(Simplex::from_vertices(chain));
        while (!cursor.empty())
        {
            const std::size_t top = chain.back();
            std::size_t& k = cursor.back();
            if (chain.size() >= max_len || k >= above[top].size())
            {
                chain.pop_back();
                cursor.pop_back();
                continue;
            }
            const std::size_t next = above[top][k++];
            chain.push_back(static_cast<Vertex>(next));
            cursor.push_back(0);
            out.push_back(Simplex::from_vertices(chain));
        }
    }

    std::vector<Simplex> all;
    for (auto& v : per_start)
        all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
    return {SimplicialComplex::from_simplices(std::move(all)), p.elements()};
}

// ---------------------------------------------------------------------------

WocType woc_type_from_int(int t)
{
    if (t < 1 || t > 4)
        throw Error(ErrorCode::InvalidArgument, "WOC type must be 1, 2, 3 or 4");
    return static_cast<WocType>(t);
}

LetterWeights parse_letter_weights(std::string_view text)
{
    LetterWeights out;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.remove_prefix(1);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.remove_suffix(1);
        auto eq = item.find('=');
        if (eq != 1)
            throw Error(ErrorCode::ParseError, "expected SYMBOL=WEIGHT, got '" + std::string(item) + "'");
        if (out.contains(item[0]))
            throw Error(ErrorCode::ParseError, std::string("symbol '") + item[0] + "' weighted twice");
        out[item[0]] = parse_integer(item.substr(2));
        pos = end + 1;
    }
    return out;
}

namespace
{

bool string_rule_is_lcm(WocType t) { return t == WocType::Type1 || t == WocType::Type2; }
bool chain_rule_is_lcm(WocType t) { return t == WocType::Type1 || t == WocType::Type3; }

void check_weights(const Sequence& s, const LetterWeights& weights)
{
    for (const auto& [c, w] : weights)
        if (w <= 0)
            throw Error(ErrorCode::ZeroLetterWeight, std::string("weight of '") + c + "' must be positive");
    for (char c : s.str())
        if (!weights.contains(c))
            throw Error(ErrorCode::UnweightedSymbol, std::string("symbol '") + c + "' has no weight");
}

} // namespace

Integer string_weight(std::string_view s, const LetterWeights& weights, WocType t)
{
    Integer w = 1;
    for (char c : s)
    {
        const Integer& x = weights.at(c);
        w = string_rule_is_lcm(t) ? lcm(w, x) : Integer(w * x);
    }
    return w;
}

WeightedOrderComplex build_woc(const Sequence& s, const LetterWeights& weights, WocType t,
                               std::optional<int> max_dim)
{
    check_weights(s, weights);
    OrderComplex oc = order_complex(substrings(s), max_dim);

    std::vector<Integer> vertex_weight;
    vertex_weight.reserve(oc.names.size());
    for (const std::string& name : oc.names)
        vertex_weight.push_back(string_weight(name, weights, t));

    std::vector<std::pair<Simplex, Integer>> weighted;
    weighted.reserve(oc.complex.size());
    for (const Simplex& sigma : oc.complex.simplices())
    {
        Integer w = 1;
        for (Vertex v : sigma.vertices())
            w = chain_rule_is_lcm(t) ? lcm(w, vertex_weight[v]) : Integer(w * vertex_weight[v]);
        weighted.emplace_back(sigma, std::move(w));
    }
    return {WeightedComplex::from_weights(std::move(weighted)), std::move(oc.names)};
}

std::vector<HomologyGroup> sequence_fingerprint(const Sequence& s, const LetterWeights& weights, WocType t,
                                                std::optional<int> max_dim)
{
    std::optional<int> build_cap;
    if (max_dim)
        build_cap = *max_dim + 1;
    WeightedOrderComplex woc = build_woc(s, weights, t, build_cap);
    return homology(woc.complex, max_dim ? max_dim : std::optional<int>(woc.complex.dimension()));
}

} // namespace wmorse
