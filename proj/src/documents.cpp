#include "wmorse/documents.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wmorse/errors.hpp"

namespace wmorse
{

using nlohmann::json;

namespace
{

json parse_json(std::string_view text)
{
    try
    {
        return json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error& e)
    {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": malformed JSON");
    }
}

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

std::vector<Vertex> parse_vertices(const json& j, const std::string& where)
{
    if (!j.is_array())
        schema_error(where, "\"vertices\" must be an array of non-negative integers");
    std::vector<Vertex> out;
    for (const json& v : j)
    {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL)
            schema_error(where, "vertex ids must be non-negative integers");
        out.push_back(static_cast<Vertex>(v.get<long long>()));
    }
    return out;
}

Integer parse_weight(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Integer(j.get<unsigned long long>()) : Integer(j.get<long long>());
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    schema_error(where, "\"weight\" must be an integer or a decimal string");
}

Rational parse_value(const json& j, const std::string& where)
{
    if (j.is_number_integer())
        return j.is_number_unsigned() ? Rational(Integer(j.get<unsigned long long>()))
                                      : Rational(Integer(j.get<long long>()));
    if (j.is_number_float())
    {
        // shortest round-trip decimal, then exact
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
        if (ec != std::errc{})
            schema_error(where, "unrepresentable value");
        return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
    }
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    schema_error(where, "\"value\" must be a number or a string");
}

const json& records_of(const json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key) || !doc.at(key).is_array())
        schema_error("document", std::string("expected an object with a \"") + key + "\" array");
    return doc.at(key);
}

json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return json(x.convert_to<long long>());
    return json(x.str());
}

} // namespace

ComplexDocument parse_complex_document(std::string_view text, const std::optional<Integer>& constant_weight)
{
    const json doc = parse_json(text);
    const json& records = records_of(doc, "simplices");
    if (records.empty())
        throw Error(ErrorCode::EmptyComplex, "empty complex");

    ComplexDocument out;
    if (constant_weight)
    {
        std::vector<Simplex> generators;
        for (std::size_t i = 0; i < records.size(); ++i)
        {
            const std::string where = "simplex record " + std::to_string(i + 1);
            const json& r = records[i];
            if (!r.is_object() || !r.contains("vertices"))
                schema_error(where, "missing \"vertices\"");
            generators.push_back(Simplex::from_vertices(parse_vertices(r.at("vertices"), where)));
        }
        out.complex = WeightedComplex::constant(SimplicialComplex::from_maximal(generators), *constant_weight);
    }
    else
    {
        WeightedComplex::Candidate candidate;
        for (std::size_t i = 0; i < records.size(); ++i)
        {
            const std::string where = "simplex record " + std::to_string(i + 1);
            const json& r = records[i];
            if (!r.is_object() || !r.contains("vertices"))
                schema_error(where, "missing \"vertices\"");
            if (!r.contains("weight"))
                schema_error(where, "missing \"weight\"");
            candidate.emplace_back(parse_vertices(r.at("vertices"), where), parse_weight(r.at("weight"), where));
        }
        out.complex = WeightedComplex::validate(candidate);
    }

    if (doc.contains("names"))
    {
        const json& names = doc.at("names");
        if (!names.is_object())
            schema_error("names", "must be an object mapping vertex ids to strings");
        for (const auto& [key, value] : names.items())
        {
            Vertex id = 0;
            auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
            if (ec != std::errc{} || ptr != key.data() + key.size() || !value.is_string())
                schema_error("names", "bad entry \"" + key + "\"");
            out.names[id] = value.get<std::string>();
        }
    }
    return out;
}

std::string emit_complex_document(const WeightedComplex& k, std::span<const std::string> names)
{
    // one simplex record per line keeps large documents diffable
    std::string out = "{\n  \"simplices\": [\n";
    const auto cells = k.simplices();
    const auto weights = k.weights();
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
        nlohmann::ordered_json r;
        r["vertices"] = std::vector<Vertex>(cells[i].vertices().begin(), cells[i].vertices().end());
        r["weight"] = integer_json(weights[i]);
        out += "    " + r.dump() + (i + 1 < cells.size() ? ",\n" : "\n");
    }
    out += "  ]";
    if (!names.empty())
    {
        out += ",\n  \"names\": {\n";
        for (std::size_t i = 0; i < names.size(); ++i)
            out += "    " + nlohmann::json(std::to_string(i)).dump() + ": " + nlohmann::json(names[i]).dump()
                   + (i + 1 < names.size() ? ",\n" : "\n");
        out += "  }";
    }
    return out + "\n}\n";
}

std::vector<std::pair<Simplex, Rational>> parse_morse_document(std::string_view text)
{
    const json doc = parse_json(text);
    const json& records = records_of(doc, "values");
    std::vector<std::pair<Simplex, Rational>> out;
    for (std::size_t i = 0; i < records.size(); ++i)
    {
        const std::string where = "value record " + std::to_string(i + 1);
        const json& r = records[i];
        if (!r.is_object() || !r.contains("vertices") || !r.contains("value"))
            schema_error(where, "needs \"vertices\" and \"value\"");
        out.emplace_back(Simplex::from_vertices(parse_vertices(r.at("vertices"), where)),
                         parse_value(r.at("value"), where));
    }
    return out;
}

std::vector<Simplex> parse_steps_document(std::string_view text)
{
    const json doc = parse_json(text);
    const json& records = records_of(doc, "steps");
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < records.size(); ++i)
        out.push_back(Simplex::from_vertices(parse_vertices(records[i], "step " + std::to_string(i + 1))));
    return out;
}

std::vector<FastaRecord> parse_fasta(std::string_view text)
{
    std::vector<FastaRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line))
    {
        ++number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == ';')
            continue;
        if (line.front() == '>')
        {
            out.push_back({line.substr(1), {}});
            continue;
        }
        if (out.empty())
            throw Error(ErrorCode::ParseError, "line " + std::to_string(number) + ": sequence data before any '>' header");
        line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }),
                   line.end());
        out.back().sequence += line;
    }
    if (out.empty())
        throw Error(ErrorCode::ParseError, "no FASTA records");
    return out;
}

std::string format_homology(std::span<const HomologyGroup> groups)
{
    std::string out;
    for (std::size_t k = 0; k < groups.size(); ++k)
        out += "H" + std::to_string(k) + " = " + to_string(groups[k]) + "\n";
    return out;
}

std::string format_homology_inline(std::span<const HomologyGroup> groups)
{
    std::string out;
    for (std::size_t k = 0; k < groups.size(); ++k)
        out += (k ? " | H" : "H") + std::to_string(k) + " = " + to_string(groups[k]);
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace wmorse
