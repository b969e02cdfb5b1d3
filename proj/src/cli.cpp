#include "wmorse/cli.hpp"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmorse/collapse.hpp"
#include "wmorse/documents.hpp"
#include "wmorse/errors.hpp"
#include "wmorse/homology.hpp"
#include "wmorse/morse.hpp"
#include "wmorse/sequence.hpp"

namespace wmorse
{

namespace
{

using nlohmann::ordered_json;

std::optional<int> env_max_dim()
{
    const char* raw = std::getenv("WMORSE_MAX_DIM");
    if (!raw || !*raw)
        return std::nullopt;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0)
        throw Error(ErrorCode::InvalidArgument, "WMORSE_MAX_DIM must be a non-negative integer");
    return static_cast<int>(v);
}

// dim K, lowered to WMORSE_MAX_DIM when set
int report_dimension(const WeightedComplex& k)
{
    int top = k.dimension();
    if (auto cap = env_max_dim())
        top = std::min(top, *cap);
    return top;
}

ordered_json integer_json(const Integer& x)
{
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
        return x.convert_to<long long>();
    return x.str();
}

ordered_json simplex_json(const Simplex& s)
{
    return std::vector<Vertex>(s.vertices().begin(), s.vertices().end());
}

ordered_json homology_json(std::span<const HomologyGroup> groups)
{
    ordered_json arr = ordered_json::array();
    for (std::size_t k = 0; k < groups.size(); ++k)
    {
        ordered_json torsion = ordered_json::array();
        for (const Integer& t : groups[k].torsion)
            torsion.push_back(integer_json(t));
        arr.push_back({{"dimension", k}, {"free_rank", groups[k].free_rank}, {"torsion", std::move(torsion)}});
    }
    return arr;
}

// ": [a] [b]" or ":" when empty
std::string listing(std::span<const Simplex> cells)
{
    std::string out = ":";
    for (const Simplex& s : cells)
        out += " " + to_string(s);
    return out;
}

Simplex parse_cell(const std::string& text)
{
    std::vector<Vertex> vs;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        Integer v = parse_integer(item);
        if (v < 0 || v > std::numeric_limits<Vertex>::max())
            throw Error(ErrorCode::ParseError, "bad vertex id '" + item + "'");
        vs.push_back(v.convert_to<Vertex>());
    }
    return Simplex::from_vertices(std::move(vs));
}

std::string step_line(std::size_t index, const CollapseStep& step, const PreservationVerdict& v)
{
    return "step " + std::to_string(index) + ": " + to_string(step.face) + " -> " + to_string(step.coface)
           + " w=" + to_string(v.face_weight) + "/" + to_string(v.coface_weight) + " "
           + std::string(to_string(v.tag));
}

ordered_json step_json(const CollapseStep& step, const PreservationVerdict& v)
{
    return {{"face", simplex_json(step.face)},
            {"coface", simplex_json(step.coface)},
            {"face_weight", integer_json(v.face_weight)},
            {"coface_weight", integer_json(v.coface_weight)},
            {"verdict", std::string(to_string(v.tag))}};
}

ComplexDocument load_complex(const std::string& path, const std::string& constant_weight)
{
    std::optional<Integer> cw;
    if (!constant_weight.empty())
        cw = parse_integer(constant_weight);
    return parse_complex_document(read_file(path), cw);
}

// ---------------------------------------------------------------------------

struct HomologyOptions
{
    std::string complex_file;
    std::string constant_weight;
    bool json = false;
};

void cmd_homology(const HomologyOptions& o, std::ostream& out)
{
    ComplexDocument doc = load_complex(o.complex_file, o.constant_weight);
    auto groups = homology(doc.complex, report_dimension(doc.complex));
    if (o.json)
        out << ordered_json{{"homology", homology_json(groups)}}.dump(2) << "\n";
    else
        out << format_homology(groups);
}

struct CollapseOptions
{
    std::string complex_file;
    std::string constant_weight;
    std::string steps_file;
    bool greedy = false;
    bool verify = false;
    bool json = false;
};

void cmd_collapse(const CollapseOptions& o, std::ostream& out)
{
    if (o.greedy == !o.steps_file.empty())
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --steps or --auto-greedy");
    ComplexDocument doc = load_complex(o.complex_file, o.constant_weight);
    const WeightedComplex& k = doc.complex;

    CollapseTrace trace;
    if (o.greedy)
        trace = greedy_collapse(k);
    else
    {
        auto faces = parse_steps_document(read_file(o.steps_file));
        trace = collapse_sequence(k, faces);
    }

    const int top = report_dimension(k);
    std::vector<std::vector<HomologyGroup>> verified;
    if (o.verify)
    {
        WeightedComplex current = k;
        verified.push_back(homology(current, top));
        for (const CollapseStep& step : trace.steps)
        {
            current = elementary_collapse(current, step.face).first;
            verified.push_back(homology(current, top));
        }
    }

    if (o.json)
    {
        ordered_json steps = ordered_json::array();
        for (std::size_t i = 0; i < trace.steps.size(); ++i)
        {
            ordered_json s = step_json(trace.steps[i], trace.verdicts[i]);
            if (o.verify)
            {
                s["homology"] = homology_json(verified[i + 1]);
                s["preserved"] = verified[i + 1] == verified[i];
            }
            steps.push_back(std::move(s));
        }
        ordered_json doc_out{{"steps", std::move(steps)}, {"guaranteed", trace.guaranteed()}};
        if (o.verify)
        {
            doc_out["initial_homology"] = homology_json(verified.front());
            doc_out["homology_agrees"] = verified.front() == verified.back();
        }
        out << doc_out.dump(2) << "\n";
        return;
    }

    if (o.verify)
        out << "initial: " << format_homology_inline(verified.front()) << "\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i)
    {
        out << step_line(i + 1, trace.steps[i], trace.verdicts[i]) << "\n";
        if (o.verify)
            out << "  " << format_homology_inline(verified[i + 1])
                << (verified[i + 1] == verified[i] ? " (preserved)" : " (changed)") << "\n";
    }
    out << "remaining: " << trace.result.size() << " simplices\n";
    out << "guaranteed: " << (trace.guaranteed() ? "yes" : "no") << "\n";
    if (o.verify)
        out << "homology agrees: " << (verified.front() == verified.back() ? "yes" : "no") << "\n";
}

struct MorseOptions
{
    std::string complex_file;
    std::string morse_file;
    std::string constant_weight;
    bool classify = false;
    std::vector<std::string> collapse;
    std::vector<std::string> window;
    std::string cell;
    bool strict = false;
    bool json = false;
};

void print_certificate(const CollapseCertificate& c, std::ostream& out, const std::string& indent)
{
    for (std::size_t i = 0; i < c.steps.size(); ++i)
        out << indent << step_line(i + 1, c.steps[i], c.verdicts[i]) << "\n";
    out << indent << "K(" << to_string(c.lower) << ")" << listing(c.to.simplices()) << "\n";
    out << indent << "H(K(" << to_string(c.upper) << ")): " << format_homology_inline(c.homology_from) << "\n";
    out << indent << "H(K(" << to_string(c.lower) << ")): " << format_homology_inline(c.homology_to) << "\n";
    out << indent << "all SameWeight: " << (c.all_same_weight() ? "yes" : "no") << "\n";
    out << indent << "homology preserved: " << (c.homology_agrees() ? "yes" : "no") << "\n";
}

ordered_json certificate_json(const CollapseCertificate& c)
{
    ordered_json steps = ordered_json::array();
    for (std::size_t i = 0; i < c.steps.size(); ++i)
        steps.push_back(step_json(c.steps[i], c.verdicts[i]));
    ordered_json lower_cells = ordered_json::array();
    for (const Simplex& s : c.to.simplices())
        lower_cells.push_back(simplex_json(s));
    return {{"lower", to_string(c.lower)},
            {"upper", to_string(c.upper)},
            {"steps", std::move(steps)},
            {"lower_complex", std::move(lower_cells)},
            {"homology_upper", homology_json(c.homology_from)},
            {"homology_lower", homology_json(c.homology_to)},
            {"all_same_weight", c.all_same_weight()},
            {"homology_agrees", c.homology_agrees()}};
}

void cmd_morse(const MorseOptions& o, std::ostream& out)
{
    const int modes = int(o.classify) + int(!o.collapse.empty()) + int(!o.window.empty());
    if (modes != 1)
        throw Error(ErrorCode::InvalidArgument, "give exactly one of --classify, --collapse A B, --window A B");
    ComplexDocument doc = load_complex(o.complex_file, o.constant_weight);
    const WeightedComplex& k = doc.complex;
    MorseFunction f = MorseFunction::validate(k.complex(), parse_morse_document(read_file(o.morse_file)));

    if (o.classify)
    {
        auto info = classify(k, f);
        std::vector<Simplex> critical, not_simple;
        for (const CellInfo& c : info)
        {
            if (c.critical)
                critical.push_back(c.cell);
            if (!c.w_simple)
                not_simple.push_back(c.cell);
        }
        if (o.json)
        {
            ordered_json cells = ordered_json::array();
            for (const CellInfo& c : info)
            {
                ordered_json j{{"vertices", simplex_json(c.cell)},
                               {"value", to_string(c.value)},
                               {"critical", c.critical},
                               {"w_simple", c.w_simple}};
                j["partner"] = c.partner ? simplex_json(*c.partner) : ordered_json(nullptr);
                cells.push_back(std::move(j));
            }
            out << ordered_json{{"cells", std::move(cells)}}.dump(2) << "\n";
            return;
        }
        out << "cells: " << info.size() << "\n";
        out << "critical (" << critical.size() << ")" << listing(critical) << "\n";
        out << "not w-simple (" << not_simple.size() << ")" << listing(not_simple) << "\n";
        return;
    }

    if (!o.collapse.empty())
    {
        CollapseCertificate c = morse_collapse(k, f, parse_rational(o.collapse[0]), parse_rational(o.collapse[1]));
        if (o.json)
        {
            out << certificate_json(c).dump(2) << "\n";
            return;
        }
        out << "collapse K(" << to_string(c.upper) << ") -> K(" << to_string(c.lower) << "): " << c.steps.size()
            << " steps\n";
        print_certificate(c, out, "");
        return;
    }

    if (o.cell.empty())
        throw Error(ErrorCode::InvalidArgument, "--window needs --cell v0,v1,...");
    const Simplex cell = parse_cell(o.cell);
    RemovalCertificate r
        = critical_window(k, f, cell, parse_rational(o.window[0]), parse_rational(o.window[1]), o.strict);

    if (o.json)
    {
        ordered_json j{{"critical", simplex_json(r.critical)},
                       {"value", to_string(f.value(r.critical))},
                       {"a_prime", to_string(r.a_prime)},
                       {"removal_matches", r.removal_matches},
                       {"critical_is_maximal", r.critical_is_maximal}};
        j["w_simple_failure"] = r.w_simple_failure ? simplex_json(*r.w_simple_failure) : ordered_json(nullptr);
        j["homology_a_prime"] = homology_json(homology(r.level_a_prime, k.dimension()));
        j["homology_critical"] = homology_json(r.homology_critical);
        if (r.upper)
            j["upper"] = certificate_json(*r.upper);
        if (r.lower)
            j["lower"] = certificate_json(*r.lower);
        if (r.relations)
        {
            j["class_order"] = to_string(r.relations->class_order);
            auto predicted = r.relations->predicted_before();
            predicted.resize(r.homology_critical.size());
            j["predicted_homology_critical"] = homology_json(predicted);
        }
        out << j.dump(2) << "\n";
        return;
    }

    const int n = r.critical.dimension();
    out << "critical cell " << to_string(r.critical) << " f=" << to_string(f.value(r.critical)) << "\n";
    out << "a' = " << to_string(r.a_prime) << "\n";
    out << "K(a') = K(f) minus cell: " << (r.removal_matches ? "yes" : "no") << "\n";
    out << "maximal in K(f): " << (r.critical_is_maximal ? "yes" : "no") << "\n";
    out << "H(K(a')): " << format_homology_inline(homology(r.level_a_prime, k.dimension())) << "\n";
    out << "H(K(f)): " << format_homology_inline(r.homology_critical) << "\n";
    if (r.w_simple_failure)
    {
        out << "w-simple bands: no (" << to_string(*r.w_simple_failure) << ")\n";
        return;
    }
    out << "w-simple bands: yes\n";
    out << "K(" << to_string(r.b) << ") -> K(f): " << r.upper->steps.size() << " steps, all SameWeight: "
        << (r.upper->all_same_weight() ? "yes" : "no") << "\n";
    out << "K(a') -> K(" << to_string(r.a) << "): " << r.lower->steps.size() << " steps, all SameWeight: "
        << (r.lower->all_same_weight() ? "yes" : "no") << "\n";
    if (r.relations)
    {
        auto predicted = r.relations->predicted_before();
        predicted.resize(r.homology_critical.size());
        out << "class of boundary in H" << (n - 1 < 0 ? 0 : n - 1) << "(K(a')): " << to_string(r.relations->class_order)
            << "\n";
        out << "predicted H(K(f)): " << format_homology_inline(predicted) << "\n";
        out << "prediction matches: " << (predicted == r.homology_critical ? "yes" : "no") << "\n";
    }
}

struct SequenceOptions
{
    std::string sequence;
    std::string fasta_file;
    std::string alphabet = "dna";
    std::string weights;
    int woc_type = 0;
    std::string emit_complex;
    bool json = false;
};

void cmd_sequence(const SequenceOptions& o, std::ostream& out)
{
    if (o.sequence.empty() == o.fasta_file.empty())
        throw Error(ErrorCode::InvalidArgument, "give a sequence or --fasta FILE (not both)");
    const Alphabet alphabet = Alphabet::from_name(o.alphabet);
    const LetterWeights weights = parse_letter_weights(o.weights);
    const WocType type = woc_type_from_int(o.woc_type);
    const std::optional<int> cap = env_max_dim();

    std::vector<FastaRecord> records;
    const bool fasta = !o.fasta_file.empty();
    if (fasta)
        records = parse_fasta(read_file(o.fasta_file));
    else
        records.push_back({"", o.sequence});

    if (!o.emit_complex.empty())
    {
        if (records.size() != 1)
            throw Error(ErrorCode::InvalidArgument, "--emit-complex needs exactly one sequence");
        std::optional<int> build_cap;
        if (cap)
            build_cap = *cap + 1;
        auto woc = build_woc(Sequence::parse(records[0].sequence, alphabet), weights, type, build_cap);
        std::ofstream file(o.emit_complex, std::ios::binary);
        if (!file)
            throw Error(ErrorCode::InvalidArgument, "cannot write '" + o.emit_complex + "'");
        file << emit_complex_document(woc.complex, woc.names);
    }

    // records are independent; output order follows input order
    std::vector<std::vector<HomologyGroup>> results(records.size());
    std::vector<std::exception_ptr> failures(records.size());
    const auto count = static_cast<std::ptrdiff_t>(records.size());
#pragma omp parallel for schedule(dynamic, 1) if (count > 1)
    for (std::ptrdiff_t i = 0; i < count; ++i)
    {
        try
        {
            Sequence s = Sequence::parse(records[i].sequence, alphabet);
            results[i] = sequence_fingerprint(s, weights, type, cap);
            if (cap)
            {
                // without the cap this would be dim of the order complex
                auto full_dim = static_cast<int>(s.size()) - 2;
                results[i].resize(static_cast<std::size_t>(std::max(0, std::min(*cap, full_dim)) + 1));
            }
        }
        catch (...)
        {
            failures[i] = std::current_exception();
        }
    }
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    if (o.json)
    {
        if (!fasta)
        {
            out << ordered_json{{"homology", homology_json(results[0])}}.dump(2) << "\n";
            return;
        }
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < records.size(); ++i)
            arr.push_back({{"header", records[i].header}, {"homology", homology_json(results[i])}});
        out << ordered_json{{"records", std::move(arr)}}.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < records.size(); ++i)
    {
        if (fasta)
            out << ">" << records[i].header << "\n";
        out << format_homology(results[i]);
    }
}

void report_error(const Error& e, bool json, std::ostream& err)
{
    if (json)
    {
        ordered_json cells = ordered_json::array();
        for (const Simplex& s : e.witnesses())
            cells.push_back(simplex_json(s));
        ordered_json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"simplices", cells}};
        if (auto* m = dynamic_cast<const MorseError*>(&e))
        {
            ordered_json v = ordered_json::array();
            for (const MorseViolation& x : m->violations())
            {
                ordered_json w = ordered_json::array();
                for (const Simplex& s : x.witnesses)
                    w.push_back(simplex_json(s));
                v.push_back({{"cell", simplex_json(x.cell)}, {"condition", x.condition}, {"witnesses", w}});
            }
            j["violations"] = std::move(v);
        }
        err << j.dump(2) << "\n";
        return;
    }
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (auto* m = dynamic_cast<const MorseError*>(&e))
        for (const MorseViolation& x : m->violations())
            err << "  " << to_string(x) << "\n";
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Weighted simplicial homology, collapses and discrete Morse theory over Z", "wmorse"};
    app.require_subcommand(1);

    HomologyOptions ho;
    auto* hom = app.add_subcommand("homology", "Weighted homology of a complex document");
    hom->add_option("complex", ho.complex_file, "Complex document (JSON)")->required();
    hom->add_option("--constant-weight", ho.constant_weight, "Maximal faces only; fill the closure with this weight");
    hom->add_flag("--json", ho.json, "JSON report");

    CollapseOptions co;
    auto* col = app.add_subcommand("collapse", "Elementary collapses with preservation verdicts");
    col->add_option("complex", co.complex_file, "Complex document (JSON)")->required();
    col->add_option("--constant-weight", co.constant_weight, "Maximal faces only; fill the closure with this weight");
    col->add_option("--steps", co.steps_file, "Steps document (JSON list of free faces)");
    col->add_flag("--auto-greedy", co.greedy, "Collapse the smallest free face until none is left");
    col->add_flag("--verify", co.verify, "Recompute homology after every step");
    col->add_flag("--json", co.json, "JSON report");

    MorseOptions mo;
    auto* mor = app.add_subcommand("morse", "Discrete Morse function certificates");
    mor->add_option("complex", mo.complex_file, "Complex document (JSON)")->required();
    mor->add_option("morse", mo.morse_file, "Morse document (JSON)")->required();
    mor->add_option("--constant-weight", mo.constant_weight, "Maximal faces only; fill the closure with this weight");
    mor->add_flag("--classify", mo.classify, "List critical and non-w-simple cells");
    mor->add_option("--collapse", mo.collapse, "Collapse K(B) onto K(A)")->expected(2);
    mor->add_option("--window", mo.window, "Critical-cell window (A, B]")->expected(2);
    mor->add_option("--cell", mo.cell, "Critical cell for --window, e.g. 0,1,2");
    mor->add_flag("--strict", mo.strict, "Fail when the collapse bands are not w-simple");
    mor->add_flag("--json", mo.json, "JSON report");

    SequenceOptions so;
    auto* seq = app.add_subcommand("sequence", "Weighted order complex fingerprint of a sequence");
    seq->add_option("sequence", so.sequence, "Symbol string");
    seq->add_option("--fasta", so.fasta_file, "FASTA file with one or more records");
    seq->add_option("--alphabet", so.alphabet, "dna, rna, bin, hex, or the symbols themselves")
        ->capture_default_str();
    seq->add_option("--weights", so.weights, "Letter weights, e.g. A=1,C=2,G=3,T=4")->required();
    seq->add_option("--woc-type", so.woc_type, "1, 2, 3 or 4")->required();
    seq->add_option("--emit-complex", so.emit_complex, "Also write the complex document here");
    seq->add_flag("--json", so.json, "JSON report");

    bool json = false;
    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        json = ho.json || co.json || mo.json || so.json;

        if (hom->parsed())
            cmd_homology(ho, out);
        else if (col->parsed())
            cmd_collapse(co, out);
        else if (mor->parsed())
            cmd_morse(mo, out);
        else
            cmd_sequence(so, out);
        return kExitOk;
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    catch (const Error& e)
    {
        report_error(e, json, err);
        return is_hypothesis_failure(e.code()) ? kExitHypothesisFailed : kExitInputError;
    }
}

} // namespace wmorse
