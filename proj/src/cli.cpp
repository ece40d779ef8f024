#include "gcdeg/cli.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcdeg/code_table.hpp"
#include "gcdeg/render.hpp"
#include "gcdeg/sequence.hpp"
#include "gcdeg/verifier.hpp"

namespace gcdeg::cli {

namespace {

using render::Format;
using render::Json;

struct Options {
    std::string format = "text";

    // classify / minset
    std::string target;
    std::string dibase;
    bool all = false;
    bool dibases = false;

    // verify
    std::string table_path;

    // translate
    std::string input = "-";
    int frame = 0;
    std::string stop_policy = "annotate";
    std::string input_format = "auto";
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int fail(Streams& io, const std::string& message) {
    io.err << "error: " << message << '\n';
    return kUsageError;
}

Format format_of(const Options& o) { return render::parse_format(o.format).value_or(Format::Text); }

// Codons are three letters; two letters (optionally with a trailing '-') name a di-base.
bool looks_like_dibase(const std::string& s) {
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    return t.size() == 2 || (t.size() == 3 && t.back() == '-');
}

int cmd_classify(const Options& o, Streams& io) {
    const auto& table = CodeTable::canonical();
    const auto fmt = format_of(o);

    if (o.all) {
        Json rows = Json::array();
        std::string text;
        if (o.dibases) {
            for (const auto& d : all_dibases()) {
                rows.push_back(render::dibase_json(table, d));
                if (fmt == Format::Text) text += (text.empty() ? "" : "\n") + render::dibase_text(table, d);
            }
        } else {
            for (const auto& c : all_codons()) {
                rows.push_back(render::codon_json(table, c));
                if (fmt == Format::Text) text += (text.empty() ? "" : "\n") + render::codon_text(table, c);
            }
        }
        if (fmt == Format::Json) io.out << render::dump(rows);
        else if (fmt == Format::Tsv) io.out << render::tsv_rows(rows);
        else io.out << text;
        return kPass;
    }

    const bool as_dibase = !o.dibase.empty() || looks_like_dibase(o.target);
    const std::string& arg = o.dibase.empty() ? o.target : o.dibase;
    if (arg.empty()) return fail(io, "classify needs a codon, --dibase XY, or --all");
    try {
        if (as_dibase) {
            const auto d = parse_dibase(arg);
            const auto j = render::dibase_json(table, d);
            if (fmt == Format::Json) io.out << render::dump(j);
            else if (fmt == Format::Tsv) io.out << render::tsv_rows(Json::array({j}));
            else io.out << render::dibase_text(table, d);
        } else {
            const auto c = parse_codon(arg);
            const auto j = render::codon_json(table, c);
            if (fmt == Format::Json) io.out << render::dump(j);
            else if (fmt == Format::Tsv) io.out << render::tsv_rows(Json::array({j}));
            else io.out << render::codon_text(table, c);
        }
    } catch (const InvalidBase& e) {
        return fail(io, std::string("InvalidBase: ") + e.what());
    } catch (const WrongLength& e) {
        return fail(io, std::string("WrongLength: ") + e.what());
    }
    return kPass;
}

int cmd_verify(const Options& o, Streams& io) {
    std::unique_ptr<CodeTable> loaded;
    if (!o.table_path.empty()) {
        std::ifstream file(o.table_path);
        if (!file) return fail(io, "cannot open table file " + o.table_path);
        try {
            loaded = std::make_unique<CodeTable>(read_table_tsv(file));
        } catch (const TableFormatError& e) {
            return fail(io, o.table_path + ": " + e.what());
        }
    }
    const auto& table = loaded ? *loaded : CodeTable::canonical();
    const auto report = verify::full_report(table);
    switch (format_of(o)) {
    case Format::Json: io.out << render::dump(render::report_json(report)); break;
    case Format::Tsv: io.out << render::report_tsv(report); break;
    case Format::Text: io.out << render::report_text(report); break;
    }
    return report.overall_pass ? kPass : kVerificationFailed;
}

int cmd_minset(const Options& o, Streams& io) {
    const auto& table = CodeTable::canonical();
    std::vector<Codon> codons;
    if (o.all) {
        const auto all = all_codons();
        codons.assign(all.begin(), all.end());
    } else {
        if (o.target.empty()) return fail(io, "minset needs a codon or --all");
        try {
            codons.push_back(parse_codon(o.target));
        } catch (const InvalidBase& e) {
            return fail(io, std::string("InvalidBase: ") + e.what());
        } catch (const WrongLength& e) {
            return fail(io, std::string("WrongLength: ") + e.what());
        }
    }

    const auto fmt = format_of(o);
    Json rows = Json::array();
    std::string text;
    for (const auto& c : codons) {
        const auto result = verify::minimal_subset_oracle(table, c);
        rows.push_back(render::minset_json(result));
        if (fmt == Format::Text) text += render::minset_text(result);
    }
    if (fmt == Format::Json) io.out << render::dump(o.all ? rows : rows.front());
    else if (fmt == Format::Tsv) io.out << render::tsv_rows(rows);
    else io.out << text;
    return kPass;
}

InputFormat detect_format(const std::string& content) {
    for (char ch : content) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '>' || ch == ';' ? InputFormat::Fasta : InputFormat::Raw;
    }
    return InputFormat::Fasta;
}

int cmd_translate(const Options& o, Streams& io) {
    std::string content;
    if (o.input == "-") {
        std::ostringstream buf;
        buf << io.in.rdbuf();
        content = buf.str();
    } else {
        std::ifstream file(o.input, std::ios::binary);
        if (!file) return fail(io, "cannot open " + o.input);
        std::ostringstream buf;
        buf << file.rdbuf();
        content = buf.str();
    }

    InputFormat fmt_in = InputFormat::Fasta;
    if (o.input_format == "raw") fmt_in = InputFormat::Raw;
    else if (o.input_format == "auto") fmt_in = detect_format(content);

    const auto policy = o.stop_policy == "truncate" ? StopPolicy::Truncate : StopPolicy::Annotate;
    std::vector<Translation> translations;
    try {
        std::istringstream stream(content);
        for (const auto& rec : read_sequences(stream, fmt_in, o.input))
            translations.push_back(translate_sequence(rec, o.frame, policy));
    } catch (const EmptyInput& e) {
        return fail(io, std::string("EmptyInput: ") + e.what());
    } catch (const InvalidBase& e) {
        return fail(io, std::string("InvalidBase: ") + e.what());
    } catch (const Error& e) {
        return fail(io, e.what());
    }
    for (const auto& tr : translations)
        for (const auto& note : tr.notes) io.err << "warning: " << note << '\n';

    const auto rows = render::translation_json(translations);
    switch (format_of(o)) {
    case Format::Json: io.out << render::dump(rows); break;
    case Format::Text:
        for (const auto& row : rows)
            io.out << row["record_id"].get<std::string>() << ' ' << row["index"].get<std::size_t>() << ' '
                   << row["codon"].get<std::string>() << " [" << row["signature"].get<std::string>() << "] "
                   << row["product"].get<std::string>() << ' ' << row["dibase_character"].get<std::string>()
                   << ' ' << row["multiplet"].get<std::string>() << ' ' << row["role"].get<std::string>()
                   << '\n';
        break;
    case Format::Tsv:
        if (rows.empty())
            io.out << "record_id\tindex\tcodon\tsignature\tproduct\tdibase_character\tmultiplet\trole\n";
        else
            io.out << render::tsv_rows(rows);
        break;
    }
    return kPass;
}

int cmd_census(const Options& o, Streams& io) {
    const auto& table = CodeTable::canonical();
    switch (format_of(o)) {
    case Format::Json: io.out << render::dump(render::census_json(table)); break;
    case Format::Tsv: io.out << render::tsv_rows(render::census_json(table)["classes"]); break;
    case Format::Text: io.out << render::census_text(table); break;
    }
    return kPass;
}

int cmd_table(const Options& o, Streams& io) {
    const auto& table = CodeTable::canonical();
    if (format_of(o) == Format::Json) io.out << render::dump(render::table_json(table));
    else write_table_tsv(table, io.out);
    return kPass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams io{in, out, err};
    Options o;

    CLI::App app{"Codon property calculus: classification, rule verification and translation", "gcdeg"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Classify a codon or di-base");
    classify->add_option("target", o.target, "Codon (e.g. UGC) or di-base (e.g. GU)");
    classify->add_option("--dibase", o.dibase, "Di-base to classify (e.g. GU or GU-)");
    classify->add_flag("--all", o.all, "Classify every codon (or every di-base with --dibases)");
    classify->add_flag("--dibases", o.dibases, "With --all, list the 16 di-bases");
    std::string classify_format = "text";
    classify->add_option("--format", classify_format)->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check every rule against a code table");
    std::string verify_format = "text";
    verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json", "tsv"}));
    verify_cmd->add_option("--table", o.table_path, "Codon/product TSV to verify instead of the standard code");

    auto* minset = app.add_subcommand("minset", "Minimal sufficient property subsets for a codon");
    minset->add_option("codon", o.target, "Codon");
    minset->add_flag("--all", o.all, "All 64 codons");
    std::string minset_format = "text";
    minset->add_option("--format", minset_format)->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* translate = app.add_subcommand("translate", "Translate FASTA or raw sequence with annotations");
    translate->add_option("input", o.input, "Input file, '-' for stdin")->capture_default_str();
    translate->add_option("--frame", o.frame, "Reading frame offset")->check(CLI::Range(0, 2))->capture_default_str();
    translate->add_option("--stop-policy", o.stop_policy)
        ->check(CLI::IsMember({"annotate", "truncate"}))
        ->capture_default_str();
    translate->add_option("--input-format", o.input_format)
        ->check(CLI::IsMember({"auto", "fasta", "raw"}))
        ->capture_default_str();
    std::string translate_format = "tsv";
    translate->add_option("--format", translate_format)->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* census = app.add_subcommand("census", "Synonym-set sizes of the standard code");
    std::string census_format = "text";
    census->add_option("--format", census_format)->check(CLI::IsMember({"text", "json", "tsv"}));

    auto* table = app.add_subcommand("table", "Export the standard code");
    std::string table_format = "tsv";
    table->add_option("--format", table_format)->check(CLI::IsMember({"json", "tsv"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kPass : kUsageError;
    }

    if (*classify) {
        o.format = classify_format;
        return cmd_classify(o, io);
    }
    if (*verify_cmd) {
        o.format = verify_format;
        return cmd_verify(o, io);
    }
    if (*minset) {
        o.format = minset_format;
        return cmd_minset(o, io);
    }
    if (*translate) {
        o.format = translate_format;
        return cmd_translate(o, io);
    }
    if (*census) {
        o.format = census_format;
        return cmd_census(o, io);
    }
    o.format = table_format;
    return cmd_table(o, io);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, in, out, err);
}

}  // namespace gcdeg::cli
