#include "gcdeg/sequence.hpp"

#include <array>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

namespace gcdeg {

EmptyInput::EmptyInput(const std::string& source)
    : Error("empty input: " + (source == "-" ? std::string("stdin") : source)) {}

SequenceFormatError::SequenceFormatError(const std::string& source, std::size_t line,
                                         const std::string& what)
    : Error((source == "-" ? std::string("stdin") : source) + ":" + std::to_string(line) + ": " + what) {}

InvalidResidue::InvalidResidue(char ch, std::string record, std::size_t line, std::size_t column)
    : InvalidBase(ch, column - 1,
                  "invalid base '" + std::string(1, ch) + "' in record " + record + " at line " +
                      std::to_string(line) + ", column " + std::to_string(column)),
      record_(std::move(record)), line_(line), column_(column) {}

namespace {

bool is_blank(std::string_view s) {
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

void append_residues(SequenceRecord& rec, std::string_view line, std::size_t line_no) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        try {
            rec.residues += letter(parse_base(ch, i));
        } catch (const InvalidBase&) {
            throw InvalidResidue(ch, rec.id, line_no, i + 1);
        }
    }
}

std::string header_id(std::string_view header, std::size_t ordinal) {
    std::size_t i = 0;
    while (i < header.size() && std::isspace(static_cast<unsigned char>(header[i]))) ++i;
    std::size_t j = i;
    while (j < header.size() && !std::isspace(static_cast<unsigned char>(header[j]))) ++j;
    if (i == j) return "record" + std::to_string(ordinal);
    return std::string(header.substr(i, j - i));
}

}  // namespace

std::vector<SequenceRecord> read_sequences(std::istream& in, InputFormat format,
                                           const std::string& source) {
    std::vector<SequenceRecord> out;
    std::string line;
    std::size_t line_no = 0;
    bool saw_content = false;

    if (format == InputFormat::Raw) {
        SequenceRecord rec{"stdin", {}, source, 0};
        while (std::getline(in, line)) {
            ++line_no;
            if (is_blank(line)) continue;
            if (!saw_content) rec.first_line = line_no;
            saw_content = true;
            append_residues(rec, line, line_no);
        }
        if (!saw_content) throw EmptyInput(source);
        out.push_back(std::move(rec));
        return out;
    }

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || line.front() == ';') continue;
        saw_content = true;
        if (line.front() == '>') {
            out.push_back({header_id(std::string_view(line).substr(1), out.size() + 1), {}, source, line_no});
            continue;
        }
        if (out.empty()) throw SequenceFormatError(source, line_no, "sequence data before the first '>' header");
        append_residues(out.back(), line, line_no);
    }
    if (!saw_content) throw EmptyInput(source);
    return out;
}

Translation translate_sequence(const SequenceRecord& r, int frame, StopPolicy policy,
                               const CodeTable& t) {
    if (frame < 0 || frame > 2) throw Error("frame must be 0, 1 or 2, got " + std::to_string(frame));
    Translation out{r.id, {}, {}};
    const auto start = static_cast<std::size_t>(frame);
    const std::size_t n = r.residues.size() > start ? r.residues.size() - start : 0;

    for (std::size_t i = 0; i + 3 <= n; i += 3) {
        const auto codon = parse_codon(std::string_view(r.residues).substr(start + i, 3));
        const auto product = t.translate(codon);
        out.codons.push_back({i / 3, codon, format_signature(signature(codon)), product,
                              rules::law_character(codon), multiplet_class(t, codon),
                              observed_role(t, codon)});
        if (policy == StopPolicy::Truncate && is_stop(product)) return out;
    }
    if (const auto tail = n % 3; tail != 0)
        out.notes.push_back("record " + r.id + ": ignored " + std::to_string(tail) +
                            " trailing residue" + (tail == 1 ? "" : "s") + " in frame " +
                            std::to_string(frame));
    return out;
}

TableFormatError::TableFormatError(std::size_t line, const std::string& what)
    : Error("table line " + std::to_string(line) + ": " + what) {}

CodeTable read_table_tsv(std::istream& in) {
    std::array<std::optional<Product>, Codon::kCount> entries{};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (is_blank(line) || line.front() == '#') continue;
        std::istringstream fields(line);
        std::string codon_text, product_text, extra;
        fields >> codon_text >> product_text;
        if (product_text.empty()) throw TableFormatError(line_no, "expected 'codon<TAB>product'");
        if (fields >> extra) throw TableFormatError(line_no, "unexpected field '" + extra + "'");
        Codon codon;
        try {
            codon = parse_codon(codon_text);
        } catch (const Error& e) {
            throw TableFormatError(line_no, e.what());
        }
        const auto product = parse_product(product_text);
        if (!product) throw TableFormatError(line_no, "unknown product '" + product_text + "'");
        auto& slot = entries[codon.index()];
        if (slot) throw TableFormatError(line_no, "duplicate codon " + codon.str());
        slot = *product;
    }
    std::array<Product, Codon::kCount> table{};
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (!entries[i]) throw TableFormatError(line_no, "missing codon " + Codon::from_index(i).str());
        table[i] = *entries[i];
    }
    return CodeTable(table);
}

void write_table_tsv(const CodeTable& t, std::ostream& out) {
    for (const auto& c : all_codons()) out << c.str() << '\t' << name(t.translate(c)) << '\n';
}

}  // namespace gcdeg
