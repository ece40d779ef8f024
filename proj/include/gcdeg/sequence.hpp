#ifndef GCDEG_SEQUENCE_HPP
#define GCDEG_SEQUENCE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcdeg/code_table.hpp"
#include "gcdeg/codon.hpp"
#include "gcdeg/rules.hpp"

namespace gcdeg {

enum class InputFormat { Fasta, Raw };

struct SequenceRecord {
    std::string id;
    std::string residues;  // U, C, A, G only
    std::string source;    // file path, or "-" for standard input
    std::size_t first_line = 0;  // 1-based line of the header (FASTA) or of the first residue
};

class EmptyInput : public Error {
public:
    explicit EmptyInput(const std::string& source);
};

class SequenceFormatError : public Error {
public:
    SequenceFormatError(const std::string& source, std::size_t line, const std::string& what);
};

// Invalid residue, located by record and 1-based line/column.
class InvalidResidue : public InvalidBase {
public:
    InvalidResidue(char ch, std::string record, std::size_t line, std::size_t column);

    const std::string& record() const noexcept { return record_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string record_;
    std::size_t line_;
    std::size_t column_;
};

/// FASTA: '>' starts a record whose id is the first word of the header; ';'
/// lines are comments; whitespace inside sequence lines is ignored. Raw: the
/// whole stream is one record with id "stdin". T is read as U, case is folded.
std::vector<SequenceRecord> read_sequences(std::istream& in, InputFormat format,
                                           const std::string& source = "-");

enum class StopPolicy { Annotate, Truncate };

struct AnnotatedCodon {
    std::size_t index;  // 0-based codon number within the frame
    Codon codon;
    std::string signature;
    Product product;
    Character dibase_character;
    MultipletClass multiplet;
    std::optional<LocalRole> role;
};

struct Translation {
    std::string record_id;
    std::vector<AnnotatedCodon> codons;
    std::vector<std::string> notes;  // e.g. an ignored short tail
};

/// frame must be 0, 1 or 2. Truncate stops after the first STOP codon
/// (which is still emitted).
Translation translate_sequence(const SequenceRecord& r, int frame, StopPolicy policy,
                               const CodeTable& t = CodeTable::canonical());

class TableFormatError : public Error {
public:
    TableFormatError(std::size_t line, const std::string& what);
};

/// One "codon<TAB>product" per line for all 64 codons, each exactly once.
/// Blank lines and '#' comments are skipped; spaces also separate fields.
CodeTable read_table_tsv(std::istream& in);

/// Writes the 64 entries in index order, in the format read_table_tsv takes.
void write_table_tsv(const CodeTable& t, std::ostream& out);

}  // namespace gcdeg

#endif  // GCDEG_SEQUENCE_HPP
