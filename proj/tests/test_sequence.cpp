#include "doctest.h"

#include <random>
#include <sstream>
#include <string>

#include "gcdeg/sequence.hpp"

using namespace gcdeg;

namespace {

std::vector<SequenceRecord> fasta(const std::string& text) {
    std::istringstream in(text);
    return read_sequences(in, InputFormat::Fasta, "test.fa");
}

std::vector<SequenceRecord> raw(const std::string& text) {
    std::istringstream in(text);
    return read_sequences(in, InputFormat::Raw);
}

SequenceRecord record(const std::string& residues) { return {"r", residues, "-", 1}; }

}  // namespace

TEST_CASE("FASTA reading") {
    auto recs = fasta(">x\nAUGUGA\n");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].id == "x");
    CHECK(recs[0].residues == "AUGUGA");
    CHECK(recs[0].first_line == 1);

    recs = fasta(">a\nAUG\n>b\nGGG\n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].id == "a");
    CHECK(recs[1].id == "b");
    CHECK(recs[1].residues == "GGG");

    SUBCASE("normalisation and whitespace") {
        recs = fasta("; comment\n>seq1 some description\r\natg gga\n\n  tTt\n");
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].id == "seq1");
        CHECK(recs[0].residues == "AUGGGAUUU");
    }

    SUBCASE("header without an id") {
        recs = fasta(">\nAUG\n");
        CHECK(recs[0].id == "record1");
    }
}

TEST_CASE("FASTA errors") {
    try {
        fasta(">x\nAUQ\n");
        FAIL("expected InvalidResidue");
    } catch (const InvalidResidue& e) {
        CHECK(e.record() == "x");
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
        CHECK(e.character() == 'Q');
    }
    CHECK_THROWS_AS(fasta(""), EmptyInput);
    CHECK_THROWS_AS(fasta("\n  \n"), EmptyInput);
    CHECK_THROWS_AS(fasta("AUG\n>x\nAUG\n"), SequenceFormatError);
    CHECK_THROWS_AS(fasta(">x\nAUGN\n"), InvalidBase);
}

TEST_CASE("raw reading") {
    const auto recs = raw("atg\nGGA\n");
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].id == "stdin");
    CHECK(recs[0].residues == "AUGGGA");
    CHECK_THROWS_AS(raw(""), EmptyInput);
    CHECK_THROWS_AS(raw("AU>G"), InvalidBase);
}

TEST_CASE("random FASTA round-trip") {
    std::mt19937 rng(5938);
    const std::string letters = "UCAGucagTt";
    for (int trial = 0; trial < 200; ++trial) {
        std::string residues, text = ">r" + std::to_string(trial) + "\n";
        const int n = std::uniform_int_distribution<int>(0, 120)(rng);
        const int width = std::uniform_int_distribution<int>(1, 70)(rng);
        for (int i = 0; i < n; ++i) {
            const char ch = letters[std::uniform_int_distribution<std::size_t>(0, letters.size() - 1)(rng)];
            residues += letter(parse_base(ch));
            text += ch;
            if ((i + 1) % width == 0) text += '\n';
        }
        text += '\n';
        const auto recs = fasta(text);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].residues == residues);
    }
}

TEST_CASE("translation") {
    auto tr = translate_sequence(record("AUGUGA"), 0, StopPolicy::Annotate);
    REQUIRE(tr.codons.size() == 2);
    CHECK(tr.codons[0].codon.str() == "AUG");
    CHECK(tr.codons[0].product == Product::Met);
    CHECK(tr.codons[0].role == LocalRole::OneFold);
    CHECK(tr.codons[0].signature == "R/2 Y/2 R/3");
    CHECK(tr.codons[0].multiplet.label() == "1pt");
    CHECK(tr.codons[1].product == Product::Stop);
    CHECK(tr.codons[1].index == 1);
    CHECK(tr.notes.empty());

    tr = translate_sequence(record("AUGUGA"), 1, StopPolicy::Annotate);
    REQUIRE(tr.codons.size() == 1);
    CHECK(tr.codons[0].codon.str() == "UGU");
    CHECK(tr.codons[0].product == Product::Cys);
    CHECK(tr.notes.size() == 1);

    tr = translate_sequence(record("AU"), 0, StopPolicy::Annotate);
    CHECK(tr.codons.empty());
    CHECK(tr.notes.size() == 1);

    tr = translate_sequence(record("A"), 2, StopPolicy::Annotate);
    CHECK(tr.codons.empty());

    CHECK_THROWS_AS(translate_sequence(record("AUG"), 3, StopPolicy::Annotate), Error);
}

TEST_CASE("stop policy") {
    const auto seq = record("GCUUAAGGGUGAGCC");
    CHECK(translate_sequence(seq, 0, StopPolicy::Annotate).codons.size() == 5);
    const auto cut = translate_sequence(seq, 0, StopPolicy::Truncate);
    REQUIRE(cut.codons.size() == 2);
    CHECK(cut.codons.back().product == Product::Stop);
}

TEST_CASE("annotations agree with table and rules") {
    std::string all;
    for (const auto& c : all_codons()) all += c.str();
    const auto tr = translate_sequence(record(all), 0, StopPolicy::Annotate);
    REQUIRE(tr.codons.size() == 64);
    for (const auto& a : tr.codons) {
        CHECK(a.product == canonical_table().translate(a.codon));
        CHECK(a.dibase_character == observed_character(canonical_table(), a.codon.dibase()));
        CHECK(a.multiplet.size == synonym_set(canonical_table(), a.codon).codons.size());
        CHECK(a.role == observed_role(canonical_table(), a.codon));
        CHECK(parse_signature(a.signature).to_codon() == a.codon);
    }
}

TEST_CASE("table TSV") {
    std::ostringstream out;
    write_table_tsv(canonical_table(), out);
    std::istringstream in(out.str());
    CHECK(read_table_tsv(in) == canonical_table());

    const auto mutate = [&](const std::string& from, const std::string& to) {
        auto text = out.str();
        text.replace(text.find(from), from.size(), to);
        return text;
    };
    {
        std::istringstream m(mutate("UGG\tTrp", "UGG\tArg"));
        CHECK(read_table_tsv(m).translate(parse_codon("UGG")) == Product::Arg);
    }
    {
        std::istringstream m("# header\n\n" + mutate("UGG\tTrp", "ugg Stop"));
        CHECK(read_table_tsv(m).translate(parse_codon("UGG")) == Product::Stop);
    }
    {
        std::istringstream m(mutate("UGG\tTrp\n", ""));
        CHECK_THROWS_AS(read_table_tsv(m), TableFormatError);
    }
    {
        std::istringstream m(mutate("UGG\tTrp", "UGA\tTrp"));
        CHECK_THROWS_AS(read_table_tsv(m), TableFormatError);
    }
    {
        std::istringstream m(mutate("UGG\tTrp", "UGG\tXaa"));
        CHECK_THROWS_AS(read_table_tsv(m), TableFormatError);
    }
    {
        std::istringstream m(mutate("UGG\tTrp", "UGG\tTrp\textra"));
        CHECK_THROWS_AS(read_table_tsv(m), TableFormatError);
    }
    {
        std::istringstream m(mutate("UGG\tTrp", "UGX\tTrp"));
        CHECK_THROWS_AS(read_table_tsv(m), TableFormatError);
    }
}
