#include "doctest.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gcdeg/code_table.hpp"

using namespace gcdeg;

namespace {

// The standard code as printed: one line per (first base, third base), the
// four entries across are second base U, C, A, G.
constexpr const char* kPrintedTable = R"(
UUU Phe UCU Ser UAU Tyr UGU Cys
UUC Phe UCC Ser UAC Tyr UGC Cys
UUA Leu UCA Ser UAA Stop UGA Stop
UUG Leu UCG Ser UAG Stop UGG Trp
CUU Leu CCU Pro CAU His CGU Arg
CUC Leu CCC Pro CAC His CGC Arg
CUA Leu CCA Pro CAA Gln CGA Arg
CUG Leu CCG Pro CAG Gln CGG Arg
AUU Ile ACU Thr AAU Asn AGU Ser
AUC Ile ACC Thr AAC Asn AGC Ser
AUA Ile ACA Thr AAA Lys AGA Arg
AUG Met ACG Thr AAG Lys AGG Arg
GUU Val GCU Ala GAU Asp GGU Gly
GUC Val GCC Ala GAC Asp GGC Gly
GUA Val GCA Ala GAA Glu GGA Gly
GUG Val GCG Ala GAG Glu GGG Gly
)";

Product lookup(const char* codon) { return canonical_table().translate(parse_codon(codon)); }

std::vector<std::string> names_of(const std::vector<Codon>& cs) {
    std::vector<std::string> out;
    for (const auto& c : cs) out.push_back(c.str());
    return out;
}

std::vector<std::string> names_of(const std::vector<Product>& ps) {
    std::vector<std::string> out;
    for (auto p : ps) out.emplace_back(name(p));
    return out;
}

}  // namespace

TEST_CASE("compiled-in table matches the printed table") {
    std::istringstream in(kPrintedTable);
    std::string codon, product;
    std::size_t seen = 0;
    std::array<Product, 64> parsed{};
    while (in >> codon >> product) {
        const auto p = parse_product(product);
        REQUIRE(p.has_value());
        parsed[parse_codon(codon).index()] = *p;
        ++seen;
    }
    REQUIRE(seen == 64);
    CHECK(CodeTable(parsed) == canonical_table());
    CHECK(checksum(canonical_table()) == 0xcd781d6ba26904edull);
    CHECK(checksum(CodeTable(parsed)) == checksum(canonical_table()));
    CHECK(checksum(canonical_table().with_entry(parse_codon("UGG"), Product::Arg)) != checksum(canonical_table()));
}

TEST_CASE("lookups") {
    CHECK(lookup("UUU") == Product::Phe);
    CHECK(lookup("UGA") == Product::Stop);
    CHECK(lookup("GCG") == Product::Ala);
    CHECK(lookup("AUG") == Product::Met);
    CHECK(lookup("UGG") == Product::Trp);
    CHECK(lookup("CGA") == Product::Arg);
    CHECK(translate(canonical_table(), parse_codon("uag")) == Product::Stop);
}

TEST_CASE("table totals") {
    const auto& t = canonical_table();
    std::size_t stops = 0;
    std::set<Product> reachable;
    for (const auto& c : all_codons()) {
        stops += is_stop(t.translate(c));
        reachable.insert(t.translate(c));
    }
    CHECK(stops == 3);
    CHECK(reachable.size() == 21);
    CHECK(names_of(synonym_set(t, parse_codon("UAA")).codons) == std::vector<std::string>{"UAA", "UAG", "UGA"});
}

TEST_CASE("product names") {
    CHECK(name(Product::Stop) == "STOP");
    CHECK(parse_product("ile") == Product::Ile);
    CHECK(parse_product("STOP") == Product::Stop);
    CHECK(parse_product("*") == Product::Stop);
    CHECK_FALSE(parse_product("Xaa").has_value());
    CHECK_FALSE(parse_product("").has_value());
    for (std::size_t i = 0; i < kProductCount; ++i) {
        const auto p = static_cast<Product>(i);
        CHECK(parse_product(name(p)) == p);
    }
}

TEST_CASE("synonym sets") {
    const auto& t = canonical_table();
    const auto leu = synonym_set(t, parse_codon("CUU"));
    CHECK(leu.product == Product::Leu);
    CHECK(names_of(leu.codons) == std::vector<std::string>{"UUA", "UUG", "CUU", "CUC", "CUA", "CUG"});
    CHECK(names_of(synonym_set(t, parse_codon("UGG")).codons) == std::vector<std::string>{"UGG"});
    CHECK(names_of(synonym_set(t, parse_codon("AUU")).codons) == std::vector<std::string>{"AUU", "AUC", "AUA"});
    CHECK(multiplet_class(t, parse_codon("CUU")).label() == "6pt");
    CHECK(multiplet_class(t, parse_codon("AUU")).label() == "3pt");

    // Sets partition the 64 codons.
    std::size_t total = 0;
    std::set<Codon> seen;
    for (const auto& s : synonym_sets(t)) {
        total += s.codons.size();
        for (const auto& c : s.codons) {
            CHECK(t.translate(c) == s.product);
            seen.insert(c);
        }
    }
    CHECK(total == 64);
    CHECK(seen.size() == 64);
    CHECK(synonym_sets(t).size() == 21);
}

TEST_CASE("degeneracy census") {
    const auto census = degeneracy_census(canonical_table());
    CHECK(names_of(census.at({1})) == std::vector<std::string>{"Met", "Trp"});
    CHECK(names_of(census.at({2})) ==
          std::vector<std::string>{"Asn", "Asp", "Cys", "Gln", "Glu", "His", "Lys", "Phe", "Tyr"});
    CHECK(names_of(census.at({3})) == std::vector<std::string>{"Ile", "STOP"});
    CHECK(names_of(census.at({4})) == std::vector<std::string>{"Ala", "Gly", "Pro", "Thr", "Val"});
    CHECK(names_of(census.at({6})) == std::vector<std::string>{"Arg", "Leu", "Ser"});
    CHECK(census.size() == 5);

    std::size_t weighted = 0;
    for (const auto& [cls, products] : census) weighted += cls.size * products.size();
    CHECK(weighted == 64);
}

TEST_CASE("observed partitions") {
    const auto& t = canonical_table();
    auto groups = [&](const char* d) {
        std::vector<std::vector<std::string>> out;
        for (const auto& g : observed_partition(t, parse_dibase(d)).groups) out.push_back(names_of(g));
        return out;
    };
    using G = std::vector<std::vector<std::string>>;
    CHECK(groups("GU") == G{{"GUU", "GUC", "GUA", "GUG"}});
    CHECK(groups("UG") == G{{"UGU", "UGC"}, {"UGA"}, {"UGG"}});
    CHECK(groups("UA") == G{{"UAU", "UAC"}, {"UAA", "UAG"}});
    CHECK(groups("AU") == G{{"AUU", "AUC", "AUA"}, {"AUG"}});

    CHECK(to_string(observed_partition(t, parse_dibase("UG")).shape()) == "{2,1,1}");
    CHECK(to_string(observed_partition(t, parse_dibase("AU")).shape()) == "{3,1}");

    CHECK(observed_character(t, parse_dibase("GC")) == Character::NonDiscriminating);
    CHECK(observed_character(t, parse_dibase("AU")) == Character::Discriminating);
    CHECK(observed_character(t, parse_dibase("CA")) == Character::Discriminating);
}

TEST_CASE("partition invariants of the standard code") {
    const auto& t = canonical_table();
    const std::set<PartitionShape> allowed{{4}, {2, 2}, {2, 1, 1}, {3, 1}};
    int non_d = 0;
    for (const auto& d : all_dibases()) {
        const auto part = observed_partition(t, d);
        CHECK(t.translate(d.with_third(Base::U)) == t.translate(d.with_third(Base::C)));
        CHECK(part.y_half_intact());
        CHECK(allowed.count(part.shape()) == 1);

        std::size_t covered = 0;
        for (const auto& g : part.groups) {
            CHECK_FALSE(g.empty());
            covered += g.size();
        }
        CHECK(covered == 4);
        non_d += observed_character(t, d) == Character::NonDiscriminating;
    }
    CHECK(non_d == 8);
}

TEST_CASE("observed roles") {
    const auto& t = canonical_table();
    auto role = [&](const char* c) { return observed_role(t, parse_codon(c)); };
    CHECK(role("GGU") == LocalRole::FourFold);
    CHECK(role("UUU") == LocalRole::TwoFold);
    CHECK(role("UUA") == LocalRole::TwoFold);
    CHECK(role("AUU") == LocalRole::TwoFold);
    CHECK(role("AUA") == LocalRole::OneFold);
    CHECK(role("AUG") == LocalRole::OneFold);
    CHECK(role("UGA") == LocalRole::OneFold);
    CHECK(role("UGG") == LocalRole::OneFold);
    CHECK(role("UAA") == LocalRole::TwoFold);

    // A divided Y-half has no consistent reading.
    const auto broken = t.with_entry(parse_codon("UUC"), Product::Ser);
    CHECK_FALSE(observed_role(broken, parse_codon("UUU")).has_value());
    CHECK_FALSE(observed_role(broken, parse_codon("UUA")).has_value());
}

TEST_CASE("with_entry copies") {
    const auto& t = canonical_table();
    const auto m = t.with_entry(parse_codon("UGG"), Product::Arg);
    CHECK(m.translate(parse_codon("UGG")) == Product::Arg);
    CHECK(t.translate(parse_codon("UGG")) == Product::Trp);
    CHECK_FALSE(m == t);
}
