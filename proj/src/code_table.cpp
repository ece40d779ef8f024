#include "gcdeg/code_table.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace gcdeg {

namespace {

constexpr std::array<std::string_view, kProductCount> kNames{
    "Ala", "Arg", "Asn", "Asp", "Cys", "Gln", "Glu", "Gly", "His", "Ile",
    "Leu", "Lys", "Met", "Phe", "Pro", "Ser", "Thr", "Trp", "Tyr", "Val",
    "STOP"};

using enum Product;

// Row = first base, column = second base, the four entries = third base U,C,A,G.
// Laid out like the printed table: each line is one (B1, B2) block.
constexpr std::array<Product, Codon::kCount> kStandard{
    // B1 = U
    Phe, Phe, Leu, Leu,    // UU-
    Ser, Ser, Ser, Ser,    // UC-
    Tyr, Tyr, Stop, Stop,  // UA-
    Cys, Cys, Stop, Trp,   // UG-
    // B1 = C
    Leu, Leu, Leu, Leu,    // CU-
    Pro, Pro, Pro, Pro,    // CC-
    His, His, Gln, Gln,    // CA-
    Arg, Arg, Arg, Arg,    // CG-
    // B1 = A
    Ile, Ile, Ile, Met,    // AU-
    Thr, Thr, Thr, Thr,    // AC-
    Asn, Asn, Lys, Lys,    // AA-
    Ser, Ser, Arg, Arg,    // AG-
    // B1 = G
    Val, Val, Val, Val,    // GU-
    Ala, Ala, Ala, Ala,    // GC-
    Asp, Asp, Glu, Glu,    // GA-
    Gly, Gly, Gly, Gly,    // GG-
};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

std::string_view name(Product p) noexcept { return kNames[static_cast<std::size_t>(p)]; }

std::optional<Product> parse_product(std::string_view text) noexcept {
    if (text == "*") return Product::Stop;
    for (std::size_t i = 0; i < kProductCount; ++i)
        if (iequals(text, kNames[i])) return static_cast<Product>(i);
    return std::nullopt;
}

const CodeTable& CodeTable::canonical() noexcept {
    static const CodeTable table(kStandard);
    return table;
}

CodeTable CodeTable::with_entry(Codon c, Product p) const {
    auto copy = entries_;
    copy[c.index()] = p;
    return CodeTable(copy);
}

std::uint64_t checksum(const CodeTable& t) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::string_view s) {
        for (char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
    };
    for (const auto& c : all_codons()) {
        mix(c.str());
        mix(" ");
        mix(name(t.translate(c)));
        mix("\n");
    }
    return h;
}

SynonymSet synonym_set(const CodeTable& t, Codon c) {
    SynonymSet out{t.translate(c), {}};
    for (const auto& other : all_codons())
        if (t.translate(other) == out.product) out.codons.push_back(other);
    return out;
}

std::vector<SynonymSet> synonym_sets(const CodeTable& t) {
    std::array<std::vector<Codon>, kProductCount> buckets;
    for (const auto& c : all_codons()) buckets[static_cast<std::size_t>(t.translate(c))].push_back(c);
    std::vector<SynonymSet> out;
    for (std::size_t i = 0; i < kProductCount; ++i)
        if (!buckets[i].empty()) out.push_back({static_cast<Product>(i), std::move(buckets[i])});
    return out;
}

MultipletClass multiplet_class(const CodeTable& t, Codon c) {
    const auto p = t.translate(c);
    const auto n = std::count(t.entries().begin(), t.entries().end(), p);
    return {static_cast<std::size_t>(n)};
}

std::map<MultipletClass, std::vector<Product>> degeneracy_census(const CodeTable& t) {
    std::map<MultipletClass, std::vector<Product>> out;
    for (const auto& set : synonym_sets(t)) out[{set.codons.size()}].push_back(set.product);
    return out;
}

std::string to_string(const PartitionShape& shape) {
    std::string out = "{";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(shape[i]);
    }
    return out + "}";
}

PartitionShape ObservedPartition::shape() const {
    PartitionShape out;
    for (const auto& g : groups) out.push_back(g.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

bool same_group(const ObservedPartition& p, Base x, Base y) {
    const auto cx = p.dibase.with_third(x);
    const auto cy = p.dibase.with_third(y);
    for (const auto& g : p.groups) {
        const bool hx = std::find(g.begin(), g.end(), cx) != g.end();
        const bool hy = std::find(g.begin(), g.end(), cy) != g.end();
        if (hx || hy) return hx && hy;
    }
    return false;
}

}  // namespace

bool ObservedPartition::y_half_intact() const noexcept { return same_group(*this, Base::U, Base::C); }
bool ObservedPartition::r_half_intact() const noexcept { return same_group(*this, Base::A, Base::G); }

ObservedPartition observed_partition(const CodeTable& t, DiBase d) {
    ObservedPartition out{d, {}};
    std::vector<Product> keys;
    for (const auto& c : d.codons()) {
        const auto p = t.translate(c);
        const auto it = std::find(keys.begin(), keys.end(), p);
        if (it == keys.end()) {
            keys.push_back(p);
            out.groups.push_back({c});
        } else {
            out.groups[static_cast<std::size_t>(it - keys.begin())].push_back(c);
        }
    }
    return out;
}

Character observed_character(const CodeTable& t, DiBase d) {
    return observed_partition(t, d).groups.size() == 1 ? Character::NonDiscriminating
                                                       : Character::Discriminating;
}

std::string_view to_string(LocalRole r) noexcept {
    switch (r) {
    case LocalRole::FourFold: return "4pt";
    case LocalRole::TwoFold: return "2pt";
    case LocalRole::OneFold: return "1pt";
    }
    return "?";
}

std::optional<LocalRole> observed_role(const CodeTable& t, Codon c) {
    const auto part = observed_partition(t, c.dibase());
    if (part.groups.size() == 1) return LocalRole::FourFold;
    if (!part.y_half_intact()) return std::nullopt;
    const bool y_side = c.b3() == Base::U || c.b3() == Base::C;
    if (y_side || part.r_half_intact()) return LocalRole::TwoFold;
    return LocalRole::OneFold;
}

}  // namespace gcdeg
