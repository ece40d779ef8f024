#ifndef GCDEG_CODE_TABLE_HPP
#define GCDEG_CODE_TABLE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcdeg/codon.hpp"

namespace gcdeg {

// The 20 standard amino acids plus STOP. Enumerators are in alphabetical order
// of the three-letter code; STOP sorts last.
enum class Product : std::uint8_t {
    Ala, Arg, Asn, Asp, Cys, Gln, Glu, Gly, His, Ile,
    Leu, Lys, Met, Phe, Pro, Ser, Thr, Trp, Tyr, Val,
    Stop
};

inline constexpr std::size_t kProductCount = 21;

constexpr bool is_stop(Product p) noexcept { return p == Product::Stop; }

/// Three-letter code, or "STOP".
std::string_view name(Product p) noexcept;

/// Accepts three-letter codes case-insensitively, plus "STOP", "Stop", "*".
std::optional<Product> parse_product(std::string_view text) noexcept;

class CodeTable {
public:
    explicit CodeTable(const std::array<Product, Codon::kCount>& entries) noexcept
        : entries_(entries) {}

    /// The standard genetic code.
    static const CodeTable& canonical() noexcept;

    Product translate(Codon c) const noexcept { return entries_[c.index()]; }

    /// Copy with one entry replaced.
    CodeTable with_entry(Codon c, Product p) const;

    const std::array<Product, Codon::kCount>& entries() const noexcept { return entries_; }

    friend bool operator==(const CodeTable&, const CodeTable&) = default;

private:
    std::array<Product, Codon::kCount> entries_;
};

inline const CodeTable& canonical_table() noexcept { return CodeTable::canonical(); }

inline Product translate(const CodeTable& t, Codon c) noexcept { return t.translate(c); }

/// FNV-1a over the 64 "codon product\n" lines in index order; used to pin the
/// compiled-in table.
std::uint64_t checksum(const CodeTable& t);

struct SynonymSet {
    Product product;
    std::vector<Codon> codons;  // index order
};

SynonymSet synonym_set(const CodeTable& t, Codon c);

/// One set per product reachable from the table, in Product order.
std::vector<SynonymSet> synonym_sets(const CodeTable& t);

// Synonym-set cardinality class ("1pt", "2pt", ...). The canonical table only
// produces 1, 2, 3, 4 and 6, but mutated tables can produce any size.
struct MultipletClass {
    std::size_t size = 0;

    std::string label() const { return std::to_string(size) + "pt"; }

    friend auto operator<=>(const MultipletClass&, const MultipletClass&) = default;
};

MultipletClass multiplet_class(const CodeTable& t, Codon c);

/// Products grouped by synonym-set size; each list in Product order. STOP is
/// an ordinary product here, so it appears under its own size.
std::map<MultipletClass, std::vector<Product>> degeneracy_census(const CodeTable& t);

// Group sizes sorted descending, e.g. {2,1,1}.
using PartitionShape = std::vector<std::size_t>;

std::string to_string(const PartitionShape& shape);  // "{2,1,1}"

struct ObservedPartition {
    DiBase dibase;
    // Groups ordered by their first codon; codons within a group in U,C,A,G order.
    std::vector<std::vector<Codon>> groups;

    PartitionShape shape() const;
    /// Whether the dibase's U- and C-ending codons share a group.
    bool y_half_intact() const noexcept;
    /// Whether the dibase's A- and G-ending codons share a group.
    bool r_half_intact() const noexcept;
};

ObservedPartition observed_partition(const CodeTable& t, DiBase d);

/// Non-discriminating iff the four codons form a single product group.
Character observed_character(const CodeTable& t, DiBase d);

// The part a codon plays inside its di-base's partition.
enum class LocalRole : std::uint8_t {
    FourFold,  // member of a quadruplet
    TwoFold,   // member of an intact half (Y-half, or undivided R-half)
    OneFold,   // member of a divided R-half
};

std::string_view to_string(LocalRole r) noexcept;  // "4pt" / "2pt" / "1pt"

/// Role read off the observed partition. Empty when the partition has no
/// consistent reading, i.e. the Y-half is divided.
std::optional<LocalRole> observed_role(const CodeTable& t, Codon c);

}  // namespace gcdeg

#endif  // GCDEG_CODE_TABLE_HPP
