#ifndef GCDEG_CODON_HPP
#define GCDEG_CODON_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <initializer_list>
#include <vector>

namespace gcdeg {

// Base error for everything the library reports about malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidBase : public Error {
public:
    InvalidBase(char ch, std::size_t offset);
    InvalidBase(char ch, std::size_t offset, const std::string& message);

    char character() const noexcept { return ch_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    char ch_;
    std::size_t offset_;
};

class WrongLength : public Error {
public:
    WrongLength(std::size_t expected, std::size_t actual);

    std::size_t expected() const noexcept { return expected_; }
    std::size_t actual() const noexcept { return actual_; }

private:
    std::size_t expected_;
    std::size_t actual_;
};

// Enumerator order (U, C, A, G) is the conventional table order and is relied
// upon for indexing and for every deterministic listing in the project.
enum class Base : std::uint8_t { U = 0, C = 1, A = 2, G = 3 };

inline constexpr std::array<Base, 4> kAllBases{Base::U, Base::C, Base::A, Base::G};

enum class MolecularType : std::uint8_t { Y, R };  // pyrimidine, purine
enum class HBonds : std::uint8_t { Two, Three };

enum class Coherence : std::uint8_t { Coherent, NonCoherent };

// Discriminating / non-discriminating behaviour, either of a single property
// value or of a whole di-base.
enum class Character : std::uint8_t { Discriminating, NonDiscriminating };

struct DualDescriptor {
    MolecularType mt;
    HBonds nhb;

    friend constexpr bool operator==(DualDescriptor, DualDescriptor) = default;
};

constexpr std::size_t index_of(Base b) noexcept { return static_cast<std::size_t>(b); }

constexpr char letter(Base b) noexcept {
    constexpr std::array<char, 4> letters{'U', 'C', 'A', 'G'};
    return letters[index_of(b)];
}

// U -> Y/2, C -> Y/3, A -> R/2, G -> R/3
constexpr DualDescriptor descriptor(Base b) noexcept {
    switch (b) {
    case Base::U: return {MolecularType::Y, HBonds::Two};
    case Base::C: return {MolecularType::Y, HBonds::Three};
    case Base::A: return {MolecularType::R, HBonds::Two};
    case Base::G: return {MolecularType::R, HBonds::Three};
    }
    return {MolecularType::Y, HBonds::Two};
}

constexpr Base base_of(DualDescriptor d) noexcept {
    if (d.mt == MolecularType::Y) return d.nhb == HBonds::Two ? Base::U : Base::C;
    return d.nhb == HBonds::Two ? Base::A : Base::G;
}

// Y and 3 are non-discriminating properties; R and 2 are discriminating.
constexpr Character character_of(MolecularType mt) noexcept {
    return mt == MolecularType::R ? Character::Discriminating : Character::NonDiscriminating;
}
constexpr Character character_of(HBonds nhb) noexcept {
    return nhb == HBonds::Two ? Character::Discriminating : Character::NonDiscriminating;
}

// A base is coherent when both of its properties carry the same character.
constexpr Coherence coherence(Base b) noexcept {
    const auto d = descriptor(b);
    return character_of(d.mt) == character_of(d.nhb) ? Coherence::Coherent
                                                     : Coherence::NonCoherent;
}

/// Accepts U, C, A, G in either case; T/t is read as U. `offset` is only used
/// to locate the offending character in the thrown InvalidBase.
Base parse_base(char ch, std::size_t offset = 0);

char letter(MolecularType mt) noexcept;
char digit(HBonds nhb) noexcept;
std::string_view to_string(Character c) noexcept;  // "D" / "non-D"
std::string_view to_string(Coherence c) noexcept;  // "coherent" / "non-coherent"

class DiBase;

class Codon {
public:
    static constexpr std::size_t kCount = 64;

    constexpr Codon() noexcept = default;
    constexpr Codon(Base b1, Base b2, Base b3) noexcept : bases_{b1, b2, b3} {}

    static constexpr Codon from_index(std::size_t i) noexcept {
        return Codon(kAllBases[(i >> 4) & 3], kAllBases[(i >> 2) & 3], kAllBases[i & 3]);
    }

    constexpr Base b1() const noexcept { return bases_[0]; }
    constexpr Base b2() const noexcept { return bases_[1]; }
    constexpr Base b3() const noexcept { return bases_[2]; }
    /// Position is 1-based, as in B1/B2/B3.
    constexpr Base at(int position) const noexcept { return bases_[static_cast<std::size_t>(position - 1)]; }

    /// 0..63 in U,C,A,G x U,C,A,G x U,C,A,G order.
    constexpr std::size_t index() const noexcept {
        return index_of(bases_[0]) * 16 + index_of(bases_[1]) * 4 + index_of(bases_[2]);
    }

    DiBase dibase() const noexcept;
    std::string str() const;

    friend constexpr bool operator==(const Codon&, const Codon&) = default;
    friend constexpr auto operator<=>(const Codon& a, const Codon& b) noexcept {
        return a.index() <=> b.index();
    }

private:
    std::array<Base, 3> bases_{Base::U, Base::U, Base::U};
};

class DiBase {
public:
    static constexpr std::size_t kCount = 16;

    constexpr DiBase() noexcept = default;
    constexpr DiBase(Base b1, Base b2) noexcept : b1_(b1), b2_(b2) {}

    static constexpr DiBase from_index(std::size_t i) noexcept {
        return DiBase(kAllBases[(i >> 2) & 3], kAllBases[i & 3]);
    }

    constexpr Base b1() const noexcept { return b1_; }
    constexpr Base b2() const noexcept { return b2_; }
    constexpr std::size_t index() const noexcept { return index_of(b1_) * 4 + index_of(b2_); }

    constexpr Codon with_third(Base b3) const noexcept { return Codon(b1_, b2_, b3); }
    /// The four codons sharing this di-base, third base in U,C,A,G order.
    constexpr std::array<Codon, 4> codons() const noexcept {
        return {with_third(Base::U), with_third(Base::C), with_third(Base::A), with_third(Base::G)};
    }

    constexpr bool contains(Base b) const noexcept { return b1_ == b || b2_ == b; }

    /// "UG-"
    std::string str() const;

    friend constexpr bool operator==(const DiBase&, const DiBase&) = default;
    friend constexpr auto operator<=>(const DiBase& a, const DiBase& b) noexcept {
        return a.index() <=> b.index();
    }

private:
    Base b1_ = Base::U;
    Base b2_ = Base::U;
};

inline DiBase Codon::dibase() const noexcept { return DiBase(bases_[0], bases_[1]); }

std::array<Codon, Codon::kCount> all_codons() noexcept;
std::array<DiBase, DiBase::kCount> all_dibases() noexcept;

/// Trims surrounding whitespace, then requires exactly three bases.
Codon parse_codon(std::string_view text);

/// Accepts "UG" or "UG-" (surrounding whitespace allowed).
DiBase parse_dibase(std::string_view text);

// ---------------------------------------------------------------------------
// Property slots and the six-slot codon signature.

enum class SlotKind : std::uint8_t { MolecularType, HBonds };

struct SlotId {
    int position;  // 1..3
    SlotKind kind;

    /// 0..5 as (1,mT) (1,nHb) (2,mT) (2,nHb) (3,mT) (3,nHb)
    constexpr std::size_t index() const noexcept {
        return static_cast<std::size_t>(position - 1) * 2 + (kind == SlotKind::HBonds ? 1 : 0);
    }
    static constexpr SlotId from_index(std::size_t i) noexcept {
        return {static_cast<int>(i / 2) + 1, i % 2 ? SlotKind::HBonds : SlotKind::MolecularType};
    }

    /// "(2,mT)"
    std::string str() const;

    friend constexpr bool operator==(SlotId, SlotId) = default;
};

inline constexpr std::size_t kSlotCount = 6;

// A subset of the six slot ids, stored as a bit mask over SlotId::index().
class SlotSet {
public:
    constexpr SlotSet() noexcept = default;
    constexpr explicit SlotSet(std::uint8_t mask) noexcept : mask_(mask & 0x3f) {}
    constexpr SlotSet(std::initializer_list<SlotId> ids) noexcept {
        for (auto id : ids) mask_ |= static_cast<std::uint8_t>(1u << id.index());
    }

    static constexpr SlotSet all() noexcept { return SlotSet(0x3f); }
    static constexpr SlotSet position(int p) noexcept {
        return SlotSet{{p, SlotKind::MolecularType}, {p, SlotKind::HBonds}};
    }

    constexpr std::uint8_t mask() const noexcept { return mask_; }
    constexpr bool contains(SlotId id) const noexcept { return (mask_ >> id.index()) & 1u; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr bool is_subset_of(SlotSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    constexpr SlotSet operator|(SlotSet o) const noexcept { return SlotSet(mask_ | o.mask_); }
    constexpr SlotSet operator&(SlotSet o) const noexcept { return SlotSet(mask_ & o.mask_); }

    /// Ids in index order.
    std::vector<SlotId> ids() const;

    /// "(1,mT) (1,nHb)"; "{}" when empty.
    std::string str() const;

    friend constexpr bool operator==(SlotSet, SlotSet) = default;

private:
    std::uint8_t mask_ = 0;
};

class PropertyVector {
public:
    constexpr PropertyVector() noexcept = default;
    constexpr explicit PropertyVector(std::array<DualDescriptor, 3> positions) noexcept
        : positions_(positions) {}

    constexpr DualDescriptor at(int position) const noexcept {
        return positions_[static_cast<std::size_t>(position - 1)];
    }

    /// 0 or 1: Y=0/R=1 for mT slots, 2=0/3=1 for nHb slots.
    constexpr std::uint8_t value(SlotId id) const noexcept {
        const auto d = at(id.position);
        return id.kind == SlotKind::MolecularType ? (d.mt == MolecularType::R ? 1 : 0)
                                                  : (d.nhb == HBonds::Three ? 1 : 0);
    }

    constexpr bool agrees_on(const PropertyVector& other, SlotSet slots) const noexcept {
        for (std::size_t i = 0; i < kSlotCount; ++i) {
            const auto id = SlotId::from_index(i);
            if (slots.contains(id) && value(id) != other.value(id)) return false;
        }
        return true;
    }

    constexpr Codon to_codon() const noexcept {
        return Codon(base_of(positions_[0]), base_of(positions_[1]), base_of(positions_[2]));
    }

    friend constexpr bool operator==(const PropertyVector&, const PropertyVector&) = default;

private:
    std::array<DualDescriptor, 3> positions_{};
};

constexpr PropertyVector signature(Codon c) noexcept {
    return PropertyVector({descriptor(c.b1()), descriptor(c.b2()), descriptor(c.b3())});
}

/// "Y/2 R/3 Y/3"
std::string format_signature(const PropertyVector& v);

/// Inverse of format_signature; whitespace between positions may be any run
/// of blanks. Throws Error on malformed text.
PropertyVector parse_signature(std::string_view text);

}  // namespace gcdeg

#endif  // GCDEG_CODON_HPP
