#ifndef GCDEG_RULES_HPP
#define GCDEG_RULES_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "gcdeg/code_table.hpp"
#include "gcdeg/codon.hpp"

// Degeneracy rules as independent predicates over di-bases. Each named rule is
// written from its own statement (letters, H-bond counts, ...) and does not
// consult the majority law, so consistency between them is a real check.
namespace gcdeg::rules {

constexpr Character property_character(MolecularType mt) noexcept { return character_of(mt); }
constexpr Character property_character(HBonds nhb) noexcept { return character_of(nhb); }

constexpr Character slot_character(const PropertyVector& v, SlotId id) noexcept {
    const auto d = v.at(id.position);
    return id.kind == SlotKind::MolecularType ? character_of(d.mt) : character_of(d.nhb);
}

// How a verdict was reached: straight from the rule's own statement, or, where
// the statement is silent, by deferring to the majority law.
enum class VerdictBasis : std::uint8_t { Stated, DelegatedToLaw };

std::string_view to_string(VerdictBasis b) noexcept;  // "stated" / "law"

class RuleVerdict {
public:
    static RuleVerdict not_applicable(std::string_view rule) noexcept { return RuleVerdict(rule); }
    static RuleVerdict applies(std::string_view rule, Character c,
                               VerdictBasis basis = VerdictBasis::Stated) noexcept {
        return RuleVerdict(rule, c, basis);
    }

    std::string_view rule() const noexcept { return rule_; }
    bool applicable() const noexcept { return character_.has_value(); }
    std::optional<Character> character() const noexcept { return character_; }
    VerdictBasis basis() const noexcept { return basis_; }

private:
    explicit RuleVerdict(std::string_view rule) noexcept : rule_(rule) {}
    RuleVerdict(std::string_view rule, Character c, VerdictBasis b) noexcept
        : rule_(rule), character_(c), basis_(b) {}

    std::string_view rule_;
    std::optional<Character> character_;
    VerdictBasis basis_ = VerdictBasis::Stated;
};

/// Di-bases containing C are non-D unless B2 is A; di-bases containing A are D
/// unless B2 is C. Applies to the 12 di-bases containing A or C.
RuleVerdict rule1_verdict(DiBase d) noexcept;

/// Di-bases built only from U and G: -U- gives non-D (GU-), -G- gives D (UG-).
/// UU- and GG- are outside the stated pair and take the law's verdict.
RuleVerdict rule_ug_verdict(DiBase d) noexcept;

/// Equal H-bond counts at B1 and B2: both 3 is non-D, both 2 is D.
RuleVerdict rule3_verdict(DiBase d) noexcept;

/// A coherent B2 (C or A) fixes the character on its own: -Y/3- non-D, -R/2- D.
RuleVerdict coherent_b2_verdict(DiBase d) noexcept;

struct NamedRule {
    std::string_view name;
    RuleVerdict (*evaluate)(DiBase) noexcept;
};

/// rule1, rule_ug, rule3, coherent_b2 in that order.
std::span<const NamedRule> named_rules() noexcept;

// The three positioned properties that decide the character.
inline constexpr SlotSet kLawSlots{{1, SlotKind::HBonds}, {2, SlotKind::MolecularType}, {2, SlotKind::HBonds}};
// The three that never matter for it.
inline constexpr SlotSet kIrrelevantSlots{
    {1, SlotKind::MolecularType}, {3, SlotKind::MolecularType}, {3, SlotKind::HBonds}};

struct LawVote {
    SlotId slot;
    Character character;
};

/// Votes of (1,nHb), (2,mT), (2,nHb), in that order.
std::array<LawVote, 3> law_votes(DiBase d) noexcept;

/// Majority of the three votes. Three voters and two outcomes, so never tied.
Character law_character(DiBase d) noexcept;

inline Character law_character(Codon c) noexcept { return law_character(c.dibase()); }

/// Slots that determine the character: B2's two when B2 is coherent, plus
/// (1,nHb) when it is not.
SlotSet decisive_slots(DiBase d) noexcept;

enum class PredictedPartition : std::uint8_t {
    Quadruplet,
    TwoDuplets,
    // Y-half a duplet; the R-half may stay a duplet or split into two singlets.
    DupletPlusDivergibleRHalf,
};

std::string_view to_string(PredictedPartition p) noexcept;

PredictedPartition predicted_partition(DiBase d) noexcept;

/// Whether `role` is a possible reading of `c` under its di-base's predicted
/// partition (OneFold only on the R-half of a DupletPlusDivergibleRHalf).
bool role_permitted(Codon c, LocalRole role) noexcept;

class UndefinedRole : public Error {
public:
    UndefinedRole(Codon c, LocalRole role);
};

struct RequiredProperties {
    std::size_t count;
    SlotSet slots;
};

/// 4pt: all of B1 and B2. 2pt: that plus (3,mT). 1pt: all six.
/// Throws UndefinedRole when the role contradicts the predicted partition.
RequiredProperties required_properties(Codon c, LocalRole role);

}  // namespace gcdeg::rules

#endif  // GCDEG_RULES_HPP
