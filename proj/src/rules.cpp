#include "gcdeg/rules.hpp"

namespace gcdeg::rules {

namespace {

constexpr auto D = Character::Discriminating;
constexpr auto N = Character::NonDiscriminating;

bool is_ug(Base b) noexcept { return b == Base::U || b == Base::G; }

constexpr std::array<NamedRule, 4> kRules{{
    {"rule1", &rule1_verdict},
    {"rule_ug", &rule_ug_verdict},
    {"rule3", &rule3_verdict},
    {"coherent_b2", &coherent_b2_verdict},
}};

}  // namespace

std::string_view to_string(VerdictBasis b) noexcept {
    return b == VerdictBasis::Stated ? "stated" : "law";
}

RuleVerdict rule1_verdict(DiBase d) noexcept {
    constexpr std::string_view name = "rule1";
    if (d.contains(Base::C) && d.b2() != Base::A) return RuleVerdict::applies(name, N);
    if (d.contains(Base::A) && d.b2() != Base::C) return RuleVerdict::applies(name, D);
    return RuleVerdict::not_applicable(name);
}

RuleVerdict rule_ug_verdict(DiBase d) noexcept {
    constexpr std::string_view name = "rule_ug";
    if (!is_ug(d.b1()) || !is_ug(d.b2())) return RuleVerdict::not_applicable(name);
    if (d.b1() != d.b2()) return RuleVerdict::applies(name, d.b2() == Base::U ? N : D);
    return RuleVerdict::applies(name, law_character(d), VerdictBasis::DelegatedToLaw);
}

RuleVerdict rule3_verdict(DiBase d) noexcept {
    constexpr std::string_view name = "rule3";
    const auto h1 = descriptor(d.b1()).nhb;
    if (h1 != descriptor(d.b2()).nhb) return RuleVerdict::not_applicable(name);
    return RuleVerdict::applies(name, h1 == HBonds::Three ? N : D);
}

RuleVerdict coherent_b2_verdict(DiBase d) noexcept {
    constexpr std::string_view name = "coherent_b2";
    switch (d.b2()) {
    case Base::C: return RuleVerdict::applies(name, N);
    case Base::A: return RuleVerdict::applies(name, D);
    default: return RuleVerdict::not_applicable(name);
    }
}

std::span<const NamedRule> named_rules() noexcept { return kRules; }

std::array<LawVote, 3> law_votes(DiBase d) noexcept {
    const auto v = signature(d.with_third(Base::U));
    std::array<LawVote, 3> out{};
    std::size_t i = 0;
    for (const auto& slot : kLawSlots.ids()) out[i++] = {slot, slot_character(v, slot)};
    return out;
}

Character law_character(DiBase d) noexcept {
    int discriminating = 0;
    for (const auto& vote : law_votes(d))
        if (vote.character == D) ++discriminating;
    return discriminating >= 2 ? D : N;
}

SlotSet decisive_slots(DiBase d) noexcept {
    const SlotSet b2 = SlotSet::position(2);
    if (coherence(d.b2()) == Coherence::Coherent) return b2;
    return b2 | SlotSet{{1, SlotKind::HBonds}};
}

std::string_view to_string(PredictedPartition p) noexcept {
    switch (p) {
    case PredictedPartition::Quadruplet: return "Quadruplet";
    case PredictedPartition::TwoDuplets: return "TwoDuplets";
    case PredictedPartition::DupletPlusDivergibleRHalf: return "DupletPlusDivergibleRHalf";
    }
    return "?";
}

PredictedPartition predicted_partition(DiBase d) noexcept {
    if (law_character(d) == N) return PredictedPartition::Quadruplet;
    if (coherence(d.b2()) == Coherence::Coherent) return PredictedPartition::TwoDuplets;
    return PredictedPartition::DupletPlusDivergibleRHalf;
}

bool role_permitted(Codon c, LocalRole role) noexcept {
    switch (predicted_partition(c.dibase())) {
    case PredictedPartition::Quadruplet: return role == LocalRole::FourFold;
    case PredictedPartition::TwoDuplets: return role == LocalRole::TwoFold;
    case PredictedPartition::DupletPlusDivergibleRHalf:
        if (role == LocalRole::TwoFold) return true;
        return role == LocalRole::OneFold && (c.b3() == Base::A || c.b3() == Base::G);
    }
    return false;
}

UndefinedRole::UndefinedRole(Codon c, LocalRole role)
    : Error("role " + std::string(to_string(role)) + " is not possible for " + c.str() +
            " (di-base " + c.dibase().str() + " predicted " +
            std::string(to_string(predicted_partition(c.dibase()))) + ")") {}

RequiredProperties required_properties(Codon c, LocalRole role) {
    if (!role_permitted(c, role)) throw UndefinedRole(c, role);
    const SlotSet dibase_slots = SlotSet::position(1) | SlotSet::position(2);
    switch (role) {
    case LocalRole::FourFold: return {4, dibase_slots};
    case LocalRole::TwoFold: return {5, dibase_slots | SlotSet{{3, SlotKind::MolecularType}}};
    case LocalRole::OneFold: return {6, SlotSet::all()};
    }
    throw UndefinedRole(c, role);
}

}  // namespace gcdeg::rules
