#include "gcdeg/verifier.hpp"

#include <algorithm>
#include <array>

namespace gcdeg::verify {

using rules::PredictedPartition;

std::vector<CharacterCheck> verify_characters(const CodeTable& t) {
    std::vector<CharacterCheck> out;
    for (const auto& d : all_dibases()) {
        const auto law = rules::law_character(d);
        const auto obs = observed_character(t, d);
        out.push_back({d, law, obs, law == obs});
    }
    return out;
}

bool RuleConsistency::pass() const noexcept {
    return coverage.pass &&
           std::all_of(entries.begin(), entries.end(), [](const RuleCheck& e) { return e.agree; });
}

RuleConsistency verify_rule_consistency() {
    RuleConsistency out;
    for (const auto& rule : rules::named_rules()) {
        RuleSummary summary{std::string(rule.name)};
        for (const auto& d : all_dibases()) {
            const auto verdict = rule.evaluate(d);
            if (!verdict.applicable()) continue;
            const auto law = rules::law_character(d);
            const bool agree = *verdict.character() == law;
            out.entries.push_back(
                {std::string(rule.name), d, *verdict.character(), law, verdict.basis(), agree});
            ++summary.applicable;
            if (agree) ++summary.agreed;
        }
        out.summary.push_back(std::move(summary));
    }

    // Coverage is over the three rules stated for di-bases in general; the
    // coherent-B2 corollary is a consequence of the law, not a primary rule.
    for (const auto& d : all_dibases()) {
        const bool hit = rules::rule1_verdict(d).applicable() ||
                         rules::rule_ug_verdict(d).applicable() ||
                         rules::rule3_verdict(d).applicable();
        if (hit)
            ++out.coverage.covered;
        else
            out.coverage.uncovered.push_back(d);
    }
    out.coverage.pass = out.coverage.uncovered.empty();
    return out;
}

bool shape_compatible(PredictedPartition predicted, const ObservedPartition& observed) {
    const auto groups = observed.groups.size();
    switch (predicted) {
    case PredictedPartition::Quadruplet: return groups == 1;
    case PredictedPartition::TwoDuplets:
        return groups == 2 && observed.y_half_intact() && observed.r_half_intact();
    case PredictedPartition::DupletPlusDivergibleRHalf:
        // {2,2}, {2,1,1} or {3,1} with the Y-half together.
        return groups > 1 && observed.y_half_intact();
    }
    return false;
}

namespace {

// Codons of `p` counted per di-base, sorted descending.
PartitionShape local_blocks(const CodeTable& t, Product p) {
    std::array<std::size_t, DiBase::kCount> per_dibase{};
    for (const auto& c : all_codons())
        if (t.translate(c) == p) ++per_dibase[c.dibase().index()];
    PartitionShape out;
    for (auto n : per_dibase)
        if (n) out.push_back(n);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

bool recognised_multiplet(const PartitionShape& blocks) {
    static const std::vector<PartitionShape> allowed{{1}, {2}, {3}, {2, 1}, {4}, {4, 2}};
    return std::find(allowed.begin(), allowed.end(), blocks) != allowed.end();
}

}  // namespace

std::vector<PartitionCheck> verify_partitions(const CodeTable& t) {
    std::vector<PartitionCheck> out;
    for (const auto& d : all_dibases()) {
        PartitionCheck check{d, rules::predicted_partition(d), observed_partition(t, d), false,
                             false, true, {}, false};
        check.y_half_intact = check.observed.y_half_intact();
        check.shape_compatible = shape_compatible(check.predicted, check.observed);
        for (const auto& group : check.observed.groups) {
            const auto p = t.translate(group.front());
            if (!recognised_multiplet(local_blocks(t, p))) check.invalid_multiplets.push_back(p);
        }
        check.multiplets_valid = check.invalid_multiplets.empty();
        check.agree = check.shape_compatible && check.multiplets_valid;
        out.push_back(std::move(check));
    }
    return out;
}

std::map<PartitionShape, std::size_t> reference_shape_census() {
    return {{{4}, 8}, {{2, 2}, 6}, {{2, 1, 1}, 1}, {{3, 1}, 1}};
}

ShapeCensusCheck verify_shape_census(const CodeTable& t) {
    ShapeCensusCheck out{reference_shape_census(), {}, false};
    for (const auto& d : all_dibases()) ++out.observed[observed_partition(t, d).shape()];
    out.agree = out.observed == out.expected;
    return out;
}

namespace {

// Slots on which two codons' signatures differ.
std::uint8_t differing_slots(const PropertyVector& a, const PropertyVector& b) {
    std::uint8_t mask = 0;
    for (std::size_t i = 0; i < kSlotCount; ++i) {
        const auto id = SlotId::from_index(i);
        if (a.value(id) != b.value(id)) mask |= static_cast<std::uint8_t>(1u << i);
    }
    return mask;
}

// One entry per codon translating differently from c. A slot set is
// sufficient iff it hits every entry.
std::vector<std::uint8_t> conflicts(const CodeTable& t, Codon c) {
    const auto target = signature(c);
    const auto product = t.translate(c);
    std::vector<std::uint8_t> out;
    for (const auto& other : all_codons())
        if (t.translate(other) != product) out.push_back(differing_slots(target, signature(other)));
    return out;
}

bool hits_all(const std::vector<std::uint8_t>& conflicts, SlotSet slots) {
    return std::all_of(conflicts.begin(), conflicts.end(), [&](std::uint8_t d) { return (d & slots.mask()) != 0; });
}

}  // namespace

bool is_sufficient(const CodeTable& t, Codon c, SlotSet slots) {
    const auto target = signature(c);
    const auto product = t.translate(c);
    for (const auto& other : all_codons()) {
        if (signature(other).agrees_on(target, slots) && t.translate(other) != product) return false;
    }
    return true;
}

MinimalSubsetResult minimal_subset_oracle(const CodeTable& t, Codon c) {
    MinimalSubsetResult out;
    out.codon = c;
    out.product = t.translate(c);
    const auto against = conflicts(t, c);
    for (unsigned mask = 0; mask < (1u << kSlotCount); ++mask) {
        const SlotSet s(static_cast<std::uint8_t>(mask));
        if (hits_all(against, s)) out.sufficient_slot_sets.push_back(s);
    }
    // The full set always qualifies: signatures identify codons.
    out.minimal_size = kSlotCount;
    for (const auto& s : out.sufficient_slot_sets) out.minimal_size = std::min(out.minimal_size, s.size());
    for (const auto& s : out.sufficient_slot_sets)
        if (s.size() == out.minimal_size) out.minimal_slot_sets.push_back(s);

    out.role = observed_role(t, c);
    if (out.role && rules::role_permitted(c, *out.role)) {
        out.required = rules::required_properties(c, *out.role);
        out.required_slots_sufficient = hits_all(against, out.required->slots);
        out.count_matches = out.required->count == out.minimal_size;
    }
    return out;
}

std::vector<SpecificationCheck> verify_specification_rules(const CodeTable& t) {
    std::vector<SpecificationCheck> out;
    for (const auto& c : all_codons()) {
        auto result = minimal_subset_oracle(t, c);
        const bool consistent = result.role && rules::role_permitted(c, *result.role);
        const bool pass = consistent && result.required_slots_sufficient;
        const bool stop = is_stop(result.product);
        out.push_back({std::move(result), stop, consistent, pass});
    }
    return out;
}

bool VerificationReport::characters_pass() const noexcept {
    return std::all_of(character_checks.begin(), character_checks.end(),
                       [](const CharacterCheck& c) { return c.agree; });
}

bool VerificationReport::partitions_pass() const noexcept {
    return shape_census.agree && std::all_of(partition_checks.begin(), partition_checks.end(),
                                             [](const PartitionCheck& c) { return c.agree; });
}

bool VerificationReport::specification_pass() const noexcept {
    return std::all_of(specification_checks.begin(), specification_checks.end(),
                       [](const SpecificationCheck& c) { return c.pass; });
}

VerificationReport full_report(const CodeTable& t) {
    VerificationReport r;
    r.character_checks = verify_characters(t);
    r.rule_consistency = verify_rule_consistency();
    r.partition_checks = verify_partitions(t);
    r.shape_census = verify_shape_census(t);
    r.specification_checks = verify_specification_rules(t);
    for (const auto& check : r.specification_checks) {
        const auto& res = check.result;
        if (res.required && res.minimal_size < res.required->count)
            r.discrepancies.push_back({res.codon, res.product, *res.role, res.required->count,
                                       res.minimal_size, res.minimal_slot_sets.front()});
    }
    r.overall_pass = r.characters_pass() && r.rule_consistency.pass() && r.partitions_pass() &&
                     r.specification_pass();
    return r;
}

std::vector<std::string> failed_checks(const VerificationReport& r) {
    std::vector<std::string> out;
    for (const auto& c : r.character_checks) {
        if (c.agree) continue;
        out.push_back("character_checks " + c.dibase.str() + ": law " + std::string(to_string(c.law)) +
                      ", observed " + std::string(to_string(c.observed)));
    }
    for (const auto& e : r.rule_consistency.entries) {
        if (e.agree) continue;
        out.push_back("rule_consistency " + e.rule + " " + e.dibase.str() + ": rule " +
                      std::string(to_string(e.rule_character)) + ", law " +
                      std::string(to_string(e.law_character)));
    }
    if (!r.rule_consistency.coverage.pass) {
        std::string msg = "rule_consistency coverage: uncovered";
        for (const auto& d : r.rule_consistency.coverage.uncovered) msg += " " + d.str();
        out.push_back(msg);
    }
    for (const auto& p : r.partition_checks) {
        if (p.agree) continue;
        std::string msg = "partition_checks " + p.dibase.str() + ": predicted " +
                          std::string(rules::to_string(p.predicted)) + ", observed " +
                          to_string(p.observed.shape());
        if (!p.y_half_intact) msg += ", Y-half divided";
        if (!p.multiplets_valid) {
            msg += ", unrecognised multiplet";
            for (auto prod : p.invalid_multiplets) msg += " " + std::string(name(prod));
        }
        out.push_back(msg);
    }
    if (!r.shape_census.agree) {
        std::string msg = "shape_census:";
        for (const auto& [shape, n] : r.shape_census.observed) msg += " " + to_string(shape) + "x" + std::to_string(n);
        out.push_back(msg);
    }
    for (const auto& s : r.specification_checks) {
        if (s.pass) continue;
        std::string msg = "specification_checks " + s.result.codon.str() + ": ";
        if (!s.result.role)
            msg += "no consistent local role";
        else if (!s.role_consistent)
            msg += "role " + std::string(to_string(*s.result.role)) + " not allowed by predicted partition";
        else
            msg += "required slots " + s.result.required->slots.str() + " not sufficient";
        out.push_back(msg);
    }
    return out;
}

}  // namespace gcdeg::verify
