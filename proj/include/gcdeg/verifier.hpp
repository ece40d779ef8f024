#ifndef GCDEG_VERIFIER_HPP
#define GCDEG_VERIFIER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcdeg/code_table.hpp"
#include "gcdeg/codon.hpp"
#include "gcdeg/rules.hpp"

// Exhaustive checks of the rule engine against a code table, and the
// brute-force search for minimal sufficient property subsets.
namespace gcdeg::verify {

struct CharacterCheck {
    DiBase dibase;
    Character law;
    Character observed;
    bool agree;
};

/// One entry per di-base, in index order.
std::vector<CharacterCheck> verify_characters(const CodeTable& t);

struct RuleCheck {
    std::string rule;
    DiBase dibase;
    Character rule_character;
    Character law_character;
    rules::VerdictBasis basis;
    bool agree;
};

struct RuleSummary {
    std::string rule;
    std::size_t applicable = 0;
    std::size_t agreed = 0;
};

struct CoverageCheck {
    std::size_t covered = 0;
    std::size_t total = DiBase::kCount;
    std::vector<DiBase> uncovered;  // by rule1, rule_ug and rule3
    bool pass = false;
};

struct RuleConsistency {
    std::vector<RuleCheck> entries;    // rule order, then di-base order
    std::vector<RuleSummary> summary;  // rule order
    CoverageCheck coverage;

    bool pass() const noexcept;
};

/// Table-independent: the named rules against the majority law.
RuleConsistency verify_rule_consistency();

struct PartitionCheck {
    DiBase dibase;
    rules::PredictedPartition predicted;
    ObservedPartition observed;
    bool y_half_intact;
    bool shape_compatible;
    // Every product present here has a synonym set made of the recognised
    // blocks: 1pt=[1], 2pt=[2], 3pt=[3] or [2+1], 4pt=[4], 6pt=[4+2], counting
    // codons per di-base.
    bool multiplets_valid;
    std::vector<Product> invalid_multiplets;
    bool agree;
};

/// Whether an observed shape can realise a predicted partition.
bool shape_compatible(rules::PredictedPartition predicted, const ObservedPartition& observed);

std::vector<PartitionCheck> verify_partitions(const CodeTable& t);

// Count of di-bases per observed shape, against the distribution of the
// standard code: {4}x8, {2,2}x6, {2,1,1}x1, {3,1}x1.
struct ShapeCensusCheck {
    std::map<PartitionShape, std::size_t> expected;
    std::map<PartitionShape, std::size_t> observed;
    bool agree;
};

std::map<PartitionShape, std::size_t> reference_shape_census();
ShapeCensusCheck verify_shape_census(const CodeTable& t);

struct MinimalSubsetResult {
    Codon codon;
    Product product;
    std::vector<SlotSet> sufficient_slot_sets;  // mask order
    std::size_t minimal_size = kSlotCount;
    std::vector<SlotSet> minimal_slot_sets;  // sufficient sets of minimal_size, mask order
    std::optional<LocalRole> role;           // from the observed partition
    std::optional<rules::RequiredProperties> required;  // empty when role is undefined
    bool required_slots_sufficient = false;
    bool count_matches = false;  // required->count == minimal_size
};

/// Whether every codon agreeing with `c` on `slots` has the same product.
bool is_sufficient(const CodeTable& t, Codon c, SlotSet slots);

MinimalSubsetResult minimal_subset_oracle(const CodeTable& t, Codon c);

struct SpecificationCheck {
    MinimalSubsetResult result;
    bool stop;             // product is STOP; kept in, but flagged
    bool role_consistent;  // observed role is one the predicted partition allows
    bool pass;             // role_consistent && required slots sufficient
};

std::vector<SpecificationCheck> verify_specification_rules(const CodeTable& t);

// A codon whose true minimum is below the count the required-property rule
// gives for its role.
struct Discrepancy {
    Codon codon;
    Product product;
    LocalRole role;
    std::size_t required_count;
    std::size_t minimal_size;
    SlotSet witness;
};

struct VerificationReport {
    std::vector<CharacterCheck> character_checks;
    RuleConsistency rule_consistency;
    std::vector<PartitionCheck> partition_checks;
    ShapeCensusCheck shape_census;
    std::vector<SpecificationCheck> specification_checks;
    std::vector<Discrepancy> discrepancies;  // informational
    bool overall_pass = false;

    bool characters_pass() const noexcept;
    bool partitions_pass() const noexcept;
    bool specification_pass() const noexcept;
};

VerificationReport full_report(const CodeTable& t);

/// Human-readable names of every failing check, in report order.
std::vector<std::string> failed_checks(const VerificationReport& r);

}  // namespace gcdeg::verify

#endif  // GCDEG_VERIFIER_HPP
