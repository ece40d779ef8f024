#include "gcdeg/render.hpp"

#include <sstream>

#include "gcdeg/rules.hpp"

namespace gcdeg::render {

namespace {

std::string str(std::string_view s) { return std::string(s); }

Json slot_list(SlotSet s) {
    Json out = Json::array();
    for (const auto& id : s.ids()) out.push_back(id.str());
    return out;
}

Json codon_list(const std::vector<Codon>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(c.str());
    return out;
}

std::string verdict_cell(const rules::RuleVerdict& v) {
    return v.applicable() ? str(to_string(*v.character())) : "n/a";
}

// "{UGU,UGC|UGA|UGG}"
std::string groups_text(const ObservedPartition& p) {
    std::string out = "{";
    for (std::size_t g = 0; g < p.groups.size(); ++g) {
        if (g) out += '|';
        for (std::size_t i = 0; i < p.groups[g].size(); ++i) {
            if (i) out += ',';
            out += p.groups[g][i].str();
        }
    }
    return out + "}";
}

void add_rule_fields(Json& j, DiBase d) {
    Json delegated = Json::array();
    for (const auto& rule : rules::named_rules()) {
        const auto v = rule.evaluate(d);
        j[str(rule.name)] = verdict_cell(v);
        if (v.applicable() && v.basis() == rules::VerdictBasis::DelegatedToLaw)
            delegated.push_back(str(rule.name));
    }
    j["law_delegated_rules"] = delegated;
}

Json votes_json(DiBase d) {
    Json out = Json::array();
    const auto v = signature(d.with_third(Base::U));
    for (const auto& vote : rules::law_votes(d)) {
        const auto desc = v.at(vote.slot.position);
        const char value = vote.slot.kind == SlotKind::MolecularType ? letter(desc.mt) : digit(desc.nhb);
        out.push_back(vote.slot.str() + "=" + value + ":" + str(to_string(vote.character)));
    }
    return out;
}

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string out;
        for (const auto& e : v) {
            if (!out.empty()) out += ' ';
            out += cell(e);
        }
        return out;
    }
    return v.dump();
}

std::string role_text(const std::optional<LocalRole>& r) {
    return r ? str(to_string(*r)) : "undefined";
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) noexcept {
    if (s == "text") return Format::Text;
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    return std::nullopt;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json codon_json(const CodeTable& t, Codon c) {
    const auto d = c.dibase();
    const auto syn = synonym_set(t, c);
    const auto role = observed_role(t, c);

    Json j;
    j["codon"] = c.str();
    j["signature"] = format_signature(signature(c));
    j["product"] = str(name(syn.product));
    j["synonyms"] = codon_list(syn.codons);
    j["multiplet"] = multiplet_class(t, c).label();
    j["dibase"] = d.str();
    j["character"] = str(to_string(rules::law_character(d)));
    j["observed_character"] = str(to_string(observed_character(t, d)));
    add_rule_fields(j, d);
    j["b2_coherence"] = str(to_string(coherence(d.b2())));
    j["decisive_slots"] = slot_list(rules::decisive_slots(d));
    j["predicted_partition"] = str(rules::to_string(rules::predicted_partition(d)));
    j["observed_partition"] = groups_text(observed_partition(t, d));
    j["role"] = role_text(role);
    if (role && rules::role_permitted(c, *role)) {
        const auto req = rules::required_properties(c, *role);
        j["required_count"] = req.count;
        j["required_slots"] = slot_list(req.slots);
    } else {
        j["required_count"] = nullptr;
        j["required_slots"] = Json::array();
    }
    return j;
}

Json dibase_json(const CodeTable& t, DiBase d) {
    const auto part = observed_partition(t, d);
    Json j;
    j["dibase"] = d.str();
    j["character"] = str(to_string(rules::law_character(d)));
    j["observed_character"] = str(to_string(observed_character(t, d)));
    j["votes"] = votes_json(d);
    add_rule_fields(j, d);
    j["b2_coherence"] = str(to_string(coherence(d.b2())));
    j["decisive_slots"] = slot_list(rules::decisive_slots(d));
    j["predicted_partition"] = str(rules::to_string(rules::predicted_partition(d)));
    j["observed_partition"] = groups_text(part);
    j["observed_shape"] = to_string(part.shape());
    Json codons = Json::array();
    Json products = Json::array();
    for (const auto& c : d.codons()) {
        codons.push_back(c.str());
        products.push_back(str(name(t.translate(c))));
    }
    j["codons"] = codons;
    j["products"] = products;
    return j;
}

Json minset_json(const verify::MinimalSubsetResult& r) {
    Json j;
    j["codon"] = r.codon.str();
    j["product"] = str(name(r.product));
    j["role"] = role_text(r.role);
    j["minimal_size"] = r.minimal_size;
    Json sets = Json::array();
    for (const auto& s : r.minimal_slot_sets) sets.push_back(s.str());
    j["minimal_slot_sets"] = sets;
    j["sufficient_set_count"] = r.sufficient_slot_sets.size();
    if (r.required) {
        j["required_count"] = r.required->count;
        j["required_slots"] = slot_list(r.required->slots);
    } else {
        j["required_count"] = nullptr;
        j["required_slots"] = Json::array();
    }
    j["required_slots_sufficient"] = r.required_slots_sufficient;
    j["agree"] = r.count_matches;
    return j;
}

Json report_json(const verify::VerificationReport& r) {
    Json j;

    Json chars = Json::array();
    for (const auto& c : r.character_checks)
        chars.push_back({{"dibase", c.dibase.str()},
                         {"law", str(to_string(c.law))},
                         {"observed", str(to_string(c.observed))},
                         {"agree", c.agree}});
    j["character_checks"] = chars;

    Json rc;
    Json entries = Json::array();
    for (const auto& e : r.rule_consistency.entries)
        entries.push_back({{"rule", e.rule},
                           {"dibase", e.dibase.str()},
                           {"rule_character", str(to_string(e.rule_character))},
                           {"law_character", str(to_string(e.law_character))},
                           {"basis", str(rules::to_string(e.basis))},
                           {"agree", e.agree}});
    rc["entries"] = entries;
    Json summary = Json::array();
    for (const auto& s : r.rule_consistency.summary)
        summary.push_back({{"rule", s.rule}, {"applicable", s.applicable}, {"agreed", s.agreed}});
    rc["summary"] = summary;
    Json uncovered = Json::array();
    for (const auto& d : r.rule_consistency.coverage.uncovered) uncovered.push_back(d.str());
    rc["coverage"] = {{"covered", r.rule_consistency.coverage.covered},
                      {"total", r.rule_consistency.coverage.total},
                      {"uncovered", uncovered},
                      {"pass", r.rule_consistency.coverage.pass}};
    rc["pass"] = r.rule_consistency.pass();
    j["rule_consistency"] = rc;

    Json parts = Json::array();
    for (const auto& p : r.partition_checks) {
        Json invalid = Json::array();
        for (auto prod : p.invalid_multiplets) invalid.push_back(str(name(prod)));
        parts.push_back({{"dibase", p.dibase.str()},
                         {"predicted", str(rules::to_string(p.predicted))},
                         {"observed_groups", groups_text(p.observed)},
                         {"observed_shape", to_string(p.observed.shape())},
                         {"y_half_intact", p.y_half_intact},
                         {"shape_compatible", p.shape_compatible},
                         {"multiplets_valid", p.multiplets_valid},
                         {"invalid_multiplets", invalid},
                         {"agree", p.agree}});
    }
    j["partition_checks"] = parts;

    Json census_rows = Json::array();
    {
        std::map<PartitionShape, std::pair<std::size_t, std::size_t>> merged;
        for (const auto& [shape, n] : r.shape_census.expected) merged[shape].first = n;
        for (const auto& [shape, n] : r.shape_census.observed) merged[shape].second = n;
        for (const auto& [shape, counts] : merged)
            census_rows.push_back(
                {{"shape", to_string(shape)}, {"expected", counts.first}, {"observed", counts.second}});
    }
    j["shape_census"] = {{"shapes", census_rows}, {"agree", r.shape_census.agree}};

    Json specs = Json::array();
    for (const auto& s : r.specification_checks) {
        const auto& res = s.result;
        Json sufficient = Json::array();
        for (const auto& set : res.sufficient_slot_sets) sufficient.push_back(set.str());
        Json minimal = Json::array();
        for (const auto& set : res.minimal_slot_sets) minimal.push_back(set.str());
        Json e;
        e["codon"] = res.codon.str();
        e["product"] = str(name(res.product));
        e["stop"] = s.stop;
        e["role"] = role_text(res.role);
        e["role_consistent"] = s.role_consistent;
        e["required_count"] = res.required ? Json(res.required->count) : Json(nullptr);
        e["required_slots"] = res.required ? slot_list(res.required->slots) : Json::array();
        e["required_slots_sufficient"] = res.required_slots_sufficient;
        e["minimal_size"] = res.minimal_size;
        e["minimal_slot_sets"] = minimal;
        e["sufficient_slot_sets"] = sufficient;
        e["count_matches"] = res.count_matches;
        e["pass"] = s.pass;
        specs.push_back(e);
    }
    j["specification_checks"] = specs;

    Json disc = Json::array();
    for (const auto& d : r.discrepancies)
        disc.push_back({{"codon", d.codon.str()},
                        {"product", str(name(d.product))},
                        {"role", str(to_string(d.role))},
                        {"required_count", d.required_count},
                        {"minimal_size", d.minimal_size},
                        {"witness", d.witness.str()}});
    j["discrepancies"] = disc;

    Json failed = Json::array();
    for (const auto& f : verify::failed_checks(r)) failed.push_back(f);
    j["summary"] = {{"characters_pass", r.characters_pass()},
                    {"rule_consistency_pass", r.rule_consistency.pass()},
                    {"partitions_pass", r.partitions_pass()},
                    {"specification_pass", r.specification_pass()},
                    {"discrepancy_count", r.discrepancies.size()},
                    {"failed_checks", failed}};
    j["overall_pass"] = r.overall_pass;
    return j;
}

Json census_json(const CodeTable& t) {
    Json classes = Json::array();
    std::size_t weighted = 0;
    for (const auto& [cls, products] : degeneracy_census(t)) {
        Json names = Json::array();
        for (auto p : products) names.push_back(str(name(p)));
        classes.push_back({{"class", cls.label()},
                           {"size", cls.size},
                           {"count", products.size()},
                           {"products", names}});
        weighted += cls.size * products.size();
    }
    return {{"classes", classes}, {"codon_total", weighted}};
}

Json table_json(const CodeTable& t) {
    Json rows = Json::array();
    for (const auto& c : all_codons()) rows.push_back({{"codon", c.str()}, {"product", str(name(t.translate(c)))}});
    return rows;
}

Json translation_json(const std::vector<Translation>& ts) {
    Json rows = Json::array();
    for (const auto& tr : ts)
        for (const auto& a : tr.codons)
            rows.push_back({{"record_id", tr.record_id},
                            {"index", a.index},
                            {"codon", a.codon.str()},
                            {"signature", a.signature},
                            {"product", str(name(a.product))},
                            {"dibase_character", str(to_string(a.dibase_character))},
                            {"multiplet", a.multiplet.label()},
                            {"role", role_text(a.role)}});
    return rows;
}

std::string tsv_rows(const Json& rows) {
    std::ostringstream out;
    if (rows.empty()) return {};
    bool first = true;
    for (const auto& [key, _] : rows.front().items()) {
        out << (first ? "" : "\t") << key;
        first = false;
    }
    out << '\n';
    for (const auto& row : rows) {
        first = true;
        for (const auto& [_, value] : row.items()) {
            out << (first ? "" : "\t") << cell(value);
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

std::string codon_text(const CodeTable& t, Codon c) {
    const auto j = codon_json(t, c);
    const auto d = c.dibase();
    std::ostringstream out;
    out << "codon               " << c.str() << '\n'
        << "signature           " << cell(j["signature"]) << '\n'
        << "product             " << cell(j["product"]) << " (" << cell(j["multiplet"]) << ")\n"
        << "synonyms            " << cell(j["synonyms"]) << '\n'
        << "dibase              " << d.str() << ' ' << cell(j["character"])
        << " (observed " << cell(j["observed_character"]) << ")\n"
        << "votes               " << cell(votes_json(d)) << '\n';
    for (const auto& rule : rules::named_rules()) {
        const auto v = rule.evaluate(d);
        std::string label(rule.name);
        label.resize(20, ' ');
        out << label
            << (v.applicable() ? str(to_string(*v.character())) : std::string("not applicable"))
            << (v.applicable() && v.basis() == rules::VerdictBasis::DelegatedToLaw ? " (from law)" : "")
            << '\n';
    }
    out << "b2 coherence        " << cell(j["b2_coherence"]) << '\n'
        << "decisive slots      " << cell(j["decisive_slots"]) << '\n'
        << "predicted partition " << cell(j["predicted_partition"]) << '\n'
        << "observed partition  " << cell(j["observed_partition"]) << '\n'
        << "role                " << cell(j["role"]) << '\n';
    if (j["required_count"].is_null())
        out << "required slots      undefined\n";
    else
        out << "required slots      " << cell(j["required_count"]) << ": " << cell(j["required_slots"]) << '\n';
    return out.str();
}

std::string dibase_text(const CodeTable& t, DiBase d) {
    const auto j = dibase_json(t, d);
    std::ostringstream out;
    out << "dibase              " << d.str() << '\n'
        << "character           " << cell(j["character"]) << " (observed " << cell(j["observed_character"]) << ")\n"
        << "votes               " << cell(j["votes"]) << '\n';
    for (const auto& rule : rules::named_rules()) {
        const auto v = rule.evaluate(d);
        std::string label(rule.name);
        label.resize(20, ' ');
        out << label
            << (v.applicable() ? str(to_string(*v.character())) : std::string("not applicable"))
            << (v.applicable() && v.basis() == rules::VerdictBasis::DelegatedToLaw ? " (from law)" : "")
            << '\n';
    }
    out << "b2 coherence        " << cell(j["b2_coherence"]) << '\n'
        << "decisive slots      " << cell(j["decisive_slots"]) << '\n'
        << "predicted partition " << cell(j["predicted_partition"]) << '\n'
        << "observed partition  " << cell(j["observed_partition"]) << ' ' << cell(j["observed_shape"]) << '\n'
        << "products            ";
    const auto codons = d.codons();
    for (std::size_t i = 0; i < codons.size(); ++i)
        out << (i ? " " : "") << codons[i].str() << '=' << name(t.translate(codons[i]));
    out << '\n';
    return out.str();
}

std::string minset_text(const verify::MinimalSubsetResult& r) {
    std::ostringstream out;
    out << r.codon.str() << ' ' << name(r.product) << " role " << role_text(r.role) << '\n'
        << "  minimal_size " << r.minimal_size << '\n';
    for (const auto& s : r.minimal_slot_sets) out << "  minimal set  " << s.str() << '\n';
    if (r.required)
        out << "  required     " << r.required->count << ": " << r.required->slots.str()
            << (r.required_slots_sufficient ? " (sufficient)" : " (NOT sufficient)") << '\n';
    else
        out << "  required     undefined\n";
    out << "  agree        " << (r.count_matches ? "yes" : "no") << '\n';
    return out.str();
}

std::string report_text(const verify::VerificationReport& r) {
    std::ostringstream out;
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };

    std::size_t agree = 0;
    for (const auto& c : r.character_checks) agree += c.agree;
    out << "character law      " << verdict(r.characters_pass()) << "  " << agree << "/"
        << r.character_checks.size() << " di-bases agree\n";
    out << "rule consistency   " << verdict(r.rule_consistency.pass()) << " ";
    for (const auto& s : r.rule_consistency.summary)
        out << " " << s.rule << " " << s.agreed << "/" << s.applicable;
    out << "; coverage " << r.rule_consistency.coverage.covered << "/" << r.rule_consistency.coverage.total
        << '\n';
    agree = 0;
    for (const auto& p : r.partition_checks) agree += p.agree;
    out << "partitions         " << verdict(r.partitions_pass()) << "  " << agree << "/"
        << r.partition_checks.size() << " compatible; shapes";
    for (const auto& [shape, n] : r.shape_census.observed) out << " " << to_string(shape) << "x" << n;
    out << '\n';
    agree = 0;
    for (const auto& s : r.specification_checks) agree += s.pass;
    out << "specification      " << verdict(r.specification_pass()) << "  " << agree << "/"
        << r.specification_checks.size() << " codons: required slots sufficient\n";

    out << "discrepancies      " << r.discrepancies.size()
        << " codon(s) with a true minimum below the required count\n";
    for (const auto& d : r.discrepancies)
        out << "  " << d.codon.str() << ' ' << name(d.product) << " role " << to_string(d.role) << ": "
            << d.required_count << " -> " << d.minimal_size << " via " << d.witness.str() << '\n';

    const auto failed = verify::failed_checks(r);
    if (!failed.empty()) {
        out << "failed checks      " << failed.size() << '\n';
        for (const auto& f : failed) out << "  " << f << '\n';
    }
    out << "overall            " << verdict(r.overall_pass) << '\n';
    return out.str();
}

std::string report_tsv(const verify::VerificationReport& r) {
    const auto j = report_json(r);
    std::ostringstream out;
    auto section = [&out](std::string_view name, const Json& rows) {
        out << "#" << name << '\n' << tsv_rows(rows);
    };
    section("character_checks", j["character_checks"]);
    section("rule_consistency.entries", j["rule_consistency"]["entries"]);
    section("rule_consistency.summary", j["rule_consistency"]["summary"]);
    section("rule_consistency.coverage", Json::array({j["rule_consistency"]["coverage"]}));
    section("partition_checks", j["partition_checks"]);
    section("shape_census", j["shape_census"]["shapes"]);
    section("specification_checks", j["specification_checks"]);
    section("discrepancies", j["discrepancies"]);
    Json summary = j["summary"];
    Json failed = Json::array();
    for (const auto& f : summary["failed_checks"]) failed.push_back({{"check", f}});
    summary.erase("failed_checks");
    summary["overall_pass"] = r.overall_pass;
    section("summary", Json::array({summary}));
    section("failed_checks", failed);
    return out.str();
}

std::string census_text(const CodeTable& t) {
    std::ostringstream out;
    std::size_t total = 0;
    for (const auto& [cls, products] : degeneracy_census(t)) {
        out << cls.label() << "  " << products.size() << ":";
        for (auto p : products) out << ' ' << name(p);
        out << '\n';
        total += cls.size * products.size();
    }
    out << "codons " << total << '\n';
    return out.str();
}

}  // namespace gcdeg::render
