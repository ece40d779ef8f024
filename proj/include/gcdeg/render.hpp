#ifndef GCDEG_RENDER_HPP
#define GCDEG_RENDER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gcdeg/code_table.hpp"
#include "gcdeg/codon.hpp"
#include "gcdeg/sequence.hpp"
#include "gcdeg/verifier.hpp"

// Output rendering shared by the CLI subcommands. JSON keeps insertion order;
// TSV uses the JSON field names as its header, with list values joined by a
// single space.
namespace gcdeg::render {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Tsv };

std::optional<Format> parse_format(std::string_view s) noexcept;

Json codon_json(const CodeTable& t, Codon c);
Json dibase_json(const CodeTable& t, DiBase d);
Json minset_json(const verify::MinimalSubsetResult& r);
Json report_json(const verify::VerificationReport& r);
Json census_json(const CodeTable& t);
Json table_json(const CodeTable& t);
Json translation_json(const std::vector<Translation>& ts);

// A flat array of flat objects rendered as TSV: header from the first object's
// keys, one line per object. Arrays become space-joined cells.
std::string tsv_rows(const Json& rows);

std::string codon_text(const CodeTable& t, Codon c);
std::string dibase_text(const CodeTable& t, DiBase d);
std::string minset_text(const verify::MinimalSubsetResult& r);
std::string report_text(const verify::VerificationReport& r);
std::string report_tsv(const verify::VerificationReport& r);
std::string census_text(const CodeTable& t);

/// JSON text as emitted by every command: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace gcdeg::render

#endif  // GCDEG_RENDER_HPP
