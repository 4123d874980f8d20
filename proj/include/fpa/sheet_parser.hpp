// Count-sheet file format (.fpa): UTF-8, line oriented. '#' starts a
// comment; blank lines are ignored; section headers [meta], [counts],
// [items], [rcaf], [weights] stand alone on a line; entries are
// `key = value`. [counts] and [items] are mutually exclusive; [rcaf]
// is required. Parsing recovers from errors to report as many
// diagnostics as possible in one pass.

#ifndef FPA_SHEET_PARSER_HPP
#define FPA_SHEET_PARSER_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/diagnostics.hpp"
#include "fpa/domain.hpp"

namespace fpa {

struct SheetMeta {
    std::string name;
    std::string approach;

    bool operator==(const SheetMeta&) const = default;
};

struct SheetDocument {
    SheetMeta meta;
    std::optional<CountSheet> counts;             // name/approach mirror meta
    std::optional<std::vector<ItemRecord>> items;
    RcafSheet rcaf;
    std::optional<WeightMatrix> weights;          // in-file override of the defaults

    bool operator==(const SheetDocument&) const = default;
};

struct ParseResult {
    // Engaged iff no error-severity diagnostics were produced; the
    // document then satisfies every domain invariant.
    std::optional<SheetDocument> document;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// Pure: the same text always yields the same result.
ParseResult parse_sheet(std::string_view text);

// Canonical text form; parse_sheet(render_sheet(doc)) == doc for every
// valid document. Throws std::invalid_argument on documents the format
// cannot represent (strings containing '#' or newlines, names with
// leading/trailing whitespace, missing counts/items block).
std::string render_sheet(const SheetDocument& doc);

struct WeightsFileResult {
    std::optional<WeightMatrix> weights;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// A weights override file is a lone [weights] section, all five keys.
WeightsFileResult parse_weights_file(std::string_view text);

}  // namespace fpa

#endif  // FPA_SHEET_PARSER_HPP
