#include "fpa/sheet_parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "line_scanner.hpp"

namespace fpa {

namespace {

using detail::parse_int;
using detail::scan_lines;
using detail::section_name;
using detail::split_key_value;
using detail::split_ws;

struct DiagnosticSink {
    std::vector<ParseDiagnostic> diagnostics;

    void syntax_error(int line, std::string message) {
        diagnostics.push_back({Severity::Error, DiagnosticKind::Syntax, line, std::move(message)});
    }
    void semantic_error(int line, std::string message) {
        diagnostics.push_back(
            {Severity::Error, DiagnosticKind::Semantic, line, std::move(message)});
    }
    void warning(int line, std::string message) {
        diagnostics.push_back(
            {Severity::Warning, DiagnosticKind::Semantic, line, std::move(message)});
    }
    bool errored() const { return has_errors(diagnostics); }
};

// `key = a b c` rows shared by [counts] and [weights]. Remembers the
// line of every row so later checks can point at it.
struct TripleRow {
    int line = 0;
    std::array<std::int64_t, kLevelCount> values{};
};

struct TripleSection {
    const char* section;
    std::array<std::optional<TripleRow>, kClassCount> rows;

    void handle(DiagnosticSink& sink, int line, std::string_view key, std::string_view value) {
        const auto cls = class_from_counts_key(key);
        if (!cls) {
            sink.syntax_error(line, "unknown key '" + std::string(key) + "' in [" + section + "]");
            return;
        }
        auto& row = rows[index_of(*cls)];
        if (row) {
            sink.syntax_error(line, "duplicate key '" + std::string(key) + "' in [" + section + "]");
            return;
        }
        const auto tokens = split_ws(value);
        if (tokens.size() != kLevelCount) {
            sink.syntax_error(line, "expected three integers (low average high) for '" +
                                        std::string(key) + "'");
            return;
        }
        TripleRow parsed{line, {}};
        for (std::size_t i = 0; i < kLevelCount; ++i) {
            const auto v = parse_int(tokens[i]);
            if (!v) {
                sink.syntax_error(line, "malformed integer '" + std::string(tokens[i]) + "'");
                return;
            }
            parsed.values[i] = *v;
        }
        row = parsed;
    }
};

void check_counts_ranges(DiagnosticSink& sink, const TripleSection& counts) {
    for (ComponentClass cls : kComponentClasses) {
        const auto& row = counts.rows[index_of(cls)];
        if (!row)
            continue;
        for (ComplexityLevel lvl : kComplexityLevels)
            if (row->values[index_of(lvl)] < 0)
                sink.semantic_error(row->line, "count must be >= 0 for " +
                                                   std::string(class_name(cls)) + "/" +
                                                   std::string(level_name(lvl)));
    }
}

// All five keys or none; rows must be positive and monotone. Returns
// a matrix only when everything checks out.
std::optional<WeightMatrix> finish_weights(DiagnosticSink& sink, const TripleSection& weights,
                                           int section_line) {
    const auto present = static_cast<std::size_t>(
        std::count_if(weights.rows.begin(), weights.rows.end(),
                      [](const auto& row) { return row.has_value(); }));
    if (present < kClassCount) {
        sink.syntax_error(section_line, "partial weights override: all five keys required (got " +
                                            std::to_string(present) + ")");
        return std::nullopt;
    }
    bool valid = true;
    WeightMatrix matrix;
    for (ComponentClass cls : kComponentClasses) {
        const auto& row = *weights.rows[index_of(cls)];
        for (ComplexityLevel lvl : kComplexityLevels) {
            const std::int64_t w = row.values[index_of(lvl)];
            if (w < 1) {
                sink.semantic_error(row.line, "weight must be >= 1 for " +
                                                  std::string(class_name(cls)) + "/" +
                                                  std::string(level_name(lvl)));
                valid = false;
            }
            matrix.set(cls, lvl, w);
        }
        if (!(row.values[0] <= row.values[1] && row.values[1] <= row.values[2])) {
            sink.semantic_error(row.line,
                                "row not monotone for " + std::string(class_name(cls)) +
                                    " (low <= average <= high required)");
            valid = false;
        }
    }
    if (!valid)
        return std::nullopt;
    return matrix;
}

struct RcafSection {
    std::optional<std::pair<int, std::int64_t>> total;
    std::array<std::optional<std::pair<int, std::int64_t>>, kRcafFactorCount> factors;

    bool any_factor() const {
        return std::any_of(factors.begin(), factors.end(),
                           [](const auto& f) { return f.has_value(); });
    }

    void handle(DiagnosticSink& sink, int line, std::string_view key, std::string_view value) {
        const auto parsed = parse_int(value);
        if (key == "total") {
            if (total) {
                sink.syntax_error(line, "duplicate key 'total' in [rcaf]");
                return;
            }
            if (!parsed) {
                sink.syntax_error(line, "malformed integer '" + std::string(value) + "'");
                return;
            }
            total = {line, *parsed};
            return;
        }
        if (key.size() >= 2 && key.front() == 'f') {
            if (const auto id = parse_int(key.substr(1));
                id && *id >= 1 && *id <= kRcafFactorCount) {
                auto& factor = factors[static_cast<std::size_t>(*id - 1)];
                if (factor) {
                    sink.syntax_error(line,
                                      "duplicate key '" + std::string(key) + "' in [rcaf]");
                    return;
                }
                if (!parsed) {
                    sink.syntax_error(line, "malformed integer '" + std::string(value) + "'");
                    return;
                }
                factor = {line, *parsed};
                return;
            }
        }
        sink.syntax_error(line, "unknown key '" + std::string(key) +
                                    "' in [rcaf] (expected f1..f14 or total)");
    }

    std::optional<RcafSheet> finish(DiagnosticSink& sink, int section_line) {
        const bool itemized = any_factor();
        if (total && itemized) {
            sink.syntax_error(total->first,
                              "mixing itemized factors and declared total in [rcaf]");
            return std::nullopt;
        }
        if (!total && !itemized) {
            sink.syntax_error(section_line, "rcaf section is empty (expected f1..f14 or total)");
            return std::nullopt;
        }
        if (itemized) {
            const auto given = static_cast<int>(
                std::count_if(factors.begin(), factors.end(),
                              [](const auto& f) { return f.has_value(); }));
            if (given < kRcafFactorCount) {
                sink.syntax_error(section_line, "rcaf factors incomplete: expected 14, got " +
                                                    std::to_string(given));
                return std::nullopt;
            }
            bool in_range = true;
            std::array<int, kRcafFactorCount> ratings{};
            for (int i = 0; i < kRcafFactorCount; ++i) {
                const auto& [line, value] = *factors[static_cast<std::size_t>(i)];
                if (value < 0 || value > kRcafRatingMax) {
                    sink.semantic_error(line, "rating out of range 0..5 (f" +
                                                  std::to_string(i + 1) + " = " +
                                                  std::to_string(value) + ")");
                    in_range = false;
                } else {
                    ratings[static_cast<std::size_t>(i)] = static_cast<int>(value);
                }
            }
            if (!in_range)
                return std::nullopt;
            return RcafSheet::itemized(ratings);
        }
        const auto& [line, value] = *total;
        if (value < 0 || value > kRcafTotalMax) {
            sink.semantic_error(line, "declared total out of range 0..70 (total = " +
                                          std::to_string(value) + ")");
            return std::nullopt;
        }
        sink.warning(line, "rcaf given as a declared total instead of itemized factors");
        return RcafSheet::declared(static_cast<int>(value));
    }
};

struct ItemsSection {
    std::vector<ItemRecord> items;
    std::set<std::pair<std::size_t, std::string>> seen;       // (class, name)
    std::map<std::string, std::set<std::size_t>> name_classes;

    void handle(DiagnosticSink& sink, int line, std::string_view key, std::string_view value) {
        if (key != "item") {
            sink.syntax_error(line,
                              "unknown key '" + std::string(key) + "' in [items] (expected 'item')");
            return;
        }
        const auto tokens = split_ws(value);
        if (tokens.size() < 2) {
            sink.syntax_error(line, "malformed item (expected '<CLASS> <basis> <name>')");
            return;
        }
        const auto cls = class_from_code(tokens[0]);
        if (!cls) {
            sink.syntax_error(line, "unknown component class '" + std::string(tokens[0]) +
                                        "' (expected EI, EO, EQ, ILF or EIF)");
            return;
        }
        ItemRecord item;
        item.cls = *cls;
        const std::string_view basis = tokens[1];
        if (const auto lvl = level_from_code(basis)) {
            item.declared = *lvl;
        } else if (basis.rfind("det=", 0) == 0) {
            const auto comma = basis.find(',');
            const std::string_view det_part = basis.substr(4, comma == std::string_view::npos
                                                                  ? std::string_view::npos
                                                                  : comma - 4);
            const std::string_view refs_part =
                comma == std::string_view::npos ? std::string_view{} : basis.substr(comma + 1);
            const auto det = parse_int(det_part);
            std::optional<std::int64_t> refs;
            if (refs_part.rfind("refs=", 0) == 0)
                refs = parse_int(refs_part.substr(5));
            if (!det || !refs) {
                sink.syntax_error(line, "malformed basis '" + std::string(basis) +
                                            "' (expected low|average|high or det=<n>,refs=<n>)");
                return;
            }
            item.measured = MeasuredBasis{*det, *refs};
        } else {
            sink.syntax_error(line, "malformed basis '" + std::string(basis) +
                                        "' (expected low|average|high or det=<n>,refs=<n>)");
            return;
        }
        // name = rest of the line after the basis token, trimmed
        const auto basis_end =
            static_cast<std::size_t>(basis.data() + basis.size() - value.data());
        item.name = std::string(detail::trim(value.substr(basis_end)));
        if (item.name.empty()) {
            sink.syntax_error(line, "item name missing");
            return;
        }
        if (!seen.insert({index_of(item.cls), item.name}).second) {
            sink.syntax_error(line, "duplicate item name '" + item.name + "'");
            return;
        }
        auto& classes = name_classes[item.name];
        classes.insert(index_of(item.cls));
        if (classes.size() == 2)
            sink.warning(line, "item name '" + item.name + "' appears under multiple classes");
        if (item.measured) {
            if (item.measured->det < 1)
                sink.semantic_error(line, "det must be >= 1 for item '" + item.name + "'");
            if (item.measured->refs < 0)
                sink.semantic_error(line, "refs must be >= 0 for item '" + item.name + "'");
        }
        items.push_back(std::move(item));
    }
};

struct MetaSection {
    std::optional<std::pair<int, std::string>> name;
    std::optional<std::pair<int, std::string>> approach;

    void handle(DiagnosticSink& sink, int line, std::string_view key, std::string_view value) {
        auto store = [&](std::optional<std::pair<int, std::string>>& slot) {
            if (slot) {
                sink.syntax_error(line, "duplicate key '" + std::string(key) + "' in [meta]");
                return;
            }
            slot = {line, std::string(value)};
        };
        if (key == "name")
            store(name);
        else if (key == "approach")
            store(approach);
        else
            sink.syntax_error(line, "unknown key '" + std::string(key) + "' in [meta]");
    }
};

enum class Section { None, Meta, Counts, Items, Rcaf, Weights, Unknown };

}  // namespace

ParseResult parse_sheet(std::string_view text) {
    DiagnosticSink sink;
    MetaSection meta;
    TripleSection counts{"counts", {}};
    TripleSection weights{"weights", {}};
    RcafSection rcaf;
    ItemsSection items;
    std::optional<int> counts_line, items_line, rcaf_line, weights_line;

    Section current = Section::None;
    std::set<std::string> seen_sections;
    for (const auto& line : scan_lines(text)) {
        if (const auto section = section_name(line.text)) {
            const std::string name(*section);
            if (name == "meta")
                current = Section::Meta;
            else if (name == "counts")
                current = Section::Counts, counts_line = counts_line.value_or(line.number);
            else if (name == "items")
                current = Section::Items, items_line = items_line.value_or(line.number);
            else if (name == "rcaf")
                current = Section::Rcaf, rcaf_line = rcaf_line.value_or(line.number);
            else if (name == "weights")
                current = Section::Weights, weights_line = weights_line.value_or(line.number);
            else {
                current = Section::Unknown;
                sink.syntax_error(line.number, "unknown section [" + name + "]");
                continue;
            }
            if (!seen_sections.insert(name).second)
                sink.syntax_error(line.number, "duplicate section [" + name + "]");
            continue;
        }
        const auto entry = split_key_value(line.text);
        if (!entry) {
            sink.syntax_error(line.number, "malformed line (expected key = value)");
            continue;
        }
        switch (current) {
        case Section::None:
            sink.syntax_error(line.number, "entry before any section header");
            break;
        case Section::Meta:
            meta.handle(sink, line.number, entry->key, entry->value);
            break;
        case Section::Counts:
            counts.handle(sink, line.number, entry->key, entry->value);
            break;
        case Section::Items:
            items.handle(sink, line.number, entry->key, entry->value);
            break;
        case Section::Rcaf:
            rcaf.handle(sink, line.number, entry->key, entry->value);
            break;
        case Section::Weights:
            weights.handle(sink, line.number, entry->key, entry->value);
            break;
        case Section::Unknown:
            break;  // the header was already reported
        }
    }

    if (counts_line && items_line)
        sink.syntax_error(std::max(*counts_line, *items_line),
                          "counts and items are mutually exclusive");
    if (!counts_line && !items_line)
        sink.syntax_error(1, "missing counts or items section");

    check_counts_ranges(sink, counts);

    std::optional<RcafSheet> rcaf_sheet;
    if (!rcaf_line)
        sink.syntax_error(1, "missing rcaf section");
    else
        rcaf_sheet = rcaf.finish(sink, *rcaf_line);

    std::optional<WeightMatrix> weights_override;
    if (weights_line)
        weights_override = finish_weights(sink, weights, *weights_line);

    ParseResult result;
    std::stable_sort(sink.diagnostics.begin(), sink.diagnostics.end(),
                     [](const ParseDiagnostic& a, const ParseDiagnostic& b) { return a.line < b.line; });
    if (!sink.errored()) {
        SheetDocument doc;
        if (meta.name)
            doc.meta.name = meta.name->second;
        if (meta.approach)
            doc.meta.approach = meta.approach->second;
        if (counts_line) {
            CountSheet sheet;
            sheet.name = doc.meta.name;
            sheet.approach = doc.meta.approach;
            for (ComponentClass cls : kComponentClasses)
                if (const auto& row = counts.rows[index_of(cls)])
                    for (ComplexityLevel lvl : kComplexityLevels)
                        sheet.cell(cls, lvl) = row->values[index_of(lvl)];
            doc.counts = std::move(sheet);
        } else {
            doc.items = std::move(items.items);
        }
        doc.rcaf = *rcaf_sheet;
        doc.weights = weights_override;
        result.document = std::move(doc);
    }
    result.diagnostics = std::move(sink.diagnostics);
    return result;
}

namespace {

void require_renderable(std::string_view what, std::string_view value) {
    if (value.find('#') != std::string_view::npos ||
        value.find('\n') != std::string_view::npos ||
        value.find('\r') != std::string_view::npos)
        throw std::invalid_argument(std::string(what) +
                                    " cannot contain '#' or line breaks in the sheet format");
    if (detail::trim(value) != value)
        throw std::invalid_argument(std::string(what) +
                                    " cannot carry leading or trailing whitespace");
}

std::string render_triple_row(ComponentClass cls,
                              const std::array<std::int64_t, kLevelCount>& values) {
    std::string out(class_counts_key(cls));
    out += " = ";
    out += std::to_string(values[0]);
    out += ' ';
    out += std::to_string(values[1]);
    out += ' ';
    out += std::to_string(values[2]);
    out += '\n';
    return out;
}

}  // namespace

std::string render_sheet(const SheetDocument& doc) {
    if (doc.counts.has_value() == doc.items.has_value())
        throw std::invalid_argument("document must have exactly one of counts or items");
    require_renderable("meta name", doc.meta.name);
    require_renderable("meta approach", doc.meta.approach);

    std::vector<std::string> sections;
    if (!doc.meta.name.empty() || !doc.meta.approach.empty()) {
        std::string s = "[meta]\n";
        if (!doc.meta.name.empty())
            s += "name = " + doc.meta.name + "\n";
        if (!doc.meta.approach.empty())
            s += "approach = " + doc.meta.approach + "\n";
        sections.push_back(std::move(s));
    }
    if (doc.counts) {
        std::string s = "[counts]\n";
        for (ComponentClass cls : kComponentClasses)
            s += render_triple_row(cls, doc.counts->counts[index_of(cls)]);
        sections.push_back(std::move(s));
    } else {
        std::string s = "[items]\n";
        for (const ItemRecord& item : *doc.items) {
            if (item.declared.has_value() == item.measured.has_value())
                throw std::invalid_argument("item '" + item.name +
                                            "' must have exactly one basis");
            require_renderable("item name", item.name);
            if (item.name.empty())
                throw std::invalid_argument("item name missing");
            s += "item = ";
            s += class_code(item.cls);
            s += ' ';
            if (item.declared) {
                s += level_code(*item.declared);
            } else {
                s += "det=" + std::to_string(item.measured->det) +
                     ",refs=" + std::to_string(item.measured->refs);
            }
            s += ' ';
            s += item.name;
            s += '\n';
        }
        sections.push_back(std::move(s));
    }
    {
        std::string s = "[rcaf]\n";
        if (doc.rcaf.factors) {
            for (int i = 0; i < kRcafFactorCount; ++i)
                s += "f" + std::to_string(i + 1) + " = " +
                     std::to_string((*doc.rcaf.factors)[static_cast<std::size_t>(i)]) + "\n";
        } else if (doc.rcaf.declared_total) {
            s += "total = " + std::to_string(*doc.rcaf.declared_total) + "\n";
        } else {
            throw std::invalid_argument("rcaf sheet has neither factors nor a declared total");
        }
        sections.push_back(std::move(s));
    }
    if (doc.weights) {
        std::string s = "[weights]\n";
        for (ComponentClass cls : kComponentClasses) {
            std::array<std::int64_t, kLevelCount> values{};
            for (ComplexityLevel lvl : kComplexityLevels) {
                if (!doc.weights->has(cls, lvl))
                    throw std::invalid_argument("weight matrix override is missing entries");
                values[index_of(lvl)] = doc.weights->weight(cls, lvl);
            }
            s += render_triple_row(cls, values);
        }
        sections.push_back(std::move(s));
    }

    std::string out;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (i > 0)
            out += '\n';
        out += sections[i];
    }
    return out;
}

WeightsFileResult parse_weights_file(std::string_view text) {
    DiagnosticSink sink;
    TripleSection weights{"weights", {}};
    std::optional<int> weights_line;

    Section current = Section::None;
    for (const auto& line : scan_lines(text)) {
        if (const auto section = section_name(line.text)) {
            if (*section == "weights") {
                if (weights_line)
                    sink.syntax_error(line.number, "duplicate section [weights]");
                current = Section::Weights;
                weights_line = weights_line.value_or(line.number);
            } else {
                current = Section::Unknown;
                sink.syntax_error(line.number, "unknown section [" + std::string(*section) +
                                                   "] in weights file");
            }
            continue;
        }
        const auto entry = split_key_value(line.text);
        if (!entry) {
            sink.syntax_error(line.number, "malformed line (expected key = value)");
            continue;
        }
        if (current == Section::Weights)
            weights.handle(sink, line.number, entry->key, entry->value);
        else if (current == Section::None)
            sink.syntax_error(line.number, "entry before any section header");
    }

    WeightsFileResult result;
    if (!weights_line) {
        sink.syntax_error(1, "missing weights section");
    } else {
        const auto matrix = finish_weights(sink, weights, *weights_line);
        if (!sink.errored())
            result.weights = matrix;
    }
    result.diagnostics = std::move(sink.diagnostics);
    return result;
}

}  // namespace fpa
