#include "fpa/classifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "line_scanner.hpp"

namespace fpa {

namespace {

constexpr ComplexityLevel L = ComplexityLevel::Low;
constexpr ComplexityLevel A = ComplexityLevel::Average;
constexpr ComplexityLevel H = ComplexityLevel::High;

constexpr std::array<std::array<ComplexityLevel, 3>, 3> kDefaultGrid = {{
    {L, L, A},
    {L, A, H},
    {A, H, H},
}};

int band(std::int64_t value, std::int64_t break1, std::int64_t break2) {
    if (value <= break1)
        return 0;
    if (value <= break2)
        return 1;
    return 2;
}

}  // namespace

ClassificationMatrix default_classification_matrix() {
    ClassificationMatrix m;
    m.rule(ComponentClass::ExternalInput) = {4, 15, 1, 2, kDefaultGrid};
    m.rule(ComponentClass::ExternalOutput) = {5, 19, 1, 3, kDefaultGrid};
    m.rule(ComponentClass::ExternalQuery) = {5, 19, 1, 3, kDefaultGrid};
    m.rule(ComponentClass::InternalLogicalFile) = {19, 50, 1, 5, kDefaultGrid};
    m.rule(ComponentClass::ExternalInterfaceFile) = {19, 50, 1, 5, kDefaultGrid};
    return m;
}

std::vector<std::string> validate_classification_matrix(const ClassificationMatrix& m) {
    std::vector<std::string> violations;
    for (ComponentClass cls : kComponentClasses) {
        const ClassRule& rule = m.rule(cls);
        const std::string tag(class_name(cls));
        if (rule.det_break1 < 1)
            violations.push_back("det breakpoints must be >= 1 for " + tag);
        if (rule.ref_break1 < 0)
            violations.push_back("ref breakpoints must be >= 0 for " + tag);
        if (rule.det_break1 >= rule.det_break2)
            violations.push_back("det breakpoints not strictly increasing for " + tag);
        if (rule.ref_break1 >= rule.ref_break2)
            violations.push_back("ref breakpoints not strictly increasing for " + tag);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const auto level = index_of(rule.grid[i][j]);
                if (j > 0 && level < index_of(rule.grid[i][j - 1])) {
                    violations.push_back("grid not monotone along det bands for " + tag);
                    i = j = 3;  // one report per class is enough
                    break;
                }
                if (i > 0 && level < index_of(rule.grid[i - 1][j])) {
                    violations.push_back("grid not monotone along ref bands for " + tag);
                    i = j = 3;
                    break;
                }
            }
    }
    return violations;
}

ComplexityLevel classify(const ItemRecord& item, const ClassificationMatrix& m) {
    if (!item.measured)
        throw std::invalid_argument("classification not applicable: item '" + item.name +
                                    "' has a declared level");
    if (const auto violations = validate_item(item); !violations.empty())
        throw std::invalid_argument(violations.front());
    const ClassRule& rule = m.rule(item.cls);
    const int det_band = band(item.measured->det, rule.det_break1, rule.det_break2);
    const int ref_band = band(item.measured->refs, rule.ref_break1, rule.ref_break2);
    return rule.grid[static_cast<std::size_t>(ref_band)][static_cast<std::size_t>(det_band)];
}

CountSheet aggregate_items(std::span<const ItemRecord> items, const ClassificationMatrix& m,
                           std::string name, std::string approach) {
    CountSheet sheet;
    sheet.name = std::move(name);
    sheet.approach = std::move(approach);
    std::set<std::pair<std::size_t, std::string_view>> seen;
    for (const ItemRecord& item : items) {
        if (!seen.insert({index_of(item.cls), item.name}).second)
            throw std::invalid_argument("duplicate item name '" + item.name + "'");
        if (const auto violations = validate_item(item); !violations.empty())
            throw std::invalid_argument(violations.front());
        const ComplexityLevel level = item.declared ? *item.declared : classify(item, m);
        ++sheet.cell(item.cls, level);
    }
    return sheet;
}

namespace {

using detail::parse_int;
using detail::scan_lines;
using detail::section_name;
using detail::split_key_value;
using detail::split_ws;

struct MatrixDiagnostics {
    std::vector<ParseDiagnostic> diagnostics;

    void syntax_error(int line, std::string message) {
        diagnostics.push_back({Severity::Error, DiagnosticKind::Syntax, line, std::move(message)});
    }
    void semantic_error(int line, std::string message) {
        diagnostics.push_back(
            {Severity::Error, DiagnosticKind::Semantic, line, std::move(message)});
    }
};

std::optional<ComponentClass> class_from_section_suffix(std::string_view suffix) {
    for (ComponentClass cls : kComponentClasses) {
        std::string lowered(class_code(cls));
        std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        if (lowered == suffix)
            return cls;
    }
    return std::nullopt;
}

struct RuleCollector {
    int section_line = 0;
    std::optional<std::pair<int, std::array<std::int64_t, 2>>> det_breaks;
    std::optional<std::pair<int, std::array<std::int64_t, 2>>> ref_breaks;
    std::optional<std::pair<int, std::array<std::array<ComplexityLevel, 3>, 3>>> grid;
};

std::optional<std::array<std::int64_t, 2>> parse_breaks(std::string_view value) {
    const auto tokens = split_ws(value);
    if (tokens.size() != 2)
        return std::nullopt;
    const auto a = parse_int(tokens[0]);
    const auto b = parse_int(tokens[1]);
    if (!a || !b)
        return std::nullopt;
    return std::array<std::int64_t, 2>{*a, *b};
}

// "l l a / l a h / a h h" -> rows by ref band, cells by det band
std::optional<std::array<std::array<ComplexityLevel, 3>, 3>> parse_grid(std::string_view value) {
    std::array<std::array<ComplexityLevel, 3>, 3> grid{};
    std::size_t row = 0;
    std::size_t start = 0;
    while (true) {
        const std::size_t slash = value.find('/', start);
        const std::string_view part = detail::trim(
            value.substr(start, slash == std::string_view::npos ? std::string_view::npos
                                                                 : slash - start));
        if (row >= 3)
            return std::nullopt;
        const auto cells = split_ws(part);
        if (cells.size() != 3)
            return std::nullopt;
        for (std::size_t j = 0; j < 3; ++j) {
            if (cells[j] == "l")
                grid[row][j] = L;
            else if (cells[j] == "a")
                grid[row][j] = A;
            else if (cells[j] == "h")
                grid[row][j] = H;
            else
                return std::nullopt;
        }
        ++row;
        if (slash == std::string_view::npos)
            break;
        start = slash + 1;
    }
    if (row != 3)
        return std::nullopt;
    return grid;
}

}  // namespace

MatrixFileResult parse_matrix_file(std::string_view text) {
    MatrixDiagnostics sink;
    std::array<std::optional<RuleCollector>, kClassCount> collectors;
    RuleCollector* current = nullptr;

    for (const auto& line : scan_lines(text)) {
        if (const auto section = section_name(line.text)) {
            current = nullptr;
            if (section->rfind("matrix.", 0) != 0) {
                sink.syntax_error(line.number, "unknown section [" + std::string(*section) +
                                                   "] in matrix file");
                continue;
            }
            const auto cls = class_from_section_suffix(section->substr(7));
            if (!cls) {
                sink.syntax_error(line.number,
                                  "unknown matrix class in [" + std::string(*section) +
                                      "] (expected matrix.ei/eo/eq/ilf/eif)");
                continue;
            }
            auto& collector = collectors[index_of(*cls)];
            if (collector) {
                sink.syntax_error(line.number, "duplicate section [" + std::string(*section) + "]");
                continue;
            }
            collector = RuleCollector{line.number, {}, {}, {}};
            current = &*collector;
            continue;
        }
        const auto entry = split_key_value(line.text);
        if (!entry) {
            sink.syntax_error(line.number, "malformed line (expected key = value)");
            continue;
        }
        if (!current) {
            sink.syntax_error(line.number, "entry before any [matrix.<class>] section");
            continue;
        }
        if (entry->key == "det_breaks" || entry->key == "ref_breaks") {
            auto& slot = entry->key == "det_breaks" ? current->det_breaks : current->ref_breaks;
            if (slot) {
                sink.syntax_error(line.number, "duplicate key '" + std::string(entry->key) + "'");
                continue;
            }
            const auto breaks = parse_breaks(entry->value);
            if (!breaks) {
                sink.syntax_error(line.number, "expected two integers for '" +
                                                   std::string(entry->key) + "'");
                continue;
            }
            slot = {line.number, *breaks};
        } else if (entry->key == "grid") {
            if (current->grid) {
                sink.syntax_error(line.number, "duplicate key 'grid'");
                continue;
            }
            const auto grid = parse_grid(entry->value);
            if (!grid) {
                sink.syntax_error(line.number,
                                  "malformed grid (expected three rows of l/a/h, e.g. 'l l a / "
                                  "l a h / a h h')");
                continue;
            }
            current->grid = {line.number, *grid};
        } else {
            sink.syntax_error(line.number, "unknown key '" + std::string(entry->key) +
                                               "' in matrix section");
        }
    }

    ClassificationMatrix matrix;
    bool complete = true;
    for (ComponentClass cls : kComponentClasses) {
        const auto& collector = collectors[index_of(cls)];
        if (!collector) {
            sink.syntax_error(1, "matrix override must define all five classes (missing matrix." +
                                     std::string(class_code(cls)) + " section)");
            complete = false;
            continue;
        }
        for (const char* key : {"det_breaks", "ref_breaks", "grid"}) {
            const bool present = std::string_view(key) == "det_breaks" ? collector->det_breaks.has_value()
                                 : std::string_view(key) == "ref_breaks"
                                     ? collector->ref_breaks.has_value()
                                     : collector->grid.has_value();
            if (!present) {
                sink.syntax_error(collector->section_line,
                                  "matrix section for " + std::string(class_code(cls)) +
                                      " is missing key '" + key + "'");
                complete = false;
            }
        }
        if (!complete || !collector->det_breaks || !collector->ref_breaks || !collector->grid)
            continue;
        ClassRule& rule = matrix.rule(cls);
        rule.det_break1 = collector->det_breaks->second[0];
        rule.det_break2 = collector->det_breaks->second[1];
        rule.ref_break1 = collector->ref_breaks->second[0];
        rule.ref_break2 = collector->ref_breaks->second[1];
        rule.grid = collector->grid->second;
    }

    MatrixFileResult result;
    if (complete && !has_errors(sink.diagnostics)) {
        // Fail fast on bad configuration: reject invalid matrices at load.
        bool valid = true;
        for (ComponentClass cls : kComponentClasses) {
            const auto& collector = *collectors[index_of(cls)];
            const ClassRule& rule = matrix.rule(cls);
            if (rule.det_break1 < 1 || rule.det_break1 >= rule.det_break2) {
                sink.semantic_error(collector.det_breaks->first,
                                    "det breakpoints must satisfy 1 <= d1 < d2 for " +
                                        std::string(class_name(cls)));
                valid = false;
            }
            if (rule.ref_break1 < 0 || rule.ref_break1 >= rule.ref_break2) {
                sink.semantic_error(collector.ref_breaks->first,
                                    "ref breakpoints must satisfy 0 <= r1 < r2 for " +
                                        std::string(class_name(cls)));
                valid = false;
            }
            for (int i = 0; i < 3 && valid; ++i)
                for (int j = 0; j < 3; ++j) {
                    const auto level = index_of(rule.grid[i][j]);
                    if ((j > 0 && level < index_of(rule.grid[i][j - 1])) ||
                        (i > 0 && level < index_of(rule.grid[i - 1][j]))) {
                        sink.semantic_error(collector.grid->first,
                                            "grid not monotone for " +
                                                std::string(class_name(cls)));
                        valid = false;
                        break;
                    }
                }
        }
        if (valid)
            result.matrix = matrix;
    }
    result.diagnostics = std::move(sink.diagnostics);
    return result;
}

}  // namespace fpa
