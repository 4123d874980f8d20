#include "fpa/report.hpp"

#include <json.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace fpa {

namespace {

using json = nlohmann::ordered_json;

enum class Align { Left, Right };

// Plain +-|- box table with per-column alignment and auto widths.
class AsciiTable {
public:
    explicit AsciiTable(std::vector<Align> aligns) : aligns_(std::move(aligns)) {}

    void add_row(std::vector<std::string> cells) {
        rows_.push_back({false, std::move(cells)});
    }
    void add_rule() { rows_.push_back({true, {}}); }

    std::string to_string() const {
        std::vector<std::size_t> widths(aligns_.size(), 0);
        for (const Row& row : rows_)
            if (!row.rule)
                for (std::size_t i = 0; i < row.cells.size(); ++i)
                    widths[i] = std::max(widths[i], row.cells[i].size());

        std::string out;
        for (const Row& row : rows_) {
            if (row.rule) {
                out += '+';
                for (const std::size_t w : widths) {
                    out.append(w + 2, '-');
                    out += '+';
                }
            } else {
                out += '|';
                for (std::size_t i = 0; i < widths.size(); ++i) {
                    const std::string& cell = i < row.cells.size() ? row.cells[i] : empty_;
                    const std::size_t pad = widths[i] - cell.size();
                    out += ' ';
                    if (aligns_[i] == Align::Right)
                        out.append(pad, ' ');
                    out += cell;
                    if (aligns_[i] == Align::Left)
                        out.append(pad, ' ');
                    out += " |";
                }
            }
            out += '\n';
        }
        return out;
    }

private:
    struct Row {
        bool rule = false;
        std::vector<std::string> cells;
    };

    std::vector<Align> aligns_;
    std::vector<Row> rows_;
    std::string empty_;
};

std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"\n\r") == std::string_view::npos)
        return std::string(value);
    std::string quoted = "\"";
    for (const char c : value) {
        quoted += c;
        if (c == '"')
            quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            line += ',';
        line += csv_field(fields[i]);
    }
    line += '\n';
    return line;
}

std::string signed_int(std::int64_t value) {
    return value > 0 ? "+" + std::to_string(value) : std::to_string(value);
}

std::string title_lines(const FpResult& r) {
    std::string out;
    if (!r.name.empty())
        out += r.name + "\n";
    if (!r.approach.empty())
        out += "Approach: " + r.approach + "\n";
    if (!out.empty())
        out += "\n";
    return out;
}

std::string result_table(const FpResult& r) {
    std::vector<Align> aligns(11, Align::Right);
    aligns[0] = Align::Left;
    AsciiTable table(std::move(aligns));
    table.add_rule();
    table.add_row({"", "Low", "", "", "Average", "", "", "High", "", "", ""});
    table.add_row({"Component", "Count", "Wt", "Pts", "Count", "Wt", "Pts", "Count", "Wt", "Pts",
                   "Sum of CFP"});
    table.add_rule();
    for (ComponentClass cls : kComponentClasses) {
        const ClassPoints& row = r.breakdown.class_points(cls);
        std::vector<std::string> cells;
        cells.emplace_back(class_display_name(cls));
        for (ComplexityLevel lvl : kComplexityLevels) {
            const CellPoints& cell = row.levels[index_of(lvl)];
            cells.push_back(std::to_string(cell.count));
            cells.push_back(std::to_string(cell.weight));
            cells.push_back(std::to_string(cell.points));
        }
        cells.push_back(std::to_string(row.sum));
        table.add_row(std::move(cells));
    }
    table.add_rule();
    table.add_row({"Sum of CFP", "", "", "", "", "", "", "", "", "", std::to_string(r.cfp)});
    table.add_rule();

    std::string out = title_lines(r);
    out += table.to_string();
    if (r.rcaf_factors) {
        out += "RCAF factors:\n";
        for (int i = 0; i < kRcafFactorCount; ++i)
            out += "  f" + std::to_string(i + 1) + " = " +
                   std::to_string((*r.rcaf_factors)[static_cast<std::size_t>(i)]) + "  " +
                   std::string(rcaf_factor_subject(i + 1)) + "\n";
    }
    out += "RCAF = " + std::to_string(r.rcaf) + "\n";
    out += "FP = " + format_centi(r.fp_centi) + "\n";
    return out;
}

std::string result_csv(const FpResult& r) {
    std::string out = "class,level,count,weight,points\n";
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels) {
            const CellPoints& cell = r.breakdown.cell(cls, lvl);
            out += csv_line({std::string(class_code(cls)), std::string(level_code(lvl)),
                             std::to_string(cell.count), std::to_string(cell.weight),
                             std::to_string(cell.points)});
        }
    out += csv_line({"CFP", "", "", "", std::to_string(r.cfp)});
    out += csv_line({"RCAF", "", "", "", std::to_string(r.rcaf)});
    out += csv_line({"FP", "", "", "", format_centi(r.fp_centi)});
    return out;
}

std::string result_json(const FpResult& r) {
    json j;
    j["name"] = r.name;
    j["approach"] = r.approach;
    j["cfp"] = r.cfp;
    j["rcaf"] = r.rcaf;
    j["fp"] = format_centi(r.fp_centi);
    json breakdown = json::array();
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels) {
            const CellPoints& cell = r.breakdown.cell(cls, lvl);
            json entry;
            entry["class"] = std::string(class_code(cls));
            entry["level"] = std::string(level_code(lvl));
            entry["count"] = cell.count;
            entry["weight"] = cell.weight;
            entry["points"] = cell.points;
            breakdown.push_back(std::move(entry));
        }
    j["breakdown"] = std::move(breakdown);
    return j.dump(2) + "\n";
}

std::string side_name(const FpResult& r, const char* fallback) {
    return r.name.empty() ? fallback : r.name;
}

std::string comparison_table(const ComparisonReport& c) {
    AsciiTable table({Align::Left, Align::Right, Align::Right, Align::Right});
    table.add_rule();
    table.add_row({"Metric", side_name(c.left, "left"), side_name(c.right, "right"), "Delta"});
    table.add_rule();
    table.add_row({"CFP", std::to_string(c.left.cfp), std::to_string(c.right.cfp),
                   signed_int(c.cfp_delta)});
    table.add_row({"RCAF", std::to_string(c.left.rcaf), std::to_string(c.right.rcaf),
                   signed_int(c.rcaf_delta)});
    table.add_row({"FP", format_centi(c.left.fp_centi), format_centi(c.right.fp_centi),
                   format_centi_signed(c.fp_centi_delta)});
    table.add_rule();
    return table.to_string();
}

std::string comparison_csv(const ComparisonReport& c) {
    std::string out =
        "left,right,left_cfp,right_cfp,cfp_delta,left_rcaf,right_rcaf,rcaf_delta,left_fp,"
        "right_fp,fp_delta\n";
    out += csv_line({side_name(c.left, "left"), side_name(c.right, "right"),
                     std::to_string(c.left.cfp), std::to_string(c.right.cfp),
                     signed_int(c.cfp_delta), std::to_string(c.left.rcaf),
                     std::to_string(c.right.rcaf), signed_int(c.rcaf_delta),
                     format_centi(c.left.fp_centi), format_centi(c.right.fp_centi),
                     format_centi_signed(c.fp_centi_delta)});
    return out;
}

json result_summary_json(const FpResult& r) {
    json j;
    j["name"] = r.name;
    j["approach"] = r.approach;
    j["cfp"] = r.cfp;
    j["rcaf"] = r.rcaf;
    j["fp"] = format_centi(r.fp_centi);
    return j;
}

std::string comparison_json(const ComparisonReport& c) {
    json j;
    j["left"] = result_summary_json(c.left);
    j["right"] = result_summary_json(c.right);
    json delta;
    delta["cfp"] = c.cfp_delta;
    delta["rcaf"] = c.rcaf_delta;
    delta["fp"] = format_centi_signed(c.fp_centi_delta);
    j["delta"] = std::move(delta);
    return j.dump(2) + "\n";
}

std::string sensitivity_table(const SensitivityReport& s) {
    std::string out = title_lines(s.base);
    out += "Base: CFP = " + std::to_string(s.base.cfp) + ", RCAF = " +
           std::to_string(s.base.rcaf) + ", FP = " + format_centi(s.base.fp_centi) + "\n";
    out += "FP gain per RCAF point: " + format_centi(s.per_rcaf_point_centi) + "\n";
    out += "Marginal FP per added item:\n";
    AsciiTable table({Align::Left, Align::Right, Align::Right, Align::Right});
    table.add_rule();
    table.add_row({"Component", "Low", "Average", "High"});
    table.add_rule();
    for (ComponentClass cls : kComponentClasses) {
        std::vector<std::string> cells;
        cells.emplace_back(class_display_name(cls));
        for (ComplexityLevel lvl : kComplexityLevels)
            cells.push_back(format_centi(s.marginal(cls, lvl)));
        table.add_row(std::move(cells));
    }
    table.add_rule();
    out += table.to_string();
    return out;
}

std::string sensitivity_csv(const SensitivityReport& s) {
    std::string out = "class,level,marginal_fp\n";
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels)
            out += csv_line({std::string(class_code(cls)), std::string(level_code(lvl)),
                             format_centi(s.marginal(cls, lvl))});
    out += csv_line({"PER_RCAF_POINT", "", format_centi(s.per_rcaf_point_centi)});
    return out;
}

std::string sensitivity_json(const SensitivityReport& s) {
    json j = result_summary_json(s.base);
    j["per_rcaf_point"] = format_centi(s.per_rcaf_point_centi);
    json marginals = json::array();
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels) {
            json entry;
            entry["class"] = std::string(class_code(cls));
            entry["level"] = std::string(level_code(lvl));
            entry["fp"] = format_centi(s.marginal(cls, lvl));
            marginals.push_back(std::move(entry));
        }
    j["marginals"] = std::move(marginals);
    return j.dump(2) + "\n";
}

}  // namespace

std::optional<ReportFormat> format_from_name(std::string_view name) {
    if (name == "table")
        return ReportFormat::Table;
    if (name == "csv")
        return ReportFormat::Csv;
    if (name == "json")
        return ReportFormat::Json;
    return std::nullopt;
}

std::string render_result(const FpResult& result, ReportFormat fmt) {
    switch (fmt) {
    case ReportFormat::Table:
        return result_table(result);
    case ReportFormat::Csv:
        return result_csv(result);
    case ReportFormat::Json:
        return result_json(result);
    }
    return {};
}

std::string render_comparison(const ComparisonReport& report, ReportFormat fmt) {
    switch (fmt) {
    case ReportFormat::Table:
        return comparison_table(report);
    case ReportFormat::Csv:
        return comparison_csv(report);
    case ReportFormat::Json:
        return comparison_json(report);
    }
    return {};
}

std::string render_sensitivity(const SensitivityReport& report, ReportFormat fmt) {
    switch (fmt) {
    case ReportFormat::Table:
        return sensitivity_table(report);
    case ReportFormat::Csv:
        return sensitivity_csv(report);
    case ReportFormat::Json:
        return sensitivity_json(report);
    }
    return {};
}

}  // namespace fpa
