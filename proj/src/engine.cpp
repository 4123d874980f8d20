#include "fpa/engine.hpp"

#include <stdexcept>

namespace fpa {

namespace {

const WeightMatrix& effective_weights(const SheetDocument& doc, const WeightMatrix& w) {
    return doc.weights ? *doc.weights : w;
}

void require_valid_weights(const WeightMatrix& w) {
    if (const auto violations = validate_weights(w); !violations.empty())
        throw std::invalid_argument("invalid weight matrix: " + violations.front());
}

}  // namespace

CfpBreakdown compute_cfp(const CountSheet& sheet, const WeightMatrix& w) {
    CfpBreakdown breakdown;
    for (ComponentClass cls : kComponentClasses) {
        ClassPoints& row = breakdown.classes[index_of(cls)];
        for (ComplexityLevel lvl : kComplexityLevels) {
            CellPoints& cell = row.levels[index_of(lvl)];
            cell.count = sheet.count(cls, lvl);
            cell.weight = w.weight(cls, lvl);
            cell.points = cell.count * cell.weight;
            row.sum += cell.points;
        }
        breakdown.cfp += row.sum;
    }
    return breakdown;
}

int compute_rcaf(const RcafSheet& sheet) {
    if (const auto violations = validate_rcaf(sheet); !violations.empty())
        throw std::invalid_argument("invalid rcaf sheet: " + violations.front());
    return sheet.total();
}

FpResult compute_fp(std::int64_t cfp, int rcaf) {
    if (cfp < 0)
        throw std::invalid_argument("cfp must be non-negative, got " + std::to_string(cfp));
    if (rcaf < 0 || rcaf > kRcafTotalMax)
        throw std::invalid_argument("rcaf out of range 0..70, got " + std::to_string(rcaf));
    FpResult result;
    result.cfp = cfp;
    result.rcaf = rcaf;
    result.fp_centi = cfp * (65 + rcaf);
    return result;
}

FpResult evaluate_document(const SheetDocument& doc, const WeightMatrix& w,
                           const ClassificationMatrix& m) {
    if (doc.counts.has_value() == doc.items.has_value())
        throw std::invalid_argument("document must have exactly one of counts or items");
    const WeightMatrix& weights = effective_weights(doc, w);
    require_valid_weights(weights);

    const CountSheet sheet =
        doc.counts ? *doc.counts : aggregate_items(*doc.items, m, doc.meta.name, doc.meta.approach);
    if (const auto violations = validate_counts(sheet); !violations.empty())
        throw std::invalid_argument("invalid count sheet: " + violations.front());

    const CfpBreakdown breakdown = compute_cfp(sheet, weights);
    FpResult result = compute_fp(breakdown.cfp, compute_rcaf(doc.rcaf));
    result.name = doc.meta.name;
    result.approach = doc.meta.approach;
    result.breakdown = breakdown;
    result.rcaf_factors = doc.rcaf.factors;
    return result;
}

ComparisonReport compare(const FpResult& left, const FpResult& right) {
    ComparisonReport report;
    report.left = left;
    report.right = right;
    report.cfp_delta = right.cfp - left.cfp;
    report.rcaf_delta = right.rcaf - left.rcaf;
    report.fp_centi_delta = right.fp_centi - left.fp_centi;
    return report;
}

SensitivityReport sensitivity(const SheetDocument& doc, const WeightMatrix& w,
                              const ClassificationMatrix& m) {
    SensitivityReport report;
    report.base = evaluate_document(doc, w, m);
    report.per_rcaf_point_centi = report.base.cfp;
    const WeightMatrix& weights = effective_weights(doc, w);
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels)
            report.marginal_centi[index_of(cls)][index_of(lvl)] =
                weights.weight(cls, lvl) * (65 + report.base.rcaf);
    return report;
}

}  // namespace fpa
