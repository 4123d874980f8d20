// The three-step computation: weighted crude function points, the
// 14-factor adjustment total, and FP = CFP x (0.65 + 0.01 x RCAF),
// carried out entirely in integer hundredths.

#ifndef FPA_ENGINE_HPP
#define FPA_ENGINE_HPP

#include <cstdint>

#include "fpa/classifier.hpp"
#include "fpa/domain.hpp"
#include "fpa/sheet_parser.hpp"

namespace fpa {

// point(class, level) = count x weight; class sum = the three points;
// cfp = the five class sums.
CfpBreakdown compute_cfp(const CountSheet& sheet, const WeightMatrix& w);

// Sum of the 14 ratings, or the declared total. Throws
// std::invalid_argument on an invalid sheet.
int compute_rcaf(const RcafSheet& sheet);

// fp_centi = cfp * (65 + rcaf), exact. Throws std::invalid_argument on
// cfp < 0 or rcaf outside 0..70. The breakdown of the returned result
// is empty; evaluate_document fills it.
FpResult compute_fp(std::int64_t cfp, int rcaf);

// Full pipeline: classify/aggregate items when itemized, then
// compute_cfp -> compute_rcaf -> compute_fp. A [weights] block in the
// document takes precedence over `w`.
FpResult evaluate_document(const SheetDocument& doc,
                           const WeightMatrix& w = default_weights(),
                           const ClassificationMatrix& m = default_classification_matrix());

// Deltas are right minus left.
struct ComparisonReport {
    FpResult left;
    FpResult right;
    std::int64_t cfp_delta = 0;
    int rcaf_delta = 0;
    std::int64_t fp_centi_delta = 0;

    bool operator==(const ComparisonReport&) const = default;
};

ComparisonReport compare(const FpResult& left, const FpResult& right);

// What moves the estimate: one extra RCAF point adds exactly cfp
// centi-FP; one extra counted item adds weight x (65 + rcaf).
struct SensitivityReport {
    FpResult base;
    std::int64_t per_rcaf_point_centi = 0;
    std::array<std::array<std::int64_t, kLevelCount>, kClassCount> marginal_centi{};

    std::int64_t marginal(ComponentClass cls, ComplexityLevel lvl) const {
        return marginal_centi[index_of(cls)][index_of(lvl)];
    }

    bool operator==(const SensitivityReport&) const = default;
};

SensitivityReport sensitivity(const SheetDocument& doc,
                              const WeightMatrix& w = default_weights(),
                              const ClassificationMatrix& m = default_classification_matrix());

}  // namespace fpa

#endif  // FPA_ENGINE_HPP
