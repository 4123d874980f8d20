// Grades measured items into low/average/high from DET and reference
// counts via a per-class threshold matrix, and aggregates item lists
// into count sheets.

#ifndef FPA_CLASSIFIER_HPP
#define FPA_CLASSIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpa/diagnostics.hpp"
#include "fpa/domain.hpp"

namespace fpa {

// Two DET breakpoints and two reference-count breakpoints split the
// measures into three bands each; the grid maps (ref band, det band)
// to a level. Band i covers values <= break_i, band 2 the rest.
struct ClassRule {
    std::int64_t det_break1 = 0;
    std::int64_t det_break2 = 0;
    std::int64_t ref_break1 = 0;
    std::int64_t ref_break2 = 0;
    std::array<std::array<ComplexityLevel, 3>, 3> grid{};  // [ref_band][det_band]

    bool operator==(const ClassRule&) const = default;
};

struct ClassificationMatrix {
    std::array<ClassRule, kClassCount> rules{};

    const ClassRule& rule(ComponentClass cls) const { return rules[index_of(cls)]; }
    ClassRule& rule(ComponentClass cls) { return rules[index_of(cls)]; }

    bool operator==(const ClassificationMatrix&) const = default;
};

// Industry-conventional default thresholds (not from any single
// source; overridable via a matrix file):
//   ILF/EIF  det 1-19 / 20-50 / 51+   refs 1 / 2-5 / 6+
//   EI       det 1-4  / 5-15  / 16+   refs 0-1 / 2 / 3+
//   EO/EQ    det 1-5  / 6-19  / 20+   refs 0-1 / 2-3 / 4+
// with grid low/low/avg, low/avg/high, avg/high/high by rising bands.
ClassificationMatrix default_classification_matrix();

// Empty result means valid: breakpoints strictly increasing and the
// grid monotone along both axes.
std::vector<std::string> validate_classification_matrix(const ClassificationMatrix& m);

// Grid lookup for a measured item. Throws std::invalid_argument on a
// declared-level item: classification not applicable.
ComplexityLevel classify(const ItemRecord& item, const ClassificationMatrix& m);

// Each item contributes exactly one count to (its class, its level);
// declared levels pass through untouched, measured ones are
// classified. Throws std::invalid_argument on duplicate (class, name)
// pairs or invalid items.
CountSheet aggregate_items(std::span<const ItemRecord> items, const ClassificationMatrix& m,
                           std::string name = "", std::string approach = "");

struct MatrixFileResult {
    std::optional<ClassificationMatrix> matrix;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// Matrix override file: five sections [matrix.ei] .. [matrix.eif],
// each with `det_breaks = d1 d2`, `ref_breaks = r1 r2` and
// `grid = l l a / l a h / a h h` (rows by ref band, cells by det
// band). All five classes required. Invalid matrices are rejected at
// load time.
MatrixFileResult parse_matrix_file(std::string_view text);

}  // namespace fpa

#endif  // FPA_CLASSIFIER_HPP
