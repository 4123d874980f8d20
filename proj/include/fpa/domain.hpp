// Core value types for function point analysis: component classes,
// complexity levels, weight matrices, count sheets, RCAF sheets, and
// exact centi-FP results.

#ifndef FPA_DOMAIN_HPP
#define FPA_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fpa {

enum class ComponentClass {
    ExternalInput,
    ExternalOutput,
    ExternalQuery,
    InternalLogicalFile,
    ExternalInterfaceFile,
};

enum class ComplexityLevel {
    Low,
    Average,
    High,
};

inline constexpr std::size_t kClassCount = 5;
inline constexpr std::size_t kLevelCount = 3;

inline constexpr std::array<ComponentClass, kClassCount> kComponentClasses = {
    ComponentClass::ExternalInput,         ComponentClass::ExternalOutput,
    ComponentClass::ExternalQuery,         ComponentClass::InternalLogicalFile,
    ComponentClass::ExternalInterfaceFile,
};

inline constexpr std::array<ComplexityLevel, kLevelCount> kComplexityLevels = {
    ComplexityLevel::Low,
    ComplexityLevel::Average,
    ComplexityLevel::High,
};

constexpr std::size_t index_of(ComponentClass cls) { return static_cast<std::size_t>(cls); }
constexpr std::size_t index_of(ComplexityLevel lvl) { return static_cast<std::size_t>(lvl); }

// Canonical spellings. `class_code` is the terse form used by the file
// format and machine reports (EI/EO/EQ/ILF/EIF); `class_name` the
// ALL_CAPS tag used in violation messages; `class_display_name` the
// human table row label.
std::string_view class_code(ComponentClass cls);
std::string_view class_name(ComponentClass cls);
std::string_view class_display_name(ComponentClass cls);
std::string_view class_counts_key(ComponentClass cls);  // "input", "output", ...

std::string_view level_code(ComplexityLevel lvl);  // "low" / "average" / "high"
std::string_view level_name(ComplexityLevel lvl);  // "LOW" / "AVERAGE" / "HIGH"
std::string_view level_display_name(ComplexityLevel lvl);  // "Low" / "Average" / "High"

std::optional<ComponentClass> class_from_code(std::string_view code);
std::optional<ComponentClass> class_from_counts_key(std::string_view key);
std::optional<ComplexityLevel> level_from_code(std::string_view code);

// 5x3 table of per-component weighting factors. Cells start empty so
// incomplete matrices are representable; validate_weights reports the
// holes instead of a lookup blowing up unseen.
class WeightMatrix {
public:
    void set(ComponentClass cls, ComplexityLevel lvl, std::int64_t weight);
    bool has(ComponentClass cls, ComplexityLevel lvl) const;

    // Throws std::logic_error if the cell was never set.
    std::int64_t weight(ComponentClass cls, ComplexityLevel lvl) const;

    bool operator==(const WeightMatrix&) const = default;

private:
    std::array<std::array<std::optional<std::int64_t>, kLevelCount>, kClassCount> cells_{};
};

// The canonical weighting factors: Input 3/4/6, Output 4/5/7,
// Online Query 3/4/6, Logic File 7/10/15, External Interface 5/7/10.
WeightMatrix default_weights();

// Empty result means the matrix is valid. Violations name the class,
// level, and reason.
std::vector<std::string> validate_weights(const WeightMatrix& w);

// Per-class, per-level non-negative counts plus sheet metadata.
struct CountSheet {
    std::string name;
    std::string approach;
    std::array<std::array<std::int64_t, kLevelCount>, kClassCount> counts{};

    std::int64_t count(ComponentClass cls, ComplexityLevel lvl) const {
        return counts[index_of(cls)][index_of(lvl)];
    }
    std::int64_t& cell(ComponentClass cls, ComplexityLevel lvl) {
        return counts[index_of(cls)][index_of(lvl)];
    }

    bool operator==(const CountSheet&) const = default;
};

std::vector<std::string> validate_counts(const CountSheet& sheet);

// DET / reference measures for an item graded by the classifier rather
// than declared outright. refs counts referenced entity types for file
// classes and referenced logical files for transaction classes.
struct MeasuredBasis {
    std::int64_t det = 0;
    std::int64_t refs = 0;

    bool operator==(const MeasuredBasis&) const = default;
};

// One named functional item. Exactly one of `declared` / `measured`
// is set.
struct ItemRecord {
    std::string name;
    ComponentClass cls = ComponentClass::ExternalInput;
    std::optional<ComplexityLevel> declared;
    std::optional<MeasuredBasis> measured;

    bool operator==(const ItemRecord&) const = default;
};

std::vector<std::string> validate_item(const ItemRecord& item);

inline constexpr int kRcafFactorCount = 14;
inline constexpr int kRcafRatingMax = 5;
inline constexpr int kRcafTotalMax = 70;

// 14-factor complexity assessment. Either itemized ratings (f1..f14,
// each 0..5) or a declared total (0..70); published assessments often
// record only the total, so declared sheets are first-class input.
struct RcafSheet {
    std::optional<std::array<int, kRcafFactorCount>> factors;
    std::optional<int> declared_total;

    static RcafSheet itemized(const std::array<int, kRcafFactorCount>& ratings);
    static RcafSheet declared(int total);

    bool is_itemized() const { return factors.has_value(); }

    // Sum of ratings or the declared total. Requires a valid sheet.
    int total() const;

    bool operator==(const RcafSheet&) const = default;
};

std::vector<std::string> validate_rcaf(const RcafSheet& sheet);

// Full subject text for factor ids 1..14; throws std::out_of_range
// otherwise. Sheets and reports refer to factors by id so the file
// format stays terse.
std::string_view rcaf_factor_subject(int id);

// One cell of the weighted-count grid: points = count x weight.
struct CellPoints {
    std::int64_t count = 0;
    std::int64_t weight = 0;
    std::int64_t points = 0;

    bool operator==(const CellPoints&) const = default;
};

struct ClassPoints {
    std::array<CellPoints, kLevelCount> levels{};
    std::int64_t sum = 0;  // sum of the three per-level points

    bool operator==(const ClassPoints&) const = default;
};

struct CfpBreakdown {
    std::array<ClassPoints, kClassCount> classes{};
    std::int64_t cfp = 0;  // sum of the five class sums

    const CellPoints& cell(ComponentClass cls, ComplexityLevel lvl) const {
        return classes[index_of(cls)].levels[index_of(lvl)];
    }
    const ClassPoints& class_points(ComponentClass cls) const {
        return classes[index_of(cls)];
    }

    bool operator==(const CfpBreakdown&) const = default;
};

// A finished estimate. fp_centi is FP in exact integer hundredths:
// fp_centi = cfp * (65 + rcaf), no floating point anywhere.
struct FpResult {
    std::string name;
    std::string approach;
    CfpBreakdown breakdown;
    std::int64_t cfp = 0;
    int rcaf = 0;
    std::optional<std::array<int, kRcafFactorCount>> rcaf_factors;
    std::int64_t fp_centi = 0;

    bool operator==(const FpResult&) const = default;
};

// "17464" -> "174.64", "-50" -> "-0.50". Pure integer division and
// modulo; exactly two decimal digits.
std::string format_centi(std::int64_t centi);

// Like format_centi but positive values carry an explicit '+'; zero is
// plain "0.00".
std::string format_centi_signed(std::int64_t centi);

}  // namespace fpa

#endif  // FPA_DOMAIN_HPP
