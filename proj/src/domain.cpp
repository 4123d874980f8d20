#include "fpa/domain.hpp"

#include <numeric>
#include <stdexcept>

namespace fpa {

namespace {

constexpr std::array<std::string_view, kClassCount> kClassCodes = {
    "EI", "EO", "EQ", "ILF", "EIF",
};

constexpr std::array<std::string_view, kClassCount> kClassNames = {
    "EXTERNAL_INPUT",        "EXTERNAL_OUTPUT",         "EXTERNAL_QUERY",
    "INTERNAL_LOGICAL_FILE", "EXTERNAL_INTERFACE_FILE",
};

constexpr std::array<std::string_view, kClassCount> kClassDisplayNames = {
    "Input", "Output", "Online Query", "Logic File", "External Interface",
};

constexpr std::array<std::string_view, kClassCount> kClassCountsKeys = {
    "input", "output", "query", "file", "interface",
};

constexpr std::array<std::string_view, kLevelCount> kLevelCodes = {"low", "average", "high"};
constexpr std::array<std::string_view, kLevelCount> kLevelNames = {"LOW", "AVERAGE", "HIGH"};
constexpr std::array<std::string_view, kLevelCount> kLevelDisplayNames = {"Low", "Average", "High"};

// Subject rows of the 14-factor assessment form, by factor id.
constexpr std::array<std::string_view, kRcafFactorCount> kRcafSubjects = {
    "The level of recovery reliability complexity",
    "The level of data communication complexity",
    "The level of distributed processing complexity",
    "Level of the need for performance complexity",
    "The level of operating environment demand",
    "The level of developer knowledge needs",
    "The level of updating the master file complexity",
    "The level of installation complexity",
    "The level of input, output, online query and file application complexity",
    "The level of data processing complexity",
    "The improbability level of reuse code",
    "The level of customer organization variation",
    "The extent of possible changes",
    "Level of the ease of use demand",
};

}  // namespace

std::string_view class_code(ComponentClass cls) { return kClassCodes[index_of(cls)]; }
std::string_view class_name(ComponentClass cls) { return kClassNames[index_of(cls)]; }
std::string_view class_display_name(ComponentClass cls) { return kClassDisplayNames[index_of(cls)]; }
std::string_view class_counts_key(ComponentClass cls) { return kClassCountsKeys[index_of(cls)]; }

std::string_view level_code(ComplexityLevel lvl) { return kLevelCodes[index_of(lvl)]; }
std::string_view level_name(ComplexityLevel lvl) { return kLevelNames[index_of(lvl)]; }
std::string_view level_display_name(ComplexityLevel lvl) { return kLevelDisplayNames[index_of(lvl)]; }

std::optional<ComponentClass> class_from_code(std::string_view code) {
    for (ComponentClass cls : kComponentClasses)
        if (kClassCodes[index_of(cls)] == code)
            return cls;
    return std::nullopt;
}

std::optional<ComponentClass> class_from_counts_key(std::string_view key) {
    for (ComponentClass cls : kComponentClasses)
        if (kClassCountsKeys[index_of(cls)] == key)
            return cls;
    return std::nullopt;
}

std::optional<ComplexityLevel> level_from_code(std::string_view code) {
    for (ComplexityLevel lvl : kComplexityLevels)
        if (kLevelCodes[index_of(lvl)] == code)
            return lvl;
    return std::nullopt;
}

void WeightMatrix::set(ComponentClass cls, ComplexityLevel lvl, std::int64_t weight) {
    cells_[index_of(cls)][index_of(lvl)] = weight;
}

bool WeightMatrix::has(ComponentClass cls, ComplexityLevel lvl) const {
    return cells_[index_of(cls)][index_of(lvl)].has_value();
}

std::int64_t WeightMatrix::weight(ComponentClass cls, ComplexityLevel lvl) const {
    const auto& cell = cells_[index_of(cls)][index_of(lvl)];
    if (!cell)
        throw std::logic_error("weight matrix has no entry for " + std::string(class_name(cls)) +
                               "/" + std::string(level_name(lvl)));
    return *cell;
}

WeightMatrix default_weights() {
    WeightMatrix w;
    const std::array<std::array<std::int64_t, kLevelCount>, kClassCount> table = {{
        {3, 4, 6},    // Input
        {4, 5, 7},    // Output
        {3, 4, 6},    // Online Query
        {7, 10, 15},  // Logic File
        {5, 7, 10},   // External Interface
    }};
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels)
            w.set(cls, lvl, table[index_of(cls)][index_of(lvl)]);
    return w;
}

std::vector<std::string> validate_weights(const WeightMatrix& w) {
    std::vector<std::string> violations;
    for (ComponentClass cls : kComponentClasses) {
        bool complete = true;
        for (ComplexityLevel lvl : kComplexityLevels) {
            if (!w.has(cls, lvl)) {
                violations.push_back("missing entries: no weight for " +
                                     std::string(class_name(cls)) + "/" +
                                     std::string(level_name(lvl)));
                complete = false;
                continue;
            }
            if (w.weight(cls, lvl) < 1)
                violations.push_back("weight must be >= 1 for " + std::string(class_name(cls)) +
                                     "/" + std::string(level_name(lvl)));
        }
        if (complete) {
            const std::int64_t low = w.weight(cls, ComplexityLevel::Low);
            const std::int64_t avg = w.weight(cls, ComplexityLevel::Average);
            const std::int64_t high = w.weight(cls, ComplexityLevel::High);
            if (!(low <= avg && avg <= high))
                violations.push_back("row not monotone for " + std::string(class_name(cls)));
        }
    }
    return violations;
}

std::vector<std::string> validate_counts(const CountSheet& sheet) {
    std::vector<std::string> violations;
    for (ComponentClass cls : kComponentClasses)
        for (ComplexityLevel lvl : kComplexityLevels)
            if (sheet.count(cls, lvl) < 0)
                violations.push_back("count must be >= 0 for " + std::string(class_name(cls)) +
                                     "/" + std::string(level_name(lvl)));
    return violations;
}

std::vector<std::string> validate_item(const ItemRecord& item) {
    std::vector<std::string> violations;
    if (item.declared.has_value() == item.measured.has_value())
        violations.push_back("item '" + item.name +
                             "' must have exactly one of a declared level or det/refs measures");
    if (item.measured) {
        if (item.measured->det < 1)
            violations.push_back("det must be >= 1 for item '" + item.name + "'");
        if (item.measured->refs < 0)
            violations.push_back("refs must be >= 0 for item '" + item.name + "'");
    }
    return violations;
}

RcafSheet RcafSheet::itemized(const std::array<int, kRcafFactorCount>& ratings) {
    RcafSheet sheet;
    sheet.factors = ratings;
    return sheet;
}

RcafSheet RcafSheet::declared(int total) {
    RcafSheet sheet;
    sheet.declared_total = total;
    return sheet;
}

int RcafSheet::total() const {
    if (factors)
        return std::accumulate(factors->begin(), factors->end(), 0);
    if (declared_total)
        return *declared_total;
    throw std::logic_error("rcaf sheet has neither factors nor a declared total");
}

std::vector<std::string> validate_rcaf(const RcafSheet& sheet) {
    std::vector<std::string> violations;
    if (sheet.factors.has_value() == sheet.declared_total.has_value()) {
        violations.push_back(
            "rcaf sheet must have exactly one of itemized factors or a declared total");
        return violations;
    }
    if (sheet.factors) {
        for (int i = 0; i < kRcafFactorCount; ++i) {
            const int rating = (*sheet.factors)[static_cast<std::size_t>(i)];
            if (rating < 0 || rating > kRcafRatingMax)
                violations.push_back("rating out of range 0..5 (f" + std::to_string(i + 1) +
                                     " = " + std::to_string(rating) + ")");
        }
    } else {
        if (*sheet.declared_total < 0 || *sheet.declared_total > kRcafTotalMax)
            violations.push_back("declared total out of range 0..70 (total = " +
                                 std::to_string(*sheet.declared_total) + ")");
    }
    return violations;
}

std::string_view rcaf_factor_subject(int id) {
    if (id < 1 || id > kRcafFactorCount)
        throw std::out_of_range("rcaf factor id must be in 1..14, got " + std::to_string(id));
    return kRcafSubjects[static_cast<std::size_t>(id - 1)];
}

std::string format_centi(std::int64_t centi) {
    const bool negative = centi < 0;
    const std::int64_t abs = negative ? -centi : centi;
    const std::int64_t whole = abs / 100;
    const std::int64_t frac = abs % 100;
    std::string out = negative ? "-" : "";
    out += std::to_string(whole);
    out += '.';
    if (frac < 10)
        out += '0';
    out += std::to_string(frac);
    return out;
}

std::string format_centi_signed(std::int64_t centi) {
    if (centi > 0)
        return "+" + format_centi(centi);
    return format_centi(centi);
}

}  // namespace fpa
