// Seeded random generators for valid domain values; every generated
// value satisfies the invariants its type promises.

#ifndef FPA_TESTS_GENERATORS_HPP
#define FPA_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fpa/classifier.hpp"
#include "fpa/domain.hpp"
#include "fpa/sheet_parser.hpp"

namespace gen {

struct Rng {
    std::mt19937 engine;

    explicit Rng(std::uint32_t seed) : engine(seed) {}

    int irange(int lo, int hi) {  // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine);
    }
    std::int64_t lrange(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
    }
    bool chance(int percent) { return irange(1, 100) <= percent; }
};

inline fpa::ComponentClass random_class(Rng& rng) {
    return fpa::kComponentClasses[static_cast<std::size_t>(rng.irange(0, 4))];
}

inline fpa::ComplexityLevel random_level(Rng& rng) {
    return fpa::kComplexityLevels[static_cast<std::size_t>(rng.irange(0, 2))];
}

// Stays inside the sheet format's representable set: no '#', no line
// breaks, no leading/trailing whitespace.
inline std::string random_name(Rng& rng) {
    if (rng.chance(10))
        return "";
    static constexpr char alphabet[] = "abcdefghijklmnopqrstuvwxyz";
    std::string name;
    const int words = rng.irange(1, 3);
    for (int w = 0; w < words; ++w) {
        if (w > 0)
            name += ' ';
        const int len = rng.irange(1, 8);
        for (int i = 0; i < len; ++i)
            name += alphabet[static_cast<std::size_t>(rng.irange(0, 25))];
    }
    return name;
}

inline fpa::WeightMatrix random_weights(Rng& rng) {
    fpa::WeightMatrix w;
    for (fpa::ComponentClass cls : fpa::kComponentClasses) {
        const std::int64_t low = rng.lrange(1, 9);
        const std::int64_t avg = low + rng.lrange(0, 4);
        const std::int64_t high = avg + rng.lrange(0, 4);
        w.set(cls, fpa::ComplexityLevel::Low, low);
        w.set(cls, fpa::ComplexityLevel::Average, avg);
        w.set(cls, fpa::ComplexityLevel::High, high);
    }
    return w;
}

inline fpa::CountSheet random_counts(Rng& rng) {
    fpa::CountSheet sheet;
    sheet.name = random_name(rng);
    sheet.approach = random_name(rng);
    for (fpa::ComponentClass cls : fpa::kComponentClasses)
        for (fpa::ComplexityLevel lvl : fpa::kComplexityLevels)
            sheet.cell(cls, lvl) = rng.lrange(0, 25);
    return sheet;
}

inline fpa::RcafSheet random_rcaf(Rng& rng) {
    if (rng.chance(50)) {
        std::array<int, fpa::kRcafFactorCount> ratings{};
        for (int& rating : ratings)
            rating = rng.irange(0, fpa::kRcafRatingMax);
        return fpa::RcafSheet::itemized(ratings);
    }
    return fpa::RcafSheet::declared(rng.irange(0, fpa::kRcafTotalMax));
}

inline std::vector<fpa::ItemRecord> random_items(Rng& rng) {
    std::vector<fpa::ItemRecord> items;
    const int n = rng.irange(0, 15);
    for (int i = 0; i < n; ++i) {
        fpa::ItemRecord item;
        item.name = "item " + std::to_string(i) + " " + std::string(1, static_cast<char>('a' + rng.irange(0, 25)));
        item.cls = random_class(rng);
        if (rng.chance(60))
            item.declared = random_level(rng);
        else
            item.measured = fpa::MeasuredBasis{rng.lrange(1, 60), rng.lrange(0, 8)};
        items.push_back(std::move(item));
    }
    return items;
}

inline fpa::SheetDocument random_document(Rng& rng) {
    fpa::SheetDocument doc;
    doc.meta.name = random_name(rng);
    doc.meta.approach = random_name(rng);
    if (rng.chance(50)) {
        fpa::CountSheet counts = random_counts(rng);
        counts.name = doc.meta.name;
        counts.approach = doc.meta.approach;
        doc.counts = std::move(counts);
    } else {
        doc.items = random_items(rng);
    }
    doc.rcaf = random_rcaf(rng);
    if (rng.chance(25))
        doc.weights = random_weights(rng);
    return doc;
}

inline fpa::ClassificationMatrix random_classification_matrix(Rng& rng) {
    fpa::ClassificationMatrix m;
    for (fpa::ComponentClass cls : fpa::kComponentClasses) {
        fpa::ClassRule& rule = m.rule(cls);
        rule.det_break1 = rng.lrange(1, 20);
        rule.det_break2 = rule.det_break1 + rng.lrange(1, 30);
        rule.ref_break1 = rng.lrange(0, 3);
        rule.ref_break2 = rule.ref_break1 + rng.lrange(1, 5);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                std::size_t floor = 0;
                if (i > 0)
                    floor = std::max(floor, fpa::index_of(rule.grid[i - 1][j]));
                if (j > 0)
                    floor = std::max(floor, fpa::index_of(rule.grid[i][j - 1]));
                rule.grid[i][j] = fpa::kComplexityLevels[static_cast<std::size_t>(
                    rng.irange(static_cast<int>(floor), 2))];
            }
    }
    return m;
}

}  // namespace gen

#endif  // FPA_TESTS_GENERATORS_HPP
