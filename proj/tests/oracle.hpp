// Independent reference for the weighted summation: a literal double
// loop over the grid, kept apart from the engine's breakdown path.

#ifndef FPA_TESTS_ORACLE_HPP
#define FPA_TESTS_ORACLE_HPP

#include <cstdint>

#include "fpa/domain.hpp"

namespace testutil {

inline std::int64_t naive_cfp_oracle(const fpa::CountSheet& sheet, const fpa::WeightMatrix& w) {
    std::int64_t total = 0;
    for (std::size_t c = 0; c < fpa::kClassCount; ++c)
        for (std::size_t l = 0; l < fpa::kLevelCount; ++l)
            total += sheet.counts[c][l] *
                     w.weight(fpa::kComponentClasses[c], fpa::kComplexityLevels[l]);
    return total;
}

}  // namespace testutil

#endif  // FPA_TESTS_ORACLE_HPP
