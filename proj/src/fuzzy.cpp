#include "mcdm/fuzzy.hpp"

#include "mcdm/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mcdm {

FuzzyNormalizedMatrix fuzzyNormalize(const PairwiseMatrix& matrix) {
    const std::size_t n = matrix.order();
    if (n == 0 || matrix.entries.size() != n * n) {
        throw McdmError("matrix is not well formed (run validate for details)");
    }
    for (double v : matrix.entries) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw McdmError("matrix entries must be positive and finite");
        }
    }
    FuzzyNormalizedMatrix out{matrix.labels, std::vector<double>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double larger = std::max(matrix.at(i, j), matrix.at(j, i));
            out.entries[i * n + j] = matrix.at(i, j) / larger;
        }
    }
    return out;
}

FuzzyScoreVector fuzzyScores(const FuzzyNormalizedMatrix& normalized) {
    const std::size_t n = normalized.order();
    if (n == 0 || normalized.entries.size() != n * n) {
        throw McdmError("normalized matrix is not well formed");
    }
    FuzzyScoreVector scores{normalized.labels, std::vector<double>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        double low = normalized.at(i, 0);
        for (std::size_t j = 1; j < n; ++j) {
            low = std::min(low, normalized.at(i, j));
        }
        scores.values[i] = low;
    }
    return scores;
}

Decision fuzzyDecide(const FuzzyScoreVector& scores) {
    if (scores.values.empty()) {
        throw McdmError("nothing to decide over");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.values.size(); ++i) {
        if (scores.values[i] > scores.values[best]) {
            best = i;
        }
    }
    return {scores.labels[best], scores.values[best]};
}

} // namespace mcdm
