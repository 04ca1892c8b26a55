#pragma once

#include "mcdm/ahp.hpp"
#include "mcdm/matrix.hpp"

namespace mcdm {

// Pairwise max-min normalization: entry(i,j) = a(i,j) / max(a(i,j), a(j,i)),
// so max(entry(i,j), entry(j,i)) == 1 for every pair.
struct FuzzyNormalizedMatrix {
    std::vector<std::string> labels;
    std::vector<double> entries;

    std::size_t order() const { return labels.size(); }
    double at(std::size_t row, std::size_t col) const {
        return entries[row * labels.size() + col];
    }
};

// Row minima of the normalized matrix; values lie in (0, 1].
struct FuzzyScoreVector {
    std::vector<std::string> labels;
    std::vector<double> values;
};

FuzzyNormalizedMatrix fuzzyNormalize(const PairwiseMatrix& matrix);

FuzzyScoreVector fuzzyScores(const FuzzyNormalizedMatrix& normalized);

// Highest-score criterion; ties resolve to the earliest label.
Decision fuzzyDecide(const FuzzyScoreVector& scores);

} // namespace mcdm
