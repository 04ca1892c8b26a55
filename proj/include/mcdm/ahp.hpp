#pragma once

#include "mcdm/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcdm {

// Column-normalized matrix: every column sums to 1.
struct NormalizedMatrix {
    std::vector<std::string> labels;
    std::vector<double> entries;

    std::size_t order() const { return labels.size(); }
    double at(std::size_t row, std::size_t col) const {
        return entries[row * labels.size() + col];
    }
};

// Priority weights; values are positive and sum to 1.
struct WeightVector {
    std::vector<std::string> labels;
    std::vector<double> values;
};

struct Decision {
    std::string label;
    double value;
};

NormalizedMatrix ahpNormalize(const PairwiseMatrix& matrix);

// Row means of the column-normalized matrix.
WeightVector ahpWeights(const PairwiseMatrix& matrix);

// Highest-weight criterion; ties resolve to the earliest label.
Decision ahpDecide(const WeightVector& weights);

// Principal-eigenvalue estimate: sum over columns of column-sum times
// weight. Exact for consistent reciprocal matrices (gives n there).
double lambdaMax(const PairwiseMatrix& matrix, const WeightVector& weights);

// Dominant eigenvalue by power iteration, for cross-checking the estimate.
double principalEigenvalue(const PairwiseMatrix& matrix);

enum class RiSource { Builtin, User };

struct RiEntry {
    double value;
    RiSource source;
};

// Random-index lookup by matrix order. Orders without a value raise
// RiUnavailableError at use sites; users may supply their own entries.
class RiTable {
public:
    static RiTable builtinDefaults();

    void set(std::size_t order, double value); // user-supplied
    std::optional<RiEntry> find(std::size_t order) const;

private:
    std::map<std::size_t, RiEntry> entries_;
};

struct ConsistencyReport {
    std::size_t n;
    double lambdaMax;
    double ci;
    std::optional<double> ri;
    std::optional<double> cr;
    bool acceptable;

    std::string toJson() const;
    std::string toText() const;
};

// CI = (lambda_max - n) / (n - 1), CR = CI / RI; acceptable iff
// CR <= crThreshold. When the table has no entry for the matrix order the
// verdict is still defined for CI <= 0 (CR would be <= 0 for any positive
// RI), so ri and cr stay empty and the matrix is acceptable; for CI > 0
// RiUnavailableError is thrown.
ConsistencyReport consistency(const PairwiseMatrix& matrix, const RiTable& riTable,
                              double crThreshold = 0.1);

} // namespace mcdm
