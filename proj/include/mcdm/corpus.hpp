#pragma once

#include "mcdm/matrix.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mcdm {

// Cell override the source worksheets applied before the fuzzy step only;
// the AHP path always uses the raw matrix.
struct FuzzySheetCell {
    std::string row;
    std::string col;
    double value;
};

struct ExpectedConsistency {
    double lambdaMax;
    double ci;
    double ri;
    double cr;
};

// One embedded dataset together with its published results.
struct CorpusDataset {
    std::string name;
    PairwiseMatrix matrix;
    std::vector<FuzzySheetCell> fuzzySheetCells;
    std::vector<double> expectedAhp;           // published weights (3 dp)
    std::vector<double> expectedFuzzy;         // published scores (2-3 dp)
    std::string expectedAhpChoice;             // published winning labels; these
    std::string expectedFuzzyChoice;           //   disambiguate rounded-column ties
    ExpectedConsistency expectedConsistency;   // published values (2 dp)
    std::array<int, 6> expectedTrendRow;       // published transition counts

    PairwiseMatrix fuzzyMatrix() const; // matrix with sheet cells applied
};

const std::vector<CorpusDataset>& corpus();

// Case-insensitive lookup; nullptr when absent.
const CorpusDataset* findDataset(std::string_view name);

// Published cross-dataset results: the decision-series membership and
// transition row, the pooled category percentages, and the three direction
// aggregates.
struct ExpectedSummary {
    std::vector<std::string> decisionSeriesDatasets;
    std::array<int, 6> decisionTrendRow;
    std::array<double, 6> pooledPercentages;
    double sameDirectionPct;
    double reverseDirectionPct;
    double oneUnchangedPct;
};

const ExpectedSummary& expectedSummary();

struct ToleranceConfig {
    double weights = 0.005;     // per-weight absolute delta
    double scores = 0.005;      // per-score absolute delta
    double lambda = 0.10;       // lambda_max absolute delta
    double consistency = 0.02;  // CI and CR absolute delta
    double percent = 0.02;      // pooled percentage absolute delta
};

struct RegressionCheck {
    std::string dataset; // "summary" for cross-dataset checks
    std::string name;
    bool pass;
    std::string detail;  // observed vs expected
};

struct RegressionReport {
    std::vector<RegressionCheck> checks;

    bool pass() const;
    std::size_t failureCount() const;
    std::string toJson() const;
    std::string toText() const;
};

// Recomputes every dataset and compares against the published results.
RegressionReport runRegression(const ToleranceConfig& tolerances = {});

// Writes <name>.csv and <name>.expected.json per dataset into `directory`
// (created if needed).
void exportCorpus(const std::string& directory);

} // namespace mcdm
