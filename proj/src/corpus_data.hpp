#pragma once

#include "mcdm/corpus.hpp"

#include <array>
#include <string>
#include <vector>

namespace mcdm::detail {

struct RawDataset {
    std::string name;
    std::vector<std::string> labels;
    std::vector<double> entries;
    std::vector<FuzzySheetCell> cells;
    std::vector<double> expectedAhp;
    std::vector<double> expectedFuzzy;
    std::string ahpChoice;
    std::string fuzzyChoice;
    std::array<double, 4> consistency; // lambda_max, ci, ri, cr
    std::array<int, 6> trendRow;
};

const std::vector<RawDataset>& rawCorpus();
const ExpectedSummary& rawSummary();

} // namespace mcdm::detail
