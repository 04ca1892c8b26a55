#include "mcdm/corpus.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/matrix.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

using namespace mcdm;

namespace {

std::size_t indexOf(const std::vector<std::string>& labels, const std::string& name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == name) {
            return i;
        }
    }
    REQUIRE(false);
    return 0;
}

// Row minima are exact quotients of the small-integer ratings, so the
// comparisons below are bitwise.
const std::map<std::string, std::vector<double>>& frozenScores() {
    static const std::map<std::string, std::vector<double>> scores = {
        {"Risk",
         {1.0 / 3, 3.0 / 7, 1.0 / 3, 1.0 / 3, 1.0 / 9, 1.0 / 9, 1.0 / 9, 1.0 / 9,
          1.0 / 5, 3.0 / 5, 1.0 / 3, 1.0 / 7, 1.0 / 5, 3.0 / 7, 1.0 / 9}},
        {"Customer", {1.0 / 2, 3.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 3}},
        {"Organization",
         {1.0 / 3, 5.0 / 6, 1.0 / 3, 1.0 / 7, 1.0 / 3, 1.0 / 2, 1.0 / 3}},
        {"Policy", {1.0 / 4, 3.0 / 5, 1.0 / 7, 1.0 / 7, 1.0 / 2, 1.0 / 8, 1.0 / 8}},
        {"Process", {4.0 / 9, 1.0 / 5, 2.0 / 7, 1.0 / 4, 2.0 / 3, 1.0 / 2, 1.0 / 8}},
        {"Staff",
         {1.0 / 5, 1.0 / 3, 1.0 / 6, 1.0 / 4, 1.0 / 5, 1.0 / 3, 1.0 / 5, 2.0 / 7,
          4.0 / 7}},
        {"Tools",
         {1.0 / 4, 1.0 / 3, 1.0 / 8, 1.0 / 5, 1.0 / 7, 1.0 / 8, 2.0 / 9, 1.0 / 3,
          1.0 / 3, 1.0 / 6, 1.0 / 5, 1.0 / 5, 1.0 / 5, 1.0 / 6}},
        {"Vendors", {1.0 / 3, 2.0 / 3, 4.0 / 9, 1.0 / 3, 1.0 / 8, 1.0 / 3}},
    };
    return scores;
}

} // namespace

TEST_CASE("pairwise normalization divides by the larger of each pair") {
    PairwiseMatrix m;
    m.labels = {"A", "B", "C"};
    m.entries = {1, 5, 2, 5, 1, 8, 4, 2, 1};
    const FuzzyNormalizedMatrix norm = fuzzyNormalize(m);
    CHECK(norm.at(0, 1) == 1.0); // 5 vs 5: equal pairs normalize to 1 both ways
    CHECK(norm.at(1, 0) == 1.0);
    CHECK(norm.at(0, 2) == 0.5); // 2 vs 4
    CHECK(norm.at(2, 0) == 1.0);
    CHECK(norm.at(1, 2) == 1.0); // 8 vs 2
    CHECK(norm.at(2, 1) == 0.25);
}

TEST_CASE("every pair of normalized entries has maximum one") {
    for (const CorpusDataset& dataset : corpus()) {
        for (const PairwiseMatrix& m : {dataset.matrix, dataset.fuzzyMatrix()}) {
            const FuzzyNormalizedMatrix norm = fuzzyNormalize(m);
            const std::size_t n = norm.order();
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(std::max(norm.at(i, j), norm.at(j, i)) == 1.0);
                }
            }
        }
    }
}

TEST_CASE("scores of every embedded dataset equal their exact rationals") {
    for (const auto& [name, expected] : frozenScores()) {
        const CorpusDataset* dataset = findDataset(name);
        REQUIRE(dataset != nullptr);
        const FuzzyScoreVector scores =
            fuzzyScores(fuzzyNormalize(dataset->fuzzyMatrix()));
        REQUIRE(scores.values.size() == expected.size());
        CAPTURE(name);
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(scores.values[i] == expected[i]);
        }
    }
}

TEST_CASE("worksheet cell overrides change only the fuzzy path") {
    const CorpusDataset* customer = findDataset("Customer");
    REQUIRE(customer != nullptr);
    const std::size_t stf = indexOf(customer->matrix.labels, "STF");

    const FuzzyScoreVector raw = fuzzyScores(fuzzyNormalize(customer->matrix));
    CHECK(raw.values[stf] == 1.0);

    const FuzzyScoreVector adjusted =
        fuzzyScores(fuzzyNormalize(customer->fuzzyMatrix()));
    CHECK(adjusted.values[stf] == 0.125);
}

TEST_CASE("all-ones matrices score one everywhere") {
    PairwiseMatrix m;
    m.labels = {"A", "B", "C", "D"};
    m.entries.assign(16, 1.0);
    const FuzzyScoreVector scores = fuzzyScores(fuzzyNormalize(m));
    for (double v : scores.values) {
        CHECK(v == 1.0);
    }
}

TEST_CASE("scaling the whole matrix leaves normalization unchanged") {
    const CorpusDataset* staff = findDataset("Staff");
    REQUIRE(staff != nullptr);
    const FuzzyNormalizedMatrix base = fuzzyNormalize(staff->matrix);

    PairwiseMatrix scaled = staff->matrix;
    for (double& v : scaled.entries) {
        v *= 3.0; // small integers scale exactly
    }
    const FuzzyNormalizedMatrix after = fuzzyNormalize(scaled);
    REQUIRE(after.entries.size() == base.entries.size());
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        CHECK(after.entries[i] == base.entries[i]);
    }
}

TEST_CASE("decision picks the highest score and breaks ties to the earliest label") {
    FuzzyScoreVector tied{{"X", "Y", "Z"}, {0.5, 0.5, 0.25}};
    CHECK(fuzzyDecide(tied).label == "X");

    const CorpusDataset* vendors = findDataset("Vendors");
    REQUIRE(vendors != nullptr);
    const Decision d = fuzzyDecide(fuzzyScores(fuzzyNormalize(vendors->fuzzyMatrix())));
    CHECK(d.label == vendors->expectedFuzzyChoice);
    CHECK(d.label == "MMS");
    CHECK(d.value == 2.0 / 3.0);
}
