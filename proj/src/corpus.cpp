#include "mcdm/corpus.hpp"

#include "corpus_data.hpp"
#include "mcdm/ahp.hpp"
#include "mcdm/errors.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/numeric.hpp"
#include "mcdm/trend.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <json.hpp>
#include <sstream>

namespace mcdm {

namespace {

// Tolerances describe decimal bands; the slack only absorbs binary
// representation error at the band edge (e.g. published 0.38 vs 0.375).
bool withinTol(double delta, double tolerance) {
    return delta <= tolerance + 1e-12;
}

std::string lowercase(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::size_t labelIndex(const std::vector<std::string>& labels,
                       const std::string& name) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) {
        throw McdmError("label \"" + name + "\" is not in the dataset");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

std::string joinCounts(const std::array<int, 6>& row, int bothUnchanged = 0) {
    std::string out;
    for (int c : row) {
        if (!out.empty()) {
            out += ",";
        }
        out += std::to_string(c);
    }
    if (bothUnchanged > 0) {
        out += " (+" + std::to_string(bothUnchanged) + " both_unchanged)";
    }
    return out;
}

} // namespace

PairwiseMatrix CorpusDataset::fuzzyMatrix() const {
    PairwiseMatrix out = matrix;
    for (const auto& cell : fuzzySheetCells) {
        auto rowIt = std::find(out.labels.begin(), out.labels.end(), cell.row);
        auto colIt = std::find(out.labels.begin(), out.labels.end(), cell.col);
        if (rowIt == out.labels.end() || colIt == out.labels.end()) {
            throw McdmError("dataset \"" + name + "\" has a sheet cell (" + cell.row +
                            ", " + cell.col + ") outside the matrix");
        }
        out.at(static_cast<std::size_t>(rowIt - out.labels.begin()),
               static_cast<std::size_t>(colIt - out.labels.begin())) = cell.value;
    }
    return out;
}

const std::vector<CorpusDataset>& corpus() {
    static const std::vector<CorpusDataset> datasets = [] {
        std::vector<CorpusDataset> out;
        for (const auto& raw : detail::rawCorpus()) {
            CorpusDataset d;
            d.name = raw.name;
            d.matrix = {raw.labels, raw.entries};
            d.fuzzySheetCells = raw.cells;
            d.expectedAhp = raw.expectedAhp;
            d.expectedFuzzy = raw.expectedFuzzy;
            d.expectedAhpChoice = raw.ahpChoice;
            d.expectedFuzzyChoice = raw.fuzzyChoice;
            d.expectedConsistency = {raw.consistency[0], raw.consistency[1],
                                     raw.consistency[2], raw.consistency[3]};
            d.expectedTrendRow = raw.trendRow;
            out.push_back(std::move(d));
        }
        return out;
    }();
    return datasets;
}

const CorpusDataset* findDataset(std::string_view name) {
    const std::string wanted = lowercase(name);
    for (const auto& dataset : corpus()) {
        if (lowercase(dataset.name) == wanted) {
            return &dataset;
        }
    }
    return nullptr;
}

const ExpectedSummary& expectedSummary() { return detail::rawSummary(); }

bool RegressionReport::pass() const { return failureCount() == 0; }

std::size_t RegressionReport::failureCount() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [](const RegressionCheck& c) { return !c.pass; }));
}

std::string RegressionReport::toJson() const {
    nlohmann::ordered_json doc;
    auto checkArray = nlohmann::ordered_json::array();
    for (const auto& check : checks) {
        checkArray.push_back({{"dataset", check.dataset},
                              {"name", check.name},
                              {"pass", check.pass},
                              {"detail", check.detail}});
    }
    doc["checks"] = std::move(checkArray);
    doc["failures"] = failureCount();
    doc["pass"] = pass();
    return doc.dump(2) + "\n";
}

std::string RegressionReport::toText() const {
    std::ostringstream out;
    for (const auto& check : checks) {
        out << (check.pass ? "PASS" : "FAIL") << "  " << check.dataset << "/"
            << check.name << ": " << check.detail << "\n";
    }
    out << "result: " << (pass() ? "PASS" : "FAIL") << " (" << failureCount() << " of "
        << checks.size() << " checks failed)\n";
    return out.str();
}

RegressionReport runRegression(const ToleranceConfig& tolerances) {
    RegressionReport report;
    auto add = [&](const std::string& dataset, const std::string& name, bool pass,
                   std::string detail) {
        report.checks.push_back({dataset, name, pass, std::move(detail)});
    };

    const RiTable riTable = RiTable::builtinDefaults();
    std::map<std::string, DecisionPoint> computedDecisions;

    for (const auto& dataset : corpus()) {
        const WeightVector weights = ahpWeights(dataset.matrix);
        const FuzzyScoreVector scores =
            fuzzyScores(fuzzyNormalize(dataset.fuzzyMatrix()));

        double maxWeightDelta = 0.0;
        std::size_t worstWeight = 0;
        for (std::size_t i = 0; i < weights.values.size(); ++i) {
            const double delta = std::abs(weights.values[i] - dataset.expectedAhp[i]);
            if (delta > maxWeightDelta) {
                maxWeightDelta = delta;
                worstWeight = i;
            }
        }
        add(dataset.name, "weights", withinTol(maxWeightDelta, tolerances.weights),
            "max |computed - published| = " + formatFixed(maxWeightDelta, 6) + " at " +
                weights.labels[worstWeight] + ", tolerance " +
                formatShortest(tolerances.weights));

        double maxScoreDelta = 0.0;
        std::size_t worstScore = 0;
        for (std::size_t i = 0; i < scores.values.size(); ++i) {
            const double delta = std::abs(scores.values[i] - dataset.expectedFuzzy[i]);
            if (delta > maxScoreDelta) {
                maxScoreDelta = delta;
                worstScore = i;
            }
        }
        add(dataset.name, "scores", withinTol(maxScoreDelta, tolerances.scores),
            "max |computed - published| = " + formatFixed(maxScoreDelta, 6) + " at " +
                scores.labels[worstScore] + ", tolerance " +
                formatShortest(tolerances.scores));

        const ConsistencyReport rep = consistency(dataset.matrix, riTable);
        const ExpectedConsistency& expected = dataset.expectedConsistency;
        const bool consistencyPass =
            rep.ri && rep.cr &&
            withinTol(std::abs(rep.lambdaMax - expected.lambdaMax), tolerances.lambda) &&
            withinTol(std::abs(rep.ci - expected.ci), tolerances.consistency) &&
            withinTol(std::abs(*rep.ri - expected.ri), 1e-12) &&
            withinTol(std::abs(*rep.cr - expected.cr), tolerances.consistency) &&
            !rep.acceptable;
        add(dataset.name, "consistency", consistencyPass,
            "lambda_max " + formatFixed(rep.lambdaMax, 2) + " vs " +
                formatFixed(expected.lambdaMax, 2) + ", ci " + formatFixed(rep.ci, 2) +
                " vs " + formatFixed(expected.ci, 2) + ", cr " +
                (rep.cr ? formatFixed(*rep.cr, 2) : "n/a") + " vs " +
                formatFixed(expected.cr, 2));

        const Decision ahpDecision = ahpDecide(weights);
        const Decision fuzzyDecision = fuzzyDecide(scores);
        const std::size_t expAhpIdx =
            labelIndex(dataset.matrix.labels, dataset.expectedAhpChoice);
        const std::size_t expFuzzyIdx =
            labelIndex(dataset.matrix.labels, dataset.expectedFuzzyChoice);
        const double roundedAhp = roundTo(ahpDecision.value, 3);
        const double roundedFuzzy = roundTo(fuzzyDecision.value, 2);
        const bool decisionPass =
            ahpDecision.label == dataset.expectedAhpChoice &&
            fuzzyDecision.label == dataset.expectedFuzzyChoice &&
            withinTol(std::abs(roundedAhp - roundTo(dataset.expectedAhp[expAhpIdx], 3)),
                      1e-12) &&
            withinTol(std::abs(roundedFuzzy -
                               roundTo(dataset.expectedFuzzy[expFuzzyIdx], 2)),
                      1e-12);
        add(dataset.name, "decision", decisionPass,
            "ahp (" + ahpDecision.label + ", " + formatFixed(roundedAhp, 3) +
                "), fuzzy (" + fuzzyDecision.label + ", " +
                formatFixed(roundedFuzzy, 2) + ") vs published (" +
                dataset.expectedAhpChoice + ", " +
                formatFixed(dataset.expectedAhp[expAhpIdx], 3) + ") / (" +
                dataset.expectedFuzzyChoice + ", " +
                formatFixed(dataset.expectedFuzzy[expFuzzyIdx], 2) + ")");

        // The published transition rows tally the published rounded columns,
        // so the comparison replays exactly those series.
        CategoryCounts counts;
        for (Transition t : classifySeries({dataset.name, dataset.matrix.labels,
                                            dataset.expectedAhp, dataset.expectedFuzzy})) {
            ++counts[t];
        }
        std::array<int, 6> row{};
        for (std::size_t i = 0; i < row.size(); ++i) {
            row[i] = counts.counts[i];
        }
        const int bothUnchanged = counts[Transition::BothUnchanged];
        add(dataset.name, "trend", row == dataset.expectedTrendRow && bothUnchanged == 0,
            "computed " + joinCounts(row, bothUnchanged) + " vs published " +
                joinCounts(dataset.expectedTrendRow));

        computedDecisions[dataset.name] = {dataset.name, roundedAhp, roundedFuzzy};
    }

    const ExpectedSummary& expected = expectedSummary();

    // The published decision series spans a fixed subset of the datasets.
    std::vector<DecisionPoint> decisionPoints;
    for (const auto& name : expected.decisionSeriesDatasets) {
        auto it = computedDecisions.find(name);
        if (it == computedDecisions.end()) {
            throw McdmError("decision series names unknown dataset \"" + name + "\"");
        }
        decisionPoints.push_back(it->second);
    }

    CategoryCounts decisionCounts;
    for (Transition t : classifySeries(decisionSeries(decisionPoints))) {
        ++decisionCounts[t];
    }
    std::array<int, 6> decisionRow{};
    for (std::size_t i = 0; i < decisionRow.size(); ++i) {
        decisionRow[i] = decisionCounts.counts[i];
    }
    add("summary", "decision-trend",
        decisionRow == expected.decisionTrendRow &&
            decisionCounts[Transition::BothUnchanged] == 0,
        "computed " + joinCounts(decisionRow, decisionCounts[Transition::BothUnchanged]) +
            " vs published " + joinCounts(expected.decisionTrendRow));

    // Pooled statistics replay the nine published series: the eight rounded
    // dataset columns plus the decision series formed from their maxima.
    std::vector<ComparisonSeries> published;
    for (const auto& dataset : corpus()) {
        published.push_back({dataset.name, dataset.matrix.labels, dataset.expectedAhp,
                             dataset.expectedFuzzy});
    }
    std::vector<DecisionPoint> publishedDecisions;
    for (const auto& name : expected.decisionSeriesDatasets) {
        const CorpusDataset* dataset = findDataset(name);
        if (!dataset) {
            throw McdmError("decision series names unknown dataset \"" + name + "\"");
        }
        const std::size_t ahpIdx =
            labelIndex(dataset->matrix.labels, dataset->expectedAhpChoice);
        const std::size_t fuzzyIdx =
            labelIndex(dataset->matrix.labels, dataset->expectedFuzzyChoice);
        publishedDecisions.push_back(
            {dataset->name, roundTo(dataset->expectedAhp[ahpIdx], 3),
             roundTo(dataset->expectedFuzzy[fuzzyIdx], 2)});
    }
    published.push_back(decisionSeries(publishedDecisions));
    const TrendSummary pooled = summarize(published);

    add("summary", "pooled-total", pooled.pooled.total() == 68,
        "computed " + std::to_string(pooled.pooled.total()) + " transitions vs 68");

    const Transition categories[] = {
        Transition::BothIncrease,   Transition::AhpUpFuzzyDown,
        Transition::AhpDownFuzzyUp, Transition::BothDecrease,
        Transition::FuzzyUnchanged, Transition::AhpUnchanged,
    };
    for (std::size_t i = 0; i < 6; ++i) {
        const double computed = pooled.percentage(categories[i]);
        const double target = expected.pooledPercentages[i];
        add("summary", std::string("percent-") + transitionName(categories[i]),
            withinTol(std::abs(computed - target), tolerances.percent),
            "computed " + formatFixed(computed, 2) + " vs published " +
                formatFixed(target, 2));
    }

    const std::pair<const char*, std::pair<double, double>> aggregates[] = {
        {"aggregate-same_direction",
         {pooled.sameDirectionPct(), expected.sameDirectionPct}},
        {"aggregate-reverse_direction",
         {pooled.reverseDirectionPct(), expected.reverseDirectionPct}},
        {"aggregate-one_unchanged",
         {pooled.oneUnchangedPct(), expected.oneUnchangedPct}},
    };
    for (const auto& [name, values] : aggregates) {
        add("summary", name, withinTol(std::abs(values.first - values.second),
                                       tolerances.percent),
            "computed " + formatFixed(values.first, 2) + " vs published " +
                formatFixed(values.second, 2));
    }

    return report;
}

void exportCorpus(const std::string& directory) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(directory, ec);
    if (ec) {
        throw IoError("cannot create directory \"" + directory + "\": " + ec.message());
    }
    auto writeFile = [&](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        out << content;
        if (!out) {
            throw IoError("cannot write \"" + path.string() + "\"");
        }
    };
    for (const auto& dataset : corpus()) {
        const std::string stem = lowercase(dataset.name);
        writeFile(fs::path(directory) / (stem + ".csv"),
                  serializeMatrix(dataset.matrix, MatrixFormat::Csv));

        nlohmann::ordered_json doc;
        doc["name"] = dataset.name;
        doc["expected_ahp"] = dataset.expectedAhp;
        doc["expected_fuzzy"] = dataset.expectedFuzzy;
        doc["expected_consistency"] = {
            {"lambda_max", dataset.expectedConsistency.lambdaMax},
            {"ci", dataset.expectedConsistency.ci},
            {"ri", dataset.expectedConsistency.ri},
            {"cr", dataset.expectedConsistency.cr},
        };
        doc["expected_trend_row"] = dataset.expectedTrendRow;
        auto cells = nlohmann::ordered_json::array();
        for (const auto& cell : dataset.fuzzySheetCells) {
            cells.push_back(
                {{"row", cell.row}, {"col", cell.col}, {"value", cell.value}});
        }
        doc["fuzzy_sheet_cells"] = std::move(cells);
        writeFile(fs::path(directory) / (stem + ".expected.json"), doc.dump(2) + "\n");
    }
}

} // namespace mcdm
