#include "mcdm/ahp.hpp"
#include "mcdm/corpus.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/matrix.hpp"
#include "mcdm/numeric.hpp"
#include "mcdm/trend.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

using namespace mcdm;

namespace {

constexpr std::uint64_t kSeed = 20260815;

PairwiseMatrix randomMatrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> orderDist(2, 15);
    std::uniform_int_distribution<int> ratingDist(1, 9);
    std::bernoulli_distribution reciprocal(0.5);

    const std::size_t n = orderDist(rng);
    PairwiseMatrix m;
    for (std::size_t i = 0; i < n; ++i) {
        m.labels.push_back("C" + std::to_string(i + 1));
    }
    m.entries.assign(n * n, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const double rating = ratingDist(rng);
            m.at(i, j) = reciprocal(rng) ? 1.0 / rating : rating;
        }
    }
    return m;
}

PairwiseMatrix consistentMatrix(const std::vector<double>& v,
                                std::vector<std::string> labels) {
    const std::size_t n = v.size();
    PairwiseMatrix m;
    m.labels = std::move(labels);
    m.entries.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = i == j ? 1.0 : v[i] / v[j];
        }
    }
    return m;
}

} // namespace

TEST_CASE("normalization, weights, fuzzy pairs, and round-trips on random matrices") {
    std::mt19937_64 rng(kSeed);
    for (int iteration = 0; iteration < 1000; ++iteration) {
        const PairwiseMatrix m = randomMatrix(rng);
        const std::size_t n = m.order();
        CAPTURE(iteration);

        const NormalizedMatrix norm = ahpNormalize(m);
        for (std::size_t j = 0; j < n; ++j) {
            double colSum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                colSum += norm.at(i, j);
            }
            CHECK(std::abs(colSum - 1.0) < 1e-12);
        }

        const WeightVector w = ahpWeights(m);
        const double weightSum =
            std::accumulate(w.values.begin(), w.values.end(), 0.0);
        CHECK(std::abs(weightSum - 1.0) < 1e-12);

        const FuzzyNormalizedMatrix fuzzy = fuzzyNormalize(m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::max(fuzzy.at(i, j), fuzzy.at(j, i)) == 1.0);
            }
        }

        CHECK(parseMatrix(serializeMatrix(m, MatrixFormat::Csv)) == m);
        if (iteration % 10 == 0) {
            CHECK(parseMatrix(serializeMatrix(m, MatrixFormat::Json)) == m);
        }
    }
}

TEST_CASE("consistent reciprocal matrices recover their generating weights") {
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<std::size_t> orderDist(2, 15);
    std::uniform_real_distribution<double> valueDist(0.1, 10.0);

    RiTable table = RiTable::builtinDefaults();
    for (std::size_t order = 2; order <= 15; ++order) {
        if (!table.find(order)) {
            table.set(order, 1.0);
        }
    }

    for (int iteration = 0; iteration < 200; ++iteration) {
        const std::size_t n = orderDist(rng);
        std::vector<double> v(n);
        std::vector<std::string> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = valueDist(rng);
            labels[i] = "C" + std::to_string(i + 1);
        }
        const PairwiseMatrix m = consistentMatrix(v, labels);
        CAPTURE(iteration);

        const double total = std::accumulate(v.begin(), v.end(), 0.0);
        const WeightVector w = ahpWeights(m);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(w.values[i] - v[i] / total) < 1e-9);
        }

        const ConsistencyReport report = consistency(m, table);
        CHECK(std::abs(report.lambdaMax - static_cast<double>(n)) < 1e-9);
        CHECK(std::abs(report.ci) < 1e-9);
        CHECK(report.acceptable);

        CHECK(std::abs(principalEigenvalue(m) - static_cast<double>(n)) < 1e-9);
    }
}

TEST_CASE("swapping the two series mirrors the transition categories") {
    std::mt19937_64 rng(kSeed + 2);
    std::uniform_int_distribution<std::size_t> lengthDist(2, 12);
    std::uniform_real_distribution<double> valueDist(0.0, 1.0);
    std::bernoulli_distribution repeat(0.2);

    auto mirrored = [](Transition t) {
        switch (t) {
        case Transition::AhpUpFuzzyDown: return Transition::AhpDownFuzzyUp;
        case Transition::AhpDownFuzzyUp: return Transition::AhpUpFuzzyDown;
        case Transition::FuzzyUnchanged: return Transition::AhpUnchanged;
        case Transition::AhpUnchanged: return Transition::FuzzyUnchanged;
        default: return t;
        }
    };

    for (int iteration = 0; iteration < 500; ++iteration) {
        const std::size_t n = lengthDist(rng);
        ComparisonSeries series;
        series.name = "random";
        for (std::size_t i = 0; i < n; ++i) {
            series.labels.push_back("p" + std::to_string(i));
            const bool hold = i > 0 && repeat(rng);
            series.ahp.push_back(hold ? series.ahp.back() : valueDist(rng));
            series.fuzzy.push_back(hold ? series.fuzzy.back() : valueDist(rng));
        }
        ComparisonSeries swapped = series;
        std::swap(swapped.ahp, swapped.fuzzy);

        const std::vector<Transition> forward = classifySeries(series);
        const std::vector<Transition> reverse = classifySeries(swapped);
        REQUIRE(forward.size() == reverse.size());
        for (std::size_t i = 0; i < forward.size(); ++i) {
            CHECK(reverse[i] == mirrored(forward[i]));
        }
    }
}

TEST_CASE("growing epsilon only moves transitions toward unchanged") {
    std::mt19937_64 rng(kSeed + 3);
    std::uniform_real_distribution<double> deltaDist(-0.3, 0.3);
    std::uniform_real_distribution<double> epsDist(0.0, 0.2);

    auto flatSides = [](Transition t) {
        if (t == Transition::BothUnchanged) {
            return 2;
        }
        return t == Transition::FuzzyUnchanged || t == Transition::AhpUnchanged ? 1 : 0;
    };

    for (int iteration = 0; iteration < 2000; ++iteration) {
        const double da = deltaDist(rng);
        const double df = deltaDist(rng);
        double epsLow = epsDist(rng);
        double epsHigh = epsDist(rng);
        if (epsLow > epsHigh) {
            std::swap(epsLow, epsHigh);
        }
        const Transition narrow = classifyTransition(da, df, epsLow);
        const Transition wide = classifyTransition(da, df, epsHigh);
        CHECK(flatSides(wide) >= flatSides(narrow));
    }
}

TEST_CASE("permuting the labels permutes the results") {
    std::mt19937_64 rng(kSeed + 4);
    for (int iteration = 0; iteration < 200; ++iteration) {
        const PairwiseMatrix m = randomMatrix(rng);
        const std::size_t n = m.order();
        CAPTURE(iteration);

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);

        PairwiseMatrix shuffled;
        shuffled.labels.resize(n);
        shuffled.entries.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            shuffled.labels[i] = m.labels[perm[i]];
            for (std::size_t j = 0; j < n; ++j) {
                shuffled.at(i, j) = m.at(perm[i], perm[j]);
            }
        }

        const WeightVector base = ahpWeights(m);
        const WeightVector moved = ahpWeights(shuffled);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(moved.values[i] - base.values[perm[i]]) < 1e-12);
        }

        const FuzzyScoreVector fuzzyBase = fuzzyScores(fuzzyNormalize(m));
        const FuzzyScoreVector fuzzyMoved = fuzzyScores(fuzzyNormalize(shuffled));
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(fuzzyMoved.values[i] == fuzzyBase.values[perm[i]]);
        }

        std::vector<double> sorted = base.values;
        std::sort(sorted.begin(), sorted.end());
        const double topGap = sorted[n - 1] - sorted[n - 2];
        if (topGap > 1e-9) {
            CHECK(ahpDecide(moved).label == ahpDecide(base).label);
        }
    }
}

TEST_CASE("the published comparison series never hold still on both sides") {
    std::vector<ComparisonSeries> published;
    for (const CorpusDataset& dataset : corpus()) {
        published.push_back({dataset.name, dataset.matrix.labels, dataset.expectedAhp,
                             dataset.expectedFuzzy});
    }
    std::vector<DecisionPoint> decisions;
    for (const std::string& name : expectedSummary().decisionSeriesDatasets) {
        const CorpusDataset* dataset = findDataset(name);
        REQUIRE(dataset != nullptr);
        std::size_t ahpIdx = 0;
        std::size_t fuzzyIdx = 0;
        for (std::size_t i = 0; i < dataset->matrix.labels.size(); ++i) {
            if (dataset->matrix.labels[i] == dataset->expectedAhpChoice) {
                ahpIdx = i;
            }
            if (dataset->matrix.labels[i] == dataset->expectedFuzzyChoice) {
                fuzzyIdx = i;
            }
        }
        decisions.push_back({dataset->name, roundTo(dataset->expectedAhp[ahpIdx], 3),
                             roundTo(dataset->expectedFuzzy[fuzzyIdx], 2)});
    }
    published.push_back(decisionSeries(decisions));

    const TrendSummary summary = summarize(published);
    CHECK(summary.pooled[Transition::BothUnchanged] == 0);
    CHECK(summary.pooled.total() == 68);
    for (const SeriesBreakdown& breakdown : summary.perSeries) {
        CHECK(breakdown.counts[Transition::BothUnchanged] == 0);
    }
}
