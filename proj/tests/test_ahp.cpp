#include "mcdm/ahp.hpp"
#include "mcdm/corpus.hpp"
#include "mcdm/errors.hpp"
#include "mcdm/numeric.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

using namespace mcdm;

namespace {

PairwiseMatrix allOnes(std::size_t n) {
    PairwiseMatrix m;
    for (std::size_t i = 0; i < n; ++i) {
        m.labels.push_back("C" + std::to_string(i + 1));
    }
    m.entries.assign(n * n, 1.0);
    return m;
}

// Full-precision values recomputed once and frozen; a drift beyond 1e-9
// means the numerics changed, not the data.
struct FrozenConsistency {
    const char* name;
    double lambda;
    double ci;
    double cr;
};

constexpr FrozenConsistency kFrozen[] = {
    {"Risk", 61.720439335701, 3.337174238264, 1.940217580386},
    {"Customer", 18.863859649123, 3.465964912281, 2.912575556538},
    {"Organization", 26.579960696931, 3.263326782822, 2.314416158030},
    {"Policy", 28.876406073401, 3.646067678900, 2.585863602057},
    {"Process", 28.568080387835, 3.594680064639, 2.549418485560},
    {"Staff", 38.624902740379, 3.703112842547, 2.404618728927},
    {"Tools", 59.427582161154, 3.494429397012, 2.055546704125},
    {"Vendors", 25.034030603746, 3.806806120749, 2.883944030871},
};

const std::map<std::string, std::vector<double>>& frozenWeights() {
    static const std::map<std::string, std::vector<double>> weights = {
        {"Risk",
         {0.085133726796, 0.082952119965, 0.114192641259, 0.051427787427,
          0.049544449237, 0.068505494321, 0.051858401684, 0.069222110611,
          0.034445652274, 0.080939688134, 0.068439008514, 0.057129383604,
          0.037724915343, 0.090141159585, 0.058343461244}},
        {"Customer",
         {0.210935672515, 0.193157894737, 0.116432748538, 0.249590643275,
          0.229883040936}},
        {"Organization",
         {0.102141406239, 0.183659042265, 0.106013951616, 0.132855773389,
          0.164436842497, 0.187803515303, 0.123089468692}},
        {"Policy",
         {0.108355298232, 0.158552022690, 0.104729170665, 0.131317574052,
          0.181984624571, 0.149361525174, 0.165699784616}},
        {"Process",
         {0.156455025909, 0.141266411894, 0.117633799663, 0.139093873875,
          0.161508607651, 0.161798344864, 0.122243936144}},
        {"Staff",
         {0.099515691838, 0.128353515968, 0.100652871620, 0.102433697620,
          0.118165680170, 0.112826690654, 0.118492318688, 0.101038750657,
          0.118520782784}},
        {"Tools",
         {0.087729418207, 0.083128662740, 0.066984582762, 0.059976289464,
          0.073691675858, 0.076924281882, 0.060932694615, 0.060610395834,
          0.075129444020, 0.056078079250, 0.085508401867, 0.062111861409,
          0.082429085201, 0.068765126891}},
        {"Vendors",
         {0.127138216606, 0.158102496371, 0.187131434283, 0.185035458461,
          0.177032912115, 0.165559482164}},
    };
    return weights;
}

} // namespace

TEST_CASE("weights of every embedded dataset match their frozen values") {
    for (const auto& [name, expected] : frozenWeights()) {
        const CorpusDataset* dataset = findDataset(name);
        REQUIRE(dataset != nullptr);
        const WeightVector w = ahpWeights(dataset->matrix);
        REQUIRE(w.values.size() == expected.size());
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(std::abs(w.values[i] - expected[i]) < 1e-9);
        }
    }
}

TEST_CASE("consistency of every embedded dataset matches its frozen values") {
    const RiTable ri = RiTable::builtinDefaults();
    for (const FrozenConsistency& frozen : kFrozen) {
        const CorpusDataset* dataset = findDataset(frozen.name);
        REQUIRE(dataset != nullptr);
        const ConsistencyReport report = consistency(dataset->matrix, ri);
        CAPTURE(frozen.name);
        CHECK(std::abs(report.lambdaMax - frozen.lambda) < 1e-9);
        CHECK(std::abs(report.ci - frozen.ci) < 1e-9);
        REQUIRE(report.cr.has_value());
        CHECK(std::abs(*report.cr - frozen.cr) < 1e-9);
        CHECK_FALSE(report.acceptable);
    }
}

TEST_CASE("all-ones matrices normalize, weigh, and score exactly") {
    for (std::size_t n = 2; n <= 15; ++n) {
        CAPTURE(n);
        const PairwiseMatrix m = allOnes(n);
        const double uniform = 1.0 / static_cast<double>(n);

        const NormalizedMatrix norm = ahpNormalize(m);
        for (double v : norm.entries) {
            CHECK(v == uniform);
        }
        const WeightVector w = ahpWeights(m);
        for (double v : w.values) {
            CHECK(v == uniform);
        }
        CHECK(lambdaMax(m, w) == static_cast<double>(n));
    }
}

TEST_CASE("a perfectly consistent matrix is acceptable without a random index") {
    const ConsistencyReport report = consistency(allOnes(4), RiTable::builtinDefaults());
    CHECK(report.n == 4);
    CHECK(report.lambdaMax == 4.0);
    CHECK(report.ci == 0.0);
    CHECK_FALSE(report.ri.has_value());
    CHECK_FALSE(report.cr.has_value());
    CHECK(report.acceptable);
}

TEST_CASE("an inconsistent matrix without a random index raises an error") {
    PairwiseMatrix m = allOnes(4);
    m.at(0, 1) = 9.0;
    m.at(2, 3) = 5.0;
    try {
        consistency(m, RiTable::builtinDefaults());
        FAIL("expected RiUnavailableError");
    } catch (const RiUnavailableError& e) {
        CHECK(e.order() == 4);
    }
}

TEST_CASE("an all-ones matrix with a known random index has zero ratio") {
    const ConsistencyReport report = consistency(allOnes(7), RiTable::builtinDefaults());
    CHECK(report.lambdaMax == 7.0);
    CHECK(report.ci == 0.0);
    REQUIRE(report.ri.has_value());
    CHECK(*report.ri == 1.41);
    REQUIRE(report.cr.has_value());
    CHECK(*report.cr == 0.0);
    CHECK(report.acceptable);
}

TEST_CASE("scaling one column by a power of two leaves normalization unchanged") {
    const CorpusDataset* dataset = findDataset("Customer");
    REQUIRE(dataset != nullptr);
    const NormalizedMatrix base = ahpNormalize(dataset->matrix);

    PairwiseMatrix scaled = dataset->matrix;
    for (std::size_t i = 0; i < scaled.order(); ++i) {
        scaled.at(i, 2) *= 4.0;
    }
    const NormalizedMatrix after = ahpNormalize(scaled);
    REQUIRE(after.entries.size() == base.entries.size());
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        CHECK(after.entries[i] == base.entries[i]);
    }
}

TEST_CASE("scaling one column by any positive factor leaves normalization stable") {
    const CorpusDataset* dataset = findDataset("Vendors");
    REQUIRE(dataset != nullptr);
    const NormalizedMatrix base = ahpNormalize(dataset->matrix);

    PairwiseMatrix scaled = dataset->matrix;
    for (std::size_t i = 0; i < scaled.order(); ++i) {
        scaled.at(i, 0) *= 3.7;
    }
    const NormalizedMatrix after = ahpNormalize(scaled);
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        CHECK(after.entries[i] == doctest::Approx(base.entries[i]).epsilon(1e-14));
    }
}

TEST_CASE("decision picks the highest weight and breaks ties to the earliest label") {
    WeightVector uniform{{"X", "Y", "Z"}, {0.25, 0.25, 0.25}};
    CHECK(ahpDecide(uniform).label == "X");

    const CorpusDataset* customer = findDataset("Customer");
    REQUIRE(customer != nullptr);
    const Decision d = ahpDecide(ahpWeights(customer->matrix));
    CHECK(d.label == "STF");
    CHECK(roundTo(d.value, 2) == 0.25);

    const CorpusDataset* tools = findDataset("Tools");
    REQUIRE(tools != nullptr);
    const Decision t = ahpDecide(ahpWeights(tools->matrix));
    CHECK(t.label == "CWA");
    CHECK(roundTo(t.value, 3) == 0.088);
}

TEST_CASE("lambda estimate needs weights from the same matrix") {
    const PairwiseMatrix m = allOnes(3);
    WeightVector wrongLabels{{"X", "Y", "Z"}, {0.5, 0.25, 0.25}};
    CHECK_THROWS_AS(lambdaMax(m, wrongLabels), McdmError);

    WeightVector degenerate{m.labels, {0.5, 0.5, 0.0}};
    CHECK_THROWS_AS(lambdaMax(m, degenerate), DegenerateWeightError);
}

TEST_CASE("consistency requires at least a 2x2 matrix") {
    PairwiseMatrix tiny;
    tiny.labels = {"A"};
    tiny.entries = {1.0};
    CHECK_THROWS_AS(consistency(tiny, RiTable::builtinDefaults()), McdmError);
}

TEST_CASE("builtin random indices cover exactly the embedded matrix orders") {
    const RiTable table = RiTable::builtinDefaults();
    const std::pair<std::size_t, double> expected[] = {
        {5, 1.19}, {6, 1.32}, {7, 1.41}, {9, 1.54}, {14, 1.70}, {15, 1.72},
    };
    for (auto [order, value] : expected) {
        const auto entry = table.find(order);
        REQUIRE(entry.has_value());
        CHECK(entry->value == value);
        CHECK(entry->source == RiSource::Builtin);
    }
    for (std::size_t order : {std::size_t{2}, std::size_t{4}, std::size_t{8},
                              std::size_t{10}, std::size_t{13}}) {
        CHECK_FALSE(table.find(order).has_value());
    }
}

TEST_CASE("user random indices are accepted and validated") {
    RiTable table = RiTable::builtinDefaults();
    table.set(4, 0.90);
    const auto entry = table.find(4);
    REQUIRE(entry.has_value());
    CHECK(entry->value == 0.90);
    CHECK(entry->source == RiSource::User);

    CHECK_THROWS_AS(table.set(4, 0.0), McdmError);
    CHECK_THROWS_AS(table.set(4, -1.0), McdmError);
}

TEST_CASE("power iteration agrees with the estimate on consistent matrices") {
    const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
    PairwiseMatrix m;
    m.labels = {"A", "B", "C", "D"};
    m.entries.resize(16);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m.at(i, j) = v[i] / v[j];
        }
    }
    CHECK(principalEigenvalue(m) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(lambdaMax(m, ahpWeights(m)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(principalEigenvalue(allOnes(6)) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("consistency report serializes full precision plus rounded display") {
    const CorpusDataset* risk = findDataset("Risk");
    REQUIRE(risk != nullptr);
    const ConsistencyReport report =
        consistency(risk->matrix, RiTable::builtinDefaults());
    const auto doc = nlohmann::json::parse(report.toJson());
    CHECK(doc["n"] == 15);
    CHECK(doc["acceptable"] == false);
    CHECK(doc["display"]["lambda_max"] == "61.72");
    CHECK(doc["display"]["ci"] == "3.34");
    CHECK(doc["display"]["ri"] == "1.72");
    CHECK(doc["display"]["cr"] == "1.94");
    CHECK(std::abs(doc["lambda_max"].get<double>() - 61.720439335701) < 1e-9);

    const std::string text = report.toText();
    CHECK(text.find("lambda_max  = 61.72") != std::string::npos);
    CHECK(text.find("acceptable  = no") != std::string::npos);
}
