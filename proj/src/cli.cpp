#include "mcdm/cli.hpp"

#include "mcdm/ahp.hpp"
#include "mcdm/chart.hpp"
#include "mcdm/corpus.hpp"
#include "mcdm/errors.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/matrix.hpp"
#include "mcdm/numeric.hpp"
#include "mcdm/trend.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

namespace mcdm {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRegression = 1;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw McdmError("cannot read \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void writeOutput(const std::string& outPath, const std::string& content,
                 std::ostream& out) {
    if (outPath.empty()) {
        out << content;
        return;
    }
    std::ofstream file(outPath, std::ios::binary);
    file << content;
    if (!file) {
        throw IoError("cannot write \"" + outPath + "\"");
    }
}

RiTable buildRiTable(const std::vector<std::string>& overrides) {
    RiTable table = RiTable::builtinDefaults();
    for (const auto& text : overrides) {
        const std::size_t eq = text.find('=');
        std::size_t order = 0;
        double value = 0.0;
        bool ok = eq != std::string::npos;
        if (ok) {
            const char* first = text.data();
            auto [p1, e1] = std::from_chars(first, first + eq, order);
            ok = e1 == std::errc{} && p1 == first + eq;
            const char* vFirst = first + eq + 1;
            const char* vLast = first + text.size();
            auto [p2, e2] = std::from_chars(vFirst, vLast, value);
            ok = ok && e2 == std::errc{} && p2 == vLast;
        }
        if (!ok) {
            throw McdmError("--ri expects n=value, got \"" + text + "\"");
        }
        table.set(order, value);
    }
    return table;
}

PairwiseMatrix loadMatrix(const std::string& path, bool strictScale,
                          std::ostream& err) {
    const std::string text = readFile(path);
    const PairwiseMatrix matrix = parseMatrix(text);
    RatingScale scale;
    scale.strictness = strictScale ? ScaleStrictness::Enforce : ScaleStrictness::Warn;
    const ValidationReport report = validate(matrix, scale);
    for (const auto& issue : report.issues) {
        if (issue.severity == IssueSeverity::Error) {
            throw ValidationError(path + ": " + issue.message);
        }
        err << "warning: " << path << ": " << issue.message << "\n";
    }
    return matrix;
}

std::string fileStem(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::vector<std::string> displayStrings(const std::vector<double>& values, int dp) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (double v : values) {
        out.push_back(formatFixed(v, dp));
    }
    return out;
}

struct EvaluateOptions {
    std::string input;
    std::string method = "both";
    std::string format = "text";
    std::string outPath;
    double crThreshold = 0.1;
    std::vector<std::string> riOverrides;
    bool strictScale = false;
};

int cmdEvaluate(const EvaluateOptions& opts, std::ostream& out, std::ostream& err) {
    const PairwiseMatrix matrix = loadMatrix(opts.input, opts.strictScale, err);
    const bool wantAhp = opts.method != "fuzzy";
    const bool wantFuzzy = opts.method != "ahp";

    std::optional<WeightVector> weights;
    std::optional<Decision> ahpDecision;
    std::optional<ConsistencyReport> consistencyReport;
    std::string consistencyNote;
    if (wantAhp) {
        weights = ahpWeights(matrix);
        ahpDecision = ahpDecide(*weights);
        try {
            consistencyReport =
                consistency(matrix, buildRiTable(opts.riOverrides), opts.crThreshold);
        } catch (const RiUnavailableError& e) {
            consistencyNote = e.what();
        }
    }
    std::optional<FuzzyScoreVector> scores;
    std::optional<Decision> fuzzyDecision;
    if (wantFuzzy) {
        scores = fuzzyScores(fuzzyNormalize(matrix));
        fuzzyDecision = fuzzyDecide(*scores);
    }

    if (opts.format == "json") {
        nlohmann::ordered_json doc;
        doc["labels"] = matrix.labels;
        if (wantAhp) {
            nlohmann::ordered_json ahp;
            ahp["weights"] = weights->values;
            ahp["display"] = displayStrings(weights->values, 3);
            ahp["decision"] = {{"label", ahpDecision->label},
                               {"value", ahpDecision->value},
                               {"display", formatFixed(ahpDecision->value, 3)}};
            if (consistencyReport) {
                ahp["consistency"] =
                    nlohmann::ordered_json::parse(consistencyReport->toJson());
            } else {
                ahp["consistency"] = nullptr;
                ahp["consistency_note"] = consistencyNote;
            }
            doc["ahp"] = std::move(ahp);
        }
        if (wantFuzzy) {
            nlohmann::ordered_json fuzzy;
            fuzzy["scores"] = scores->values;
            fuzzy["display"] = displayStrings(scores->values, 3);
            fuzzy["decision"] = {{"label", fuzzyDecision->label},
                                 {"value", fuzzyDecision->value},
                                 {"display", formatFixed(fuzzyDecision->value, 2)}};
            doc["fuzzy"] = std::move(fuzzy);
        }
        writeOutput(opts.outPath, doc.dump(2) + "\n", out);
        return kExitOk;
    }

    if (opts.format == "csv") {
        std::string csv = "label";
        if (wantAhp) {
            csv += ",ahp_weight";
        }
        if (wantFuzzy) {
            csv += ",fuzzy_score";
        }
        csv += '\n';
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            csv += matrix.labels[i];
            if (wantAhp) {
                csv += ',';
                csv += formatShortest(weights->values[i]);
            }
            if (wantFuzzy) {
                csv += ',';
                csv += formatShortest(scores->values[i]);
            }
            csv += '\n';
        }
        writeOutput(opts.outPath, csv, out);
        return kExitOk;
    }

    std::size_t width = 0;
    for (const auto& label : matrix.labels) {
        width = std::max(width, label.size());
    }
    std::ostringstream text;
    if (wantAhp) {
        text << "ahp weights:\n";
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            text << "  " << matrix.labels[i]
                 << std::string(width - matrix.labels[i].size() + 2, ' ')
                 << formatFixed(weights->values[i], 3) << "\n";
        }
        text << "ahp decision: " << ahpDecision->label << " ("
             << formatFixed(ahpDecision->value, 3) << ")\n";
        if (consistencyReport) {
            text << "consistency:\n";
            std::istringstream lines(consistencyReport->toText());
            for (std::string line; std::getline(lines, line);) {
                text << "  " << line << "\n";
            }
        } else {
            text << "consistency: unavailable (" << consistencyNote << ")\n";
        }
    }
    if (wantFuzzy) {
        text << "fuzzy scores:\n";
        for (std::size_t i = 0; i < matrix.order(); ++i) {
            text << "  " << matrix.labels[i]
                 << std::string(width - matrix.labels[i].size() + 2, ' ')
                 << formatFixed(scores->values[i], 3) << "\n";
        }
        text << "fuzzy decision: " << fuzzyDecision->label << " ("
             << formatFixed(fuzzyDecision->value, 2) << ")\n";
    }
    writeOutput(opts.outPath, text.str(), out);
    return kExitOk;
}

struct ConsistencyOptions {
    std::string input;
    std::string format = "text";
    std::string outPath;
    double crThreshold = 0.1;
    std::vector<std::string> riOverrides;
    bool strictScale = false;
};

int cmdConsistency(const ConsistencyOptions& opts, std::ostream& out,
                   std::ostream& err) {
    const PairwiseMatrix matrix = loadMatrix(opts.input, opts.strictScale, err);
    const ConsistencyReport report =
        consistency(matrix, buildRiTable(opts.riOverrides), opts.crThreshold);
    writeOutput(opts.outPath,
                opts.format == "json" ? report.toJson() : report.toText(), out);
    return kExitOk;
}

struct CompareOptions {
    std::vector<std::string> inputs;
    std::string format = "text";
    std::string outPath;
    double epsilon = 1e-9;
    bool strictScale = false;
};

std::vector<ComparisonSeries> seriesFromResults(const std::string& path,
                                                const nlohmann::json& doc) {
    if (!doc["series"].is_array() || doc["series"].empty()) {
        throw McdmError(path + ": \"series\" must be a non-empty array");
    }
    std::vector<ComparisonSeries> out;
    for (const auto& entry : doc["series"]) {
        const bool shaped = entry.is_object() && entry.contains("name") &&
                            entry["name"].is_string() && entry.contains("labels") &&
                            entry["labels"].is_array() && entry.contains("ahp") &&
                            entry["ahp"].is_array() && entry.contains("fuzzy") &&
                            entry["fuzzy"].is_array();
        if (!shaped) {
            throw McdmError(path +
                            ": every series needs name, labels, ahp and fuzzy fields");
        }
        ComparisonSeries series;
        series.name = entry["name"].get<std::string>();
        for (const auto& l : entry["labels"]) {
            if (!l.is_string()) {
                throw McdmError(path + ": series \"" + series.name +
                                "\" has a non-string label");
            }
            series.labels.push_back(l.get<std::string>());
        }
        for (const char* key : {"ahp", "fuzzy"}) {
            auto& target = key == std::string_view("ahp") ? series.ahp : series.fuzzy;
            for (const auto& v : entry[key]) {
                if (!v.is_number()) {
                    throw McdmError(path + ": series \"" + series.name +
                                    "\" has a non-numeric value");
                }
                target.push_back(v.get<double>());
            }
        }
        if (series.ahp.size() != series.labels.size() ||
            series.fuzzy.size() != series.labels.size()) {
            throw McdmError(path + ": series \"" + series.name +
                            "\" has mismatched lengths");
        }
        out.push_back(std::move(series));
    }
    return out;
}

int cmdCompare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
    std::vector<ComparisonSeries> series;
    for (const auto& path : opts.inputs) {
        const std::string text = readFile(path);
        if (detectFormat(text) == MatrixFormat::Json) {
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::parse_error&) {
                throw McdmError(path + ": invalid JSON");
            }
            if (doc.is_object() && doc.contains("series")) {
                auto loaded = seriesFromResults(path, doc);
                series.insert(series.end(), loaded.begin(), loaded.end());
                continue;
            }
        }
        const PairwiseMatrix matrix = loadMatrix(path, opts.strictScale, err);
        const WeightVector weights = ahpWeights(matrix);
        const FuzzyScoreVector scores = fuzzyScores(fuzzyNormalize(matrix));
        series.push_back(
            {fileStem(path), matrix.labels, weights.values, scores.values});
    }
    if (series.empty()) {
        throw NoObservationsError();
    }
    const TrendSummary summary = summarize(series, opts.epsilon);

    if (opts.format == "json") {
        nlohmann::ordered_json doc;
        auto seriesArray = nlohmann::ordered_json::array();
        for (const auto& s : series) {
            seriesArray.push_back({{"name", s.name},
                                   {"labels", s.labels},
                                   {"ahp", s.ahp},
                                   {"fuzzy", s.fuzzy}});
        }
        doc["series"] = std::move(seriesArray);
        doc["summary"] = nlohmann::ordered_json::parse(summary.toJson());
        writeOutput(opts.outPath, doc.dump(2) + "\n", out);
    } else if (opts.format == "csv") {
        writeOutput(opts.outPath, summary.toCsv(), out);
    } else {
        writeOutput(opts.outPath, summary.toText(), out);
    }
    return kExitOk;
}

struct CorpusRunOptions {
    ToleranceConfig tolerances;
    std::string format = "text";
    std::string outPath;
};

int cmdCorpusRun(const CorpusRunOptions& opts, std::ostream& out) {
    const RegressionReport report = runRegression(opts.tolerances);
    writeOutput(opts.outPath,
                opts.format == "json" ? report.toJson() : report.toText(), out);
    return report.pass() ? kExitOk : kExitRegression;
}

struct ChartOptions {
    std::string input;
    std::string title;
    std::string outPath;
    bool strictScale = false;
};

int cmdChart(const ChartOptions& opts, std::ostream& out, std::ostream& err) {
    const PairwiseMatrix matrix = loadMatrix(opts.input, opts.strictScale, err);
    const WeightVector weights = ahpWeights(matrix);
    const FuzzyScoreVector scores = fuzzyScores(fuzzyNormalize(matrix));
    ChartSpec spec;
    spec.title = opts.title.empty() ? fileStem(opts.input) : opts.title;
    spec.labels = matrix.labels;
    spec.ahp = weights.values;
    spec.fuzzy = scores.values;
    writeOutput(opts.outPath, renderChart(spec), out);
    return kExitOk;
}

} // namespace

int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"pairwise-comparison decision toolkit (AHP and fuzzy max-min)"};
    app.name("mcdm");
    app.require_subcommand(1);

    EvaluateOptions evaluateOpts;
    auto* evaluate =
        app.add_subcommand("evaluate", "weights, scores and decisions for a matrix");
    evaluate->add_option("input", evaluateOpts.input, "matrix file (CSV or JSON)")
        ->required();
    evaluate->add_option("--method", evaluateOpts.method, "ahp, fuzzy or both")
        ->check(CLI::IsMember({"ahp", "fuzzy", "both"}))
        ->capture_default_str();
    evaluate->add_option("--format", evaluateOpts.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    evaluate->add_option("--out", evaluateOpts.outPath, "write output to a file");
    evaluate
        ->add_option("--cr-threshold", evaluateOpts.crThreshold,
                     "acceptability bound for the consistency ratio")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    evaluate->add_option("--ri", evaluateOpts.riOverrides,
                         "random index as n=value (repeatable)");
    evaluate->add_flag("--strict-scale", evaluateOpts.strictScale,
                       "treat off-scale ratings as errors");

    ConsistencyOptions consistencyOpts;
    auto* consistencyCmd =
        app.add_subcommand("consistency", "consistency report for a matrix");
    consistencyCmd
        ->add_option("input", consistencyOpts.input, "matrix file (CSV or JSON)")
        ->required();
    consistencyCmd->add_option("--format", consistencyOpts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    consistencyCmd->add_option("--out", consistencyOpts.outPath,
                               "write output to a file");
    consistencyCmd
        ->add_option("--cr-threshold", consistencyOpts.crThreshold,
                     "acceptability bound for the consistency ratio")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    consistencyCmd->add_option("--ri", consistencyOpts.riOverrides,
                               "random index as n=value (repeatable)");
    consistencyCmd->add_flag("--strict-scale", consistencyOpts.strictScale,
                             "treat off-scale ratings as errors");

    CompareOptions compareOpts;
    auto* compare = app.add_subcommand(
        "compare", "classify AHP-vs-fuzzy trends across one or more inputs");
    compare
        ->add_option("inputs", compareOpts.inputs,
                     "matrix files, or a results file with a series array")
        ->required();
    compare->add_option("--format", compareOpts.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    compare->add_option("--out", compareOpts.outPath, "write output to a file");
    compare
        ->add_option("--epsilon", compareOpts.epsilon,
                     "deltas with |delta| <= epsilon count as unchanged")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compare->add_flag("--strict-scale", compareOpts.strictScale,
                      "treat off-scale ratings as errors");

    auto* corpusCmd =
        app.add_subcommand("corpus", "embedded reference datasets and results");
    corpusCmd->require_subcommand(1);
    CorpusRunOptions corpusRunOpts;
    auto* corpusRun = corpusCmd->add_subcommand(
        "run", "recompute every dataset and compare with the published results");
    corpusRun->add_option("--format", corpusRunOpts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    corpusRun->add_option("--out", corpusRunOpts.outPath, "write output to a file");
    corpusRun
        ->add_option("--tol-weights", corpusRunOpts.tolerances.weights,
                     "tolerance for weight deltas")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    corpusRun
        ->add_option("--tol-scores", corpusRunOpts.tolerances.scores,
                     "tolerance for score deltas")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    corpusRun
        ->add_option("--tol-lambda", corpusRunOpts.tolerances.lambda,
                     "tolerance for lambda_max deltas")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    corpusRun
        ->add_option("--tol-consistency", corpusRunOpts.tolerances.consistency,
                     "tolerance for CI/CR deltas")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    corpusRun
        ->add_option("--tol-percent", corpusRunOpts.tolerances.percent,
                     "tolerance for pooled percentage deltas")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    std::string exportDir;
    auto* corpusExport = corpusCmd->add_subcommand(
        "export", "write per-dataset CSV matrices and expected-result JSON files");
    corpusExport->add_option("directory", exportDir, "target directory")->required();

    ChartOptions chartOpts;
    auto* chart =
        app.add_subcommand("chart", "render both methods for a matrix as an SVG");
    chart->add_option("input", chartOpts.input, "matrix file (CSV or JSON)")
        ->required();
    chart->add_option("--title", chartOpts.title, "chart title (default: file stem)");
    chart->add_option("--out", chartOpts.outPath, "write the SVG to a file");
    chart->add_flag("--strict-scale", chartOpts.strictScale,
                    "treat off-scale ratings as errors");

    try {
        app.parse(argc, argv);
        if (evaluate->parsed()) {
            return cmdEvaluate(evaluateOpts, out, err);
        }
        if (consistencyCmd->parsed()) {
            return cmdConsistency(consistencyOpts, out, err);
        }
        if (compare->parsed()) {
            return cmdCompare(compareOpts, out, err);
        }
        if (corpusCmd->parsed()) {
            if (corpusRun->parsed()) {
                return cmdCorpusRun(corpusRunOpts, out);
            }
            exportCorpus(exportDir);
            out << "wrote " << corpus().size() * 2 << " files to " << exportDir << "\n";
            return kExitOk;
        }
        if (chart->parsed()) {
            return cmdChart(chartOpts, out, err);
        }
        err << "error: no command selected\n";
        return kExitInput;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const McdmError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace mcdm
