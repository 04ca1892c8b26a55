#include "mcdm/ahp.hpp"
#include "mcdm/chart.hpp"
#include "mcdm/corpus.hpp"
#include "mcdm/errors.hpp"
#include "mcdm/fuzzy.hpp"
#include "mcdm/matrix.hpp"
#include "mcdm/numeric.hpp"
#include "mcdm/trend.hpp"

#include <json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace mcdm;

namespace {

std::vector<std::vector<double>> rowsOf(const std::vector<std::string>& labels,
                                        const std::vector<double>& entries) {
    const std::size_t n = labels.size();
    std::vector<std::vector<double>> rows(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rows[i][j] = entries[i * n + j];
        }
    }
    return rows;
}

PairwiseMatrix matrixFromRows(const std::vector<std::string>& labels,
                              const std::vector<std::vector<double>>& rows) {
    PairwiseMatrix m;
    m.labels = labels;
    if (rows.size() != labels.size()) {
        throw McdmError("rows must match the number of labels");
    }
    for (const auto& row : rows) {
        if (row.size() != labels.size()) {
            throw McdmError("every row must match the number of labels");
        }
        m.entries.insert(m.entries.end(), row.begin(), row.end());
    }
    return m;
}

py::object jsonToPy(const nlohmann::json& value) {
    switch (value.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(value.get<bool>());
    case nlohmann::json::value_t::number_integer:
        return py::int_(value.get<long long>());
    case nlohmann::json::value_t::number_unsigned:
        return py::int_(value.get<unsigned long long>());
    case nlohmann::json::value_t::number_float:
        return py::float_(value.get<double>());
    case nlohmann::json::value_t::string: return py::str(value.get<std::string>());
    case nlohmann::json::value_t::array: {
        py::list list;
        for (const auto& item : value) {
            list.append(jsonToPy(item));
        }
        return list;
    }
    case nlohmann::json::value_t::object: {
        py::dict dict;
        for (const auto& [key, item] : value.items()) {
            dict[py::str(key)] = jsonToPy(item);
        }
        return dict;
    }
    default: return py::none();
    }
}

py::object jsonStringToPy(const std::string& text) {
    return jsonToPy(nlohmann::json::parse(text));
}

RiTable tableWith(const std::map<std::size_t, double>& overrides) {
    RiTable table = RiTable::builtinDefaults();
    for (const auto& [order, value] : overrides) {
        table.set(order, value);
    }
    return table;
}

ComparisonSeries seriesFromParts(const std::string& name,
                                 const std::vector<std::string>& labels,
                                 const std::vector<double>& ahp,
                                 const std::vector<double>& fuzzy) {
    return {name, labels, ahp, fuzzy};
}

} // namespace

PYBIND11_MODULE(mcdm, m) {
    m.doc() = "pairwise-comparison decision toolkit (AHP and fuzzy max-min)";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const IoError& e) {
            PyErr_SetString(PyExc_OSError, e.what());
        } catch (const McdmError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<PairwiseMatrix>(m, "Matrix")
        .def(py::init(&matrixFromRows), py::arg("labels"), py::arg("rows"))
        .def_readonly("labels", &PairwiseMatrix::labels)
        .def_property_readonly("order", &PairwiseMatrix::order)
        .def("rows",
             [](const PairwiseMatrix& self) {
                 return rowsOf(self.labels, self.entries);
             })
        .def("at",
             [](const PairwiseMatrix& self, std::size_t row, std::size_t col) {
                 if (row >= self.order() || col >= self.order()) {
                     throw py::index_error("matrix index out of range");
                 }
                 return self.at(row, col);
             },
             py::arg("row"), py::arg("col"))
        .def("__eq__",
             [](const PairwiseMatrix& self, const PairwiseMatrix& other) {
                 return self == other;
             })
        .def("__repr__", [](const PairwiseMatrix& self) {
            return "Matrix(order=" + std::to_string(self.order()) + ")";
        });

    m.def("parse_matrix", [](const std::string& text) { return parseMatrix(text); },
          py::arg("text"), "Parse a CSV or JSON matrix (format auto-detected).");
    m.def("serialize_matrix",
          [](const PairwiseMatrix& matrix, const std::string& format) {
              if (format != "csv" && format != "json") {
                  throw McdmError("format must be \"csv\" or \"json\"");
              }
              return serializeMatrix(matrix, format == "csv" ? MatrixFormat::Csv
                                                             : MatrixFormat::Json);
          },
          py::arg("matrix"), py::arg("format") = "csv");
    m.def("validate",
          [](const PairwiseMatrix& matrix, bool strict) {
              RatingScale scale;
              scale.strictness =
                  strict ? ScaleStrictness::Enforce : ScaleStrictness::Warn;
              const ValidationReport report = validate(matrix, scale);
              py::list issues;
              for (const auto& issue : report.issues) {
                  py::dict entry;
                  entry["severity"] =
                      issue.severity == IssueSeverity::Error ? "error" : "warning";
                  entry["message"] = issue.message;
                  if (issue.row != ValidationIssue::npos) {
                      entry["row"] = issue.row;
                      entry["col"] = issue.col;
                  }
                  issues.append(entry);
              }
              py::dict out;
              out["ok"] = report.ok();
              out["errors"] = report.errorCount();
              out["warnings"] = report.warningCount();
              out["issues"] = issues;
              return out;
          },
          py::arg("matrix"), py::arg("strict") = false);

    m.def("ahp_normalize",
          [](const PairwiseMatrix& matrix) {
              const NormalizedMatrix norm = ahpNormalize(matrix);
              return rowsOf(norm.labels, norm.entries);
          },
          py::arg("matrix"));
    m.def("ahp_weights",
          [](const PairwiseMatrix& matrix) {
              const WeightVector w = ahpWeights(matrix);
              py::dict out;
              for (std::size_t i = 0; i < w.values.size(); ++i) {
                  out[py::str(w.labels[i])] = w.values[i];
              }
              return out;
          },
          py::arg("matrix"));
    m.def("ahp_decide",
          [](const PairwiseMatrix& matrix) {
              const Decision d = ahpDecide(ahpWeights(matrix));
              return py::make_tuple(d.label, d.value);
          },
          py::arg("matrix"));
    m.def("lambda_max",
          [](const PairwiseMatrix& matrix) {
              return lambdaMax(matrix, ahpWeights(matrix));
          },
          py::arg("matrix"));
    m.def("principal_eigenvalue", &principalEigenvalue, py::arg("matrix"));
    m.def("consistency",
          [](const PairwiseMatrix& matrix, double threshold,
             const std::map<std::size_t, double>& ri) {
              const ConsistencyReport report =
                  consistency(matrix, tableWith(ri), threshold);
              return jsonStringToPy(report.toJson());
          },
          py::arg("matrix"), py::arg("threshold") = 0.1,
          py::arg("ri") = std::map<std::size_t, double>{});

    m.def("fuzzy_normalize",
          [](const PairwiseMatrix& matrix) {
              const FuzzyNormalizedMatrix norm = fuzzyNormalize(matrix);
              return rowsOf(norm.labels, norm.entries);
          },
          py::arg("matrix"));
    m.def("fuzzy_scores",
          [](const PairwiseMatrix& matrix) {
              const FuzzyScoreVector scores = fuzzyScores(fuzzyNormalize(matrix));
              py::dict out;
              for (std::size_t i = 0; i < scores.values.size(); ++i) {
                  out[py::str(scores.labels[i])] = scores.values[i];
              }
              return out;
          },
          py::arg("matrix"));
    m.def("fuzzy_decide",
          [](const PairwiseMatrix& matrix) {
              const Decision d = fuzzyDecide(fuzzyScores(fuzzyNormalize(matrix)));
              return py::make_tuple(d.label, d.value);
          },
          py::arg("matrix"));

    m.def("classify_transition",
          [](double ahpDelta, double fuzzyDelta, double epsilon) {
              return std::string(
                  transitionName(classifyTransition(ahpDelta, fuzzyDelta, epsilon)));
          },
          py::arg("ahp_delta"), py::arg("fuzzy_delta"), py::arg("epsilon") = 1e-9);
    m.def("classify_series",
          [](const std::string& name, const std::vector<std::string>& labels,
             const std::vector<double>& ahp, const std::vector<double>& fuzzy,
             double epsilon) {
              std::vector<std::string> out;
              for (Transition t :
                   classifySeries(seriesFromParts(name, labels, ahp, fuzzy), epsilon)) {
                  out.emplace_back(transitionName(t));
              }
              return out;
          },
          py::arg("name"), py::arg("labels"), py::arg("ahp"), py::arg("fuzzy"),
          py::arg("epsilon") = 1e-9);
    m.def("summarize",
          [](const std::vector<std::tuple<std::string, std::vector<std::string>,
                                          std::vector<double>, std::vector<double>>>&
                 series,
             double epsilon) {
              std::vector<ComparisonSeries> converted;
              for (const auto& [name, labels, ahp, fuzzy] : series) {
                  converted.push_back(seriesFromParts(name, labels, ahp, fuzzy));
              }
              return jsonStringToPy(summarize(converted, epsilon).toJson());
          },
          py::arg("series"), py::arg("epsilon") = 1e-9);

    m.def("corpus_names", [] {
        std::vector<std::string> names;
        for (const auto& dataset : corpus()) {
            names.push_back(dataset.name);
        }
        return names;
    });
    m.def("corpus_dataset",
          [](const std::string& name) {
              const CorpusDataset* dataset = findDataset(name);
              if (!dataset) {
                  throw McdmError("unknown dataset \"" + name + "\"");
              }
              py::dict out;
              out["name"] = dataset->name;
              out["labels"] = dataset->matrix.labels;
              out["rows"] = rowsOf(dataset->matrix.labels, dataset->matrix.entries);
              const PairwiseMatrix fuzzy = dataset->fuzzyMatrix();
              out["fuzzy_rows"] = rowsOf(fuzzy.labels, fuzzy.entries);
              out["expected_ahp"] = dataset->expectedAhp;
              out["expected_fuzzy"] = dataset->expectedFuzzy;
              out["expected_ahp_choice"] = dataset->expectedAhpChoice;
              out["expected_fuzzy_choice"] = dataset->expectedFuzzyChoice;
              py::dict consistencyDict;
              consistencyDict["lambda_max"] = dataset->expectedConsistency.lambdaMax;
              consistencyDict["ci"] = dataset->expectedConsistency.ci;
              consistencyDict["ri"] = dataset->expectedConsistency.ri;
              consistencyDict["cr"] = dataset->expectedConsistency.cr;
              out["expected_consistency"] = consistencyDict;
              out["expected_trend_row"] = dataset->expectedTrendRow;
              return out;
          },
          py::arg("name"));
    m.def("run_regression",
          [](double weights, double scores, double lambda, double consistencyTol,
             double percent) {
              ToleranceConfig tolerances;
              tolerances.weights = weights;
              tolerances.scores = scores;
              tolerances.lambda = lambda;
              tolerances.consistency = consistencyTol;
              tolerances.percent = percent;
              return jsonStringToPy(runRegression(tolerances).toJson());
          },
          py::arg("weights") = 0.005, py::arg("scores") = 0.005,
          py::arg("lambda_tol") = 0.10, py::arg("consistency") = 0.02,
          py::arg("percent") = 0.02);
    m.def("export_corpus", &exportCorpus, py::arg("directory"));

    m.def("render_chart",
          [](const std::vector<std::string>& labels, const std::vector<double>& ahp,
             const std::vector<double>& fuzzy, const std::string& title, int width,
             int height) {
              ChartSpec spec;
              spec.title = title;
              spec.labels = labels;
              spec.ahp = ahp;
              spec.fuzzy = fuzzy;
              spec.width = width;
              spec.height = height;
              return renderChart(spec);
          },
          py::arg("labels"), py::arg("ahp"), py::arg("fuzzy"), py::arg("title") = "",
          py::arg("width") = 900, py::arg("height") = 480);
}
