#include "mcdm/ahp.hpp"

#include "mcdm/errors.hpp"
#include "mcdm/numeric.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace mcdm {

namespace {

void requireWellFormed(const PairwiseMatrix& matrix) {
    const std::size_t n = matrix.order();
    if (n == 0 || matrix.entries.size() != n * n) {
        throw McdmError("matrix is not well formed (run validate for details)");
    }
    for (double v : matrix.entries) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw McdmError("matrix entries must be positive and finite");
        }
    }
}

// Kahan-compensated accumulator. Plain serial sums drift by an ulp on sums
// of n equal terms, which breaks the bitwise guarantees on uniform matrices
// (weights exactly 1/n, lambda_max exactly n).
class CompensatedSum {
public:
    void add(double value) {
        const double y = value - compensation_;
        const double t = sum_ + y;
        compensation_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

std::vector<double> columnSums(const PairwiseMatrix& matrix) {
    const std::size_t n = matrix.order();
    std::vector<CompensatedSum> acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            acc[j].add(matrix.at(i, j));
        }
    }
    std::vector<double> sums(n);
    for (std::size_t j = 0; j < n; ++j) {
        sums[j] = acc[j].value();
    }
    return sums;
}

Decision decideEarliestMax(const std::vector<std::string>& labels,
                           const std::vector<double>& values) {
    if (values.empty()) {
        throw McdmError("nothing to decide over");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    return {labels[best], values[best]};
}

} // namespace

NormalizedMatrix ahpNormalize(const PairwiseMatrix& matrix) {
    requireWellFormed(matrix);
    const std::size_t n = matrix.order();
    const std::vector<double> sums = columnSums(matrix);
    NormalizedMatrix out{matrix.labels, std::vector<double>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.entries[i * n + j] = matrix.at(i, j) / sums[j];
        }
    }
    return out;
}

WeightVector ahpWeights(const PairwiseMatrix& matrix) {
    const NormalizedMatrix norm = ahpNormalize(matrix);
    const std::size_t n = norm.order();
    WeightVector w{norm.labels, std::vector<double>(n, 0.0)};
    for (std::size_t i = 0; i < n; ++i) {
        CompensatedSum sum;
        for (std::size_t j = 0; j < n; ++j) {
            sum.add(norm.at(i, j));
        }
        w.values[i] = sum.value() / static_cast<double>(n);
    }
    return w;
}

Decision ahpDecide(const WeightVector& weights) {
    return decideEarliestMax(weights.labels, weights.values);
}

double lambdaMax(const PairwiseMatrix& matrix, const WeightVector& weights) {
    requireWellFormed(matrix);
    if (weights.labels != matrix.labels) {
        throw McdmError("weight vector does not belong to this matrix");
    }
    for (double w : weights.values) {
        if (!std::isfinite(w) || w <= 0.0) {
            throw DegenerateWeightError("weights must be positive and finite");
        }
    }
    const std::vector<double> sums = columnSums(matrix);
    CompensatedSum lambda;
    for (std::size_t j = 0; j < matrix.order(); ++j) {
        lambda.add(sums[j] * weights.values[j]);
    }
    return lambda.value();
}

double principalEigenvalue(const PairwiseMatrix& matrix) {
    requireWellFormed(matrix);
    const std::size_t n = matrix.order();
    std::vector<double> v(n, 1.0 / static_cast<double>(n));
    std::vector<double> av(n);
    double lambda = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                sum += matrix.at(i, j) * v[j];
            }
            av[i] = sum;
            norm += sum; // entries stay positive
        }
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = av[i] / norm;
        }
        if (std::abs(norm - lambda) <= 1e-13 * std::max(1.0, std::abs(norm))) {
            return norm;
        }
        lambda = norm;
    }
    return lambda;
}

RiTable RiTable::builtinDefaults() {
    // Covers the matrix orders of the embedded corpus; other orders need a
    // user-supplied value before a consistency ratio can be formed.
    RiTable table;
    const std::pair<std::size_t, double> defaults[] = {
        {5, 1.19}, {6, 1.32}, {7, 1.41}, {9, 1.54}, {14, 1.70}, {15, 1.72},
    };
    for (auto [order, value] : defaults) {
        table.entries_[order] = {value, RiSource::Builtin};
    }
    return table;
}

void RiTable::set(std::size_t order, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw McdmError("random index values must be positive and finite");
    }
    entries_[order] = {value, RiSource::User};
}

std::optional<RiEntry> RiTable::find(std::size_t order) const {
    auto it = entries_.find(order);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

ConsistencyReport consistency(const PairwiseMatrix& matrix, const RiTable& riTable,
                              double crThreshold) {
    const std::size_t n = matrix.order();
    if (n < 2) {
        throw McdmError("consistency needs a matrix of order 2 or higher");
    }
    const WeightVector weights = ahpWeights(matrix);
    const double lambda = lambdaMax(matrix, weights);
    const double ci = (lambda - static_cast<double>(n)) / static_cast<double>(n - 1);
    const auto ri = riTable.find(n);
    if (!ri) {
        if (ci <= 0.0) {
            return {n, lambda, ci, std::nullopt, std::nullopt, true};
        }
        throw RiUnavailableError(n);
    }
    const double cr = ci / ri->value;
    return {n, lambda, ci, ri->value, cr, cr <= crThreshold};
}

std::string ConsistencyReport::toJson() const {
    nlohmann::ordered_json doc;
    doc["n"] = n;
    doc["lambda_max"] = lambdaMax;
    doc["ci"] = ci;
    doc["ri"] = ri ? nlohmann::ordered_json(*ri) : nlohmann::ordered_json(nullptr);
    doc["cr"] = cr ? nlohmann::ordered_json(*cr) : nlohmann::ordered_json(nullptr);
    doc["acceptable"] = acceptable;
    doc["display"] = {
        {"lambda_max", formatFixed(lambdaMax, 2)},
        {"ci", formatFixed(ci, 2)},
        {"ri", ri ? nlohmann::ordered_json(formatFixed(*ri, 2))
                  : nlohmann::ordered_json(nullptr)},
        {"cr", cr ? nlohmann::ordered_json(formatFixed(*cr, 2))
                  : nlohmann::ordered_json(nullptr)},
    };
    return doc.dump(2) + "\n";
}

std::string ConsistencyReport::toText() const {
    std::ostringstream out;
    out << "n           = " << n << "\n";
    out << "lambda_max  = " << formatFixed(lambdaMax, 2) << "\n";
    out << "ci          = " << formatFixed(ci, 2) << "\n";
    out << "ri          = " << (ri ? formatFixed(*ri, 2) : "n/a") << "\n";
    out << "cr          = " << (cr ? formatFixed(*cr, 2) : "n/a") << "\n";
    out << "acceptable  = " << (acceptable ? "yes" : "no") << "\n";
    return out.str();
}

} // namespace mcdm
