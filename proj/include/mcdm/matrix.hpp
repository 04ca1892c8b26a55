#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mcdm {

// Square pairwise comparison matrix with one label per criterion.
// Entries are positive, the diagonal is 1, and no reciprocal relation is
// assumed between a(i,j) and a(j,i).
struct PairwiseMatrix {
    std::vector<std::string> labels;
    std::vector<double> entries; // row-major, labels.size()^2 values

    std::size_t order() const { return labels.size(); }

    double at(std::size_t row, std::size_t col) const {
        return entries[row * labels.size() + col];
    }
    double& at(std::size_t row, std::size_t col) {
        return entries[row * labels.size() + col];
    }

    bool operator==(const PairwiseMatrix&) const = default;
};

enum class ScaleStrictness { Warn, Enforce };

// The 1-9 judgement scale: integer anchors 1 (equal), 3 (moderate),
// 5 (strong), 7 (very strong), 9 (extreme), with 2/4/6/8 as intermediates.
struct RatingScale {
    double low = 1.0;
    double high = 9.0;
    ScaleStrictness strictness = ScaleStrictness::Warn;

    bool onScale(double value) const;
    static const char* anchorName(int value); // nullptr for non-anchors
};

enum class IssueSeverity { Warning, Error };

struct ValidationIssue {
    IssueSeverity severity;
    std::string message;
    std::size_t row; // npos when not tied to a cell
    std::size_t col;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const;
    std::size_t errorCount() const;
    std::size_t warningCount() const;
};

// Structural and scale checks; never throws. Errors: empty matrix, entry
// count mismatch, non-finite or non-positive entries, off-unit diagonal,
// duplicate or empty labels. Off-scale ratings are warnings under Warn and
// errors under Enforce.
ValidationReport validate(const PairwiseMatrix& matrix, const RatingScale& scale = {});

enum class MatrixFormat { Csv, Json };

// JSON if the first non-whitespace byte is '{', CSV otherwise.
MatrixFormat detectFormat(std::string_view text);

// Parsing applies validate() with a Warn-mode scale: structural errors throw
// ParseError with position info, scale warnings do not block.
PairwiseMatrix parseMatrix(std::string_view text, MatrixFormat format);
PairwiseMatrix parseMatrix(std::string_view text);

// serialize ∘ parse is the identity on bytes produced by serializeMatrix;
// values are written with shortest round-trip formatting.
std::string serializeMatrix(const PairwiseMatrix& matrix, MatrixFormat format);

} // namespace mcdm
