#include "mcdm/matrix.hpp"

#include "mcdm/errors.hpp"
#include "mcdm/numeric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <json.hpp>
#include <set>
#include <sstream>
#include <utility>

namespace mcdm {

namespace {

bool parseCell(std::string_view cell, double& out) {
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

struct CsvCell {
    std::string_view text;
    std::size_t line;
    std::size_t col;
};

std::vector<CsvCell> splitCsvLine(std::string_view lineText, std::size_t lineNo) {
    std::vector<CsvCell> cells;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = lineText.find(',', start);
        std::size_t end = comma == std::string_view::npos ? lineText.size() : comma;
        cells.push_back({lineText.substr(start, end - start), lineNo, start + 1});
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return cells;
}

PairwiseMatrix parseCsv(std::string_view text) {
    std::vector<std::pair<std::string_view, std::size_t>> lines;
    std::size_t pos = 0;
    std::size_t lineNo = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        ++lineNo;
        lines.emplace_back(line, lineNo);
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
    while (!lines.empty() && lines.back().first.empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        throw ParseError(ParseErrorKind::Syntax, 1, 1, "empty input");
    }

    auto header = splitCsvLine(lines[0].first, lines[0].second);
    if (!header[0].text.empty()) {
        throw ParseError(ParseErrorKind::Syntax, 1, 1,
                         "header must start with an empty cell before the labels");
    }
    if (header.size() < 2) {
        throw ParseError(ParseErrorKind::Syntax, 1, 1, "header has no labels");
    }

    PairwiseMatrix m;
    std::vector<std::pair<std::size_t, std::size_t>> cellPos; // (line, col) per entry
    for (std::size_t j = 1; j < header.size(); ++j) {
        if (header[j].text.empty()) {
            throw ParseError(ParseErrorKind::Syntax, header[j].line, header[j].col,
                             "empty label in header");
        }
        m.labels.emplace_back(header[j].text);
    }
    const std::size_t n = m.labels.size();

    if (lines.size() - 1 != n) {
        throw ParseError(ParseErrorKind::RaggedRow, lines.back().second, 1,
                         "expected " + std::to_string(n) + " data rows, found " +
                             std::to_string(lines.size() - 1));
    }
    m.entries.reserve(n * n);
    cellPos.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        auto cells = splitCsvLine(lines[i + 1].first, lines[i + 1].second);
        if (cells.size() != n + 1) {
            throw ParseError(ParseErrorKind::RaggedRow, cells[0].line, 1,
                             "row \"" + std::string(cells[0].text) + "\" has " +
                                 std::to_string(cells.size() - 1) + " entries, expected " +
                                 std::to_string(n));
        }
        if (cells[0].text != m.labels[i]) {
            throw ParseError(ParseErrorKind::HeaderMismatch, cells[0].line, 1,
                             "row label \"" + std::string(cells[0].text) +
                                 "\" does not match column label \"" + m.labels[i] + "\"");
        }
        for (std::size_t j = 1; j < cells.size(); ++j) {
            double v = 0.0;
            if (!parseCell(cells[j].text, v)) {
                throw ParseError(ParseErrorKind::Syntax, cells[j].line, cells[j].col,
                                 "\"" + std::string(cells[j].text) + "\" is not a number");
            }
            m.entries.push_back(v);
            cellPos.emplace_back(cells[j].line, cells[j].col);
        }
    }

    ValidationReport report = validate(m);
    for (const auto& issue : report.issues) {
        if (issue.severity != IssueSeverity::Error) {
            continue;
        }
        std::size_t line = 1;
        std::size_t col = 1;
        if (issue.row != ValidationIssue::npos && issue.col != ValidationIssue::npos) {
            auto [l, c] = cellPos[issue.row * n + issue.col];
            line = l;
            col = c;
        } else if (issue.row != ValidationIssue::npos && issue.row + 1 < header.size()) {
            line = header[issue.row + 1].line;
            col = header[issue.row + 1].col;
        }
        throw ParseError(ParseErrorKind::Syntax, line, col, issue.message);
    }
    return m;
}

std::pair<std::size_t, std::size_t> offsetToLineCol(std::string_view text,
                                                    std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

PairwiseMatrix parseJson(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = offsetToLineCol(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(ParseErrorKind::Syntax, line, col, "invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("labels") || !doc.contains("rows")) {
        throw ParseError(ParseErrorKind::Syntax, 1, 1,
                         "expected an object with \"labels\" and \"rows\"");
    }
    const auto& labels = doc["labels"];
    const auto& rows = doc["rows"];
    if (!labels.is_array() || labels.empty()) {
        throw ParseError(ParseErrorKind::Syntax, 1, 1,
                         "\"labels\" must be a non-empty array of strings");
    }

    PairwiseMatrix m;
    for (const auto& l : labels) {
        if (!l.is_string()) {
            throw ParseError(ParseErrorKind::Syntax, 1, 1,
                             "\"labels\" must be a non-empty array of strings");
        }
        m.labels.push_back(l.get<std::string>());
    }
    const std::size_t n = m.labels.size();
    if (!rows.is_array() || rows.size() != n) {
        throw ParseError(ParseErrorKind::RaggedRow, 1, 1,
                         "\"rows\" must hold " + std::to_string(n) + " arrays");
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw ParseError(ParseErrorKind::RaggedRow, 1, 1,
                             "row " + std::to_string(i + 1) + " (\"" + m.labels[i] +
                                 "\") must hold " + std::to_string(n) + " numbers");
        }
        for (const auto& cell : row) {
            if (!cell.is_number()) {
                throw ParseError(ParseErrorKind::Syntax, 1, 1,
                                 "row \"" + m.labels[i] + "\" holds a non-numeric entry");
            }
            m.entries.push_back(cell.get<double>());
        }
    }

    ValidationReport report = validate(m);
    for (const auto& issue : report.issues) {
        if (issue.severity == IssueSeverity::Error) {
            throw ParseError(ParseErrorKind::Syntax, 1, 1, issue.message);
        }
    }
    return m;
}

} // namespace

bool RatingScale::onScale(double value) const {
    return std::isfinite(value) && std::floor(value) == value && value >= low &&
           value <= high;
}

const char* RatingScale::anchorName(int value) {
    switch (value) {
    case 1: return "equal importance";
    case 3: return "moderate importance";
    case 5: return "strong importance";
    case 7: return "very strong importance";
    case 9: return "extreme importance";
    case 2:
    case 4:
    case 6:
    case 8: return "intermediate importance";
    default: return nullptr;
    }
}

bool ValidationReport::ok() const { return errorCount() == 0; }

std::size_t ValidationReport::errorCount() const {
    return static_cast<std::size_t>(
        std::count_if(issues.begin(), issues.end(), [](const ValidationIssue& i) {
            return i.severity == IssueSeverity::Error;
        }));
}

std::size_t ValidationReport::warningCount() const {
    return issues.size() - errorCount();
}

ValidationReport validate(const PairwiseMatrix& matrix, const RatingScale& scale) {
    ValidationReport report;
    auto add = [&](IssueSeverity severity, std::string message,
                   std::size_t row = ValidationIssue::npos,
                   std::size_t col = ValidationIssue::npos) {
        report.issues.push_back({severity, std::move(message), row, col});
    };

    const std::size_t n = matrix.order();
    if (n == 0) {
        add(IssueSeverity::Error, "matrix has no labels");
        return report;
    }
    if (matrix.entries.size() != n * n) {
        add(IssueSeverity::Error,
            "matrix holds " + std::to_string(matrix.entries.size()) +
                " entries, expected " + std::to_string(n * n));
        return report;
    }

    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix.labels[i].empty()) {
            add(IssueSeverity::Error, "label " + std::to_string(i + 1) + " is empty", i);
        } else if (!seen.insert(matrix.labels[i]).second) {
            add(IssueSeverity::Error, "duplicate label \"" + matrix.labels[i] + "\"", i);
        }
    }

    const IssueSeverity offScale = scale.strictness == ScaleStrictness::Enforce
                                       ? IssueSeverity::Error
                                       : IssueSeverity::Warning;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = matrix.at(i, j);
            const std::string cell =
                "(" + matrix.labels[i] + ", " + matrix.labels[j] + ")";
            if (!std::isfinite(v)) {
                add(IssueSeverity::Error, "entry " + cell + " is not finite", i, j);
                continue;
            }
            if (v <= 0.0) {
                add(IssueSeverity::Error,
                    "entry " + cell + " = " + formatShortest(v) + " must be positive", i,
                    j);
                continue;
            }
            if (i == j && std::abs(v - 1.0) > 1e-12) {
                add(IssueSeverity::Error,
                    "diagonal entry " + cell + " = " + formatShortest(v) + " must be 1",
                    i, j);
                continue;
            }
            if (!scale.onScale(v)) {
                add(offScale,
                    "entry " + cell + " = " + formatShortest(v) +
                        " is off the " + formatShortest(scale.low) + "-" +
                        formatShortest(scale.high) + " rating scale",
                    i, j);
            }
        }
    }
    return report;
}

MatrixFormat detectFormat(std::string_view text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            continue;
        }
        return c == '{' ? MatrixFormat::Json : MatrixFormat::Csv;
    }
    return MatrixFormat::Csv;
}

PairwiseMatrix parseMatrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::Csv ? parseCsv(text) : parseJson(text);
}

PairwiseMatrix parseMatrix(std::string_view text) {
    return parseMatrix(text, detectFormat(text));
}

std::string serializeMatrix(const PairwiseMatrix& matrix, MatrixFormat format) {
    const std::size_t n = matrix.order();
    if (format == MatrixFormat::Csv) {
        std::string out;
        for (const auto& label : matrix.labels) {
            out += ',';
            out += label;
        }
        out += '\n';
        for (std::size_t i = 0; i < n; ++i) {
            out += matrix.labels[i];
            for (std::size_t j = 0; j < n; ++j) {
                out += ',';
                out += formatShortest(matrix.at(i, j));
            }
            out += '\n';
        }
        return out;
    }

    nlohmann::ordered_json doc;
    doc["labels"] = matrix.labels;
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(matrix.at(i, j));
        }
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

} // namespace mcdm
