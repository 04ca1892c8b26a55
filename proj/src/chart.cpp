#include "mcdm/chart.hpp"

#include "mcdm/errors.hpp"
#include "mcdm/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mcdm {

namespace {

std::string escapeXml(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v) { return formatFixed(v, 2); }

} // namespace

std::string renderChart(const ChartSpec& spec) {
    const std::size_t n = spec.labels.size();
    if (spec.ahp.size() != n || spec.fuzzy.size() != n) {
        throw McdmError("chart series have mismatched lengths");
    }
    if (n < 2) {
        throw SeriesTooShortError(spec.title, n);
    }
    double maxValue = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(spec.ahp[i]) || !std::isfinite(spec.fuzzy[i])) {
            throw McdmError("chart values must be finite");
        }
        maxValue = std::max({maxValue, spec.ahp[i], spec.fuzzy[i]});
    }
    const double yMax = maxValue > 0.0 ? 1.1 * maxValue : 1.0;

    const double left = 60.0;
    const double right = 24.0;
    const double top = 48.0;
    const double bottom = 56.0;
    const double width = spec.width;
    const double height = spec.height;
    const double plotW = width - left - right;
    const double plotH = height - top - bottom;
    auto xAt = [&](std::size_t i) {
        return left + plotW * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    auto yAt = [&](double v) { return top + plotH * (1.0 - v / yMax); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " "
        << spec.height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << spec.width << "\" height=\""
        << spec.height << "\" fill=\"#ffffff\"/>\n";
    svg << "  <text x=\"" << num(width / 2.0)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << escapeXml(spec.title) << "</text>\n";

    for (int step = 0;; ++step) {
        const double v = 0.1 * step;
        if (v > yMax + 1e-12) {
            break;
        }
        const double y = yAt(v);
        svg << "  <line x1=\"" << num(left) << "\" y1=\"" << num(y) << "\" x2=\""
            << num(width - right) << "\" y2=\"" << num(y)
            << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "  <text x=\"" << num(left - 8.0) << "\" y=\"" << num(y + 4.0)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
            << formatFixed(v, 1) << "</text>\n";
    }

    svg << "  <line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\""
        << num(left) << "\" y2=\"" << num(height - bottom)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg << "  <line x1=\"" << num(left) << "\" y1=\"" << num(height - bottom)
        << "\" x2=\"" << num(width - right) << "\" y2=\"" << num(height - bottom)
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";

    for (std::size_t i = 0; i < n; ++i) {
        svg << "  <text x=\"" << num(xAt(i)) << "\" y=\"" << num(height - bottom + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << escapeXml(spec.labels[i]) << "</text>\n";
    }

    auto polyline = [&](const std::vector<double>& values, const char* color,
                        const char* dash) {
        svg << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"2\"";
        if (dash) {
            svg << " stroke-dasharray=\"" << dash << "\"";
        }
        svg << " points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0) {
                svg << " ";
            }
            svg << num(xAt(i)) << "," << num(yAt(values[i]));
        }
        svg << "\"/>\n";
        for (std::size_t i = 0; i < n; ++i) {
            svg << "  <circle cx=\"" << num(xAt(i)) << "\" cy=\"" << num(yAt(values[i]))
                << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        }
    };
    polyline(spec.fuzzy, "#1a6fb5", nullptr);
    polyline(spec.ahp, "#c24d3a", "7 4");

    const double legendX = width - right - 170.0;
    svg << "  <line x1=\"" << num(legendX) << "\" y1=\"18\" x2=\""
        << num(legendX + 28.0)
        << "\" y2=\"18\" stroke=\"#1a6fb5\" stroke-width=\"2\"/>\n";
    svg << "  <text x=\"" << num(legendX + 34.0)
        << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"12\">fuzzy</text>\n";
    svg << "  <line x1=\"" << num(legendX + 90.0) << "\" y1=\"18\" x2=\""
        << num(legendX + 118.0)
        << "\" y2=\"18\" stroke=\"#c24d3a\" stroke-width=\"2\" "
           "stroke-dasharray=\"7 4\"/>\n";
    svg << "  <text x=\"" << num(legendX + 124.0)
        << "\" y=\"22\" font-family=\"sans-serif\" font-size=\"12\">AHP</text>\n";

    svg << "</svg>\n";
    return svg.str();
}

} // namespace mcdm
