#pragma once

#include <string>
#include <vector>

namespace mcdm {

struct ChartSpec {
    std::string title;
    std::vector<std::string> labels;
    std::vector<double> ahp;   // drawn dashed
    std::vector<double> fuzzy; // drawn solid
    int width = 900;
    int height = 480;
};

// Deterministic SVG: fixed layout, fixed-precision coordinates, no
// timestamps or random ids, so equal specs give byte-identical output.
// Throws SeriesTooShortError for fewer than two points.
std::string renderChart(const ChartSpec& spec);

} // namespace mcdm
