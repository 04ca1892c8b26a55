#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace mcdm {

// Joint direction of the AHP and fuzzy values across one step of a series.
// A delta with |delta| <= epsilon counts as unchanged.
enum class Transition {
    BothIncrease,
    AhpUpFuzzyDown,
    AhpDownFuzzyUp,
    BothDecrease,
    FuzzyUnchanged, // fuzzy flat, AHP moved
    AhpUnchanged,   // AHP flat, fuzzy moved
    BothUnchanged,  // both flat; kept out of the direction aggregates
};

inline constexpr std::size_t kTransitionCount = 7;

const char* transitionName(Transition t); // "both_increase", ...

Transition classifyTransition(double ahpDelta, double fuzzyDelta, double epsilon = 1e-9);

// Two aligned value sequences over the same ordered labels.
struct ComparisonSeries {
    std::string name;
    std::vector<std::string> labels;
    std::vector<double> ahp;
    std::vector<double> fuzzy;
};

// One transition per consecutive label pair. Throws SeriesTooShortError for
// fewer than two points and McdmError on length mismatches.
std::vector<Transition> classifySeries(const ComparisonSeries& series,
                                       double epsilon = 1e-9);

struct CategoryCounts {
    std::array<int, kTransitionCount> counts{};

    int& operator[](Transition t) { return counts[static_cast<std::size_t>(t)]; }
    int operator[](Transition t) const { return counts[static_cast<std::size_t>(t)]; }
    int total() const;
};

struct SeriesBreakdown {
    std::string name;
    CategoryCounts counts;
};

struct TrendSummary {
    std::vector<SeriesBreakdown> perSeries;
    CategoryCounts pooled;

    double percentage(Transition t) const; // of pooled.total()
    double sameDirectionPct() const;       // both increase + both decrease
    double reverseDirectionPct() const;    // the two opposite-direction cases
    double oneUnchangedPct() const;        // exactly one side flat

    std::string toJson() const;
    std::string toCsv() const;
    std::string toText() const;
};

// Pools transitions across series. Throws NoObservationsError when nothing
// was classified.
TrendSummary summarize(const std::vector<ComparisonSeries>& series,
                       double epsilon = 1e-9);

struct DecisionPoint {
    std::string name;
    double ahp;
    double fuzzy;
};

// Series formed by each dataset's winning values, in the order given.
ComparisonSeries decisionSeries(const std::vector<DecisionPoint>& points);

} // namespace mcdm
