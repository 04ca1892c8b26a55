#include "mcdm/trend.hpp"

#include "mcdm/errors.hpp"
#include "mcdm/numeric.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace mcdm {

const char* transitionName(Transition t) {
    switch (t) {
    case Transition::BothIncrease: return "both_increase";
    case Transition::AhpUpFuzzyDown: return "ahp_up_fuzzy_down";
    case Transition::AhpDownFuzzyUp: return "ahp_down_fuzzy_up";
    case Transition::BothDecrease: return "both_decrease";
    case Transition::FuzzyUnchanged: return "fuzzy_unchanged";
    case Transition::AhpUnchanged: return "ahp_unchanged";
    case Transition::BothUnchanged: return "both_unchanged";
    }
    return "unknown";
}

Transition classifyTransition(double ahpDelta, double fuzzyDelta, double epsilon) {
    if (!(epsilon >= 0.0)) {
        throw McdmError("epsilon must be non-negative");
    }
    const bool ahpFlat = std::abs(ahpDelta) <= epsilon;
    const bool fuzzyFlat = std::abs(fuzzyDelta) <= epsilon;
    if (ahpFlat && fuzzyFlat) {
        return Transition::BothUnchanged;
    }
    if (ahpFlat) {
        return Transition::AhpUnchanged;
    }
    if (fuzzyFlat) {
        return Transition::FuzzyUnchanged;
    }
    if (ahpDelta > 0.0) {
        return fuzzyDelta > 0.0 ? Transition::BothIncrease : Transition::AhpUpFuzzyDown;
    }
    return fuzzyDelta > 0.0 ? Transition::AhpDownFuzzyUp : Transition::BothDecrease;
}

std::vector<Transition> classifySeries(const ComparisonSeries& series, double epsilon) {
    const std::size_t n = series.labels.size();
    if (series.ahp.size() != n || series.fuzzy.size() != n) {
        throw McdmError("series \"" + series.name +
                        "\" has mismatched label and value lengths");
    }
    if (n < 2) {
        throw SeriesTooShortError(series.name, n);
    }
    std::vector<Transition> out;
    out.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        out.push_back(classifyTransition(series.ahp[i] - series.ahp[i - 1],
                                         series.fuzzy[i] - series.fuzzy[i - 1], epsilon));
    }
    return out;
}

int CategoryCounts::total() const {
    int sum = 0;
    for (int c : counts) {
        sum += c;
    }
    return sum;
}

TrendSummary summarize(const std::vector<ComparisonSeries>& series, double epsilon) {
    TrendSummary summary;
    for (const auto& s : series) {
        SeriesBreakdown breakdown{s.name, {}};
        for (Transition t : classifySeries(s, epsilon)) {
            ++breakdown.counts[t];
            ++summary.pooled[t];
        }
        summary.perSeries.push_back(std::move(breakdown));
    }
    if (summary.pooled.total() == 0) {
        throw NoObservationsError();
    }
    return summary;
}

double TrendSummary::percentage(Transition t) const {
    const int total = pooled.total();
    if (total == 0) {
        return 0.0;
    }
    return 100.0 * pooled[t] / total;
}

double TrendSummary::sameDirectionPct() const {
    return percentage(Transition::BothIncrease) + percentage(Transition::BothDecrease);
}

double TrendSummary::reverseDirectionPct() const {
    return percentage(Transition::AhpUpFuzzyDown) +
           percentage(Transition::AhpDownFuzzyUp);
}

double TrendSummary::oneUnchangedPct() const {
    return percentage(Transition::FuzzyUnchanged) + percentage(Transition::AhpUnchanged);
}

namespace {

constexpr Transition kAllTransitions[] = {
    Transition::BothIncrease,   Transition::AhpUpFuzzyDown,
    Transition::AhpDownFuzzyUp, Transition::BothDecrease,
    Transition::FuzzyUnchanged, Transition::AhpUnchanged,
    Transition::BothUnchanged,
};

} // namespace

std::string TrendSummary::toJson() const {
    nlohmann::ordered_json doc;
    auto seriesArray = nlohmann::ordered_json::array();
    for (const auto& breakdown : perSeries) {
        nlohmann::ordered_json entry;
        entry["name"] = breakdown.name;
        for (Transition t : kAllTransitions) {
            entry["counts"][transitionName(t)] = breakdown.counts[t];
        }
        entry["total"] = breakdown.counts.total();
        seriesArray.push_back(std::move(entry));
    }
    doc["series"] = std::move(seriesArray);
    for (Transition t : kAllTransitions) {
        doc["pooled"]["counts"][transitionName(t)] = pooled[t];
    }
    doc["pooled"]["total"] = pooled.total();
    for (Transition t : kAllTransitions) {
        doc["pooled"]["percentages"][transitionName(t)] = percentage(t);
    }
    doc["pooled"]["aggregates"]["same_direction"] = sameDirectionPct();
    doc["pooled"]["aggregates"]["reverse_direction"] = reverseDirectionPct();
    doc["pooled"]["aggregates"]["one_unchanged"] = oneUnchangedPct();
    for (Transition t : kAllTransitions) {
        doc["pooled"]["display"]["percentages"][transitionName(t)] =
            formatFixed(percentage(t), 2);
    }
    doc["pooled"]["display"]["aggregates"]["same_direction"] =
        formatFixed(sameDirectionPct(), 2);
    doc["pooled"]["display"]["aggregates"]["reverse_direction"] =
        formatFixed(reverseDirectionPct(), 2);
    doc["pooled"]["display"]["aggregates"]["one_unchanged"] =
        formatFixed(oneUnchangedPct(), 2);
    return doc.dump(2) + "\n";
}

std::string TrendSummary::toCsv() const {
    std::string out = "series";
    for (Transition t : kAllTransitions) {
        out += ',';
        out += transitionName(t);
    }
    out += ",total\n";
    auto appendRow = [&](const std::string& name, const CategoryCounts& counts) {
        out += name;
        for (Transition t : kAllTransitions) {
            out += ',';
            out += std::to_string(counts[t]);
        }
        out += ',';
        out += std::to_string(counts.total());
        out += '\n';
    };
    for (const auto& breakdown : perSeries) {
        appendRow(breakdown.name, breakdown.counts);
    }
    appendRow("(pooled)", pooled);
    return out;
}

std::string TrendSummary::toText() const {
    std::ostringstream out;
    out << "transitions by series:\n";
    for (const auto& breakdown : perSeries) {
        out << "  " << breakdown.name << ":";
        for (Transition t : kAllTransitions) {
            if (breakdown.counts[t] > 0 || t != Transition::BothUnchanged) {
                out << " " << transitionName(t) << "=" << breakdown.counts[t];
            }
        }
        out << " total=" << breakdown.counts.total() << "\n";
    }
    out << "pooled percentages (" << pooled.total() << " transitions):\n";
    for (Transition t : kAllTransitions) {
        out << "  " << transitionName(t) << " = " << formatFixed(percentage(t), 2)
            << "%\n";
    }
    out << "direction agreement:\n";
    out << "  same direction     = " << formatFixed(sameDirectionPct(), 2) << "%\n";
    out << "  reverse direction  = " << formatFixed(reverseDirectionPct(), 2) << "%\n";
    out << "  one side unchanged = " << formatFixed(oneUnchangedPct(), 2) << "%\n";
    return out.str();
}

ComparisonSeries decisionSeries(const std::vector<DecisionPoint>& points) {
    if (points.size() < 2) {
        throw SeriesTooShortError("decisions", points.size());
    }
    ComparisonSeries series;
    series.name = "decisions";
    for (const auto& p : points) {
        series.labels.push_back(p.name);
        series.ahp.push_back(p.ahp);
        series.fuzzy.push_back(p.fuzzy);
    }
    return series;
}

} // namespace mcdm
