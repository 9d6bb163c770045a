#ifndef SEMPLE_BRANCH_LIFT_HPP
#define SEMPLE_BRANCH_LIFT_HPP

// Lifting a formal branch (x(t), y(t)) through the primary and secondary
// charts of the tower.  At each level the next coordinate is the derivative
// of the newest coordinate with respect to the independent one; when that
// ratio has a pole the chart switches, the old newest coordinate becomes
// independent, and the branch meets the divisor at infinity of the new
// level with multiplicity equal to the valuation of the inverted ratio.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <semple/contact.hpp>
#include <semple/numeric.hpp>
#include <semple/series.hpp>

namespace semple {

struct BranchSeries {
    TruncatedSeries x;
    TruncatedSeries y;
};

enum class ChartKind { Primary, Secondary, MultiInfinity };

struct InfinityHit {
    int level = 0;
    int multiplicity = 0;

    friend bool operator==(const InfinityHit &, const InfinityHit &) = default;
};

struct JetState {
    int level = 0;
    ChartKind chart = ChartKind::Primary;
    // j of the secondary chart (level of the first hit); 0 otherwise.
    int secondary_index = 0;
    // x and y exchanged at level 0 (the other primary chart).
    bool swapped = false;
    std::vector<TruncatedSeries> coordinates;
    std::vector<std::string> names;
    std::size_t independent = 0;
    std::size_t newest = 1;
    std::vector<InfinityHit> hits;
    // Truncation of the input, for precision diagnostics.
    int source_truncation = 0;

    int precision() const;
    std::string chart_name() const;
};

// Centers the branch, checks it is primitive and picks the primary chart.
JetState initial_state(const BranchSeries &b);

JetState lift_step(const JetState &s);

struct TraceEntry {
    int level = 0;
    std::string chart;
    std::string independent;
    std::string newest;
    std::optional<int> independent_valuation;
    std::optional<int> newest_valuation;
    bool immersed = false;

    friend bool operator==(const TraceEntry &, const TraceEntry &) = default;
};

struct LiftReport {
    // Nonzero branch contributions kappa_j, j <= max level.
    std::map<int, Integer> kappa;
    std::vector<InfinityHit> infinity_hits;
    // Hits past the first: the point lies off the primary and secondary
    // charts and kappa there is left undefined.
    std::vector<int> unresolved_kappa_levels;
    bool profound = false;
    bool flat = false;
    bool smooth = false;
    bool swapped = false;
    // Highest level computed; beyond it the lift provably meets no divisor
    // at infinity when it is below max_level.
    int resolved_level = 0;
    std::vector<TraceEntry> trace;

    friend bool operator==(const LiftReport &, const LiftReport &) = default;
};

LiftReport analyze_branch(const BranchSeries &b, int max_level);

CurveCharacteristics curve_characteristics(const std::vector<BranchSeries> &branches, const Integer &degree,
                                           const std::optional<Integer> &class_number, int max_level,
                                           bool assert_nonsingular = false);

int desingularization_level(const BranchSeries &b, int cap);

} // namespace semple

#endif
