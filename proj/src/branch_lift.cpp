#include <semple/branch_lift.hpp>

#include <algorithm>
#include <numeric>

#include <semple/errors.hpp>

namespace semple {

namespace {

std::string derivative_name(const std::string &stem, int order)
{
    if (order <= 3) {
        return stem + std::string(static_cast<std::size_t>(order), '\'');
    }
    return stem + "^(" + std::to_string(order) + ")";
}

std::optional<int> centered_valuation(const TruncatedSeries &s) { return s.without_constant().valuation(); }

bool immersed(const JetState &s)
{
    return std::any_of(s.coordinates.begin(), s.coordinates.end(),
                       [](const auto &c) { return centered_valuation(c) == 1; });
}

int exponent_gcd(const TruncatedSeries &s, int g)
{
    for (const auto &[e, c] : s.coefficients()) {
        g = std::gcd(g, e);
    }
    return g;
}

[[noreturn]] void precision_failure(const JetState &s, const std::string &what, int deficit)
{
    throw PrecisionError("level " + std::to_string(s.level + 1) + ": " + what +
                             "; raise the truncation to at least " +
                             std::to_string(s.source_truncation + std::max(deficit, 1)),
                         s.source_truncation + std::max(deficit, 1));
}

TraceEntry trace_entry(const JetState &s)
{
    TraceEntry e;
    e.level = s.level;
    e.chart = s.chart_name();
    e.independent = s.names[s.independent];
    e.newest = s.names[s.newest];
    e.independent_valuation = centered_valuation(s.coordinates[s.independent]);
    e.newest_valuation = s.coordinates[s.newest].valuation();
    e.immersed = immersed(s);
    return e;
}

} // namespace

int JetState::precision() const
{
    int p = source_truncation;
    for (const auto &c : coordinates) {
        p = std::min(p, c.precision());
    }
    return p;
}

std::string JetState::chart_name() const
{
    switch (chart) {
    case ChartKind::Primary:
        return swapped ? "primary-swapped" : "primary";
    case ChartKind::Secondary:
        return "secondary(" + std::to_string(secondary_index) + ")";
    case ChartKind::MultiInfinity:
        return "multi-infinity";
    }
    return {};
}

JetState initial_state(const BranchSeries &b)
{
    JetState s;
    s.source_truncation = std::min(b.x.precision(), b.y.precision());
    if (s.source_truncation < 2) {
        throw InputError("branch truncation must be at least 2");
    }
    TruncatedSeries x = b.x.without_constant();
    TruncatedSeries y = b.y.without_constant();
    if (x.coefficients().empty() && y.coefficients().empty()) {
        throw InputError("both branch series vanish below the truncation");
    }
    for (const auto &[e, c] : x.coefficients()) {
        if (e < 0) {
            throw InputError("branch series must not have negative exponents");
        }
    }
    for (const auto &[e, c] : y.coefficients()) {
        if (e < 0) {
            throw InputError("branch series must not have negative exponents");
        }
    }
    const int vx = x.valuation_bound();
    const int vy = y.valuation_bound();
    if (!x.valuation() && vx <= vy) {
        throw PrecisionError("cannot order the valuations of x and y", vy + 1);
    }
    if (exponent_gcd(y, exponent_gcd(x, 0)) != 1) {
        if (x.coefficients().empty() || y.coefficients().empty()) {
            // A single known monomial says nothing about primitivity yet.
            throw PrecisionError("one coordinate vanishes below the truncation", s.source_truncation + 1);
        }
        throw InputError("parametrization is not primitive (exponents share a common factor below the truncation)");
    }
    s.swapped = vy < vx;
    s.coordinates = {x, y};
    s.names = {"x", "y"};
    s.independent = s.swapped ? 1 : 0;
    s.newest = s.swapped ? 0 : 1;
    return s;
}

JetState lift_step(const JetState &s)
{
    JetState next = s;
    const TruncatedSeries &ind = s.coordinates[s.independent];
    const TruncatedSeries &dep = s.coordinates[s.newest];
    const TruncatedSeries dind = ind.derivative();
    const TruncatedSeries ddep = dep.derivative();
    if (!dind.valuation()) {
        precision_failure(s, "derivative of the independent coordinate " + s.names[s.independent] +
                                 " vanishes below the truncation", 1 - dind.precision() + 1);
    }
    const TruncatedSeries ratio = divide(ddep, dind, "independent coordinate");
    const auto rv = ratio.valuation();
    if (!rv && ratio.precision() <= 0) {
        precision_failure(s, "sign of the valuation of d" + s.names[s.newest] + "/d" + s.names[s.independent] +
                                 " is not determined", 1 - ratio.precision());
    }
    next.level = s.level + 1;
    if (!rv || *rv >= 0) {
        next.coordinates.push_back(ratio);
        std::string stem;
        int order = 0;
        if (s.chart == ChartKind::Primary) {
            stem = s.swapped ? "x" : "y";
            order = next.level;
        } else if (s.chart == ChartKind::Secondary) {
            stem = s.swapped ? "y" : "x";
            order = next.level - s.secondary_index + 1;
        } else {
            stem = "w";
            order = next.level;
        }
        next.names.push_back(derivative_name(stem, order));
        next.newest = next.coordinates.size() - 1;
        return next;
    }
    if (!ddep.valuation()) {
        precision_failure(s, "inverting the chart needs more terms", 1);
    }
    TruncatedSeries inverted = divide(dind, ddep, "newest coordinate");
    const auto iv = inverted.valuation();
    if (!iv) {
        precision_failure(s, "multiplicity at the divisor at infinity is not determined", -*rv - inverted.precision() + 1);
    }
    next.coordinates.push_back(inverted);
    next.independent = s.newest;
    next.newest = next.coordinates.size() - 1;
    next.hits.push_back({next.level, *iv});
    if (s.chart == ChartKind::Primary) {
        next.chart = ChartKind::Secondary;
        next.secondary_index = next.level;
        next.names.push_back(derivative_name(s.swapped ? "y" : "x", 1));
    } else {
        next.chart = ChartKind::MultiInfinity;
        next.names.push_back(derivative_name("w", next.level));
    }
    return next;
}

namespace {

// Lifts until max_level, stopping early once the independent coordinate is
// a uniformizer (no further divisor can be met) and no flat-cusp check is
// pending.
std::vector<JetState> lift_sequence(const BranchSeries &b, int max_level)
{
    if (max_level < 0) {
        throw InputError("maximum level must be nonnegative");
    }
    std::vector<JetState> states{initial_state(b)};
    while (states.back().level < max_level) {
        const JetState &s = states.back();
        const bool uniformized = centered_valuation(s.coordinates[s.independent]) == 1;
        const bool flat_pending = s.chart == ChartKind::Secondary && s.level == s.secondary_index;
        if (uniformized && !flat_pending) {
            break;
        }
        states.push_back(lift_step(s));
    }
    return states;
}

} // namespace

LiftReport analyze_branch(const BranchSeries &b, int max_level)
{
    const std::vector<JetState> states = lift_sequence(b, max_level);
    const JetState &last = states.back();
    LiftReport report;
    report.swapped = states.front().swapped;
    report.resolved_level = last.level;
    const auto &x = states.front().coordinates[0];
    const auto &y = states.front().coordinates[1];
    report.smooth = std::min(x.valuation_bound(), y.valuation_bound()) == 1;
    for (const auto &s : states) {
        report.trace.push_back(trace_entry(s));
        if (s.chart == ChartKind::Secondary && s.level == s.secondary_index + 1) {
            const TruncatedSeries &xpp = s.coordinates[s.newest];
            if (!xpp.valuation() && xpp.precision() <= 0) {
                precision_failure(s, "value of the second x-derivative is not determined", 1 - xpp.precision());
            }
            report.flat = xpp.valuation_bound() > 0;
        }
    }
    report.infinity_hits = last.hits;
    for (std::size_t i = 0; i < last.hits.size(); ++i) {
        if (i == 0) {
            report.kappa[last.hits[i].level] = last.hits[i].multiplicity;
        } else {
            report.unresolved_kappa_levels.push_back(last.hits[i].level);
        }
    }
    report.profound = last.hits.size() >= 2;
    return report;
}

CurveCharacteristics curve_characteristics(const std::vector<BranchSeries> &branches, const Integer &degree,
                                           const std::optional<Integer> &class_number, int max_level,
                                           bool assert_nonsingular)
{
    if (degree < 1) {
        throw InputError("curve degree must be at least 1");
    }
    CurveCharacteristics c;
    c.degree = degree;
    bool singular = false;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        const LiftReport r = analyze_branch(branches[i], max_level);
        if (!r.unresolved_kappa_levels.empty()) {
            throw InputError("branch " + std::to_string(i + 1) + " meets two divisors at infinity at level " +
                             std::to_string(r.unresolved_kappa_levels.front()) +
                             "; kappa is not defined off the primary and secondary charts");
        }
        singular = singular || !r.smooth;
        for (const auto &[j, k] : r.kappa) {
            c.kappa[j] += k;
        }
        c.has_profound_cusp = c.has_profound_cusp || r.profound;
        c.has_flat_cusp = c.has_flat_cusp || r.flat;
    }
    if (assert_nonsingular && singular) {
        throw InputError("curve is asserted nonsingular but has a singular branch");
    }
    if (class_number) {
        c.class_number = *class_number;
    } else if (assert_nonsingular) {
        c.class_number = degree * (degree - 1);
    } else {
        throw InputError("the class of a curve is required unless it is asserted nonsingular");
    }
    return c;
}

int desingularization_level(const BranchSeries &b, int cap)
{
    const std::vector<JetState> states = lift_sequence(b, cap);
    const auto &hits = states.back().hits;
    for (const auto &s : states) {
        const bool later_hit =
            std::any_of(hits.begin(), hits.end(), [&](const InfinityHit &h) { return h.level > s.level; });
        if (immersed(s) && !later_hit) {
            return s.level;
        }
    }
    throw InputError("branch is not desingularized by level " + std::to_string(cap));
}

} // namespace semple
