#include <semple/jet_operators.hpp>

#include <algorithm>

#include <semple/errors.hpp>

namespace semple {

ChartSpec ChartSpec::primary(int n)
{
    if (n < 0) {
        throw InputError("chart level must be nonnegative");
    }
    return {n, ChartType::Primary, 0};
}

ChartSpec ChartSpec::secondary(int n, int j)
{
    if (j < 2 || j > n) {
        throw InputError("secondary chart index j=" + std::to_string(j) + " outside 2.." + std::to_string(n));
    }
    return {n, ChartType::Secondary, j};
}

int ChartSpec::top_y() const { return type == ChartType::Primary ? n : j - 1; }

int ChartSpec::top_x() const { return type == ChartType::Primary ? 0 : n - j + 1; }

std::size_t ChartSpec::y_index(int t) const
{
    if (t < 0 || t > top_y()) {
        throw InputError("y^(" + std::to_string(t) + ") is not a chart variable");
    }
    return static_cast<std::size_t>(t) + 1;
}

std::size_t ChartSpec::xd_index(int t) const
{
    if (t == 0) {
        return 0;
    }
    if (t < 0 || t > top_x()) {
        throw InputError("x^(" + std::to_string(t) + ") is not a chart variable");
    }
    return static_cast<std::size_t>(top_y() + 1 + t);
}

namespace {

std::string jet_name(char stem, int t)
{
    if (t <= 2) {
        return std::string(1, stem) + std::string(static_cast<std::size_t>(t), '\'');
    }
    return std::string(1, stem) + "^(" + std::to_string(t) + ")";
}

} // namespace

std::vector<std::string> ChartSpec::variables() const
{
    std::vector<std::string> out{"x"};
    for (int t = 0; t <= top_y(); ++t) {
        out.push_back(jet_name('y', t));
    }
    for (int t = 1; t <= top_x(); ++t) {
        out.push_back(jet_name('x', t));
    }
    return out;
}

JetPolynomial::JetPolynomial(std::size_t variables) : variables_(variables) {}

JetPolynomial JetPolynomial::constant(std::size_t variables, const Rational &c)
{
    JetPolynomial p(variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

JetPolynomial JetPolynomial::variable(std::size_t variables, std::size_t index, int power)
{
    if (index >= variables) {
        throw InputError("variable index out of range");
    }
    JetPolynomial p(variables);
    Exponents e(variables, 0);
    e[index] = power;
    p.add_term(e, 1);
    return p;
}

JetPolynomial JetPolynomial::monomial_xy(const ChartSpec &chart, int u, int v)
{
    JetPolynomial p(chart.variable_count());
    Exponents e(chart.variable_count(), 0);
    e[chart.x_index()] = u;
    e[chart.y_index(0)] = v;
    p.add_term(e, 1);
    return p;
}

void JetPolynomial::add_term(const Exponents &e, const Rational &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

JetPolynomial &JetPolynomial::operator+=(const JetPolynomial &other)
{
    if (variables_ == 0) {
        variables_ = other.variables_;
    }
    if (other.variables_ != variables_ && !other.is_zero()) {
        throw InputError("polynomials live on different charts");
    }
    for (const auto &[e, c] : other.terms_) {
        add_term(e, c);
    }
    return *this;
}

JetPolynomial &JetPolynomial::operator-=(const JetPolynomial &other) { return *this += Rational(-1) * other; }

JetPolynomial operator*(const Rational &c, JetPolynomial a)
{
    if (c == 0) {
        a.terms_.clear();
        return a;
    }
    for (auto &[e, v] : a.terms_) {
        v *= c;
    }
    return a;
}

JetPolynomial operator*(const JetPolynomial &a, const JetPolynomial &b)
{
    if (a.variables_ != b.variables_) {
        throw InputError("polynomials live on different charts");
    }
    JetPolynomial out(a.variables_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            JetPolynomial::Exponents e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

JetPolynomial JetPolynomial::partial(std::size_t index) const
{
    JetPolynomial out(variables_);
    for (const auto &[e, c] : terms_) {
        if (e[index] == 0) {
            continue;
        }
        Exponents d = e;
        d[index] -= 1;
        out.add_term(d, c * e[index]);
    }
    return out;
}

JetPolynomial JetPolynomial::vanish(const std::vector<std::size_t> &indices) const
{
    JetPolynomial out(variables_);
    for (const auto &[e, c] : terms_) {
        if (std::none_of(indices.begin(), indices.end(), [&e](std::size_t i) { return e[i] > 0; })) {
            out.terms_.emplace(e, c);
        }
    }
    return out;
}

bool JetPolynomial::involves(std::size_t index) const
{
    return std::any_of(terms_.begin(), terms_.end(), [index](const auto &t) { return t.first[index] > 0; });
}

Rational JetPolynomial::evaluate(const std::vector<Rational> &point) const
{
    if (point.size() != variables_) {
        throw InputError("point has " + std::to_string(point.size()) + " coordinates, chart has " +
                         std::to_string(variables_));
    }
    Rational total = 0;
    for (const auto &[e, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < e.size() && v != 0; ++i) {
            for (int k = 0; k < e[i]; ++k) {
                v *= point[i];
            }
        }
        total += v;
    }
    return total;
}

TruncatedSeries JetPolynomial::evaluate(const std::vector<TruncatedSeries> &point) const
{
    if (point.size() != variables_) {
        throw InputError("series point does not match the chart");
    }
    int precision = 1 << 20;
    for (const auto &s : point) {
        precision = std::min(precision, s.precision());
    }
    TruncatedSeries total({}, precision);
    for (const auto &[e, c] : terms_) {
        TruncatedSeries v({{0, c}}, 1 << 20);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (int k = 0; k < e[i]; ++k) {
                v = v * point[i];
            }
        }
        total = total + v;
    }
    return total;
}

std::string JetPolynomial::to_string(const ChartSpec &chart) const
{
    if (terms_.empty()) {
        return "0";
    }
    const auto names = chart.variables();
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += '*';
            }
            mono += names[i];
            if (e[i] > 1) {
                mono += '^' + std::to_string(e[i]);
            }
        }
        const Rational mag = abs(c);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mono.empty()) {
            out += semple::to_string(mag);
        } else {
            out += mag == 1 ? mono : semple::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

namespace {

// Value of a derivation on each variable: a monomial with coefficient 1,
// or nothing when the variable is killed.
using Images = std::vector<std::optional<JetPolynomial::Exponents>>;

JetPolynomial::Exponents unit(const ChartSpec &c, std::initializer_list<std::size_t> vars)
{
    JetPolynomial::Exponents e(c.variable_count(), 0);
    for (auto v : vars) {
        e[v] += 1;
    }
    return e;
}

Images p_images(const ChartSpec &c)
{
    Images im(c.variable_count());
    im[c.x_index()] = unit(c, {});
    for (int t = 0; t < c.top_y(); ++t) {
        im[c.y_index(t)] = unit(c, {c.y_index(t + 1)});
    }
    return im;
}

Images q_images(const ChartSpec &c)
{
    Images im(c.variable_count());
    const std::size_t xp = c.xd_index(1);
    im[c.x_index()] = unit(c, {xp});
    for (int t = 0; t < c.top_y(); ++t) {
        im[c.y_index(t)] = unit(c, {xp, c.y_index(t + 1)});
    }
    im[c.y_index(c.top_y())] = unit(c, {});
    for (int t = 1; t < c.top_x(); ++t) {
        im[c.xd_index(t)] = unit(c, {c.xd_index(t + 1)});
    }
    return im;
}

int mu(const JetPolynomial::Exponents &e, const ChartSpec &c)
{
    return 2 * e[c.x_index()] + (c.top_x() >= 1 ? e[c.xd_index(1)] : 0);
}

JetPolynomial apply_derivation(const JetPolynomial &p, const ChartSpec &chart, const Images &images,
                               std::optional<int> budget)
{
    if (p.variable_count() != chart.variable_count() && !p.is_zero()) {
        throw InputError("polynomial does not live on the chart");
    }
    JetPolynomial out(chart.variable_count());
    for (const auto &[e, c] : p.terms()) {
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0 || !images[v]) {
                continue;
            }
            JetPolynomial::Exponents ne = e;
            ne[v] -= 1;
            const auto &img = *images[v];
            for (std::size_t k = 0; k < ne.size(); ++k) {
                ne[k] += img[k];
            }
            if (budget && mu(ne, chart) > *budget) {
                continue;
            }
            out.add_term(ne, c * e[v]);
        }
    }
    return out;
}

void require_secondary(const ChartSpec &chart, const char *op)
{
    if (chart.type != ChartType::Secondary) {
        throw InputError(std::string(op) + " is defined on secondary charts");
    }
}

} // namespace

JetPolynomial apply_P(const JetPolynomial &p, const ChartSpec &chart)
{
    return apply_derivation(p, chart, p_images(chart), std::nullopt);
}

JetPolynomial apply_Q(const JetPolynomial &p, const ChartSpec &chart)
{
    require_secondary(chart, "Q");
    return apply_derivation(p, chart, q_images(chart), std::nullopt);
}

JetPolynomial apply_Q_pruned(const JetPolynomial &p, const ChartSpec &chart, int budget)
{
    require_secondary(chart, "Q");
    return apply_derivation(p, chart, q_images(chart), budget);
}

JetPolynomial prune(const JetPolynomial &p, const ChartSpec &chart, int budget)
{
    JetPolynomial out(chart.variable_count());
    for (const auto &[e, c] : p.terms()) {
        if (mu(e, chart) <= budget) {
            out.add_term(e, c);
        }
    }
    return out;
}

JetPolynomial mod_x_xprime(const JetPolynomial &p, const ChartSpec &chart)
{
    require_secondary(chart, "reduction modulo (x, x')");
    return p.vanish({chart.x_index(), chart.xd_index(1)});
}

std::vector<JetPolynomial> defining_sequence(const JetPolynomial &f, const ChartSpec &chart)
{
    for (std::size_t v = 2; v < chart.variable_count(); ++v) {
        if (f.involves(v)) {
            throw InputError("defining sequences start from a polynomial in x and y");
        }
    }
    std::vector<JetPolynomial> seq{f};
    const int p_steps = chart.type == ChartType::Primary ? chart.n : chart.j - 1;
    for (int i = 0; i < p_steps; ++i) {
        seq.push_back(apply_P(seq.back(), chart));
    }
    for (int i = 0; i < chart.top_x(); ++i) {
        seq.push_back(apply_Q(seq.back(), chart));
    }
    return seq;
}

Weight weight_of_monomial(const JetPolynomial::Exponents &e, const ChartSpec &chart, Grading g)
{
    Weight w;
    if (g == Grading::Bigraded) {
        require_secondary(chart, "the bigrading");
        w.second = 0;
    }
    for (int t = 0; t <= chart.top_x(); ++t) {
        const int power = e[chart.xd_index(t)];
        w.first += power * (2 - t);
        if (w.second) {
            *w.second += power;
        }
    }
    for (int t = 0; t <= chart.top_y(); ++t) {
        const int power = e[chart.y_index(t)];
        if (power == 0) {
            continue;
        }
        if (g == Grading::Simple) {
            throw InputError("the simple weight is defined on polynomials in x, x', x'', ... only");
        }
        w.first += power * (2 * (chart.j - t) - 1);
        *w.second += power * (chart.j - 1 - t);
    }
    return w;
}

std::optional<Weight> weight_of(const JetPolynomial &p, const ChartSpec &chart, Grading g)
{
    std::optional<Weight> w;
    std::vector<std::string> offending;
    for (const auto &[e, c] : p.terms()) {
        const Weight m = weight_of_monomial(e, chart, g);
        if (!w) {
            w = m;
        } else if (m != *w) {
            JetPolynomial single(p.variable_count());
            single.add_term(e, c);
            offending.push_back(single.to_string(chart));
        }
    }
    if (!offending.empty()) {
        std::string list;
        for (const auto &s : offending) {
            list += (list.empty() ? "" : ", ") + s;
        }
        throw InputError("polynomial is not homogeneous; off-weight monomials: " + list);
    }
    return w;
}

} // namespace semple
