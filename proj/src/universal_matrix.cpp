#include <semple/universal_matrix.hpp>

#include <semple/errors.hpp>

namespace semple {

std::size_t column_index(int u, int v)
{
    const int s = u + v;
    return static_cast<std::size_t>(s * (s + 1) / 2 + v);
}

std::vector<std::pair<int, int>> column_monomials(int d)
{
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s <= d; ++s) {
        for (int v = 0; v <= s; ++v) {
            out.emplace_back(s - v, v);
        }
    }
    return out;
}

namespace {

std::string column_label(int u, int v)
{
    std::string out;
    auto part = [&out](const char *name, int e) {
        if (e == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name;
        if (e > 1) {
            out += '^' + std::to_string(e);
        }
    };
    part("x", u);
    part("y", v);
    return out.empty() ? "1" : out;
}

void require_degree(int d)
{
    if (d < 0) {
        throw InputError("degree must be nonnegative");
    }
}

// The conditions of one point: defining sequence of each column monomial,
// optionally followed by its y-partial.
std::vector<std::vector<JetPolynomial>> point_rows(int d, const ChartSpec &chart, Placement placement, bool swap_xy,
                                                   bool singular_row)
{
    const auto monomials = column_monomials(d);
    const std::size_t rows = static_cast<std::size_t>(chart.n) + 1 + (singular_row ? 1 : 0);
    std::vector<std::vector<JetPolynomial>> out(rows, std::vector<JetPolynomial>(monomials.size()));
    for (std::size_t c = 0; c < monomials.size(); ++c) {
        auto [u, v] = monomials[c];
        int a = u;                                                   // power of X
        int b = placement == Placement::Affine ? v : d - u - v;      // power of Y
        if (swap_xy) {
            std::swap(a, b);
        }
        const JetPolynomial g = JetPolynomial::monomial_xy(chart, a, b);
        const auto seq = defining_sequence(g, chart);
        for (std::size_t r = 0; r < seq.size(); ++r) {
            out[r][c] = seq[r];
        }
        if (singular_row) {
            out.back()[c] = g.partial(chart.y_index(0));
        }
    }
    return out;
}

RationalMatrix evaluate_rows(const std::vector<std::vector<JetPolynomial>> &rows, const std::vector<Rational> &point)
{
    RationalMatrix out;
    for (const auto &row : rows) {
        std::vector<Rational> values;
        for (const auto &p : row) {
            values.push_back(p.evaluate(point));
        }
        out.push_back(std::move(values));
    }
    return out;
}

std::vector<std::string> labels(int d)
{
    std::vector<std::string> out;
    for (auto [u, v] : column_monomials(d)) {
        out.push_back(column_label(u, v));
    }
    return out;
}

} // namespace

UniversalMatrix symbolic_universal_matrix(int d, const ChartSpec &chart, MatrixVariant variant)
{
    require_degree(d);
    UniversalMatrix m;
    m.degree = d;
    m.column_labels = labels(d);
    m.symbolic = point_rows(d, chart, Placement::Affine, false, variant == MatrixVariant::WithSingularRow);
    return m;
}

UniversalMatrix universal_matrix(const std::vector<Rational> &point, int d, const ChartSpec &chart,
                                 MatrixVariant variant)
{
    if (point.size() != chart.variable_count()) {
        throw InputError("point has " + std::to_string(point.size()) + " coordinates, the chart needs " +
                         std::to_string(chart.variable_count()));
    }
    UniversalMatrix m = symbolic_universal_matrix(d, chart, variant);
    m.values = evaluate_rows(m.symbolic, point);
    return m;
}

RationalMatrix column_submatrix(const UniversalMatrix &m, const std::vector<std::pair<int, int>> &columns)
{
    if (!m.values) {
        throw InputError("matrix has not been evaluated");
    }
    RationalMatrix out;
    for (const auto &row : *m.values) {
        std::vector<Rational> r;
        for (auto [u, v] : columns) {
            if (u < 0 || v < 0 || u + v > m.degree) {
                throw InputError("column x^" + std::to_string(u) + " y^" + std::to_string(v) + " is out of range");
            }
            r.push_back(row[column_index(u, v)]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

UniversalMatrix fiber_system(const std::vector<FiberPoint> &points, int d, FiberVariant variant)
{
    require_degree(d);
    if (points.empty()) {
        throw InputError("fiber system needs at least one point");
    }
    int needed = static_cast<int>(points.size()) - 1;
    for (const auto &p : points) {
        needed += p.chart.n;
    }
    if (d < needed) {
        throw InputError("degree " + std::to_string(d) + " is below the bound p - 1 + sum n_i = " +
                         std::to_string(needed));
    }
    UniversalMatrix m;
    m.degree = d;
    m.column_labels = labels(d);
    m.values = RationalMatrix{};
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto &p = points[i];
        if (p.coordinates.size() != p.chart.variable_count()) {
            throw InputError("point " + std::to_string(i + 1) + " has the wrong number of coordinates");
        }
        const bool singular = variant == FiberVariant::FirstFactorSingular && i == 0;
        auto rows = point_rows(d, p.chart, p.placement, p.swap_xy, singular);
        auto values = evaluate_rows(rows, p.coordinates);
        m.values->insert(m.values->end(), values.begin(), values.end());
        m.symbolic.insert(m.symbolic.end(), rows.begin(), rows.end());
    }
    return m;
}

std::size_t exact_rank(const UniversalMatrix &m)
{
    if (!m.values) {
        throw InputError("exact rank needs an evaluated matrix; this one has symbolic entries");
    }
    return exact_rank(*m.values);
}

std::string to_csv(const UniversalMatrix &m)
{
    if (!m.values) {
        throw InputError("CSV export needs an evaluated matrix");
    }
    std::string out;
    for (std::size_t c = 0; c < m.column_labels.size(); ++c) {
        out += (c ? "," : "") + m.column_labels[c];
    }
    out += '\n';
    for (const auto &row : *m.values) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out += (c ? "," : "") + row[c].get_num().get_str() + "/" + row[c].get_den().get_str();
        }
        out += '\n';
    }
    return out;
}

} // namespace semple
