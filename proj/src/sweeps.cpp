#include <semple/sweeps.hpp>

#include <algorithm>
#include <functional>

#include <semple/exact_linalg.hpp>
#include <semple/universal_matrix.hpp>

namespace semple {

Rational random_rational(std::mt19937_64 &rng, bool nonzero)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    int a = 0;
    do {
        a = num(rng);
    } while (nonzero && a == 0);
    Rational q(a, den(rng));
    q.canonicalize();
    return q;
}

namespace {

using Task = std::function<std::vector<VerifyCase>(std::mt19937_64 &)>;

std::string params_text(const std::vector<std::string> &names, const std::vector<int> &values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += ' ' + (i < names.size() ? names[i] : "p" + std::to_string(i)) + '=' + std::to_string(values[i]);
    }
    return out;
}

VerifyCase from_lemma(const std::string &group, const std::vector<std::string> &names, const ChartSpec &chart,
                      const LemmaBResult &r)
{
    VerifyCase c;
    c.group = group;
    c.params = {chart.j, chart.top_x()};
    c.params.insert(c.params.end(), r.params.begin(), r.params.end());
    std::vector<std::string> all{"j", "m"};
    all.insert(all.end(), names.begin(), names.end());
    c.label = group + params_text(all, c.params);
    c.verdict = r.verdict;
    c.detail = r.detail;
    if (r.coefficient) {
        c.detail = "coefficient " + semple::to_string(*r.coefficient) + " of (x'')^" + std::to_string(r.power.value_or(0));
    }
    return c;
}

VerifyCase rank_case(const std::string &group, const std::vector<std::string> &names, std::vector<int> params,
                     std::size_t rank, std::size_t expected)
{
    VerifyCase c;
    c.group = group;
    c.params = std::move(params);
    c.label = group + params_text(names, c.params);
    c.verdict = rank == expected ? Verdict::Pass : Verdict::Fail;
    c.detail = "rank " + std::to_string(rank) + ", expected " + std::to_string(expected);
    return c;
}

std::vector<Rational> random_point(std::mt19937_64 &rng, std::size_t size)
{
    std::vector<Rational> p;
    for (std::size_t i = 0; i < size; ++i) {
        p.push_back(random_rational(rng));
    }
    return p;
}

// A point on I_j: x' = 0 and x'' != 0 when x'' is a coordinate.
std::vector<Rational> infinity_point(std::mt19937_64 &rng, const ChartSpec &chart, bool normalized)
{
    auto p = random_point(rng, chart.variable_count());
    if (normalized) {
        p[chart.x_index()] = 0;
        p[chart.y_index(0)] = 0;
        p[chart.y_index(1)] = 0;
    }
    p[chart.xd_index(1)] = 0;
    if (chart.top_x() >= 2) {
        p[chart.xd_index(2)] = random_rational(rng, true);
    }
    return p;
}

void add_lemma_b_tasks(std::vector<Task> &tasks, const SweepOptions &o)
{
    for (int j = 2; j <= o.max_j; ++j) {
        for (int m = 1; m <= o.max_m; ++m) {
            const ChartSpec chart = ChartSpec::secondary(j + m - 1, j);
            for (int k = j; k <= o.max_k; ++k) {
                tasks.push_back([chart, k](std::mt19937_64 &) {
                    std::vector<VerifyCase> out;
                    for (const auto &r : lemma_b_series('a', {k}, chart)) {
                        out.push_back(from_lemma("B(a)", {"k", "i"}, chart, r));
                    }
                    return out;
                });
            }
            tasks.push_back([chart, o](std::mt19937_64 &) {
                std::vector<VerifyCase> out;
                for (int i = 1; i <= o.max_i_unbounded; ++i) {
                    for (int q = 1; q <= o.max_k; ++q) {
                        out.push_back(from_lemma("B(b)", {"i", "q"}, chart, lemma_b_check('b', {i, q}, chart)));
                    }
                }
                return out;
            });
            for (int h = 0; h <= j - 1; ++h) {
                tasks.push_back([chart, h, o](std::mt19937_64 &) {
                    std::vector<VerifyCase> out;
                    for (int i = 0; i <= o.max_i_unbounded; ++i) {
                        out.push_back(from_lemma("B(c)", {"h", "i"}, chart, lemma_b_check('c', {h, i}, chart)));
                    }
                    for (const auto &r : lemma_b_series('d', {h}, chart)) {
                        out.push_back(from_lemma("B(d)", {"h", "i"}, chart, r));
                    }
                    return out;
                });
                for (int k = 0; k <= o.max_k; ++k) {
                    tasks.push_back([chart, h, k](std::mt19937_64 &) {
                        std::vector<VerifyCase> out;
                        for (const auto &r : lemma_b_series('f', {k, h}, chart)) {
                            out.push_back(from_lemma("B(f)", {"k", "h", "i"}, chart, r));
                        }
                        return out;
                    });
                }
            }
            for (int k = 0; k <= o.max_k; ++k) {
                tasks.push_back([chart, k](std::mt19937_64 &) {
                    std::vector<VerifyCase> out;
                    for (const auto &r : lemma_b_series('g', {k}, chart)) {
                        out.push_back(from_lemma("B(g)", {"k", "i"}, chart, r));
                    }
                    return out;
                });
            }
            for (int h = 1; h <= j - 1; ++h) {
                tasks.push_back([chart, h](std::mt19937_64 &rng) {
                    std::vector<VerifyCase> out;
                    for (int i = 2; i <= 4; ++i) {
                        for (int a = 0; a <= 3; ++a) {
                            for (int b = 0; a + b <= 3; ++b) {
                                out.push_back(from_lemma("B(e)", {"h", "i", "a", "b"}, chart,
                                                         lemma_b_check('e', {h, i, a, b}, chart)));
                            }
                        }
                        // One dense phi of degree 3 with random coefficients.
                        JetPolynomial phi(chart.variable_count());
                        for (int a = 0; a <= 3; ++a) {
                            for (int b = 0; a + b <= 3; ++b) {
                                phi += random_rational(rng) * JetPolynomial::monomial_xy(chart, a, b);
                            }
                        }
                        LemmaBResult r = lemma_b_check('e', {h, i}, chart, phi);
                        r.params = {h, i, -1, -1};
                        VerifyCase c = from_lemma("B(e)", {"h", "i", "a", "b"}, chart, r);
                        c.label += " phi=random";
                        out.push_back(std::move(c));
                    }
                    return out;
                });
            }
        }
    }
}

void add_matrix_tasks(std::vector<Task> &tasks, const SweepOptions &o)
{
    // Triangular block of the primary chart and its extension by d/dy.
    for (int n = 0; n <= 6; ++n) {
        tasks.push_back([n](std::mt19937_64 &rng) {
            std::vector<VerifyCase> out;
            const ChartSpec chart = ChartSpec::primary(n);
            const auto point = random_point(rng, chart.variable_count());
            std::vector<std::pair<int, int>> cols;
            for (int u = 0; u <= n; ++u) {
                cols.emplace_back(u, 0);
            }
            const auto plain = universal_matrix(point, n, chart);
            const Rational det = determinant(column_submatrix(plain, cols));
            Integer expected = 1;
            for (int k = 0; k <= n; ++k) {
                expected *= factorial(static_cast<unsigned>(k));
            }
            VerifyCase c;
            c.group = "E.triangular";
            c.params = {n};
            c.label = c.group + params_text({"n"}, c.params);
            c.verdict = det == Rational(expected) ? Verdict::Pass : Verdict::Fail;
            c.detail = "determinant " + semple::to_string(det) + ", expected " + expected.get_str();
            out.push_back(std::move(c));
            const int d = std::max(n, 1);
            const auto singular = universal_matrix(point, d, chart, MatrixVariant::WithSingularRow);
            cols.emplace_back(0, 1);
            const auto square = column_submatrix(singular, cols);
            out.push_back(rank_case("E.singular-row", {"n"}, {n}, exact_rank(square),
                                    static_cast<std::size_t>(n) + 2));
            return out;
        });
    }
    for (int n = 1; n <= 4; ++n) {
        tasks.push_back([n, o](std::mt19937_64 &rng) {
            std::vector<VerifyCase> out;
            const ChartSpec chart = ChartSpec::primary(n);
            for (int t = 0; t < o.points_per_chart; ++t) {
                const auto m = universal_matrix(random_point(rng, chart.variable_count()), n, chart);
                out.push_back(rank_case("A.primary", {"n", "trial"}, {n, t}, exact_rank(m),
                                        static_cast<std::size_t>(n) + 1));
            }
            return out;
        });
        for (int j = 2; j <= n; ++j) {
            tasks.push_back([n, j, o](std::mt19937_64 &rng) {
                std::vector<VerifyCase> out;
                const ChartSpec chart = ChartSpec::secondary(n, j);
                for (int t = 0; t < o.points_per_chart; ++t) {
                    const auto m = universal_matrix(infinity_point(rng, chart, true), n, chart);
                    out.push_back(rank_case("A.secondary", {"n", "j", "trial"}, {n, j, t}, exact_rank(m),
                                            static_cast<std::size_t>(n) + 1));
                }
                return out;
            });
        }
    }
    // Fiber systems: p points, levels n_i in 1..2, degree p - 1 + sum n_i.
    // Samples stay in the stratum where the lemma applies: a shared image
    // point has different tangents and neither point on a divisor at infinity.
    for (int p = 1; p <= 3; ++p) {
        for (int shared = 0; shared <= (p >= 2 ? 1 : 0); ++shared) {
            tasks.push_back([p, shared](std::mt19937_64 &rng) {
                std::vector<VerifyCase> out;
                std::uniform_int_distribution<int> level(1, 2);
                std::uniform_int_distribution<int> coin(0, 1);
                for (int t = 0; t < 10; ++t) {
                    std::vector<FiberPoint> pts;
                    std::vector<int> levels;
                    int sum = 0;
                    for (int i = 0; i < p; ++i) {
                        const int n = level(rng);
                        levels.push_back(n);
                        sum += n;
                        FiberPoint fp;
                        const bool secondary = !shared && n >= 2 && coin(rng) == 1;
                        fp.chart = secondary ? ChartSpec::secondary(n, 2) : ChartSpec::primary(n);
                        fp.coordinates = secondary ? infinity_point(rng, fp.chart, false)
                                                   : random_point(rng, fp.chart.variable_count());
                        pts.push_back(std::move(fp));
                    }
                    // Distinct image points, except for the one shared pair.
                    for (std::size_t i = 1; i < pts.size(); ++i) {
                        auto clash = [&] {
                            for (std::size_t k = 0; k < i; ++k) {
                                if (pts[i].coordinates[0] == pts[k].coordinates[0] &&
                                    pts[i].coordinates[1] == pts[k].coordinates[1]) {
                                    return true;
                                }
                            }
                            return false;
                        };
                        while (clash()) {
                            pts[i].coordinates[0] = random_rational(rng);
                        }
                    }
                    if (shared) {
                        // Same image point, different tangent directions.
                        pts[1].coordinates[0] = pts[0].coordinates[0];
                        pts[1].coordinates[1] = pts[0].coordinates[1];
                        while (pts[1].coordinates[2] == pts[0].coordinates[2]) {
                            pts[1].coordinates[2] = random_rational(rng);
                        }
                    }
                    const int q = shared ? p - 1 : p;
                    const int d = p - 1 + sum;
                    std::vector<int> params{p, q};
                    params.insert(params.end(), levels.begin(), levels.end());
                    params.resize(5, 0);
                    params.push_back(t);
                    const auto m = fiber_system(pts, d);
                    out.push_back(rank_case("D.fiber", {"p", "q", "n1", "n2", "n3", "trial"}, params, exact_rank(m),
                                            static_cast<std::size_t>(q + sum)));
                    if (!shared) {
                        // Primary charts only: the extra d/dy row of the first factor.
                        bool all_primary = std::all_of(pts.begin(), pts.end(), [](const FiberPoint &f) {
                            return f.chart.type == ChartType::Primary;
                        });
                        if (all_primary) {
                            const auto ms = fiber_system(pts, d, FiberVariant::FirstFactorSingular);
                            out.push_back(rank_case("F.fiber", {"p", "q", "n1", "n2", "n3", "trial"}, params,
                                                    exact_rank(ms), static_cast<std::size_t>(1 + p + sum)));
                        }
                    }
                }
                return out;
            });
        }
    }
    // The normalization used in the proof: image points at infinity on the
    // y-axis, the first factor read in the chart (y1, x1, x1', ...).
    tasks.push_back([](std::mt19937_64 &) {
        std::vector<VerifyCase> out;
        FiberPoint far{ChartSpec::primary(1), {0, 0, 2}, Placement::InfinityOnYAxis, false};
        FiberPoint near{ChartSpec::primary(2), {1, 2, Rational(-1, 3), 5}, Placement::Affine, false};
        out.push_back(rank_case("D.regression", {"case"}, {0}, exact_rank(fiber_system({far, near}, 4)), 5));
        FiberPoint vertical{ChartSpec::primary(1), {0, 0, 0}, Placement::InfinityOnYAxis, true};
        FiberPoint sloped{ChartSpec::primary(2), {0, 0, Rational(1, 2), 3}, Placement::InfinityOnYAxis, false};
        out.push_back(rank_case("D.regression", {"case"}, {1}, exact_rank(fiber_system({vertical, sloped}, 4)), 4));
        return out;
    });
}

std::vector<Task> build_tasks(const SweepOptions &o)
{
    std::vector<Task> tasks;
    if (o.lemma_b) {
        add_lemma_b_tasks(tasks, o);
    }
    if (o.matrices) {
        add_matrix_tasks(tasks, o);
    }
    return tasks;
}

std::vector<VerifyCase> run_task(const Task &task, std::uint64_t seed, std::size_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    std::mt19937_64 rng(seq);
    return task(rng);
}

std::vector<VerifyCase> flatten(std::vector<std::vector<VerifyCase>> &parts)
{
    std::vector<VerifyCase> out;
    for (auto &p : parts) {
        std::move(p.begin(), p.end(), std::back_inserter(out));
    }
    std::stable_sort(out.begin(), out.end(), [](const VerifyCase &a, const VerifyCase &b) {
        return a.group != b.group ? a.group < b.group : a.params < b.params;
    });
    return out;
}

} // namespace

std::vector<VerifyCase> run_sweep_serial(const SweepOptions &options)
{
    const auto tasks = build_tasks(options);
    std::vector<std::vector<VerifyCase>> parts(tasks.size());
    for (std::size_t t = 0; t < tasks.size(); ++t) {
        parts[t] = run_task(tasks[t], options.seed, t);
    }
    return flatten(parts);
}

std::vector<VerifyCase> run_sweep_omp(const SweepOptions &options)
{
    const auto tasks = build_tasks(options);
    std::vector<std::vector<VerifyCase>> parts(tasks.size());
    const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < count; ++t) {
        parts[static_cast<std::size_t>(t)] = run_task(tasks[static_cast<std::size_t>(t)], options.seed,
                                                      static_cast<std::size_t>(t));
    }
    return flatten(parts);
}

} // namespace semple
