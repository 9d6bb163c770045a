#include <doctest.h>

#include <algorithm>
#include <numeric>

#include <semple/errors.hpp>
#include <semple/exact_linalg.hpp>
#include <semple/kernels.hpp>
#include <semple/sweeps.hpp>
#include <semple/universal_matrix.hpp>

#include "support.hpp"

using namespace semple;

namespace {

Integer factorial(int k)
{
    Integer f = 1;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

// Sum over permutations; fine up to 7x7.
Rational leibniz_determinant(const RationalMatrix &m)
{
    std::vector<std::size_t> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a) {
            for (std::size_t b = a + 1; b < perm.size(); ++b) {
                inversions += perm[a] > perm[b] ? 1 : 0;
            }
        }
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t r = 0; r < perm.size(); ++r) {
            term *= m[r][perm[r]];
        }
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<Rational> random_point(std::mt19937_64 &g, const ChartSpec &c)
{
    std::vector<Rational> p;
    for (std::size_t i = 0; i < c.variable_count(); ++i) {
        p.push_back(random_rational(g));
    }
    return p;
}

std::vector<std::pair<int, int>> x_columns(int n)
{
    std::vector<std::pair<int, int>> cols;
    for (int u = 0; u <= n; ++u) {
        cols.emplace_back(u, 0);
    }
    return cols;
}

IntegerMatrix random_integer_matrix(std::mt19937_64 &g, std::size_t rows, std::size_t cols, int zero_rows)
{
    std::uniform_int_distribution<int> entry(-20, 20);
    IntegerMatrix m(rows, std::vector<Integer>(cols));
    for (auto &row : m) {
        for (auto &e : row) {
            e = entry(g);
        }
    }
    // Dependent rows: copies of sums of earlier ones.
    for (int z = 0; z < zero_rows && rows > 2; ++z) {
        auto &target = m[rows - 1 - static_cast<std::size_t>(z)];
        for (std::size_t c = 0; c < cols; ++c) {
            target[c] = m[0][c] - 3 * m[1][c];
        }
    }
    return m;
}

} // namespace

TEST_CASE("triangular x-column block")
{
    auto g = test::rng(21);
    for (int n = 0; n <= 6; ++n) {
        CAPTURE(n);
        const auto c = ChartSpec::primary(n);
        for (int trial = 0; trial < 5; ++trial) {
            const auto point = random_point(g, c);
            const auto block = column_submatrix(universal_matrix(point, n, c), x_columns(n));
            // row k is the k-th derivative of x^u: u!/(u-k)! x^(u-k)
            for (int k = 0; k <= n; ++k) {
                for (int u = 0; u <= n; ++u) {
                    Rational expected = 0;
                    if (u >= k) {
                        Rational power = 1;
                        for (int e = 0; e < u - k; ++e) {
                            power *= point[0];
                        }
                        expected = Rational(factorial(u) / factorial(u - k)) * power;
                    }
                    CHECK(block[static_cast<std::size_t>(k)][static_cast<std::size_t>(u)] == expected);
                }
            }
            Integer prod = 1;
            for (int k = 0; k <= n; ++k) {
                prod *= factorial(k);
            }
            CHECK(determinant(block) == Rational(prod));
            CHECK(leibniz_determinant(block) == Rational(prod));
        }
    }
}

TEST_CASE("exact_rank examples")
{
    const auto c3 = ChartSpec::primary(3);
    auto g = test::rng(22);
    const auto m = universal_matrix(random_point(g, c3), 3, c3);
    CHECK(exact_rank(column_submatrix(m, x_columns(3))) == 4);
    CHECK(exact_rank(m) == 4);

    CHECK(exact_rank(RationalMatrix(3, std::vector<Rational>(5, Rational(0)))) == 0);
    CHECK(exact_rank(RationalMatrix{}) == 0);

    const auto c2 = ChartSpec::primary(2);
    for (int trial = 0; trial < 20; ++trial) {
        auto cols = x_columns(2);
        cols.emplace_back(0, 1);
        const auto singular = universal_matrix(random_point(g, c2), 2, c2, MatrixVariant::WithSingularRow);
        CHECK(singular.values->size() == 4);
        const auto square = column_submatrix(singular, cols);
        CHECK(exact_rank(square) == 4);
        CHECK(determinant(square) == leibniz_determinant(square));
        CHECK(determinant(square) != 0);
    }

    const auto symbolic = symbolic_universal_matrix(3, c3);
    CHECK_FALSE(symbolic.values.has_value());
    CHECK_THROWS_AS(exact_rank(symbolic), InputError);
    CHECK_THROWS_AS(to_csv(symbolic), InputError);
}

TEST_CASE("matrix shape and columns")
{
    for (int d = 0; d <= 8; ++d) {
        const auto cols = column_monomials(d);
        CHECK(cols.size() == static_cast<std::size_t>((d + 1) * (d + 2) / 2));
        for (std::size_t i = 0; i < cols.size(); ++i) {
            CHECK(column_index(cols[i].first, cols[i].second) == i);
        }
    }
    const auto c = ChartSpec::secondary(4, 2);
    const auto m = symbolic_universal_matrix(5, c);
    CHECK(m.symbolic.size() == 5);
    CHECK(m.column_labels.size() == 21);
    CHECK(m.column_labels[0] == "1");
    CHECK(m.column_labels[column_index(2, 1)] == "x^2*y");
    CHECK(symbolic_universal_matrix(5, c, MatrixVariant::WithSingularRow).symbolic.size() == 6);
    CHECK_THROWS_AS(universal_matrix({1, 2}, 3, c), InputError);
}

TEST_CASE("CSV export")
{
    const auto c = ChartSpec::primary(1);
    const auto m = universal_matrix({Rational(1, 2), 3, Rational(-2, 3)}, 1, c);
    CHECK(to_csv(m) == "1,x,y\n1/1,1/2,3/1\n0/1,1/1,-2/3\n");
}

TEST_CASE("fiber systems")
{
    auto g = test::rng(23);
    const auto c1 = ChartSpec::primary(1);

    // p = 1 is a single universal matrix
    const auto point = random_point(g, ChartSpec::primary(2));
    const auto single = fiber_system({{ChartSpec::primary(2), point, Placement::Affine, false}}, 3);
    CHECK(single.values == universal_matrix(point, 3, ChartSpec::primary(2)).values);

    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_point(g, c1);
        auto b = random_point(g, c1);
        while (b[0] == a[0] && b[1] == a[1]) {
            b[0] += 1;
        }
        const auto distinct = fiber_system({{c1, a, Placement::Affine, false}, {c1, b, Placement::Affine, false}}, 3);
        CHECK(distinct.values->size() == 4);
        CHECK(exact_rank(distinct) == 4);

        auto shared = a;
        shared[2] += 1 + random_rational(g) * random_rational(g);
        if (shared[2] == a[2]) {
            shared[2] += 1;
        }
        const auto same = fiber_system({{c1, a, Placement::Affine, false}, {c1, shared, Placement::Affine, false}}, 3);
        CHECK(exact_rank(same) >= 3);
    }

    CHECK_THROWS_AS(fiber_system({{c1, {0, 0, 0}, Placement::Affine, false}, {c1, {1, 1, 1}, Placement::Affine, false}}, 2),
                    InputError);
    try {
        (void)fiber_system({{ChartSpec::primary(2), {0, 0, 0, 0}, Placement::Affine, false},
                            {c1, {1, 1, 1}, Placement::Affine, false}},
                           3);
        FAIL("degree below the bound accepted");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("= 4") != std::string::npos);
    }
    CHECK_THROWS_AS(fiber_system({}, 3), InputError);
}

TEST_CASE("Bareiss kernels")
{
    auto g = test::rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + static_cast<std::size_t>(trial % 7);
        const std::size_t cols = 1 + static_cast<std::size_t>((trial / 7) % 7);
        const auto m = random_integer_matrix(g, rows, cols, trial % 3);
        const auto s = kernels::bareiss_serial(m);
        const auto p = kernels::bareiss_omp(m);
        CHECK(s.rank == p.rank);
        CHECK(s.determinant == p.determinant);
        if (rows == cols) {
            RationalMatrix q(rows, std::vector<Rational>(cols));
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    q[r][c] = Rational(m[r][c]);
                }
            }
            CHECK(Rational(s.determinant) == leibniz_determinant(q));
        }
    }
    // a large one, where the parallel row loop actually splits
    const auto big = random_integer_matrix(g, 60, 60, 5);
    const auto s = kernels::bareiss_serial(big);
    const auto p = kernels::bareiss_omp(big);
    CHECK(s.rank == 55);
    CHECK(p.rank == 55);
    CHECK(p.determinant == 0);
}

TEST_CASE("linear solves")
{
    const RationalMatrix a{{1, 2}, {3, 4}, {4, 6}};
    const auto x = solve_unique(a, {5, 11, 16});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 1);
    CHECK((*x)[1] == 2);
    CHECK_FALSE(solve_unique(a, {5, 11, 17}).has_value());
    CHECK_FALSE(solve_unique({{1, 2}, {2, 4}}, {1, 2}).has_value());

    const RationalMatrix sq{{2, 1}, {1, 1}};
    const auto inv = inverse(sq);
    REQUIRE(inv.has_value());
    CHECK(*inv == RationalMatrix{{1, -1}, {-1, 2}});
    CHECK_FALSE(inverse({{1, 2}, {2, 4}}).has_value());
}

TEST_CASE("serial and parallel sweeps agree")
{
    SweepOptions options;
    const auto serial = run_sweep_serial(options);
    const auto parallel = run_sweep_omp(options);
    REQUIRE(serial.size() == parallel.size());
    std::size_t failures = 0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].group == parallel[i].group);
        CHECK(serial[i].params == parallel[i].params);
        CHECK(serial[i].label == parallel[i].label);
        CHECK(serial[i].verdict == parallel[i].verdict);
        CHECK(serial[i].detail == parallel[i].detail);
        failures += serial[i].verdict == Verdict::Fail ? 1 : 0;
    }
    CHECK(failures == 0);

    options.seed += 1;
    // chart kinds are drawn at random, so only the verdicts are comparable
    for (const auto &c : run_sweep_omp(options)) {
        CHECK_MESSAGE(c.verdict != Verdict::Fail, c.group << c.label);
    }
}
