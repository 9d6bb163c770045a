#ifndef SEMPLE_UNIVERSAL_MATRIX_HPP
#define SEMPLE_UNIVERSAL_MATRIX_HPP

// Matrices of the linear conditions that the lift of a point of F(n) imposes
// on the coefficients a_uv of the universal curve sum a_uv x^u y^v = 0.

#include <optional>
#include <string>
#include <vector>

#include <semple/exact_linalg.hpp>
#include <semple/jet_operators.hpp>

namespace semple {

enum class MatrixVariant { Plain, WithSingularRow };

struct UniversalMatrix {
    int degree = 0;
    // Columns x^u y^v, u+v <= d, ordered by (u+v, v).
    std::vector<std::string> column_labels;
    // Entries as polynomials on the chart(s); empty once only values are kept.
    std::vector<std::vector<JetPolynomial>> symbolic;
    std::optional<RationalMatrix> values;
};

// Column index of x^u y^v.
std::size_t column_index(int u, int v);
std::vector<std::pair<int, int>> column_monomials(int d);

UniversalMatrix symbolic_universal_matrix(int d, const ChartSpec &chart, MatrixVariant variant = MatrixVariant::Plain);
UniversalMatrix universal_matrix(const std::vector<Rational> &point, int d, const ChartSpec &chart,
                                 MatrixVariant variant = MatrixVariant::Plain);

// Columns picked by (u, v); requires values.
RationalMatrix column_submatrix(const UniversalMatrix &m, const std::vector<std::pair<int, int>> &columns);

enum class Placement {
    Affine,
    // Image point at infinity on the y-axis; local coordinates x/y, 1/y, so
    // the column x^u y^v reads X^u Y^(d-u-v).
    InfinityOnYAxis,
};

struct FiberPoint {
    ChartSpec chart;
    std::vector<Rational> coordinates;
    Placement placement = Placement::Affine;
    // Chart built on (Y, X) instead of (X, Y).
    bool swap_xy = false;
};

enum class FiberVariant { Plain, FirstFactorSingular };

// Stacked conditions of several points; needs d >= p - 1 + sum n_i.
UniversalMatrix fiber_system(const std::vector<FiberPoint> &points, int d,
                             FiberVariant variant = FiberVariant::Plain);

// Throws InputError on an unevaluated matrix.
std::size_t exact_rank(const UniversalMatrix &m);

// Header row of column labels, then entries as "num/den".
std::string to_csv(const UniversalMatrix &m);

} // namespace semple

#endif
