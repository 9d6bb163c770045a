#ifndef SEMPLE_JET_OPERATORS_HPP
#define SEMPLE_JET_OPERATORS_HPP

// Polynomials on a chart of F(n) and the total-derivative operators P and Q.
//
// Primary chart of F(n):   x, y, y', ..., y^(n)
// Secondary chart (n, j):  x, y, y', ..., y^(j-1), x', ..., x^(m),  m = n-j+1
//
//   P = d/dx + y' d/dy + ... + y^(top) d/dy^(top-1)
//   Q = x' P + d/dy^(j-1) + x'' d/dx' + ... + x^(m) d/dx^(m-1)
//
// Both are derivations, so they are applied through their values on the
// variables.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <semple/numeric.hpp>
#include <semple/series.hpp>

namespace semple {

enum class ChartType { Primary, Secondary };

struct ChartSpec {
    int n = 0;
    ChartType type = ChartType::Primary;
    int j = 0; // secondary index, 2 <= j <= n

    static ChartSpec primary(int n);
    static ChartSpec secondary(int n, int j);

    std::size_t variable_count() const { return static_cast<std::size_t>(n) + 2; }
    // Highest y-derivative present: n (primary) or j-1 (secondary).
    int top_y() const;
    // Number of x-derivatives x', ..., x^(m): 0 on a primary chart.
    int top_x() const;

    std::size_t x_index() const { return 0; }
    // y^(t), 0 <= t <= top_y().
    std::size_t y_index(int t) const;
    // x^(t), 0 <= t <= top_x(); t = 0 is x itself.
    std::size_t xd_index(int t) const;

    std::vector<std::string> variables() const;

    friend bool operator==(const ChartSpec &, const ChartSpec &) = default;
};

class JetPolynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    JetPolynomial() = default;
    explicit JetPolynomial(std::size_t variables);

    static JetPolynomial constant(std::size_t variables, const Rational &c);
    static JetPolynomial variable(std::size_t variables, std::size_t index, int power = 1);
    // x^u y^v on the chart.
    static JetPolynomial monomial_xy(const ChartSpec &chart, int u, int v);

    std::size_t variable_count() const noexcept { return variables_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponents &e, const Rational &c);

    JetPolynomial &operator+=(const JetPolynomial &other);
    JetPolynomial &operator-=(const JetPolynomial &other);
    friend JetPolynomial operator+(JetPolynomial a, const JetPolynomial &b) { return a += b; }
    friend JetPolynomial operator-(JetPolynomial a, const JetPolynomial &b) { return a -= b; }
    friend JetPolynomial operator*(const JetPolynomial &a, const JetPolynomial &b);
    friend JetPolynomial operator*(const Rational &c, JetPolynomial a);
    friend bool operator==(const JetPolynomial &, const JetPolynomial &) = default;

    JetPolynomial partial(std::size_t index) const;
    // Sets the listed variables to zero.
    JetPolynomial vanish(const std::vector<std::size_t> &indices) const;
    bool involves(std::size_t index) const;

    Rational evaluate(const std::vector<Rational> &point) const;
    TruncatedSeries evaluate(const std::vector<TruncatedSeries> &point) const;

    std::string to_string(const ChartSpec &chart) const;

private:
    std::size_t variables_ = 0;
    Terms terms_;
};

// Throws InputError when p does not live on the chart.
JetPolynomial apply_P(const JetPolynomial &p, const ChartSpec &chart);
JetPolynomial apply_Q(const JetPolynomial &p, const ChartSpec &chart);

// Q followed by dropping every monomial with 2 deg_x + deg_x' > budget.
// Each application of Q lowers that quantity by at most one per monomial, so
// with budget = number of Q's still to come the dropped part lies in (x, x')
// at the end.
JetPolynomial apply_Q_pruned(const JetPolynomial &p, const ChartSpec &chart, int budget);
JetPolynomial prune(const JetPolynomial &p, const ChartSpec &chart, int budget);

// Reduction modulo the ideal (x, x').
JetPolynomial mod_x_xprime(const JetPolynomial &p, const ChartSpec &chart);

// f, P f, ..., P^{j-1} f, Q P^{j-1} f, ..., Q^{m} P^{j-1} f on a secondary
// chart; f, Pf, ..., P^n f on a primary chart.  f must involve only x, y.
std::vector<JetPolynomial> defining_sequence(const JetPolynomial &f, const ChartSpec &chart);

enum class Grading { Simple, Bigraded };

struct Weight {
    int first = 0;
    std::optional<int> second;

    friend bool operator==(const Weight &, const Weight &) = default;
};

// Simple: x^(t) has weight 2-t (x-jet polynomials only).  Bigraded
// (secondary charts): x^(t) -> (2-t, 1), y^(t) -> (2(j-t)-1, j-1-t).
Weight weight_of_monomial(const JetPolynomial::Exponents &e, const ChartSpec &chart, Grading g);
// Throws InputError listing offending monomials when p is not homogeneous;
// nullopt for the zero polynomial.
std::optional<Weight> weight_of(const JetPolynomial &p, const ChartSpec &chart, Grading g);

} // namespace semple

#endif
