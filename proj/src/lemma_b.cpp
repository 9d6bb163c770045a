#include <semple/lemma_b.hpp>

#include <semple/errors.hpp>

namespace semple {

namespace {

JetPolynomial x_power(const ChartSpec &c, int k) { return JetPolynomial::monomial_xy(c, k, 0); }

JetPolynomial p_power(JetPolynomial f, const ChartSpec &c, int h)
{
    for (int i = 0; i < h; ++i) {
        f = apply_P(f, c);
    }
    return f;
}

JetPolynomial q_power(JetPolynomial f, const ChartSpec &c, int i)
{
    for (int s = 0; s < i; ++s) {
        f = apply_Q(f, c);
    }
    return f;
}

// Q^i f mod (x, x') for i = 0..max_i.
std::vector<JetPolynomial> q_residues(const JetPolynomial &f, const ChartSpec &c, int max_i)
{
    std::vector<JetPolynomial> out;
    JetPolynomial cur = prune(f, c, max_i);
    out.push_back(mod_x_xprime(cur, c));
    for (int i = 1; i <= max_i; ++i) {
        cur = apply_Q_pruned(cur, c, max_i - i);
        out.push_back(mod_x_xprime(cur, c));
    }
    return out;
}

JetPolynomial at_x_zero(const JetPolynomial &p, const ChartSpec &c) { return p.vanish({c.x_index()}); }

Rational inverse_factorial(int b) { return Rational(1, factorial(static_cast<unsigned>(b))); }

// Claim: zero below the bound, a positive multiple of (x'')^power at it.
void classify(LemmaBResult &r, const JetPolynomial &residue, int i, int bound, int power, const ChartSpec &c)
{
    if (i < bound) {
        r.verdict = residue.is_zero() ? Verdict::Pass : Verdict::Fail;
        if (!residue.is_zero()) {
            r.detail = "expected 0 modulo (x, x'), got " + residue.to_string(c);
        }
        return;
    }
    r.power = power;
    if (power > 0 && c.top_x() < 2) {
        r.verdict = Verdict::Skip;
        r.detail = "x'' is not a coordinate of this chart (m = " + std::to_string(c.top_x()) + ")";
        return;
    }
    JetPolynomial::Exponents target(c.variable_count(), 0);
    if (power > 0) {
        target[c.xd_index(2)] = power;
    }
    const auto &terms = residue.terms();
    if (terms.size() == 1 && terms.begin()->first == target && terms.begin()->second > 0) {
        r.verdict = Verdict::Pass;
        r.coefficient = terms.begin()->second;
        return;
    }
    r.verdict = Verdict::Fail;
    if (terms.size() == 1 && terms.begin()->first == target) {
        r.coefficient = terms.begin()->second;
    }
    r.detail = "expected a positive multiple of (x'')^" + std::to_string(power) + ", got " + residue.to_string(c);
}

void require(bool ok, char statement, const std::string &why)
{
    if (!ok) {
        throw InputError(std::string("statement (") + statement + "): " + why);
    }
}

void require_arity(const std::vector<int> &params, std::size_t n, char statement)
{
    require(params.size() == n, statement, "expected " + std::to_string(n) + " parameters");
}

// Residue sequences for the bounded statements.  `params` omits i.
struct Bounded {
    int bound = 0;
    int power = 0;
    std::vector<JetPolynomial> residues;
};

Bounded bounded_residues(char statement, const std::vector<int> &params, const ChartSpec &c)
{
    const int j = c.j;
    Bounded out;
    if (statement == 'a') {
        require_arity(params, 1, statement);
        const int k = params[0];
        require(k >= j, statement, "needs k >= j");
        out.power = k - j + 1;
        out.bound = 2 * out.power;
        out.residues = q_residues(p_power(x_power(c, k), c, j - 1), c, out.bound);
        return out;
    }
    int k = 0;
    int h = 0;
    if (statement == 'd') {
        require_arity(params, 1, statement);
        h = params[0];
    } else if (statement == 'f') {
        require_arity(params, 2, statement);
        k = params[0];
        h = params[1];
    } else if (statement == 'g') {
        require_arity(params, 1, statement);
        k = params[0];
        h = j - 1;
    } else {
        throw InputError(std::string("statement (") + statement + ") has no bound on i");
    }
    require(k >= 0, statement, "needs k >= 0");
    require(h >= 0 && h <= j - 1, statement, "needs 0 <= h <= j-1");
    out.power = k + j - 1 - h;
    out.bound = 2 * out.power + 1;
    const JetPolynomial xky = JetPolynomial::monomial_xy(c, k, 1);
    out.residues = q_residues(p_power(xky, c, h), c, out.bound);
    for (int b = 0; b <= j - 1; ++b) {
        const auto rb = q_residues(p_power(x_power(c, k + b), c, h), c, out.bound);
        const JetPolynomial yb = inverse_factorial(b) * JetPolynomial::variable(c.variable_count(), c.y_index(b));
        for (int i = 0; i <= out.bound; ++i) {
            out.residues[static_cast<std::size_t>(i)] -= yb * rb[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

LemmaBResult check_b(const std::vector<int> &params, const ChartSpec &c)
{
    require_arity(params, 2, 'b');
    const int i = params[0];
    const int q = params[1];
    require(i >= 1 && q >= 1, 'b', "needs positive i and m");
    LemmaBResult r;
    r.statement = 'b';
    r.params = params;
    const JetPolynomial lhs = at_x_zero(q_power(x_power(c, q), c, i), c);
    const JetPolynomial rhs =
        apply_Q(at_x_zero(q_power(x_power(c, q), c, i - 1), c), c) +
        Rational(q) * JetPolynomial::variable(c.variable_count(), c.xd_index(1)) *
            at_x_zero(q_power(x_power(c, q - 1), c, i - 1), c);
    r.verdict = lhs == rhs ? Verdict::Pass : Verdict::Fail;
    if (r.verdict == Verdict::Fail) {
        r.detail = "left " + lhs.to_string(c) + " vs right " + rhs.to_string(c);
    }
    return r;
}

LemmaBResult check_c(const std::vector<int> &params, const ChartSpec &c)
{
    require_arity(params, 2, 'c');
    const int h = params[0];
    const int i = params[1];
    require(h >= 0 && h <= c.j - 1, 'c', "needs 0 <= h <= j-1");
    require(i >= 0, 'c', "needs i >= 0");
    LemmaBResult r;
    r.statement = 'c';
    r.params = params;
    const std::size_t vars = c.variable_count();
    JetPolynomial diff = q_power(JetPolynomial::variable(vars, c.y_index(h)), c, i);
    for (int b = h; b <= c.j - 1; ++b) {
        diff -= inverse_factorial(b - h) * JetPolynomial::variable(vars, c.y_index(b)) *
                at_x_zero(q_power(x_power(c, b - h), c, i), c);
    }
    bool y_free = true;
    for (int t = 0; t <= c.top_y(); ++t) {
        y_free = y_free && !diff.involves(c.y_index(t));
    }
    r.verdict = y_free ? Verdict::Pass : Verdict::Fail;
    if (!y_free) {
        r.detail = "remainder involves y-variables: " + diff.to_string(c);
    }
    return r;
}

LemmaBResult check_e(const std::vector<int> &params, const ChartSpec &c, const std::optional<JetPolynomial> &phi)
{
    require(params.size() == 2 || params.size() == 4, 'e', "expected (h, i) or (h, i, a, b)");
    const int h = params[0];
    const int i = params[1];
    require(h >= 1 && i >= 2, 'e', "needs h >= 1 and i >= 2");
    JetPolynomial f;
    if (phi) {
        f = *phi;
    } else {
        require(params.size() == 4 && params[2] >= 0 && params[3] >= 0, 'e', "needs exponents a, b >= 0 for phi");
        f = JetPolynomial::monomial_xy(c, params[2], params[3]);
    }
    for (std::size_t v = 2; v < c.variable_count(); ++v) {
        require(!f.involves(v), 'e', "phi must be a polynomial in x and y");
    }
    LemmaBResult r;
    r.statement = 'e';
    r.params = params;
    const JetPolynomial lhs = q_power(p_power(x_power(c, 1) * f, c, h), c, i);
    JetPolynomial rhs = Rational(h) * q_power(p_power(f, c, h - 1), c, i);
    const JetPolynomial ph = p_power(f, c, h);
    for (int a = 0; a <= i - 2; ++a) {
        if (i - a > c.top_x()) {
            continue; // x^(i-a) is zero on this chart
        }
        rhs += Rational(binomial(static_cast<unsigned>(i), static_cast<unsigned>(a))) * q_power(ph, c, a) *
               JetPolynomial::variable(c.variable_count(), c.xd_index(i - a));
    }
    const JetPolynomial diff = mod_x_xprime(lhs - rhs, c);
    r.verdict = diff.is_zero() ? Verdict::Pass : Verdict::Fail;
    if (!diff.is_zero()) {
        r.detail = "difference outside (x, x'): " + diff.to_string(c);
    }
    return r;
}

// i is the last parameter of every bounded statement.
std::vector<int> with_i(std::vector<int> params, int i)
{
    params.push_back(i);
    return params;
}

void require_chart(const ChartSpec &chart)
{
    if (chart.type != ChartType::Secondary) {
        throw InputError("the identities (a)-(g) live on a secondary chart");
    }
}

} // namespace

std::vector<LemmaBResult> lemma_b_series(char statement, const std::vector<int> &params, const ChartSpec &chart)
{
    require_chart(chart);
    const Bounded b = bounded_residues(statement, params, chart);
    std::vector<LemmaBResult> out;
    for (int i = 0; i <= b.bound; ++i) {
        LemmaBResult r;
        r.statement = statement;
        r.params = with_i(params, i);
        classify(r, b.residues[static_cast<std::size_t>(i)], i, b.bound, b.power, chart);
        out.push_back(std::move(r));
    }
    return out;
}

LemmaBResult lemma_b_check(char statement, const std::vector<int> &params, const ChartSpec &chart,
                           const std::optional<JetPolynomial> &phi)
{
    require_chart(chart);
    switch (statement) {
    case 'a':
    case 'd':
    case 'f':
    case 'g': {
        require(!params.empty(), statement, "missing parameters");
        const int i = params.back();
        const std::vector<int> head(params.begin(), params.end() - 1);
        const Bounded b = bounded_residues(statement, head, chart);
        require(i >= 0 && i <= b.bound, statement, "i outside 0.." + std::to_string(b.bound));
        LemmaBResult r;
        r.statement = statement;
        r.params = params;
        // Residues were pruned for the full range; entry i is exact.
        classify(r, b.residues[static_cast<std::size_t>(i)], i, b.bound, b.power, chart);
        return r;
    }
    case 'b':
        return check_b(params, chart);
    case 'c':
        return check_c(params, chart);
    case 'e':
        return check_e(params, chart, phi);
    default:
        throw InputError(std::string("unknown statement '") + statement + "'");
    }
}

} // namespace semple
