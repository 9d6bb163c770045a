#include <semple/tower_ring.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include <semple/errors.hpp>
#include <semple/exact_linalg.hpp>

namespace semple {

namespace {

Exponents zero_exponents(int level) { return Exponents(static_cast<std::size_t>(level) + 1, 0); }

Exponents padded(const Exponents &e, int level)
{
    Exponents out = e;
    out.resize(static_cast<std::size_t>(level) + 1, 0);
    return out;
}

int total_degree(const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0); }

} // namespace

ChowClass::ChowClass(int level) : level_(level)
{
    if (level < 0) {
        throw InputError("tower level must be nonnegative");
    }
}

ChowClass::ChowClass(int level, Terms terms) : ChowClass(level)
{
    for (auto &[e, c] : terms) {
        if (static_cast<int>(e.size()) != level + 1) {
            throw InputError("exponent vector does not match tower level");
        }
        add_term(e, c);
    }
}

ChowClass ChowClass::constant(int level, const Rational &c)
{
    ChowClass out(level);
    out.add_term(zero_exponents(level), c);
    return out;
}

ChowClass ChowClass::h(int level)
{
    ChowClass out(level);
    Exponents e = zero_exponents(level);
    e[0] = 1;
    out.add_term(e, 1);
    return out;
}

ChowClass ChowClass::phi(int level, int k)
{
    if (k < 1 || k > level) {
        throw InputError("phi" + std::to_string(k) + " is not a generator on level " + std::to_string(level));
    }
    ChowClass out(level);
    Exponents e = zero_exponents(level);
    e[static_cast<std::size_t>(k)] = 1;
    out.add_term(e, 1);
    return out;
}

ChowClass ChowClass::hdual(int level)
{
    if (level < 1) {
        throw InputError("hdual needs level >= 1");
    }
    return phi(level, 1) + h(level) * Rational(2);
}

ChowClass ChowClass::i(int level, int k)
{
    if (k < 2 || k > level) {
        throw InputError("i" + std::to_string(k) + " is not a generator on level " + std::to_string(level));
    }
    return phi(level, k) - phi(level, k - 1);
}

std::optional<int> ChowClass::codim() const
{
    if (terms_.empty()) {
        return std::nullopt;
    }
    const int d = total_degree(terms_.begin()->first);
    for (const auto &[e, c] : terms_) {
        if (total_degree(e) != d) {
            return std::nullopt;
        }
    }
    return d;
}

bool ChowClass::is_homogeneous() const { return terms_.empty() || codim().has_value(); }

Rational ChowClass::coefficient(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

ChowClass ChowClass::pullback(int level) const
{
    if (level < level_) {
        throw InputError("cannot push a class down the tower");
    }
    ChowClass out(level);
    for (const auto &[e, c] : terms_) {
        out.terms_.emplace(padded(e, level), c);
    }
    return out;
}

void ChowClass::add_term(const Exponents &e, const Rational &c)
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

ChowClass ChowClass::operator-() const
{
    ChowClass out = *this;
    for (auto &[e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

ChowClass &ChowClass::operator+=(const ChowClass &other)
{
    if (other.level_ > level_) {
        *this = pullback(other.level_);
    }
    for (const auto &[e, c] : other.terms_) {
        add_term(padded(e, level_), c);
    }
    return *this;
}

ChowClass &ChowClass::operator-=(const ChowClass &other) { return *this += -other; }

ChowClass &ChowClass::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

ChowClass raw_product(const ChowClass &a, const ChowClass &b)
{
    const int level = std::max(a.level_, b.level_);
    ChowClass out(level);
    for (const auto &[ea, ca] : a.terms_) {
        Exponents pa = padded(ea, level);
        for (const auto &[eb, cb] : b.terms_) {
            Exponents e = pa;
            for (std::size_t k = 0; k < eb.size(); ++k) {
                e[k] += eb[k];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

TowerPresentation build_tower(int n)
{
    if (n < 0) {
        throw InputError("tower level must be nonnegative");
    }
    TowerPresentation tower;
    tower.level = n;
    if (n == 0) {
        return tower;
    }
    // c(F_0) = c(T P^2): c_1 = 3h, c_2 = 3h^2.
    tower.chern1.push_back(ChowClass::h(0) * Rational(3));
    tower.chern2.push_back(raw_product(ChowClass::h(0), ChowClass::h(0)) * Rational(3));
    for (int k = 1; k <= n; ++k) {
        const ChowClass c1 = tower.chern1[static_cast<std::size_t>(k - 1)].pullback(k);
        const ChowClass c2 = tower.chern2[static_cast<std::size_t>(k - 1)].pullback(k);
        const ChowClass phi_k = ChowClass::phi(k, k);
        // phi_k^2 = -c_1(F_{k-1}) phi_k - c_2(F_{k-1})
        tower.relations.push_back(normal_form(-raw_product(c1, phi_k) - c2, tower));
        if (k < n) {
            tower.chern1.push_back(normal_form(c1 + phi_k, tower));
            tower.chern2.push_back(normal_form(c2 * Rational(2) + raw_product(c1, phi_k), tower));
        }
    }
    return tower;
}

ChowClass normal_form(const ChowClass &c, const TowerPresentation &tower)
{
    const int level = c.level();
    if (level > tower.level) {
        throw InputError("class on level " + std::to_string(level) + " used with a level-" +
                         std::to_string(tower.level) + " tower");
    }
    using Work = std::vector<std::pair<Exponents, Rational>>;
    ChowClass::Terms current;
    for (const auto &[e, v] : c.terms()) {
        if (e[0] < 3) {
            current.emplace(e, v);
        }
    }
    for (int k = level; k >= 1; --k) {
        const auto kk = static_cast<std::size_t>(k);
        // relations[k-1] lives on level k; during construction only the
        // relations below the one being built are consulted.
        if (tower.relations.size() < kk) {
            bool needed = std::any_of(current.begin(), current.end(),
                                      [kk](const auto &t) { return t.first[kk] >= 2; });
            if (needed) {
                throw InvariantError("phi relation requested before it was built");
            }
            continue;
        }
        const ChowClass &rel = tower.relations[kk - 1];
        ChowClass::Terms done;
        Work stack(current.begin(), current.end());
        while (!stack.empty()) {
            auto [e, v] = std::move(stack.back());
            stack.pop_back();
            if (e[0] >= 3 || v == 0) {
                continue;
            }
            if (e[kk] < 2) {
                auto [it, inserted] = done.try_emplace(e, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second == 0) {
                        done.erase(it);
                    }
                }
                continue;
            }
            e[kk] -= 2;
            for (const auto &[re, rv] : rel.terms()) {
                Exponents ne = e;
                for (std::size_t m = 0; m < re.size(); ++m) {
                    ne[m] += re[m];
                }
                stack.emplace_back(std::move(ne), v * rv);
            }
        }
        current = std::move(done);
    }
    return ChowClass(level, std::move(current));
}

ChowClass multiply(const ChowClass &a, const ChowClass &b, const TowerPresentation &tower)
{
    if (a.level() > tower.level || b.level() > tower.level) {
        throw InputError("operand level exceeds tower level " + std::to_string(tower.level));
    }
    return normal_form(raw_product(a, b), tower);
}

ChowClass power(const ChowClass &a, int exponent, const TowerPresentation &tower)
{
    if (exponent < 0) {
        throw InputError("negative exponent");
    }
    ChowClass out = ChowClass::constant(a.level(), 1);
    for (int i = 0; i < exponent; ++i) {
        out = multiply(out, a, tower);
    }
    return out;
}

Rational integrate(const ChowClass &c, const TowerPresentation &tower)
{
    if (c.is_zero()) {
        return 0;
    }
    const auto codim = c.codim();
    if (!codim) {
        throw InputError("cannot integrate a non-homogeneous class");
    }
    const int top = tower.level + 2;
    if (*codim < top) {
        throw InputError("codimension " + std::to_string(*codim) + " is below the top degree " +
                         std::to_string(top) + " of F(" + std::to_string(tower.level) + ")");
    }
    if (*codim > top) {
        return 0;
    }
    const ChowClass nf = normal_form(c.pullback(tower.level), tower);
    Exponents top_monomial(static_cast<std::size_t>(tower.level) + 1, 1);
    top_monomial[0] = 2;
    return nf.coefficient(top_monomial);
}

std::vector<Exponents> monomial_basis(int n, int codim)
{
    std::vector<Exponents> out;
    const unsigned long count = 1UL << n;
    for (int a = 0; a <= 2; ++a) {
        for (unsigned long mask = 0; mask < count; ++mask) {
            if (a + std::popcount(mask) != codim) {
                continue;
            }
            Exponents e = zero_exponents(n);
            e[0] = a;
            for (int k = 1; k <= n; ++k) {
                e[static_cast<std::size_t>(k)] = static_cast<int>((mask >> (k - 1)) & 1UL);
            }
            out.push_back(std::move(e));
        }
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<ChowClass> dual_list(int n)
{
    std::vector<ChowClass> out;
    out.push_back(ChowClass::h(n));
    if (n == 0) {
        return out;
    }
    out.push_back(ChowClass::hdual(n));
    for (int k = 2; k <= n; ++k) {
        ChowClass d = ChowClass::hdual(n) * Rational(k + 1);
        for (int m = 2; m < k; ++m) {
            d += ChowClass::i(n, m) * Rational(k + 2 - m);
        }
        d += ChowClass::i(n, k);
        out.push_back(std::move(d));
    }
    return out;
}

GeometricBasis dual_basis(int n, const TowerPresentation &tower)
{
    if (n < 1) {
        throw InputError("dual_basis needs n >= 1");
    }
    if (tower.level != n) {
        throw InputError("dual_basis level does not match tower level");
    }
    GeometricBasis basis;
    basis.level = n;
    basis.dual_list = dual_list(n);
    const std::vector<Exponents> monomials = monomial_basis(n, n + 1);
    const std::size_t size = basis.dual_list.size();
    if (monomials.size() != size) {
        throw InvariantError("A^{n+1}(F(n)) has " + std::to_string(monomials.size()) +
                             " basis monomials, expected " + std::to_string(size));
    }
    RationalMatrix gram(size, std::vector<Rational>(size));
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t b = 0; b < size; ++b) {
            ChowClass mono(n, {{monomials[b], Rational(1)}});
            gram[r][b] = integrate(multiply(basis.dual_list[r], mono, tower), tower);
        }
    }
    const auto inv = inverse(gram);
    if (!inv) {
        throw InvariantError("pairing system between A^1 and A^{n+1} is singular");
    }
    for (std::size_t c = 0; c < size; ++c) {
        ChowClass beta(n);
        for (std::size_t b = 0; b < size; ++b) {
            beta += ChowClass(n, {{monomials[b], (*inv)[b][c]}});
        }
        basis.codim_basis.push_back(std::move(beta));
    }
    return basis;
}

namespace {

std::string product_label(const std::vector<std::string> &factors)
{
    std::string out;
    for (const auto &f : factors) {
        if (!out.empty()) {
            out += '*';
        }
        out += f;
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> i_range(int from, int to)
{
    std::vector<std::string> out;
    for (int k = from; k <= to; ++k) {
        out.push_back("i" + std::to_string(k));
    }
    return out;
}

std::vector<std::string> codim_basis_labels(int n)
{
    std::vector<std::string> labels;
    labels.push_back(product_label({"hdual^2", "z" + std::to_string(n)}));
    std::vector<std::string> f{"h^2"};
    auto tail = i_range(2, n);
    f.insert(f.end(), tail.begin(), tail.end());
    labels.push_back(product_label(f));
    for (int k = 2; k <= n; ++k) {
        std::vector<std::string> g{"h^2", "hdual"};
        if (k >= 3) {
            g.push_back("z" + std::to_string(k - 1));
        }
        auto rest = i_range(k + 1, n);
        g.insert(g.end(), rest.begin(), rest.end());
        labels.push_back(product_label(g));
    }
    return labels;
}

} // namespace

ChowClass solve_z(int k)
{
    if (k < 1) {
        throw InputError("z_k needs k >= 1");
    }
    if (k == 1) {
        return ChowClass::constant(1, 1);
    }
    const TowerPresentation t = build_tower(k);
    const std::vector<Exponents> monomials = monomial_basis(k, k - 1);
    const std::size_t size = monomials.size();
    std::vector<ChowClass> unknowns;
    for (const auto &m : monomials) {
        unknowns.emplace_back(k, ChowClass::Terms{{m, Rational(1)}});
    }
    // Row per (j, output monomial) of i_j * z, then the two degree conditions.
    std::map<std::pair<int, Exponents>, std::vector<Rational>> vanishing;
    for (int j = 2; j <= k; ++j) {
        const ChowClass ij = ChowClass::i(k, j);
        for (std::size_t c = 0; c < size; ++c) {
            const ChowClass product = multiply(ij, unknowns[c], t);
            for (const auto &[e, v] : product.terms()) {
                auto &row = vanishing[{j, e}];
                row.resize(size);
                row[c] += v;
            }
        }
    }
    RationalMatrix a;
    std::vector<Rational> b;
    for (auto &[key, row] : vanishing) {
        a.push_back(std::move(row));
        b.emplace_back(0);
    }
    const ChowClass h = ChowClass::h(k);
    const ChowClass hd = ChowClass::hdual(k);
    for (const ChowClass &g : {multiply(multiply(h, h, t), hd, t), multiply(multiply(hd, hd, t), h, t)}) {
        std::vector<Rational> row;
        for (const auto &u : unknowns) {
            row.push_back(integrate(multiply(g, u, t), t));
        }
        a.push_back(std::move(row));
        b.emplace_back(1);
    }
    const auto x = solve_unique(std::move(a), std::move(b));
    if (!x) {
        throw InvariantError("the conditions on z_" + std::to_string(k) + " do not determine a unique class");
    }
    ChowClass z(k);
    for (std::size_t c = 0; c < size; ++c) {
        z += unknowns[c] * (*x)[c];
    }
    return z;
}

std::vector<ChowClass> geometric_columns(int n, const TowerPresentation &tower)
{
    if (n < 1 || tower.level != n) {
        throw InputError("geometric_columns needs n >= 1 and a tower of level n");
    }
    const ChowClass h = ChowClass::h(n);
    const ChowClass hd = ChowClass::hdual(n);
    auto i_product = [&](int from) {
        ChowClass out = ChowClass::constant(n, 1);
        for (int k = from; k <= n; ++k) {
            out = multiply(out, ChowClass::i(n, k), tower);
        }
        return out;
    };
    const ChowClass h2 = multiply(h, h, tower);
    std::vector<ChowClass> cols;
    cols.push_back(multiply(multiply(hd, hd, tower), solve_z(n).pullback(n), tower));
    cols.push_back(multiply(h2, i_product(2), tower));
    const ChowClass h2hd = multiply(h2, hd, tower);
    for (int m = 1; m <= n - 1; ++m) {
        cols.push_back(multiply(multiply(h2hd, solve_z(m).pullback(n), tower), i_product(m + 2), tower));
    }
    return cols;
}

PairingMatrix pairing_matrix(int n, const TowerPresentation &tower)
{
    const std::vector<ChowClass> columns = geometric_columns(n, tower);
    PairingMatrix pm;
    pm.level = n;
    std::vector<ChowClass> generators{ChowClass::h(n), ChowClass::hdual(n)};
    pm.row_labels = {"h", "hdual"};
    for (int k = 2; k <= n; ++k) {
        generators.push_back(ChowClass::i(n, k));
        pm.row_labels.push_back("i" + std::to_string(k));
    }
    pm.column_labels = codim_basis_labels(n);
    for (const auto &g : generators) {
        std::vector<Integer> row;
        for (const auto &beta : columns) {
            const Rational v = integrate(multiply(g, beta, tower), tower);
            if (v.get_den() != 1) {
                throw InvariantError("non-integral intersection number " + semple::to_string(v));
            }
            row.push_back(v.get_num());
        }
        pm.entries.push_back(std::move(row));
    }
    return pm;
}

ChowClass solve_z2(const TowerPresentation &tower)
{
    if (tower.level < 2) {
        throw InputError("solve_z2 needs a tower of level >= 2");
    }
    // The three integral conditions alone leave a and b free (h and hdual
    // pair to zero with h^2 hdual and h hdual^2 on F(2)); the class
    // condition i_2 z_2 = 0 pins them down.
    const TowerPresentation t2 = build_tower(2);
    const ChowClass z2 = normal_form(solve_z(2), t2);
    const ChowClass h = ChowClass::h(2);
    const ChowClass hd = ChowClass::hdual(2);
    const ChowClass i2 = ChowClass::i(2, 2);
    auto pair = [&](const ChowClass &a, const ChowClass &b, const ChowClass &c) {
        return integrate(multiply(multiply(multiply(a, b, t2), c, t2), z2, t2), t2);
    };
    if (pair(h, h, hd) != 1 || pair(h, hd, hd) != 1 || pair(h, h, i2) != 0 || !multiply(i2, z2, t2).is_zero()) {
        throw InvariantError("z_2 fails its defining conditions");
    }
    return z2;
}

IkRelation theorem1_relation(int k)
{
    IkRelation rel;
    rel.k = k;
    rel.h_coeff = 2 * k - 1;
    rel.hdual_coeff = -(k + 1);
    for (int m = 2; m < k; ++m) {
        rel.i_coeffs[m] = -(k + 2 - m);
    }
    return rel;
}

bool relation_holds(const IkRelation &rel, const TowerPresentation &tower)
{
    const int n = tower.level;
    if (rel.k < 2 || rel.k > n) {
        throw InputError("relation index k=" + std::to_string(rel.k) + " outside 2.." + std::to_string(n));
    }
    ChowClass rhs = ChowClass::h(n) * rel.h_coeff + ChowClass::hdual(n) * rel.hdual_coeff;
    for (const auto &[m, c] : rel.i_coeffs) {
        rhs += ChowClass::i(n, m) * c;
    }
    const ChowClass ik = ChowClass::i(n, rel.k);
    return normal_form(raw_product(ik, ik) - raw_product(rhs, ik), tower).is_zero();
}

bool theorem1_check(int k, const TowerPresentation &tower)
{
    return relation_holds(theorem1_relation(k), tower);
}

} // namespace semple
