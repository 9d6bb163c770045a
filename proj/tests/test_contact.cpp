#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <semple/contact.hpp>
#include <semple/errors.hpp>
#include <semple/formula.hpp>

#include "support.hpp"

using namespace semple;

namespace {

CurveCharacteristics curve(long d, long dcheck, std::map<int, Integer> kappa = {})
{
    CurveCharacteristics c;
    c.degree = d;
    c.class_number = dcheck;
    c.kappa = std::move(kappa);
    return c;
}

ContactModule module_of(int n, long lambda, long pi, std::map<int, Integer> gamma = {})
{
    ContactModule m;
    m.weight = n;
    m.lambda = lambda;
    m.pi = pi;
    m.gamma = std::move(gamma);
    return m;
}

// Deterministic stand-in for a family table: any integer per key.
Integer table_value(const std::string &key)
{
    long h = 7;
    for (char c : key) {
        h = (h * 131 + static_cast<unsigned char>(c)) % 1009;
    }
    return h - 500;
}

FamilyCharacteristics table_for(const std::vector<ExpansionTerm> &terms, int s, long member_degree)
{
    FamilyCharacteristics f;
    f.parameter_count = s;
    f.member_degree = member_degree;
    for (const auto &t : terms) {
        const auto key = t.monomial.canonical_key();
        if (!key.empty()) {
            f.values[key] = table_value(key);
        }
    }
    return f;
}

} // namespace

TEST_CASE("curve modules")
{
    CHECK(curve_module(curve(5, 7), 0) == module_of(0, 5, 0));
    CHECK(curve_module(curve(5, 7), 1) == module_of(1, 5, 7));
    CHECK(curve_module(curve(3, 6, {{2, 1}}), 2) == module_of(2, 3, 6, {{2, 19}}));
    // Ladder read off the displayed coefficients (k+1) dcheck + k kappa_2 + ... + 3 kappa_{k-1} + kappa_k.
    const auto c = curve(4, 10, {{2, 2}, {3, 5}, {4, 7}});
    const auto m = curve_module(c, 4);
    CHECK(m.gamma.at(2) == 3 * 10 + 2);
    CHECK(m.gamma.at(3) == 4 * 10 + 3 * 2 + 5);
    CHECK(m.gamma.at(4) == 5 * 10 + 4 * 2 + 3 * 5 + 7);
    CHECK(nonsingular_module(2, 2) == module_of(2, 2, 2, {{2, 6}}));
    CHECK(nonsingular_module(1, 1) == module_of(1, 1, 0));
    CHECK(nonsingular_module(3, 3) == module_of(3, 3, 6, {{2, 18}, {3, 24}}));
    CHECK(module_of(2, 1, 0).terms().size() == 1);
}

TEST_CASE("tags and keys")
{
    CHECK(ContactTag::gamma(3, 4).key() == "G3_4");
    CHECK(parse_tag("P2") == ContactTag::pi(2));
    CHECK(parse_tag("G2_2") == ContactTag::gamma(2, 2));
    CHECK(ContactTag::lambda(2) < ContactTag::pi(2));
    CHECK(ContactTag::pi(2) < ContactTag::gamma(2, 2));
    CHECK(ContactTag::gamma(3, 3) < ContactTag::lambda(4));
    CHECK(canonicalize_key("G2_2.L2") == "L2.G2_2");
    CHECK(canonicalize_key("") == "");
    CHECK_THROWS_AS(canonicalize_key("L0.L1"), InputError);
    CHECK_THROWS_AS(parse_tag("G1_2"), InputError);
    CHECK_THROWS_AS(parse_tag("P0"), InputError);
    CHECK_THROWS_AS(parse_tag("Q2"), InputError);
}

TEST_CASE("module products")
{
    const auto single = multiply_modules({module_of(0, 3, 0), module_of(0, 5, 0)});
    REQUIRE(single.size() == 1);
    CHECK(single[0].coefficient == 15);
    CHECK(single[0].monomial.lambda0_count() == 2);
    CHECK(single[0].monomial.canonical_key().empty());

    const auto nine = multiply_modules({curve_module(curve(3, 3, {{2, 1}}), 2), curve_module(curve(4, 12), 2)});
    CHECK(nine.size() == 9);

    const auto sq = merge(multiply_modules({module_of(1, 1, 1), module_of(1, 1, 1)}));
    REQUIRE(sq.size() == 3);
    CHECK(sq[0].monomial.canonical_key() == "L1.L1");
    CHECK(sq[0].coefficient == 1);
    CHECK(sq[1].monomial.canonical_key() == "L1.P1");
    CHECK(sq[1].coefficient == 2);
    CHECK(sq[2].monomial.canonical_key() == "P1.P1");
    CHECK(sq[2].coefficient == 1);
}

TEST_CASE("evaluation")
{
    FamilyCharacteristics fam;
    fam.parameter_count = 0;
    fam.member_degree = 3;
    const auto r = evaluate(multiply_modules({module_of(0, 2, 0), module_of(0, 5, 0)}), fam);
    CHECK(r.total == 9 * 2 * 5);

    FamilyCharacteristics f1;
    f1.parameter_count = 1;
    f1.member_degree = 2;
    f1.values = {{"L1", 11}, {"P1", -4}};
    CHECK(evaluate(multiply_modules({curve_module(curve(6, 9), 1)}), f1).total == 6 * 11 + 9 * -4);

    // A zero-parameter family with no curves left: the empty key reads 1.
    CHECK(evaluate({ExpansionTerm{ContactMonomial{}, 1}}, fam).total == 1);

    f1.values.erase("P1");
    try {
        evaluate(multiply_modules({curve_module(curve(6, 9), 1)}), f1);
        FAIL("missing key accepted");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("P1") != std::string::npos);
    }
    CHECK_THROWS_AS(evaluate(multiply_modules({curve_module(curve(6, 9), 2)}), f1), InputError);
}

TEST_CASE("Bezout closure: all orders 1")
{
    for (int p = 1; p <= 3; ++p) {
        for (long d = 1; d <= 4; ++d) {
            std::vector<long> degs(static_cast<std::size_t>(p), 1);
            while (true) {
                std::vector<CurveCharacteristics> curves;
                Integer expected = 1;
                for (long di : degs) {
                    curves.push_back(curve(di, di * (di - 1)));
                    expected *= d * di;
                }
                FamilyCharacteristics fam;
                fam.member_degree = d;
                const auto r = proto_contact(curves, std::vector<int>(static_cast<std::size_t>(p), 1), fam);
                CHECK(r.total == expected);
                std::size_t k = 0;
                while (k < degs.size() && degs[k] == 4) {
                    degs[k++] = 1;
                }
                if (k == degs.size()) {
                    break;
                }
                ++degs[k];
            }
        }
    }
}

TEST_CASE("single curve against a family")
{
    FamilyCharacteristics fam;
    fam.parameter_count = 1;
    fam.member_degree = 2;
    fam.values = {{"L1", 13}, {"P1", 17}};
    const auto r = proto_contact({curve(5, 8)}, {2}, fam);
    CHECK(r.total == 5 * 13 + 8 * 17);
    CHECK(r.hypothesis_warnings.empty());
}

TEST_CASE("two curves, orders (3, 3)")
{
    const std::vector<std::string> names{"C", "D"};
    const Formula f = expand_formula(names, {3, 3});
    REQUIRE(f.terms.size() == 6);
    const auto d = [](const char *c) { return SymbolicPoly::symbol(degree_symbol(c)); };
    const auto dc = [](const char *c) { return SymbolicPoly::symbol(class_symbol(c)); };
    const auto g = [&](const char *c) {
        return Integer(3) * dc(c) + SymbolicPoly::symbol(kappa_symbol(c, 2));
    };
    const std::vector<std::pair<std::vector<ContactTag>, SymbolicPoly>> expected{
        {{ContactTag::lambda(2), ContactTag::lambda(2)}, d("C") * d("D")},
        {{ContactTag::lambda(2), ContactTag::pi(2)}, d("C") * dc("D") + d("D") * dc("C")},
        {{ContactTag::lambda(2), ContactTag::gamma(2, 2)}, d("C") * g("D") + d("D") * g("C")},
        {{ContactTag::pi(2), ContactTag::pi(2)}, dc("C") * dc("D")},
        {{ContactTag::pi(2), ContactTag::gamma(2, 2)}, dc("C") * g("D") + dc("D") * g("C")},
        {{ContactTag::gamma(2, 2), ContactTag::gamma(2, 2)}, g("C") * g("D")},
    };
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CAPTURE(i);
        CHECK(f.terms[i].tags == expected[i].first);
        CHECK(f.terms[i].coefficient == expected[i].second);
    }
    CHECK(render(f, FormulaFormat::Text) ==
          "d_C d_D (λ_2)^2 + (d_C ď_D + d_D ď_C) λ_2 π_2 + (d_C(3ď_D + κ_{2D}) + d_D(3ď_C + κ_{2C})) λ_2 γ_2^2"
          " + ď_C ď_D (π_2)^2 + (ď_C(3ď_D + κ_{2D}) + ď_D(3ď_C + κ_{2C})) π_2 γ_2^2"
          " + (3ď_C + κ_{2C})(3ď_D + κ_{2D}) (γ_2^2)^2");
    CHECK(render(f, FormulaFormat::Latex).find("(3\\check d_{C} + \\kappa_{2C})(3\\check d_{D} + \\kappa_{2D}) "
                                               "(\\gamma_{2}^{2})^{2}") != std::string::npos);

    // Numeric instance against an arbitrary table, expanded by hand:
    // C = (3, 3, kappa_2 = 1), D = (4, 12, 0); 3 dcheck + kappa_2 = 10 and 36.
    FamilyCharacteristics fam;
    fam.parameter_count = 4;
    fam.member_degree = 5;
    fam.values = {{"L2.L2", 2}, {"L2.P2", -3}, {"L2.G2_2", 5}, {"P2.P2", 7}, {"P2.G2_2", -11}, {"G2_2.G2_2", 13}};
    const Integer hand = 12 * 2 + (3 * 12 + 4 * 3) * -3 + (3 * 36 + 4 * 10) * 5 + (3 * 12) * 7 +
                         (3 * 36 + 12 * 10) * -11 + (10 * 36) * 13;
    const auto r = proto_contact({curve(3, 3, {{2, 1}}), curve(4, 12)}, {3, 3}, fam);
    CHECK(r.total == hand);
    std::map<std::string, Integer> symbols{{"d_C", 3}, {"dcheck_C", 3}, {"kappa2_C", 1},
                                           {"d_D", 4}, {"dcheck_D", 12}, {"kappa2_D", 0}};
    Integer via_formula = 0;
    for (const auto &t : f.terms) {
        std::vector<std::string> keys;
        for (const auto &tag : t.tags) {
            keys.push_back(tag.key());
        }
        via_formula += t.coefficient.evaluate(symbols) * fam.values.at(keys[0] + "." + keys[1]);
    }
    CHECK(via_formula == hand);
}

TEST_CASE("ordinary contacts give the product of (d_j L + dcheck_j P)")
{
    for (int p = 1; p <= 4; ++p) {
        std::vector<std::string> names;
        for (int i = 0; i < p; ++i) {
            names.push_back(std::string(1, static_cast<char>('A' + i)));
        }
        const Formula f = expand_formula(names, std::vector<int>(static_cast<std::size_t>(p), 2));
        // Coefficient of L^a P^(p-a): sum over a-subsets of prod d * prod dcheck.
        REQUIRE(f.terms.size() == static_cast<std::size_t>(p) + 1);
        for (const auto &t : f.terms) {
            const auto a = std::count(t.tags.begin(), t.tags.end(), ContactTag::lambda(1));
            SymbolicPoly expected;
            for (unsigned mask = 0; mask < (1u << p); ++mask) {
                if (std::popcount(mask) != a) {
                    continue;
                }
                SymbolicPoly prod = SymbolicPoly::constant(1);
                for (int i = 0; i < p; ++i) {
                    const auto &c = names[static_cast<std::size_t>(i)];
                    prod = prod * SymbolicPoly::symbol((mask >> i) & 1u ? degree_symbol(c) : class_symbol(c));
                }
                expected += prod;
            }
            CHECK(t.coefficient == expected);
        }
    }
    CHECK(emit_formula({"C", "D"}, {2, 2}, FormulaFormat::Text) ==
          "d_C d_D (λ_1)^2 + (d_C ď_D + d_D ď_C) λ_1 π_1 + ď_C ď_D (π_1)^2");
}

TEST_CASE("single-curve formula")
{
    CHECK(emit_formula({"C"}, {4}, FormulaFormat::Text) ==
          "d_C λ_3 + ď_C π_3 + (3ď_C + κ_{2C}) γ_3^2 + (4ď_C + 3κ_{2C} + κ_{3C}) γ_3^3");
    CHECK(emit_formula({"C"}, {1}, FormulaFormat::Text) == "d_C d");
}

TEST_CASE("permutation symmetry")
{
    auto g = test::rng(10);
    std::uniform_int_distribution<int> order(1, 3);
    std::uniform_int_distribution<long> small(0, 9);
    for (int trial = 0; trial < 30; ++trial) {
        const int p = 2 + trial % 2;
        std::vector<CurveCharacteristics> curves;
        std::vector<int> orders;
        for (int i = 0; i < p; ++i) {
            curves.push_back(curve(1 + small(g), small(g), {{2, small(g)}, {3, small(g)}}));
            orders.push_back(order(g));
        }
        const int s = std::accumulate(orders.begin(), orders.end(), 0) - p;
        std::vector<ContactModule> ms;
        for (int i = 0; i < p; ++i) {
            ms.push_back(curve_module(curves[static_cast<std::size_t>(i)], orders[static_cast<std::size_t>(i)] - 1));
        }
        const auto fam = table_for(multiply_modules(ms), s, 2 + small(g));
        const Integer base = proto_contact(curves, orders, fam).total;
        std::vector<int> perm(static_cast<std::size_t>(p));
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<CurveCharacteristics> pc;
            std::vector<int> po;
            for (int i : perm) {
                pc.push_back(curves[static_cast<std::size_t>(i)]);
                po.push_back(orders[static_cast<std::size_t>(i)]);
            }
            CHECK(proto_contact(pc, po, fam).total == base);
        }
    }
}

TEST_CASE("hypothesis warnings and notes")
{
    FamilyCharacteristics fam;
    fam.parameter_count = 2;
    fam.member_degree = 1;
    fam.values = {{"L1.L1", 1}, {"L1.P1", 1}, {"P1.P1", 1}, {"L2", 1}, {"P2", 1}, {"G2_2", 1}};
    auto c = curve(3, 3, {{2, 1}});
    c.has_flat_cusp = true;
    auto r = proto_contact({c, curve(2, 2)}, {2, 2}, fam);
    CHECK(r.hypothesis_warnings.size() == 2); // d + 1 < 4, flat cusp
    c.has_flat_cusp = false;
    c.has_profound_cusp = true;
    r = proto_contact({c}, {3}, fam);
    CHECK(r.hypothesis_warnings.size() == 2); // d + 1 < 3, profound cusp
    r = proto_contact({curve(3, 4)}, {3}, fam);
    CHECK(r.notes.size() == 1);
    CHECK(r.total == 3 + 4 + 12);
    CHECK_THROWS_AS(proto_contact({curve(3, 4)}, {2}, fam), InputError);
    CHECK_THROWS_AS(proto_contact({curve(3, 4)}, {}, fam), InputError);
}

TEST_CASE("lift class pairs to the characteristic numbers")
{
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        const auto t = build_tower(n);
        const auto basis = dual_basis(n, t);
        const auto columns = geometric_columns(n, t);
        const auto c = curve(5, 11, {{2, 3}, {3, 1}, {4, 2}, {5, 4}});
        const ChowClass lifted = lift_class(c, n, basis);
        // The same class written on the geometric columns, as displayed.
        const auto m = curve_module(c, n);
        ChowClass displayed = columns[0] * Rational(m.lambda) + columns[1] * Rational(m.pi);
        for (const auto &[k, coeff] : m.gamma) {
            displayed += columns[static_cast<std::size_t>(k)] * Rational(coeff);
        }
        for (const ChowClass &cls : {lifted, displayed}) {
            CHECK(integrate(multiply(ChowClass::h(n), cls, t), t) == 5);
            CHECK(integrate(multiply(ChowClass::hdual(n), cls, t), t) == 11);
            for (int j = 2; j <= n; ++j) {
                CHECK(integrate(multiply(ChowClass::i(n, j), cls, t), t) == Rational(c.kappa_at(j)));
            }
        }
    }
    const auto t2 = build_tower(2);
    CHECK_THROWS_AS(lift_class(curve(1, 0), 3, dual_basis(2, t2)), InputError);
    // A line: degree 1, class 0.
    const auto line = lift_class(curve(1, 0), 2, dual_basis(2, t2));
    CHECK(integrate(multiply(ChowClass::h(2), line, t2), t2) == 1);
    CHECK(integrate(multiply(ChowClass::hdual(2), line, t2), t2) == 0);
    CHECK(integrate(multiply(ChowClass::i(2, 2), line, t2), t2) == 0);
}

TEST_CASE("symbolic polynomials")
{
    const auto x = SymbolicPoly::symbol("x");
    const auto y = SymbolicPoly::symbol("y");
    const auto p = (x + y) * (x + y);
    CHECK(p.evaluate({{"x", 2}, {"y", 3}}) == 25);
    CHECK_THROWS_AS(p.evaluate({{"x", 2}}), InputError);
    CHECK((Integer(0) * p).is_zero());
}
