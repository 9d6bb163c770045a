#ifndef SEMPLE_FORMULA_HPP
#define SEMPLE_FORMULA_HPP

// Symbolic proto-contact formulas: the product of contact modules of curves
// whose characteristic numbers are left as symbols.

#include <map>
#include <string>
#include <vector>

#include <semple/contact.hpp>
#include <semple/numeric.hpp>

namespace semple {

// Symbols of a curve named C: d_C, dcheck_C and kappa<j>_C.
std::string degree_symbol(const std::string &curve);
std::string class_symbol(const std::string &curve);
std::string kappa_symbol(const std::string &curve, int j);

// Polynomial with integer coefficients in named symbols.
class SymbolicPoly {
public:
    using Monomial = std::map<std::string, int>;

    SymbolicPoly() = default;
    static SymbolicPoly constant(const Integer &c);
    static SymbolicPoly symbol(const std::string &name);

    const std::map<Monomial, Integer> &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    SymbolicPoly &operator+=(const SymbolicPoly &other);
    friend SymbolicPoly operator+(SymbolicPoly a, const SymbolicPoly &b) { return a += b; }
    friend SymbolicPoly operator*(const SymbolicPoly &a, const SymbolicPoly &b);
    friend SymbolicPoly operator*(const Integer &c, const SymbolicPoly &p);
    friend bool operator==(const SymbolicPoly &, const SymbolicPoly &) = default;

    // Throws InputError when a symbol has no value.
    Integer evaluate(const std::map<std::string, Integer> &values) const;

    std::string to_string() const;

private:
    void add(const Monomial &m, const Integer &c);

    std::map<Monomial, Integer> terms_;
};

enum class FormulaFormat { Text, Latex };

// One linear form c_1 s_1 + ... (a module coefficient of one curve).
using LinearForm = std::vector<std::pair<int, std::string>>;

struct FormulaTerm {
    // Sorted tags, Lambda_0 included.
    std::vector<ContactTag> tags;
    // Distinct products of linear forms, each with its multiplicity; factors
    // within a product follow tag order.
    std::vector<std::pair<Integer, std::vector<LinearForm>>> products;
    SymbolicPoly coefficient;
};

struct Formula {
    std::vector<FormulaTerm> terms;
};

Formula expand_formula(const std::vector<std::string> &curves, const std::vector<int> &orders);

std::string render_coefficient(const FormulaTerm &term, FormulaFormat format);
std::string render_number(const std::vector<ContactTag> &tags, FormulaFormat format);
std::string render(const Formula &f, FormulaFormat format);

std::string emit_formula(const std::vector<std::string> &curves, const std::vector<int> &orders, FormulaFormat format);

} // namespace semple

#endif
