#ifndef SEMPLE_TOWER_RING_HPP
#define SEMPLE_TOWER_RING_HPP

// Chow ring A*(F(n)) of the Semple tower over the projective plane.
//
// Internally every class is written over the generators (h, phi_1, ..., phi_n),
// where phi_k = c_1(O_{F(k)}(1)).  The ring is an iterated projective-bundle
// ring, so the monomials h^a * prod phi_k^{e_k} with a <= 2 and e_k <= 1 form a
// free basis; reduction to that basis rewrites phi_k^2 from the highest index
// downward.  The geometric generators are aliases:
//
//     hdual = phi_1 + 2h,        i_k = phi_k - phi_{k-1}   (k >= 2).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <semple/numeric.hpp>

namespace semple {

// Exponents over (h, phi_1, ..., phi_n); index 0 is h.
using Exponents = std::vector<int>;

class ChowClass {
public:
    using Terms = std::map<Exponents, Rational>;

    ChowClass() = default;
    explicit ChowClass(int level);
    ChowClass(int level, Terms terms);

    static ChowClass constant(int level, const Rational &c);
    static ChowClass h(int level);
    static ChowClass hdual(int level);
    // phi_k, 1 <= k <= level.
    static ChowClass phi(int level, int k);
    // i_k = phi_k - phi_{k-1}, 2 <= k <= level.
    static ChowClass i(int level, int k);

    int level() const noexcept { return level_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Common total degree of all monomials; nullopt for the zero class
    // or a non-homogeneous one.
    std::optional<int> codim() const;
    bool is_homogeneous() const;

    // Coefficient of a monomial, zero when absent.
    Rational coefficient(const Exponents &e) const;

    // Same class viewed on a higher level of the tower (pullback).
    ChowClass pullback(int level) const;

    ChowClass operator-() const;
    ChowClass &operator+=(const ChowClass &other);
    ChowClass &operator-=(const ChowClass &other);
    ChowClass &operator*=(const Rational &c);

    friend ChowClass operator+(ChowClass a, const ChowClass &b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass &b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Rational &c) { return a *= c; }
    friend ChowClass operator*(const Rational &c, ChowClass a) { return a *= c; }

    // Exact equality of stored terms; compare normal forms for ring equality.
    friend bool operator==(const ChowClass &, const ChowClass &) = default;

    // Raw polynomial product, no reduction.
    friend ChowClass raw_product(const ChowClass &a, const ChowClass &b);

private:
    void add_term(const Exponents &e, const Rational &c);

    int level_ = 0;
    Terms terms_;
};

// Rewrite data for A*(F(n)).
struct TowerPresentation {
    int level = 0;
    // chern1[k], chern2[k] = c_1, c_2 of the focal bundle F_k, k = 0..level-1,
    // each stored as a normal-form class on level k.
    std::vector<ChowClass> chern1;
    std::vector<ChowClass> chern2;
    // relations[k-1]: normal form of phi_k^2 (on level k), k = 1..level.
    std::vector<ChowClass> relations;
};

TowerPresentation build_tower(int n);

// Normal form of an arbitrary polynomial class over the tower's generators.
ChowClass normal_form(const ChowClass &c, const TowerPresentation &tower);

// Product in A*(F(n)).  Throws InputError if either operand lives above the
// tower's level.
ChowClass multiply(const ChowClass &a, const ChowClass &b, const TowerPresentation &tower);

ChowClass power(const ChowClass &a, int exponent, const TowerPresentation &tower);

// Degree map: the coefficient of h^2 phi_1 ... phi_n in normal form.
// Non-homogeneous input or codimension below n+2 throws InputError; higher
// codimension integrates to 0.
Rational integrate(const ChowClass &c, const TowerPresentation &tower);

// Normal-form monomials of A^{codim}(F(n)), graded-lex descending.
std::vector<Exponents> monomial_basis(int n, int codim);

struct GeometricBasis {
    int level = 0;
    // Basis of A^{n+1}: dual to dual_list under the intersection pairing.
    // Order: hdual^2 z_n, h^2 i_2..i_n, h^2 hdual i_3..i_n,
    //        h^2 hdual z_2 i_4..i_n, ..., h^2 hdual z_{n-1}.
    std::vector<ChowClass> codim_basis;
    // h, hdual, 3 hdual + i_2, 4 hdual + 3 i_2 + i_3, ...
    std::vector<ChowClass> dual_list;
};

// The A^1 list h, hdual, (k+1) hdual + k i_2 + ... + 3 i_{k-1} + i_k (k = 2..n).
std::vector<ChowClass> dual_list(int n);

GeometricBasis dual_basis(int n, const TowerPresentation &tower);

// Pairing of h, hdual, i_2, ..., i_n with the geometric columns.
struct PairingMatrix {
    int level = 0;
    std::vector<std::vector<Integer>> entries;
    std::vector<std::string> row_labels;
    std::vector<std::string> column_labels;
};

PairingMatrix pairing_matrix(int n, const TowerPresentation &tower);

// z_k = [Z_k] in A^{k-1}(F(k)), the class of the lifted line germs, pinned
// down by i_j z_k = 0 (2 <= j <= k) and int h^2 hdual z_k = int h hdual^2 z_k = 1.
// Returned on level k; z_1 = 1.  Throws InvariantError if those conditions
// do not determine a unique class.
ChowClass solve_z(int k);

// Column classes of the pairing table, on level n:
//   hdual^2 z_n, h^2 i_2..i_n, and h^2 hdual z_m i_{m+2}..i_n for m = 1..n-1.
std::vector<ChowClass> geometric_columns(int n, const TowerPresentation &tower);

// z_2 = a h + b hdual + c i_2 on F(2): solve_z(2), checked against
//   int z2 h^2 hdual = int z2 h hdual^2 = 1,  int z2 h^2 i_2 = 0,  i_2 z_2 = 0.
// Returned on level 2 regardless of the tower level (which must be >= 2).
ChowClass solve_z2(const TowerPresentation &tower);

// Right-hand side of the quadratic relation for i_k^2 in the geometric
// generators: i_k^2 = (h_coeff h + hdual_coeff hdual + sum_m i_coeffs[m] i_m) i_k.
struct IkRelation {
    int k = 0;
    Rational h_coeff;
    Rational hdual_coeff;
    std::map<int, Rational> i_coeffs; // m = 2 .. k-1
};

// The published relation: (2k-1) h - (k+1) hdual - k i_2 - (k-1) i_3 - ... - 3 i_{k-1}.
IkRelation theorem1_relation(int k);

// True iff i_k^2 - rhs * i_k reduces to zero.
bool relation_holds(const IkRelation &rel, const TowerPresentation &tower);

bool theorem1_check(int k, const TowerPresentation &tower);

// Text form: "coeff*h^a*phi1^e1*..." terms in graded-lex order, or "0".
std::string to_string(const ChowClass &c);

// Parses sums of products of rationals and generators h, hdual, phiK, iK
// (with optional ^exponent and parentheses) on the given level.
ChowClass parse_class(std::string_view text, int level);

} // namespace semple

#endif
