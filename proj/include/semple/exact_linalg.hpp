#ifndef SEMPLE_EXACT_LINALG_HPP
#define SEMPLE_EXACT_LINALG_HPP

#include <optional>
#include <vector>

#include <semple/numeric.hpp>

namespace semple {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

// Gauss-Jordan over Q. nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix &m);
std::optional<std::vector<Rational>> solve(const RationalMatrix &m, const std::vector<Rational> &rhs);

// Unique solution of a possibly overdetermined system a x = b; nullopt when
// the system is inconsistent or has more than one solution.
std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b);

// Scales each row by the lcm of its denominators. Rank is unchanged.
IntegerMatrix clear_denominators(const RationalMatrix &m);

// Exact rank and determinant; both go through fraction-free elimination.
std::size_t exact_rank(const RationalMatrix &m);
Rational determinant(const RationalMatrix &m);

} // namespace semple

#endif
