#ifndef SEMPLE_TEST_SUPPORT_HPP
#define SEMPLE_TEST_SUPPORT_HPP

#include <random>
#include <vector>

#include <semple/sweeps.hpp>
#include <semple/tower_ring.hpp>

namespace semple::test {

inline std::mt19937_64 rng(std::uint64_t salt = 0)
{
    std::seed_seq seq{static_cast<std::uint32_t>(kDefaultSeed), static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

// A few normal-form monomials of one codimension with small coefficients.
inline ChowClass random_class(std::mt19937_64 &g, int level, int codim, int terms = 3)
{
    const auto basis = monomial_basis(level, codim);
    ChowClass c(level);
    if (basis.empty()) {
        return c;
    }
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < terms; ++t) {
        c += ChowClass(level, {{basis[pick(g)], random_rational(g, true)}});
    }
    return c;
}

inline std::vector<Integer> fibonacci(int count)
{
    std::vector<Integer> f{1, 1};
    while (static_cast<int>(f.size()) < count) {
        f.push_back(f[f.size() - 1] + f[f.size() - 2]);
    }
    return f;
}

} // namespace semple::test

#endif
