#ifndef SEMPLE_SWEEPS_HPP
#define SEMPLE_SWEEPS_HPP

// Parameter sweeps behind `semple verify`: the identities (a)-(g) and the
// rank statements for the universal-family matrices.  Each task draws its
// random points from its own seeded generator, so the serial and OpenMP
// runners produce identical case lists.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <semple/lemma_b.hpp>
#include <semple/numeric.hpp>

namespace semple {

inline constexpr std::uint64_t kDefaultSeed = 20260315;

struct VerifyCase {
    std::string group;
    std::vector<int> params;
    std::string label;
    Verdict verdict = Verdict::Fail;
    std::string detail;
};

struct SweepOptions {
    std::uint64_t seed = kDefaultSeed;
    int max_j = 4;
    int max_m = 4;
    int max_k = 6;
    int max_i_unbounded = 6; // i range for (b) and (c)
    int points_per_chart = 20;
    bool lemma_b = true;
    bool matrices = true;
};

std::vector<VerifyCase> run_sweep_serial(const SweepOptions &options);
std::vector<VerifyCase> run_sweep_omp(const SweepOptions &options);

// Uniform small rationals num/den, |num| <= 9, 1 <= den <= 6.
Rational random_rational(std::mt19937_64 &rng, bool nonzero = false);

} // namespace semple

#endif
