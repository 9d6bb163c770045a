#ifndef SEMPLE_LEMMA_B_HPP
#define SEMPLE_LEMMA_B_HPP

// Brute-force checks of the identities (a)-(g) satisfied by P and Q on a
// secondary chart.
//
// Parameter tuples (the chart supplies j and m = n-j+1):
//   a: (k, i)         k >= j,  0 <= i <= 2(k-j+1)
//   b: (i, q)         i, q >= 1
//   c: (h, i)         0 <= h <= j-1,  i >= 0
//   d: (h, i)         0 <= h <= j-1,  0 <= i <= 2(j-1-h)+1
//   e: (h, i, a, b)   h >= 1,  i >= 2,  phi = x^a y^b unless given
//   f: (k, h, i)      k >= 0,  0 <= h <= j-1,  0 <= i <= 2(k+j-1-h)+1
//   g: (k, i)         k >= 0,  0 <= i <= 2k+1

#include <optional>
#include <string>
#include <vector>

#include <semple/jet_operators.hpp>

namespace semple {

enum class Verdict { Pass, Fail, Skip };

struct LemmaBResult {
    char statement = 'a';
    std::vector<int> params;
    Verdict verdict = Verdict::Fail;
    // Coefficient c and power e when the residue is claimed to be c (x'')^e.
    std::optional<Rational> coefficient;
    std::optional<int> power;
    std::string detail;
};

LemmaBResult lemma_b_check(char statement, const std::vector<int> &params, const ChartSpec &chart,
                           const std::optional<JetPolynomial> &phi = std::nullopt);

// All i from 0 (or the statement's lower limit) to its bound, sharing one
// run of Q.  `params` omits i.
std::vector<LemmaBResult> lemma_b_series(char statement, const std::vector<int> &params, const ChartSpec &chart);

} // namespace semple

#endif
