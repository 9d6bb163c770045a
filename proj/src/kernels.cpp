#include <semple/kernels.hpp>

#include <utility>

namespace semple::kernels {

namespace {

// Row-echelon Bareiss with column skipping for rank-deficient input.
// On return rows [0, rank) are the pivot rows.
template <bool Parallel>
BareissResult bareiss(IntegerMatrix m)
{
    BareissResult out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    Integer prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        const Integer &p = m[r][c];
        const auto below = static_cast<long>(rows);
        const auto start = static_cast<long>(r + 1);
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long i = start; i < below; ++i) {
                auto &row = m[static_cast<std::size_t>(i)];
                const Integer factor = row[c];
                for (std::size_t k = c; k < cols; ++k) {
                    row[k] = (p * row[k] - factor * m[r][k]);
                    mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), prev.get_mpz_t());
                }
            }
        } else {
            for (long i = start; i < below; ++i) {
                auto &row = m[static_cast<std::size_t>(i)];
                const Integer factor = row[c];
                for (std::size_t k = c; k < cols; ++k) {
                    row[k] = (p * row[k] - factor * m[r][k]);
                    mpz_divexact(row[k].get_mpz_t(), row[k].get_mpz_t(), prev.get_mpz_t());
                }
            }
        }
        prev = p;
        ++r;
    }
    out.rank = r;
    if (rows == cols && r == rows) {
        out.determinant = rows == 0 ? Integer(1) : Integer(sign * m[rows - 1][cols - 1]);
    } else {
        out.determinant = 0;
    }
    return out;
}

} // namespace

BareissResult bareiss_serial(IntegerMatrix m) { return bareiss<false>(std::move(m)); }

BareissResult bareiss_omp(IntegerMatrix m) { return bareiss<true>(std::move(m)); }

} // namespace semple::kernels
