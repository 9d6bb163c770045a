#include <semple/exact_linalg.hpp>

#include <utility>

#include <semple/errors.hpp>
#include <semple/kernels.hpp>

namespace semple {

namespace {

// Reduced row echelon form of [m | extra] in place; returns false when m is
// singular (only meaningful for square m).
bool gauss_jordan(RationalMatrix &m, RationalMatrix &extra)
{
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) {
            ++p;
        }
        if (p == n) {
            return false;
        }
        std::swap(m[p], m[c]);
        std::swap(extra[p], extra[c]);
        const Rational pivot = m[c][c];
        for (auto &v : m[c]) {
            v /= pivot;
        }
        for (auto &v : extra[c]) {
            v /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) {
                continue;
            }
            const Rational f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) {
                m[r][k] -= f * m[c][k];
            }
            for (std::size_t k = 0; k < extra[r].size(); ++k) {
                extra[r][k] -= f * extra[c][k];
            }
        }
    }
    return true;
}

void require_square(const RationalMatrix &m)
{
    for (const auto &row : m) {
        if (row.size() != m.size()) {
            throw InputError("matrix is not square");
        }
    }
}

} // namespace

std::optional<RationalMatrix> inverse(const RationalMatrix &m)
{
    require_square(m);
    RationalMatrix a = m;
    RationalMatrix id(m.size(), std::vector<Rational>(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        id[i][i] = 1;
    }
    if (!gauss_jordan(a, id)) {
        return std::nullopt;
    }
    return id;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix &m, const std::vector<Rational> &rhs)
{
    require_square(m);
    if (rhs.size() != m.size()) {
        throw InputError("right-hand side has the wrong length");
    }
    RationalMatrix a = m;
    RationalMatrix b(rhs.size());
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        b[i] = {rhs[i]};
    }
    if (!gauss_jordan(a, b)) {
        return std::nullopt;
    }
    std::vector<Rational> x;
    for (auto &row : b) {
        x.push_back(row[0]);
    }
    return x;
}

IntegerMatrix clear_denominators(const RationalMatrix &m)
{
    IntegerMatrix out;
    out.reserve(m.size());
    for (const auto &row : m) {
        Integer l = 1;
        for (const auto &v : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        }
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const auto &v : row) {
            r.push_back(v.get_num() * (l / v.get_den()));
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::size_t exact_rank(const RationalMatrix &m)
{
    return kernels::bareiss_serial(clear_denominators(m)).rank;
}

Rational determinant(const RationalMatrix &m)
{
    require_square(m);
    Integer scale = 1;
    for (const auto &row : m) {
        Integer l = 1;
        for (const auto &v : row) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        }
        scale *= l;
    }
    const auto res = kernels::bareiss_serial(clear_denominators(m));
    Rational det(res.determinant, scale);
    det.canonicalize();
    return det;
}

std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b)
{
    if (a.size() != b.size()) {
        throw InputError("right-hand side length does not match the row count");
    }
    const std::size_t cols = a.empty() ? 0 : a.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            return std::nullopt;
        }
        std::swap(a[p], a[rank]);
        std::swap(b[p], b[rank]);
        const Rational pivot = a[rank][c];
        for (auto &v : a[rank]) {
            v /= pivot;
        }
        b[rank] /= pivot;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) {
                continue;
            }
            const Rational f = a[r][c];
            for (std::size_t k = c; k < cols; ++k) {
                if (a[rank][k] != 0) {
                    a[r][k] -= f * a[rank][k];
                }
            }
            b[r] -= f * b[rank];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < b.size(); ++r) {
        if (b[r] != 0) {
            return std::nullopt;
        }
    }
    b.resize(cols);
    return b;
}

} // namespace semple
