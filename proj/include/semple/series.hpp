#ifndef SEMPLE_SERIES_HPP
#define SEMPLE_SERIES_HPP

// Truncated Laurent series in t with rational coefficients.  A series with
// precision p knows every coefficient of t^e for e < p exactly and nothing
// above.  Every operation computes the precision its result is entitled to.

#include <map>
#include <optional>
#include <string>

#include <semple/numeric.hpp>

namespace semple {

class TruncatedSeries {
public:
    using Coefficients = std::map<int, Rational>;

    TruncatedSeries() = default;
    // Coefficients at exponents >= precision are discarded.
    TruncatedSeries(const Coefficients &coeffs, int precision);

    static TruncatedSeries monomial(const Rational &c, int exponent, int precision);

    int precision() const noexcept { return precision_; }
    const Coefficients &coefficients() const noexcept { return coeffs_; }

    // Lowest exponent with a nonzero coefficient; nullopt when the series is
    // zero below its precision (then the valuation is at least precision()).
    std::optional<int> valuation() const;
    // valuation() or, failing that, precision().
    int valuation_bound() const;

    // Throws PrecisionError past the precision.
    Rational coefficient(int e) const;

    TruncatedSeries without_constant() const;
    TruncatedSeries derivative() const;

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b);
    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a);

    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

    // f(u(t)) for val(u) = 1 and val(f) >= 0.
    TruncatedSeries compose(const TruncatedSeries &u) const;

    std::string to_string() const;

private:
    Coefficients coeffs_;
    int precision_ = 0;
};

// a / b.  Throws PrecisionError when val(b) is not determined; `needed`
// names the quantity for the diagnostic.
TruncatedSeries divide(const TruncatedSeries &a, const TruncatedSeries &b, const std::string &needed = "divisor");

// Coefficients agree below the smaller precision.
bool agree(const TruncatedSeries &a, const TruncatedSeries &b);

} // namespace semple

#endif
