#include <semple/series.hpp>

#include <algorithm>

#include <semple/errors.hpp>

namespace semple {

TruncatedSeries::TruncatedSeries(const Coefficients &coeffs, int precision) : precision_(precision)
{
    for (const auto &[e, c] : coeffs) {
        if (e < precision && c != 0) {
            coeffs_.emplace(e, c);
        }
    }
}

TruncatedSeries TruncatedSeries::monomial(const Rational &c, int exponent, int precision)
{
    return TruncatedSeries({{exponent, c}}, precision);
}

std::optional<int> TruncatedSeries::valuation() const
{
    if (coeffs_.empty()) {
        return std::nullopt;
    }
    return coeffs_.begin()->first;
}

int TruncatedSeries::valuation_bound() const { return valuation().value_or(precision_); }

Rational TruncatedSeries::coefficient(int e) const
{
    if (e >= precision_) {
        throw PrecisionError("coefficient of t^" + std::to_string(e) + " is beyond precision " +
                                 std::to_string(precision_),
                             e + 1 - precision_);
    }
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

TruncatedSeries TruncatedSeries::without_constant() const
{
    TruncatedSeries out = *this;
    out.coeffs_.erase(0);
    return out;
}

TruncatedSeries TruncatedSeries::derivative() const
{
    Coefficients d;
    for (const auto &[e, c] : coeffs_) {
        if (e != 0) {
            d.emplace(e - 1, c * e);
        }
    }
    return TruncatedSeries(d, precision_ - 1);
}

TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
{
    TruncatedSeries::Coefficients sum = a.coeffs_;
    for (const auto &[e, c] : b.coeffs_) {
        sum[e] += c;
    }
    return TruncatedSeries(sum, std::min(a.precision_, b.precision_));
}

TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b) { return a + Rational(-1) * b; }

TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a)
{
    TruncatedSeries::Coefficients out;
    for (const auto &[e, v] : a.coeffs_) {
        out.emplace(e, v * c);
    }
    return TruncatedSeries(out, a.precision_);
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int precision = std::min(a.precision_ + b.valuation_bound(), b.precision_ + a.valuation_bound());
    TruncatedSeries::Coefficients out;
    for (const auto &[ea, ca] : a.coeffs_) {
        for (const auto &[eb, cb] : b.coeffs_) {
            if (ea + eb < precision) {
                out[ea + eb] += ca * cb;
            }
        }
    }
    return TruncatedSeries(out, precision);
}

TruncatedSeries divide(const TruncatedSeries &a, const TruncatedSeries &b, const std::string &needed)
{
    const auto vb = b.valuation();
    if (!vb) {
        throw PrecisionError("valuation of the " + needed + " is not determined below t^" +
                                 std::to_string(b.precision()),
                             1);
    }
    // b = t^vb u with u a unit known to relative precision rel.
    const int rel = b.precision() - *vb;
    const Rational u0 = b.coefficient(*vb);
    std::vector<Rational> inv(static_cast<std::size_t>(rel));
    for (int k = 0; k < rel; ++k) {
        Rational s = k == 0 ? Rational(1) : Rational(0);
        for (int m = 1; m <= k; ++m) {
            const Rational bm = b.coefficient(*vb + m);
            if (bm != 0) {
                s -= bm * inv[static_cast<std::size_t>(k - m)];
            }
        }
        inv[static_cast<std::size_t>(k)] = s / u0;
    }
    TruncatedSeries::Coefficients ic;
    for (int k = 0; k < rel; ++k) {
        ic.emplace(k, inv[static_cast<std::size_t>(k)]);
    }
    TruncatedSeries::Coefficients shifted;
    for (const auto &[e, c] : a.coefficients()) {
        shifted.emplace(e - *vb, c);
    }
    return TruncatedSeries(shifted, a.precision() - *vb) * TruncatedSeries(ic, rel);
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries &u) const
{
    if (u.valuation() != 1) {
        throw InputError("reparametrization must have valuation 1");
    }
    if (!coeffs_.empty() && coeffs_.begin()->first < 0) {
        throw InputError("composition needs a series without negative exponents");
    }
    TruncatedSeries out({}, precision_);
    TruncatedSeries power({{0, Rational(1)}}, precision_ + u.precision());
    int e = 0;
    for (const auto &[exp, c] : coeffs_) {
        while (e < exp) {
            power = power * u;
            ++e;
        }
        out = out + c * power;
    }
    return out;
}

std::string TruncatedSeries::to_string() const
{
    std::string out;
    for (const auto &[e, c] : coeffs_) {
        if (!out.empty()) {
            out += " + ";
        }
        out += "(" + semple::to_string(c) + ")*t^" + std::to_string(e);
    }
    if (!out.empty()) {
        out += " + ";
    }
    return out + "O(t^" + std::to_string(precision_) + ")";
}

bool agree(const TruncatedSeries &a, const TruncatedSeries &b)
{
    const int p = std::min(a.precision(), b.precision());
    return TruncatedSeries(a.coefficients(), p) == TruncatedSeries(b.coefficients(), p);
}

} // namespace semple
