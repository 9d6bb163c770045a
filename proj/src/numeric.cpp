#include <semple/numeric.hpp>

#include <semple/errors.hpp>

namespace semple {

std::string to_string(const Integer &z) { return z.get_str(); }

std::string to_string(const Rational &q) { return q.get_str(); }

Rational parse_rational(std::string_view text)
{
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
            s.remove_prefix(1);
        }
        if (s.empty()) {
            return false;
        }
        for (char ch : s) {
            if (ch < '0' || ch > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
        throw InputError("not a rational number: '" + std::string(text) + "'");
    }
    std::string ns(num);
    if (ns.front() == '+') {
        ns.erase(0, 1);
    }
    const Integer d{std::string(den)};
    if (d == 0) {
        throw InputError("zero denominator in '" + std::string(text) + "'");
    }
    Rational q(Integer(ns), d);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

} // namespace semple
