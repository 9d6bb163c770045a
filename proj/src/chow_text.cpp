#include <semple/tower_ring.hpp>

#include <algorithm>
#include <cctype>
#include <numeric>

#include <semple/errors.hpp>

namespace semple {

namespace {

std::string monomial_text(const Exponents &e)
{
    std::string out;
    auto append = [&out](const std::string &name, int power) {
        if (power == 0) {
            return;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += name;
        if (power > 1) {
            out += '^' + std::to_string(power);
        }
    };
    append("h", e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) {
        append("phi" + std::to_string(k), e[k]);
    }
    return out;
}

class ClassParser {
public:
    ClassParser(std::string_view text, int level) : text_(text), level_(level) {}

    ChowClass parse()
    {
        ChowClass out = expression();
        skip_space();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return out;
    }

private:
    [[noreturn]] void fail(const std::string &why) const
    {
        throw InputError("class text, column " + std::to_string(pos_ + 1) + ": " + why);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    ChowClass expression()
    {
        ChowClass out = term();
        for (;;) {
            if (accept('+')) {
                out += term();
            } else if (accept('-')) {
                out -= term();
            } else {
                return out;
            }
        }
    }

    ChowClass term()
    {
        ChowClass out = unary();
        while (accept('*')) {
            out = raw_product(out, unary());
        }
        return out;
    }

    ChowClass unary()
    {
        if (accept('-')) {
            return -unary();
        }
        if (accept('+')) {
            return unary();
        }
        ChowClass base = atom();
        if (accept('^')) {
            const int p = std::stoi(digits());
            ChowClass out = ChowClass::constant(level_, 1);
            for (int i = 0; i < p; ++i) {
                out = raw_product(out, base);
            }
            return out;
        }
        return base;
    }

    ChowClass atom()
    {
        skip_space();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            ChowClass inner = expression();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num = digits();
            if (accept('/')) {
                num += '/' + digits();
            }
            return ChowClass::constant(level_, parse_rational(num));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string name(text_.substr(start, pos_ - start));
            if (name == "h") {
                return ChowClass::h(level_);
            }
            if (name == "hdual") {
                return ChowClass::hdual(level_);
            }
            if (name == "phi" || name == "i") {
                const std::size_t at = pos_;
                if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at]))) {
                    fail("generator '" + name + "' needs an index");
                }
                const int k = std::stoi(digits());
                return name == "phi" ? ChowClass::phi(level_, k) : ChowClass::i(level_, k);
            }
            pos_ = start;
            fail("unknown generator '" + name + "'");
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    int level_;
    std::size_t pos_ = 0;
};

} // namespace

std::string to_string(const ChowClass &c)
{
    if (c.is_zero()) {
        return "0";
    }
    std::vector<std::pair<Exponents, Rational>> terms(c.terms().begin(), c.terms().end());
    auto degree = [](const Exponents &e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(terms.begin(), terms.end(), [&](const auto &a, const auto &b) {
        const int da = degree(a.first);
        const int db = degree(b.first);
        return da != db ? da > db : a.first > b.first;
    });
    std::string out;
    for (const auto &[e, v] : terms) {
        const std::string mono = monomial_text(e);
        Rational mag = abs(v);
        if (out.empty()) {
            out += v < 0 ? "-" : "";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        if (mono.empty()) {
            out += semple::to_string(mag);
        } else if (mag == 1) {
            out += mono;
        } else {
            out += semple::to_string(mag) + "*" + mono;
        }
    }
    return out;
}

ChowClass parse_class(std::string_view text, int level)
{
    return ClassParser(text, level).parse();
}

} // namespace semple
