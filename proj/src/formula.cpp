#include <semple/formula.hpp>

#include <algorithm>

#include <semple/errors.hpp>

namespace semple {

std::string degree_symbol(const std::string &curve) { return "d_" + curve; }
std::string class_symbol(const std::string &curve) { return "dcheck_" + curve; }
std::string kappa_symbol(const std::string &curve, int j) { return "kappa" + std::to_string(j) + "_" + curve; }

SymbolicPoly SymbolicPoly::constant(const Integer &c)
{
    SymbolicPoly p;
    p.add({}, c);
    return p;
}

SymbolicPoly SymbolicPoly::symbol(const std::string &name)
{
    SymbolicPoly p;
    p.add({{name, 1}}, 1);
    return p;
}

void SymbolicPoly::add(const Monomial &m, const Integer &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SymbolicPoly &SymbolicPoly::operator+=(const SymbolicPoly &other)
{
    for (const auto &[m, c] : other.terms_) {
        add(m, c);
    }
    return *this;
}

SymbolicPoly operator*(const SymbolicPoly &a, const SymbolicPoly &b)
{
    SymbolicPoly out;
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            SymbolicPoly::Monomial m = ma;
            for (const auto &[s, e] : mb) {
                m[s] += e;
            }
            out.add(m, ca * cb);
        }
    }
    return out;
}

SymbolicPoly operator*(const Integer &c, const SymbolicPoly &p) { return SymbolicPoly::constant(c) * p; }

Integer SymbolicPoly::evaluate(const std::map<std::string, Integer> &values) const
{
    Integer total = 0;
    for (const auto &[m, c] : terms_) {
        Integer v = c;
        for (const auto &[s, e] : m) {
            auto it = values.find(s);
            if (it == values.end()) {
                throw InputError("no value for symbol '" + s + "'");
            }
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), it->second.get_mpz_t(), static_cast<unsigned long>(e));
            v *= p;
        }
        total += v;
    }
    return total;
}

std::string SymbolicPoly::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[m, c] : terms_) {
        std::string mono;
        for (const auto &[s, e] : m) {
            if (!mono.empty()) {
                mono += '*';
            }
            mono += s;
            if (e > 1) {
                mono += '^' + std::to_string(e);
            }
        }
        const Integer mag = abs(c);
        out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            out += mag == 1 ? mono : mag.get_str() + "*" + mono;
        }
    }
    return out;
}

namespace {

// Coefficient of `tag` in the module of `curve`, as a linear form.
LinearForm module_coefficient(const ContactTag &tag, const std::string &curve)
{
    switch (tag.kind) {
    case TagKind::Lambda:
        return {{1, degree_symbol(curve)}};
    case TagKind::Pi:
        return {{1, class_symbol(curve)}};
    case TagKind::Gamma: {
        LinearForm f{{gamma_class_weight(tag.k), class_symbol(curve)}};
        for (int m = 2; m <= tag.k; ++m) {
            f.emplace_back(gamma_kappa_weight(tag.k, m), kappa_symbol(curve, m));
        }
        return f;
    }
    }
    return {};
}

std::vector<ContactTag> module_tags(int n)
{
    std::vector<ContactTag> tags{ContactTag::lambda(n)};
    if (n > 0) {
        tags.push_back(ContactTag::pi(n));
        for (int k = 2; k <= n; ++k) {
            tags.push_back(ContactTag::gamma(k, n));
        }
    }
    return tags;
}

SymbolicPoly linear_poly(const LinearForm &f)
{
    SymbolicPoly p;
    for (const auto &[c, s] : f) {
        p += Integer(c) * SymbolicPoly::symbol(s);
    }
    return p;
}

// "d_C" -> ("d", "C"), "dcheck_C" -> ("dcheck", "C"), "kappa2_C" -> ("kappa2", "C")
std::pair<std::string, std::string> split_symbol(const std::string &s)
{
    const auto us = s.find('_');
    return {s.substr(0, us), us == std::string::npos ? std::string() : s.substr(us + 1)};
}

std::string subscript(const std::string &body, FormulaFormat format)
{
    if (format == FormulaFormat::Latex || body.size() > 1) {
        return "_{" + body + "}";
    }
    return "_" + body;
}

std::string render_symbol(const std::string &s, FormulaFormat format)
{
    const auto [stem, curve] = split_symbol(s);
    const bool tex = format == FormulaFormat::Latex;
    if (stem == "d") {
        return "d" + subscript(curve, format);
    }
    if (stem == "dcheck") {
        return (tex ? "\\check d" : "ď") + subscript(curve, format);
    }
    if (stem.rfind("kappa", 0) == 0) {
        return (tex ? "\\kappa" : "κ") + subscript(stem.substr(5) + curve, format);
    }
    return s;
}

std::string render_linear(const LinearForm &f, FormulaFormat format)
{
    std::string out;
    for (const auto &[c, s] : f) {
        if (!out.empty()) {
            out += " + ";
        }
        if (c != 1) {
            out += std::to_string(c);
        }
        out += render_symbol(s, format);
    }
    return f.size() > 1 ? "(" + out + ")" : out;
}

std::string render_product(const std::vector<LinearForm> &product, FormulaFormat format)
{
    std::string out;
    bool previous_parenthesized = true;
    for (const auto &f : product) {
        const std::string piece = render_linear(f, format);
        const bool parenthesized = piece.front() == '(';
        if (!out.empty() && !parenthesized && !previous_parenthesized) {
            out += ' ';
        }
        out += piece;
        previous_parenthesized = parenthesized;
    }
    return out;
}

std::string render_tag(const ContactTag &t, FormulaFormat format)
{
    const bool tex = format == FormulaFormat::Latex;
    const std::string n = std::to_string(t.weight);
    switch (t.kind) {
    case TagKind::Lambda:
        return (tex ? "\\lambda" : "λ") + subscript(n, format);
    case TagKind::Pi:
        return (tex ? "\\pi" : "π") + subscript(n, format);
    case TagKind::Gamma:
        return (tex ? "\\gamma" : "γ") + subscript(n, format) + (tex ? "^{" + std::to_string(t.k) + "}" : "^" + std::to_string(t.k));
    }
    return {};
}

std::string power_suffix(int e, FormulaFormat format)
{
    if (e == 1) {
        return {};
    }
    return format == FormulaFormat::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
}

} // namespace

Formula expand_formula(const std::vector<std::string> &curves, const std::vector<int> &orders)
{
    if (curves.empty() || curves.size() != orders.size()) {
        throw InputError("need one contact order per curve and at least one curve");
    }
    for (int o : orders) {
        if (o < 1) {
            throw InputError("contact orders must be positive");
        }
    }
    // Ordered expansion: each entry is a choice of tag per curve.
    std::vector<std::vector<ContactTag>> choices{{}};
    for (int o : orders) {
        std::vector<std::vector<ContactTag>> next;
        for (const auto &partial : choices) {
            for (const auto &t : module_tags(o - 1)) {
                auto c = partial;
                c.push_back(t);
                next.push_back(std::move(c));
            }
        }
        choices = std::move(next);
    }
    std::map<std::vector<ContactTag>, FormulaTerm> grouped;
    for (const auto &choice : choices) {
        std::vector<std::pair<ContactTag, std::size_t>> positioned;
        for (std::size_t i = 0; i < choice.size(); ++i) {
            positioned.emplace_back(choice[i], i);
        }
        std::sort(positioned.begin(), positioned.end());
        std::vector<ContactTag> tags;
        std::vector<LinearForm> product;
        SymbolicPoly value = SymbolicPoly::constant(1);
        for (const auto &[tag, i] : positioned) {
            tags.push_back(tag);
            product.push_back(module_coefficient(tag, curves[i]));
            value = value * linear_poly(product.back());
        }
        FormulaTerm &term = grouped[tags];
        term.tags = tags;
        term.coefficient += value;
        auto same = std::find_if(term.products.begin(), term.products.end(),
                                 [&](const auto &p) { return p.second == product; });
        if (same == term.products.end()) {
            term.products.emplace_back(Integer(1), std::move(product));
        } else {
            same->first += 1;
        }
    }
    Formula f;
    for (auto &[tags, term] : grouped) {
        f.terms.push_back(std::move(term));
    }
    return f;
}

std::string render_coefficient(const FormulaTerm &term, FormulaFormat format)
{
    std::string out;
    for (const auto &[mult, product] : term.products) {
        if (!out.empty()) {
            out += " + ";
        }
        if (mult != 1) {
            out += mult.get_str();
            out += format == FormulaFormat::Latex ? " " : "";
        }
        out += render_product(product, format);
    }
    return term.products.size() > 1 ? "(" + out + ")" : out;
}

std::string render_number(const std::vector<ContactTag> &tags, FormulaFormat format)
{
    std::string out;
    auto append = [&out](const std::string &piece) {
        if (!out.empty()) {
            out += ' ';
        }
        out += piece;
    };
    std::size_t i = 0;
    while (i < tags.size()) {
        std::size_t j = i;
        while (j < tags.size() && tags[j] == tags[i]) {
            ++j;
        }
        const int e = static_cast<int>(j - i);
        if (tags[i].is_lambda0()) {
            append("d" + power_suffix(e, format));
        } else {
            const std::string base = render_tag(tags[i], format);
            append(e > 1 ? "(" + base + ")" + power_suffix(e, format) : base);
        }
        i = j;
    }
    return out.empty() ? "1" : out;
}

std::string render(const Formula &f, FormulaFormat format)
{
    std::string out;
    for (const auto &term : f.terms) {
        if (!out.empty()) {
            out += " + ";
        }
        out += render_coefficient(term, format) + " " + render_number(term.tags, format);
    }
    return out.empty() ? "0" : out;
}

std::string emit_formula(const std::vector<std::string> &curves, const std::vector<int> &orders, FormulaFormat format)
{
    return render(expand_formula(curves, orders), format);
}

} // namespace semple
