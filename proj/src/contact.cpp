#include <semple/contact.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>

#include <semple/errors.hpp>

namespace semple {

Integer CurveCharacteristics::kappa_at(int j) const
{
    auto it = kappa.find(j);
    return it == kappa.end() ? Integer(0) : it->second;
}

std::string ContactTag::key() const
{
    switch (kind) {
    case TagKind::Lambda:
        return "L" + std::to_string(weight);
    case TagKind::Pi:
        return "P" + std::to_string(weight);
    case TagKind::Gamma:
        return "G" + std::to_string(k) + "_" + std::to_string(weight);
    }
    return {};
}

namespace {

int parse_index(std::string_view text, const std::string &whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw InputError("bad indeterminate tag '" + whole + "'");
    }
    return value;
}

std::vector<std::string> split_key(const std::string &key)
{
    std::vector<std::string> parts;
    if (key.empty()) {
        return parts;
    }
    std::size_t start = 0;
    for (;;) {
        const std::size_t dot = key.find('.', start);
        parts.push_back(key.substr(start, dot - start));
        if (dot == std::string::npos) {
            break;
        }
        start = dot + 1;
    }
    return parts;
}

std::string join_tags(std::vector<ContactTag> tags)
{
    std::sort(tags.begin(), tags.end());
    std::string out;
    for (const auto &t : tags) {
        if (!out.empty()) {
            out += '.';
        }
        out += t.key();
    }
    return out;
}

} // namespace

ContactTag parse_tag(const std::string &key)
{
    if (key.size() < 2) {
        throw InputError("bad indeterminate tag '" + key + "'");
    }
    const std::string_view body = std::string_view(key).substr(1);
    ContactTag tag;
    switch (key[0]) {
    case 'L':
        tag = ContactTag::lambda(parse_index(body, key));
        break;
    case 'P':
        tag = ContactTag::pi(parse_index(body, key));
        if (tag.weight < 1) {
            throw InputError("Pi needs weight >= 1: '" + key + "'");
        }
        break;
    case 'G': {
        const auto us = body.find('_');
        if (us == std::string_view::npos) {
            throw InputError("bad indeterminate tag '" + key + "'");
        }
        tag = ContactTag::gamma(parse_index(body.substr(0, us), key), parse_index(body.substr(us + 1), key));
        if (tag.k < 2 || tag.k > tag.weight) {
            throw InputError("Gamma index outside 2..n: '" + key + "'");
        }
        break;
    }
    default:
        throw InputError("bad indeterminate tag '" + key + "'");
    }
    return tag;
}

std::string canonicalize_key(const std::string &key)
{
    std::vector<ContactTag> tags;
    for (const auto &part : split_key(key)) {
        ContactTag t = parse_tag(part);
        if (t.is_lambda0()) {
            throw InputError("L0 never appears in a family key; it is handled by the member degree");
        }
        tags.push_back(t);
    }
    return join_tags(std::move(tags));
}

std::vector<std::pair<ContactTag, Integer>> ContactModule::terms() const
{
    std::vector<std::pair<ContactTag, Integer>> out;
    if (lambda != 0) {
        out.emplace_back(ContactTag::lambda(weight), lambda);
    }
    if (weight == 0) {
        return out;
    }
    if (pi != 0) {
        out.emplace_back(ContactTag::pi(weight), pi);
    }
    for (const auto &[k, c] : gamma) {
        if (c != 0) {
            out.emplace_back(ContactTag::gamma(k, weight), c);
        }
    }
    return out;
}

int gamma_class_weight(int k) { return k + 1; }

int gamma_kappa_weight(int k, int m) { return m == k ? 1 : k + 2 - m; }

ContactModule curve_module(const CurveCharacteristics &c, int n)
{
    if (n < 0) {
        throw InputError("module weight must be nonnegative");
    }
    ContactModule m;
    m.weight = n;
    m.lambda = c.degree;
    if (n == 0) {
        return m;
    }
    m.pi = c.class_number;
    for (int k = 2; k <= n; ++k) {
        Integer coeff = gamma_class_weight(k) * c.class_number;
        for (int j = 2; j <= k; ++j) {
            coeff += gamma_kappa_weight(k, j) * c.kappa_at(j);
        }
        m.gamma[k] = coeff;
    }
    return m;
}

ContactModule nonsingular_module(const Integer &d, int n)
{
    if (d < 1) {
        throw InputError("degree must be positive");
    }
    CurveCharacteristics c;
    c.degree = d;
    c.class_number = d * (d - 1);
    return curve_module(c, n);
}

int ContactMonomial::weight() const
{
    return std::accumulate(factors.begin(), factors.end(), 0,
                           [](int acc, const ContactTag &t) { return acc + t.weight; });
}

int ContactMonomial::lambda0_count() const
{
    return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const auto &t) { return t.is_lambda0(); }));
}

std::string ContactMonomial::canonical_key() const
{
    std::vector<ContactTag> tags;
    std::copy_if(factors.begin(), factors.end(), std::back_inserter(tags),
                 [](const auto &t) { return !t.is_lambda0(); });
    return join_tags(std::move(tags));
}

std::vector<ExpansionTerm> multiply_modules(const std::vector<ContactModule> &modules)
{
    if (modules.empty()) {
        throw InputError("need at least one contact module");
    }
    std::vector<ExpansionTerm> acc{{ContactMonomial{}, Integer(1)}};
    for (const auto &m : modules) {
        const auto terms = m.terms();
        std::vector<ExpansionTerm> next;
        next.reserve(acc.size() * terms.size());
        for (const auto &partial : acc) {
            for (const auto &[tag, c] : terms) {
                ExpansionTerm t = partial;
                t.monomial.factors.push_back(tag);
                t.coefficient *= c;
                next.push_back(std::move(t));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

std::vector<ExpansionTerm> merge(const std::vector<ExpansionTerm> &terms)
{
    std::map<std::vector<ContactTag>, Integer> grouped;
    for (const auto &t : terms) {
        auto sorted = t.monomial.factors;
        std::sort(sorted.begin(), sorted.end());
        grouped[sorted] += t.coefficient;
    }
    std::vector<ExpansionTerm> out;
    for (auto &[factors, c] : grouped) {
        if (c != 0) {
            out.push_back({ContactMonomial{factors}, c});
        }
    }
    return out;
}

ProtoContactResult evaluate(const std::vector<ExpansionTerm> &expansion, const FamilyCharacteristics &fam)
{
    ProtoContactResult result;
    result.total = 0;
    for (const auto &t : expansion) {
        const int w = t.monomial.weight();
        if (w != fam.parameter_count) {
            throw InputError("monomial " + t.monomial.canonical_key() + " has weight " + std::to_string(w) +
                             " but the family has " + std::to_string(fam.parameter_count) + " parameters");
        }
        const std::string key = t.monomial.canonical_key();
        Integer value = 1;
        if (!key.empty()) {
            auto it = fam.values.find(key);
            if (it == fam.values.end()) {
                throw InputError("missing characteristic number for key '" + key + "'");
            }
            value = it->second;
        }
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), fam.member_degree.get_mpz_t(),
                   static_cast<unsigned long>(t.monomial.lambda0_count()));
        value *= scale;
        result.total += t.coefficient * value;
        result.expansion.push_back({t.monomial, t.coefficient, value});
    }
    return result;
}

ProtoContactResult proto_contact(const std::vector<CurveCharacteristics> &curves, const std::vector<int> &orders,
                                 const FamilyCharacteristics &fam)
{
    if (curves.empty() || curves.size() != orders.size()) {
        throw InputError("need one contact order per curve and at least one curve");
    }
    int weight = 0;
    int total_order = 0;
    std::vector<ContactModule> modules;
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (orders[i] < 1) {
            throw InputError("contact orders must be positive");
        }
        const int n = orders[i] - 1;
        weight += n;
        total_order += orders[i];
        for (int j = 2; j <= n; ++j) {
            if (!curves[i].kappa.contains(j)) {
                notes.push_back("curve " + std::to_string(i + 1) + ": kappa_" + std::to_string(j) +
                                " not given, read as 0");
            }
        }
        modules.push_back(curve_module(curves[i], n));
    }
    if (weight != fam.parameter_count) {
        throw InputError("sum of (order - 1) is " + std::to_string(weight) + " but the family has " +
                         std::to_string(fam.parameter_count) + " parameters");
    }
    ProtoContactResult result = evaluate(multiply_modules(modules), fam);
    result.notes = std::move(notes);
    if (fam.member_degree + 1 < total_order) {
        result.hypothesis_warnings.push_back("member degree " + fam.member_degree.get_str() +
                                             " is too small: need d + 1 >= sum of orders = " +
                                             std::to_string(total_order));
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        if (curves[i].has_profound_cusp) {
            result.hypothesis_warnings.push_back("curve " + std::to_string(i + 1) + " has a profound cusp");
        }
        if (curves[i].has_flat_cusp) {
            result.hypothesis_warnings.push_back("curve " + std::to_string(i + 1) + " has a flat cusp");
        }
    }
    return result;
}

ChowClass lift_class(const CurveCharacteristics &c, int n, const GeometricBasis &basis)
{
    if (n < 1 || basis.level != n) {
        throw InputError("basis level " + std::to_string(basis.level) + " does not match n = " + std::to_string(n));
    }
    const ContactModule m = curve_module(c, n);
    ChowClass out = basis.codim_basis[0] * Rational(m.lambda) + basis.codim_basis[1] * Rational(m.pi);
    for (const auto &[k, coeff] : m.gamma) {
        out += basis.codim_basis[static_cast<std::size_t>(k)] * Rational(coeff);
    }
    return out;
}

} // namespace semple
