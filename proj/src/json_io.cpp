#include <semple/json_io.hpp>

#include <set>

#include <semple/errors.hpp>

namespace semple {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        // byte is one past the offending character.
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(text, offset);
        throw JsonSyntaxError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(column),
                              line, column);
    }
}

Integer integer_from_json(const Json &j, const std::string &what)
{
    if (j.is_number_integer()) {
        if (j.is_number_unsigned()) {
            return Integer(std::to_string(j.get<std::uint64_t>()));
        }
        return Integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const auto q = parse_rational(s);
        if (q.get_den() != 1 || s.find('/') != std::string::npos) {
            throw InputError(what + ": expected an integer, got \"" + s + "\"");
        }
        return q.get_num();
    }
    throw InputError(what + ": expected an integer");
}

Json integer_to_json(const Integer &z)
{
    if (z.fits_slong_p()) {
        return Json(z.get_si());
    }
    return Json(z.get_str());
}

Json rational_to_json(const Rational &q)
{
    if (q.get_den() == 1) {
        return integer_to_json(q.get_num());
    }
    return Json(to_string(q));
}

namespace {

const Json &require(const Json &j, const char *key, const std::string &what)
{
    if (!j.is_object()) {
        throw InputError(what + ": expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(what + ": missing \"" + key + "\"");
    }
    return *it;
}

int small_int(const Json &j, const std::string &what)
{
    const Integer z = integer_from_json(j, what);
    if (!z.fits_sint_p()) {
        throw InputError(what + ": out of range");
    }
    return static_cast<int>(z.get_si());
}

bool flag(const Json &j, const char *key)
{
    const auto it = j.find(key);
    if (it == j.end()) {
        return false;
    }
    if (!it->is_boolean()) {
        throw InputError(std::string("flag \"") + key + "\" must be a boolean");
    }
    return it->get<bool>();
}

TruncatedSeries series_from_json(const Json &terms, int truncation, const std::string &what)
{
    if (!terms.is_array()) {
        throw InputError(what + ": expected an array of [exp, num, den]");
    }
    TruncatedSeries::Coefficients coeffs;
    for (const auto &t : terms) {
        if (!t.is_array() || t.size() < 2 || t.size() > 3) {
            throw InputError(what + ": each term is [exp, num] or [exp, num, den]");
        }
        const int e = small_int(t[0], what + " exponent");
        if (e >= truncation) {
            throw InputError(what + ": exponent " + std::to_string(e) + " is not below the truncation " +
                             std::to_string(truncation));
        }
        Rational c(integer_from_json(t[1], what + " numerator"));
        if (t.size() == 3) {
            const Integer den = integer_from_json(t[2], what + " denominator");
            if (den == 0) {
                throw InputError(what + ": zero denominator");
            }
            c /= den;
        }
        coeffs[e] += c;
    }
    return TruncatedSeries(coeffs, truncation);
}

} // namespace

CurveCharacteristics curve_from_json(const Json &j)
{
    CurveCharacteristics c;
    c.degree = integer_from_json(require(j, "degree", "curve"), "curve degree");
    if (c.degree < 1) {
        throw InputError("curve degree must be positive");
    }
    c.class_number = integer_from_json(require(j, "class", "curve"), "curve class");
    if (c.class_number < 0) {
        throw InputError("curve class must be nonnegative");
    }
    if (const auto it = j.find("kappa"); it != j.end()) {
        if (!it->is_object()) {
            throw InputError("curve kappa: expected an object {\"2\": k2, ...}");
        }
        for (const auto &[key, value] : it->items()) {
            int level = 0;
            try {
                std::size_t used = 0;
                level = std::stoi(key, &used);
                if (used != key.size()) {
                    throw std::invalid_argument(key);
                }
            } catch (const std::exception &) {
                throw InputError("curve kappa: key \"" + key + "\" is not an integer");
            }
            if (level < 2) {
                throw InputError("curve kappa: level " + key + " below 2");
            }
            const Integer k = integer_from_json(value, "kappa_" + key);
            if (k < 0) {
                throw InputError("curve kappa: negative value at level " + key);
            }
            c.kappa[level] = k;
        }
    }
    if (const auto it = j.find("flags"); it != j.end()) {
        c.has_profound_cusp = flag(*it, "profound_cusp");
        c.has_flat_cusp = flag(*it, "flat_cusp");
    }
    return c;
}

Json curve_to_json(const CurveCharacteristics &c)
{
    Json j;
    j["degree"] = integer_to_json(c.degree);
    j["class"] = integer_to_json(c.class_number);
    Json kappa = Json::object();
    for (const auto &[level, value] : c.kappa) {
        kappa[std::to_string(level)] = integer_to_json(value);
    }
    j["kappa"] = kappa;
    j["flags"] = {{"profound_cusp", c.has_profound_cusp}, {"flat_cusp", c.has_flat_cusp}};
    return j;
}

FamilyCharacteristics family_from_json(const Json &j)
{
    FamilyCharacteristics f;
    f.parameter_count = small_int(require(j, "s", "family"), "family s");
    if (f.parameter_count < 0) {
        throw InputError("family s must be nonnegative");
    }
    f.member_degree = integer_from_json(require(j, "member_degree", "family"), "family member_degree");
    if (f.member_degree < 1) {
        throw InputError("family member_degree must be positive");
    }
    const auto it = j.find("values");
    if (it == j.end()) {
        return f;
    }
    if (!it->is_object()) {
        throw InputError("family values: expected an object");
    }
    for (const auto &[key, value] : it->items()) {
        const std::string canonical = canonicalize_key(key);
        const Integer v = integer_from_json(value, "family value \"" + key + "\"");
        const auto [pos, inserted] = f.values.emplace(canonical, v);
        if (!inserted && pos->second != v) {
            throw InputError("family values: conflicting entries for key \"" + canonical + "\"");
        }
    }
    return f;
}

BranchSeries branch_from_json(const Json &j)
{
    const int truncation = small_int(require(j, "truncation", "branch"), "branch truncation");
    return {series_from_json(require(j, "x", "branch"), truncation, "branch x"),
            series_from_json(require(j, "y", "branch"), truncation, "branch y")};
}

namespace {

std::string tag_text(const ContactTag &t)
{
    const std::string n = std::to_string(t.weight);
    switch (t.kind) {
    case TagKind::Lambda:
        return "Λ_" + n;
    case TagKind::Pi:
        return "Π_" + n;
    case TagKind::Gamma:
        break;
    }
    return "Γ^" + std::to_string(t.k) + "_" + n;
}

} // namespace

std::string module_text(const ContactModule &m)
{
    std::string out;
    for (const auto &[tag, coeff] : m.terms()) {
        if (!out.empty()) {
            out += coeff < 0 ? " - " : " + ";
        } else if (coeff < 0) {
            out += "-";
        }
        const Integer a = abs(coeff);
        if (a != 1) {
            out += a.get_str();
        }
        out += tag_text(tag);
    }
    return out.empty() ? "0" : out;
}

Json module_to_json(const ContactModule &m)
{
    Json j;
    j["weight"] = m.weight;
    Json terms = Json::array();
    for (const auto &[tag, coeff] : m.terms()) {
        terms.push_back({{"tag", tag.key()}, {"coefficient", integer_to_json(coeff)}});
    }
    j["terms"] = terms;
    j["text"] = module_text(m);
    return j;
}

Json proto_contact_to_json(const ProtoContactResult &r)
{
    Json j;
    j["total"] = integer_to_json(r.total);
    Json expansion = Json::array();
    for (const auto &t : r.expansion) {
        Json factors = Json::array();
        for (const auto &tag : t.monomial.factors) {
            factors.push_back(tag.key());
        }
        expansion.push_back({{"factors", factors},
                             {"key", t.monomial.canonical_key()},
                             {"coefficient", integer_to_json(t.coefficient)},
                             {"value", integer_to_json(t.value)}});
    }
    j["expansion"] = expansion;
    j["warnings"] = r.hypothesis_warnings;
    j["notes"] = r.notes;
    return j;
}

namespace {

Json optional_int(const std::optional<int> &v)
{
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json lift_report_to_json(const LiftReport &r)
{
    Json j;
    Json kappa = Json::object();
    for (const auto &[level, value] : r.kappa) {
        kappa[std::to_string(level)] = integer_to_json(value);
    }
    j["kappa"] = kappa;
    j["profound"] = r.profound;
    j["flat"] = r.flat;
    j["smooth"] = r.smooth;
    j["swapped"] = r.swapped;
    Json hits = Json::array();
    for (const auto &h : r.infinity_hits) {
        hits.push_back({{"level", h.level}, {"multiplicity", h.multiplicity}});
    }
    j["infinity_hits"] = hits;
    j["unresolved_kappa_levels"] = r.unresolved_kappa_levels;
    j["resolved_level"] = r.resolved_level;
    Json trace = Json::array();
    for (const auto &t : r.trace) {
        trace.push_back({{"level", t.level},
                         {"chart", t.chart},
                         {"independent", t.independent},
                         {"newest", t.newest},
                         {"valuations",
                          {{"independent", optional_int(t.independent_valuation)},
                           {"newest", optional_int(t.newest_valuation)}}},
                         {"immersed", t.immersed}});
    }
    j["trace"] = trace;
    return j;
}

Json pairing_to_json(const PairingMatrix &m)
{
    Json j;
    j["rows"] = m.row_labels;
    j["columns"] = m.column_labels;
    Json rows = Json::array();
    for (const auto &row : m.entries) {
        Json r = Json::array();
        for (const auto &e : row) {
            r.push_back(integer_to_json(e));
        }
        rows.push_back(r);
    }
    j["matrix"] = rows;
    return j;
}

} // namespace semple
