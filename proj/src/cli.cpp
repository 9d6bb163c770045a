#include <semple/cli.hpp>

#include <algorithm>
#include <sstream>

#include <semple/errors.hpp>
#include <semple/formula.hpp>
#include <semple/json_io.hpp>

namespace semple {

namespace {

constexpr int kMaxRingLevel = 10;

struct Output {
    int exit_code = 0;
    std::string text;
};

std::string dump(const Json &j)
{
    return j.dump(2) + "\n";
}

std::string resolve_format(const RunConfig &c)
{
    std::string f = c.format;
    if (f.empty()) {
        f = c.subcommand == "verify" ? "text" : "json";
    }
    if (f != "json" && f != "text" && f != "latex") {
        throw InputError("unknown format \"" + f + "\"");
    }
    if (f == "latex" && c.subcommand != "formula") {
        throw InputError("latex output is only available for formula");
    }
    return f;
}

int parse_level(const std::string &text, const std::string &what)
{
    try {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used == text.size()) {
            return n;
        }
    } catch (const std::exception &) {
    }
    throw InputError(what + ": \"" + text + "\" is not an integer");
}

CurveCharacteristics curve_entry(const Json &j)
{
    if (j.is_object() && j.contains("nonsingular") && j["nonsingular"] == true && !j.contains("class")) {
        Json filled = j;
        const Integer d = integer_from_json(j.at("degree"), "curve degree");
        filled["class"] = integer_to_json(d * (d - 1));
        return curve_from_json(filled);
    }
    return curve_from_json(j);
}

// ring n -------------------------------------------------------------------

// The right-hand side in h, hdual, i_m, e.g. "3*h - 3*hdual".
std::string relation_text(const IkRelation &rel)
{
    std::vector<std::pair<Rational, std::string>> terms{{rel.h_coeff, "h"}, {rel.hdual_coeff, "hdual"}};
    for (const auto &[m, coeff] : rel.i_coeffs) {
        terms.emplace_back(coeff, "i" + std::to_string(m));
    }
    std::string out;
    for (const auto &[c, name] : terms) {
        if (c == 0) {
            continue;
        }
        const Rational mag = abs(c);
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += (mag == 1 ? "" : mag.get_str() + "*") + name;
    }
    return out.empty() ? "0" : out;
}

Output run_ring(const RunConfig &c, const std::string &format)
{
    if (c.args.size() != 1) {
        throw InputError("ring expects one argument: the level n");
    }
    const int n = parse_level(c.args[0], "ring level");
    if (n < 1 || n > kMaxRingLevel) {
        throw InputError("ring level must lie in 1.." + std::to_string(kMaxRingLevel));
    }
    const auto tower = build_tower(n);
    const auto pm = pairing_matrix(n, tower);
    Json checks = Json::array();
    bool all = true;
    for (int k = 2; k <= n; ++k) {
        const auto rel = theorem1_relation(k);
        const bool ok = relation_holds(rel, tower);
        all = all && ok;
        checks.push_back({{"k", k}, {"rhs", relation_text(rel)}, {"holds", ok}});
    }
    if (!all) {
        throw InvariantError("an i_k^2 relation failed to reduce to zero");
    }
    if (format == "json") {
        Json j;
        j["level"] = n;
        j["pairing"] = pairing_to_json(pm);
        j["relations"] = checks;
        return {0, dump(j)};
    }
    std::ostringstream out;
    std::size_t width = 0;
    for (const auto &row : pm.entries) {
        for (const auto &e : row) {
            width = std::max(width, e.get_str().size());
        }
    }
    std::size_t label_width = 0;
    for (const auto &l : pm.row_labels) {
        label_width = std::max(label_width, l.size());
    }
    for (std::size_t r = 0; r < pm.entries.size(); ++r) {
        out << pm.row_labels[r] << std::string(label_width - pm.row_labels[r].size(), ' ') << " |";
        for (const auto &e : pm.entries[r]) {
            const auto s = e.get_str();
            out << ' ' << std::string(width - s.size(), ' ') << s;
        }
        out << '\n';
    }
    for (const auto &chk : checks) {
        out << "i" << chk["k"].get<int>() << "^2 = (" << chk["rhs"].get<std::string>() << ")*i"
            << chk["k"].get<int>() << ": " << (chk["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    }
    return {0, out.str()};
}

// module -------------------------------------------------------------------

Output run_module(const RunConfig &c, const Json &in, const std::string &format)
{
    int n = 0;
    if (!c.args.empty()) {
        n = parse_level(c.args[0], "module level");
    } else if (in.contains("level")) {
        n = in["level"].get<int>();
    } else {
        throw InputError("module needs a level: an argument or \"level\" in the input");
    }
    if (n < 0) {
        throw InputError("module level must be nonnegative");
    }
    const CurveCharacteristics curve = curve_entry(in.contains("curve") ? in["curve"] : in);
    const ContactModule m = curve_module(curve, n);
    if (format == "text") {
        return {0, module_text(m) + "\n"};
    }
    Json j;
    j["curve"] = curve_to_json(curve);
    j["module"] = module_to_json(m);
    return {0, dump(j)};
}

// contact ------------------------------------------------------------------

Output run_contact(const Json &in, const std::string &format)
{
    if (!in.is_object() || !in.contains("curves") || !in.contains("orders") || !in.contains("family")) {
        throw InputError("contact input needs \"curves\", \"orders\" and \"family\"");
    }
    if (!in["curves"].is_array() || !in["orders"].is_array()) {
        throw InputError("contact: \"curves\" and \"orders\" must be arrays");
    }
    std::vector<CurveCharacteristics> curves;
    for (const auto &cj : in["curves"]) {
        curves.push_back(curve_entry(cj));
    }
    std::vector<int> orders;
    for (const auto &o : in["orders"]) {
        const Integer z = integer_from_json(o, "order");
        if (z < 1 || !z.fits_sint_p()) {
            throw InputError("contact orders must be positive integers");
        }
        orders.push_back(static_cast<int>(z.get_si()));
    }
    const auto fam = family_from_json(in["family"]);
    const auto r = proto_contact(curves, orders, fam);
    if (format == "text") {
        std::string out = r.total.get_str() + "\n";
        for (const auto &w : r.hypothesis_warnings) {
            out += "warning: " + w + "\n";
        }
        for (const auto &note : r.notes) {
            out += "note: " + note + "\n";
        }
        return {0, out};
    }
    return {0, dump(proto_contact_to_json(r))};
}

// lift ---------------------------------------------------------------------

std::string report_text(const LiftReport &r)
{
    std::ostringstream out;
    out << "kappa:";
    if (r.kappa.empty()) {
        out << " none";
    }
    for (const auto &[j, k] : r.kappa) {
        out << " kappa" << j << "=" << k.get_str();
    }
    out << "\nprofound: " << (r.profound ? "yes" : "no") << "\nflat: " << (r.flat ? "yes" : "no") << '\n';
    for (const auto &t : r.trace) {
        out << "  level " << t.level << " [" << t.chart << "] " << t.newest << " over " << t.independent
            << (t.immersed ? " immersed" : "") << '\n';
    }
    return out.str();
}

Output run_lift(const RunConfig &c, const Json &in, const std::string &format)
{
    if (c.max_level < 1) {
        throw InputError("--max-level must be positive");
    }
    if (in.is_object() && in.contains("x")) {
        const auto r = analyze_branch(branch_from_json(in), c.max_level);
        if (format == "text") {
            return {0, report_text(r)};
        }
        Json j = lift_report_to_json(r);
        j["warnings"] = Json::array();
        return {0, dump(j)};
    }
    if (!in.is_object() || !in.contains("branches") || !in.contains("degree")) {
        throw InputError("lift input is a branch {x, y, truncation} or a curve {degree, branches, ...}");
    }
    if (!in["branches"].is_array()) {
        throw InputError("lift: \"branches\" must be an array");
    }
    std::vector<BranchSeries> branches;
    for (const auto &b : in["branches"]) {
        branches.push_back(branch_from_json(b));
    }
    const Integer degree = integer_from_json(in["degree"], "curve degree");
    std::optional<Integer> cls;
    if (in.contains("class")) {
        cls = integer_from_json(in["class"], "curve class");
    }
    const bool nonsingular = in.contains("nonsingular") && in["nonsingular"] == true;
    const auto chars = curve_characteristics(branches, degree, cls, c.max_level, nonsingular);
    Json reports = Json::array();
    std::string text;
    for (const auto &b : branches) {
        const auto r = analyze_branch(b, c.max_level);
        reports.push_back(lift_report_to_json(r));
        text += report_text(r);
    }
    if (format == "text") {
        return {0, dump(curve_to_json(chars)) + text};
    }
    Json j;
    j["characteristics"] = curve_to_json(chars);
    j["branches"] = reports;
    j["warnings"] = Json::array();
    return {0, dump(j)};
}

// verify -------------------------------------------------------------------

const char *verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "pass";
    case Verdict::Fail:
        return "fail";
    case Verdict::Skip:
        break;
    }
    return "skip";
}

Output run_verify(const RunConfig &c, const std::string &format)
{
    SweepOptions options;
    options.seed = c.seed;
    const auto cases = run_sweep_omp(options);
    const auto failures =
        std::count_if(cases.begin(), cases.end(), [](const VerifyCase &v) { return v.verdict == Verdict::Fail; });
    const int code = failures > 0 ? static_cast<int>(ExitCode::Invariant) : 0;
    if (format == "json") {
        Json j;
        j["seed"] = c.seed;
        Json list = Json::array();
        std::size_t pass = 0;
        std::size_t skip = 0;
        for (const auto &v : cases) {
            pass += v.verdict == Verdict::Pass;
            skip += v.verdict == Verdict::Skip;
            list.push_back({{"group", v.group},
                            {"params", v.params},
                            {"label", v.label},
                            {"verdict", verdict_name(v.verdict)},
                            {"detail", v.detail}});
        }
        j["cases"] = list;
        j["summary"] = {{"pass", pass}, {"fail", failures}, {"skip", skip}};
        return {code, dump(j)};
    }
    const char *green = c.color ? "\x1b[32m" : "";
    const char *red = c.color ? "\x1b[31m" : "";
    const char *reset = c.color ? "\x1b[0m" : "";
    std::ostringstream out;
    out << "TAP version 13\n1.." << cases.size() << '\n';
    std::size_t index = 0;
    for (const auto &v : cases) {
        ++index;
        if (v.verdict == Verdict::Fail) {
            out << red << "not ok" << reset;
        } else {
            out << green << "ok" << reset;
        }
        out << ' ' << index << " - " << v.label;
        if (v.verdict == Verdict::Skip) {
            out << " # SKIP " << v.detail;
        } else if (!v.detail.empty()) {
            out << " # " << v.detail;
        }
        out << '\n';
    }
    out << "# seed " << c.seed << ", " << failures << " failed\n";
    return {code, out.str()};
}

// formula ------------------------------------------------------------------

Output run_formula(const Json &in, const std::string &format)
{
    if (!in.is_object() || !in.contains("orders") || !in["orders"].is_array()) {
        throw InputError("formula input needs \"orders\" and optionally \"curves\"");
    }
    std::vector<int> orders;
    for (const auto &o : in["orders"]) {
        const Integer z = integer_from_json(o, "order");
        if (z < 1 || !z.fits_sint_p()) {
            throw InputError("formula orders must be positive integers");
        }
        orders.push_back(static_cast<int>(z.get_si()));
    }
    std::vector<std::string> names;
    if (in.contains("curves")) {
        if (!in["curves"].is_array()) {
            throw InputError("formula: \"curves\" must be an array of names");
        }
        for (const auto &n : in["curves"]) {
            if (!n.is_string() || n.get<std::string>().empty()) {
                throw InputError("formula: curve names must be nonempty strings");
            }
            names.push_back(n.get<std::string>());
        }
    } else {
        for (std::size_t i = 0; i < orders.size(); ++i) {
            names.push_back(std::string(1, static_cast<char>('C' + i % 24)) +
                            (i >= 24 ? std::to_string(i / 24) : std::string()));
        }
    }
    if (names.size() != orders.size()) {
        throw InputError("formula: as many curve names as orders are needed");
    }
    if (format == "text") {
        return {0, emit_formula(names, orders, FormulaFormat::Text) + "\n"};
    }
    if (format == "latex") {
        return {0, emit_formula(names, orders, FormulaFormat::Latex) + "\n"};
    }
    const Formula f = expand_formula(names, orders);
    Json j;
    j["curves"] = names;
    j["orders"] = orders;
    j["text"] = render(f, FormulaFormat::Text);
    j["latex"] = render(f, FormulaFormat::Latex);
    Json terms = Json::array();
    for (const auto &t : f.terms) {
        Json tags = Json::array();
        for (const auto &tag : t.tags) {
            tags.push_back(tag.key());
        }
        terms.push_back({{"tags", tags},
                         {"number", render_number(t.tags, FormulaFormat::Text)},
                         {"coefficient", render_coefficient(t, FormulaFormat::Text)},
                         {"expanded", t.coefficient.to_string()}});
    }
    j["terms"] = terms;
    return {0, dump(j)};
}

Json error_object(const char *type, const std::string &message)
{
    return {{"error", {{"type", type}, {"message", message}}}};
}

} // namespace

bool needs_input(const std::string &subcommand)
{
    return subcommand == "module" || subcommand == "contact" || subcommand == "lift" || subcommand == "formula";
}

RunResult run(const RunConfig &config, std::string_view input)
{
    try {
        const std::string format = resolve_format(config);
        const std::string &sub = config.subcommand;
        if (sub == "ring") {
            auto o = run_ring(config, format);
            return {o.exit_code, o.text};
        }
        if (sub == "verify") {
            auto o = run_verify(config, format);
            return {o.exit_code, o.text};
        }
        if (!needs_input(sub)) {
            throw InputError("unknown subcommand \"" + sub + "\"");
        }
        const Json in = parse_json(input);
        Output o;
        if (sub == "module") {
            o = run_module(config, in, format);
        } else if (sub == "contact") {
            o = run_contact(in, format);
        } else if (sub == "lift") {
            o = run_lift(config, in, format);
        } else {
            o = run_formula(in, format);
        }
        return {o.exit_code, o.text};
    } catch (const JsonSyntaxError &e) {
        Json j = error_object("InputError", e.what());
        j["error"]["line"] = e.line();
        j["error"]["column"] = e.column();
        return {static_cast<int>(ExitCode::Input), dump(j)};
    } catch (const InputError &e) {
        return {static_cast<int>(ExitCode::Input), dump(error_object("InputError", e.what()))};
    } catch (const nlohmann::json::exception &e) {
        // Type mismatches inside otherwise well-formed JSON.
        return {static_cast<int>(ExitCode::Input), dump(error_object("InputError", e.what()))};
    } catch (const PrecisionError &e) {
        Json j = error_object("PrecisionError", e.what());
        j["error"]["required_truncation"] = e.required_truncation();
        return {static_cast<int>(ExitCode::Precision), dump(j)};
    } catch (const InvariantError &e) {
        return {static_cast<int>(ExitCode::Invariant), dump(error_object("InvariantError", e.what()))};
    } catch (const std::exception &e) {
        return {static_cast<int>(ExitCode::Invariant), dump(error_object("InvariantError", e.what()))};
    }
}

} // namespace semple
