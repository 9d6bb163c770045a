#ifndef SEMPLE_JSON_IO_HPP
#define SEMPLE_JSON_IO_HPP

// JSON schemas of the command-line front end.
//
//   curve:   {"degree": 3, "class": 3, "kappa": {"2": 1},
//             "flags": {"profound_cusp": false, "flat_cusp": false}}
//   family:  {"s": 2, "member_degree": 3, "values": {"L1.P1": 7, ...}}
//   branch:  {"x": [[exp, num, den], ...], "y": [...], "truncation": N}
//
// Integers may be JSON numbers or decimal strings.  Output integers are
// numbers when they fit in 64 bits and strings otherwise.

#include <string>
#include <string_view>

#include <json.hpp>

#include <semple/branch_lift.hpp>
#include <semple/contact.hpp>
#include <semple/errors.hpp>
#include <semple/tower_ring.hpp>

namespace semple {

using Json = nlohmann::ordered_json;

class JsonSyntaxError : public InputError {
public:
    JsonSyntaxError(const std::string &what, std::size_t line, std::size_t column)
        : InputError(what), line_(line), column_(column)
    {
    }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Parses text; syntax errors become InputError with line and column.
Json parse_json(std::string_view text);

// Line and column (both 1-based) of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

Integer integer_from_json(const Json &j, const std::string &what);
Json integer_to_json(const Integer &z);
Json rational_to_json(const Rational &q);

CurveCharacteristics curve_from_json(const Json &j);
Json curve_to_json(const CurveCharacteristics &c);

FamilyCharacteristics family_from_json(const Json &j);

BranchSeries branch_from_json(const Json &j);

Json module_to_json(const ContactModule &m);
std::string module_text(const ContactModule &m);

Json proto_contact_to_json(const ProtoContactResult &r);
Json lift_report_to_json(const LiftReport &r);
Json pairing_to_json(const PairingMatrix &m);

} // namespace semple

#endif
