#ifndef SEMPLE_CONTACT_HPP
#define SEMPLE_CONTACT_HPP

// Contact modules m_n(C), their products, and evaluation against the
// characteristic numbers of a family.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <semple/numeric.hpp>
#include <semple/tower_ring.hpp>

namespace semple {

struct CurveCharacteristics {
    Integer degree;
    Integer class_number;
    // j -> kappa_j, j >= 2; absent entries read as 0.
    std::map<int, Integer> kappa;
    bool has_profound_cusp = false;
    bool has_flat_cusp = false;

    Integer kappa_at(int j) const;
};

enum class TagKind { Lambda, Pi, Gamma };

// One indeterminate: Lambda_n, Pi_n or Gamma^k_n.  Ordered by weight, then
// kind, then k.
struct ContactTag {
    int weight = 0;
    TagKind kind = TagKind::Lambda;
    int k = 0;

    static ContactTag lambda(int n) { return {n, TagKind::Lambda, 0}; }
    static ContactTag pi(int n) { return {n, TagKind::Pi, 0}; }
    static ContactTag gamma(int k, int n) { return {n, TagKind::Gamma, k}; }

    bool is_lambda0() const { return weight == 0 && kind == TagKind::Lambda; }

    // "L2", "P2", "G2_3"
    std::string key() const;

    friend auto operator<=>(const ContactTag &, const ContactTag &) = default;
};

ContactTag parse_tag(const std::string &key);

// Reorders a '.'-joined key into canonical (sorted) form; "" stays "".
std::string canonicalize_key(const std::string &key);

struct ContactModule {
    int weight = 0;
    Integer lambda;
    Integer pi;
    std::map<int, Integer> gamma; // 2 <= k <= weight

    // Nonzero terms in tag order.
    std::vector<std::pair<ContactTag, Integer>> terms() const;

    friend bool operator==(const ContactModule &, const ContactModule &) = default;
};

ContactModule curve_module(const CurveCharacteristics &c, int n);

// Plucker class d(d-1), no cusps.
ContactModule nonsingular_module(const Integer &d, int n);

// Coefficient ladder shared by curve modules and their symbolic forms:
// Gamma^k_n gets (k+1) class + sum_{m=2}^{k} (k+2-m) kappa_m.
int gamma_class_weight(int k);
int gamma_kappa_weight(int k, int m);

struct ContactMonomial {
    // One tag per curve position.
    std::vector<ContactTag> factors;

    int weight() const;
    int lambda0_count() const;
    // Non-Lambda_0 tags, sorted, joined by '.'; "" when none remain.
    std::string canonical_key() const;

    friend bool operator==(const ContactMonomial &, const ContactMonomial &) = default;
};

struct ExpansionTerm {
    ContactMonomial monomial;
    Integer coefficient;
};

// Ordered distributive expansion, one entry per nonzero factor combination.
std::vector<ExpansionTerm> multiply_modules(const std::vector<ContactModule> &modules);

// Collects terms by canonical key (factors stored sorted); keys ascending.
std::vector<ExpansionTerm> merge(const std::vector<ExpansionTerm> &terms);

struct FamilyCharacteristics {
    int parameter_count = 0;
    Integer member_degree;
    std::map<std::string, Integer> values;
};

struct EvaluatedTerm {
    ContactMonomial monomial;
    Integer coefficient;
    // member_degree^{#Lambda_0} * value(canonical key)
    Integer value;
};

struct ProtoContactResult {
    Integer total;
    std::vector<EvaluatedTerm> expansion;
    std::vector<std::string> hypothesis_warnings;
    std::vector<std::string> notes;
};

ProtoContactResult evaluate(const std::vector<ExpansionTerm> &expansion, const FamilyCharacteristics &fam);

ProtoContactResult proto_contact(const std::vector<CurveCharacteristics> &curves, const std::vector<int> &orders,
                                 const FamilyCharacteristics &fam);

// d * beta_0 + class * beta_1 + sum_k gamma_k beta_k over the codimension
// n+1 basis; pairing with the dual list returns the module coefficients.
ChowClass lift_class(const CurveCharacteristics &c, int n, const GeometricBasis &basis);

} // namespace semple

#endif
