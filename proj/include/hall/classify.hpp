#pragma once

#include "hall/arith.hpp"
#include "hall/groups.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

enum class Verdict { Yes, No, OutOfScope };

enum class Regime {
    WholeGroup,      // pi contains pi(G)
    Sylow,           // |pi ∩ pi(G)| <= 1
    TwoNotInPi,
    ThreeNotInPi,    // 2 in pi, 3 not in pi
    CrossChar,       // 2,3 in pi, p not in pi
    DefiningChar,    // 2,3 in pi, p in pi
    TwoThree,        // 2,3 in pi for groups without a characteristic
};

const char* verdict_name(Verdict v);
const char* regime_name(Regime r);
std::optional<Verdict> verdict_from_name(const std::string& s);
std::optional<Regime> regime_from_name(const std::string& s);

class ScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Condition {
    std::string label;  // e.g. "q ≡ ε (mod 12)"
    std::string value;  // the numbers it was evaluated on
    bool holds = false;

    friend bool operator==(const Condition&, const Condition&) = default;
};

struct HallClass {
    std::string case_id;  // "SLU23dim2(c)"
    std::string structure;
    unsigned long class_count = 1;
    std::vector<Condition> conditions;
    std::string fusion_note;
    BigInt hall_order;

    friend bool operator==(const HallClass&, const HallClass&) = default;
};

// One evaluated statement, satisfied or not.
struct StatementCheck {
    std::string case_id;
    std::vector<Condition> conditions;
    bool holds = false;

    friend bool operator==(const StatementCheck&, const StatementCheck&) = default;
};

struct KPi {
    std::optional<unsigned long> exact;
    std::vector<unsigned long> bound;  // admissible values when not exact

    static KPi of(unsigned long k) { return KPi{k, {k}}; }
    static KPi within(std::vector<unsigned long> b) { return KPi{std::nullopt, std::move(b)}; }
    bool is_exact() const { return exact.has_value(); }
    std::string to_string() const;

    friend bool operator==(const KPi&, const KPi&) = default;
};

struct HallReport {
    GroupSpec spec;
    PrimeSet pi;
    Verdict e_pi = Verdict::OutOfScope;
    std::string reason;
    std::vector<HallClass> classes;
    KPi k_pi;
    Verdict c_pi = Verdict::OutOfScope;
    Verdict d_pi = Verdict::OutOfScope;
    Regime regime = Regime::CrossChar;
    BigInt group_order;
    BigInt pi_order;  // |G|_pi
    std::vector<StatementCheck> checks;
    std::vector<std::string> notes;
};

// Validates spec, then dispatches on regime and family.
HallReport classify(const GroupSpec& spec, const PrimeSet& pi);

HallReport classify_sym(unsigned long n, const PrimeSet& pi);
HallReport classify_alt(unsigned long n, const PrimeSet& pi);
HallReport classify_sporadic(const std::string& name, const PrimeSet& pi);

// The functions below require 2,3 in pi and p not in pi (ScopeError otherwise).
// q must be a prime power.
HallReport classify_sl2(const BigInt& q, const PrimeSet& pi, Variant v = Variant::Simple);
HallReport classify_gl2(const BigInt& q, Sign eta, const PrimeSet& pi);
HallReport classify_linear_unitary(unsigned long n, const BigInt& q, Sign eta, const PrimeSet& pi,
                                   Variant v = Variant::Simple);
HallReport classify_symplectic(unsigned long n2, const BigInt& q, const PrimeSet& pi, Variant v = Variant::Simple);
// eta: Eta::Circ for odd n. The isometry variant Ω_n of n <= 6 goes through the small-dimension table.
HallReport classify_orthogonal(unsigned long n, const BigInt& q, Eta eta, const PrimeSet& pi,
                               Variant v = Variant::Isometry);
HallReport classify_exceptional(Family family, const BigInt& q, Eta eta, const PrimeSet& pi);
// Requires 2,3 in pi and p in pi.
HallReport classify_defining_char(const GroupSpec& spec, const PrimeSet& pi);

// Orbit count of a pi-Hall subgroup of Sym_m on {1..m}; nullopt when Sym_m has none.
std::optional<unsigned long> sym_hall_orbits(unsigned long m, const PrimeSet& pi);
bool sym_has_hall(unsigned long m, const PrimeSet& pi);

enum class Outer { Trivial, DiagonalAndField, Any };
const char* outer_name(Outer o);
std::optional<Outer> outer_from_name(const std::string& s);

struct KPiBound {
    std::vector<unsigned long> values;  // sorted admissible values of k^G_pi(S)
    std::optional<unsigned long> exact;
    std::string reason;
};

// Values k^G_pi(S) can take for S <= G <= Aut(S) with G/S described by outer.
KPiBound kpi_bound_almost_simple(const GroupSpec& spec, const PrimeSet& pi, Outer outer);

// The bound set for the regime of pi: {0,1}, {0,1,2} or {0,1,2,3,4,9}.
std::vector<unsigned long> regime_bound(const PrimeSet& pi);

}  // namespace hall
