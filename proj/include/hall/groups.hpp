#pragma once

#include "hall/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

enum class Family { Alt, Sym, Sporadic, LinearUnitary, Symplectic, Orthogonal, G2, F4, E6, E7, E8, TriD4, TwoG2 };
enum class Eta { None, Plus, Minus, Circ };
enum class Variant { Simple, Isometry, General };

const char* family_name(Family f);
const char* variant_name(Variant v);
std::optional<Family> family_from_name(const std::string& s);
std::optional<Variant> variant_from_name(const std::string& s);

struct GroupSpec {
    Family family = Family::Alt;
    unsigned long n = 0;  // degree or matrix dimension; 0 for exceptional and sporadic
    unsigned long p = 0;  // characteristic, 0 if not Lie type
    unsigned long a = 0;
    Eta eta = Eta::None;
    Variant variant = Variant::Simple;
    std::string sporadic_name;
    // Isomorphisms applied by validate(), e.g. "O(5,7) = PSp(4,7)".
    std::vector<std::string> aliases;

    BigInt q() const { return ipow(BigInt(p), a); }
    bool lie_type() const { return p != 0; }
    bool exceptional() const;
    Sign sign() const;  // eta as a Sign; throws when eta is None or Circ

    // Canonical text form accepted by parse_group.
    std::string name() const;

    friend bool operator==(const GroupSpec& x, const GroupSpec& y) {
        return x.family == y.family && x.n == y.n && x.p == y.p && x.a == y.a && x.eta == y.eta &&
               x.variant == y.variant && x.sporadic_name == y.sporadic_name;
    }
};

class GroupError : public std::runtime_error {
public:
    GroupError(std::string rule, const std::string& what) : std::runtime_error(what), rule_(std::move(rule)) {}
    const std::string& rule() const { return rule_; }

private:
    std::string rule_;
};

class InvalidParameter : public GroupError {
public:
    using GroupError::GroupError;
};

class NonSimple : public GroupError {
public:
    using GroupError::GroupError;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GroupOrder {
    FactoredInt order;
    std::string formula_tag;
    BigInt center_divisor = 1;  // the divisor applied to the isometry-group formula
};

GroupSpec validate(const GroupSpec& spec);
GroupOrder order(const GroupSpec& spec);
// pi(G), ascending. Primes can exceed 64 bits for large exceptional groups.
std::vector<BigInt> prime_spectrum(const GroupSpec& spec);

// pi intersected with pi(G).
PrimeSet pi_in_group(const GroupSpec& spec, const PrimeSet& pi);

// Grammar: Alt(n) Sym(n) PSL(n,q[,s]) SL(n,q[,s]) PSU(n,q) SU(n,q) GL(2,q[,s]) GU(2,q)
// Sp(n,q) PSp(n,q) O(n,q) O+(n,q) O-(n,q) PO(n,q) PO+(n,q) PO-(n,q) G2(q) F4(q)
// E6(q[,s]) 2E6(q) E7(q) E8(q) 3D4(q) 2G2(q) and sporadic names. q may be written p^a.
// The result is not validated.
GroupSpec parse_group(const std::string& text);

// Name -> order, the 26 sporadic groups.
const std::vector<std::pair<std::string, FactoredInt>>& sporadic_table();
std::optional<std::string> canonical_sporadic(const std::string& name);

// Weyl group orders.
BigInt weyl_order(const std::string& type);

// |G|_p' / |B|_p' style helpers used by several classifiers.
// q^d - s, factored via cyclotomic values.
FactoredInt factor_q_pow_minus(const BigInt& q, unsigned long d, int s);

}  // namespace hall
