#pragma once

#include "hall/classify.hpp"

#include <string>
#include <vector>

namespace hall::detail {

struct Ctx {
    GroupSpec spec;
    PrimeSet pi;
    FactoredInt order;
    BigInt pi_order;    // |G|_pi
    PrimeSet in_group;  // pi ∩ pi(G)
    BigInt q;           // 0 when not Lie type
};

Ctx make_ctx(const GroupSpec& validated, const PrimeSet& pi);

std::string num(const BigInt& n);
std::string num(unsigned long n);
std::string set_text(const PrimeSet& s);
std::string pi_label(const PrimeSet& pi);  // "{2,3}" as a subscript-free label
// Primes of pi ∩ pi(G) all divide m.
bool divides_all(const PrimeSet& s, const BigInt& m);
long mod(const BigInt& a, long m);
std::string sign_text(Sign s);
// 2^3.3.7 style rendering; "1" for 1.
std::string factored_structure(const BigInt& n);

// Builder for one statement of a criterion.
class Stmt {
public:
    explicit Stmt(std::string case_id) : id_(std::move(case_id)) {}

    Stmt& check(std::string label, std::string value, bool holds) {
        conds_.push_back({std::move(label), std::move(value), holds});
        ok_ = ok_ && holds;
        return *this;
    }
    // π∩π(G) ⊆ π(m)
    Stmt& subset(const Ctx& c, const std::string& what, const BigInt& m);
    // π∩π(G) = s
    Stmt& equals(const Ctx& c, const PrimeSet& s);
    // (m)_s = want
    Stmt& part(const std::string& what, const BigInt& m, const PrimeSet& s, const BigInt& want);
    // a ≡ b (mod m)
    Stmt& congruent(const std::string& label, const BigInt& a, long b, long m);

    bool ok() const { return ok_; }
    const std::string& id() const { return id_; }
    const std::vector<Condition>& conditions() const { return conds_; }

private:
    std::string id_;
    std::vector<Condition> conds_;
    bool ok_ = true;
};

// Records the statement. When its conditions hold, the structure's Hall order is checked
// against |G|_pi and, if that holds too, a class family is appended. Returns whether it was.
bool emit(HallReport& r, const Ctx& c, Stmt s, const std::string& structure, unsigned long count,
          const std::string& fusion = "");

HallReport base_report(const Ctx& c, Regime regime);
// Fills e_pi, k_pi and c_pi from the emitted classes. d_pi is left to the caller.
void settle(HallReport& r);
// Out-of-scope answer with a bound set.
void bounded(HallReport& r, std::vector<unsigned long> bound, const std::string& reason);

// Family classifiers on validated specs; the regime has already been decided.
HallReport sym_alt(const Ctx& c, Regime regime);
HallReport sporadic(const Ctx& c, Regime regime);
HallReport two_g2(const Ctx& c);
HallReport sl2(const Ctx& c);
HallReport gl2(const Ctx& c);
HallReport linear_unitary(const Ctx& c);
HallReport symplectic(const Ctx& c);
HallReport orthogonal(const Ctx& c);
HallReport exceptional(const Ctx& c);
HallReport defining_char(const Ctx& c);

// Class count of GL2^eta(q) (0 when it has no pi-Hall subgroup); helper for the LU block case.
unsigned long gl2_class_count(const BigInt& q, Sign eta, const PrimeSet& pi);
unsigned long sl2_class_count(const BigInt& q, const PrimeSet& pi);

}  // namespace hall::detail
