#pragma once

#include "hall/arith.hpp"
#include "hall/classify.hpp"
#include "hall/extension.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hall {

class NonPrimeField : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class GroupKind { SL2, PSL2, GL2, PGL2, Sym, Alt };

const char* kind_name(GroupKind k);
std::optional<GroupKind> kind_from_name(const std::string& s);

// Elements are packed into 64 bits: a 2x2 matrix as four bytes (a,b,c,d), a permutation of
// up to 8 points as one byte per image.
using Elem = std::uint64_t;
using Idx = std::uint32_t;

class ConcreteGroup {
public:
    GroupKind kind() const { return kind_; }
    unsigned long param() const { return param_; }
    std::string name() const;

    std::size_t order() const { return elems_.size(); }
    Elem element(Idx i) const { return elems_[i]; }
    std::optional<Idx> index_of(Elem e) const;
    Idx identity() const { return 0; }
    const std::vector<Idx>& generators() const { return gens_; }

    Idx mul(Idx a, Idx b) const;  // a first, then b
    Idx inv(Idx a) const { return inv_[a]; }
    unsigned long element_order(Idx a) const { return ord_[a]; }
    // g^-1 x g
    Idx conj(Idx x, Idx g) const;

    std::string element_text(Idx i) const;

    friend ConcreteGroup build_group(GroupKind kind, unsigned long param, std::size_t max_order);
    friend ConcreteGroup with_generators(const ConcreteGroup& g, const std::vector<Idx>& gens);

private:
    Elem raw_mul(Elem a, Elem b) const;
    void finish();

    GroupKind kind_ = GroupKind::Sym;
    unsigned long param_ = 0;
    std::vector<Elem> elems_;
    std::unordered_map<Elem, Idx> index_;
    std::vector<Idx> gens_;
    std::vector<Idx> inv_;
    std::vector<unsigned long> ord_;
    std::vector<std::uint16_t> table_;  // full Cayley table for small groups
    std::vector<std::vector<Idx>> gen_conj_;  // gen_conj_[j][x] = conj(x, gens_[j])
};

// Throws NonPrimeField when a matrix kind gets a non-prime, ArithError on p > 17 or n > 8,
// BudgetExceeded when the order passes max_order.
ConcreteGroup build_group(GroupKind kind, unsigned long param, std::size_t max_order = 100000);
// Same group, different generating set; throws ArithError when gens do not generate.
ConcreteGroup with_generators(const ConcreteGroup& g, const std::vector<Idx>& gens);

// Order of the same group from the symbolic formulas.
BigInt expected_order(GroupKind kind, unsigned long param);

struct SubgroupHandle {
    std::vector<Idx> elements;  // sorted
    std::vector<Idx> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(Idx x) const;
    friend bool operator==(const SubgroupHandle& a, const SubgroupHandle& b) { return a.elements == b.elements; }
};

// Closure of a generating set.
SubgroupHandle generate(const ConcreteGroup& g, const std::vector<Idx>& gens);
// Closed under products, contains identity, order divides |G|.
bool is_subgroup(const ConcreteGroup& g, const SubgroupHandle& h);

struct SearchBudget {
    std::size_t closure_steps = 1000000;  // subgroup closures attempted
    std::size_t subgroups = 10000;        // conjugacy class representatives kept
};

struct CensusReport {
    PrimeSet pi;
    BigInt hall_order;
    std::vector<SubgroupHandle> halls_found;  // every Hall subgroup, grouped by class
    std::vector<std::size_t> hall_class;      // class index of each entry of halls_found
    std::size_t class_count = 0;
    bool exhaustive = false;
    // One representative per conjugacy class of pi-subgroups met during the search.
    std::vector<SubgroupHandle> lattice;
    std::size_t closures = 0;
};

CensusReport find_hall_subgroups(const ConcreteGroup& g, const PrimeSet& pi, SearchBudget budget = {});

// Partition of the list into conjugacy classes; each inner vector holds list positions.
std::vector<std::vector<std::size_t>> conjugacy_class_count(const ConcreteGroup& g,
                                                            const std::vector<SubgroupHandle>& subgroups);

// All conjugates of h, h itself first.
std::vector<SubgroupHandle> conjugates(const ConcreteGroup& g, const SubgroupHandle& h);

// A pi-subgroup from the census lattice not conjugate into some Hall subgroup H, the largest such for
// the first class of H that admits one. With no Hall subgroups, the largest pi-subgroup met.
std::optional<SubgroupHandle> find_dpi_counterexample(const ConcreteGroup& g, const PrimeSet& pi,
                                                      const CensusReport& census);

struct Comparison {
    std::string field;
    std::string expected;  // from the report
    std::string actual;    // from the census
    bool pass = false;
};

struct VerificationOutcome {
    std::vector<Comparison> comparisons;
    bool exhaustive = false;
    bool all_pass() const;
};

VerificationOutcome verify_report(const ConcreteGroup& g, const HallReport& report, const CensusReport& census);
VerificationOutcome verify_report(const ConcreteGroup& g, const HallReport& report, SearchBudget budget = {});

// The GroupSpec a concrete group realizes, when there is one (PGL2 has none).
std::optional<GroupSpec> spec_of(GroupKind kind, unsigned long param);
// Parses "PSL(2,7)", "SL(2,5)", "GL(2,5)", "PGL(2,5)", "Sym(7)", "Alt(6)".
std::pair<GroupKind, unsigned long> parse_concrete(const std::string& text);

// Element order -> number of elements of that order in h.
std::map<unsigned long, std::size_t> order_statistics(const ConcreteGroup& g, const SubgroupHandle& h);
// Orbit sizes of a permutation subgroup on {0..n-1}, ascending.
std::vector<std::size_t> point_orbits(const ConcreteGroup& g, const SubgroupHandle& h);

// Image in PSL2(p) of an element of SL2(p).
Idx project_to_psl2(const ConcreteGroup& sl, const ConcreteGroup& psl, Idx x);

}  // namespace hall
