#pragma once

#include "hall/classify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hall {

// Family tags: alt sym sporadic linear gl2 symplectic orthogonal exceptional
struct SweepGrid {
    std::vector<std::string> families;
    unsigned long q_max = 50;
    unsigned long n_max = 12;
    std::vector<PrimeSet> pi_list;
    std::vector<std::string> extra_groups;  // added verbatim
};

const std::vector<std::string>& all_family_tags();
// All family tags, q <= 50, n <= 12, every nonempty subset of {2,3,5,7}.
SweepGrid default_grid();
// Nonempty subsets of base, optionally only those containing every prime of must.
std::vector<PrimeSet> subsets(const PrimeSet& base, const PrimeSet& must = {});
std::vector<unsigned long> prime_powers_up_to(unsigned long bound);

// Group texts of the grid, before validation. Throws ParseError on an unknown family tag.
std::vector<std::string> grid_groups(const SweepGrid& grid);

struct SweepRow {
    std::string group;  // as written in the grid
    PrimeSet pi;
    std::optional<HallReport> report;
    std::string skipped;  // reason when report is empty
    std::vector<std::string> violations;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t classified = 0;
    std::size_t skipped = 0;
    std::size_t violations = 0;
    std::string summary() const;
};

// Whether the bound-set and pi-number properties are expected: simple and quasisimple groups, Sym_n.
bool bound_applies(const GroupSpec& s);
// Report-level invariants plus the bound-set and pi-number properties; empty when all hold.
std::vector<std::string> check_invariants(const HallReport& r);

// threads = 0 picks the hardware concurrency. Row order follows the grid.
SweepResult run_sweep(const SweepGrid& grid, unsigned threads = 0);

}  // namespace hall
