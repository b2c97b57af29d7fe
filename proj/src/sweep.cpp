#include "hall/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <thread>

namespace hall {

const std::vector<std::string>& all_family_tags() {
    static const std::vector<std::string> tags{"alt", "sym", "sporadic", "linear", "gl2", "symplectic", "orthogonal", "exceptional"};
    return tags;
}

std::vector<PrimeSet> subsets(const PrimeSet& base, const PrimeSet& must) {
    const auto& ps = base.primes();
    std::vector<PrimeSet> out;
    for (unsigned mask = 1; mask < (1u << ps.size()); ++mask) {
        std::vector<unsigned long> v;
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (mask >> i & 1u) v.push_back(ps[i]);
        PrimeSet s(v);
        if (must.subset_of(s)) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const PrimeSet& a, const PrimeSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

SweepGrid default_grid() {
    SweepGrid g;
    g.families = all_family_tags();
    g.pi_list = subsets(PrimeSet{2, 3, 5, 7});
    return g;
}

std::vector<unsigned long> prime_powers_up_to(unsigned long bound) {
    std::vector<unsigned long> out;
    for (unsigned long q = 2; q <= bound; ++q) {
        BigInt p;
        unsigned long a;
        if (prime_power(BigInt(q), p, a)) out.push_back(q);
    }
    return out;
}

std::vector<std::string> grid_groups(const SweepGrid& grid) {
    std::vector<std::string> out;
    const auto qs = prime_powers_up_to(grid.q_max);
    auto qstr = [](unsigned long q) { return std::to_string(q); };
    for (const std::string& f : grid.families) {
        if (f == "alt" || f == "sym") {
            for (unsigned long n = 5; n <= grid.n_max; ++n) out.push_back((f == "alt" ? "Alt(" : "Sym(") + std::to_string(n) + ")");
        } else if (f == "sporadic") {
            for (const auto& [name, ord] : sporadic_table()) out.push_back(name);
        } else if (f == "linear") {
            for (unsigned long n = 2; n <= grid.n_max; ++n)
                for (unsigned long q : qs)
                    for (const char* s : {"", ",-"})
                        for (const char* head : {"PSL(", "SL("}) out.push_back(head + std::to_string(n) + "," + qstr(q) + s + ")");
        } else if (f == "gl2") {
            for (unsigned long q : qs)
                for (const char* s : {"", ",-"}) out.push_back("GL(2," + qstr(q) + s + ")");
        } else if (f == "symplectic") {
            for (unsigned long n = 4; n <= grid.n_max; n += 2)
                for (unsigned long q : qs)
                    for (const char* head : {"PSp(", "Sp("}) out.push_back(head + std::to_string(n) + "," + qstr(q) + ")");
        } else if (f == "orthogonal") {
            for (unsigned long n = 3; n <= grid.n_max; ++n)
                for (unsigned long q : qs) {
                    if (q % 2 == 0) continue;
                    const std::string args = "(" + std::to_string(n) + "," + qstr(q) + ")";
                    if (n % 2 == 1) {
                        out.push_back("PO" + args);
                        out.push_back("O" + args);
                    } else {
                        for (const char* s : {"+", "-"}) {
                            out.push_back(std::string("PO") + s + args);
                            out.push_back(std::string("O") + s + args);
                        }
                    }
                }
        } else if (f == "exceptional") {
            for (unsigned long q : qs) {
                const std::string a = "(" + qstr(q);
                for (const std::string& g : {"G2" + a + ")", "F4" + a + ")", "E6" + a + ")", "E6" + a + ",-)", "E7" + a + ")",
                                             "E8" + a + ")", "3D4" + a + ")", "2G2" + a + ")"})
                    out.push_back(g);
            }
        } else {
            throw ParseError("unknown family tag '" + f + "'");
        }
    }
    for (const std::string& g : grid.extra_groups) out.push_back(g);
    return out;
}

bool bound_applies(const GroupSpec& s) {
    if (s.variant == Variant::General) return false;
    // Omega_4^+ is a central product of two SL_2, not quasisimple.
    return !(s.family == Family::Orthogonal && s.n == 4 && s.eta == Eta::Plus);
}

std::vector<std::string> check_invariants(const HallReport& r) {
    std::vector<std::string> v;
    auto fail = [&](const std::string& what) { v.push_back(r.spec.name() + " pi={" + r.pi.to_string() + "}: " + what); };
    const auto theorem = regime_bound(r.pi);
    auto in_theorem = [&](unsigned long k) { return std::find(theorem.begin(), theorem.end(), k) != theorem.end(); };

    unsigned long sum = 0;
    for (const HallClass& c : r.classes) {
        sum += c.class_count;
        if (c.class_count < 1) fail("class_count 0 in " + c.case_id);
        if (c.hall_order != r.pi_order) fail("Hall order " + c.hall_order.get_str() + " of " + c.case_id + " differs from |G|_pi");
        for (const Condition& cd : c.conditions)
            if (!cd.holds) fail("emitted class " + c.case_id + " has a failing condition " + cd.label);
    }
    if (r.k_pi.is_exact()) {
        const unsigned long k = *r.k_pi.exact;
        if ((r.e_pi == Verdict::Yes) != (k >= 1)) fail("e_pi and k_pi disagree");
        if ((r.e_pi == Verdict::Yes) != !r.classes.empty()) fail("e_pi and class list disagree");
        if (sum != k) fail("class counts sum to " + std::to_string(sum) + ", k_pi = " + std::to_string(k));
        if ((r.c_pi == Verdict::Yes) != (k == 1)) fail("c_pi and k_pi disagree");
        const bool thm = bound_applies(r.spec);
        if (thm && !in_theorem(k)) fail("k_pi = " + std::to_string(k) + " outside the bound set");
        if (thm && k >= 1 && !is_pi_number(BigInt(k), r.pi)) fail("k_pi = " + std::to_string(k) + " is not a pi-number");
        if (thm && k == 9 && !(r.spec.family == Family::Symplectic && (r.spec.n == 10 || r.spec.n == 14)))
            fail("k_pi = 9 outside PSp(10,q)/PSp(14,q)");
        if (r.spec.exceptional() && r.regime == Regime::CrossChar && r.e_pi == Verdict::Yes && k != 1)
            fail("exceptional group with k_pi != 1");
    } else {
        for (unsigned long b : r.k_pi.bound)
            if (!in_theorem(b)) fail("bound value " + std::to_string(b) + " outside the bound set");
        if (r.e_pi != Verdict::OutOfScope) fail("bounded k_pi with a decided e_pi");
    }
    if (r.d_pi == Verdict::Yes && r.c_pi != Verdict::Yes) fail("d_pi yes without c_pi yes");
    return v;
}

SweepResult run_sweep(const SweepGrid& grid, unsigned threads) {
    const auto groups = grid_groups(grid);
    SweepResult res;
    for (const std::string& g : groups)
        for (const PrimeSet& pi : grid.pi_list) res.rows.push_back({g, pi, std::nullopt, "", {}});

    // Parse and validate once per group.
    std::vector<std::optional<GroupSpec>> specs(groups.size());
    std::vector<std::string> why(groups.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        try {
            specs[i] = validate(parse_group(groups[i]));
        } catch (const std::exception& e) {
            why[i] = e.what();
        }
    }

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < res.rows.size();) {
            SweepRow& row = res.rows[i];
            const std::size_t gi = i / grid.pi_list.size();
            if (!specs[gi]) {
                row.skipped = why[gi];
                continue;
            }
            try {
                row.report = classify(*specs[gi], row.pi);
                row.violations = check_invariants(*row.report);
            } catch (const std::exception& e) {
                row.skipped = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();

    for (const SweepRow& row : res.rows) {
        if (row.report)
            ++res.classified;
        else
            ++res.skipped;
        res.violations += row.violations.size();
    }
    return res;
}

std::string SweepResult::summary() const {
    std::ostringstream os;
    os << rows.size() << " cells, " << classified << " classified, " << skipped << " skipped, " << violations << " violations";
    return os.str();
}

}  // namespace hall
