#include "hall/extension.hpp"

#include <set>

namespace hall {

BigInt kpi_wreath_cyclic(const BigInt& k, unsigned long p) {
    if (!is_prime(p)) throw ArithError("kpi_wreath_cyclic: p = " + std::to_string(p) + " is not prime");
    if (k < 1) throw ArithError("kpi_wreath_cyclic: k must be positive");
    BigInt num = ipow(k, p) + (p - 1) * k;
    if (num % p != 0) throw ArithError("kpi_wreath_cyclic: k^p + (p-1)k not divisible by p");
    return BigInt(num / p);
}

BigInt kpi_wreath_orbits(const BigInt& k, unsigned long t) {
    if (k < 1 || t < 1) throw ArithError("kpi_wreath_orbits: k and t must be positive");
    return ipow(k, t);
}

namespace {

unsigned cycle_count(const Perm& g) {
    std::vector<bool> seen(g.size(), false);
    unsigned c = 0;
    for (unsigned i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        ++c;
        for (unsigned j = i; !seen[j]; j = g[j]) seen[j] = true;
    }
    return c;
}

Perm compose(const Perm& a, const Perm& b) {  // first a, then b
    Perm r(a.size());
    for (unsigned i = 0; i < a.size(); ++i) r[i] = b[a[i]];
    return r;
}

}  // namespace

BigInt burnside_orbits(const BigInt& k, const std::vector<Perm>& perms, std::size_t budget) {
    if (k < 1) throw ArithError("burnside_orbits: k must be positive");
    if (perms.empty()) throw ArithError("burnside_orbits: need at least one permutation");
    const std::size_t n = perms.front().size();
    for (const Perm& g : perms) {
        if (g.size() != n) throw ArithError("burnside_orbits: permutations of different degrees");
        std::vector<bool> hit(n, false);
        for (unsigned x : g) {
            if (x >= n || hit[x]) throw ArithError("burnside_orbits: not a permutation");
            hit[x] = true;
        }
    }
    Perm id(n);
    for (unsigned i = 0; i < n; ++i) id[i] = i;
    std::set<Perm> group{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& h : frontier)
            for (const Perm& g : perms) {
                Perm x = compose(h, g);
                if (group.insert(x).second) {
                    if (group.size() > budget)
                        throw BudgetExceeded("burnside_orbits: closure exceeds " + std::to_string(budget) + " elements");
                    next.push_back(std::move(x));
                }
            }
        frontier = std::move(next);
    }
    BigInt sum = 0;
    for (const Perm& g : group) sum += ipow(k, cycle_count(g));
    return BigInt(sum / group.size());
}

Perm cycle_perm(unsigned n) {
    Perm c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
    return c;
}

}  // namespace hall
