#pragma once

#include "hall/arith.hpp"

#include <stdexcept>
#include <vector>

namespace hall {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Permutation of {0..n-1} as an image vector.
using Perm = std::vector<unsigned>;

// (k^p + (p-1)k)/p: classes of Hall subgroups in X wr C_p when X has k classes.
// Throws ArithError for non-prime p or k = 0.
BigInt kpi_wreath_cyclic(const BigInt& k, unsigned long p);

// k^t
BigInt kpi_wreath_orbits(const BigInt& k, unsigned long t);

// Orbits of <perms> on k-colourings of the points, via the Burnside sum over the closure.
// All perms must act on the same number of points.
BigInt burnside_orbits(const BigInt& k, const std::vector<Perm>& perms, std::size_t budget = 10000);

// The cycle (0 1 ... n-1).
Perm cycle_perm(unsigned n);

}  // namespace hall
