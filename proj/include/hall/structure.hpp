#pragma once

#include "hall/arith.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hall {

class StructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Order of a structure descriptor.
//
//   atoms     Z(m) D(m) (dihedral of order m) Sym(n) Alt(n) SymN AltN SL2(q) GL2(q,+|-) Q8 W(G2|F4|E6|E7|E8)
//             G2(2) Omega7(2) Omega8+(2) L3(4) M22, integers m (a group of order m),
//             prime powers p^k, labelled integers like 2_2
//   binary    x or × (direct), ∘ (central, one shared involution), : (split),
//             . (extension), wr (wreath; degree of the right operand), /m (index m)
//   postfix   X^k (direct power)
//   wrappers  Hall(X): a pi-Hall subgroup of X, so its order is |X|_pi
//
// Precedence from loose to tight: {x ∘ : . /}, wr, ^.
struct StructureValue {
    BigInt order;
    unsigned long degree = 0;  // permutation degree, used as a wreath top
};

StructureValue evaluate_structure(const std::string& text, const PrimeSet& pi);
inline BigInt structure_order(const std::string& text, const PrimeSet& pi) {
    return evaluate_structure(text, pi).order;
}

}  // namespace hall
