// Exceptional groups in cross characteristic, and every Lie family when p is in pi.
#include "classify_internal.hpp"

#include <algorithm>

namespace hall::detail {

namespace {

std::string z(const BigInt& m) { return "Z(" + num(m) + ")"; }

}  // namespace

HallReport exceptional(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    const BigInt& q = c.q;
    const Sign e = epsilon(q);
    const int ei = to_int(e);
    const BigInt qe = q - ei;

    switch (c.spec.family) {
        case Family::G2: {
            Stmt a("HallG2(a)");
            a.equals(c, PrimeSet{2, 3, 7});
            a.part("q^2-1", BigInt(q * q - 1), PrimeSet{2, 3, 7}, 24);
            a.part("q^4+q^2+1", BigInt(q * q * q * q + q * q + 1), PrimeSet{7}, 7);
            emit(r, c, a, "G2(2)", 1);
            emit(r, c, Stmt("HallG2(b)").subset(c, "q-ε", qe), "Hall(" + z(qe) + "^2.W(G2))", 1);
            break;
        }
        case Family::F4:
            emit(r, c, Stmt("HallF4").subset(c, "q-ε", qe), "Hall(" + z(qe) + "^4.W(F4))", 1);
            break;
        case Family::E6: {
            const Sign eta = c.spec.sign();
            const int et = to_int(eta);
            Stmt s("HallE6");
            s.subset(c, "q-ε", qe);
            s.check("η = ε implies 5 ∈ π", "η = " + sign_text(eta) + ", ε = " + sign_text(e),
                    eta != e || c.pi.contains(5ul));
            std::string structure;
            if (eta == e) {
                const BigInt g = mod(BigInt(q - et), 3) == 0 ? 3 : 1;
                structure = "Hall(" + z(BigInt(q - et)) + "^6" + (g > 1 ? "/3" : "") + ".W(E6))";
            } else {
                structure = "Hall(" + z(BigInt(q * q - 1)) + "^2 × " + z(BigInt(q + et)) + "^2.W(F4))";
            }
            emit(r, c, s, structure, 1);
            break;
        }
        case Family::E7: {
            Stmt s("HallE7");
            s.subset(c, "q-ε", qe);
            s.check("5,7 ∈ π", set_text(c.pi), c.pi.contains(5ul) && c.pi.contains(7ul));
            emit(r, c, s, "Hall(" + z(qe) + "^7/2.W(E7))", 1);
            break;
        }
        case Family::E8: {
            Stmt s("HallE8");
            s.subset(c, "q-ε", qe);
            s.check("5,7 ∈ π", set_text(c.pi), c.pi.contains(5ul) && c.pi.contains(7ul));
            emit(r, c, s, "Hall(" + z(qe) + "^8.W(E8))", 1);
            break;
        }
        case Family::TriD4:
            emit(r, c, Stmt("Hall3D4").subset(c, "q-ε", qe),
                 "Hall(" + z(qe) + " × " + z(BigInt(q * q * q - ei)) + ".W(G2))", 1);
            break;
        default:
            throw ScopeError("not an exceptional family: " + c.spec.name());
    }
    settle(r);
    if (r.e_pi == Verdict::Yes) r.d_pi = Verdict::No;
    return r;
}

// ---------------------------------------------------- defining characteristic

namespace {

// Degrees of the basic invariants; empty for twisted families.
std::vector<unsigned long> degrees(const GroupSpec& s) {
    std::vector<unsigned long> d;
    switch (s.family) {
        case Family::LinearUnitary:
            if (s.eta != Eta::Plus || s.variant == Variant::General) return {};
            for (unsigned long i = 2; i <= s.n; ++i) d.push_back(i);
            return d;
        case Family::Symplectic:
            for (unsigned long i = 1; i <= s.n / 2; ++i) d.push_back(2 * i);
            return d;
        case Family::Orthogonal: {
            const unsigned long m = s.n / 2;
            if (s.n % 2 == 1) {
                for (unsigned long i = 1; i <= m; ++i) d.push_back(2 * i);
                return d;
            }
            if (s.eta != Eta::Plus) return {};
            for (unsigned long i = 1; i < m; ++i) d.push_back(2 * i);
            d.push_back(m);
            return d;
        }
        case Family::G2: return {2, 6};
        case Family::F4: return {2, 6, 8, 12};
        case Family::E6:
            if (s.eta != Eta::Plus) return {};
            return {2, 5, 6, 8, 9, 12};
        case Family::E7: return {2, 6, 8, 10, 12, 14, 18};
        case Family::E8: return {2, 8, 12, 14, 18, 20, 24, 30};
        default:
            return {};
    }
}

BigInt gl_order(const BigInt& q, unsigned long n) {
    BigInt o = ipow(q, n * (n - 1) / 2);
    for (unsigned long i = 1; i <= n; ++i) o *= ipow(q, i) - 1;
    return o;
}

struct Shape {
    const char* label;
    std::vector<unsigned long> blocks;  // one ordering
    unsigned long classes;
};

std::vector<Shape> parabolic_shapes(unsigned long n) {
    std::vector<Shape> out;
    if (n >= 3 && n % 2 == 1 && is_prime(n)) out.push_back({"4.1", {1, n - 1}, 2});
    if (n == 4) out.push_back({"4.2", {2, 2}, 1});
    if (n == 5) {
        out.push_back({"4.3", {2, 3}, 2});
        out.push_back({"4.4", {1, 2, 2}, 3});
    }
    if (n == 7) out.push_back({"4.5", {3, 4}, 2});
    if (n == 8) out.push_back({"4.6", {4, 4}, 1});
    if (n == 11) out.push_back({"4.7", {5, 6}, 2});
    return out;
}

std::string blocks_text(const std::vector<unsigned long>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

}  // namespace

HallReport defining_char(const Ctx& c) {
    HallReport r = base_report(c, Regime::DefiningChar);
    const BigInt& q = c.q;
    const GroupSpec& s = c.spec;
    const std::vector<unsigned long> deg = degrees(s);
    const BigInt p(s.p);
    const BigInt p_part = r_part(c.order.value, s.p);

    if (deg.empty()) {
        bounded(r, regime_bound(c.pi),
                "p ∈ π for a twisted or general group: the Borel-type pattern is not decided here");
        return r;
    }

    // Case 2: Borel subgroup
    BigInt index = 1;
    for (unsigned long d : deg) index *= ipow(q, d) - 1;
    index /= ipow(q - 1, deg.size());
    {
        Stmt st("ClassNumb(case 2)");
        st.subset(c, "q-1 and p", BigInt((q - 1) * p));
        const BigInt common = pi_part(index, c.pi);
        st.check("|S:B| is a π'-number", "|S:B| = " + num(index) + ", π-part " + num(common), common == 1);
        std::string structure = "1";
        if (st.ok()) {
            const BigInt torus = c.order.value / index / p_part;
            structure = "Hall(" + factored_structure(p_part) + ":" + num(torus) + ")";
        }
        emit(r, c, st, structure, 1, "Borel subgroups are conjugate and solvable");
    }

    // Case 4: parabolic subgroups of PSL_n
    if (s.family == Family::LinearUnitary && s.eta == Eta::Plus) {
        const unsigned long n = s.n;
        const BigInt center = s.variant == Variant::Simple ? order(s).center_divisor : BigInt(1);
        for (const Shape& sh : parabolic_shapes(n)) {
            BigInt h = 1;
            unsigned long unip = 0;
            for (std::size_t i = 0; i < sh.blocks.size(); ++i) {
                h *= gl_order(q, sh.blocks[i]);
                for (std::size_t j = i + 1; j < sh.blocks.size(); ++j) unip += sh.blocks[i] * sh.blocks[j];
            }
            h *= ipow(q, unip);
            h /= (q - 1);
            h /= center;
            Stmt st(std::string("ClassNumb(case ") + sh.label + ")");
            st.check("|H| is a π-number", "flag " + blocks_text(sh.blocks) + ", |H| = " + num(h),
                     is_pi_number(h, c.pi));
            const BigInt idx = c.order.value / h;
            st.check("|S:H| is a π'-number", "|S:H| = " + num(idx), pi_part(idx, c.pi) == 1);
            const BigInt u = ipow(q, unip);
            emit(r, c, st, factored_structure(u) + ":" + num(BigInt(h / u)), sh.classes,
                 "stabilizers of flags with block sizes " + blocks_text(sh.blocks) + " in each order; " +
                     std::to_string(sh.classes) + " classes");
        }
    }

    if (r.classes.empty()) {
        bounded(r, regime_bound(c.pi), "p ∈ π and neither the Borel nor the parabolic pattern matches");
        return r;
    }
    settle(r);
    r.d_pi = Verdict::OutOfScope;
    return r;
}

}  // namespace hall::detail
