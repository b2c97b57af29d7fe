#include "hall/classify.hpp"

#include "classify_internal.hpp"
#include "hall/structure.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hall {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "yes";
        case Verdict::No: return "no";
        case Verdict::OutOfScope: return "out_of_scope";
    }
    return "?";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::WholeGroup: return "whole-group";
        case Regime::Sylow: return "sylow";
        case Regime::TwoNotInPi: return "2-not-in-pi";
        case Regime::ThreeNotInPi: return "3-not-in-pi";
        case Regime::CrossChar: return "cross-characteristic";
        case Regime::DefiningChar: return "defining-characteristic";
        case Regime::TwoThree: return "2-3-in-pi";
    }
    return "?";
}

std::optional<Verdict> verdict_from_name(const std::string& s) {
    for (Verdict v : {Verdict::Yes, Verdict::No, Verdict::OutOfScope})
        if (s == verdict_name(v)) return v;
    return std::nullopt;
}

std::optional<Regime> regime_from_name(const std::string& s) {
    for (Regime r : {Regime::WholeGroup, Regime::Sylow, Regime::TwoNotInPi, Regime::ThreeNotInPi, Regime::CrossChar,
                     Regime::DefiningChar, Regime::TwoThree})
        if (s == regime_name(r)) return r;
    return std::nullopt;
}

const char* outer_name(Outer o) {
    switch (o) {
        case Outer::Trivial: return "trivial";
        case Outer::DiagonalAndField: return "diagonal-and-field";
        case Outer::Any: return "any";
    }
    return "?";
}

std::optional<Outer> outer_from_name(const std::string& s) {
    for (Outer o : {Outer::Trivial, Outer::DiagonalAndField, Outer::Any})
        if (s == outer_name(o)) return o;
    return std::nullopt;
}

std::string KPi::to_string() const {
    if (exact) return std::to_string(*exact);
    std::string s = "{";
    for (std::size_t i = 0; i < bound.size(); ++i) s += (i ? "," : "") + std::to_string(bound[i]);
    return s + "}";
}

std::vector<unsigned long> regime_bound(const PrimeSet& pi) {
    if (!pi.contains(2ul)) return {0, 1};
    if (!pi.contains(3ul)) return {0, 1, 2};
    return {0, 1, 2, 3, 4, 9};
}

namespace detail {

Ctx make_ctx(const GroupSpec& spec, const PrimeSet& pi) {
    Ctx c;
    c.spec = spec;
    c.pi = pi;
    c.order = order(spec).order;
    c.pi_order = pi_part(c.order.value, pi);
    c.in_group = pi.dividing(c.order.value);
    c.q = spec.lie_type() ? spec.q() : BigInt(0);
    return c;
}

std::string num(const BigInt& n) { return n.get_str(); }
std::string num(unsigned long n) { return std::to_string(n); }
std::string set_text(const PrimeSet& s) { return "{" + s.to_string() + "}"; }
std::string pi_label(const PrimeSet& s) { return "{" + s.to_string() + "}"; }

bool divides_all(const PrimeSet& s, const BigInt& m) {
    for (unsigned long r : s)
        if (m == 0 || !mpz_divisible_ui_p(m.get_mpz_t(), r)) return false;
    return true;
}

long mod(const BigInt& a, long m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r.get_si();
}

std::string sign_text(Sign s) { return s == Sign::Plus ? "+" : "-"; }

std::string factored_structure(const BigInt& n) {
    if (n == 1) return "1";
    FactoredInt f = factorize(n);
    std::string out;
    for (const auto& [p, e] : f.factors) {
        if (!out.empty()) out += ".";
        out += p.get_str();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Stmt& Stmt::subset(const Ctx& c, const std::string& what, const BigInt& m) {
    return check("π∩π(G) ⊆ π(" + what + ")", set_text(c.in_group) + " vs " + what + " = " + num(m),
                 divides_all(c.in_group, m));
}

Stmt& Stmt::equals(const Ctx& c, const PrimeSet& s) {
    return check("π∩π(G) = " + set_text(s), "π∩π(G) = " + set_text(c.in_group), c.in_group == s);
}

Stmt& Stmt::part(const std::string& what, const BigInt& m, const PrimeSet& s, const BigInt& want) {
    BigInt got = pi_part(m, s);
    return check("(" + what + ")_" + pi_label(s) + " = " + num(want), what + " = " + num(m) + ", part " + num(got),
                 got == want);
}

Stmt& Stmt::congruent(const std::string& label, const BigInt& a, long b, long m) {
    long am = mod(a, m), bm = ((b % m) + m) % m;
    return check(label, num(a) + " mod " + std::to_string(m) + " = " + std::to_string(am) + ", want " +
                            std::to_string(bm), am == bm);
}

bool emit(HallReport& r, const Ctx& c, Stmt s, const std::string& structure, unsigned long count,
          const std::string& fusion) {
    BigInt h;
    if (s.ok()) {
        // only evaluated for satisfied statements; unsatisfied ones may name impossible shapes
        h = pi_part(structure_order(structure, c.pi), c.pi);
        s.check("|H|_π = |G|_π", structure + " gives " + num(h) + ", |G|_π = " + num(c.pi_order), h == c.pi_order);
    }
    r.checks.push_back({s.id(), s.conditions(), s.ok()});
    if (!s.ok()) return false;
    r.classes.push_back({s.id(), structure, count, s.conditions(), fusion, h});
    return true;
}

HallReport base_report(const Ctx& c, Regime regime) {
    HallReport r;
    r.spec = c.spec;
    r.pi = c.pi;
    r.regime = regime;
    r.group_order = c.order.value;
    r.pi_order = c.pi_order;
    return r;
}

void settle(HallReport& r) {
    unsigned long k = 0;
    for (const auto& h : r.classes) k += h.class_count;
    r.k_pi = KPi::of(k);
    r.e_pi = k > 0 ? Verdict::Yes : Verdict::No;
    r.c_pi = k == 1 ? Verdict::Yes : Verdict::No;
    if (k == 0) r.d_pi = Verdict::No;
}

void bounded(HallReport& r, std::vector<unsigned long> bound, const std::string& reason) {
    r.e_pi = Verdict::OutOfScope;
    r.k_pi = KPi::within(std::move(bound));
    r.c_pi = Verdict::OutOfScope;
    r.d_pi = Verdict::OutOfScope;
    r.reason = reason;
}

// ------------------------------------------------------------ Sym and Alt

namespace {

PrimeSet primes_of_factorial(unsigned long n) {
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p <= n; ++p)
        if (is_prime(p)) ps.push_back(p);
    return PrimeSet(ps);
}

}  // namespace

bool sym_has_hall_impl(unsigned long n, const PrimeSet& pi, std::string* structure, std::string* id) {
    const PrimeSet all = primes_of_factorial(n);
    const PrimeSet in = pi.intersect(all);
    if (in.size() <= 1) {
        if (id) *id = "HallSymmetric(a)";
        if (structure) *structure = factored_structure(pi_part(factorial(n), pi));
        return true;
    }
    if (n >= 7 && is_prime(n) && in == primes_of_factorial(n - 1)) {
        if (id) *id = "HallSymmetric(b)";
        if (structure) *structure = "Sym" + std::to_string(n - 1);
        return true;
    }
    if (all.subset_of(pi)) {
        if (id) *id = "HallSymmetric(c)";
        if (structure) *structure = "Sym" + std::to_string(n);
        return true;
    }
    if (in == PrimeSet{2, 3}) {
        static const std::map<unsigned long, const char*> shapes = {
            {3, "Sym3"}, {4, "Sym4"}, {5, "Sym4"}, {7, "Sym3 × Sym4"}, {8, "Sym4 wr Sym2"}};
        auto it = shapes.find(n);
        if (it != shapes.end()) {
            if (id) *id = "HallSymmetric(d)";
            if (structure) *structure = it->second;
            return true;
        }
    }
    return false;
}

HallReport sym_alt(const Ctx& c, Regime regime) {
    HallReport r = base_report(c, regime);
    const unsigned long n = c.spec.n;
    const bool alt = c.spec.family == Family::Alt;
    const PrimeSet all = primes_of_factorial(n);
    const PrimeSet in = c.pi.intersect(all);

    auto alt_of = [&](const std::string& s, bool even_part) {
        if (!alt) return s;
        if (s == "Sym3") return std::string("Z(3)");
        if (s == "Sym4") return std::string("Alt4");
        if (s.rfind("Sym", 0) == 0 && s.find(' ') == std::string::npos) return "Alt" + s.substr(3);
        return even_part ? "(" + s + ")/2" : s;
    };

    {
        Stmt s("HallSymmetric(b)");
        s.check("n = p ≥ 7 prime", "n = " + num(n), n >= 7 && is_prime(n));
        s.check("π∩π(Sym_n) = π((n-1)!)", set_text(in) + " vs " + set_text(primes_of_factorial(n ? n - 1 : 0)),
                n >= 1 && in == primes_of_factorial(n - 1));
        emit(r, c, s, alt_of("Sym" + std::to_string(n - 1), true), 1);
    }
    {
        Stmt s("HallSymmetric(d)");
        s.check("π∩π(Sym_n) = {2,3}", set_text(in), in == PrimeSet{2, 3});
        s.check("n ∈ {3,4,5,7,8}", "n = " + num(n), n == 3 || n == 4 || n == 5 || n == 7 || n == 8);
        std::string shape;
        if (s.ok()) sym_has_hall_impl(n, c.pi, &shape, nullptr);
        emit(r, c, s, alt_of(shape.empty() ? "1" : shape, true), 1);
    }
    settle(r);
    if (r.e_pi == Verdict::Yes) {
        // these statements are mutually exclusive
        r.classes.resize(1);
    }
    const bool two_three = c.pi.contains(2ul) && c.pi.contains(3ul);
    if (two_three && !all.subset_of(c.pi)) {
        r.d_pi = Verdict::No;
    } else if (r.e_pi == Verdict::No) {
        r.d_pi = Verdict::No;
    }
    if (alt) r.notes.push_back("Hall subgroups of Alt(n) are the intersections with those of Sym(n)");
    return r;
}

// ------------------------------------------------------------ sporadic

namespace {

struct SporadicRow {
    const char* group;
    PrimeSet pi;
    const char* structure;
};

const std::vector<SporadicRow>& sporadic_rows() {
    static const std::vector<SporadicRow> rows = {
        {"M11", {2, 3}, "3^2:Q8.2"},
        {"M11", {2, 3, 5}, "Alt6.2"},
        {"M22", {2, 3, 5}, "2^4:Alt6"},
        {"M23", {2, 3}, "2^4:(3 × Alt4):2"},
        {"M23", {2, 3, 5}, "2^4:Alt6"},
        {"M23", {2, 3, 5}, "2^4:(3 × Alt5):2"},
        {"M23", {2, 3, 5, 7}, "L3(4):2_2"},
        {"M23", {2, 3, 5, 7}, "2^4:Alt7"},
        {"M23", {2, 3, 5, 7, 11}, "M22"},
        {"M24", {2, 3, 5}, "2^6:3.Sym6"},
        {"J1", {2, 3}, "2 × Alt4"},
        {"J1", {2, 7}, "2^3:7"},
        {"J1", {2, 3, 5}, "2 × Alt5"},
        {"J1", {2, 3, 7}, "2^3:7:3"},
        {"J4", {2, 3, 5}, "2^11:(2^6:3.Sym6)"},
    };
    return rows;
}

}  // namespace

HallReport sporadic(const Ctx& c, Regime regime) {
    HallReport r = base_report(c, regime);
    const std::string& name = c.spec.sporadic_name;
    if (regime == Regime::TwoNotInPi) {
        bounded(r, {0, 1}, "2 ∉ π: existence is not decided here; classes are conjugate when they exist");
        return r;
    }
    bool any_row = false;
    for (const auto& row : sporadic_rows()) {
        if (name != row.group || c.in_group != row.pi) continue;
        any_row = true;
        Stmt s("SporadicTable(" + name + "," + set_text(row.pi) + ")");
        s.equals(c, row.pi);
        emit(r, c, s, row.structure, 1);
    }
    if (regime == Regime::ThreeNotInPi && !any_row) {
        bounded(r, {0, 1}, "2 ∈ π, 3 ∉ π: only the J1 {2,7} row is tabulated; C_π holds outside 2G2");
        return r;
    }
    settle(r);
    if (r.e_pi == Verdict::No) {
        r.reason = "no proper π-Hall subgroup with 2,3 ∈ π in the sporadic table";
    } else {
        r.d_pi = Verdict::OutOfScope;
        r.reason = "tabulated";
    }
    return r;
}

// ------------------------------------------------------------ 2G2

HallReport two_g2(const Ctx& c) {
    HallReport r = base_report(c, Regime::ThreeNotInPi);
    const BigInt& q = c.q;
    const unsigned long n = (c.spec.a - 1) / 2;
    if (c.in_group != PrimeSet{2, 7}) {
        bounded(r, {0, 1}, "2 ∈ π, 3 ∉ π: 2G2(q) satisfies C_π unless π∩π(S) = {2,7}");
        return r;
    }
    const BigInt qp1 = q + 1;
    Stmt torus("2G2(torus)");
    torus.equals(c, PrimeSet{2, 7});
    torus.check("7 | q+1", "q+1 = " + num(qp1), mod(qp1, 7) == 0);
    const bool torus_ok = torus.ok();
    emit(r, c, torus, "Hall((2^2 × D(" + num(BigInt(qp1 / 2)) + ")):3)", 1, "Sylow tower 2 ≺ 7");

    Stmt frob("2G2(frobenius)");
    frob.equals(c, PrimeSet{2, 7});
    frob.check("7 | q+1", "q+1 = " + num(qp1), mod(qp1, 7) == 0);
    frob.check("n ≢ 3 (mod 7), q = 3^(2n+1)", "n = " + num(n) + ", n mod 7 = " + num(n % 7), n % 7 != 3);
    emit(r, c, frob, "2^3:7", 1, "Sylow tower 7 ≺ 2; Frobenius group of order 56");
    settle(r);
    r.d_pi = torus_ok ? Verdict::OutOfScope : Verdict::No;
    if (!torus_ok) r.reason = "a π-Hall subgroup requires 7 | q+1";
    return r;
}

}  // namespace detail

using namespace detail;

namespace {

GroupSpec lie_spec(Family f, unsigned long n, const BigInt& q, Eta eta, Variant v) {
    BigInt p;
    unsigned long a = 0;
    if (q < 2 || !prime_power(q, p, a)) throw InvalidParameter("q-prime-power", "q = " + q.get_str() + " is not a prime power");
    if (!p.fits_ulong_p()) throw InvalidParameter("q-prime-power", "characteristic too large");
    GroupSpec s;
    s.family = f;
    s.n = n;
    s.p = p.get_ui();
    s.a = a;
    s.eta = eta;
    s.variant = v;
    return s;
}

Eta to_eta(Sign s) { return s == Sign::Plus ? Eta::Plus : Eta::Minus; }

void require_cross(const GroupSpec& s, const PrimeSet& pi) {
    if (!pi.contains(2ul) || !pi.contains(3ul)) throw ScopeError("this classifier needs 2,3 ∈ π");
    if (pi.contains(s.p)) throw ScopeError("this classifier needs p ∉ π; p = " + std::to_string(s.p));
}

HallReport whole_or_sylow(const Ctx& c) {
    const bool whole = c.pi_order == c.order.value;
    HallReport r = base_report(c, whole ? Regime::WholeGroup : Regime::Sylow);
    Stmt s(whole ? "WholeGroup" : "Sylow");
    if (whole)
        s.check("π(G) ⊆ π", "π∩π(G) = " + set_text(c.in_group), true);
    else
        s.check("|π∩π(G)| ≤ 1", "π∩π(G) = " + set_text(c.in_group), true);
    emit(r, c, s, factored_structure(c.pi_order), 1);
    settle(r);
    r.d_pi = Verdict::Yes;
    return r;
}

}  // namespace

HallReport classify(const GroupSpec& raw, const PrimeSet& pi) {
    const GroupSpec spec = validate(raw);
    const Ctx c = make_ctx(spec, pi);

    if (c.pi_order == c.order.value || c.in_group.size() <= 1) return whole_or_sylow(c);

    const bool two = pi.contains(2ul), three = pi.contains(3ul);
    const Regime tag = !two ? Regime::TwoNotInPi : !three ? Regime::ThreeNotInPi : Regime::TwoThree;

    switch (spec.family) {
        case Family::Sym:
        case Family::Alt:
            return sym_alt(c, tag);
        case Family::Sporadic:
            return sporadic(c, tag);
        default:
            break;
    }

    if (spec.family == Family::Orthogonal && spec.n == 2) {
        // Ω2 is cyclic
        HallReport r = base_report(c, tag == Regime::TwoThree ? (pi.contains(spec.p) ? Regime::DefiningChar : Regime::CrossChar) : tag);
        Stmt s("OrthogonalHallDim6(a)");
        s.check("n = 2", "G cyclic of order " + num(c.order.value), true);
        emit(r, c, s, "Hall(Z(" + num(c.order.value) + "))", 1);
        settle(r);
        r.d_pi = Verdict::Yes;
        return r;
    }

    if (!two) {
        HallReport r = base_report(c, Regime::TwoNotInPi);
        bounded(r, {0, 1}, "2 ∉ π: existence is not decided here; π-Hall subgroups are conjugate when they exist");
        return r;
    }
    if (!three) {
        if (spec.family == Family::TwoG2) return two_g2(c);
        HallReport r = base_report(c, Regime::ThreeNotInPi);
        bounded(r, {0, 1}, "2 ∈ π, 3 ∉ π: existence is not decided here; C_π holds outside 2G2");
        return r;
    }
    if (pi.contains(spec.p)) return defining_char(c);

    switch (spec.family) {
        case Family::LinearUnitary:
            if (spec.variant == Variant::General) return gl2(c);
            if (spec.n == 2) return sl2(c);
            return linear_unitary(c);
        case Family::Symplectic:
            return symplectic(c);
        case Family::Orthogonal:
            return orthogonal(c);
        default:
            return exceptional(c);
    }
}

HallReport classify_sym(unsigned long n, const PrimeSet& pi) {
    GroupSpec s;
    s.family = Family::Sym;
    s.n = n;
    s.variant = Variant::General;
    return classify(s, pi);
}

HallReport classify_alt(unsigned long n, const PrimeSet& pi) {
    GroupSpec s;
    s.family = Family::Alt;
    s.n = n;
    return classify(s, pi);
}

HallReport classify_sporadic(const std::string& name, const PrimeSet& pi) {
    GroupSpec s;
    s.family = Family::Sporadic;
    s.sporadic_name = name;
    return classify(s, pi);
}

HallReport classify_sl2(const BigInt& q, const PrimeSet& pi, Variant v) {
    GroupSpec s = lie_spec(Family::LinearUnitary, 2, q, Eta::Plus, v);
    if (v == Variant::General) throw ScopeError("use classify_gl2 for GL2");
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_gl2(const BigInt& q, Sign eta, const PrimeSet& pi) {
    GroupSpec s = lie_spec(Family::LinearUnitary, 2, q, to_eta(eta), Variant::General);
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_linear_unitary(unsigned long n, const BigInt& q, Sign eta, const PrimeSet& pi, Variant v) {
    GroupSpec s = lie_spec(Family::LinearUnitary, n, q, to_eta(eta), v);
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_symplectic(unsigned long n2, const BigInt& q, const PrimeSet& pi, Variant v) {
    GroupSpec s = lie_spec(Family::Symplectic, n2, q, Eta::None, v);
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_orthogonal(unsigned long n, const BigInt& q, Eta eta, const PrimeSet& pi, Variant v) {
    GroupSpec s = lie_spec(Family::Orthogonal, n, q, eta, v);
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_exceptional(Family family, const BigInt& q, Eta eta, const PrimeSet& pi) {
    GroupSpec s = lie_spec(family, 0, q, eta, Variant::Simple);
    if (!s.exceptional() || family == Family::TwoG2) throw ScopeError("not an exceptional family handled here");
    require_cross(s, pi);
    return classify(s, pi);
}

HallReport classify_defining_char(const GroupSpec& raw, const PrimeSet& pi) {
    const GroupSpec spec = validate(raw);
    if (!spec.lie_type()) throw ScopeError("defining characteristic needs a group of Lie type");
    if (!pi.contains(2ul) || !pi.contains(3ul)) throw ScopeError("this classifier needs 2,3 ∈ π");
    if (!pi.contains(spec.p)) throw ScopeError("defining characteristic needs p ∈ π");
    return classify(spec, pi);
}

std::optional<unsigned long> sym_hall_orbits(unsigned long m, const PrimeSet& pi) {
    std::string id, shape;
    if (!sym_has_hall_impl(m, pi, &shape, &id)) return std::nullopt;
    if (id == "HallSymmetric(a)") {
        const PrimeSet in = pi.intersect([&] {
            std::vector<unsigned long> ps;
            for (unsigned long p = 2; p <= m; ++p)
                if (is_prime(p)) ps.push_back(p);
            return PrimeSet(ps);
        }());
        if (in.empty()) return m;  // trivial subgroup
        // a Sylow r-subgroup of Sym_m has one orbit per base-r digit unit
        const unsigned long r = *in.begin();
        unsigned long t = 0;
        for (unsigned long x = m; x; x /= r) t += x % r;
        return t;
    }
    if (id == "HallSymmetric(b)") return 2;
    if (id == "HallSymmetric(c)") return 1;
    // (d)
    switch (m) {
        case 5:
        case 7:
            return 2;
        default:
            return 1;
    }
}

bool sym_has_hall(unsigned long m, const PrimeSet& pi) { return sym_has_hall_impl(m, pi, nullptr, nullptr); }

KPiBound kpi_bound_almost_simple(const GroupSpec& raw, const PrimeSet& pi, Outer outer) {
    KPiBound b;
    const std::vector<unsigned long> theorem = regime_bound(pi);
    HallReport r = classify(raw, pi);
    if (!r.k_pi.is_exact()) {
        b.values = r.k_pi.bound;
        b.reason = "bound for the π regime: " + r.reason;
        return b;
    }
    const unsigned long k = *r.k_pi.exact;
    auto exactly = [&](unsigned long v, const std::string& why) {
        b.values = {v};
        b.exact = v;
        b.reason = why;
    };
    if (k == 0) {
        exactly(0, "S has no π-Hall subgroup");
    } else if (outer == Outer::Trivial) {
        exactly(k, "G = S");
    } else if (r.spec.family == Family::Alt || r.spec.family == Family::Sym) {
        exactly(k, "k_π(Sym_n) = k_π^{Sym_n}(Alt_n) = k_π(Alt_n)");
    } else if (k == 1) {
        exactly(1, "k_π(S) = 1");
    } else if (k == 9) {
        b.values = {1, 9};
        b.reason = "k_π(S) = 9 for PSp_2n(q); the induced classes number 1 or 9";
    } else if (r.spec.family == Family::TwoG2) {
        exactly(2, "the two classes are not isomorphic, so no automorphism fuses them");
    } else {
        for (unsigned long v : theorem)
            if (v >= 1 && v <= k) b.values.push_back(v);
        b.reason = "1 ≤ k^G_π(S) ≤ k_π(S) = " + std::to_string(k);
    }
    return b;
}

}  // namespace hall
