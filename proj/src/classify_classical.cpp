// Classical groups in cross characteristic with 2,3 in pi.
#include "classify_internal.hpp"

#include <numeric>

namespace hall::detail {

namespace {

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Ctx of the isometry group behind a simple classical spec.
Ctx isometry_ctx(const Ctx& c) {
    if (c.spec.variant != Variant::Simple) return c;
    GroupSpec s = c.spec;
    s.variant = Variant::Isometry;
    s.aliases.clear();
    return make_ctx(s, c.pi);
}

std::string sym(unsigned long m) { return "Sym" + std::to_string(m); }

void cross_char_d(HallReport& r) {
    if (r.e_pi == Verdict::Yes) {
        r.d_pi = Verdict::No;
        r.notes.push_back("there is a π-subgroup not conjugate into a π-Hall subgroup, so D_π fails");
    }
}

PrimeSet P23() { return PrimeSet{2, 3}; }
PrimeSet P235() { return PrimeSet{2, 3, 5}; }
PrimeSet P2357() { return PrimeSet{2, 3, 5, 7}; }

}  // namespace

// ------------------------------------------------------------------- SL2

HallReport sl2(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    const BigInt& q = c.q;
    const Sign e = epsilon(q);
    const bool simple = c.spec.variant == Variant::Simple;
    const BigInt qe = q - to_int(e);
    const BigInt q21 = q * q - 1;
    const std::string fuse = "PGL2(q) interchanges the two classes";

    emit(r, c, Stmt("SLU23dim2(a)").subset(c, "q-ε", qe),
         std::string("Hall(") + (simple ? "" : "2.") + "D(" + num(qe) + "))", 1);
    emit(r, c, Stmt("SLU23dim2(b)").equals(c, P23()).part("q^2-1", q21, P23(), 24), simple ? "Alt4" : "2.Alt4", 1);
    emit(r, c, Stmt("SLU23dim2(c)").equals(c, P23()).part("q^2-1", q21, P23(), 48), simple ? "Sym4" : "2.Sym4", 2,
         fuse);
    emit(r, c, Stmt("SLU23dim2(d)").equals(c, P235()).part("q^2-1", q21, P235(), 120), simple ? "Alt5" : "SL2(5)", 2,
         fuse);
    settle(r);
    cross_char_d(r);
    return r;
}

unsigned long sl2_class_count(const BigInt& q, const PrimeSet& pi) {
    GroupSpec s;
    s.family = Family::LinearUnitary;
    s.n = 2;
    BigInt p;
    prime_power(q, p, s.a);
    s.p = p.get_ui();
    s.eta = Eta::Plus;
    s.variant = Variant::Isometry;
    HallReport r = sl2(make_ctx(s, pi));
    return *r.k_pi.exact;
}

// ------------------------------------------------------------------- GL2

HallReport gl2(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    const BigInt& q = c.q;
    const Sign e = epsilon(q);
    const Sign eta = c.spec.sign();
    const BigInt qe = q - to_int(e);
    const BigInt qeta = q - to_int(eta);

    emit(r, c, Stmt("GLU23dim2(a)").subset(c, "q-ε", qe), "Hall(Z(" + num(qeta) + ").D(" + num(BigInt(2 * qe)) + "))",
         1);
    emit(r, c, Stmt("GLU23dim2(b)").equals(c, P23()).part("q^2-1", BigInt(q * q - 1), P23(), 24),
         "Hall(Z(" + num(qeta) + ") ∘ 2.Sym4)", 1);
    settle(r);
    cross_char_d(r);
    return r;
}

unsigned long gl2_class_count(const BigInt& q, Sign eta, const PrimeSet& pi) {
    GroupSpec s;
    s.family = Family::LinearUnitary;
    s.n = 2;
    BigInt p;
    prime_power(q, p, s.a);
    s.p = p.get_ui();
    s.eta = eta == Sign::Plus ? Eta::Plus : Eta::Minus;
    s.variant = Variant::General;
    HallReport r = gl2(make_ctx(s, pi));
    return *r.k_pi.exact;
}

// ------------------------------------------------------- linear and unitary

HallReport linear_unitary(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    const Ctx iso = isometry_ctx(c);
    const BigInt& q = c.q;
    const unsigned long n = c.spec.n;
    const Sign eta = c.spec.sign();
    const int et = to_int(eta);
    const BigInt qeta = q - et;
    const BigInt q21 = q * q - 1;
    const bool simple = c.spec.variant == Variant::Simple;
    const BigInt d = simple ? pi_part(gcd(BigInt(n), qeta), c.pi) : BigInt(1);
    const std::string tail = d > 1 ? "/" + num(d) : "";
    const std::string eta_s = sign_text(eta);

    // (b) torus normalizer
    {
        Stmt s("HallSubgroupsOfLinearAndUnitaryGroups(b)");
        const bool c12 = mod(q, 12) == mod(BigInt(et), 12);
        const bool c4 = n == 3 && mod(q, 4) == mod(BigInt(et), 4);
        s.check("q ≡ η (mod 12), or n = 3 and q ≡ η (mod 4)",
                "q = " + num(q) + ", η = " + eta_s + ", q mod 12 = " + num(static_cast<unsigned long>(mod(q, 12))),
                c12 || c4);
        s.check("Sym_n ∈ E_π", "n = " + num(n), sym_has_hall(n, c.pi));
        bool cover = true;
        for (unsigned long rr : c.in_group)
            if (!(mpz_divisible_ui_p(qeta.get_mpz_t(), rr) || rr <= n)) cover = false;
        s.check("π∩π(G) ⊆ π(q-η) ∪ π(n!)", set_text(c.in_group) + ", q-η = " + num(qeta), cover);
        bool parts = true;
        std::string vals;
        for (unsigned long rr : c.in_group) {
            if (rr > n || mpz_divisible_ui_p(qeta.get_mpz_t(), rr)) continue;
            const BigInt g = r_part(iso.order.value, rr), sn = r_part(factorial(n), rr);
            vals += (vals.empty() ? "" : ", ") + std::string("r = ") + num(rr) + ": " + num(g) + " vs " + num(sn);
            parts = parts && g == sn;
        }
        s.check("|G|_r = |Sym_n|_r for r ∈ (π∩π(n!)) \\ π(q-η)", vals.empty() ? "no such r" : vals, parts);
        emit(r, c, s, "Hall(Z(" + num(qeta) + ")^" + num(n - 1) + "." + sym(n) + ")" + tail, 1);
    }

    // (e) first, it changes the count attached to (c)
    bool e_holds = false;
    HallReport scratch = r;
    if (n == 11) {
        Stmt s("HallSubgroupsOfLinearAndUnitaryGroups(e)");
        s.check("n = 11", "n = 11", true);
        s.equals(c, P23()).part("q^2-1", q21, P23(), 24);
        s.congruent("q ≡ -η (mod 3)", q, -et, 3);
        s.congruent("q ≡ η (mod 4)", q, et, 4);
        const BigInt z = r_part(qeta, 2);
        const BigInt det = pi_part(qeta, c.pi);
        e_holds = emit(scratch, c, s,
                       "((Z(" + num(z) + ") ∘ 2.Sym4) wr Sym4 × Z(" + num(z) + ") wr Sym3)/" + num(det) + tail, 1,
                       "together with statement (c) the total is 3 classes");
    }

    // (c) GL2 blocks
    {
        const unsigned long m = n / 2, k = n % 2;
        Stmt s("HallSubgroupsOfLinearAndUnitaryGroups(c)");
        s.check("n = 2m+k, k ∈ {0,1}", "m = " + num(m) + ", k = " + num(k), m >= 1);
        s.congruent("q ≡ -η (mod 3)", q, -et, 3);
        s.subset(c, "q^2-1", q21);
        const auto t = sym_hall_orbits(m, c.pi);
        s.check("Sym_m ∈ E_π", "m = " + num(m), t.has_value());
        const unsigned long kg = gl2_class_count(q, eta, c.pi);
        s.check("GL2^η(q) ∈ E_π", "k_π(GL2^η(q)) = " + num(kg), kg >= 1);
        unsigned long count = 0;
        std::string fusion;
        if (s.ok()) {
            count = ipow(BigInt(kg), *t).get_ui();
            fusion = "k_π(GL2^η(q))^t with t = " + num(*t) + " orbits of the Sym_m Hall subgroup";
            if (e_holds) {
                count = 2;
                fusion = "two classes alongside statement (e), total 3";
            }
        }
        std::string block = "GL2(" + num(q) + "," + eta_s + ") wr " + sym(m);
        if (k) block = "(" + block + " × Z(" + num(qeta) + "))";
        emit(r, c, s, "Hall(" + block + "/" + num(qeta) + ")" + tail, count, fusion);
    }
    if (n == 11) {
        r.checks.push_back(scratch.checks.back());
        if (e_holds) r.classes.push_back(scratch.classes.back());
    }

    // (d)
    if (n == 4) {
        Stmt s("HallSubgroupsOfLinearAndUnitaryGroups(d)");
        s.equals(c, P235());
        s.congruent("q ≡ 5η (mod 8)", q, 5 * et, 8);
        s.part("q+η", BigInt(q + et), PrimeSet{3}, 3);
        s.part("q^2+1", BigInt(q * q + 1), PrimeSet{5}, 5);
        emit(r, c, s, "4.2^4.Alt6" + tail, 2, "GL4^η(q) interchanges the two classes");
    }
    settle(r);
    cross_char_d(r);
    return r;
}

// ------------------------------------------------------------- symplectic

HallReport symplectic(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    const BigInt& q = c.q;
    const unsigned long n = c.spec.n / 2;
    const bool simple = c.spec.variant == Variant::Simple;
    Stmt s("HallSubgroupsOfSymplecticGroups(A)");
    const auto t = sym_hall_orbits(n, c.pi);
    s.check("Sym_n ∈ E_π", "n = " + num(n), t.has_value());
    const unsigned long ks = sl2_class_count(q, c.pi);
    s.check("SL2(q) ∈ E_π", "k_π(SL2(q)) = " + num(ks), ks >= 1);
    s.subset(c, "q^2-1", BigInt(q * q - 1));
    unsigned long count = 0;
    std::string fusion;
    if (s.ok()) {
        count = ipow(BigInt(ks), *t).get_ui();
        fusion = "k_π(SL2(q))^t with t = " + num(*t) + " orbits of the Sym_n Hall subgroup";
        if (count == 9) fusion += "; induced classes in almost simple extensions number 1 or 9";
    }
    emit(r, c, s, "Hall(SL2(" + num(q) + ") wr " + sym(n) + ")" + (simple ? "/2" : ""), count, fusion);
    settle(r);
    cross_char_d(r);
    return r;
}

// ------------------------------------------------------------- orthogonal

namespace {

void orthogonal_small(HallReport& r, const Ctx& c) {
    const BigInt& q = c.q;
    const Sign e = epsilon(q);
    const int ei = to_int(e);
    const BigInt qe = q - ei, qpe = q + ei;
    const BigInt q21 = q * q - 1;
    const unsigned long n = c.spec.n;
    const std::string id = "OrthogonalHallDim6";
    auto st = [&](const char* letter) { return Stmt(id + "(" + letter + ")"); };

    if (n == 3) {
        emit(r, c, st("b").subset(c, "q-ε", qe), "Hall(D(" + num(qe) + "))", 1);
        emit(r, c, st("c").equals(c, P23()).part("q^2-1", q21, P23(), 24), "Alt4", 1);
        emit(r, c, st("d").equals(c, P23()).part("q^2-1", q21, P23(), 48), "Sym4", 2,
             "SO3(q) interchanges the two classes");
        emit(r, c, st("e").equals(c, P235()).part("q^2-1", q21, P235(), 120), "Alt5", 2,
             "SO3(q) interchanges the two classes");
        return;
    }
    if (n == 4 && c.spec.eta == Eta::Plus) {
        const std::string so = "each element of SO4+(q) \\ Ω4+(q) acts on the classes as an involution of type (ij)(kl)";
        const std::string o = "each element of O4+(q) \\ Ω4+(q) acts on the classes as an involution of type (ij)(kl)";
        emit(r, c, st("f").subset(c, "q-ε", qe), "Hall(2.D(" + num(qe) + ") ∘ 2.D(" + num(qe) + "))", 1);
        emit(r, c, st("g").equals(c, P23()).part("q^2-1", q21, P23(), 24), "SL2(3) ∘ SL2(3)", 1);
        emit(r, c, st("h").equals(c, P23()).part("q-ε", qe, P23(), 12), "2.D(12) ∘ SL2(3)", 2,
             "SO4+(q) fixes the two classes, O4+(q) interchanges them");
        emit(r, c, st("i").equals(c, P23()).part("q^2-1", q21, P23(), 48), "2.Sym4 ∘ 2.Sym4", 4, so);
        emit(r, c, st("j").equals(c, P23()).part("q-ε", qe, P23(), 24), "2.D(24) ∘ 2.Sym4", 4, o);
        emit(r, c, st("k").equals(c, P235()).part("q^2-1", q21, P235(), 120), "SL2(5) ∘ SL2(5)", 4, so);
        emit(r, c, st("l").equals(c, P235()).part("q-ε", qe, P235(), 60), "2.D(60) ∘ SL2(5)", 4, o);
        return;
    }
    if (n == 4) {
        emit(r, c, st("m").subset(c, "q^2-1", q21), "Hall(D(" + num(q21) + "))", 1);
        emit(r, c, st("n").equals(c, P23()).part("q^2-1", q21, P23(), 24), "Sym4", 2,
             "O4-(q) fixes the two classes, GO4-(q) interchanges them");
        return;
    }
    if (n == 5) {
        const std::string so = "SO5(q) interchanges the two classes";
        emit(r, c, st("o").subset(c, "q-ε", qe), "Hall((2.D(" + num(qe) + ") ∘ 2.D(" + num(qe) + ")).2)", 1);
        emit(r, c, st("p").equals(c, P23()).part("q^2-1", q21, P23(), 24), "(2.Alt4 ∘ 2.Alt4).2", 1);
        emit(r, c, st("q").equals(c, P23()).part("q^2-1", q21, P23(), 48), "(2.Sym4 ∘ 2.Sym4).2", 2, so);
        emit(r, c, st("r").equals(c, P235()).part("q^2-1", q21, P235(), 120), "(SL2(5) ∘ SL2(5)).2", 2, so);
        return;
    }
    // n == 6
    const Sign eta = c.spec.sign();
    const int et = to_int(eta);
    {
        Stmt s = st("s");
        s.check("η = ε", "η = " + sign_text(eta) + ", ε = " + sign_text(e), eta == e);
        bool cover = true;
        for (unsigned long rr : c.in_group)
            if (rr != 3 && !mpz_divisible_ui_p(qe.get_mpz_t(), rr)) cover = false;
        s.check("π∩π(G) ⊆ π(q-ε) ∪ {3}", set_text(c.in_group) + ", q-ε = " + num(qe), cover);
        const bool three_in = mod(qe, 3) == 0;
        s.check("3 ∈ π(q-ε) or (q+ε)_3 = 3", "q-ε = " + num(qe) + ", (q+ε)_3 = " + num(r_part(qpe, 3)),
                three_in || r_part(qpe, 3) == 3);
        emit(r, c, s, "Hall(D(" + num(BigInt(2 * qe)) + ") wr Sym3/4)", 1);
    }
    {
        Stmt s = st("t");
        s.check("η = -ε", "η = " + sign_text(eta) + ", ε = " + sign_text(e), eta == -e);
        s.subset(c, "q-ε", qe);
        emit(r, c, s, "Hall((D(" + num(BigInt(2 * qe)) + ") wr Sym2 × D(" + num(BigInt(2 * qpe)) + "))/4)", 1);
    }
    {
        Stmt s = st("u");
        s.congruent("q ≡ -η (mod 3)", q, -et, 3);
        s.equals(c, P23()).part("q^2-1", q21, P23(), 24);
        emit(r, c, s, "(Z(" + num(r_part(BigInt(q - et), 2)) + ") ∘ 2.Sym4 ∘ 2.Sym4).2", 1);
    }
    {
        Stmt s = st("v");
        s.check("η = ε", "η = " + sign_text(eta) + ", ε = " + sign_text(e), eta == e);
        const long q8 = mod(q, 8);
        s.check("q ≡ ±3 (mod 8)", "q mod 8 = " + num(static_cast<unsigned long>(q8)), q8 == 3 || q8 == 5);
        s.equals(c, P235()).part("q^2-1", q21, P23(), 24);
        s.congruent("q^2 ≡ -1 (mod 5)", BigInt(q * q), -1, 5);
        s.congruent("q ≡ -η (mod 3)", q, -et, 3);
        emit(r, c, s, "2^5.Alt6", 2, "O6(q) fixes the two classes, GO6(q) interchanges them");
    }
}

void orthogonal_large(HallReport& r, const Ctx& c, const Ctx& iso) {
    const BigInt& q = c.q;
    const unsigned long n = c.spec.n, m = n / 2;
    const Sign e = epsilon(q);
    const int ei = to_int(e);
    const BigInt qe = q - ei, qpe = q + ei;
    const BigInt q21 = q * q - 1;
    const bool odd = n % 2 == 1;
    const BigInt z = iso.order.value / c.order.value;  // center of Ω when the simple group is asked for
    const std::string tail = z > 1 ? "/" + num(z) : "";
    const std::string id = "HallSubgroupsOfOrthogonalGroupsOfEvenDimension";
    auto st = [&](const char* letter) { return Stmt(id + "(" + letter + ")"); };
    const std::string o2 = "D(" + num(BigInt(2 * qe)) + ")";
    const std::string o2m = "D(" + num(BigInt(2 * qpe)) + ")";
    auto torus_common = [&](Stmt& s) {
        s.subset(c, "q-ε", qe);
        s.congruent("q ≡ ε (mod 12)", q, ei, 12);
    };
    const Sign eps_m = sign_pow(e, m);

    {
        Stmt s = st("a");
        s.check("n = 2m+1", "n = " + num(n), odd);
        torus_common(s);
        s.check("Sym_m ∈ E_π", "m = " + num(m), sym_has_hall(m, c.pi));
        emit(r, c, s, "Hall((" + o2 + " wr " + sym(m) + " × Z(2))/4)" + tail, 1);
    }
    {
        Stmt s = st("b");
        s.check("n = 2m", "n = " + num(n), !odd);
        s.check("η = ε^m", odd ? "n odd" : "η = " + sign_text(c.spec.sign()) + ", ε^m = " + sign_text(eps_m),
                !odd && c.spec.sign() == eps_m);
        torus_common(s);
        s.check("Sym_m ∈ E_π", "m = " + num(m), sym_has_hall(m, c.pi));
        emit(r, c, s, "Hall(" + o2 + " wr " + sym(m) + "/4)" + tail, 1);
    }
    {
        Stmt s = st("c");
        s.check("n = 2m", "n = " + num(n), !odd);
        s.check("η = -ε^m", odd ? "n odd" : "η = " + sign_text(c.spec.sign()) + ", ε^m = " + sign_text(eps_m),
                !odd && c.spec.sign() == -eps_m);
        torus_common(s);
        s.check("Sym_{m-1} ∈ E_π", "m-1 = " + num(m - 1), sym_has_hall(m - 1, c.pi));
        emit(r, c, s, "Hall((" + o2 + " wr " + sym(m - 1) + " × " + o2m + ")/4)" + tail, 1);
    }
    if (n == 11) {
        Stmt s = st("d");
        s.equals(c, P23());
        s.congruent("q ≡ ε (mod 12)", q, ei, 12);
        s.part("q^2-1", q21, c.pi, 24);
        emit(r, c, s, "Hall((" + o2 + " wr Sym4 × Z(2) wr Sym3)/4)" + tail, 1);
    }
    if (n == 12) {
        Stmt s = st("e");
        s.check("η = -", "η = " + sign_text(c.spec.sign()), c.spec.eta == Eta::Minus);
        s.equals(c, P23());
        s.congruent("q ≡ ε (mod 12)", q, ei, 12);
        s.part("q^2-1", q21, c.pi, 24);
        emit(r, c, s, "Hall((" + o2 + " wr Sym4 × Z(2) wr Sym3 × Z(2))/4)" + tail, 2,
             "the order 2 automorphism induced by similarities interchanges the two classes");
    }
    auto exotic = [&](const char* letter, const BigInt& want, const std::string& structure, unsigned long count,
                      const std::string& fusion) {
        Stmt s = st(letter);
        s.equals(c, P2357());
        s.check("|Ω|_π = " + factored_structure(want), "|Ω|_π = " + num(iso.pi_order), iso.pi_order == want);
        emit(r, c, s, structure, count, fusion);
    };
    if (n == 7)
        exotic("f", BigInt(512 * 81 * 5 * 7), "Omega7(2)", 2, "SO7(q) interchanges the two classes");
    if (n == 8 && c.spec.eta == Eta::Plus)
        exotic("g", BigInt(8192) * 243 * 25 * 7, z > 1 ? "Omega8+(2)" : "2.Omega8+(2)", 4,
               "diagonal and graph automorphisms act as Sym4 on the four classes; diagonal ones without fixed points");
    if (n == 9)
        exotic("h", BigInt(16384) * 243 * 25 * 7, "2.Omega8+(2).2", 2, "SO9(q) interchanges the two classes");
}

}  // namespace

HallReport orthogonal(const Ctx& c) {
    HallReport r = base_report(c, Regime::CrossChar);
    if (c.spec.n <= 6)
        orthogonal_small(r, c);
    else
        orthogonal_large(r, c, isometry_ctx(c));
    settle(r);
    cross_char_d(r);
    return r;
}

}  // namespace hall::detail
