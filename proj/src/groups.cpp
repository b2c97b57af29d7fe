#include "hall/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace hall {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::Alt, "Alt"},       {Family::Sym, "Sym"},
    {Family::Sporadic, "Sporadic"}, {Family::LinearUnitary, "LinearUnitary"},
    {Family::Symplectic, "Symplectic"}, {Family::Orthogonal, "Orthogonal"},
    {Family::G2, "G2"},         {Family::F4, "F4"},
    {Family::E6, "E6"},         {Family::E7, "E7"},
    {Family::E8, "E8"},         {Family::TriD4, "3D4"},
    {Family::TwoG2, "2G2"},
};

FactoredInt fi(std::initializer_list<std::pair<unsigned long, unsigned>> fs) {
    FactoredInt r;
    for (auto [p, e] : fs) {
        r.factors[BigInt(p)] = e;
        r.value *= ipow(BigInt(p), e);
    }
    return r;
}

FactoredInt prime_power_factored(unsigned long p, unsigned long e) {
    FactoredInt r;
    if (e == 0) return r;
    r.factors[BigInt(p)] = static_cast<unsigned>(e);
    r.value = ipow(BigInt(p), e);
    return r;
}

}  // namespace

const char* family_name(Family f) {
    for (const auto& fn : kFamilyNames)
        if (fn.family == f) return fn.name;
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (const auto& fn : kFamilyNames)
        if (s == fn.name) return fn.family;
    return std::nullopt;
}

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::Simple: return "simple";
        case Variant::Isometry: return "isometry";
        case Variant::General: return "general";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& s) {
    if (s == "simple") return Variant::Simple;
    if (s == "isometry") return Variant::Isometry;
    if (s == "general") return Variant::General;
    return std::nullopt;
}

bool GroupSpec::exceptional() const {
    switch (family) {
        case Family::G2: case Family::F4: case Family::E6: case Family::E7:
        case Family::E8: case Family::TriD4: case Family::TwoG2:
            return true;
        default:
            return false;
    }
}

Sign GroupSpec::sign() const {
    if (eta == Eta::Plus) return Sign::Plus;
    if (eta == Eta::Minus) return Sign::Minus;
    throw InvalidParameter("eta-sign", "group has no sign parameter");
}

std::string GroupSpec::name() const {
    const std::string qs = lie_type() ? q().get_str() : "";
    const std::string ns = std::to_string(n);
    const bool minus = eta == Eta::Minus;
    switch (family) {
        case Family::Alt: return "Alt(" + ns + ")";
        case Family::Sym: return "Sym(" + ns + ")";
        case Family::Sporadic: return sporadic_name;
        case Family::LinearUnitary: {
            std::string head = variant == Variant::Simple ? "PSL" : variant == Variant::Isometry ? "SL" : "GL";
            return head + "(" + ns + "," + qs + (minus ? ",-" : "") + ")";
        }
        case Family::Symplectic:
            return std::string(variant == Variant::Simple ? "PSp" : "Sp") + "(" + ns + "," + qs + ")";
        case Family::Orthogonal: {
            std::string head = variant == Variant::Simple ? "PO" : "O";
            if (eta == Eta::Plus) head += "+";
            if (eta == Eta::Minus) head += "-";
            return head + "(" + ns + "," + qs + ")";
        }
        case Family::G2: return "G2(" + qs + ")";
        case Family::F4: return "F4(" + qs + ")";
        case Family::E6: return "E6(" + qs + (minus ? ",-" : "") + ")";
        case Family::E7: return "E7(" + qs + ")";
        case Family::E8: return "E8(" + qs + ")";
        case Family::TriD4: return "3D4(" + qs + ")";
        case Family::TwoG2: return "2G2(" + qs + ")";
    }
    return "?";
}

// ---------------------------------------------------------------- sporadic

const std::vector<std::pair<std::string, FactoredInt>>& sporadic_table() {
    static const std::vector<std::pair<std::string, FactoredInt>> table = {
        {"M11", fi({{2, 4}, {3, 2}, {5, 1}, {11, 1}})},
        {"M12", fi({{2, 6}, {3, 3}, {5, 1}, {11, 1}})},
        {"M22", fi({{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}})},
        {"M23", fi({{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}})},
        {"M24", fi({{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}})},
        {"J1", fi({{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}})},
        {"J2", fi({{2, 7}, {3, 3}, {5, 2}, {7, 1}})},
        {"J3", fi({{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}})},
        {"J4", fi({{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}})},
        {"Co1", fi({{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}})},
        {"Co2", fi({{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}})},
        {"Co3", fi({{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}})},
        {"Fi22", fi({{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}})},
        {"Fi23", fi({{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}})},
        {"Fi24'", fi({{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}})},
        {"HS", fi({{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}})},
        {"McL", fi({{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}})},
        {"He", fi({{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}})},
        {"Ru", fi({{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}})},
        {"Suz", fi({{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}})},
        {"O'N", fi({{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}})},
        {"HN", fi({{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}})},
        {"Ly", fi({{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}})},
        {"Th", fi({{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}})},
        {"B", fi({{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1}, {47, 1}})},
        {"M", fi({{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
                  {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}})},
    };
    return table;
}

std::optional<std::string> canonical_sporadic(const std::string& name) {
    static const std::map<std::string, std::string> aliases = {
        {"Fi24", "Fi24'"}, {"ON", "O'N"}, {"BM", "B"}, {"F2", "B"}, {"F1", "M"}, {"Monster", "M"},
        {"Baby", "B"}, {"HJ", "J2"}, {"HHM", "J3"}, {"He'", "He"},
    };
    for (const auto& [n, _] : sporadic_table())
        if (n == name) return n;
    auto it = aliases.find(name);
    if (it != aliases.end()) return it->second;
    return std::nullopt;
}

BigInt weyl_order(const std::string& type) {
    static const std::map<std::string, unsigned long> w = {
        {"G2", 12}, {"F4", 1152}, {"E6", 51840}, {"E7", 2903040}, {"E8", 696729600},
    };
    auto it = w.find(type);
    if (it == w.end()) throw InvalidParameter("weyl-type", "unknown Weyl group W(" + type + ")");
    return it->second;
}

// ------------------------------------------------------------------- orders

namespace {

std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

BigInt cyclotomic_value(const BigInt& q, unsigned long k, std::map<unsigned long, BigInt>& memo) {
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    BigInt v = ipow(q, k) - 1;
    for (unsigned long j : divisors(k))
        if (j < k) v /= cyclotomic_value(q, j, memo);
    memo[k] = v;
    return v;
}

}  // namespace

FactoredInt factor_q_pow_minus(const BigInt& q, unsigned long d, int s) {
    std::map<unsigned long, BigInt> memo;
    FactoredInt r;
    if (s == 1) {
        for (unsigned long k : divisors(d)) r *= factorize(cyclotomic_value(q, k, memo));
    } else {
        for (unsigned long k : divisors(2 * d))
            if (d % k != 0) r *= factorize(cyclotomic_value(q, k, memo));
    }
    return r;
}

namespace {

int eta_int(Eta e) { return e == Eta::Minus ? -1 : 1; }

BigInt gcd_ui(const BigInt& x, unsigned long m) {
    BigInt g;
    BigInt mm = m;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
    return g;
}

// q^N prod (q^d - s)
FactoredInt lie_product(const GroupSpec& s, unsigned long qexp, const std::vector<std::pair<unsigned long, int>>& terms) {
    FactoredInt r = prime_power_factored(s.p, s.a * qexp);
    for (auto [d, sg] : terms) r *= factor_q_pow_minus(s.q(), d, sg);
    return r;
}

}  // namespace

GroupOrder order(const GroupSpec& s) {
    GroupOrder out;
    const BigInt q = s.lie_type() ? s.q() : BigInt(0);
    auto divide_center = [&](const BigInt& d) {
        out.center_divisor = d;
        if (d > 1) out.order /= factorize(d);
    };
    switch (s.family) {
        case Family::Sym:
            out.order = factorize(factorial(s.n));
            out.formula_tag = "n!";
            break;
        case Family::Alt:
            out.order = factorize(factorial(s.n));
            divide_center(2);
            out.formula_tag = "n!/2";
            break;
        case Family::Sporadic: {
            for (const auto& [nm, o] : sporadic_table())
                if (nm == s.sporadic_name) out.order = o;
            if (out.order.value == 1) throw InvalidParameter("sporadic-name", "unknown sporadic group " + s.sporadic_name);
            out.formula_tag = "sporadic-table";
            break;
        }
        case Family::LinearUnitary: {
            const int e = eta_int(s.eta);
            if (s.variant == Variant::General) {
                out.order = lie_product(s, 1, {{2, 1}, {1, e}});
                out.formula_tag = e > 0 ? "GL2" : "GU2";
                break;
            }
            std::vector<std::pair<unsigned long, int>> terms;
            for (unsigned long i = 2; i <= s.n; ++i) terms.push_back({i, (e < 0 && i % 2 == 1) ? -1 : 1});
            out.order = lie_product(s, s.n * (s.n - 1) / 2, terms);
            out.formula_tag = e > 0 ? "SL" : "SU";
            if (s.variant == Variant::Simple) {
                divide_center(gcd_ui(q - e, s.n));
                out.formula_tag = "P" + out.formula_tag;
            }
            break;
        }
        case Family::Symplectic: {
            const unsigned long m = s.n / 2;
            std::vector<std::pair<unsigned long, int>> terms;
            for (unsigned long i = 1; i <= m; ++i) terms.push_back({2 * i, 1});
            out.order = lie_product(s, m * m, terms);
            out.formula_tag = "Sp";
            if (s.variant == Variant::Simple) {
                divide_center(gcd_ui(q - 1, 2));
                out.formula_tag = "PSp";
            }
            break;
        }
        case Family::Orthogonal: {
            const unsigned long m = s.n / 2;
            std::vector<std::pair<unsigned long, int>> terms;
            if (s.n % 2 == 1) {
                for (unsigned long i = 1; i <= m; ++i) terms.push_back({2 * i, 1});
                out.order = lie_product(s, m * m, terms);
                divide_center(gcd_ui(q - 1, 2));
                out.formula_tag = "Omega-odd";
                break;
            }
            const int e = eta_int(s.eta);
            terms.push_back({m, e});
            for (unsigned long i = 1; i < m; ++i) terms.push_back({2 * i, 1});
            out.order = lie_product(s, m * (m - 1), terms);
            BigInt d = gcd_ui(q - 1, 2);
            out.formula_tag = "Omega-even";
            if (s.variant == Variant::Simple && d == 2) {
                d *= gcd_ui(ipow(q, m) - e, 4) / 2;
                out.formula_tag = "POmega-even";
            }
            divide_center(d);
            break;
        }
        case Family::G2:
            out.order = lie_product(s, 6, {{6, 1}, {2, 1}});
            out.formula_tag = "G2";
            break;
        case Family::F4:
            out.order = lie_product(s, 24, {{2, 1}, {6, 1}, {8, 1}, {12, 1}});
            out.formula_tag = "F4";
            break;
        case Family::E6: {
            const int e = eta_int(s.eta);
            out.order = lie_product(s, 36, {{2, 1}, {5, e}, {6, 1}, {8, 1}, {9, e}, {12, 1}});
            divide_center(gcd_ui(q - e, 3));
            out.formula_tag = e > 0 ? "E6" : "2E6";
            break;
        }
        case Family::E7:
            out.order = lie_product(s, 63, {{2, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1}, {14, 1}, {18, 1}});
            divide_center(gcd_ui(q - 1, 2));
            out.formula_tag = "E7";
            break;
        case Family::E8:
            out.order = lie_product(s, 120, {{2, 1}, {8, 1}, {12, 1}, {14, 1}, {18, 1}, {20, 1}, {24, 1}, {30, 1}});
            out.formula_tag = "E8";
            break;
        case Family::TriD4:
            // q^8+q^4+1 = (q^12-1)/(q^4-1)
            out.order = lie_product(s, 12, {{12, 1}, {6, 1}, {2, 1}});
            out.order /= factor_q_pow_minus(q, 4, 1);
            out.formula_tag = "3D4";
            break;
        case Family::TwoG2:
            out.order = lie_product(s, 3, {{3, -1}, {1, 1}});
            out.formula_tag = "2G2";
            break;
    }
    return out;
}

std::vector<BigInt> prime_spectrum(const GroupSpec& spec) { return order(spec).order.primes(); }

PrimeSet pi_in_group(const GroupSpec& spec, const PrimeSet& pi) { return pi.dividing(order(spec).order.value); }

// --------------------------------------------------------------- validation

namespace {

[[noreturn]] void invalid(const std::string& rule, const std::string& msg) { throw InvalidParameter(rule, msg); }
[[noreturn]] void nonsimple(const std::string& rule, const std::string& msg) { throw NonSimple(rule, msg); }

void require_field(const GroupSpec& s) {
    if (!is_prime(s.p)) invalid("q-prime-power", "characteristic " + std::to_string(s.p) + " is not prime");
    if (s.a < 1) invalid("q-prime-power", "field exponent must be at least 1");
}

void require_odd_q(const GroupSpec& s, const char* fam) {
    if (s.p == 2) invalid("q-odd", std::string(fam) + " groups are handled for odd q only");
}

}  // namespace

GroupSpec validate(const GroupSpec& in) {
    GroupSpec s = in;
    if (s.family != Family::Sporadic) s.sporadic_name.clear();
    if (!s.lie_type() && s.family != Family::Alt && s.family != Family::Sym && s.family != Family::Sporadic)
        invalid("q-prime-power", "Lie type group needs a field size");
    switch (s.family) {
        case Family::Sym:
            if (s.n < 2) invalid("sym-degree", "Sym(n) needs n >= 2");
            s.p = s.a = 0;
            s.eta = Eta::None;
            s.variant = Variant::General;
            return s;
        case Family::Alt:
            if (s.n < 1) invalid("alt-degree", "Alt(n) needs n >= 1");
            if (s.n < 5) nonsimple("alt-degree", "Alt(" + std::to_string(s.n) + ") is not simple");
            s.p = s.a = 0;
            s.eta = Eta::None;
            s.variant = Variant::Simple;
            return s;
        case Family::Sporadic: {
            auto c = canonical_sporadic(s.sporadic_name);
            if (!c) invalid("sporadic-name", "unknown sporadic group '" + s.sporadic_name + "'");
            s.sporadic_name = *c;
            s.n = s.p = s.a = 0;
            s.eta = Eta::None;
            s.variant = Variant::Simple;
            return s;
        }
        default:
            break;
    }
    require_field(s);
    const BigInt q = s.q();
    switch (s.family) {
        case Family::LinearUnitary: {
            if (s.n < 2) invalid("lu-dimension", "linear/unitary groups need n >= 2");
            if (s.eta != Eta::Plus && s.eta != Eta::Minus) invalid("lu-sign", "linear/unitary groups need sign + or -");
            if (s.variant == Variant::General && s.n != 2) invalid("gl-dimension", "general variant is for dimension 2 only");
            if (s.n == 2 && s.eta == Eta::Minus && s.variant != Variant::General) {
                s.aliases.push_back(GroupSpec(s).name() + " = " + [&] {
                    GroupSpec t = s;
                    t.eta = Eta::Plus;
                    return t.name();
                }());
                s.eta = Eta::Plus;
            }
            if (s.variant == Variant::Simple) {
                if (s.n == 2 && (q == 2 || q == 3))
                    nonsimple("lu-small", "PSL(2," + q.get_str() + ") is solvable");
                if (s.n == 3 && q == 2 && s.eta == Eta::Minus) nonsimple("lu-small", "PSU(3,2) is solvable");
            }
            return s;
        }
        case Family::Symplectic: {
            if (s.n < 2 || s.n % 2 != 0) invalid("sp-dimension", "symplectic dimension must be even and >= 2");
            require_odd_q(s, "symplectic");
            s.eta = Eta::None;
            if (s.variant == Variant::General) invalid("variant", "general variant is for GL2/GU2 only");
            if (s.n == 2) {
                GroupSpec t = s;
                t.family = Family::LinearUnitary;
                t.eta = Eta::Plus;
                t.aliases.push_back(s.name() + " = " + t.name());
                return validate(t);
            }
            return s;
        }
        case Family::Orthogonal: {
            if (s.n < 2) invalid("o-dimension", "orthogonal dimension must be >= 2");
            require_odd_q(s, "orthogonal");
            if (s.variant == Variant::General) invalid("variant", "general variant is for GL2/GU2 only");
            if (s.n % 2 == 1) {
                if (s.eta == Eta::None) s.eta = Eta::Circ;
                if (s.eta != Eta::Circ) invalid("o-sign-parity", "odd-dimensional orthogonal groups carry no sign");
            } else if (s.eta != Eta::Plus && s.eta != Eta::Minus) {
                invalid("o-sign-parity", "even-dimensional orthogonal groups need sign + or -");
            }
            if (s.variant == Variant::Isometry) {
                if (s.n == 2 && q - eta_int(s.eta) <= 2)
                    invalid("o-trivial", s.name() + " is trivial");
                return s;
            }
            // simple variant: normalize small dimensions
            GroupSpec t = s;
            if (s.n == 2 || (s.n == 4 && s.eta == Eta::Plus))
                nonsimple("o-small", s.name() + " is not simple");
            if (s.n == 3) {
                t.family = Family::LinearUnitary;
                t.n = 2;
                t.eta = Eta::Plus;
            } else if (s.n == 4) {
                t.family = Family::LinearUnitary;
                t.n = 2;
                t.a = 2 * s.a;
                t.eta = Eta::Plus;
            } else if (s.n == 5) {
                t.family = Family::Symplectic;
                t.n = 4;
                t.eta = Eta::None;
            } else if (s.n == 6) {
                t.family = Family::LinearUnitary;
                t.n = 4;
            } else {
                return s;
            }
            t.aliases.push_back(s.name() + " = " + t.name());
            return validate(t);
        }
        case Family::G2:
            if (q == 2) nonsimple("g2-small", "G2(2) is not simple");
            break;
        case Family::E6:
            if (s.eta != Eta::Plus && s.eta != Eta::Minus) invalid("e6-sign", "E6 needs sign + or -");
            break;
        case Family::TwoG2:
            if (s.p != 3 || s.a % 2 == 0) invalid("2g2-field", "2G2(q) needs q = 3^(2k+1)");
            if (s.a == 1) nonsimple("2g2-small", "2G2(3) is not simple");
            break;
        default:
            break;
    }
    if (s.family != Family::E6) s.eta = Eta::None;
    if (s.variant != Variant::Simple) invalid("variant", "exceptional groups are given by their simple variant");
    s.n = 0;
    return s;
}

// ------------------------------------------------------------------ parsing

namespace {

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r += c;
    return r;
}

unsigned long parse_uint(const std::string& t, const std::string& what) {
    if (t.empty() || t.size() > 9 || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a number for " + what + ", got '" + t + "'");
    return std::stoul(t);
}

void parse_q(const std::string& t, GroupSpec& s) {
    auto caret = t.find('^');
    if (caret != std::string::npos) {
        s.p = parse_uint(t.substr(0, caret), "q");
        s.a = parse_uint(t.substr(caret + 1), "q");
        if (!is_prime(s.p)) throw InvalidParameter("q-prime-power", "q base " + std::to_string(s.p) + " is not prime");
        return;
    }
    BigInt q = parse_uint(t, "q");
    BigInt p;
    unsigned long a = 0;
    if (!prime_power(q, p, a)) throw InvalidParameter("q-prime-power", "q = " + t + " is not a prime power");
    s.p = p.get_ui();
    s.a = a;
}

Eta parse_sign(const std::string& t) {
    if (t == "+" || t == "1" || t == "+1") return Eta::Plus;
    if (t == "-" || t == "-1") return Eta::Minus;
    throw ParseError("expected a sign, got '" + t + "'");
}

}  // namespace

GroupSpec parse_group(const std::string& raw) {
    const std::string text = strip(raw);
    GroupSpec s;
    auto open = text.find('(');
    if (open == std::string::npos) {
        if (auto c = canonical_sporadic(text)) {
            s.family = Family::Sporadic;
            s.sporadic_name = *c;
            return s;
        }
        throw ParseError("unrecognized group '" + raw + "'");
    }
    if (text.back() != ')') throw ParseError("missing ')' in '" + raw + "'");
    std::string head = text.substr(0, open);
    std::vector<std::string> args;
    {
        std::string body = text.substr(open + 1, text.size() - open - 2), cur;
        for (char c : body) {
            if (c == ',') {
                args.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        args.push_back(cur);
    }
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (args.size() < lo || args.size() > hi) throw ParseError("wrong number of arguments in '" + raw + "'");
    };

    if (head == "Alt" || head == "A" || head == "Sym" || head == "S") {
        want(1, 1);
        s.family = (head == "Alt" || head == "A") ? Family::Alt : Family::Sym;
        s.n = parse_uint(args[0], "degree");
        return s;
    }
    struct Classical {
        const char* head;
        Family family;
        Variant variant;
        Eta eta;  // None: read from optional third argument
    };
    static const Classical kClassical[] = {
        {"PSL", Family::LinearUnitary, Variant::Simple, Eta::None},
        {"SL", Family::LinearUnitary, Variant::Isometry, Eta::None},
        {"PSU", Family::LinearUnitary, Variant::Simple, Eta::Minus},
        {"SU", Family::LinearUnitary, Variant::Isometry, Eta::Minus},
        {"GL", Family::LinearUnitary, Variant::General, Eta::None},
        {"GU", Family::LinearUnitary, Variant::General, Eta::Minus},
        {"PSp", Family::Symplectic, Variant::Simple, Eta::Circ},
        {"Sp", Family::Symplectic, Variant::Isometry, Eta::Circ},
        {"O", Family::Orthogonal, Variant::Isometry, Eta::Circ},
        {"O+", Family::Orthogonal, Variant::Isometry, Eta::Plus},
        {"O-", Family::Orthogonal, Variant::Isometry, Eta::Minus},
        {"PO", Family::Orthogonal, Variant::Simple, Eta::Circ},
        {"PO+", Family::Orthogonal, Variant::Simple, Eta::Plus},
        {"PO-", Family::Orthogonal, Variant::Simple, Eta::Minus},
    };
    for (const auto& c : kClassical) {
        if (head != c.head) continue;
        s.family = c.family;
        s.variant = c.variant;
        const bool sign_arg = c.family == Family::LinearUnitary && c.eta == Eta::None;
        want(2, sign_arg ? 3 : 2);
        s.n = parse_uint(args[0], "dimension");
        parse_q(args[1], s);
        if (sign_arg)
            s.eta = args.size() == 3 ? parse_sign(args[2]) : Eta::Plus;
        else
            s.eta = c.eta == Eta::Circ ? Eta::None : c.eta;
        return s;
    }
    struct Exceptional {
        const char* head;
        Family family;
        Eta eta;
    };
    static const Exceptional kExceptional[] = {
        {"G2", Family::G2, Eta::None},     {"F4", Family::F4, Eta::None},
        {"E6", Family::E6, Eta::Plus},     {"E6+", Family::E6, Eta::Plus},
        {"E6-", Family::E6, Eta::Minus},   {"2E6", Family::E6, Eta::Minus},
        {"E7", Family::E7, Eta::None},     {"E8", Family::E8, Eta::None},
        {"3D4", Family::TriD4, Eta::None}, {"2G2", Family::TwoG2, Eta::None},
    };
    for (const auto& c : kExceptional) {
        if (head != c.head) continue;
        s.family = c.family;
        s.eta = c.eta;
        const bool sign_arg = std::string(c.head) == "E6";
        want(1, sign_arg ? 2 : 1);
        parse_q(args[0], s);
        if (args.size() == 2) s.eta = parse_sign(args[1]);
        return s;
    }
    throw ParseError("unrecognized group family '" + head + "'");
}

}  // namespace hall
