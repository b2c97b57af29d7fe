#include "hall/structure.hpp"

#include "hall/groups.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace hall {

namespace {

enum class Tok { Num, Ident, LParen, RParen, Comma, Times, Circ, Colon, Dot, Slash, Caret, Under, Plus, Minus, End };

struct Token {
    Tok kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto starts = [&](const char* lit) { return s.compare(i, std::char_traits<char>::length(lit), lit) == 0; };
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Tok::Num, s.substr(i, j - i)});
            i = j;
        } else if (std::isalpha(c)) {
            std::size_t j = i + 1;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '\'' ||
                                    (s[j] == '+' && j + 1 < s.size() && s[j + 1] == '(')))
                ++j;
            std::string word = s.substr(i, j - i);
            out.push_back({word == "x" ? Tok::Times : Tok::Ident, word});
            i = j;
        } else if (starts("\xC3\x97")) {  // ×
            out.push_back({Tok::Times, "x"});
            i += 2;
        } else if (starts("\xE2\x88\x98")) {  // ∘
            out.push_back({Tok::Circ, "o"});
            i += 3;
        } else {
            Tok k;
            switch (c) {
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                case ',': k = Tok::Comma; break;
                case ':': k = Tok::Colon; break;
                case '.': k = Tok::Dot; break;
                case '/': k = Tok::Slash; break;
                case '^': k = Tok::Caret; break;
                case '_': k = Tok::Under; break;
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Times; break;
                default: throw StructureError("unexpected character in structure '" + s + "'");
            }
            out.push_back({k, std::string(1, static_cast<char>(c))});
            ++i;
        }
    }
    out.push_back({Tok::End, ""});
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const PrimeSet& pi) : text_(text), toks_(tokenize(text)), pi_(pi) {}

    StructureValue run() {
        StructureValue v = expr();
        if (peek() != Tok::End) fail("trailing input");
        return v;
    }

private:
    const std::string& text_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    const PrimeSet& pi_;

    [[noreturn]] void fail(const std::string& why) const {
        throw StructureError(why + " in structure '" + text_ + "'");
    }
    Tok peek() const { return toks_[pos_].kind; }
    const Token& next() { return toks_[pos_++]; }
    void expect(Tok k, const char* what) {
        if (peek() != k) fail(std::string("expected ") + what);
        ++pos_;
    }
    bool peek_ident(const char* w) const { return peek() == Tok::Ident && toks_[pos_].text == w; }

    unsigned long integer() {
        if (peek() != Tok::Num) fail("expected a number");
        const std::string& t = next().text;
        if (t.size() > 18) fail("number too large");
        return std::stoul(t);
    }

    StructureValue expr() {
        StructureValue v = wr_expr();
        for (;;) {
            Tok op = peek();
            if (op != Tok::Times && op != Tok::Circ && op != Tok::Colon && op != Tok::Dot && op != Tok::Slash)
                return v;
            ++pos_;
            StructureValue r = wr_expr();
            switch (op) {
                case Tok::Times:
                    v.order *= r.order;
                    v.degree += r.degree;
                    break;
                case Tok::Circ:
                    v.order *= r.order;
                    if (!mpz_divisible_ui_p(v.order.get_mpz_t(), 2)) fail("central product of odd-order groups");
                    v.order /= 2;
                    v.degree = 0;
                    break;
                case Tok::Slash:
                    if (r.order == 0 || !mpz_divisible_p(v.order.get_mpz_t(), r.order.get_mpz_t()))
                        fail("index does not divide the order");
                    v.order /= r.order;
                    v.degree = 0;
                    break;
                default:
                    v.order *= r.order;
                    v.degree = 0;
                    break;
            }
        }
    }

    StructureValue wr_expr() {
        StructureValue v = pow_expr();
        while (peek_ident("wr")) {
            ++pos_;
            StructureValue top = pow_expr();
            if (top.degree == 0) fail("wreath top without a permutation degree");
            v.order = ipow(v.order, top.degree) * top.order;
            v.degree = v.degree * top.degree;
        }
        return v;
    }

    StructureValue pow_expr() {
        StructureValue v = primary();
        while (peek() == Tok::Caret) {
            ++pos_;
            unsigned long k = integer();
            v.order = ipow(v.order, k);
            v.degree *= k;
        }
        return v;
    }

    StructureValue primary() {
        if (peek() == Tok::Num) {
            unsigned long m = integer();
            if (peek() == Tok::Under) {  // ATLAS-style label, e.g. 2_2
                ++pos_;
                integer();
            }
            return {BigInt(m), m};
        }
        if (peek() == Tok::LParen) {
            ++pos_;
            StructureValue v = expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        if (peek() != Tok::Ident) fail("expected a group");
        std::string name = next().text;
        return named(name);
    }

    std::vector<std::string> raw_args() {
        std::vector<std::string> args;
        expect(Tok::LParen, "'('");
        std::string cur;
        while (peek() != Tok::RParen) {
            if (peek() == Tok::End) fail("unterminated argument list");
            if (peek() == Tok::Comma) {
                args.push_back(cur);
                cur.clear();
            } else {
                cur += toks_[pos_].text;
            }
            ++pos_;
        }
        ++pos_;
        args.push_back(cur);
        return args;
    }

    unsigned long single_int_arg() {
        expect(Tok::LParen, "'('");
        unsigned long v = integer();
        expect(Tok::RParen, "')'");
        return v;
    }

    static bool suffix_number(const std::string& name, const char* prefix, unsigned long& n) {
        std::string p(prefix);
        if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) return false;
        std::string rest = name.substr(p.size());
        for (char c : rest)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        n = std::stoul(rest);
        return true;
    }

    StructureValue named(const std::string& name) {
        unsigned long n = 0;
        if (name == "Hall") {
            expect(Tok::LParen, "'('");
            StructureValue v = expr();
            expect(Tok::RParen, "')'");
            v.order = pi_part(v.order, pi_);
            return v;
        }
        if (name == "Z") {
            n = single_int_arg();
            return {BigInt(n), n};
        }
        if (name == "D") {
            n = single_int_arg();
            if (n % 2) fail("dihedral order must be even");
            return {BigInt(n), n / 2};
        }
        if (name == "Sym" || name == "Alt") {
            n = single_int_arg();
            return sym_alt(name == "Alt", n);
        }
        if (suffix_number(name, "Sym", n)) return sym_alt(false, n);
        if (suffix_number(name, "Alt", n)) return sym_alt(true, n);
        if (name == "SL2") {
            unsigned long q = single_int_arg();
            BigInt bq(q);
            return {BigInt(bq * (bq * bq - 1)), q + 1};
        }
        if (name == "GL2") {
            auto args = raw_args();
            if (args.size() != 2 || (args[1] != "+" && args[1] != "-")) fail("GL2 needs (q,+) or (q,-)");
            BigInt q(args[0]);
            BigInt o = q * (q * q - 1) * (args[1] == "+" ? BigInt(q - 1) : BigInt(q + 1));
            return {o, 0};
        }
        if (name == "Q8") return {8, 8};
        if (name == "W") {
            auto args = raw_args();
            if (args.size() != 1) fail("W takes one Lie type");
            try {
                return {weyl_order(args[0]), 0};
            } catch (const std::exception&) {
                fail("unknown Weyl group");
            }
        }
        if (name == "M22") return {443520, 22};
        static const std::map<std::string, std::pair<unsigned long, unsigned long>> constants = {
            // name -> (argument, order)
            {"G2", {2, 12096}},
            {"Omega7", {2, 1451520}},
            {"Omega8+", {2, 174182400}},
            {"L3", {4, 20160}},
        };
        auto it = constants.find(name);
        if (it != constants.end()) {
            if (single_int_arg() != it->second.first) fail("only " + name + "(" + std::to_string(it->second.first) + ") is known");
            return {BigInt(it->second.second), 0};
        }
        fail("unknown group '" + name + "'");
    }

    StructureValue sym_alt(bool alt, unsigned long n) {
        if (n > 1000) fail("degree too large");
        BigInt o = factorial(n);
        if (alt && n >= 2) o /= 2;
        return {o, n};
    }
};

}  // namespace

StructureValue evaluate_structure(const std::string& text, const PrimeSet& pi) {
    return Parser(text, pi).run();
}

}  // namespace hall
