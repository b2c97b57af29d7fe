#include "hall/arith.hpp"

#include <algorithm>
#include <sstream>

namespace hall {

Sign sign_pow(Sign s, unsigned long n) {
    return (s == Sign::Minus && n % 2 == 1) ? Sign::Minus : Sign::Plus;
}

// ---------------------------------------------------------------- PrimeSet

PrimeSet::PrimeSet(std::initializer_list<unsigned long> ps)
    : PrimeSet(std::vector<unsigned long>(ps)) {}

PrimeSet::PrimeSet(std::vector<unsigned long> ps) : primes_(std::move(ps)) {
    for (auto p : primes_)
        if (!is_prime(p)) throw ArithError("not a prime: " + std::to_string(p));
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(const std::string& text) {
    std::vector<unsigned long> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        auto b = tok.find_first_not_of(" \t{}");
        auto e = tok.find_last_not_of(" \t{}");
        if (b == std::string::npos) throw ArithError("empty entry in prime list '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
            tok.size() > 18)
            throw ArithError("bad prime '" + tok + "'");
        out.push_back(std::stoul(tok));
    }
    if (out.empty()) throw ArithError("empty prime list");
    return PrimeSet(std::move(out));
}

bool PrimeSet::contains(unsigned long p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::contains(const BigInt& p) const {
    return p.fits_ulong_p() && contains(p.get_ui());
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
    return std::includes(other.primes_.begin(), other.primes_.end(), primes_.begin(), primes_.end());
}

PrimeSet PrimeSet::intersect(const PrimeSet& other) const {
    PrimeSet r;
    std::set_intersection(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                          std::back_inserter(r.primes_));
    return r;
}

PrimeSet PrimeSet::unite(const PrimeSet& other) const {
    PrimeSet r;
    std::set_union(primes_.begin(), primes_.end(), other.primes_.begin(), other.primes_.end(),
                   std::back_inserter(r.primes_));
    return r;
}

PrimeSet PrimeSet::dividing(const BigInt& n) const {
    PrimeSet r;
    for (auto p : primes_)
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) r.primes_.push_back(p);
    return r;
}

BigInt PrimeSet::product() const {
    BigInt r = 1;
    for (auto p : primes_) r *= p;
    return r;
}

std::string PrimeSet::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(primes_[i]);
    }
    return s;
}

// ------------------------------------------------------------- FactoredInt

FactoredInt& FactoredInt::operator*=(const FactoredInt& o) {
    value *= o.value;
    for (const auto& [p, e] : o.factors) factors[p] += e;
    return *this;
}

FactoredInt& FactoredInt::operator/=(const FactoredInt& o) {
    for (const auto& [p, e] : o.factors) {
        auto it = factors.find(p);
        if (it == factors.end() || it->second < e) throw ArithError("inexact division of factored integers");
        it->second -= e;
        if (it->second == 0) factors.erase(it);
    }
    value /= o.value;
    return *this;
}

FactoredInt operator*(FactoredInt a, const FactoredInt& b) { return a *= b; }

std::vector<BigInt> FactoredInt::primes() const {
    std::vector<BigInt> r;
    for (const auto& kv : factors) r.push_back(kv.first);
    return r;
}

unsigned FactoredInt::exponent(const BigInt& p) const {
    auto it = factors.find(p);
    return it == factors.end() ? 0 : it->second;
}

bool FactoredInt::consistent() const {
    BigInt v = 1;
    for (const auto& [p, e] : factors) {
        if (e == 0 || !is_prime(p)) return false;
        v *= ipow(p, e);
    }
    return v == value;
}

std::string FactoredInt::to_string() const {
    if (factors.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : factors) {
        if (!s.empty()) s += '*';
        s += p.get_str();
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// ------------------------------------------------------------ primality

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> table = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> ps;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            ps.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return ps;
    }();
    return table;
}

// Fixed witnesses: deterministic below 3.3e24, which covers 2^64.
const unsigned long kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n) {
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt x, nm1 = n - 1;
    for (unsigned long a : kWitnesses) {
        if (n == a) return true;
        BigInt base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    BigInt c = seed, y = 2, g = 1, q = 1, x, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const BigInt& v) -> BigInt { return (v * v + c) % n; };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                y = f(y);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(x - ys), n);
        } while (g == 1);
    }
    return g;
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = n;
    for (unsigned long seed = 1; d == n; ++seed) d = pollard_brent(n, seed);
    split(d, out);
    split(n / d, out);
}

}  // namespace

bool is_prime(unsigned long n) { return is_prime(BigInt(n)); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < kTrialLimit) {
        unsigned long v = n.get_ui();
        for (unsigned long p : small_primes()) {
            if (p * p > v) return true;
            if (v % p == 0) return v == p;
        }
        return true;
    }
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul})
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    return miller_rabin(n);
}

FactoredInt factorize(const BigInt& n) {
    if (n < 1) throw ArithError("factorize needs a positive integer");
    FactoredInt out;
    out.value = n;
    BigInt m = n;
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (mpz_cmp_ui(m.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++out.factors[BigInt(p)];
        }
    }
    split(m, out.factors);
    return out;
}

// ---------------------------------------------------------- basic helpers

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

unsigned long valuation(const BigInt& n, unsigned long r) {
    if (n == 0) throw ArithError("valuation of zero");
    BigInt m = abs(n);
    unsigned long v = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), r)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), r);
        ++v;
    }
    return v;
}

BigInt r_part(const BigInt& n, unsigned long r) { return ipow(BigInt(r), valuation(n, r)); }

BigInt pi_part(const BigInt& n, const PrimeSet& pi) {
    if (n < 1) throw ArithError("pi_part needs a positive integer");
    BigInt out = 1;
    for (auto r : pi) out *= r_part(n, r);
    return out;
}

bool is_pi_number(const BigInt& n, const PrimeSet& pi) { return pi_part(n, pi) == n; }

unsigned long mult_order(const BigInt& q, unsigned long r) {
    if (!is_prime(r)) throw ArithError("mult_order: modulus must be prime");
    if (mpz_divisible_ui_p(q.get_mpz_t(), r)) throw ArithError("mult_order: gcd(q,r) != 1");
    if (r == 2) return mpz_fdiv_ui(q.get_mpz_t(), 4) == 1 ? 1 : 2;
    unsigned long base = mpz_fdiv_ui(q.get_mpz_t(), r), x = base, m = 1;
    while (x != 1) {
        x = static_cast<unsigned long>((static_cast<unsigned __int128>(x) * base) % r);
        ++m;
    }
    return m;
}

unsigned long e_star(unsigned long e) {
    if (e == 0) throw ArithError("e_star: e must be positive");
    if (e % 2 == 1) return 2 * e;
    if (e % 4 == 0) return e;
    return e / 2;
}

namespace {

void check_coprime(const BigInt& q, unsigned long r) {
    if (q < 2) throw ArithError("q must be at least 2");
    if (!is_prime(r)) throw ArithError("r must be prime");
    if (mpz_divisible_ui_p(q.get_mpz_t(), r)) throw ArithError("gcd(q,r) != 1");
}

BigInt legendre_part(unsigned long n, unsigned long r) { return r_part(factorial(n), r); }

BigInt q_pow_minus_sign(const BigInt& q, unsigned long n, Sign eta) {
    return ipow(q, n) - to_int(sign_pow(eta, n));
}

}  // namespace

BigInt r_part_q_pow_minus_1(const BigInt& q, unsigned long n, unsigned long r) {
    check_coprime(q, r);
    if (n == 0) throw ArithError("n must be positive");
    unsigned long e = mult_order(q, r);
    if (n % e != 0) return r == 2 ? 2 : 1;
    return r_part(ipow(q, e) - 1, r) * r_part(BigInt(n / e), r);
}

namespace identities {

BigInt general_minus_eta(const BigInt& q, unsigned long n, unsigned long r, Sign eta) {
    if (eta == Sign::Plus) return r_part_q_pow_minus_1(q, n, r);
    check_coprime(q, r);
    unsigned long es = e_star(mult_order(q, r));
    if (n % es != 0) return r == 2 ? 2 : 1;
    return r_part(q_pow_minus_sign(q, es, Sign::Minus), r) * r_part(BigInt(n / es), r);
}

BigInt two_part_minus_eta(const BigInt& q, unsigned long n, Sign eta) {
    check_coprime(q, 2);
    BigInt t = 1;
    if (n % 2 == 0) t = r_part(q + to_int(eta), 2) * r_part(BigInt(n / 2), 2);
    return r_part(q - to_int(eta), 2) * t;
}

BigInt three_part_minus_eta(const BigInt& q, unsigned long n, Sign eta) {
    check_coprime(q, 3);
    if (mpz_divisible_ui_p(BigInt(q - to_int(eta)).get_mpz_t(), 3))
        return r_part(q - to_int(eta), 3) * r_part(BigInt(n), 3);
    if (n % 2 == 1) return 1;
    return r_part(q + to_int(eta), 3) * r_part(BigInt(n / 2), 3);
}

BigInt general_product(const BigInt& q, unsigned long n, unsigned long r, Sign eta) {
    check_coprime(q, r);
    if (r == 2) throw ArithError("general product identity is stated for odd r");
    unsigned long e = mult_order(q, r);
    if (eta == Sign::Minus) e = e_star(e);
    unsigned long k = n / e;
    BigInt base = r_part(q_pow_minus_sign(q, e, eta), r);
    return ipow(base, k) * legendre_part(k, r);
}

BigInt two_part_product(const BigInt& q, unsigned long n, Sign eta) {
    check_coprime(q, 2);
    return ipow(r_part(q - to_int(eta), 2), n) * ipow(r_part(q + to_int(eta), 2), n / 2) *
           legendre_part(n / 2, 2);
}

BigInt three_part_product(const BigInt& q, unsigned long n, Sign eta) {
    check_coprime(q, 3);
    if (mpz_divisible_ui_p(BigInt(q - to_int(eta)).get_mpz_t(), 3))
        return ipow(r_part(q - to_int(eta), 3), n) * legendre_part(n, 3);
    return ipow(r_part(q + to_int(eta), 3), n / 2) * legendre_part(n / 2, 3);
}

}  // namespace identities

BigInt r_part_q_pow_minus_eta(const BigInt& q, unsigned long n, unsigned long r, Sign eta) {
    if (n == 0) throw ArithError("n must be positive");
    if (r == 2) return identities::two_part_minus_eta(q, n, eta);
    if (r == 3) return identities::three_part_minus_eta(q, n, eta);
    return identities::general_minus_eta(q, n, r, eta);
}

BigInt r_part_product(const BigInt& q, unsigned long n, unsigned long r, Sign eta) {
    if (r == 2) return identities::two_part_product(q, n, eta);
    if (r == 3) return identities::three_part_product(q, n, eta);
    return identities::general_product(q, n, r, eta);
}

bool symmetric_dominates(const BigInt& q, unsigned long r, unsigned long m) {
    if (r == 2) throw ArithError("symmetric_dominates needs odd r");
    check_coprime(q, r);
    BigInt lhs = 1;
    for (unsigned long i = 1; i + 1 <= m; ++i) lhs *= r_part_q_pow_minus_1(q, 2 * i, r);
    return lhs > legendre_part(m, r);
}

Sign epsilon(const BigInt& q) {
    if (mpz_even_p(q.get_mpz_t())) throw ArithError("epsilon needs odd q");
    return mpz_fdiv_ui(q.get_mpz_t(), 4) == 1 ? Sign::Plus : Sign::Minus;
}

bool prime_power(const BigInt& q, BigInt& p, unsigned long& a) {
    if (q < 2) return false;
    for (unsigned long e = mpz_sizeinbase(q.get_mpz_t(), 2); e >= 1; --e) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), e) != 0 && is_prime(root)) {
            p = root;
            a = e;
            return true;
        }
    }
    return false;
}

}  // namespace hall
