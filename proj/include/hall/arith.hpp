#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

using BigInt = mpz_class;

class ArithError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Sign : int { Plus = 1, Minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::Plus : Sign::Minus; }
inline Sign operator-(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }
Sign sign_pow(Sign s, unsigned long n);

// Sorted set of distinct primes.
class PrimeSet {
public:
    PrimeSet() = default;
    PrimeSet(std::initializer_list<unsigned long> ps);
    explicit PrimeSet(std::vector<unsigned long> ps);

    // "2,3,5"; whitespace tolerated, throws ArithError on junk or composites
    static PrimeSet parse(const std::string& text);

    bool contains(unsigned long p) const;
    bool contains(const BigInt& p) const;
    bool empty() const { return primes_.empty(); }
    std::size_t size() const { return primes_.size(); }
    const std::vector<unsigned long>& primes() const { return primes_; }
    auto begin() const { return primes_.begin(); }
    auto end() const { return primes_.end(); }

    bool subset_of(const PrimeSet& other) const;
    PrimeSet intersect(const PrimeSet& other) const;
    PrimeSet unite(const PrimeSet& other) const;
    // Members of this set dividing n.
    PrimeSet dividing(const BigInt& n) const;
    // Product of members, handy for coprimality checks.
    BigInt product() const;

    std::string to_string() const;

    friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
    friend bool operator<(const PrimeSet& a, const PrimeSet& b) { return a.primes_ < b.primes_; }

private:
    std::vector<unsigned long> primes_;
};

struct FactoredInt {
    BigInt value = 1;
    std::map<BigInt, unsigned> factors;

    FactoredInt() = default;
    FactoredInt(const BigInt& v, std::map<BigInt, unsigned> f) : value(v), factors(std::move(f)) {}

    FactoredInt& operator*=(const FactoredInt& o);
    // Exact division; throws if o does not divide this.
    FactoredInt& operator/=(const FactoredInt& o);
    std::vector<BigInt> primes() const;
    unsigned exponent(const BigInt& p) const;
    bool consistent() const;
    std::string to_string() const;  // "2^3*3*7"
};

FactoredInt operator*(FactoredInt a, const FactoredInt& b);

bool is_prime(const BigInt& n);
bool is_prime(unsigned long n);
FactoredInt factorize(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned long e);
BigInt factorial(unsigned long n);

BigInt pi_part(const BigInt& n, const PrimeSet& pi);
BigInt r_part(const BigInt& n, unsigned long r);
// Exponent of r in n (n > 0).
unsigned long valuation(const BigInt& n, unsigned long r);
// True iff every prime factor of n lies in pi.
bool is_pi_number(const BigInt& n, const PrimeSet& pi);

unsigned long mult_order(const BigInt& q, unsigned long r);
unsigned long e_star(unsigned long e);

// (q^n - 1)_r
BigInt r_part_q_pow_minus_1(const BigInt& q, unsigned long n, unsigned long r);
// (q^n - eta^n)_r. Uses the dedicated 2-part/3-part identities for r in {2,3}.
BigInt r_part_q_pow_minus_eta(const BigInt& q, unsigned long n, unsigned long r, Sign eta);
// r-part of prod_{i=1..n} (q^i - eta^i)
BigInt r_part_product(const BigInt& q, unsigned long n, unsigned long r, Sign eta);

// The individual identities, exposed so they can be checked against each other.
namespace identities {
BigInt general_minus_eta(const BigInt& q, unsigned long n, unsigned long r, Sign eta);
BigInt two_part_minus_eta(const BigInt& q, unsigned long n, Sign eta);
BigInt three_part_minus_eta(const BigInt& q, unsigned long n, Sign eta);
BigInt general_product(const BigInt& q, unsigned long n, unsigned long r, Sign eta);  // odd r
BigInt two_part_product(const BigInt& q, unsigned long n, Sign eta);
BigInt three_part_product(const BigInt& q, unsigned long n, Sign eta);
}  // namespace identities

// ((q^2-1)(q^4-1)...(q^{2(m-1)}-1))_r > (m!)_r
bool symmetric_dominates(const BigInt& q, unsigned long r, unsigned long m);

Sign epsilon(const BigInt& q);

// q = p^a with p prime; returns false otherwise.
bool prime_power(const BigInt& q, BigInt& p, unsigned long& a);

}  // namespace hall
