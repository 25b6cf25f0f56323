#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "mpsign/errors.hpp"

namespace mpsign {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw InvariantViolation("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InvariantViolation("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "num" or "num/den".
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("rat_from_string: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0) throw ParseError("rat_from_string: bad rational '" + s + "'");
    if (q.get_den() == 0) throw ParseError("rat_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Exponent of p in n (n != 0).
inline long int_valuation(const Int& p, const Int& n) {
    if (n == 0) throw InvariantViolation("int_valuation: zero argument");
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

// p-adic valuation of a nonzero rational.
inline long padic_valuation(const Int& p, const Rat& x) {
    if (x == 0) throw InvariantViolation("padic_valuation: zero argument");
    return int_valuation(p, x.get_num()) - int_valuation(p, x.get_den());
}

// x with all powers of p removed; a p-adic unit when x != 0.
inline Rat unit_part(const Int& p, const Rat& x) {
    if (x == 0) throw InvariantViolation("unit_part: zero argument");
    Int num, den;
    mpz_remove(num.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t());
    mpz_remove(den.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
    return make_rat(num, den);
}

// Value of a p-adic-unit rational in Z/m, m a power of p. Needs gcd(den, m) = 1.
inline Int unit_residue_mod(const Rat& x, const Int& m) {
    Int num = x.get_num() % m;
    if (num < 0) num += m;
    Int den = x.get_den() % m;
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
        throw InvariantViolation("unit_residue_mod: denominator not invertible");
    return (num * den_inv) % m;
}

// Legendre symbol (a/p) for odd prime p; a must be a p-adic unit.
inline int legendre(const Rat& a, const Int& p) {
    Int r = unit_residue_mod(a, p);
    if (r == 0) throw InvariantViolation("legendre: argument not a unit");
    return mpz_legendre(r.get_mpz_t(), p.get_mpz_t());
}

// base^e for integer e of either sign.
inline Rat rat_pow_int(const Rat& base, long e) {
    bool invert = e < 0;
    unsigned long k = static_cast<unsigned long>(invert ? -e : e);
    Rat acc(1), b = base;
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    if (invert) {
        if (acc == 0) throw InvariantViolation("rat_pow_int: zero base, negative exponent");
        return Rat(1) / acc;
    }
    return acc;
}

inline bool is_prime_trial_division(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Exact square test and square root over Q.
inline bool rat_is_square(const Rat& x) {
    if (x < 0) return false;
    if (x == 0) return true;
    return mpz_perfect_square_p(x.get_num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(x.get_den().get_mpz_t()) != 0;
}

inline std::optional<Rat> rat_sqrt(const Rat& x) {
    if (!rat_is_square(x)) return std::nullopt;
    Int num, den;
    mpz_sqrt(num.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), x.get_den().get_mpz_t());
    return make_rat(num, den);
}

} // namespace mpsign
