#pragma once

// Exact arithmetic in Q(zeta_8), stored on the power basis 1, z, z^2, z^3
// with z^4 = -1. Hosts normalized Gauss sums over Q_2 and the coefficient
// ring of formal packet distributions.

#include <array>
#include <optional>
#include <string>

#include "mpsign/numeric.hpp"

namespace mpsign {

class Cyc8 {
public:
    Cyc8() : c_{Rat(0), Rat(0), Rat(0), Rat(0)} {}
    explicit Cyc8(const Rat& rational) : c_{rational, Rat(0), Rat(0), Rat(0)} {}
    Cyc8(Rat c0, Rat c1, Rat c2, Rat c3) : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cyc8 zeta_pow(int e) {
        e %= 8;
        if (e < 0) e += 8;
        Cyc8 r;
        if (e < 4)
            r.c_[e] = 1;
        else
            r.c_[e - 4] = -1;
        return r;
    }

    static Cyc8 sqrt2() { return zeta_pow(1) - zeta_pow(3); }
    static Cyc8 i() { return zeta_pow(2); }

    const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool operator==(const Cyc8& o) const { return c_ == o.c_; }
    bool operator!=(const Cyc8& o) const { return !(*this == o); }

    Cyc8 operator+(const Cyc8& o) const {
        Cyc8 r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] + o.c_[k];
        return r;
    }
    Cyc8 operator-(const Cyc8& o) const {
        Cyc8 r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] - o.c_[k];
        return r;
    }
    Cyc8 operator-() const {
        Cyc8 r;
        for (int k = 0; k < 4; ++k) r.c_[k] = -c_[k];
        return r;
    }
    Cyc8 operator*(const Cyc8& o) const {
        std::array<Rat, 7> full{};
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) full[a + b] += c_[a] * o.c_[b];
        Cyc8 r;
        for (int k = 0; k < 4; ++k) r.c_[k] = full[k];
        for (int k = 4; k < 7; ++k) r.c_[k - 4] -= full[k]; // z^4 = -1
        return r;
    }
    Cyc8 operator*(const Rat& s) const {
        Cyc8 r;
        for (int k = 0; k < 4; ++k) r.c_[k] = c_[k] * s;
        return r;
    }

    // Galois twist z -> z^k for odd k.
    Cyc8 galois(int k) const {
        Cyc8 r;
        for (int e = 0; e < 4; ++e) r = r + zeta_pow(e * k) * c_[e];
        return r;
    }

    // Complex conjugation z -> z^{-1}.
    Cyc8 conj() const { return galois(7); }

    // Field norm to Q: product over Gal(Q(zeta_8)/Q).
    Rat field_norm() const {
        Cyc8 prod = (*this) * galois(3) * galois(5) * galois(7);
        if (prod.c_[1] != 0 || prod.c_[2] != 0 || prod.c_[3] != 0)
            throw InvariantViolation("Cyc8::field_norm: norm not rational");
        return prod.c_[0];
    }

    Cyc8 inverse() const {
        Rat n = field_norm();
        if (n == 0) throw InvariantViolation("Cyc8::inverse: zero element");
        Cyc8 cof = galois(3) * galois(5) * galois(7);
        return cof * (Rat(1) / n);
    }

    // The exponent e with *this == zeta_8^e, when this is a root of unity.
    std::optional<int> as_zeta_power() const {
        for (int e = 0; e < 8; ++e)
            if (*this == zeta_pow(e)) return e;
        return std::nullopt;
    }

    std::string to_string() const {
        std::string out;
        static const char* names[4] = {"", "*z", "*z^2", "*z^3"};
        for (int k = 0; k < 4; ++k) {
            if (c_[k] == 0) continue;
            if (!out.empty()) out += " + ";
            out += rat_to_string(c_[k]) + names[k];
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<Rat, 4> c_;
};

inline Cyc8 operator*(const Rat& s, const Cyc8& x) { return x * s; }

} // namespace mpsign
