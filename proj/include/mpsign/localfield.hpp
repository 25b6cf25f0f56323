#pragma once

// Exact arithmetic of square classes, quadratic Hilbert symbols, and
// quadratic extensions over R, C, Q_p, and (for odd p) quadratic extensions
// E of Q_p. Elements of a local field are always represented by exact
// rationals; the functionals needed here (valuation, residue, square class)
// are exact on rationals, so no truncated p-adic expansions ever appear.

#include <string>
#include <vector>

#include "mpsign/cyclotomic8.hpp"
#include "mpsign/errors.hpp"
#include "mpsign/numeric.hpp"

namespace mpsign {

enum class FieldKind { Real, Complex, Padic };

class LocalField {
public:
    static LocalField real() { return LocalField(FieldKind::Real, 0); }
    static LocalField complex() { return LocalField(FieldKind::Complex, 0); }
    static LocalField padic(const Int& p);

    FieldKind kind() const { return kind_; }
    bool is_real() const { return kind_ == FieldKind::Real; }
    bool is_complex() const { return kind_ == FieldKind::Complex; }
    bool is_padic() const { return kind_ == FieldKind::Padic; }
    bool is_padic_odd() const { return is_padic() && p_ != 2; }

    const Int& prime() const;

    // Least positive quadratic non-residue mod p (odd p only).
    const Int& least_nonresidue() const;

    // Canonical representatives of F^x / F^{x2}, in a fixed order.
    std::vector<Rat> square_class_reps() const;

    bool operator==(const LocalField& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const LocalField& o) const { return !(*this == o); }

    std::string descriptor() const; // "R", "C", "Qp:5"
    static LocalField from_descriptor(const std::string& s);

private:
    LocalField(FieldKind k, Int p) : kind_(k), p_(std::move(p)) {}
    FieldKind kind_;
    Int p_;
    Int u_ = 0; // cached least non-residue, odd p
};

// A coset x F^{x2}, stored by its canonical representative.
class SquareClass {
public:
    SquareClass(LocalField field, Rat canonical_rep)
        : field_(std::move(field)), rep_(std::move(canonical_rep)) {}

    const LocalField& field() const { return field_; }
    const Rat& rep() const { return rep_; }
    bool is_trivial() const { return rep_ == 1; }

    bool operator==(const SquareClass& o) const { return field_ == o.field_ && rep_ == o.rep_; }
    bool operator!=(const SquareClass& o) const { return !(*this == o); }

private:
    LocalField field_;
    Rat rep_;
};

// Reduces a nonzero rational to its canonical square-class representative.
SquareClass square_class(const LocalField& F, const Rat& x);

// Closed product of classes (stays on the canonical list).
SquareClass operator*(const SquareClass& a, const SquareClass& b);

// Quadratic Hilbert symbol, by the closed tame/wild formulas.
int hilbert_symbol(const LocalField& F, const SquareClass& a, const SquareClass& b);
int hilbert_symbol(const LocalField& F, const Rat& a, const Rat& b);

// Independent brute-force Hilbert symbol: decides whether z^2 = a x^2 + b y^2
// has a primitive solution mod p^depth by digitwise search (with the
// multivariate Hensel stopping rule at smooth nodes for odd p). The answer is
// invariant under scaling a, b by squares, so even powers of p are stripped
// from the inputs before the search.
int hilbert_symbol_oracle(const LocalField& F, const Rat& a, const Rat& b, long depth);

// The sufficient search depth v_p(4ab) + 3 for the oracle.
long default_oracle_depth(const LocalField& F, const Rat& a, const Rat& b);

// Descriptor of a quadratic etale extension of F: split (F x F) or F(sqrt d).
struct QuadExt {
    bool split;
    SquareClass disc; // meaningful iff !split; must be nontrivial

    static QuadExt make_split(const LocalField& F) {
        return QuadExt{true, SquareClass(F, Rat(1))};
    }
    static QuadExt field(SquareClass d);
};

// True iff x is a norm from the extension described by E.
bool is_norm(const LocalField& F, const QuadExt& E, const SquareClass& x);

// Quadratic character attached to E|F: trivial on split extensions,
// otherwise x -> (x, disc)_F.
int sgn_char(const LocalField& F, const QuadExt& E, const SquareClass& x);

// ---- quadratic extension fields E = F(sqrt disc), odd residue char only ----

struct ExtElement {
    Rat a, b; // a + b sqrt(disc)
    bool operator==(const ExtElement& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ExtElement& o) const { return !(*this == o); }
};

struct ExtSquareClass {
    bool odd_valuation;
    bool nonsquare_unit;
    bool is_trivial() const { return !odd_valuation && !nonsquare_unit; }
    bool operator==(const ExtSquareClass& o) const {
        return odd_valuation == o.odd_valuation && nonsquare_unit == o.nonsquare_unit;
    }
    bool operator!=(const ExtSquareClass& o) const { return !(*this == o); }
};

class ExtField {
public:
    // base must be Q_p with p odd; disc a nontrivial square class of base.
    ExtField(LocalField base, SquareClass disc);

    const LocalField& base() const { return base_; }
    const SquareClass& disc() const { return disc_; }
    bool ramified() const { return ramified_; }
    const Int& residue_size() const { return q_; } // p^2 iff unramified
    const Int& prime() const { return base_.prime(); }

    bool operator==(const ExtField& o) const { return base_ == o.base_ && disc_ == o.disc_; }
    bool operator!=(const ExtField& o) const { return !(*this == o); }

    std::string descriptor() const; // "Ext:Qp:3:disc=u"
    static ExtField from_descriptor(const std::string& s);

    // exact element arithmetic
    ExtElement zero() const { return {Rat(0), Rat(0)}; }
    ExtElement one() const { return {Rat(1), Rat(0)}; }
    ExtElement from_rat(const Rat& r) const { return {r, Rat(0)}; }
    bool is_zero(const ExtElement& x) const { return x.a == 0 && x.b == 0; }
    ExtElement add(const ExtElement& x, const ExtElement& y) const { return {x.a + y.a, x.b + y.b}; }
    ExtElement sub(const ExtElement& x, const ExtElement& y) const { return {x.a - y.a, x.b - y.b}; }
    ExtElement neg(const ExtElement& x) const { return {-x.a, -x.b}; }
    ExtElement mul(const ExtElement& x, const ExtElement& y) const;
    ExtElement conj(const ExtElement& x) const { return {x.a, -x.b}; } // Galois over base
    ExtElement inv(const ExtElement& x) const;
    Rat norm(const ExtElement& x) const { return x.a * x.a - disc_.rep() * x.b * x.b; }
    Rat trace(const ExtElement& x) const { return 2 * x.a; }

    // Normalized valuation: v_E(uniformizer) = 1, so v_E restricted to the
    // base is v_p (unramified) or 2 v_p (ramified).
    long valuation(const ExtElement& x) const;

    ExtElement uniformizer() const;

    // Whether the unit part of x has square residue in the residue field.
    bool unit_residue_is_square(const ExtElement& x) const;

    // A unit with non-square residue, found by a small deterministic search.
    ExtElement nonsquare_unit() const;

private:
    LocalField base_;
    SquareClass disc_;
    bool ramified_;
    Int q_;
};

// Class of y in E^x / E^{x2}, determined by (v_E(y) mod 2, residue test).
ExtSquareClass ext_square_class(const ExtField& E, const ExtElement& y);

// Tame quadratic Hilbert symbol over E.
int ext_hilbert_symbol(const ExtField& E, const ExtElement& y1, const ExtElement& y2);

// ---- exact eighth roots of unity ------------------------------------------

class RootOfUnity8 {
public:
    RootOfUnity8() : e_(0) {}
    explicit RootOfUnity8(int exponent) : e_(((exponent % 8) + 8) % 8) {}

    static RootOfUnity8 one() { return RootOfUnity8(0); }
    static RootOfUnity8 minus_one() { return RootOfUnity8(4); }
    static RootOfUnity8 i() { return RootOfUnity8(2); }
    static RootOfUnity8 from_sign(int s);

    int exponent() const { return e_; }
    bool is_sign() const { return e_ == 0 || e_ == 4; }
    int as_sign() const; // +1 / -1, throws if not real

    RootOfUnity8 operator*(const RootOfUnity8& o) const { return RootOfUnity8(e_ + o.e_); }
    RootOfUnity8 operator/(const RootOfUnity8& o) const { return RootOfUnity8(e_ - o.e_); }
    RootOfUnity8 pow(long k) const { return RootOfUnity8(static_cast<int>((e_ * (k % 8)) % 8)); }
    bool operator==(const RootOfUnity8& o) const { return e_ == o.e_; }
    bool operator!=(const RootOfUnity8& o) const { return e_ != o.e_; }

    Cyc8 to_cyc8() const { return Cyc8::zeta_pow(e_); }
    std::string to_string() const; // "1", "-1", "i", "-i", "zeta8", ...
    static RootOfUnity8 from_string(const std::string& s);

private:
    int e_;
};

} // namespace mpsign
