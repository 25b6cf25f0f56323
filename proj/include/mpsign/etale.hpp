#pragma once

// Etale algebras with involution and the class data (K, K-natural, x, c).
// Every factor K_i is a tower of at most two quadratic layers over the ground
// field: the fixed algebra K-natural is either the ground field itself
// (tier 1) or a quadratic extension E of it (tier 2, odd p only), and K_i is
// either split (K-natural x K-natural, involution = swap) or a quadratic
// extension K-natural(sqrt D) (involution = conjugation). Elements are pairs
// of exact rational coordinates through the layers.

#include <optional>
#include <string>
#include <vector>

#include "mpsign/linalg.hpp"
#include "mpsign/localfield.hpp"

namespace mpsign {

struct BaseElem {
    Rat a, b; // a + b sqrt(disc) in tier 2; b stays 0 in tier 1
    bool operator==(const BaseElem& o) const { return a == o.a && b == o.b; }
    bool operator!=(const BaseElem& o) const { return !(*this == o); }
};

// The fixed field K-natural of one factor, with exact element arithmetic.
class BaseField {
public:
    static BaseField ground(LocalField F);
    static BaseField extension(ExtField E);

    bool is_ext() const { return ext_.has_value(); }
    const LocalField& ground_field() const { return F_; }
    const ExtField& ext() const;
    int degree_over_F() const { return is_ext() ? 2 : 1; }

    bool operator==(const BaseField& o) const;
    bool operator!=(const BaseField& o) const { return !(*this == o); }

    BaseElem zero() const { return {Rat(0), Rat(0)}; }
    BaseElem one() const { return {Rat(1), Rat(0)}; }
    BaseElem from_rat(const Rat& r) const { return {r, Rat(0)}; }
    bool is_zero(const BaseElem& x) const { return x.a == 0 && x.b == 0; }

    BaseElem add(const BaseElem& x, const BaseElem& y) const { return {x.a + y.a, x.b + y.b}; }
    BaseElem sub(const BaseElem& x, const BaseElem& y) const { return {x.a - y.a, x.b - y.b}; }
    BaseElem neg(const BaseElem& x) const { return {-x.a, -x.b}; }
    BaseElem mul(const BaseElem& x, const BaseElem& y) const;
    BaseElem inv(const BaseElem& x) const;
    BaseElem conj(const BaseElem& x) const; // Galois over F, identity in tier 1

    Rat norm_to_ground(const BaseElem& x) const;
    Rat trace_to_ground(const BaseElem& x) const;

    bool is_square(const BaseElem& x) const;
    std::optional<BaseElem> sqrt(const BaseElem& x) const;

    // Quadratic Hilbert symbol of the base field.
    int hilbert(const BaseElem& x, const BaseElem& y) const;

    // Some r that is not a norm from base(sqrt D), i.e. (r, D) = -1.
    BaseElem nonnorm_for(const BaseElem& D) const;

    std::vector<BaseElem> basis_over_F() const; // {1} or {1, sqrt(disc)}
    std::vector<Rat> coords(const BaseElem& x) const;

private:
    BaseField(LocalField F, std::optional<ExtField> E) : F_(std::move(F)), ext_(std::move(E)) {}
    LocalField F_;
    std::optional<ExtField> ext_;
};

struct FactorElement {
    BaseElem u, v; // split: the pair (u, v); field: u + v sqrt(D)
    bool operator==(const FactorElement& o) const { return u == o.u && v == o.v; }
    bool operator!=(const FactorElement& o) const { return !(*this == o); }
};

// One factor (K_i, tau) of the etale algebra.
class InvolutiveFactor {
public:
    static InvolutiveFactor make_split(BaseField base);
    static InvolutiveFactor make_field(BaseField base, BaseElem D);

    bool is_split() const { return split_; }
    const BaseField& base() const { return base_; }
    const BaseElem& disc() const;
    int dim_over_F() const { return 2 * base_.degree_over_F(); }

    bool operator==(const InvolutiveFactor& o) const;
    bool operator!=(const InvolutiveFactor& o) const { return !(*this == o); }

    FactorElement zero() const { return {base_.zero(), base_.zero()}; }
    FactorElement one() const;
    FactorElement make(BaseElem u, BaseElem v) const { return {std::move(u), std::move(v)}; }
    FactorElement from_base(const BaseElem& e) const;
    FactorElement from_rat(const Rat& r) const { return from_base(base_.from_rat(r)); }
    bool is_zero(const FactorElement& x) const { return base_.is_zero(x.u) && base_.is_zero(x.v); }
    bool is_unit(const FactorElement& x) const;

    FactorElement add(const FactorElement& x, const FactorElement& y) const;
    FactorElement sub(const FactorElement& x, const FactorElement& y) const;
    FactorElement neg(const FactorElement& x) const;
    FactorElement mul(const FactorElement& x, const FactorElement& y) const;
    FactorElement inv(const FactorElement& x) const;
    FactorElement tau(const FactorElement& x) const;

    BaseElem norm_to_base(const FactorElement& x) const;
    BaseElem trace_to_base(const FactorElement& x) const;
    Rat norm_to_F(const FactorElement& x) const { return base_.norm_to_ground(norm_to_base(x)); }
    Rat trace_to_F(const FactorElement& x) const { return base_.trace_to_ground(trace_to_base(x)); }

    std::vector<FactorElement> basis_over_F() const;
    std::vector<Rat> coords(const FactorElement& x) const;

private:
    InvolutiveFactor(BaseField base, bool split, BaseElem D)
        : base_(std::move(base)), split_(split), D_(std::move(D)) {}
    BaseField base_;
    bool split_;
    BaseElem D_;
};

struct StableFactor {
    InvolutiveFactor algebra;
    FactorElement x;
};

struct ClassFactor {
    InvolutiveFactor algebra;
    FactorElement x;
    FactorElement c;
};

enum class CSign { Skew, Fixed }; // tau(c) = -c for Sp(2n), tau(c) = c for SO(2n+1)

class StableClassDatum {
public:
    StableClassDatum(LocalField F, std::vector<StableFactor> factors);
    const LocalField& field() const { return F_; }
    const std::vector<StableFactor>& factors() const { return factors_; }
    int dim() const; // dim_F K = 2n
    int n() const { return dim() / 2; }

private:
    LocalField F_;
    std::vector<StableFactor> factors_;
};

class SpClassDatum {
public:
    SpClassDatum(LocalField F, std::vector<ClassFactor> factors);
    const LocalField& field() const { return F_; }
    const std::vector<ClassFactor>& factors() const { return factors_; }
    int dim() const;
    int n() const { return dim() / 2; }
    StableClassDatum stable() const;

private:
    LocalField F_;
    std::vector<ClassFactor> factors_;
};

class SOClassDatum {
public:
    SOClassDatum(LocalField F, std::vector<ClassFactor> factors);
    const LocalField& field() const { return F_; }
    const std::vector<ClassFactor>& factors() const { return factors_; }
    int dim() const;
    int n() const { return dim() / 2; }
    StableClassDatum stable() const;

private:
    LocalField F_;
    std::vector<ClassFactor> factors_;
};

// Multiplication-by-x matrix of a factor element in the fixed F-basis.
Mat multiplication_matrix(const InvolutiveFactor& K, const FactorElement& x);

// Minimal polynomial of x over F.
Poly factor_min_poly(const InvolutiveFactor& K, const FactorElement& x);

// K = F[x]: each factor generated by its x and minimal polynomials pairwise
// coprime.
bool check_regular(const StableClassDatum& d);

// An omega with omega / tau(omega) = x; throws DegenerateWitness at x = -1.
FactorElement hilbert90_witness(const InvolutiveFactor& K, const FactorElement& x);

// Norms of a tuple of per-factor elements.
Rat norm_to_F(const std::vector<StableFactor>& factors, const std::vector<FactorElement>& elems);
std::vector<BaseElem> norm_to_knat(const std::vector<StableFactor>& factors,
                                   const std::vector<FactorElement>& elems);

bool equivalent(const SpClassDatum& a, const SpClassDatum& b);
bool equivalent(const SOClassDatum& a, const SOClassDatum& b);

// One representative per class of the scalar c over a fixed stable datum:
// a single class for split factors, two classes per field factor.
std::vector<std::vector<FactorElement>> enumerate_c_assignments(const StableClassDatum& s,
                                                                CSign sign);
std::vector<SpClassDatum> enumerate_sp_c_classes(const StableClassDatum& s);
std::vector<SOClassDatum> enumerate_so_c_classes(const StableClassDatum& s);

} // namespace mpsign
