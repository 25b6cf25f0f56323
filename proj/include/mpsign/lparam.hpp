#pragma once

// Formal bounded L-parameters for Mp(2n) built from a catalog of simple
// summands, their self-duality types, exact root numbers in mu_8, quadratic
// twisting, and the delta_c character on the component group.
//
// Root-number conventions: the standard additive character is taken of
// conductor zero (non-archimedean) resp. x -> e^{2 pi i x} over R, and all
// values follow the standard self-dual normalization at the center of the
// functional equation. Rescaling psi -> psi_c multiplies the root number of
// a summand by its determinant character evaluated at c, so everything in
// scope depends on psi only through the square class of the scale.

#include <string>
#include <vector>

#include "mpsign/localfield.hpp"

namespace mpsign {

struct AdditiveCharacter {
    LocalField field;
    SquareClass scale; // psi_a, consumed only through the class of a

    static AdditiveCharacter standard(const LocalField& F) {
        return AdditiveCharacter{F, SquareClass(F, Rat(1))};
    }
    AdditiveCharacter rescaled(const SquareClass& c) const {
        return AdditiveCharacter{field, scale * c};
    }
};

enum class SummandKind { CharSa, DiscreteSeriesR, UnitCharR, OpaquePair, OpaqueOrthogonal };
enum class SelfDualityType { Symplectic, Orthogonal, Pair };

class SimpleSummand {
public:
    // quadratic character chi_d tensored with the a-dimensional SL(2) factor
    static SimpleSummand char_sa(SquareClass d, int a);
    // the 2-dimensional induced summand over R, parameter k >= 1
    static SimpleSummand discrete_series_r(const LocalField& F, int k);
    // trivial (e = 0) or sign (e = 1) character over R
    static SimpleSummand unit_char_r(const LocalField& F, int e);
    // non-self-dual xi stored together with its dual; carries xi(-1)
    static SimpleSummand opaque_pair(const LocalField& F, std::string id, int dim,
                                     int value_at_minus_one);
    // orthogonal self-dual black box; carries det(-1), root number only in pairs
    static SimpleSummand opaque_orthogonal(const LocalField& F, std::string id, int dim,
                                           int det_at_minus_one);

    SummandKind kind() const { return kind_; }
    const LocalField& field() const { return field_; }
    int dim() const;
    bool is_opaque() const {
        return kind_ == SummandKind::OpaquePair || kind_ == SummandKind::OpaqueOrthogonal;
    }

    const SquareClass& d() const;      // CharSa
    int a() const;                     // CharSa
    int k() const;                     // DiscreteSeriesR
    int e() const;                     // UnitCharR
    const std::string& id() const;     // opaque kinds
    int value_at_minus_one() const;    // OpaquePair: xi(-1); OpaqueOrthogonal: det(-1)
    const SquareClass& twist_class() const; // accumulated quadratic twist on opaque kinds

    bool operator==(const SimpleSummand& o) const;
    bool operator!=(const SimpleSummand& o) const { return !(*this == o); }

private:
    SimpleSummand(SummandKind kind, LocalField F, SquareClass cls)
        : kind_(kind), field_(std::move(F)), class_(std::move(cls)) {}
    SummandKind kind_;
    LocalField field_;
    SquareClass class_; // CharSa: d; opaque kinds: accumulated twist; else trivial
    int a_ = 0;         // CharSa a, DiscreteSeriesR k, UnitCharR e, opaque dim
    std::string id_;
    int value_ = 1; // opaque value at -1

    friend SimpleSummand twist(const SimpleSummand&, const SquareClass&);
};

SelfDualityType classify(const SimpleSummand& s);

// Exact root number of a catalog summand; throws EpsilonUnavailable on
// opaque summands.
RootOfUnity8 epsilon(const SimpleSummand& s, const AdditiveCharacter& psi);

// Joint contribution of `count` copies of an opaque summand (pairs contribute
// xi and its dual together): value^count for pairs, det(-1)^(count/2) for
// orthogonal black boxes with even count.
RootOfUnity8 pair_epsilon(const SimpleSummand& s, int count);

// Determinant character at -1; defined for every summand kind.
int det_at_minus_one(const SimpleSummand& s);

// Quadratic twist by the class of c.
SimpleSummand twist(const SimpleSummand& s, const SquareClass& c);

// zeta_c(-1) = (c, -1)_F.
int zeta_at_minus_one(const LocalField& F, const SquareClass& c);

struct WeightedSummand {
    SimpleSummand summand;
    int multiplicity;
    bool operator==(const WeightedSummand& o) const {
        return summand == o.summand && multiplicity == o.multiplicity;
    }
};

class MpParameter {
public:
    MpParameter(LocalField field, std::vector<WeightedSummand> summands);

    const LocalField& field() const { return field_; }
    const std::vector<WeightedSummand>& summands() const { return summands_; }
    int total_dim() const; // pairs counted twice; equals 2n
    int n() const { return total_dim() / 2; }

    // indices of symplectic-type summands, in order
    std::vector<std::size_t> symplectic_indices() const;

    bool operator==(const MpParameter& o) const {
        return field_ == o.field_ && summands_ == o.summands_;
    }

private:
    LocalField field_;
    std::vector<WeightedSummand> summands_;
};

MpParameter twist_parameter(const MpParameter& phi, const SquareClass& c);

// The component group of a parameter: an elementary abelian 2-group with one
// mu_2 slot per symplectic-type summand.
class ComponentGroup {
public:
    explicit ComponentGroup(std::vector<std::size_t> basis) : basis_(std::move(basis)) {}
    static ComponentGroup of(const MpParameter& phi) {
        return ComponentGroup(phi.symplectic_indices());
    }

    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::size_t>& basis() const { return basis_; }
    std::size_t order() const { return std::size_t{1} << rank(); }

    // all sign vectors, in a fixed binary-counter order
    std::vector<std::vector<int>> all_sign_vectors() const;

    bool operator==(const ComponentGroup& o) const { return basis_ == o.basis_; }
    bool operator!=(const ComponentGroup& o) const { return !(*this == o); }

private:
    std::vector<std::size_t> basis_;
};

// Sign vectors over the component-group basis serve both as elements and as
// characters; the pairing below is the canonical one.
struct SignVector {
    std::vector<int> signs; // entries +1 / -1
    bool operator==(const SignVector& o) const { return signs == o.signs; }
    bool operator!=(const SignVector& o) const { return !(*this == o); }
};

using ComponentGroupElement = SignVector;
using GroupCharacter = SignVector;

int pair_eval(const GroupCharacter& chi, const ComponentGroupElement& x);
GroupCharacter character_product(const GroupCharacter& a, const GroupCharacter& b);
GroupCharacter trivial_character(const ComponentGroup& g);

// delta_c: component at each symplectic summand is
// zeta_c(-1)^{dim/2} * eps(phi_i, psi) / eps(phi_i zeta_c, psi).
GroupCharacter delta_c(const MpParameter& phi, const SquareClass& c,
                       const AdditiveCharacter& psi);

} // namespace mpsign
