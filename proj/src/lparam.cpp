#include "mpsign/lparam.hpp"

#include <algorithm>

namespace mpsign {

// ---- summands ---------------------------------------------------------------

SimpleSummand SimpleSummand::char_sa(SquareClass d, int a) {
    if (a < 1) throw InvariantViolation("char_sa: a must be positive");
    LocalField F = d.field();
    if (!F.is_padic()) throw InvariantViolation("char_sa: non-archimedean summand only");
    SimpleSummand s(SummandKind::CharSa, F, std::move(d));
    s.a_ = a;
    return s;
}

SimpleSummand SimpleSummand::discrete_series_r(const LocalField& F, int k) {
    if (!F.is_real()) throw InvariantViolation("discrete_series_r: field must be R");
    if (k < 1) throw InvariantViolation("discrete_series_r: k must be positive");
    SimpleSummand s(SummandKind::DiscreteSeriesR, F, SquareClass(F, Rat(1)));
    s.a_ = k;
    return s;
}

SimpleSummand SimpleSummand::unit_char_r(const LocalField& F, int e) {
    if (!F.is_real()) throw InvariantViolation("unit_char_r: field must be R");
    if (e != 0 && e != 1) throw InvariantViolation("unit_char_r: e must be 0 or 1");
    SimpleSummand s(SummandKind::UnitCharR, F, SquareClass(F, Rat(1)));
    s.a_ = e;
    return s;
}

SimpleSummand SimpleSummand::opaque_pair(const LocalField& F, std::string id, int dim,
                                         int value_at_minus_one) {
    if (dim < 1) throw InvariantViolation("opaque_pair: dim must be positive");
    if (value_at_minus_one != 1 && value_at_minus_one != -1)
        throw InvariantViolation("opaque_pair: value at -1 must be a sign");
    SimpleSummand s(SummandKind::OpaquePair, F, SquareClass(F, Rat(1)));
    s.a_ = dim;
    s.id_ = std::move(id);
    s.value_ = value_at_minus_one;
    return s;
}

SimpleSummand SimpleSummand::opaque_orthogonal(const LocalField& F, std::string id, int dim,
                                               int det_at_minus_one) {
    if (dim < 1) throw InvariantViolation("opaque_orthogonal: dim must be positive");
    if (det_at_minus_one != 1 && det_at_minus_one != -1)
        throw InvariantViolation("opaque_orthogonal: det at -1 must be a sign");
    SimpleSummand s(SummandKind::OpaqueOrthogonal, F, SquareClass(F, Rat(1)));
    s.a_ = dim;
    s.id_ = std::move(id);
    s.value_ = det_at_minus_one;
    return s;
}

int SimpleSummand::dim() const {
    switch (kind_) {
    case SummandKind::CharSa: return a_;
    case SummandKind::DiscreteSeriesR: return 2;
    case SummandKind::UnitCharR: return 1;
    case SummandKind::OpaquePair:
    case SummandKind::OpaqueOrthogonal: return a_;
    }
    throw InvariantViolation("SimpleSummand::dim: bad kind");
}

const SquareClass& SimpleSummand::d() const {
    if (kind_ != SummandKind::CharSa) throw InvariantViolation("d(): not a CharSa summand");
    return class_;
}

int SimpleSummand::a() const {
    if (kind_ != SummandKind::CharSa) throw InvariantViolation("a(): not a CharSa summand");
    return a_;
}

int SimpleSummand::k() const {
    if (kind_ != SummandKind::DiscreteSeriesR)
        throw InvariantViolation("k(): not a discrete-series summand");
    return a_;
}

int SimpleSummand::e() const {
    if (kind_ != SummandKind::UnitCharR) throw InvariantViolation("e(): not a unit character");
    return a_;
}

const std::string& SimpleSummand::id() const {
    if (!is_opaque()) throw InvariantViolation("id(): not an opaque summand");
    return id_;
}

int SimpleSummand::value_at_minus_one() const {
    if (!is_opaque()) throw InvariantViolation("value_at_minus_one(): not an opaque summand");
    return value_;
}

const SquareClass& SimpleSummand::twist_class() const {
    if (!is_opaque()) throw InvariantViolation("twist_class(): not an opaque summand");
    return class_;
}

bool SimpleSummand::operator==(const SimpleSummand& o) const {
    return kind_ == o.kind_ && field_ == o.field_ && class_ == o.class_ && a_ == o.a_ &&
           id_ == o.id_ && value_ == o.value_;
}

SelfDualityType classify(const SimpleSummand& s) {
    switch (s.kind()) {
    case SummandKind::CharSa:
        return s.a() % 2 == 0 ? SelfDualityType::Symplectic : SelfDualityType::Orthogonal;
    case SummandKind::DiscreteSeriesR:
        return s.k() % 2 == 1 ? SelfDualityType::Symplectic : SelfDualityType::Orthogonal;
    case SummandKind::UnitCharR: return SelfDualityType::Orthogonal;
    case SummandKind::OpaquePair: return SelfDualityType::Pair;
    case SummandKind::OpaqueOrthogonal: return SelfDualityType::Orthogonal;
    }
    throw InvariantViolation("classify: bad kind");
}

// ---- root numbers -----------------------------------------------------------

namespace {

// chi_d(x) = (x, d)_F on square classes.
int chi_value(const LocalField& F, const SquareClass& d, const SquareClass& x) {
    return hilbert_symbol(F, x, d);
}

bool chi_unramified(const LocalField& F, const SquareClass& d) {
    const Int& p = F.prime();
    if (p == 2) return d.rep() == 1 || d.rep() == 5;
    return padic_valuation(p, d.rep()) % 2 == 0;
}

// Conductor exponent of a ramified quadratic character of Q_2.
int q2_conductor_exponent(const SquareClass& d) {
    Rat w = unit_part(Int(2), d.rep());
    long v = padic_valuation(Int(2), d.rep());
    if (v % 2 != 0) return 3;       // classes of 2, -2, 10, -10
    return (w == -1 || w == -5) ? 2 // classes of -1, -5
                                : 0;
}

// Root number of a ramified quadratic character of Q_2, by the exact
// normalized Gauss sum in Z[zeta_8].
RootOfUnity8 q2_char_epsilon(const LocalField& F, const SquareClass& d) {
    int a = q2_conductor_exponent(d);
    long modulus = 1L << a;
    int zeta_step = 8 / static_cast<int>(modulus); // zeta_{2^a} = zeta_8^step
    Cyc8 tau;
    for (long x = 1; x < modulus; x += 2) {
        int chi = chi_value(F, d, square_class(F, Rat(x)));
        Cyc8 term = Cyc8::zeta_pow(static_cast<int>(x) * zeta_step);
        tau = (chi == 1) ? tau + term : tau - term;
    }
    Cyc8 eps;
    if (a == 2)
        eps = tau * Rat(1, 2); // normalize by sqrt(4)
    else
        eps = tau * Cyc8::sqrt2() * Rat(1, 4); // 1/(2 sqrt 2) = sqrt2/4
    int chi2 = chi_value(F, d, square_class(F, Rat(2)));
    if (((a % 2) == 1) && chi2 == -1) eps = -eps;
    auto pw = eps.as_zeta_power();
    if (!pw)
        throw InvariantViolation("q2_char_epsilon: Gauss sum did not normalize to mu_8");
    return RootOfUnity8(*pw);
}

// Root number of a ramified quadratic character of Q_p, odd p, standard
// additive character: chi(p) times the normalized tame Gauss sum, which is 1
// for p = 1 mod 4 and i for p = 3 mod 4.
RootOfUnity8 odd_char_epsilon(const LocalField& F, const SquareClass& d) {
    const Int& p = F.prime();
    int chip = chi_value(F, d, square_class(F, Rat(p)));
    RootOfUnity8 gauss = (p % 4 == 1) ? RootOfUnity8::one() : RootOfUnity8::i();
    return RootOfUnity8::from_sign(chip) * gauss;
}

RootOfUnity8 epsilon_char_sa(const SimpleSummand& s, const AdditiveCharacter& psi) {
    const LocalField& F = s.field();
    const SquareClass& d = s.d();
    int a = s.a();
    RootOfUnity8 value;
    if (chi_unramified(F, d)) {
        int chip = chi_value(F, d, square_class(F, Rat(F.prime())));
        value = RootOfUnity8::from_sign(-chip).pow(a - 1);
    } else {
        RootOfUnity8 eps_chi =
            (F.prime() == 2) ? q2_char_epsilon(F, d) : odd_char_epsilon(F, d);
        value = eps_chi.pow(a);
    }
    // psi_c multiplies by the determinant chi_d^a at c
    if (a % 2 == 1) value = value * RootOfUnity8::from_sign(chi_value(F, d, psi.scale));
    return value;
}

} // namespace

RootOfUnity8 epsilon(const SimpleSummand& s, const AdditiveCharacter& psi) {
    if (!(psi.field == s.field()))
        throw InvariantViolation("epsilon: additive character over wrong field");
    switch (s.kind()) {
    case SummandKind::CharSa: return epsilon_char_sa(s, psi);
    case SummandKind::DiscreteSeriesR: {
        int k = s.k();
        RootOfUnity8 value(2 * (k + 1)); // i^{k+1}
        if ((k + 1) % 2 == 1) {
            int sgn_scale = hilbert_symbol(s.field(), psi.scale,
                                           square_class(s.field(), Rat(-1)));
            value = value * RootOfUnity8::from_sign(sgn_scale);
        }
        return value;
    }
    case SummandKind::UnitCharR: {
        if (s.e() == 0) return RootOfUnity8::one();
        int sgn_scale =
            hilbert_symbol(s.field(), psi.scale, square_class(s.field(), Rat(-1)));
        return RootOfUnity8(6) * RootOfUnity8::from_sign(sgn_scale); // -i times sgn(scale)
    }
    case SummandKind::OpaquePair:
    case SummandKind::OpaqueOrthogonal:
        throw EpsilonUnavailable("epsilon: opaque summand '" + s.id() +
                                 "' carries no individual root number");
    }
    throw InvariantViolation("epsilon: bad kind");
}

RootOfUnity8 pair_epsilon(const SimpleSummand& s, int count) {
    if (count < 0) throw InvariantViolation("pair_epsilon: negative count");
    switch (s.kind()) {
    case SummandKind::OpaquePair:
        return RootOfUnity8::from_sign(s.value_at_minus_one()).pow(count);
    case SummandKind::OpaqueOrthogonal:
        if (count % 2 != 0)
            throw InvariantViolation("pair_epsilon: odd count for an orthogonal black box");
        return RootOfUnity8::from_sign(s.value_at_minus_one()).pow(count / 2);
    default:
        throw InvariantViolation("pair_epsilon: catalog summand, use epsilon()");
    }
}

int det_at_minus_one(const SimpleSummand& s) {
    switch (s.kind()) {
    case SummandKind::CharSa:
        return s.a() % 2 == 0
                   ? 1
                   : chi_value(s.field(), s.d(), square_class(s.field(), Rat(-1)));
    case SummandKind::DiscreteSeriesR: return (s.k() + 1) % 2 == 0 ? 1 : -1;
    case SummandKind::UnitCharR: return s.e() == 0 ? 1 : -1;
    case SummandKind::OpaquePair:
    case SummandKind::OpaqueOrthogonal: return s.value_at_minus_one();
    }
    throw InvariantViolation("det_at_minus_one: bad kind");
}

int zeta_at_minus_one(const LocalField& F, const SquareClass& c) {
    if (F.is_complex()) return 1;
    return hilbert_symbol(F, c, square_class(F, Rat(-1)));
}

SimpleSummand twist(const SimpleSummand& s, const SquareClass& c) {
    if (!(c.field() == s.field()))
        throw InvariantViolation("twist: class over wrong field");
    if (c.is_trivial()) return s;
    switch (s.kind()) {
    case SummandKind::CharSa: return SimpleSummand::char_sa(s.d() * c, s.a());
    case SummandKind::DiscreteSeriesR: return s; // induced summands absorb quadratic twists
    case SummandKind::UnitCharR: return SimpleSummand::unit_char_r(s.field(), 1 - s.e());
    case SummandKind::OpaquePair:
    case SummandKind::OpaqueOrthogonal: {
        SimpleSummand t = s;
        t.class_ = s.class_ * c;
        if (s.dim() % 2 == 1) t.value_ *= zeta_at_minus_one(s.field(), c);
        return t;
    }
    }
    throw InvariantViolation("twist: bad kind");
}

// ---- parameters ---------------------------------------------------------------

MpParameter::MpParameter(LocalField field, std::vector<WeightedSummand> summands)
    : field_(std::move(field)), summands_(std::move(summands)) {
    for (std::size_t i = 0; i < summands_.size(); ++i) {
        const auto& ws = summands_[i];
        if (!(ws.summand.field() == field_))
            throw InvariantViolation("MpParameter: summand over wrong field");
        if (ws.multiplicity < 1) throw InvariantViolation("MpParameter: multiplicity < 1");
        if (classify(ws.summand) == SelfDualityType::Orthogonal && ws.multiplicity % 2 != 0)
            throw InvariantViolation("MpParameter: orthogonal summand needs even multiplicity");
        for (std::size_t j = i + 1; j < summands_.size(); ++j)
            if (ws.summand == summands_[j].summand)
                throw InvariantViolation("MpParameter: summands must be pairwise distinct");
    }
    if (total_dim() % 2 != 0)
        throw InvariantViolation("MpParameter: total dimension must be even");
}

int MpParameter::total_dim() const {
    int d = 0;
    for (const auto& ws : summands_) {
        int one = ws.summand.dim() * ws.multiplicity;
        d += (ws.summand.kind() == SummandKind::OpaquePair) ? 2 * one : one;
    }
    return d;
}

std::vector<std::size_t> MpParameter::symplectic_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < summands_.size(); ++i)
        if (classify(summands_[i].summand) == SelfDualityType::Symplectic) out.push_back(i);
    return out;
}

MpParameter twist_parameter(const MpParameter& phi, const SquareClass& c) {
    std::vector<WeightedSummand> out;
    for (const auto& ws : phi.summands()) out.push_back({twist(ws.summand, c), ws.multiplicity});
    return MpParameter(phi.field(), std::move(out));
}

// ---- component group ----------------------------------------------------------

std::vector<std::vector<int>> ComponentGroup::all_sign_vectors() const {
    std::vector<std::vector<int>> out;
    std::size_t total = order();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<int> v(rank());
        for (std::size_t i = 0; i < rank(); ++i) v[i] = (mask >> i) & 1 ? -1 : 1;
        out.push_back(std::move(v));
    }
    return out;
}

int pair_eval(const GroupCharacter& chi, const ComponentGroupElement& x) {
    if (chi.signs.size() != x.signs.size())
        throw InvariantViolation("pair_eval: rank mismatch");
    int out = 1;
    for (std::size_t i = 0; i < chi.signs.size(); ++i)
        if (chi.signs[i] == -1 && x.signs[i] == -1) out = -out;
    return out;
}

GroupCharacter character_product(const GroupCharacter& a, const GroupCharacter& b) {
    if (a.signs.size() != b.signs.size())
        throw InvariantViolation("character_product: rank mismatch");
    GroupCharacter out;
    out.signs.reserve(a.signs.size());
    for (std::size_t i = 0; i < a.signs.size(); ++i) out.signs.push_back(a.signs[i] * b.signs[i]);
    return out;
}

GroupCharacter trivial_character(const ComponentGroup& g) {
    return GroupCharacter{std::vector<int>(g.rank(), 1)};
}

GroupCharacter delta_c(const MpParameter& phi, const SquareClass& c,
                       const AdditiveCharacter& psi) {
    if (!(c.field() == phi.field()) || !(psi.field == phi.field()))
        throw InvariantViolation("delta_c: field mismatch");
    int zc = zeta_at_minus_one(phi.field(), c);
    GroupCharacter out;
    for (std::size_t idx : phi.symplectic_indices()) {
        const SimpleSummand& s = phi.summands()[idx].summand;
        RootOfUnity8 ratio = epsilon(s, psi) / epsilon(twist(s, c), psi);
        RootOfUnity8 comp = RootOfUnity8::from_sign(zc).pow(s.dim() / 2) * ratio;
        out.signs.push_back(comp.as_sign());
    }
    return out;
}

} // namespace mpsign
