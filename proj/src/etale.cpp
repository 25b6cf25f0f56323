#include "mpsign/etale.hpp"

#include <algorithm>

namespace mpsign {

// ---- BaseField -------------------------------------------------------------

BaseField BaseField::ground(LocalField F) { return BaseField(std::move(F), std::nullopt); }

BaseField BaseField::extension(ExtField E) {
    LocalField F = E.base();
    return BaseField(std::move(F), std::move(E));
}

const ExtField& BaseField::ext() const {
    if (!ext_) throw InvariantViolation("BaseField::ext: tier-1 base");
    return *ext_;
}

bool BaseField::operator==(const BaseField& o) const {
    if (F_ != o.F_ || ext_.has_value() != o.ext_.has_value()) return false;
    return !ext_ || *ext_ == *o.ext_;
}

BaseElem BaseField::mul(const BaseElem& x, const BaseElem& y) const {
    if (!ext_) return {x.a * y.a, Rat(0)};
    ExtElement r = ext_->mul({x.a, x.b}, {y.a, y.b});
    return {r.a, r.b};
}

BaseElem BaseField::inv(const BaseElem& x) const {
    if (is_zero(x)) throw InvariantViolation("BaseField::inv: zero element");
    if (!ext_) return {Rat(1) / x.a, Rat(0)};
    ExtElement r = ext_->inv({x.a, x.b});
    return {r.a, r.b};
}

BaseElem BaseField::conj(const BaseElem& x) const {
    if (!ext_) return x;
    return {x.a, -x.b};
}

Rat BaseField::norm_to_ground(const BaseElem& x) const {
    if (!ext_) return x.a;
    return ext_->norm({x.a, x.b});
}

Rat BaseField::trace_to_ground(const BaseElem& x) const {
    if (!ext_) return x.a;
    return ext_->trace({x.a, x.b});
}

bool BaseField::is_square(const BaseElem& x) const {
    if (is_zero(x)) throw InvariantViolation("BaseField::is_square: zero element");
    if (!ext_) return square_class(F_, x.a).is_trivial();
    return ext_square_class(*ext_, {x.a, x.b}).is_trivial();
}

std::optional<BaseElem> BaseField::sqrt(const BaseElem& x) const {
    if (!ext_) {
        auto r = rat_sqrt(x.a);
        if (!r) return std::nullopt;
        return BaseElem{*r, Rat(0)};
    }
    // Solve (alpha + beta s)^2 = A + B s over Q, s^2 = disc.
    const Rat& disc = ext_->disc().rep();
    const Rat& A = x.a;
    const Rat& B = x.b;
    if (B == 0) {
        if (auto r = rat_sqrt(A)) return BaseElem{*r, Rat(0)};
        if (auto r = rat_sqrt(A / disc)) return BaseElem{Rat(0), *r};
        return std::nullopt;
    }
    auto n = rat_sqrt(A * A - disc * B * B);
    if (!n) return std::nullopt;
    const Rat candidates[2] = {Rat((A + *n) / 2), Rat((A - *n) / 2)};
    for (const Rat& t : candidates) {
        if (t == 0) continue;
        if (auto alpha = rat_sqrt(t)) {
            Rat beta = B / (2 * *alpha);
            BaseElem s{*alpha, beta};
            if (mul(s, s) == x) return s;
        }
    }
    return std::nullopt;
}

int BaseField::hilbert(const BaseElem& x, const BaseElem& y) const {
    if (!ext_) return hilbert_symbol(F_, x.a, y.a);
    return ext_hilbert_symbol(*ext_, {x.a, x.b}, {y.a, y.b});
}

BaseElem BaseField::nonnorm_for(const BaseElem& D) const {
    if (is_zero(D) || is_square(D))
        throw InvariantViolation("nonnorm_for: D must be a nonsquare");
    if (!ext_) {
        for (const Rat& r : F_.square_class_reps())
            if (hilbert(from_rat(r), D) == -1) return from_rat(r);
    } else {
        ExtElement nu = ext_->nonsquare_unit();
        ExtElement pi = ext_->uniformizer();
        ExtElement nupi = ext_->mul(nu, pi);
        for (const ExtElement& cand : {nu, pi, nupi}) {
            BaseElem r{cand.a, cand.b};
            if (hilbert(r, D) == -1) return r;
        }
    }
    throw InvariantViolation("nonnorm_for: no non-norm found (degenerate pairing)");
}

std::vector<BaseElem> BaseField::basis_over_F() const {
    if (!ext_) return {one()};
    return {one(), BaseElem{Rat(0), Rat(1)}};
}

std::vector<Rat> BaseField::coords(const BaseElem& x) const {
    if (!ext_) return {x.a};
    return {x.a, x.b};
}

// ---- InvolutiveFactor --------------------------------------------------------

InvolutiveFactor InvolutiveFactor::make_split(BaseField base) {
    BaseElem none = base.zero();
    return InvolutiveFactor(std::move(base), true, std::move(none));
}

InvolutiveFactor InvolutiveFactor::make_field(BaseField base, BaseElem D) {
    if (base.is_zero(D)) throw InvariantViolation("InvolutiveFactor: D = 0");
    if (base.is_square(D))
        throw InvariantViolation("InvolutiveFactor: D must be a nonsquare of the base");
    return InvolutiveFactor(std::move(base), false, std::move(D));
}

const BaseElem& InvolutiveFactor::disc() const {
    if (split_) throw InvariantViolation("InvolutiveFactor::disc: split factor");
    return D_;
}

bool InvolutiveFactor::operator==(const InvolutiveFactor& o) const {
    if (split_ != o.split_ || !(base_ == o.base_)) return false;
    return split_ || D_ == o.D_;
}

FactorElement InvolutiveFactor::one() const {
    if (split_) return {base_.one(), base_.one()};
    return {base_.one(), base_.zero()};
}

FactorElement InvolutiveFactor::from_base(const BaseElem& e) const {
    if (split_) return {e, e};
    return {e, base_.zero()};
}

bool InvolutiveFactor::is_unit(const FactorElement& x) const {
    if (split_) return !base_.is_zero(x.u) && !base_.is_zero(x.v);
    return !is_zero(x);
}

FactorElement InvolutiveFactor::add(const FactorElement& x, const FactorElement& y) const {
    return {base_.add(x.u, y.u), base_.add(x.v, y.v)};
}

FactorElement InvolutiveFactor::sub(const FactorElement& x, const FactorElement& y) const {
    return {base_.sub(x.u, y.u), base_.sub(x.v, y.v)};
}

FactorElement InvolutiveFactor::neg(const FactorElement& x) const {
    return {base_.neg(x.u), base_.neg(x.v)};
}

FactorElement InvolutiveFactor::mul(const FactorElement& x, const FactorElement& y) const {
    if (split_) return {base_.mul(x.u, y.u), base_.mul(x.v, y.v)};
    return {base_.add(base_.mul(x.u, y.u), base_.mul(D_, base_.mul(x.v, y.v))),
            base_.add(base_.mul(x.u, y.v), base_.mul(x.v, y.u))};
}

FactorElement InvolutiveFactor::inv(const FactorElement& x) const {
    if (!is_unit(x)) throw InvariantViolation("InvolutiveFactor::inv: non-unit");
    if (split_) return {base_.inv(x.u), base_.inv(x.v)};
    BaseElem n = norm_to_base(x);
    BaseElem ni = base_.inv(n);
    return {base_.mul(x.u, ni), base_.neg(base_.mul(x.v, ni))};
}

FactorElement InvolutiveFactor::tau(const FactorElement& x) const {
    if (split_) return {x.v, x.u};
    return {x.u, base_.neg(x.v)};
}

BaseElem InvolutiveFactor::norm_to_base(const FactorElement& x) const {
    if (split_) return base_.mul(x.u, x.v);
    return base_.sub(base_.mul(x.u, x.u), base_.mul(D_, base_.mul(x.v, x.v)));
}

BaseElem InvolutiveFactor::trace_to_base(const FactorElement& x) const {
    if (split_) return base_.add(x.u, x.v);
    return base_.add(x.u, x.u);
}

std::vector<FactorElement> InvolutiveFactor::basis_over_F() const {
    std::vector<FactorElement> out;
    for (const BaseElem& e : base_.basis_over_F()) out.push_back({e, base_.zero()});
    for (const BaseElem& e : base_.basis_over_F()) out.push_back({base_.zero(), e});
    return out;
}

std::vector<Rat> InvolutiveFactor::coords(const FactorElement& x) const {
    std::vector<Rat> out = base_.coords(x.u);
    for (const Rat& r : base_.coords(x.v)) out.push_back(r);
    return out;
}

// ---- class data --------------------------------------------------------------

namespace {

void validate_x(const LocalField& F, const InvolutiveFactor& K, const FactorElement& x) {
    if (K.base().ground_field() != F)
        throw InvariantViolation("class datum: factor over wrong ground field");
    if (!K.is_unit(x)) throw InvariantViolation("class datum: x is not a unit");
    if (K.mul(x, K.tau(x)) != K.one())
        throw InvariantViolation("class datum: x tau(x) != 1");
}

void validate_c(const InvolutiveFactor& K, const FactorElement& c, CSign sign) {
    if (K.is_zero(c)) throw InvariantViolation("class datum: c = 0");
    FactorElement want = (sign == CSign::Skew) ? K.neg(c) : c;
    if (K.tau(c) != want)
        throw InvariantViolation(sign == CSign::Skew ? "class datum: tau(c) != -c"
                                                     : "class datum: tau(c) != c");
}

int total_dim(const std::vector<StableFactor>& fs) {
    int d = 0;
    for (const auto& f : fs) d += f.algebra.dim_over_F();
    return d;
}

int total_dim(const std::vector<ClassFactor>& fs) {
    int d = 0;
    for (const auto& f : fs) d += f.algebra.dim_over_F();
    return d;
}

} // namespace

StableClassDatum::StableClassDatum(LocalField F, std::vector<StableFactor> factors)
    : F_(std::move(F)), factors_(std::move(factors)) {
    for (const auto& f : factors_) validate_x(F_, f.algebra, f.x);
}

int StableClassDatum::dim() const { return total_dim(factors_); }

SpClassDatum::SpClassDatum(LocalField F, std::vector<ClassFactor> factors)
    : F_(std::move(F)), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        validate_x(F_, f.algebra, f.x);
        validate_c(f.algebra, f.c, CSign::Skew);
    }
}

int SpClassDatum::dim() const { return total_dim(factors_); }

StableClassDatum SpClassDatum::stable() const {
    std::vector<StableFactor> fs;
    for (const auto& f : factors_) fs.push_back({f.algebra, f.x});
    return StableClassDatum(F_, std::move(fs));
}

SOClassDatum::SOClassDatum(LocalField F, std::vector<ClassFactor> factors)
    : F_(std::move(F)), factors_(std::move(factors)) {
    for (const auto& f : factors_) {
        validate_x(F_, f.algebra, f.x);
        validate_c(f.algebra, f.c, CSign::Fixed);
    }
}

int SOClassDatum::dim() const { return total_dim(factors_); }

StableClassDatum SOClassDatum::stable() const {
    std::vector<StableFactor> fs;
    for (const auto& f : factors_) fs.push_back({f.algebra, f.x});
    return StableClassDatum(F_, std::move(fs));
}

// ---- operations ---------------------------------------------------------------

Mat multiplication_matrix(const InvolutiveFactor& K, const FactorElement& x) {
    auto basis = K.basis_over_F();
    std::size_t d = basis.size();
    Mat m = mat_zero(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        auto col = K.coords(K.mul(x, basis[j]));
        for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    }
    return m;
}

Poly factor_min_poly(const InvolutiveFactor& K, const FactorElement& x) {
    return minimal_polynomial(multiplication_matrix(K, x));
}

bool check_regular(const StableClassDatum& d) {
    std::vector<Poly> polys;
    for (const auto& f : d.factors()) {
        Poly mu = factor_min_poly(f.algebra, f.x);
        if (poly_deg(mu) != static_cast<std::size_t>(f.algebra.dim_over_F())) return false;
        polys.push_back(std::move(mu));
    }
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (!poly_coprime(polys[i], polys[j])) return false;
    return true;
}

FactorElement hilbert90_witness(const InvolutiveFactor& K, const FactorElement& x) {
    if (K.mul(x, K.tau(x)) != K.one())
        throw InvariantViolation("hilbert90_witness: x tau(x) != 1");
    FactorElement omega;
    if (K.is_split()) {
        omega = K.make(x.u, K.base().one());
    } else {
        if (x == K.neg(K.one()))
            throw DegenerateWitness("hilbert90_witness: x = -1 has no witness");
        omega = K.add(K.one(), x);
    }
    // omega / tau(omega) = x by construction; keep the check, it is cheap
    if (K.mul(omega, K.inv(K.tau(omega))) != x)
        throw InvariantViolation("hilbert90_witness: postcondition failed");
    return omega;
}

Rat norm_to_F(const std::vector<StableFactor>& factors, const std::vector<FactorElement>& elems) {
    if (factors.size() != elems.size())
        throw InvariantViolation("norm_to_F: element tuple has wrong length");
    Rat out(1);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].algebra.is_zero(elems[i]))
            throw InvariantViolation("norm_to_F: zero element");
        out *= factors[i].algebra.norm_to_F(elems[i]);
    }
    return out;
}

std::vector<BaseElem> norm_to_knat(const std::vector<StableFactor>& factors,
                                   const std::vector<FactorElement>& elems) {
    if (factors.size() != elems.size())
        throw InvariantViolation("norm_to_knat: element tuple has wrong length");
    std::vector<BaseElem> out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].algebra.is_zero(elems[i]))
            throw InvariantViolation("norm_to_knat: zero element");
        out.push_back(factors[i].algebra.norm_to_base(elems[i]));
    }
    return out;
}

namespace {

// Isomorphism test of single factors carrying (x, c); the map must preserve
// the involution, send x1 to x2 exactly, and match c up to norms.
bool factor_match(const InvolutiveFactor& K1, const FactorElement& x1, const FactorElement& c1,
                  const InvolutiveFactor& K2, const FactorElement& x2, const FactorElement& c2,
                  bool check_c) {
    if (K1.is_split() != K2.is_split()) return false;
    if (!(K1.base() == K2.base())) return false; // bases normalized to canonical disc
    const BaseField& B = K2.base();

    int n_sigma = B.is_ext() ? 2 : 1;
    for (int si = 0; si < n_sigma; ++si) {
        auto sigma = [&](const BaseElem& e) { return si == 0 ? e : B.conj(e); };
        if (K1.is_split()) {
            for (bool swap : {false, true}) {
                FactorElement img = swap ? K2.make(sigma(x1.v), sigma(x1.u))
                                         : K2.make(sigma(x1.u), sigma(x1.v));
                if (img == x2) return true; // split norms are surjective, c always matches
            }
            continue;
        }
        // field top: need s in base with s^2 D2 = sigma(D1)
        BaseElem ratio = B.mul(sigma(K1.disc()), B.inv(K2.disc()));
        auto s0 = B.sqrt(ratio);
        if (!s0) continue;
        for (const BaseElem& s : {*s0, B.neg(*s0)}) {
            FactorElement img = K2.make(sigma(x1.u), B.mul(sigma(x1.v), s));
            if (img != x2) continue;
            if (!check_c) return true;
            FactorElement c_img = K2.make(sigma(c1.u), B.mul(sigma(c1.v), s));
            FactorElement w = K2.mul(c_img, K2.inv(c2));
            if (!B.is_zero(w.v))
                throw InvariantViolation("factor_match: c ratio not in the fixed field");
            if (B.hilbert(w.u, K2.disc()) == 1) return true;
        }
    }
    return false;
}

bool match_all(const std::vector<ClassFactor>& a, const std::vector<ClassFactor>& b,
               std::vector<bool>& used, std::size_t i, bool check_c) {
    if (i == a.size()) return true;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (used[j]) continue;
        if (!factor_match(a[i].algebra, a[i].x, a[i].c, b[j].algebra, b[j].x, b[j].c, check_c))
            continue;
        used[j] = true;
        if (match_all(a, b, used, i + 1, check_c)) return true;
        used[j] = false;
    }
    return false;
}

bool equivalent_impl(const LocalField& Fa, const std::vector<ClassFactor>& a, const LocalField& Fb,
                     const std::vector<ClassFactor>& b) {
    if (Fa != Fb) return false;
    if (a.size() != b.size()) return false;
    if (total_dim(a) != total_dim(b)) return false;
    std::vector<bool> used(b.size(), false);
    return match_all(a, b, used, 0, true);
}

} // namespace

bool equivalent(const SpClassDatum& a, const SpClassDatum& b) {
    return equivalent_impl(a.field(), a.factors(), b.field(), b.factors());
}

bool equivalent(const SOClassDatum& a, const SOClassDatum& b) {
    return equivalent_impl(a.field(), a.factors(), b.field(), b.factors());
}

std::vector<std::vector<FactorElement>> enumerate_c_assignments(const StableClassDatum& s,
                                                                CSign sign) {
    std::vector<std::vector<FactorElement>> out{{}};
    for (const auto& f : s.factors()) {
        const InvolutiveFactor& K = f.algebra;
        std::vector<FactorElement> choices;
        if (K.is_split()) {
            BaseElem one = K.base().one();
            choices.push_back(sign == CSign::Skew ? K.make(one, K.base().neg(one))
                                                  : K.make(one, one));
        } else {
            FactorElement c0 = (sign == CSign::Skew)
                                   ? K.make(K.base().zero(), K.base().one()) // sqrt(D)
                                   : K.one();
            BaseElem r = K.base().nonnorm_for(K.disc());
            choices.push_back(c0);
            choices.push_back(K.mul(c0, K.from_base(r)));
        }
        std::vector<std::vector<FactorElement>> next;
        for (const auto& partial : out)
            for (const auto& ch : choices) {
                auto ext = partial;
                ext.push_back(ch);
                next.push_back(std::move(ext));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<SpClassDatum> enumerate_sp_c_classes(const StableClassDatum& s) {
    std::vector<SpClassDatum> out;
    for (const auto& cs : enumerate_c_assignments(s, CSign::Skew)) {
        std::vector<ClassFactor> fs;
        for (std::size_t i = 0; i < s.factors().size(); ++i)
            fs.push_back({s.factors()[i].algebra, s.factors()[i].x, cs[i]});
        out.emplace_back(s.field(), std::move(fs));
    }
    return out;
}

std::vector<SOClassDatum> enumerate_so_c_classes(const StableClassDatum& s) {
    std::vector<SOClassDatum> out;
    for (const auto& cs : enumerate_c_assignments(s, CSign::Fixed)) {
        std::vector<ClassFactor> fs;
        for (std::size_t i = 0; i < s.factors().size(); ++i)
            fs.push_back({s.factors()[i].algebra, s.factors()[i].x, cs[i]});
        out.emplace_back(s.field(), std::move(fs));
    }
    return out;
}

} // namespace mpsign
