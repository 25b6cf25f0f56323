#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpsign/lparam.hpp"

using namespace mpsign;

namespace {

const LocalField R = LocalField::real();
const LocalField C = LocalField::complex();
const LocalField F2 = LocalField::padic(2);
const LocalField F3 = LocalField::padic(3);
const LocalField F5 = LocalField::padic(5);

// ---- test-only exact arithmetic in Z[zeta_p], p an odd prime ---------------
// Coefficients are indexed by exponents 0..p-1 and reduced with
// 1 + zeta + ... + zeta^{p-1} = 0 only when comparing.
struct CycModP {
    long p;
    std::vector<Rat> c; // size p

    static CycModP zero(long p) { return {p, std::vector<Rat>(static_cast<std::size_t>(p), Rat(0))}; }

    static CycModP zeta_pow(long p, long e) {
        CycModP out = zero(p);
        out.c[static_cast<std::size_t>(((e % p) + p) % p)] = 1;
        return out;
    }

    CycModP operator+(const CycModP& o) const {
        CycModP out = *this;
        for (long k = 0; k < p; ++k) out.c[k] += o.c[k];
        return out;
    }
    CycModP operator-(const CycModP& o) const {
        CycModP out = *this;
        for (long k = 0; k < p; ++k) out.c[k] -= o.c[k];
        return out;
    }
    CycModP operator*(const CycModP& o) const {
        CycModP out = zero(p);
        for (long a = 0; a < p; ++a) {
            if (c[a] == 0) continue;
            for (long b = 0; b < p; ++b) out.c[(a + b) % p] += c[a] * o.c[b];
        }
        return out;
    }
    CycModP galois(long t) const { // zeta -> zeta^t, gcd(t, p) = 1
        CycModP out = zero(p);
        for (long k = 0; k < p; ++k) out.c[(k * t) % p] += c[k];
        return out;
    }
    CycModP conj() const { return galois(p - 1); }

    // normal form: subtract the coefficient of zeta^{p-1} from everything
    std::vector<Rat> normal() const {
        std::vector<Rat> out(static_cast<std::size_t>(p - 1));
        for (long k = 0; k + 1 < p; ++k) out[k] = c[k] - c[p - 1];
        return out;
    }
    bool operator==(const CycModP& o) const { return normal() == o.normal(); }

    static CycModP constant(long p, const Rat& r) {
        CycModP out = zero(p);
        out.c[0] = r;
        return out;
    }
};

int legendre_long(long a, long p) {
    Int ai(a), pi(p);
    ai %= pi;
    if (ai < 0) ai += pi;
    return mpz_legendre(ai.get_mpz_t(), pi.get_mpz_t());
}

// Gauss sum of the quadratic residue character against zeta^{t x}.
CycModP gauss_sum(long p, long t) {
    CycModP out = CycModP::zero(p);
    for (long x = 1; x < p; ++x) {
        CycModP term = CycModP::zeta_pow(p, t * x);
        out = (legendre_long(x, p) == 1) ? out + term : out - term;
    }
    return out;
}

SimpleSummand char_sa(const LocalField& F, const Rat& d, int a) {
    return SimpleSummand::char_sa(square_class(F, d), a);
}

AdditiveCharacter psi_scaled(const LocalField& F, const Rat& s) {
    return AdditiveCharacter{F, square_class(F, s)};
}

std::vector<SquareClass> classes_of(const LocalField& F) {
    std::vector<SquareClass> out;
    for (const Rat& r : F.square_class_reps()) out.emplace_back(F, r);
    return out;
}

} // namespace

TEST_CASE("gauss-sum oracle: the relations behind the tame root numbers") {
    for (long p : {3, 5, 7, 13}) {
        CycModP g = gauss_sum(p, 1);
        // g conj(g) = p and g^2 = leg(-1) p, exactly in Z[zeta_p]
        CHECK(g * g.conj() == CycModP::constant(p, Rat(p)));
        CHECK(g * g == CycModP::constant(p, Rat(legendre_long(-1, p) * p)));
        // rescaling the character of the sum multiplies by leg(c)
        for (long c = 1; c < p; ++c) {
            CycModP expected = g;
            if (legendre_long(c, p) == -1) expected = CycModP::zero(p) - g;
            CHECK(gauss_sum(p, c) == expected);
        }
    }
}

TEST_CASE("classification of simple summands") {
    CHECK(classify(char_sa(F3, make_rat(2), 2)) == SelfDualityType::Symplectic);
    CHECK(classify(char_sa(F3, make_rat(2), 1)) == SelfDualityType::Orthogonal);
    CHECK(classify(char_sa(F3, make_rat(1), 3)) == SelfDualityType::Orthogonal);
    CHECK(classify(SimpleSummand::discrete_series_r(R, 1)) == SelfDualityType::Symplectic);
    CHECK(classify(SimpleSummand::discrete_series_r(R, 2)) == SelfDualityType::Orthogonal);
    CHECK(classify(SimpleSummand::unit_char_r(R, 0)) == SelfDualityType::Orthogonal);
    CHECK(classify(SimpleSummand::opaque_pair(C, "xi", 2, 1)) == SelfDualityType::Pair);
    CHECK(classify(SimpleSummand::opaque_orthogonal(F3, "rho", 3, -1)) ==
          SelfDualityType::Orthogonal);
}

TEST_CASE("root numbers: pinned values") {
    CHECK(epsilon(char_sa(F3, make_rat(1), 1), AdditiveCharacter::standard(F3)) ==
          RootOfUnity8::one());
    CHECK(epsilon(char_sa(F5, make_rat(1), 1), AdditiveCharacter::standard(F5)) ==
          RootOfUnity8::one());
    CHECK(epsilon(SimpleSummand::unit_char_r(R, 0), AdditiveCharacter::standard(R)) ==
          RootOfUnity8::one());
    CHECK(epsilon(SimpleSummand::unit_char_r(R, 1), AdditiveCharacter::standard(R)) ==
          RootOfUnity8(6)); // -i
    // the special 2-dimensional summand: -1, and +1 after the unramified twist
    CHECK(epsilon(char_sa(F3, make_rat(1), 2), AdditiveCharacter::standard(F3)) ==
          RootOfUnity8::minus_one());
    CHECK(epsilon(char_sa(F3, make_rat(2), 2), AdditiveCharacter::standard(F3)) ==
          RootOfUnity8::one());
    // ramified quadratic character of Q_2 with conductor 4
    CHECK(epsilon(char_sa(F2, make_rat(-1), 1), AdditiveCharacter::standard(F2)) ==
          RootOfUnity8::i());
}

TEST_CASE("root numbers: the square law eps(chi)^2 = chi(-1)") {
    for (const LocalField& F : {F2, F3, F5, LocalField::padic(7)}) {
        for (const auto& d : classes_of(F)) {
            if (d.is_trivial()) continue;
            RootOfUnity8 e = epsilon(SimpleSummand::char_sa(d, 1), AdditiveCharacter::standard(F));
            int chi_minus_one = hilbert_symbol(F, square_class(F, make_rat(-1)), d);
            CHECK((e * e) == RootOfUnity8::from_sign(chi_minus_one));
        }
    }
    // archimedean: eps(sgn)^2 = sgn(-1) = -1
    RootOfUnity8 es = epsilon(SimpleSummand::unit_char_r(R, 1), AdditiveCharacter::standard(R));
    CHECK((es * es) == RootOfUnity8::minus_one());
}

TEST_CASE("root numbers: rescaling multiplies by the determinant character") {
    for (const LocalField& F : {F2, F3, F5}) {
        for (const auto& d : classes_of(F)) {
            for (int a : {1, 2, 3}) {
                SimpleSummand s = SimpleSummand::char_sa(d, a);
                RootOfUnity8 base = epsilon(s, AdditiveCharacter::standard(F));
                for (const auto& cls : classes_of(F)) {
                    int det_at_c = (a % 2 == 1) ? hilbert_symbol(F, cls, d) : 1;
                    CHECK(epsilon(s, AdditiveCharacter{F, cls}) ==
                          base * RootOfUnity8::from_sign(det_at_c));
                }
            }
        }
    }
    for (int k : {1, 2, 3, 4}) {
        SimpleSummand s = SimpleSummand::discrete_series_r(R, k);
        RootOfUnity8 base = epsilon(s, AdditiveCharacter::standard(R));
        RootOfUnity8 neg = epsilon(s, psi_scaled(R, make_rat(-1)));
        int det_at_minus = ((k + 1) % 2 == 1) ? -1 : 1; // det = sgn^{k+1}
        CHECK(neg == base * RootOfUnity8::from_sign(det_at_minus));
    }
}

TEST_CASE("symplectic summands have sign-valued, scale-independent root numbers") {
    std::vector<SimpleSummand> symplectic;
    for (const LocalField& F : {F2, F3, F5})
        for (const auto& d : classes_of(F))
            for (int a : {2, 4}) symplectic.push_back(SimpleSummand::char_sa(d, a));
    for (int k : {1, 3, 5}) symplectic.push_back(SimpleSummand::discrete_series_r(R, k));
    for (const auto& s : symplectic) {
        REQUIRE(classify(s) == SelfDualityType::Symplectic);
        RootOfUnity8 base = epsilon(s, AdditiveCharacter::standard(s.field()));
        CHECK(base.is_sign());
        for (const auto& cls : classes_of(s.field()))
            CHECK(epsilon(s, AdditiveCharacter{s.field(), cls}) == base);
    }
}

TEST_CASE("opaque summands: paired values only") {
    SimpleSummand pair = SimpleSummand::opaque_pair(F3, "xi", 2, -1);
    SimpleSummand orth = SimpleSummand::opaque_orthogonal(F3, "rho", 3, -1);
    CHECK_THROWS_AS(epsilon(pair, AdditiveCharacter::standard(F3)), EpsilonUnavailable);
    CHECK(pair_epsilon(pair, 1) == RootOfUnity8::minus_one());
    CHECK(pair_epsilon(pair, 2) == RootOfUnity8::one());
    CHECK(pair_epsilon(pair, 0) == RootOfUnity8::one());
    CHECK(pair_epsilon(orth, 2) == RootOfUnity8::minus_one());
    CHECK_THROWS_AS(pair_epsilon(orth, 3), InvariantViolation);
    CHECK_THROWS_AS(pair_epsilon(char_sa(F3, make_rat(1), 1), 2), InvariantViolation);
}

TEST_CASE("twisting simple summands") {
    SquareClass u3 = square_class(F3, make_rat(2));
    SquareClass triv(F3, Rat(1));
    SimpleSummand s = char_sa(F3, make_rat(1), 2);
    CHECK(twist(s, triv) == s);
    CHECK(twist(s, u3) == char_sa(F3, make_rat(2), 2));
    CHECK(twist(twist(s, u3), u3) == s);

    SimpleSummand ds = SimpleSummand::discrete_series_r(R, 2);
    CHECK(twist(ds, square_class(R, make_rat(-1))) == ds);
    SimpleSummand sign_char = SimpleSummand::unit_char_r(R, 0);
    CHECK(twist(sign_char, square_class(R, make_rat(-1))) == SimpleSummand::unit_char_r(R, 1));

    SimpleSummand op = SimpleSummand::opaque_pair(F3, "xi", 1, 1);
    SimpleSummand op_tw = twist(op, u3);
    CHECK(op_tw != op);
    CHECK(op_tw.value_at_minus_one() ==
          zeta_at_minus_one(F3, u3)); // dim 1: value picks up zeta_c(-1)
    CHECK(twist(op_tw, u3) == op);
    // dimension and type are preserved
    CHECK(op_tw.dim() == op.dim());
    CHECK(classify(op_tw) == classify(op));
}

TEST_CASE("zeta_c(-1) values") {
    CHECK(zeta_at_minus_one(R, square_class(R, make_rat(-1))) == -1);
    CHECK(zeta_at_minus_one(F5, square_class(F5, make_rat(2))) == 1); // p = 1 mod 4
    CHECK(zeta_at_minus_one(F3, SquareClass(F3, Rat(1))) == 1);
    CHECK(zeta_at_minus_one(C, SquareClass(C, Rat(1))) == 1);
}

TEST_CASE("parameter invariants") {
    SimpleSummand s1 = char_sa(F3, make_rat(1), 2);
    SimpleSummand s2 = char_sa(F3, make_rat(2), 2);
    SimpleSummand orth = char_sa(F3, make_rat(3), 1);
    MpParameter phi(F3, {{s1, 1}, {s2, 2}, {orth, 2}});
    CHECK(phi.total_dim() == 2 + 4 + 2);
    CHECK(phi.n() == 4);
    CHECK(phi.symplectic_indices() == std::vector<std::size_t>{0, 1});
    CHECK_THROWS_AS(MpParameter(F3, {{s1, 1}, {s1, 1}}), InvariantViolation); // duplicates
    CHECK_THROWS_AS(MpParameter(F3, {{orth, 1}}), InvariantViolation); // odd orth multiplicity
    SimpleSummand pair = SimpleSummand::opaque_pair(F3, "xi", 3, 1);
    CHECK(MpParameter(F3, {{pair, 1}}).total_dim() == 6); // pairs count twice
}

TEST_CASE("delta_c: pinned example and degenerate cases") {
    AdditiveCharacter psi0 = AdditiveCharacter::standard(F3);
    MpParameter phi(F3, {{char_sa(F3, make_rat(1), 2), 1}});
    // c in the square class of u = 2 over Q_3: eps flips from -1 to +1 and
    // zeta_c(-1) = (2, -1)_3 = +1, so the single component is -1
    GroupCharacter d = delta_c(phi, square_class(F3, make_rat(2)), psi0);
    REQUIRE(d.signs.size() == 1);
    CHECK(d.signs[0] == -1);

    CHECK(delta_c(phi, SquareClass(F3, Rat(1)), psi0).signs == std::vector<int>{1});

    MpParameter phi_c(C, {{SimpleSummand::opaque_pair(C, "xi", 1, 1), 1}});
    CHECK(delta_c(phi_c, SquareClass(C, Rat(1)), AdditiveCharacter::standard(C)).signs.empty());
}

TEST_CASE("delta_c laws over every class pair") {
    std::vector<MpParameter> params;
    params.emplace_back(F3, std::vector<WeightedSummand>{{char_sa(F3, make_rat(1), 2), 1},
                                                         {char_sa(F3, make_rat(3), 2), 1}});
    params.emplace_back(F5, std::vector<WeightedSummand>{{char_sa(F5, make_rat(2), 2), 2},
                                                         {char_sa(F5, make_rat(10), 4), 1}});
    params.emplace_back(R, std::vector<WeightedSummand>{
                               {SimpleSummand::discrete_series_r(R, 1), 1},
                               {SimpleSummand::discrete_series_r(R, 3), 2}});
    params.emplace_back(F2, std::vector<WeightedSummand>{{char_sa(F2, make_rat(-1), 2), 1},
                                                         {char_sa(F2, make_rat(10), 2), 1}});
    for (const MpParameter& phi : params) {
        const LocalField& F = phi.field();
        AdditiveCharacter psi0 = AdditiveCharacter::standard(F);
        for (const auto& c : classes_of(F)) {
            GroupCharacter base = delta_c(phi, c, psi0);
            for (int s : base.signs) CHECK((s == 1 || s == -1));
            // psi-scale independence
            for (const auto& scl : classes_of(F))
                CHECK(delta_c(phi, c, AdditiveCharacter{F, scl}) == base);
            // cocycle law
            for (const auto& c2 : classes_of(F)) {
                GroupCharacter lhs = delta_c(phi, c * c2, psi0);
                GroupCharacter rhs = character_product(
                    base, delta_c(twist_parameter(phi, c), c2, psi0.rescaled(c)));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("component group enumeration and pairing") {
    ComponentGroup g({0, 2, 5});
    CHECK(g.order() == 8);
    auto vecs = g.all_sign_vectors();
    CHECK(vecs.size() == 8);
    CHECK(vecs[0] == std::vector<int>{1, 1, 1});
    GroupCharacter chi{{-1, 1, -1}};
    ComponentGroupElement x{{-1, -1, 1}};
    CHECK(pair_eval(chi, x) == -1);
    CHECK(pair_eval(trivial_character(g), x) == 1);
    CHECK(character_product(chi, chi) == trivial_character(g));
}
