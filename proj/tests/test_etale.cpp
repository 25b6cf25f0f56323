#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpsign/etale.hpp"

using namespace mpsign;

namespace {

const LocalField F3 = LocalField::padic(3);
const LocalField F5 = LocalField::padic(5);

InvolutiveFactor t1_split(const LocalField& F) {
    return InvolutiveFactor::make_split(BaseField::ground(F));
}

InvolutiveFactor t1_field(const LocalField& F, const Rat& D) {
    BaseField B = BaseField::ground(F);
    return InvolutiveFactor::make_field(B, B.from_rat(D));
}

FactorElement split_x(const InvolutiveFactor& K, const Rat& t) {
    return K.make(K.base().from_rat(t), K.base().from_rat(Rat(1) / t));
}

FactorElement skew_c_split(const InvolutiveFactor& K, const Rat& e) {
    return K.make(K.base().from_rat(e), K.base().from_rat(-e));
}

FactorElement skew_c_field(const InvolutiveFactor& K, const Rat& b) {
    return K.make(K.base().zero(), K.base().from_rat(b));
}

// x of norm one from a Hilbert-90 quotient in a field factor
FactorElement norm_one_x(const InvolutiveFactor& K, const Rat& a, const Rat& b) {
    FactorElement omega = K.make(K.base().from_rat(a), K.base().from_rat(b));
    return K.mul(omega, K.inv(K.tau(omega)));
}

// evaluate a polynomial at a factor element
FactorElement poly_eval(const InvolutiveFactor& K, const Poly& p, const FactorElement& x) {
    FactorElement acc = K.zero(), pw = K.one();
    for (const Rat& coef : p) {
        acc = K.add(acc, K.mul(K.from_rat(coef), pw));
        pw = K.mul(pw, x);
    }
    return acc;
}

} // namespace

TEST_CASE("factor arithmetic and involution") {
    InvolutiveFactor Ks = t1_split(F3);
    FactorElement x = split_x(Ks, make_rat(5));
    CHECK(Ks.mul(x, Ks.tau(x)) == Ks.one());
    CHECK(Ks.norm_to_base(x) == Ks.base().one());
    CHECK(Ks.trace_to_F(x) == make_rat(5) + make_rat(1, 5));

    InvolutiveFactor Kf = t1_field(F3, make_rat(3));
    FactorElement y = Kf.make(Kf.base().from_rat(make_rat(2)), Kf.base().from_rat(make_rat(1, 2)));
    CHECK(Kf.mul(y, Kf.inv(y)) == Kf.one());
    CHECK(Kf.norm_to_F(y) == make_rat(4) - make_rat(3) / make_rat(4));
    CHECK(Kf.tau(Kf.tau(y)) == y);
    CHECK_THROWS_AS(t1_field(F3, make_rat(4)), InvariantViolation); // square D
}

TEST_CASE("tier-2 tower norms compose") {
    ExtField E(F3, square_class(F3, make_rat(2)));
    BaseField B = BaseField::extension(E);
    BaseElem D{make_rat(1), make_rat(1)}; // 1 + sqrt(2), a non-square of E
    REQUIRE(!B.is_square(D));
    InvolutiveFactor K = InvolutiveFactor::make_field(B, D);
    CHECK(K.dim_over_F() == 4);
    // N_{K|F}(sqrt D) = N_{E|F}(-D)
    FactorElement sqrtD = K.make(B.zero(), B.one());
    CHECK(K.norm_to_F(sqrtD) == E.norm(ExtElement{-D.a, -D.b}));
    // multiplicativity through the tower
    FactorElement z = K.make(BaseElem{make_rat(2), make_rat(-1)}, BaseElem{make_rat(1, 2), make_rat(3)});
    CHECK(K.norm_to_F(K.mul(z, sqrtD)) == K.norm_to_F(z) * K.norm_to_F(sqrtD));
}

TEST_CASE("class datum validation") {
    InvolutiveFactor Ks = t1_split(F3);
    FactorElement x = split_x(Ks, make_rat(5));
    CHECK_NOTHROW(SpClassDatum(F3, {{Ks, x, skew_c_split(Ks, make_rat(2))}}));
    // tau(c) = +c is the orthogonal-side convention
    FactorElement c_fixed = Ks.make(Ks.base().from_rat(make_rat(2)), Ks.base().from_rat(make_rat(2)));
    CHECK_THROWS_AS(SpClassDatum(F3, {{Ks, x, c_fixed}}), InvariantViolation);
    CHECK_NOTHROW(SOClassDatum(F3, {{Ks, x, c_fixed}}));
    // x must have norm one
    FactorElement bad_x = Ks.make(Ks.base().from_rat(make_rat(5)), Ks.base().from_rat(make_rat(5)));
    CHECK_THROWS_AS(StableClassDatum(F3, {{Ks, bad_x}}), InvariantViolation);
}

TEST_CASE("minimal polynomials and regularity") {
    InvolutiveFactor Ks = t1_split(F3);
    FactorElement x = split_x(Ks, make_rat(5));
    Poly mu = factor_min_poly(Ks, x);
    CHECK(poly_deg(mu) == 2);
    CHECK(Ks.is_zero(poly_eval(Ks, mu, x)));
    CHECK(check_regular(StableClassDatum(F3, {{Ks, x}})));

    // x = -1 in a field factor generates only F
    InvolutiveFactor Kf = t1_field(F3, make_rat(3));
    FactorElement minus_one = Kf.neg(Kf.one());
    CHECK(poly_deg(factor_min_poly(Kf, minus_one)) == 1);
    CHECK(!check_regular(StableClassDatum(F3, {{Kf, minus_one}})));

    // repeated split factors share a minimal polynomial
    CHECK(!check_regular(StableClassDatum(F3, {{Ks, x}, {Ks, x}})));
    CHECK(check_regular(StableClassDatum(F3, {{Ks, x}, {Ks, split_x(Ks, make_rat(7))}})));

    // tier-2 field factor generates a 4-dimensional algebra
    ExtField E(F3, square_class(F3, make_rat(2)));
    BaseField B = BaseField::extension(E);
    InvolutiveFactor K2 = InvolutiveFactor::make_field(B, BaseElem{make_rat(1), make_rat(1)});
    FactorElement omega = K2.make(BaseElem{make_rat(1), make_rat(2)}, BaseElem{make_rat(3), make_rat(-1)});
    FactorElement x2 = K2.mul(omega, K2.inv(K2.tau(omega)));
    Poly mu2 = factor_min_poly(K2, x2);
    CHECK(poly_deg(mu2) == 4);
    CHECK(K2.is_zero(poly_eval(K2, mu2, x2)));
    CHECK(check_regular(StableClassDatum(F3, {{K2, x2}})));
}

TEST_CASE("hilbert-90 witnesses") {
    InvolutiveFactor Ks = t1_split(F5);
    FactorElement x = split_x(Ks, make_rat(5));
    FactorElement w = hilbert90_witness(Ks, x);
    CHECK(w == Ks.make(Ks.base().from_rat(make_rat(5)), Ks.base().one()));
    CHECK(Ks.mul(w, Ks.inv(Ks.tau(w))) == x);

    InvolutiveFactor Kf = t1_field(F5, make_rat(10));
    FactorElement xf = norm_one_x(Kf, make_rat(2), make_rat(3));
    CHECK(Kf.norm_to_base(xf) == Kf.base().one());
    FactorElement wf = hilbert90_witness(Kf, xf);
    CHECK(Kf.mul(wf, Kf.inv(Kf.tau(wf))) == xf);

    CHECK_THROWS_AS(hilbert90_witness(Kf, Kf.neg(Kf.one())), DegenerateWitness);
}

TEST_CASE("witness norm class is independent of the witness") {
    InvolutiveFactor Kf = t1_field(F5, make_rat(2));
    FactorElement x = norm_one_x(Kf, make_rat(3), make_rat(-2));
    FactorElement w = hilbert90_witness(Kf, x);
    for (const Rat& lam : {make_rat(2), make_rat(-7, 3), make_rat(10)}) {
        FactorElement w2 = Kf.mul(w, Kf.from_base(Kf.base().from_rat(lam)));
        CHECK(Kf.mul(w2, Kf.inv(Kf.tau(w2))) == x);
        CHECK(square_class(F5, Kf.norm_to_F(w2)) == square_class(F5, Kf.norm_to_F(w)));
    }
}

TEST_CASE("equivalence of class data") {
    InvolutiveFactor Ks = t1_split(F5);
    InvolutiveFactor Kf = t1_field(F5, make_rat(2));
    FactorElement xs = split_x(Ks, make_rat(7));
    FactorElement xf = norm_one_x(Kf, make_rat(1), make_rat(3));
    SpClassDatum d(F5, {{Ks, xs, skew_c_split(Ks, make_rat(3))},
                        {Kf, xf, skew_c_field(Kf, make_rat(1))}});
    CHECK(equivalent(d, d));

    // swapping the split components is an isomorphism
    SpClassDatum d_swapped(F5, {{Ks, Ks.tau(xs), skew_c_split(Ks, make_rat(3))},
                                {Kf, xf, skew_c_field(Kf, make_rat(1))}});
    CHECK(equivalent(d, d_swapped));

    // multiplying c by a norm keeps the class
    FactorElement lambda = Kf.make(Kf.base().from_rat(make_rat(2)), Kf.base().from_rat(make_rat(5)));
    FactorElement c_scaled = Kf.mul(skew_c_field(Kf, make_rat(1)), Kf.from_base(Kf.norm_to_base(lambda)));
    SpClassDatum d_scaled(F5, {{Ks, xs, skew_c_split(Ks, make_rat(3))}, {Kf, xf, c_scaled}});
    CHECK(equivalent(d, d_scaled));

    // multiplying c by a non-norm changes the class
    BaseElem r = Kf.base().nonnorm_for(Kf.disc());
    FactorElement c_flipped = Kf.mul(skew_c_field(Kf, make_rat(1)), Kf.from_base(r));
    SpClassDatum d_flipped(F5, {{Ks, xs, skew_c_split(Ks, make_rat(3))}, {Kf, xf, c_flipped}});
    CHECK(!equivalent(d, d_flipped));

    // permuting factors does not matter
    SpClassDatum d_perm(F5, {{Kf, xf, skew_c_field(Kf, make_rat(1))},
                             {Ks, xs, skew_c_split(Ks, make_rat(3))}});
    CHECK(equivalent(d, d_perm));
    CHECK(equivalent(d_perm, d)); // symmetry
    CHECK(equivalent(d_swapped, d_scaled)); // transitivity spot check

    // different x is a different class
    SpClassDatum d_other(F5, {{Ks, split_x(Ks, make_rat(11)), skew_c_split(Ks, make_rat(3))},
                              {Kf, xf, skew_c_field(Kf, make_rat(1))}});
    CHECK(!equivalent(d, d_other));
}

TEST_CASE("equivalence through the base automorphism in tier 2") {
    ExtField E(F5, square_class(F5, make_rat(2)));
    BaseField B = BaseField::extension(E);
    BaseElem D{make_rat(3), make_rat(1)};
    REQUIRE(!B.is_square(D));
    InvolutiveFactor K = InvolutiveFactor::make_field(B, D);
    FactorElement omega = K.make(BaseElem{make_rat(1), make_rat(1)}, BaseElem{make_rat(2), make_rat(0)});
    FactorElement x = K.mul(omega, K.inv(K.tau(omega)));
    FactorElement c = K.make(B.zero(), BaseElem{make_rat(1), make_rat(1)});
    REQUIRE(K.tau(c) == K.neg(c));
    SpClassDatum d(F5, {{K, x, c}});

    // conjugate the whole factor by the Galois automorphism of E over F
    BaseElem Dc = B.conj(D);
    InvolutiveFactor Kc = InvolutiveFactor::make_field(B, Dc);
    auto conj_elem = [&](const FactorElement& z) {
        return Kc.make(B.conj(z.u), B.conj(z.v));
    };
    SpClassDatum d_conj(F5, {{Kc, conj_elem(x), conj_elem(c)}});
    CHECK(equivalent(d, d_conj));
}

TEST_CASE("regularity is invariant under the matching isomorphisms") {
    InvolutiveFactor Ks = t1_split(F5);
    FactorElement xs = split_x(Ks, make_rat(7));
    StableClassDatum a(F5, {{Ks, xs}});
    StableClassDatum b(F5, {{Ks, Ks.tau(xs)}});
    CHECK(check_regular(a) == check_regular(b));
}

TEST_CASE("enumerating c classes") {
    InvolutiveFactor Ks = t1_split(F5);
    InvolutiveFactor Kf1 = t1_field(F5, make_rat(2));
    InvolutiveFactor Kf2 = t1_field(F5, make_rat(5));
    FactorElement xs = split_x(Ks, make_rat(3));
    FactorElement x1 = norm_one_x(Kf1, make_rat(1), make_rat(1));
    FactorElement x2 = norm_one_x(Kf2, make_rat(2), make_rat(1));

    StableClassDatum all_split(F5, {{Ks, xs}});
    CHECK(enumerate_sp_c_classes(all_split).size() == 1);

    StableClassDatum one_field(F5, {{Kf1, x1}});
    auto two = enumerate_sp_c_classes(one_field);
    CHECK(two.size() == 2);
    CHECK(!equivalent(two[0], two[1]));

    StableClassDatum mixed(F5, {{Ks, xs}, {Kf1, x1}, {Kf2, x2}});
    CHECK(enumerate_sp_c_classes(mixed).size() == 4); // 2^(number of field factors)
    CHECK(enumerate_so_c_classes(mixed).size() == 4);
    for (const auto& so : enumerate_so_c_classes(mixed))
        for (const auto& f : so.factors()) CHECK(f.algebra.tau(f.c) == f.c);
    for (const auto& sp : enumerate_sp_c_classes(mixed))
        for (const auto& f : sp.factors()) CHECK(f.algebra.tau(f.c) == f.algebra.neg(f.c));
}

TEST_CASE("norms of element tuples") {
    InvolutiveFactor Ks = t1_split(F3);
    InvolutiveFactor Kf = t1_field(F3, make_rat(3));
    FactorElement xs = split_x(Ks, make_rat(2));
    FactorElement xf = norm_one_x(Kf, make_rat(1), make_rat(1));
    std::vector<StableFactor> fs{{Ks, xs}, {Kf, xf}};
    std::vector<FactorElement> elems{Ks.make(Ks.base().from_rat(make_rat(2)), Ks.base().one()),
                                     Kf.make(Kf.base().from_rat(make_rat(1)), Kf.base().from_rat(make_rat(2)))};
    CHECK(norm_to_F(fs, elems) == make_rat(2) * (Rat(1) - Rat(3) * Rat(4)));
    auto knat = norm_to_knat(fs, elems);
    CHECK(knat[0].a == 2);
    CHECK(knat[1].a == Rat(1) - Rat(3) * Rat(4));
    CHECK_THROWS_AS(norm_to_F(fs, {elems[0]}), InvariantViolation);
}
