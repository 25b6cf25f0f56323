#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpsign/conjclass.hpp"

using namespace mpsign;

namespace {

const LocalField F5 = LocalField::padic(5);

InvolutiveFactor t1_split() { return InvolutiveFactor::make_split(BaseField::ground(F5)); }

InvolutiveFactor t1_field(const Rat& D) {
    BaseField B = BaseField::ground(F5);
    return InvolutiveFactor::make_field(B, B.from_rat(D));
}

FactorElement split_x(const InvolutiveFactor& K, const Rat& t) {
    return K.make(K.base().from_rat(t), K.base().from_rat(Rat(1) / t));
}

FactorElement skew_split(const InvolutiveFactor& K, const Rat& e) {
    return K.make(K.base().from_rat(e), K.base().from_rat(-e));
}

SpClassDatum sample_datum() {
    InvolutiveFactor Ks = t1_split();
    InvolutiveFactor Kf = t1_field(make_rat(2));
    FactorElement omega = Kf.make(Kf.base().from_rat(make_rat(1)), Kf.base().from_rat(make_rat(2)));
    FactorElement xf = Kf.mul(omega, Kf.inv(Kf.tau(omega)));
    return SpClassDatum(F5, {{Ks, split_x(Ks, make_rat(3)), skew_split(Ks, make_rat(1))},
                             {Kf, xf, Kf.make(Kf.base().zero(), Kf.base().one())}});
}

} // namespace

TEST_CASE("elliptic data enumeration") {
    auto data2 = enumerate_elliptic_data(2);
    REQUIRE(data2.size() == 3);
    CHECK(data2[0] == EndoscopicDatum{0, 2});
    CHECK(data2[1] == EndoscopicDatum{1, 1});
    CHECK(data2[2] == EndoscopicDatum{2, 0});
    CHECK(enumerate_elliptic_data(0) == std::vector<EndoscopicDatum>{{0, 0}});
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_elliptic_data(n).size() == static_cast<std::size_t>(n) + 1);
    CHECK_THROWS_AS(enumerate_elliptic_data(-1), InvariantViolation);
}

TEST_CASE("split correspondence carries the sign on the second side") {
    SpClassDatum delta = sample_datum();

    // everything to the second side: x is negated factorwise
    auto pair = split_correspondence(delta, {Side::DoublePrime, Side::DoublePrime});
    CHECK(pair.datum == EndoscopicDatum{0, 2});
    CHECK(pair.gamma_prime.factors().empty());
    REQUIRE(pair.gamma_double_prime.factors().size() == 2);
    const auto& f0 = pair.gamma_double_prime.factors()[0];
    CHECK(f0.x == f0.algebra.neg(delta.factors()[0].x));
    CHECK(f0.x.u.a == make_rat(-3));
    CHECK(f0.x.v.a == make_rat(-1, 3));

    // everything to the first side: x unchanged
    auto pair_p = split_correspondence(delta, {Side::Prime, Side::Prime});
    CHECK(pair_p.datum == EndoscopicDatum{2, 0});
    CHECK(pair_p.gamma_prime.factors()[0].x == delta.factors()[0].x);

    // declared datum must match the partition dimensions
    CHECK_THROWS_AS(
        split_correspondence(delta, {Side::Prime, Side::Prime}, EndoscopicDatum{0, 2}),
        InvariantViolation);
    CHECK_THROWS_AS(split_correspondence(delta, {Side::Prime}), InvariantViolation);
}

TEST_CASE("split correspondence rejects non-regular input") {
    InvolutiveFactor Ks = t1_split();
    FactorElement x = split_x(Ks, make_rat(3));
    SpClassDatum bad(F5, {{Ks, x, skew_split(Ks, make_rat(1))},
                          {Ks, x, skew_split(Ks, make_rat(2))}});
    CHECK_THROWS_AS(split_correspondence(bad, {Side::Prime, Side::DoublePrime}),
                    InvariantViolation);
}

TEST_CASE("round trip through reassembly") {
    SpClassDatum delta = sample_datum();
    for (auto partition : {std::vector<Side>{Side::Prime, Side::DoublePrime},
                           std::vector<Side>{Side::DoublePrime, Side::Prime},
                           std::vector<Side>{Side::Prime, Side::Prime}}) {
        auto pair = split_correspondence(delta, partition);
        StableClassDatum back = reassemble(pair.gamma_prime, pair.gamma_double_prime);
        REQUIRE(back.factors().size() == delta.factors().size());
        // reassembly lists gamma' factors first; match as multisets of (K, x)
        std::vector<bool> used(delta.factors().size(), false);
        for (const auto& f : back.factors()) {
            bool found = false;
            for (std::size_t j = 0; j < delta.factors().size() && !found; ++j) {
                if (used[j]) continue;
                if (delta.factors()[j].algebra == f.algebra && delta.factors()[j].x == f.x) {
                    used[j] = true;
                    found = true;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("double application of the sign twist is the identity") {
    SpClassDatum delta = sample_datum();
    auto pair = split_correspondence(delta, {Side::DoublePrime, Side::DoublePrime});
    std::vector<StableFactor> twice;
    for (const auto& f : pair.gamma_double_prime.factors())
        twice.push_back({f.algebra, f.algebra.neg(f.x)});
    for (std::size_t i = 0; i < twice.size(); ++i) CHECK(twice[i].x == delta.factors()[i].x);
}

TEST_CASE("G-regularity of a pair") {
    SpClassDatum delta = sample_datum();
    auto pair = split_correspondence(delta, {Side::Prime, Side::DoublePrime});
    CHECK(is_g_regular(pair.gamma_prime, pair.gamma_double_prime, 2));
    CHECK(!is_g_regular(pair.gamma_prime, pair.gamma_double_prime, 3)); // dimension mismatch

    // sharing eigenvalues after the sign flip kills regularity
    InvolutiveFactor Ks = t1_split();
    StableClassDatum gp(F5, {{Ks, split_x(Ks, make_rat(3))}});
    StableClassDatum gdp(F5, {{Ks, split_x(Ks, make_rat(-3))}}); // -x recovers (3, 1/3)
    CHECK(!is_g_regular(gp, gdp, 2));

    // empty second side
    StableClassDatum empty(F5, {});
    CHECK(is_g_regular(gp, empty, 1));
}

TEST_CASE("centralizer descriptors match across the correspondence") {
    SpClassDatum delta = sample_datum();
    auto labels_delta = centralizer_descriptor(delta.stable());
    REQUIRE(labels_delta.size() == 2);
    CHECK(labels_delta[0].rfind("GL(1) over ", 0) == 0);
    CHECK(labels_delta[1].rfind("ker N over ", 0) == 0);

    auto pair = split_correspondence(delta, {Side::Prime, Side::DoublePrime});
    auto labels_gamma = centralizer_descriptor(
        reassemble(pair.gamma_prime, pair.gamma_double_prime));
    CHECK(labels_gamma == labels_delta);
}
