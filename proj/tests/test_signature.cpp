#include <doctest.h>

#include <algorithm>
#include <random>

#include "random_signatures.hpp"
#include "strata/signature.hpp"

using strata::Component;
using strata::Rational;
using strata::Signature;

TEST_CASE("degree condition gates validation") {
    Signature s = Signature::validate(2, 1, {2});
    CHECK(s.n() == 1);
    CHECK_NOTHROW(Signature::validate(3, 2, {9, -1}));
    CHECK_THROWS_AS(Signature::validate(2, 1, {3}), strata::DegreeMismatch);
    CHECK_THROWS_AS(Signature::validate(2, 1, {2, 0}), strata::ZeroOrderEntry);
    CHECK_NOTHROW(Signature::validate_allowing_zero_orders(2, 1, {2, 0}));
    CHECK_NOTHROW(Signature::validate(1, 3, {}));  // empty mu, genus 1
    CHECK_THROWS_AS(Signature::validate(2, 1, {}), strata::DegreeMismatch);
}

TEST_CASE("kappa_mu on the worked strata") {
    CHECK(Signature::validate(2, 1, {2}).kappa_mu() == Rational(8, 3));
    CHECK(Signature::validate(3, 1, {2, 1, 1}).kappa_mu() == Rational(17, 3));
    CHECK(Signature::validate(3, 2, {9, -1}).kappa_mu() == Rational(21, 11));
    CHECK(Signature::validate(3, 1, {4}, Component::odd).kappa_mu() == Rational(24, 5));
    CHECK_THROWS_AS(Signature::validate(1, 2, {2, -2}).kappa_mu(), strata::MinusKEntry);
}

TEST_CASE("dimension uses the primitive convention") {
    CHECK(Signature::validate(2, 1, {1, 1}).dimension() == 4);
    CHECK(Signature::validate(3, 2, {8}).dimension() == 4);
    CHECK(Signature::validate_allowing_zero_orders(1, 1, {0}).dimension() == 1);
}

TEST_CASE("infinite area means an entry <= -k") {
    CHECK(Signature::validate(2, 1, {4, -2}).infinite_area());
    CHECK_FALSE(Signature::validate(3, 2, {9, -1}).infinite_area());
    CHECK(Signature::validate(1, 2, {2, -2}).infinite_area());
}

TEST_CASE("component labels parse and print") {
    Signature s = Signature::parse("k=1 g=3 mu=4^odd");
    CHECK(s.component() == Component::odd);
    CHECK(s.str() == "k=1 g=3 mu=4^odd");
    CHECK(Signature::parse("k=1 g=1 mu=()").n() == 0);
    CHECK(Signature::parse("k=2 g=3 mu=9,-1^irr").order(2) == -1);
    CHECK_THROWS_AS(Signature::parse("k=1 g=3 mu=4^bogus"), strata::ParseError);
    CHECK_THROWS_AS(Signature::parse("g=3 k=1 mu=4"), strata::ParseError);
    CHECK_THROWS_AS(Signature::parse("k=1 g=3"), strata::ParseError);
    CHECK_THROWS_AS(Signature::parse("k=1 g=3 mu=2,"), strata::ParseError);
}

TEST_CASE("equality sorts the orders and compares components") {
    CHECK(Signature::validate(3, 1, {2, 1, 1}) == Signature::validate(3, 1, {1, 2, 1}));
    CHECK(Signature::validate(3, 1, {4}, Component::odd) !=
          Signature::validate(3, 1, {4}, Component::hyp));
    CHECK(Signature::validate(2, 1, {2}) != Signature::validate(2, 2, {2, 1, 1}));
}

TEST_CASE("holomorphic kappa_mu identity: sum of m(m+2)/(m+1)") {
    std::mt19937_64 rng(11);
    strata::testing::SignatureOptions opt{.k = 1, .allow_poles = false};
    for (int t = 0; t < 300; ++t) {
        Signature s = strata::testing::random_signature(rng, opt);
        Rational direct = s.kappa_mu();
        Rational identity(0);
        for (int m : s.orders())
            identity += Rational(m * (m + 2), m + 1);
        CHECK(direct == identity);
    }
}

TEST_CASE("kappa_mu is invariant under permuting the orders") {
    std::mt19937_64 rng(13);
    for (int k : {1, 2, 3}) {
        strata::testing::SignatureOptions opt{.k = k};
        for (int t = 0; t < 100; ++t) {
            Signature s = strata::testing::random_signature(rng, opt);
            std::vector<int> shuffled(s.orders().begin(), s.orders().end());
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            Signature p = Signature::validate(s.genus(), s.k(), shuffled);
            CHECK(s.kappa_mu() == p.kappa_mu());
            CHECK(s == p);
        }
    }
}

TEST_CASE("serialize then parse round-trips") {
    std::mt19937_64 rng(17);
    for (int k : {1, 2, 5}) {
        strata::testing::SignatureOptions opt{.k = k, .forbid_minus_k = false};
        for (int t = 0; t < 100; ++t) {
            Signature s = strata::testing::random_signature(rng, opt);
            Signature back = Signature::parse(s.str());
            CHECK(back == s);
            CHECK(back.str() == s.str());
        }
    }
}
