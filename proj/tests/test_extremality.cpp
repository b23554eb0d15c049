#include <doctest.h>

#include <random>

#include "random_signatures.hpp"
#include "strata/extremality.hpp"

using strata::MergeReport;
using strata::Rational;
using strata::Signature;

TEST_CASE("merging two zeros") {
    Signature s = Signature::validate(2, 1, {1, 1});
    CHECK(merge_zeros(s, 1, 2) == Signature::validate(2, 1, {2}));

    // merged order 0 stays in the signature, flagged downstream
    Signature q = Signature::validate(3, 2, {5, 3, 1, -1});
    Signature merged = merge_zeros(q, 3, 4);
    CHECK(merged.has_zero_order());
    CHECK(merged == Signature::validate_allowing_zero_orders(3, 2, {0, 5, 3}));

    CHECK(merge_zeros(Signature::validate(2, 1, {3, -1}), 1, 2) ==
          Signature::validate(2, 1, {2}));

    CHECK_THROWS_AS(merge_zeros(s, 1, 1), strata::InvalidPositions);
    CHECK_THROWS_AS(merge_zeros(s, 0, 2), strata::InvalidPositions);
    CHECK_THROWS_AS(merge_zeros(Signature::validate(1, 1, {2, -3, 1}), 1, 2),
                    strata::MergedMinusK);
}

TEST_CASE("merging coefficient on the worked pairs") {
    CHECK(merging_coefficient(Signature::validate(2, 1, {1, 1}), 1, 2) == Rational(1));
    CHECK(merging_coefficient(Signature::validate(3, 1, {1, 2, 1}), 1, 2) == Rational(5, 3));
    CHECK(merging_coefficient(Signature::validate(1, 2, {-1, 1}), 1, 2) == Rational(-2, 3));
    CHECK_THROWS_AS(merging_coefficient(Signature::validate(2, 3, {3, 3}), 1, 2),
                    strata::UnsupportedK);
    CHECK_THROWS_AS(merging_coefficient(Signature::validate(1, 1, {2, -1, -1}), 1, 2),
                    strata::MinusKEntry);
}

TEST_CASE("kappa difference comes from the kappa definition") {
    CHECK(kappa_difference(Signature::validate(2, 1, {1, 1}), 1, 2) == Rational(-1, 3));
    CHECK(kappa_difference(Signature::validate(1, 2, {-1, 1}), 1, 2) == Rational(1, 3));
}

TEST_CASE("intersection ratio") {
    CHECK(teichmueller_ratio(Signature::validate(2, 1, {1, 1}), 1, 2) == Rational(-1, 3));
    CHECK(teichmueller_ratio(Signature::validate(1, 2, {-1, 1}), 1, 2) == Rational(-1, 2));
    CHECK(teichmueller_ratio(Signature::validate(5, 1, {3, 5}), 1, 2) == Rational(-1, 9));
}

TEST_CASE("the three scalars satisfy the exact identities on random input") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pos(1, 6);
    int done = 0;
    while (done < 1000) {
        int k = (done % 2) + 1;
        strata::testing::SignatureOptions opt{.k = k, .min_entries = 2};
        Signature s = strata::testing::random_signature(rng, opt);
        int i = pos(rng) % s.n() + 1, j = pos(rng) % s.n() + 1;
        if (i == j) continue;
        if (s.order(i) + s.order(j) == -k || s.order(i) + s.order(j) == 0) continue;
        Rational coeff = merging_coefficient(s, i, j);
        Rational diff = kappa_difference(s, i, j);
        Rational ratio = teichmueller_ratio(s, i, j);
        CHECK(coeff == Rational(-(s.order(i) + s.order(j) + k)) * diff);
        CHECK(ratio * coeff == diff);
        if (!coeff.is_zero()) CHECK(diff / coeff == ratio);
        bool hypothesis = k == 1 ? (s.order(i) >= 1 && s.order(j) >= 1)
                                 : (s.order(i) >= -1 && s.order(j) >= -1 &&
                                    (s.order(i) > 0 || s.order(j) > 0));
        if (hypothesis) {
            CHECK(ratio < Rational(0));
            if (k == 1) CHECK(coeff > Rational(0));
        }
        ++done;
    }
}

TEST_CASE("extremality report lists every pair") {
    auto reports = extremality_report(Signature::validate(2, 1, {1, 1}));
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].coefficient == Rational(1));
    CHECK(reports[0].ratio == Rational(-1, 3));
    CHECK(reports[0].extremal_hypothesis);

    auto quad = extremality_report(Signature::validate(3, 2, {10, -1, -1}));
    REQUIRE(quad.size() == 3);
    CHECK(quad[0].extremal_hypothesis);       // (10,-1)
    CHECK(quad[1].extremal_hypothesis);       // (10,-1)
    CHECK_FALSE(quad[2].extremal_hypothesis); // (-1,-1): both nonpositive

    CHECK(extremality_report(Signature::validate(2, 1, {2})).empty());
    CHECK_THROWS_AS(extremality_report(Signature::validate(2, 3, {3, 3})),
                    strata::UnsupportedK);

    // a pair whose merged order hits -k is reported without scalars
    auto degenerate = extremality_report(Signature::validate(1, 1, {2, -3, 1}));
    REQUIRE(degenerate.size() == 3);
    CHECK_FALSE(degenerate[0].coefficient.has_value());  // (2,-3) merges to -1
    CHECK_FALSE(degenerate[0].extremal_hypothesis);
    CHECK_FALSE(degenerate[0].note.empty());
    CHECK(degenerate[1].coefficient.has_value());        // (2,1) is fine
}
