#include "strata/extremality.hpp"

#include <cassert>

namespace strata {

namespace {

void check_positions(const Signature& s, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > s.n() || j > s.n())
        throw InvalidPositions("need two distinct positions within 1.." + std::to_string(s.n()));
}

void check_mergeable(const Signature& s, int i, int j) {
    check_positions(s, i, j);
    if (s.order(i) + s.order(j) == -s.k())
        throw MergedMinusK("merged order would equal -k");
}

void check_kappa_context(const Signature& s, int i, int j) {
    if (s.k() > 2)
        throw UnsupportedK("no Teichmueller curves for k >= 3; merging scalars limited to k in {1,2}");
    check_positions(s, i, j);
    if (s.has_minus_k_entry()) throw MinusKEntry("entries must differ from -k");
    if (s.order(i) + s.order(j) == -s.k())
        throw MergedMinusK("merged order would equal -k");
}

}  // namespace

Signature merge_zeros(const Signature& s, int i, int j) {
    check_mergeable(s, i, j);
    std::vector<int> orders;
    orders.reserve(static_cast<size_t>(s.n() - 1));
    orders.push_back(s.order(i) + s.order(j));
    for (int t = 1; t <= s.n(); ++t)
        if (t != i && t != j) orders.push_back(s.order(t));
    return Signature::validate_allowing_zero_orders(s.genus(), s.k(), std::move(orders));
}

Rational merging_coefficient(const Signature& s, int i, int j) {
    check_kappa_context(s, i, j);
    const int k = s.k();
    const int mi = s.order(i), mj = s.order(j), merged = mi + mj;
    Rational inner = Rational(1, k) - Rational(1, mi + k) - Rational(1, mj + k) +
                     Rational(1, merged + k);
    return Rational(merged + k) * inner;
}

Rational kappa_difference(const Signature& s, int i, int j) {
    check_kappa_context(s, i, j);
    return merge_zeros(s, i, j).kappa_mu() - s.kappa_mu();
}

Rational teichmueller_ratio(const Signature& s, int i, int j) {
    check_kappa_context(s, i, j);
    Rational ratio = -Rational(1, s.order(i) + s.order(j) + s.k());
    assert(ratio * merging_coefficient(s, i, j) == kappa_difference(s, i, j));
    return ratio;
}

std::vector<MergeReport> extremality_report(const Signature& s) {
    if (s.k() > 2)
        throw UnsupportedK("no Teichmueller curves for k >= 3; report limited to k in {1,2}");
    std::vector<MergeReport> out;
    const int k = s.k();
    for (int i = 1; i <= s.n(); ++i) {
        for (int j = i + 1; j <= s.n(); ++j) {
            MergeReport r{.source = s, .i = i, .j = j};
            const int mi = s.order(i), mj = s.order(j);
            r.extremal_hypothesis = k == 1 ? (mi >= 1 && mj >= 1)
                                           : (mi >= -1 && mj >= -1 && (mi > 0 || mj > 0));
            if (mi + mj == -k) {
                r.note = "merged order equals -k; scalars undefined";
                out.push_back(std::move(r));
                continue;
            }
            r.merged = merge_zeros(s, i, j);
            if (mi == -k || mj == -k || s.has_minus_k_entry()) {
                r.note = "an entry equals -k; kappa arithmetic undefined";
                out.push_back(std::move(r));
                continue;
            }
            r.coefficient = merging_coefficient(s, i, j);
            r.kappa_difference = kappa_difference(s, i, j);
            r.ratio = teichmueller_ratio(s, i, j);
            if (r.merged->has_zero_order())
                r.note = "merged order 0 leaves the k-differential setting";
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace strata
