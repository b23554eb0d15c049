#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

/// Scalars of the merging-zeros degeneration for one unordered pair of
/// positions. The three rationals are absent only for pairs where an entry
/// or the merged order hits -k, which puts them outside kappa arithmetic.
struct MergeReport {
    Signature source;
    int i = 0, j = 0;  // 1-based positions, i < j
    std::optional<Signature> merged;
    std::optional<Rational> coefficient;
    std::optional<Rational> kappa_difference;
    std::optional<Rational> ratio;
    bool extremal_hypothesis = false;
    std::string note;
};

/// mu' = (m_i + m_j, other entries), same g and k, component dropped.
/// A merged order of 0 is returned (it leaves the k-differential setting;
/// callers warn), a merged order of -k is rejected.
Signature merge_zeros(const Signature& s, int i, int j);

/// k=1: (M+1)(1 - 1/(m_i+1) - 1/(m_j+1) + 1/(M+1)); k=2 analogue with 1/2,
/// where M = m_i + m_j. Only k in {1,2} carries the Teichmueller-curve
/// argument.
Rational merging_coefficient(const Signature& s, int i, int j);

/// kappa_{mu'} - kappa_mu, computed from the kappa definition (not the
/// closed form).
Rational kappa_difference(const Signature& s, int i, int j);

/// -1/(m_i + m_j + k); equals kappa_difference / merging_coefficient
/// whenever the coefficient is nonzero.
Rational teichmueller_ratio(const Signature& s, int i, int j);

/// One report per unordered pair of positions. Pairs outside the
/// extremality hypotheses (k=1: both orders >= 1; k=2: both >= -1 with at
/// least one positive) are included with extremal_hypothesis = false.
std::vector<MergeReport> extremality_report(const Signature& s);

}  // namespace strata
