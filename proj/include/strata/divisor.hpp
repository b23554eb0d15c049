#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "strata/signature.hpp"

namespace strata {

/// Formal generator of the divisor group: lambda, kappa, eta, psi_i, or a
/// named boundary symbol. Boundary symbols only support formal addition.
struct Generator {
    enum class Kind { lambda, kappa, eta, psi, boundary };

    Kind kind = Kind::lambda;
    int index = 0;          // psi only, 1-based marked point
    std::string name;       // boundary only

    static Generator lambda() { return {Kind::lambda, 0, {}}; }
    static Generator kappa() { return {Kind::kappa, 0, {}}; }
    static Generator eta() { return {Kind::eta, 0, {}}; }
    static Generator psi(int i) { return {Kind::psi, i, {}}; }
    static Generator boundary(std::string n) { return {Kind::boundary, 0, std::move(n)}; }

    std::string str() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Finite rational linear combination of generators. Zero coefficients are
/// never stored.
class DivisorClass {
public:
    DivisorClass() = default;
    /// Single term c * gen.
    DivisorClass(const Rational& c, const Generator& gen);

    const std::map<Generator, Rational>& terms() const { return terms_; }
    Rational coefficient(const Generator& gen) const;
    bool is_zero() const { return terms_.empty(); }

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);
    DivisorClass& operator*=(const Rational& c);
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Rational& c, DivisorClass a) { return a *= c; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

    /// `a*lambda + b1*psi1 + ...`; rational literals as p/q; "0" when empty.
    std::string str() const;
    static DivisorClass parse(std::string_view text);

private:
    std::map<Generator, Rational> terms_;
};

/// Injective assignment of marked points 1..r to positions in mu.
class MarkingMap {
public:
    /// Throws MarkingMismatch unless positions are distinct and within mu.
    MarkingMap(std::vector<int> positions, const Signature& s);
    static MarkingMap all_points(const Signature& s);
    static MarkingMap none() { return MarkingMap(); }

    int arity() const { return static_cast<int>(positions_.size()); }
    int position(int marked_index) const;  // 1-based on both sides
    std::span<const int> positions() const { return positions_; }

private:
    MarkingMap() = default;
    std::vector<int> positions_;
};

/// Writes c as r * eta on the open stratum, using eta = (m_i+k) psi_i,
/// lambda = (kappa_mu/12) eta, kappa = kappa_mu eta. Boundary symbols do
/// not reduce.
Rational reduce_to_eta(const Signature& s, const DivisorClass& c);

/// Coefficient of eta in the pullback of a*lambda + sum_j b_j psi_j under
/// the given marking: a*kappa_mu/12 + sum_j b_j/(m_{sigma(j)}+k).
Rational pullback_coefficient(const Signature& s, const MarkingMap& marking,
                              const Rational& a, std::span<const Rational> b);

/// The same coefficient in expanded form for the all-points marking:
/// (1/12)((2g-2+n)a/k + sum_i (12 b_i - a)/(m_i+k)). Kept as a second,
/// independently evaluated route; the two are cross-checked by tests.
Rational pullback_coefficient_expanded(const Signature& s, const Rational& a,
                                       std::span<const Rational> b);

}  // namespace strata
