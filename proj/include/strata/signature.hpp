#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// Connected-component label of a stratum. `generic` means unlabeled;
/// the other tags are attached only where the catalog lists them.
enum class Component { generic, hyp, nonhyp, odd, even, reg, irr };

std::string_view component_name(Component c);
Component component_from_name(std::string_view name);

/// Signature mu of a stratum of k-differentials: genus, order k, and the
/// ordered list of zero/pole orders with sum k(2g-2). Immutable after
/// construction.
class Signature {
public:
    /// Checks the degree condition and rejects zero-order entries.
    static Signature validate(int genus, int order_k, std::vector<int> orders,
                              Component component = Component::generic);

    /// Same checks but permits entries equal to 0 (marked regular points);
    /// used by the origami lab and by zero merging.
    static Signature validate_allowing_zero_orders(int genus, int order_k,
                                                   std::vector<int> orders,
                                                   Component component = Component::generic);

    int genus() const { return genus_; }
    int k() const { return k_; }
    int n() const { return static_cast<int>(orders_.size()); }
    std::span<const int> orders() const { return orders_; }
    int order(int position) const;  // 1-based
    Component component() const { return component_; }

    /// kappa_mu = (1/k)(2g-2+n) - sum 1/(m_i+k). Throws MinusKEntry.
    Rational kappa_mu() const;

    /// Projectivized dimension: 2g-2+n for k=1, 2g-3+n for k>=2
    /// (primitive convention; informational only).
    int dimension() const;

    /// True iff some entry is <= -k.
    bool infinite_area() const;

    bool has_minus_k_entry() const;
    bool has_zero_order() const;
    /// All entries >= 1 (nonempty).
    bool holomorphic() const;

    /// `k=<k> g=<g> mu=<m1,m2,...>[^<component>]`; empty mu prints as `()`.
    std::string str() const;
    static Signature parse(std::string_view text);

    /// Same stratum: equal (g, k), equal sorted orders, equal component.
    friend bool operator==(const Signature& a, const Signature& b);
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

private:
    Signature(int genus, int order_k, std::vector<int> orders, Component component);

    int genus_;
    int k_;
    std::vector<int> orders_;
    Component component_;
};

}  // namespace strata
