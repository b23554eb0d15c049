#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "strata/certificate.hpp"
#include "strata/rational.hpp"
#include "strata/signature.hpp"

namespace strata {

/// Permutation of {0..n-1}, stored by images.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    /// 1-based cycle notation `(1,2)(3)`. Labels above the largest one
    /// mentioned are fixed points when n is given; otherwise n is the
    /// largest label.
    static Permutation parse_cycles(std::string_view text, int n = 0);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    /// (a*b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    std::vector<std::vector<int>> cycles() const;
    /// 1-based cycle notation, fixed points printed as singletons.
    std::string cycle_str() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

struct Cylinder {
    int width = 0;   // circumference
    int height = 0;  // number of stacked rows

    friend auto operator<=>(const Cylinder&, const Cylinder&) = default;
};

struct CylinderDecomposition {
    std::vector<Cylinder> cylinders;  // sorted ascending

    /// sum of height/width over cylinders, exact.
    Rational moduli_sum() const;
};

/// Square-tiled surface: h(i) is the square right of i, v(i) the square
/// above i. Connectedness (transitivity of <h,v>) is enforced on
/// construction; instances are immutable.
class Origami {
public:
    Origami(Permutation h, Permutation v);

    int squares() const { return h_.size(); }
    const Permutation& horizontal() const { return h_; }
    const Permutation& vertical() const { return v_; }

    /// Cone orders from the commutator h v h^-1 v^-1 (cycle length - 1),
    /// descending, zeros of order 0 retained.
    std::vector<int> cone_orders() const;

    /// Stratum identity: order-0 entries dropped, k=1, genus from the
    /// degree condition.
    Signature stratum() const;

    /// Lexicographically minimal relabeling over BFS orders from every
    /// base square; complete invariant of simultaneous relabeling.
    Origami canonical() const;

    /// Horizontal shear: (h, v) -> (h, v h^-1). Fixes the commutator.
    Origami sheared() const;
    /// Quarter turn: (h, v) -> (v, h^-1). Conjugates the commutator.
    Origami rotated() const;

    /// Cylinders of the horizontal foliation; rows stack until a corner
    /// singularity interrupts the band.
    CylinderDecomposition horizontal_cylinders() const;

    /// Arf invariant of the induced spin structure; defined only when all
    /// cone orders are even (throws OddOrderZero otherwise). 1 = odd.
    int spin_parity() const;

    friend auto operator<=>(const Origami&, const Origami&) = default;

private:
    Permutation h_, v_;
};

struct OrbitData {
    std::vector<Origami> representatives;  // canonical forms, sorted

    size_t size() const { return representatives.size(); }
};

/// Closure of the canonical class under the two generator moves.
OrbitData sl2_orbit(const Origami& o);

/// All transitive (h, v) on `squares` squares whose stratum matches
/// `target`, one canonical representative per relabeling class, sorted.
/// A target component `odd`/`even` filters by spin parity; the other
/// component labels are not detectable here.
std::vector<Origami> enumerate_origamis(int squares, const Signature& target);

struct LyapunovReport {
    Signature stratum;
    size_t orbit_size = 0;
    Rational kappa_term;  // kappa_mu / 12
    Rational sv_term;     // orbit average of the cylinder moduli sums
    Rational total;       // kappa_term + sv_term
};

/// Exact sum of Lyapunov exponents of the arithmetic Teichmueller curve
/// generated by o.
LyapunovReport lyapunov_sum(const Origami& o);

struct VaryingGroup {
    std::optional<int> parity;    // nullopt when parity is undefined
    size_t orbit_count = 0;
    std::vector<Rational> sums;   // distinct Lyapunov sums, sorted
};

struct VaryingReport {
    Signature stratum;
    int max_squares = 0;
    size_t class_count = 0;
    std::vector<VaryingGroup> groups;
    bool varying = false;
    std::optional<Certificate> certificate;  // EtaNontrivial when varying
};

/// Enumerates every orbit with at most max_squares squares, groups by spin
/// parity when defined, and reports the distinct Lyapunov sums per group.
/// Two distinct sums in one group certify that eta is nontrivial; a
/// singleton is only consistent with nonvarying, never a proof.
VaryingReport varying_test(const Signature& target, int max_squares);

}  // namespace strata
