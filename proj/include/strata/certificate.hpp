#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "strata/catalog.hpp"
#include "strata/divisor.hpp"
#include "strata/signature.hpp"

namespace strata {

enum class Verdict { TrivialTautologicalRing, Affine, EtaNontrivial, Inconclusive };

std::string_view verdict_name(Verdict v);
Verdict verdict_from_name(std::string_view name);

/// Divisor disjoint from the stratum pulled back to a nonzero multiple of eta.
struct DisjointDivisorWitness {
    std::string divisor;
    Rational coefficient;
};

/// Trivialized ample class kappa + sum psi_i + a psi_1 with a >= 0.
struct InfiniteAreaWitness {
    Rational a;
    int pole_position = 1;           // chosen entry <= -k, 1-based
    std::string trivialized_class;   // divisor-class text
};

struct LowGenusWitness {
    std::string reason;
};

/// Filtration route: triviality needs L != kappa_mu/12.
struct HNWitness {
    Rational kappa_over_12;
    std::optional<Rational> supplied_l;
};

/// Distinct Lyapunov-exponent sums found within one stratum component.
struct VaryingWitness {
    std::vector<Rational> sums;
};

using Witness = std::variant<DisjointDivisorWitness, InfiniteAreaWitness, LowGenusWitness,
                             HNWitness, VaryingWitness>;

std::string_view witness_kind(const Witness& w);

struct Certificate {
    Signature stratum;
    Verdict verdict;
    Witness witness;
    std::vector<std::string> assumptions;
    std::string ref;  // provenance label: catalog section or method name

    nlohmann::ordered_json to_json() const;
    static Certificate from_json(const nlohmann::ordered_json& j);
};

/// Prop-2.1 route: nonzero pullback coefficient of a divisor disjoint from
/// the stratum makes the tautological ring trivial.
Certificate certify_disjoint_divisor(const Signature& s, const CatalogEntry& entry);

/// Upgrades TrivialTautologicalRing to Affine (idempotent on Affine).
Certificate certify_affine(const Certificate& c);

/// Strata with an entry <= -k: kappa + sum psi_i + a psi_1 is ample and
/// trivial, a = -(2g-2+n)(m_1+k)/k >= 0.
Certificate certify_infinite_area(const Signature& s);

/// Genus <= 2 and hyperelliptic components.
Certificate certify_low_genus(const Signature& s);

/// Filtration strata: TrivialTautologicalRing iff a supplied L differs from
/// kappa_mu/12; without L, Inconclusive carrying the required inequality.
Certificate certify_hn(const Signature& s, const std::optional<Rational>& supplied_l);

}  // namespace strata
