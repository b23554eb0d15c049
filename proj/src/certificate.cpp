#include "strata/certificate.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace strata {

using nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::TrivialTautologicalRing: return "TrivialTautologicalRing";
        case Verdict::Affine: return "Affine";
        case Verdict::EtaNontrivial: return "EtaNontrivial";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return {};
}

Verdict verdict_from_name(std::string_view name) {
    for (Verdict v : {Verdict::TrivialTautologicalRing, Verdict::Affine, Verdict::EtaNontrivial,
                      Verdict::Inconclusive})
        if (verdict_name(v) == name) return v;
    throw ParseError("unknown verdict '" + std::string(name) + "'");
}

std::string_view witness_kind(const Witness& w) {
    struct Visitor {
        std::string_view operator()(const DisjointDivisorWitness&) { return "DisjointDivisor"; }
        std::string_view operator()(const InfiniteAreaWitness&) { return "InfiniteArea"; }
        std::string_view operator()(const LowGenusWitness&) { return "LowGenus"; }
        std::string_view operator()(const HNWitness&) { return "HN"; }
        std::string_view operator()(const VaryingWitness&) { return "Varying"; }
    };
    return std::visit(Visitor{}, w);
}

ordered_json Certificate::to_json() const {
    ordered_json w;
    w["kind"] = std::string(witness_kind(witness));
    if (const auto* d = std::get_if<DisjointDivisorWitness>(&witness)) {
        w["divisor"] = d->divisor;
        w["coefficient"] = d->coefficient.str();
    } else if (const auto* i = std::get_if<InfiniteAreaWitness>(&witness)) {
        w["a"] = i->a.str();
        w["pole_position"] = i->pole_position;
        w["trivialized_class"] = i->trivialized_class;
    } else if (const auto* l = std::get_if<LowGenusWitness>(&witness)) {
        w["reason"] = l->reason;
    } else if (const auto* h = std::get_if<HNWitness>(&witness)) {
        w["kappa_over_12"] = h->kappa_over_12.str();
        if (h->supplied_l) w["supplied_L"] = h->supplied_l->str();
    } else if (const auto* v = std::get_if<VaryingWitness>(&witness)) {
        ordered_json sums = ordered_json::array();
        for (const auto& s : v->sums) sums.push_back(s.str());
        w["sums"] = sums;
    }
    return ordered_json{{"stratum", stratum.str()},
                        {"verdict", std::string(verdict_name(verdict))},
                        {"witness", w},
                        {"assumptions", assumptions},
                        {"ref", ref}};
}

Certificate Certificate::from_json(const ordered_json& j) {
    const auto& w = j.at("witness");
    std::string kind = w.at("kind").get<std::string>();
    Witness witness;
    if (kind == "DisjointDivisor") {
        witness = DisjointDivisorWitness{w.at("divisor").get<std::string>(),
                                         Rational::parse(w.at("coefficient").get<std::string>())};
    } else if (kind == "InfiniteArea") {
        witness = InfiniteAreaWitness{Rational::parse(w.at("a").get<std::string>()),
                                      w.at("pole_position").get<int>(),
                                      w.at("trivialized_class").get<std::string>()};
    } else if (kind == "LowGenus") {
        witness = LowGenusWitness{w.at("reason").get<std::string>()};
    } else if (kind == "HN") {
        HNWitness h{Rational::parse(w.at("kappa_over_12").get<std::string>()), std::nullopt};
        if (w.contains("supplied_L")) h.supplied_l = Rational::parse(w.at("supplied_L").get<std::string>());
        witness = h;
    } else if (kind == "Varying") {
        VaryingWitness v;
        for (const auto& s : w.at("sums")) v.sums.push_back(Rational::parse(s.get<std::string>()));
        witness = v;
    } else {
        throw ParseError("unknown witness kind '" + kind + "'");
    }
    return Certificate{Signature::parse(j.at("stratum").get<std::string>()),
                       verdict_from_name(j.at("verdict").get<std::string>()),
                       std::move(witness),
                       j.at("assumptions").get<std::vector<std::string>>(),
                       j.at("ref").get<std::string>()};
}

Certificate certify_disjoint_divisor(const Signature& s, const CatalogEntry& entry) {
    std::vector<Rational> b = entry.b;
    Rational coeff = pullback_coefficient(entry.stratum, entry.marking_map(), entry.a, b);
    if (coeff.is_zero())
        return Certificate{s, Verdict::Inconclusive,
                           DisjointDivisorWitness{entry.divisor_name, coeff},
                           {"pullback of " + entry.divisor_name + " vanishes; no conclusion"},
                           entry.section};
    return Certificate{
        s, Verdict::TrivialTautologicalRing,
        DisjointDivisorWitness{entry.divisor_name, coeff},
        {"divisor " + entry.divisor_name + " is disjoint from the stratum (cited input, catalog " +
         entry.section + ")"},
        entry.section};
}

Certificate certify_affine(const Certificate& c) {
    if (c.verdict == Verdict::Affine) return c;
    if (c.verdict != Verdict::TrivialTautologicalRing)
        throw WrongVerdict("affinity upgrade needs a TrivialTautologicalRing certificate, got " +
                           std::string(verdict_name(c.verdict)));
    Certificate out = c;
    out.verdict = Verdict::Affine;
    out.assumptions.push_back(
        "kappa + sum psi_i is ample upstairs and trivial here, so it is supported on the boundary");
    return out;
}

Certificate certify_infinite_area(const Signature& s) {
    if (!s.infinite_area())
        throw NotInfiniteArea("no entry <= -k in " + s.str());
    // the trivialization lives on the marked moduli space, which needs
    // 2g-2+n > 0; the unstable genus-0 cases go through the genus-0 route
    if (2 * s.genus() - 2 + s.n() <= 0)
        throw NotApplicable("2g-2+n <= 0 for " + s.str() + "; use the low-genus certificate");
    // chosen entry: most negative, ties broken by position
    int pole_pos = 1;
    for (int i = 2; i <= s.n(); ++i)
        if (s.order(i) < s.order(pole_pos)) pole_pos = i;
    int m1 = s.order(pole_pos);
    Rational a = Rational(-(2 * s.genus() - 2 + s.n())) * Rational(m1 + s.k()) / Rational(s.k());

    DivisorClass trivial(Rational(1), Generator::kappa());
    for (int i = 1; i <= s.n(); ++i) trivial += DivisorClass(Rational(1), Generator::psi(i));
    trivial += DivisorClass(a, Generator::psi(pole_pos));

    return Certificate{s, Verdict::Affine,
                       InfiniteAreaWitness{a, pole_pos, trivial.str()},
                       {"the class above is ample upstairs (ample plus nef) and trivial on the stratum"},
                       "infinite-area"};
}

Certificate certify_low_genus(const Signature& s) {
    const bool hyp = s.component() == Component::hyp;
    std::string reason;
    if (hyp) {
        reason = "lambda is trivial on the hyperelliptic locus";
    } else if (s.genus() == 0) {
        reason = "genus 0: the moduli space of pointed rational curves has trivial Chow ring and is affine";
    } else if (s.genus() == 1) {
        reason = "genus 1: every psi class vanishes on the open moduli space";
    } else if (s.genus() == 2) {
        if (s.has_minus_k_entry())
            throw MinusKEntry("genus-2 route needs all entries != -k");
        reason = "genus 2: lambda vanishes on the open moduli space";
    } else {
        throw NotApplicable("genus >= 3 and not hyperelliptic: " + s.str());
    }
    return Certificate{s, Verdict::Affine, LowGenusWitness{reason},
                       {"tautological divisor classes vanish, so kappa + sum psi_i is supported on the boundary"},
                       "low-genus"};
}

Certificate certify_hn(const Signature& s, const std::optional<Rational>& supplied_l) {
    const CatalogEntry* entry = find_catalog_entry(s);
    if (entry == nullptr || !entry->hn)
        throw NotHNStratum(s.str() + " is not one of the filtration strata");
    Rational required = entry->stratum.kappa_mu() / 12;
    HNWitness w{required, supplied_l};
    if (supplied_l && *supplied_l != required)
        return Certificate{s, Verdict::TrivialTautologicalRing, w,
                           {"lambda = L*eta holds on the stratum by the filtration (cited input)",
                            "supplied L differs from kappa_mu/12, so eta is trivial"},
                           entry->section};
    std::vector<std::string> assumptions = {
        "triviality requires L != " + required.str() + " for the stratum constant L"};
    if (supplied_l)
        assumptions.push_back("supplied L equals kappa_mu/12; the two relations coincide");
    else
        assumptions.push_back("no L supplied; the stratum constant is external input" +
                              std::string(s.k() == 1 ? " (the origami lab estimates it: "
                                                       "`origami varying`)"
                                                     : ""));
    return Certificate{s, Verdict::Inconclusive, w, assumptions, entry->section};
}

}  // namespace strata
