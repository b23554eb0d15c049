#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strata/divisor.hpp"
#include "strata/signature.hpp"

namespace strata {

struct Certificate;

/// Ambient moduli space of the disjoint divisor: genus, number of marked
/// points, optional spin cover sign.
struct Ambient {
    int genus = 0;
    int marked = 0;
    std::optional<char> spin;  // '+' or '-'

    std::string str() const;
};

/// One catalog record: a stratum together with the effective divisor
/// disjoint from it and the divisor's class a*lambda + sum b_j psi_j under
/// the stored marking. HN records carry no divisor and certify through the
/// filtration inequality instead.
struct CatalogEntry {
    std::string section;        // record label, e.g. "3.2"
    Signature stratum;
    Ambient ambient;
    std::string divisor_name;
    Rational a;
    std::vector<Rational> b;
    std::vector<int> marking;   // positions in mu, same length as b
    bool hn = false;
    bool ambient_as_printed = false;  // ambient kept verbatim despite genus mismatch

    MarkingMap marking_map() const { return MarkingMap(marking, stratum); }
    DivisorClass divisor_class() const;
};

/// Parses and validates the embedded catalog. Throws DataFileCorrupt.
const std::vector<CatalogEntry>& load_catalog();

/// Parse a catalog from text (exposed for tests and auditing).
std::vector<CatalogEntry> parse_catalog(std::string_view text);

/// Entry lookup by stratum (sorted-order + component match).
const CatalogEntry* find_catalog_entry(const Signature& s);

/// Issues one certificate per entry: disjoint-divisor entries get
/// TrivialTautologicalRing upgraded to Affine, HN entries get the
/// Inconclusive-with-inequality form. A vanishing coefficient would
/// falsify the transcription and throws CatalogContradiction.
std::vector<Certificate> verify_all();

}  // namespace strata
