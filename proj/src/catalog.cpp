#include "strata/catalog.hpp"

#include <sstream>

#include "strata/certificate.hpp"
#include "catalog_data.hpp"  // generated: kCatalogText

namespace strata {

std::string Ambient::str() const {
    std::ostringstream os;
    os << "g=" << genus << " n=" << marked;
    if (spin) os << " spin=" << *spin;
    return os.str();
}

DivisorClass CatalogEntry::divisor_class() const {
    DivisorClass c(a, Generator::lambda());
    for (size_t j = 0; j < b.size(); ++j)
        c += DivisorClass(b[j], Generator::psi(marking[j]));
    return c;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return {};
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string part;
    while (std::getline(is, part, sep)) out.push_back(trim(part));
    return out;
}

[[noreturn]] void corrupt(int lineno, const std::string& why) {
    throw DataFileCorrupt("catalog line " + std::to_string(lineno) + ": " + why);
}

Ambient parse_ambient(const std::string& text, int lineno) {
    Ambient amb;
    std::istringstream is(text);
    std::string tok;
    bool have_g = false, have_n = false;
    while (is >> tok) {
        if (tok.rfind("g=", 0) == 0) {
            amb.genus = std::stoi(tok.substr(2));
            have_g = true;
        } else if (tok.rfind("n=", 0) == 0) {
            amb.marked = std::stoi(tok.substr(2));
            have_n = true;
        } else if (tok == "spin=-" || tok == "spin=+") {
            amb.spin = tok.back();
        } else {
            corrupt(lineno, "bad ambient token '" + tok + "'");
        }
    }
    if (!have_g || !have_n) corrupt(lineno, "ambient needs g= and n=");
    return amb;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(std::string_view text) {
    std::vector<CatalogEntry> entries;
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto fields = split(t, '|');
        if (fields.size() != 8) corrupt(lineno, "expected 8 fields, got " + std::to_string(fields.size()));

        CatalogEntry e{.section = fields[0],
                       .stratum = Signature::validate(1, 1, {}),  // placeholder, replaced below
                       .ambient = {},
                       .divisor_name = fields[3],
                       .a = Rational(0),
                       .b = {},
                       .marking = {},
                       .hn = false,
                       .ambient_as_printed = false};
        try {
            e.stratum = Signature::parse(fields[1]);
        } catch (const Error& err) {
            corrupt(lineno, err.what());
        }
        if (fields[7] != "-")
            for (const auto& flag : split(fields[7], ',')) {
                if (flag == "hn") e.hn = true;
                else if (flag == "ambient-as-printed") e.ambient_as_printed = true;
                else corrupt(lineno, "unknown flag '" + flag + "'");
            }

        if (e.hn) {
            if (fields[2] != "-" || fields[3] != "-" || fields[4] != "-")
                corrupt(lineno, "hn records carry no divisor data");
            e.divisor_name.clear();
            entries.push_back(std::move(e));
            continue;
        }

        e.ambient = parse_ambient(fields[2], lineno);
        if (!e.ambient_as_printed && e.ambient.genus != e.stratum.genus())
            corrupt(lineno, "ambient genus differs from stratum genus");
        if (e.divisor_name.empty() || e.divisor_name == "-")
            corrupt(lineno, "missing divisor name");
        try {
            e.a = Rational::parse(fields[4]);
            if (fields[5] != "-")
                for (const auto& part : split(fields[5], ',')) e.b.push_back(Rational::parse(part));
            if (fields[6] != "-")
                for (const auto& part : split(fields[6], ',')) e.marking.push_back(std::stoi(part));
        } catch (const Error& err) {
            corrupt(lineno, err.what());
        }
        if (e.b.size() != e.marking.size())
            corrupt(lineno, "marking arity differs from psi coefficient count");
        if (static_cast<int>(e.marking.size()) != e.ambient.marked)
            corrupt(lineno, "marking arity differs from ambient marked-point count");
        try {
            e.marking_map();
        } catch (const Error& err) {
            corrupt(lineno, err.what());
        }
        entries.push_back(std::move(e));
    }
    if (entries.empty()) throw DataFileCorrupt("catalog has no records");
    return entries;
}

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = parse_catalog(kCatalogText);
    return entries;
}

const CatalogEntry* find_catalog_entry(const Signature& s) {
    for (const auto& e : load_catalog())
        if (e.stratum == s) return &e;
    return nullptr;
}

std::vector<Certificate> verify_all() {
    std::vector<Certificate> out;
    for (const auto& e : load_catalog()) {
        if (e.hn) {
            out.push_back(certify_hn(e.stratum, std::nullopt));
            continue;
        }
        Certificate c = certify_disjoint_divisor(e.stratum, e);
        if (c.verdict != Verdict::TrivialTautologicalRing)
            throw CatalogContradiction("catalog " + e.section + " (" + e.stratum.str() +
                                       "): pullback coefficient vanishes; transcription is wrong");
        out.push_back(certify_affine(c));
    }
    return out;
}

}  // namespace strata
