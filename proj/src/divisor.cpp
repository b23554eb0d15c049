#include "strata/divisor.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace strata {

std::string Generator::str() const {
    switch (kind) {
        case Kind::lambda: return "lambda";
        case Kind::kappa: return "kappa";
        case Kind::eta: return "eta";
        case Kind::psi: return "psi" + std::to_string(index);
        case Kind::boundary: return name;
    }
    return {};
}

DivisorClass::DivisorClass(const Rational& c, const Generator& gen) {
    if (!c.is_zero()) terms_.emplace(gen, c);
}

Rational DivisorClass::coefficient(const Generator& gen) const {
    auto it = terms_.find(gen);
    return it == terms_.end() ? Rational(0) : it->second;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    for (const auto& [gen, c] : o.terms_) {
        auto it = terms_.find(gen);
        if (it == terms_.end()) {
            terms_.emplace(gen, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    DivisorClass neg = o;
    neg *= Rational(-1);
    return *this += neg;
}

DivisorClass& DivisorClass::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [gen, coeff] : terms_) coeff *= c;
    return *this;
}

std::string DivisorClass::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gen, c] : terms_) {
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = c.sign() < 0 ? -c : c;
        os << a.str() << "*" << gen.str();
        first = false;
    }
    return os.str();
}

namespace {

Generator generator_from_token(const std::string& tok) {
    if (tok == "lambda") return Generator::lambda();
    if (tok == "kappa") return Generator::kappa();
    if (tok == "eta") return Generator::eta();
    if (tok.rfind("psi", 0) == 0 && tok.size() > 3) {
        try {
            size_t used = 0;
            int idx = std::stoi(tok.substr(3), &used);
            if (used == tok.size() - 3 && idx >= 1) return Generator::psi(idx);
        } catch (const std::exception&) {
        }
        throw ParseError("bad psi index in '" + tok + "'");
    }
    // anything else is a formal boundary symbol
    if (tok.empty() || std::isdigit(static_cast<unsigned char>(tok[0])))
        throw ParseError("bad generator '" + tok + "'");
    return Generator::boundary(tok);
}

}  // namespace

DivisorClass DivisorClass::parse(std::string_view text) {
    // terms: [+-] [rat *] gen, separated by + or -
    DivisorClass out;
    std::string s(text);
    size_t i = 0;
    auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) throw ParseError("empty divisor class");
    if (s.substr(i) == "0") return out;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        skip_ws();
        if (!first) {
            if (s[i] == '+') { ++i; }
            else if (s[i] == '-') { sign = -1; ++i; }
            else throw ParseError("expected '+' or '-' in divisor class");
        } else if (s[i] == '-') {
            sign = -1; ++i;
        }
        first = false;
        skip_ws();
        size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '+' &&
               (s[i] != '-' || i == start))
            ++i;
        std::string term = s.substr(start, i - start);
        if (term.empty()) throw ParseError("dangling sign in divisor class");
        Rational coeff(1);
        std::string gen_tok = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            coeff = Rational::parse(term.substr(0, star));
            gen_tok = term.substr(star + 1);
        }
        if (sign < 0) coeff = -coeff;
        out += DivisorClass(coeff, generator_from_token(gen_tok));
        skip_ws();
    }
    return out;
}

MarkingMap::MarkingMap(std::vector<int> positions, const Signature& s)
    : positions_(std::move(positions)) {
    std::vector<int> sorted = positions_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw MarkingMismatch("marking map must be injective");
    for (int p : positions_)
        if (p < 1 || p > s.n())
            throw MarkingMismatch("marking position " + std::to_string(p) +
                                  " outside mu of length " + std::to_string(s.n()));
}

MarkingMap MarkingMap::all_points(const Signature& s) {
    std::vector<int> pos(static_cast<size_t>(s.n()));
    for (int i = 0; i < s.n(); ++i) pos[static_cast<size_t>(i)] = i + 1;
    return MarkingMap(std::move(pos), s);
}

int MarkingMap::position(int marked_index) const {
    if (marked_index < 1 || marked_index > arity())
        throw MarkingMismatch("marked index out of range");
    return positions_[static_cast<size_t>(marked_index - 1)];
}

Rational reduce_to_eta(const Signature& s, const DivisorClass& c) {
    if (s.has_minus_k_entry())
        throw MinusKEntry("reduction to eta undefined: some entry equals -k");
    Rational out(0);
    for (const auto& [gen, coeff] : c.terms()) {
        switch (gen.kind) {
            case Generator::Kind::lambda:
                out += coeff * s.kappa_mu() / 12;
                break;
            case Generator::Kind::kappa:
                out += coeff * s.kappa_mu();
                break;
            case Generator::Kind::eta:
                out += coeff;
                break;
            case Generator::Kind::psi: {
                if (gen.index < 1 || gen.index > s.n())
                    throw MarkingMismatch("psi" + std::to_string(gen.index) +
                                          " has no position under the all-points marking");
                out += coeff / Rational(s.order(gen.index) + s.k());
                break;
            }
            case Generator::Kind::boundary:
                throw UnreducibleGenerator("boundary symbol '" + gen.name +
                                           "' does not reduce to eta");
        }
    }
    return out;
}

Rational pullback_coefficient(const Signature& s, const MarkingMap& marking,
                              const Rational& a, std::span<const Rational> b) {
    if (s.has_minus_k_entry())
        throw MinusKEntry("pullback coefficient undefined: some entry equals -k");
    if (static_cast<int>(b.size()) != marking.arity())
        throw MarkingMismatch("psi coefficient list has length " + std::to_string(b.size()) +
                              " but marking has arity " + std::to_string(marking.arity()));
    Rational out = a * s.kappa_mu() / 12;
    for (int j = 1; j <= marking.arity(); ++j)
        out += b[static_cast<size_t>(j - 1)] / Rational(s.order(marking.position(j)) + s.k());
    return out;
}

Rational pullback_coefficient_expanded(const Signature& s, const Rational& a,
                                       std::span<const Rational> b) {
    if (s.has_minus_k_entry())
        throw MinusKEntry("pullback coefficient undefined: some entry equals -k");
    if (static_cast<int>(b.size()) != s.n())
        throw MarkingMismatch("expanded form needs one psi coefficient per entry of mu");
    Rational sum = Rational(2 * s.genus() - 2 + s.n()) * a / Rational(s.k());
    for (int i = 1; i <= s.n(); ++i)
        sum += (Rational(12) * b[static_cast<size_t>(i - 1)] - a) / Rational(s.order(i) + s.k());
    return sum / 12;
}

}  // namespace strata
