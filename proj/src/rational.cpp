#include "strata/rational.hpp"

#include <cctype>
#include <ostream>

namespace strata {

Rational Rational::parse(std::string_view text) {
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string s(text.substr(b, e - b));
    if (s.empty()) throw ParseError("empty rational literal");

    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!is_int(s)) throw ParseError("bad rational literal '" + s + "'");
        Rational r;
        r.q_ = mpq_class(mpz_class(s, 10));
        return r;
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw ParseError("bad rational literal '" + s + "'");
    mpz_class d(den, 10);
    if (d == 0) throw DivisionByZero("rational literal with zero denominator");
    return Rational(mpz_class(num, 10), d);
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace strata
