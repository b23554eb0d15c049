#include "strata/signature.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace strata {

namespace {

constexpr std::array<std::string_view, 7> kComponentNames = {
    "generic", "hyp", "nonhyp", "odd", "even", "reg", "irr"};

}  // namespace

std::string_view component_name(Component c) {
    return kComponentNames[static_cast<size_t>(c)];
}

Component component_from_name(std::string_view name) {
    for (size_t i = 0; i < kComponentNames.size(); ++i)
        if (kComponentNames[i] == name) return static_cast<Component>(i);
    throw ParseError("unknown component label '" + std::string(name) + "'");
}

Signature::Signature(int genus, int order_k, std::vector<int> orders, Component component)
    : genus_(genus), k_(order_k), orders_(std::move(orders)), component_(component) {}

static void check_degree(int genus, int order_k, const std::vector<int>& orders) {
    if (order_k < 1) throw ParseError("k must be >= 1");
    if (genus < 0) throw ParseError("genus must be >= 0");
    long sum = 0;
    for (int m : orders) sum += m;
    long target = static_cast<long>(order_k) * (2L * genus - 2);
    if (sum != target) {
        std::ostringstream os;
        os << "sum of orders is " << sum << " but k(2g-2) = " << target;
        throw DegreeMismatch(os.str());
    }
    if (orders.empty() && genus != 1)
        throw DegreeMismatch("empty mu is only possible in genus 1");
}

Signature Signature::validate(int genus, int order_k, std::vector<int> orders,
                              Component component) {
    check_degree(genus, order_k, orders);
    for (int m : orders)
        if (m == 0)
            throw ZeroOrderEntry("zero-order entries are only supported on the origami path");
    return Signature(genus, order_k, std::move(orders), component);
}

Signature Signature::validate_allowing_zero_orders(int genus, int order_k,
                                                   std::vector<int> orders,
                                                   Component component) {
    check_degree(genus, order_k, orders);
    return Signature(genus, order_k, std::move(orders), component);
}

int Signature::order(int position) const {
    if (position < 1 || position > n())
        throw InvalidPositions("position out of range");
    return orders_[static_cast<size_t>(position - 1)];
}

Rational Signature::kappa_mu() const {
    if (has_minus_k_entry())
        throw MinusKEntry("kappa_mu undefined: some entry equals -k");
    Rational r(2 * genus_ - 2 + n(), k_);
    for (int m : orders_) r -= Rational(1, m + k_);
    return r;
}

int Signature::dimension() const {
    return k_ == 1 ? 2 * genus_ - 2 + n() : 2 * genus_ - 3 + n();
}

bool Signature::infinite_area() const {
    return std::any_of(orders_.begin(), orders_.end(), [this](int m) { return m <= -k_; });
}

bool Signature::has_minus_k_entry() const {
    return std::any_of(orders_.begin(), orders_.end(), [this](int m) { return m == -k_; });
}

bool Signature::has_zero_order() const {
    return std::any_of(orders_.begin(), orders_.end(), [](int m) { return m == 0; });
}

bool Signature::holomorphic() const {
    return !orders_.empty() &&
           std::all_of(orders_.begin(), orders_.end(), [](int m) { return m >= 1; });
}

std::string Signature::str() const {
    std::ostringstream os;
    os << "k=" << k_ << " g=" << genus_ << " mu=";
    if (orders_.empty()) {
        os << "()";
    } else {
        for (size_t i = 0; i < orders_.size(); ++i) {
            if (i) os << ",";
            os << orders_[i];
        }
    }
    if (component_ != Component::generic) os << "^" << component_name(component_);
    return os.str();
}

Signature Signature::parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string tok_k, tok_g, tok_mu, extra;
    if (!(is >> tok_k >> tok_g >> tok_mu))
        throw ParseError("signature must be 'k=<k> g=<g> mu=<m1,m2,...>[^component]'");
    if (is >> extra) throw ParseError("trailing text after signature: '" + extra + "'");
    auto num_after = [](const std::string& tok, std::string_view prefix) {
        if (tok.rfind(prefix, 0) != 0)
            throw ParseError("expected '" + std::string(prefix) + "<value>', got '" + tok + "'");
        try {
            size_t used = 0;
            int v = std::stoi(tok.substr(prefix.size()), &used);
            if (used != tok.size() - prefix.size()) throw std::invalid_argument("");
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad integer in '" + tok + "'");
        }
    };
    int order_k = num_after(tok_k, "k=");
    int genus = num_after(tok_g, "g=");

    std::string mu = tok_mu.substr(0, 3) == "mu="
                         ? tok_mu.substr(3)
                         : throw ParseError("expected 'mu=...', got '" + tok_mu + "'");
    Component comp = Component::generic;
    if (auto caret = mu.find('^'); caret != std::string::npos) {
        comp = component_from_name(mu.substr(caret + 1));
        mu = mu.substr(0, caret);
    }
    std::vector<int> orders;
    if (!mu.empty() && mu != "()") {
        std::istringstream ms(mu);
        std::string part;
        while (std::getline(ms, part, ',')) {
            try {
                size_t used = 0;
                orders.push_back(std::stoi(part, &used));
                if (used != part.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("bad order '" + part + "' in mu list");
            }
        }
        if (mu.back() == ',') throw ParseError("trailing comma in mu list");
    }
    return validate(genus, order_k, std::move(orders), comp);
}

bool operator==(const Signature& a, const Signature& b) {
    if (a.genus_ != b.genus_ || a.k_ != b.k_ || a.component_ != b.component_) return false;
    std::vector<int> x = a.orders_, y = b.orders_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

}  // namespace strata
