#pragma once

#include <random>
#include <vector>

#include "strata/signature.hpp"

namespace strata::testing {

struct SignatureOptions {
    int k = 1;
    bool allow_poles = true;
    bool forbid_minus_k = true;
    int max_n = 6;
    int min_entries = 1;
};

// rejection sampling: draw entries, accept when the degree condition can
// close with a nonnegative genus
inline Signature random_signature(std::mt19937_64& rng, const SignatureOptions& opt) {
    std::uniform_int_distribution<int> n_dist(opt.min_entries, opt.max_n);
    std::uniform_int_distribution<int> entry(opt.allow_poles ? -5 : 1, 9);
    while (true) {
        int n = n_dist(rng);
        std::vector<int> orders;
        orders.reserve(static_cast<size_t>(n));
        bool ok = true;
        long sum = 0;
        for (int i = 0; i < n; ++i) {
            int m = entry(rng);
            if (m == 0 || (opt.forbid_minus_k && m == -opt.k)) {
                ok = false;
                break;
            }
            orders.push_back(m);
            sum += m;
        }
        if (!ok) continue;
        if (sum % (2L * opt.k) != 0) continue;
        long genus = sum / (2L * opt.k) + 1;
        if (genus < 0) continue;
        return Signature::validate(static_cast<int>(genus), opt.k, std::move(orders));
    }
}

}  // namespace strata::testing
