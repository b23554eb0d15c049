#include "strata/cli.hpp"

#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strata/catalog.hpp"
#include "strata/certificate.hpp"
#include "strata/divisor.hpp"
#include "strata/extremality.hpp"
#include "strata/origami.hpp"
#include "strata/signature.hpp"

namespace strata {

namespace {

using nlohmann::ordered_json;

// positional tokens `k=1 g=3 mu=2,1,1` joined back into one signature string
Signature signature_from_tokens(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw UsageError("expected signature tokens k=<k> g=<g> mu=<...>");
    std::string joined;
    for (const auto& t : tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t;
    }
    return Signature::parse(joined);
}

// --stratum accepts the full signature text or just the mu part (k=1, genus
// from the degree condition)
Signature stratum_from_arg(const std::string& arg) {
    if (arg.find("mu=") != std::string::npos) return Signature::parse(arg);
    std::string mu = arg;
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
                throw ParseError("bad order '" + part + "' in stratum '" + arg + "'");
            }
        }
    }
    int sum = std::accumulate(orders.begin(), orders.end(), 0);
    if (sum < 0 || sum % 2 != 0)
        throw ParseError("orders '" + arg + "' do not sum to 2g-2 for any genus");
    return Signature::validate(sum / 2 + 1, 1, std::move(orders), comp);
}

std::string join_rationals(const std::vector<Rational>& values) {
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += values[i].str();
    }
    return out + "}";
}

void print_certificate(std::ostream& os, const Certificate& c, bool as_json) {
    if (as_json) {
        os << c.to_json().dump(2) << "\n";
        return;
    }
    os << "stratum: " << c.stratum.str() << "\n";
    os << "verdict: " << verdict_name(c.verdict) << "\n";
    os << "witness: " << witness_kind(c.witness);
    if (const auto* d = std::get_if<DisjointDivisorWitness>(&c.witness))
        os << " " << d->divisor << ", eta coefficient " << d->coefficient;
    else if (const auto* i = std::get_if<InfiniteAreaWitness>(&c.witness))
        os << " a = " << i->a << " at position " << i->pole_position << ", trivial ample class "
           << i->trivialized_class;
    else if (const auto* l = std::get_if<LowGenusWitness>(&c.witness))
        os << " (" << l->reason << ")";
    else if (const auto* hn = std::get_if<HNWitness>(&c.witness))
        os << " requires L != " << hn->kappa_over_12
           << (hn->supplied_l ? ", supplied L = " + hn->supplied_l->str() : ", no L supplied");
    else if (const auto* v = std::get_if<VaryingWitness>(&c.witness))
        os << " distinct sums " << join_rationals(v->sums);
    os << "\n";
    for (const auto& a : c.assumptions) os << "assumes: " << a << "\n";
    os << "ref: " << c.ref << "\n";
}

int cmd_stratum_info(std::ostream& os, const std::vector<std::string>& tokens, bool as_json) {
    Signature s = signature_from_tokens(tokens);
    std::optional<Rational> kappa;
    if (!s.has_minus_k_entry()) kappa = s.kappa_mu();
    if (as_json) {
        ordered_json j{{"stratum", s.str()},
                       {"n", s.n()},
                       {"kappa_mu", kappa ? ordered_json(kappa->str()) : ordered_json(nullptr)},
                       {"dimension", s.dimension()},
                       {"infinite_area", s.infinite_area()}};
        os << j.dump(2) << "\n";
        return 0;
    }
    os << "stratum: " << s.str() << "\n";
    os << "n: " << s.n() << "\n";
    os << "kappa_mu: " << (kappa ? kappa->str() : "undefined (entry equals -k)") << "\n";
    os << "dimension: " << s.dimension() << "\n";
    os << "area: " << (s.infinite_area() ? "infinite" : "finite") << "\n";
    return 0;
}

int cmd_certify(std::ostream& os, const std::vector<std::string>& tokens,
                const std::string& l_text, bool as_json) {
    Signature s = signature_from_tokens(tokens);
    std::optional<Rational> supplied_l;
    if (!l_text.empty()) supplied_l = Rational::parse(l_text);

    if (s.infinite_area() && 2 * s.genus() - 2 + s.n() > 0) {
        print_certificate(os, certify_infinite_area(s), as_json);
        return 0;
    }
    if (s.genus() <= 2 || s.component() == Component::hyp) {
        print_certificate(os, certify_low_genus(s), as_json);
        return 0;
    }
    if (const CatalogEntry* entry = find_catalog_entry(s)) {
        if (entry->hn) {
            print_certificate(os, certify_hn(s, supplied_l), as_json);
        } else {
            print_certificate(os, certify_affine(certify_disjoint_divisor(s, *entry)), as_json);
        }
        return 0;
    }
    if (as_json) {
        ordered_json j{{"stratum", s.str()},
                       {"verdict", "Inconclusive"},
                       {"note", "no certificate route applies; for holomorphic k=1 strata try "
                                "`origami varying`"}};
        os << j.dump(2) << "\n";
    } else {
        os << "stratum: " << s.str() << "\n";
        os << "verdict: Inconclusive\n";
        os << "note: not infinite-area, genus >= 3, not hyperelliptic, not in the catalog; for "
              "holomorphic k=1 strata try `origami varying`\n";
    }
    return 0;
}

int cmd_catalog_list(std::ostream& os, bool as_json) {
    const auto& entries = load_catalog();
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& e : entries) {
            ordered_json j{{"section", e.section}, {"stratum", e.stratum.str()}, {"hn", e.hn}};
            if (!e.hn) {
                j["ambient"] = e.ambient.str();
                j["divisor"] = e.divisor_name;
                j["class"] = e.divisor_class().str();
                j["marking"] = e.marking;
                if (e.ambient_as_printed) j["ambient_as_printed"] = true;
            }
            arr.push_back(j);
        }
        os << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& e : entries) {
        os << e.section << "\t" << e.stratum.str() << "\t";
        if (e.hn)
            os << "filtration route (certify with --L)";
        else
            os << e.divisor_name << "\t" << e.divisor_class().str();
        os << "\n";
    }
    os << "total: " << entries.size() << " entries\n";
    return 0;
}

int cmd_catalog_verify(std::ostream& os, bool as_json) {
    std::vector<Certificate> certs = verify_all();
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : certs) arr.push_back(c.to_json());
        os << arr.dump(2) << "\n";
        return 0;
    }
    for (const auto& c : certs) {
        os << c.ref << "\t" << c.stratum.str() << "\t" << verdict_name(c.verdict) << "\t";
        if (const auto* d = std::get_if<DisjointDivisorWitness>(&c.witness))
            os << "coefficient " << d->coefficient;
        else if (const auto* hn = std::get_if<HNWitness>(&c.witness))
            os << "requires L != " << hn->kappa_over_12;
        os << "\n";
    }
    os << certs.size() << " certificates, every divisor coefficient nonzero\n";
    return 0;
}

int cmd_extremal_report(std::ostream& os, const std::vector<std::string>& tokens, bool as_json) {
    Signature s = signature_from_tokens(tokens);
    std::vector<MergeReport> reports = extremality_report(s);
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& r : reports) {
            ordered_json j{{"i", r.i}, {"j", r.j}};
            j["merged"] = r.merged ? ordered_json(r.merged->str()) : ordered_json(nullptr);
            j["coefficient"] = r.coefficient ? ordered_json(r.coefficient->str()) : ordered_json(nullptr);
            j["kappa_difference"] =
                r.kappa_difference ? ordered_json(r.kappa_difference->str()) : ordered_json(nullptr);
            j["ratio"] = r.ratio ? ordered_json(r.ratio->str()) : ordered_json(nullptr);
            j["extremal_hypothesis"] = r.extremal_hypothesis;
            if (!r.note.empty()) j["note"] = r.note;
            arr.push_back(j);
        }
        os << ordered_json{{"stratum", s.str()}, {"pairs", arr}}.dump(2) << "\n";
        return 0;
    }
    os << "stratum: " << s.str() << "\n";
    if (reports.empty()) {
        os << "no pairs to merge\n";
        return 0;
    }
    for (const auto& r : reports) {
        os << "pair (" << r.i << "," << r.j << ")";
        if (r.merged) os << " -> " << r.merged->str();
        if (r.coefficient)
            os << "  coefficient " << *r.coefficient << "  kappa_diff " << *r.kappa_difference
               << "  ratio " << *r.ratio;
        os << "  extremal " << (r.extremal_hypothesis ? "yes" : "no");
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << "\n";
    }
    return 0;
}

Origami origami_from_args(const std::string& h_text, const std::string& v_text) {
    Permutation h = Permutation::parse_cycles(h_text);
    Permutation v = Permutation::parse_cycles(v_text);
    int n = std::max(h.size(), v.size());
    if (h.size() < n) h = Permutation::parse_cycles(h_text, n);
    if (v.size() < n) v = Permutation::parse_cycles(v_text, n);
    return Origami(std::move(h), std::move(v));
}

int cmd_origami_enumerate(std::ostream& os, int squares, const std::string& stratum_arg,
                          bool as_json) {
    Signature target = stratum_from_arg(stratum_arg);
    std::vector<Origami> reps = enumerate_origamis(squares, target);
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& o : reps)
            arr.push_back(ordered_json{{"h", o.horizontal().cycle_str()},
                                       {"v", o.vertical().cycle_str()}});
        os << ordered_json{{"stratum", target.str()},
                           {"squares", squares},
                           {"count", reps.size()},
                           {"origamis", arr}}
                  .dump(2)
           << "\n";
        return 0;
    }
    os << "stratum " << target.str() << ", " << squares << " squares: " << reps.size()
       << (reps.size() == 1 ? " origami\n" : " origamis\n");
    for (size_t i = 0; i < reps.size(); ++i)
        os << "  " << i + 1 << ": h=" << reps[i].horizontal().cycle_str()
           << " v=" << reps[i].vertical().cycle_str() << "\n";
    return 0;
}

int cmd_origami_orbit(std::ostream& os, const std::string& h_text, const std::string& v_text,
                      bool as_json) {
    Origami o = origami_from_args(h_text, v_text);
    OrbitData orbit = sl2_orbit(o);
    if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const auto& m : orbit.representatives)
            arr.push_back(ordered_json{{"h", m.horizontal().cycle_str()},
                                       {"v", m.vertical().cycle_str()}});
        os << ordered_json{{"stratum", o.stratum().str()},
                           {"orbit_size", orbit.size()},
                           {"members", arr}}
                  .dump(2)
           << "\n";
        return 0;
    }
    os << "stratum: " << o.stratum().str() << "\n";
    os << "orbit size: " << orbit.size() << "\n";
    for (const auto& m : orbit.representatives)
        os << "  h=" << m.horizontal().cycle_str() << " v=" << m.vertical().cycle_str() << "\n";
    return 0;
}

int cmd_origami_lyapunov(std::ostream& os, const std::string& h_text, const std::string& v_text,
                         bool as_json) {
    Origami o = origami_from_args(h_text, v_text);
    LyapunovReport r = lyapunov_sum(o);
    std::optional<int> parity;
    bool parity_defined = true;
    for (int m : o.cone_orders())
        if (m % 2) parity_defined = false;
    if (parity_defined) parity = o.spin_parity();
    if (as_json) {
        ordered_json j{{"stratum", r.stratum.str()},
                       {"orbit_size", r.orbit_size},
                       {"kappa_term", r.kappa_term.str()},
                       {"siegel_veech_term", r.sv_term.str()},
                       {"lyapunov_sum", r.total.str()}};
        j["spin_parity"] = parity ? ordered_json(*parity) : ordered_json(nullptr);
        os << j.dump(2) << "\n";
        return 0;
    }
    os << "stratum: " << r.stratum.str() << "\n";
    os << "orbit size: " << r.orbit_size << "\n";
    os << "kappa term: " << r.kappa_term << "\n";
    os << "siegel-veech term: " << r.sv_term << "\n";
    os << "lyapunov sum: " << r.total << "\n";
    if (parity) os << "spin parity: " << *parity << "\n";
    return 0;
}

int cmd_origami_varying(std::ostream& os, const std::string& stratum_arg, int max_squares,
                        bool as_json) {
    Signature target = stratum_from_arg(stratum_arg);
    VaryingReport r = varying_test(target, max_squares);
    if (as_json) {
        ordered_json groups = ordered_json::array();
        for (const auto& g : r.groups) {
            ordered_json j{{"parity", g.parity ? ordered_json(*g.parity) : ordered_json(nullptr)},
                           {"orbits", g.orbit_count}};
            ordered_json sums = ordered_json::array();
            for (const auto& s : g.sums) sums.push_back(s.str());
            j["distinct_sums"] = sums;
            groups.push_back(j);
        }
        ordered_json j{{"stratum", r.stratum.str()},
                       {"max_squares", r.max_squares},
                       {"classes", r.class_count},
                       {"groups", groups},
                       {"varying", r.varying}};
        j["certificate"] = r.certificate ? r.certificate->to_json() : ordered_json(nullptr);
        os << j.dump(2) << "\n";
        return 0;
    }
    os << "stratum " << r.stratum.str() << ", squares up to " << r.max_squares << "\n";
    os << "classes: " << r.class_count << "\n";
    for (const auto& g : r.groups) {
        os << "group parity=" << (g.parity ? std::to_string(*g.parity) : "none") << ": "
           << g.orbit_count << (g.orbit_count == 1 ? " orbit, sums " : " orbits, sums ")
           << join_rationals(g.sums) << "\n";
    }
    if (r.varying) {
        os << "varying: yes -- eta is nontrivial on this stratum\n";
        print_certificate(os, *r.certificate, false);
    } else {
        os << "varying: no -- consistent with nonvarying (not a proof)\n";
    }
    return 0;
}

}  // namespace

CommandResult run(const std::vector<std::string>& argv) {
    std::ostringstream out;

    CLI::App app{"exact divisor-class calculus on strata of k-differentials"};
    app.require_subcommand(1);

    // stratum info
    auto* stratum = app.add_subcommand("stratum", "signature inspection");
    stratum->require_subcommand(1);
    auto* info = stratum->add_subcommand("info", "n, kappa_mu, dimension, area");
    std::vector<std::string> info_tokens;
    bool info_json = false;
    info->add_option("signature", info_tokens, "k=<k> g=<g> mu=<m1,...>[^component]")
        ->expected(-1);
    info->add_flag("--json", info_json, "machine output");

    // certify
    auto* certify = app.add_subcommand("certify", "issue the certificate for a stratum");
    std::vector<std::string> certify_tokens;
    std::string certify_l;
    bool certify_json = false;
    certify->add_option("signature", certify_tokens, "k=<k> g=<g> mu=<m1,...>[^component]")
        ->expected(-1);
    certify->add_option("--L", certify_l, "stratum constant L for the filtration strata (p/q)");
    certify->add_flag("--json", certify_json, "machine output");

    // catalog list|verify
    auto* catalog = app.add_subcommand("catalog", "the nonvarying stratum table");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "print the catalog");
    bool list_json = false;
    list->add_flag("--json", list_json, "machine output");
    auto* verify = catalog->add_subcommand("verify", "certify every entry");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "machine output");

    // extremal report
    auto* extremal = app.add_subcommand("extremal", "merging-zeros degenerations");
    extremal->require_subcommand(1);
    auto* report = extremal->add_subcommand("report", "scalars for every pair of positions");
    std::vector<std::string> report_tokens;
    bool report_json = false;
    report->add_option("signature", report_tokens, "k=<k> g=<g> mu=<m1,...>[^component]")
        ->expected(-1);
    report->add_flag("--json", report_json, "machine output");

    // origami enumerate|orbit|lyapunov|varying
    auto* origami = app.add_subcommand("origami", "square-tiled surfaces");
    origami->require_subcommand(1);

    auto* enumerate = origami->add_subcommand("enumerate", "all origamis in a stratum");
    int enum_squares = 0;
    std::string enum_stratum;
    bool enum_json = false;
    enumerate->add_option("--squares", enum_squares, "number of squares")->required();
    enumerate->add_option("--stratum", enum_stratum, "signature or bare mu list")->required();
    enumerate->add_flag("--json", enum_json, "machine output");

    auto* orbit = origami->add_subcommand("orbit", "orbit of an origami");
    std::string orbit_h, orbit_v;
    bool orbit_json = false;
    orbit->add_option("h-cycles", orbit_h, "horizontal permutation, cycles like (1,2)(3)")->required();
    orbit->add_option("v-cycles", orbit_v, "vertical permutation")->required();
    orbit->add_flag("--json", orbit_json, "machine output");

    auto* lyapunov = origami->add_subcommand("lyapunov", "exact Lyapunov sum of an origami");
    std::string lyap_h, lyap_v;
    bool lyap_json = false;
    lyapunov->add_option("h-cycles", lyap_h, "horizontal permutation")->required();
    lyapunov->add_option("v-cycles", lyap_v, "vertical permutation")->required();
    lyapunov->add_flag("--json", lyap_json, "machine output");

    auto* varying = origami->add_subcommand("varying", "distinct Lyapunov sums in a stratum");
    std::string vary_stratum;
    int vary_max = 0;
    bool vary_json = false;
    varying->add_option("--stratum", vary_stratum, "signature or bare mu list")->required();
    varying->add_option("--max-squares", vary_max, "enumeration bound")->required();
    varying->add_flag("--json", vary_json, "machine output");

    try {
        // CLI11 parses argv-style vectors in reverse order, program name excluded
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream help;
        help << app.help();
        return CommandResult{0, help.str()};
    } catch (const CLI::ParseError& e) {
        return CommandResult{2, std::string("usage error: ") + e.what() + "\n"};
    }

    try {
        int code = 1;
        if (info->parsed()) code = cmd_stratum_info(out, info_tokens, info_json);
        else if (certify->parsed()) code = cmd_certify(out, certify_tokens, certify_l, certify_json);
        else if (list->parsed()) code = cmd_catalog_list(out, list_json);
        else if (verify->parsed()) code = cmd_catalog_verify(out, verify_json);
        else if (report->parsed()) code = cmd_extremal_report(out, report_tokens, report_json);
        else if (enumerate->parsed()) code = cmd_origami_enumerate(out, enum_squares, enum_stratum, enum_json);
        else if (orbit->parsed()) code = cmd_origami_orbit(out, orbit_h, orbit_v, orbit_json);
        else if (lyapunov->parsed()) code = cmd_origami_lyapunov(out, lyap_h, lyap_v, lyap_json);
        else if (varying->parsed()) code = cmd_origami_varying(out, vary_stratum, vary_max, vary_json);
        else return CommandResult{2, "usage error: unknown subcommand\n"};
        return CommandResult{code, out.str()};
    } catch (const UsageError& e) {
        return CommandResult{2, out.str() + "usage error: " + e.what() + "\n"};
    } catch (const Error& e) {
        return CommandResult{1, out.str() + "error: " + e.what() + "\n"};
    } catch (const std::exception& e) {
        return CommandResult{1, out.str() + "internal error: " + std::string(e.what()) + "\n"};
    }
}

}  // namespace strata
