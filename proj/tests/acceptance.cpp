// Acceptance suite: one line per criterion, exit code = number of failures.
// All comparisons are exact; runtimes are wall-clock bounds checked here.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "naive_enumeration.hpp"
#include "random_signatures.hpp"
#include "strata/catalog.hpp"
#include "strata/certificate.hpp"
#include "strata/cli.hpp"
#include "strata/divisor.hpp"
#include "strata/extremality.hpp"
#include "strata/origami.hpp"

using namespace strata;
using strata::testing::SignatureOptions;
using strata::testing::random_signature;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<void(std::ostringstream&)>& body) {
    std::ostringstream detail;
    bool ok = true;
    auto start = std::chrono::steady_clock::now();
    try {
        body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail << "exception: " << e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && elapsed > budget_seconds) {
        ok = false;
        detail << "runtime " << elapsed << "s exceeds budget " << budget_seconds << "s";
    }
    std::string msg = detail.str();
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
    std::printf(" (%.2fs)", elapsed);
    if (!msg.empty()) std::cout << " -- " << msg;
    std::cout << "\n";
}

void expect(std::ostringstream& detail, bool cond, const std::string& what) {
    if (!cond) {
        detail << what << "; ";
        throw std::runtime_error(detail.str());
    }
}

Rational lyapunov_of_orbit(const OrbitData& orbit, const Signature& stratum) {
    Rational sv(0);
    for (const Origami& member : orbit.representatives)
        sv += member.horizontal_cylinders().moduli_sum();
    sv /= Rational(static_cast<long>(orbit.size()));
    return stratum.kappa_mu() / 12 + sv;
}

}  // namespace

int main() {
    criterion(1, "catalog soundness: nonzero coefficients, frozen spot values", 1.0,
              [](std::ostringstream& d) {
                  std::vector<Certificate> certs = verify_all();
                  expect(d, certs.size() == 55, "55 certificates");
                  std::map<std::string, Rational> coeff;
                  int divisor_routes = 0;
                  for (const auto& c : certs) {
                      if (const auto* w = std::get_if<DisjointDivisorWitness>(&c.witness)) {
                          ++divisor_routes;
                          expect(d, !w->coefficient.is_zero(), "nonzero coefficient for " + c.stratum.str());
                          coeff.emplace(c.stratum.str(), w->coefficient);
                      }
                  }
                  expect(d, divisor_routes == 49, "49 divisor-route entries");
                  // the first spot value is the oracle evaluation 9*(24/5)/12
                  expect(d, coeff.at("k=1 g=3 mu=4^odd") == Rational(18, 5), "P_3(4)^odd -> 18/5");
                  expect(d, coeff.at("k=1 g=3 mu=2,1,1") == Rational(49, 36), "P_3(2,1,1) -> 49/36");
                  expect(d, coeff.at("k=1 g=3 mu=2,2^odd") == Rational(44, 9), "P_3(2,2)^odd -> 44/9");
                  expect(d, coeff.at("k=1 g=4 mu=6^even") == Rational(180, 7), "P_4(6)^even -> 180/7");
                  expect(d, coeff.at("k=2 g=3 mu=9,-1^irr") == Rational(63, 44),
                         "P2_3(9,-1)^irr -> 63/44");
              });

    criterion(2, "pullback formula equivalence on 1000 random inputs", 1.0,
              [](std::ostringstream& d) {
                  std::mt19937_64 rng(101);
                  std::uniform_int_distribution<long> c(-30, 30);
                  for (int t = 0; t < 1000; ++t) {
                      SignatureOptions opt{.k = (t % 2) + 1};
                      Signature s = random_signature(rng, opt);
                      Rational a(c(rng), 1 + (t % 5));
                      std::vector<Rational> b;
                      for (int i = 0; i < s.n(); ++i) b.emplace_back(c(rng), 1 + ((t + i) % 7));
                      expect(d,
                             pullback_coefficient(s, MarkingMap::all_points(s), a, b) ==
                                 pullback_coefficient_expanded(s, a, b),
                             "forms differ on " + s.str());
                  }
              });

    criterion(3, "merging scalars: identities and signs on 1000 random pairs", 1.0,
              [](std::ostringstream& d) {
                  std::mt19937_64 rng(103);
                  std::uniform_int_distribution<int> pick(1, 100);
                  int done = 0;
                  while (done < 1000) {
                      int k = (done % 2) + 1;
                      SignatureOptions opt{.k = k, .min_entries = 2};
                      Signature s = random_signature(rng, opt);
                      int i = pick(rng) % s.n() + 1, j = pick(rng) % s.n() + 1;
                      if (i == j || s.order(i) + s.order(j) == -k || s.order(i) + s.order(j) == 0)
                          continue;
                      Rational coeff = merging_coefficient(s, i, j);
                      Rational diff = kappa_difference(s, i, j);
                      Rational ratio = teichmueller_ratio(s, i, j);
                      expect(d, coeff == Rational(-(s.order(i) + s.order(j) + k)) * diff,
                             "coefficient identity on " + s.str());
                      expect(d, ratio == -Rational(1, s.order(i) + s.order(j) + k),
                             "ratio formula on " + s.str());
                      expect(d, ratio * coeff == diff, "ratio * coefficient on " + s.str());
                      bool hyp = k == 1 ? (s.order(i) >= 1 && s.order(j) >= 1)
                                        : (s.order(i) >= -1 && s.order(j) >= -1 &&
                                           (s.order(i) > 0 || s.order(j) > 0));
                      if (hyp) expect(d, ratio < Rational(0), "negative ratio on " + s.str());
                      ++done;
                  }
              });

    criterion(4, "infinite-area witness: a >= 0, zero exactly at -k", 1.0,
              [](std::ostringstream& d) {
                  std::mt19937_64 rng(107);
                  std::uniform_int_distribution<int> kd(1, 4);
                  int done = 0;
                  while (done < 1000) {
                      SignatureOptions opt{.k = kd(rng), .forbid_minus_k = false, .min_entries = 2};
                      Signature s = random_signature(rng, opt);
                      if (!s.infinite_area()) continue;
                      // the certificate lives on M_{g,n}: stable (g,n) only
                      if (2 * s.genus() - 2 + s.n() <= 0) continue;
                      Certificate c = certify_infinite_area(s);
                      const auto& w = std::get<InfiniteAreaWitness>(c.witness);
                      expect(d, w.a >= Rational(0), "a >= 0 on " + s.str());
                      bool at_minus_k = s.order(w.pole_position) == -s.k();
                      expect(d, (w.a == Rational(0)) == at_minus_k, "a = 0 iff m1 = -k on " + s.str());
                      expect(d, c.verdict == Verdict::Affine, "verdict Affine");
                      ++done;
                  }
              });

    criterion(5, "orbit oracle: every orbit at N<=6 gives 4/3 and 3/2", 60.0,
              [](std::ostringstream& d) {
                  Signature h2 = Signature::validate(2, 1, {2});
                  Signature h11 = Signature::validate(2, 1, {1, 1});
                  for (const auto& [stratum, want] :
                       std::vector<std::pair<Signature, Rational>>{{h2, Rational(4, 3)},
                                                                   {h11, Rational(3, 2)}}) {
                      int orbits = 0;
                      for (int n = 3; n <= 6; ++n) {
                          std::set<Origami> seen;
                          for (const Origami& rep : enumerate_origamis(n, stratum)) {
                              if (seen.contains(rep)) continue;
                              OrbitData orbit = sl2_orbit(rep);
                              seen.insert(orbit.representatives.begin(),
                                          orbit.representatives.end());
                              ++orbits;
                              expect(d, lyapunov_of_orbit(orbit, stratum) == want,
                                     stratum.str() + " orbit with " + std::to_string(n) + " squares");
                          }
                      }
                      expect(d, orbits > 0, "found orbits in " + stratum.str());
                  }
              });

    criterion(6, "varying detection in the genus-3 principal stratum at N=8", 600.0,
              [](std::ostringstream& d) {
                  VaryingReport r = varying_test(Signature::validate(3, 1, {1, 1, 1, 1}), 8);
                  expect(d, r.groups.size() == 1, "one parity group (parity undefined)");
                  expect(d, r.groups[0].sums.size() >= 2, "at least two distinct sums");
                  expect(d, r.varying, "marked varying");
                  expect(d, r.certificate.has_value(), "certificate emitted");
                  expect(d, r.certificate->verdict == Verdict::EtaNontrivial,
                         "verdict EtaNontrivial");
                  // frozen oracle values: 308 classes, sums {1, 3/2, 5/3, 7/4, 2}
                  expect(d, r.class_count == 308, "308 classes at N<=8");
                  std::vector<Rational> want{Rational(1), Rational(3, 2), Rational(5, 3),
                                             Rational(7, 4), Rational(2)};
                  expect(d, r.groups[0].sums == want, "the five frozen sums");
              });

    criterion(7, "enumeration equals the naive full filter for N<=5", 60.0,
              [](std::ostringstream& d) {
                  for (int n = 2; n <= 5; ++n) {
                      auto oracle = strata::testing::naive_enumeration(n);
                      size_t strata_seen = 0;
                      for (const auto& [stratum, classes] : oracle) {
                          ++strata_seen;
                          auto got = enumerate_origamis(n, stratum);
                          expect(d, got.size() == classes.size(),
                                 "count for " + stratum.str() + " at N=" + std::to_string(n));
                          expect(d, std::set<Origami>(got.begin(), got.end()) == classes,
                                 "classes for " + stratum.str() + " at N=" + std::to_string(n));
                      }
                      expect(d, strata_seen > 0, "oracle found strata");
                  }
              });

    criterion(8, "byte-reproducible command output", 60.0, [](std::ostringstream& d) {
        for (const auto& argv : std::vector<std::vector<std::string>>{
                 {"catalog", "verify", "--json"},
                 {"catalog", "list"},
                 {"stratum", "info", "k=1", "g=3", "mu=2,1,1"},
                 {"extremal", "report", "k=1", "g=2", "mu=1,1", "--json"},
                 {"origami", "enumerate", "--squares", "4", "--stratum", "1,1", "--json"},
                 {"origami", "varying", "--stratum", "2", "--max-squares", "5", "--json"}}) {
            CommandResult a = run(argv);
            CommandResult b = run(argv);
            expect(d, a.exit_code == 0, "exit 0 for " + argv[0]);
            expect(d, a.exit_code == b.exit_code && a.output == b.output,
                   "identical bytes for " + argv[0] + " " + argv[1]);
        }
    });

    if (failures == 0)
        std::cout << "all acceptance criteria pass\n";
    else
        std::cout << failures << " criteria failed\n";
    return failures;
}
