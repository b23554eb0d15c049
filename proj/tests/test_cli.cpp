#include <doctest.h>

#include <json.hpp>

#include "strata/certificate.hpp"
#include "strata/cli.hpp"

using strata::CommandResult;
using strata::run;

TEST_CASE("stratum info prints the invariants") {
    CommandResult r = run({"stratum", "info", "k=1", "g=3", "mu=2,1,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("n: 3") != std::string::npos);
    CHECK(r.output.find("kappa_mu: 17/3") != std::string::npos);
    CHECK(r.output.find("dimension: 7") != std::string::npos);
    CHECK(r.output.find("area: finite") != std::string::npos);
}

TEST_CASE("domain errors exit 1 and carry the error name") {
    CommandResult r = run({"stratum", "info", "k=1", "g=2", "mu=3"});
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("DegreeMismatch") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"stratum"}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"origami", "enumerate", "--squares", "3"}).exit_code == 2);
}

TEST_CASE("catalog verify succeeds and is machine readable") {
    CommandResult r = run({"catalog", "verify"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("55 certificates") != std::string::npos);

    CommandResult j = run({"catalog", "verify", "--json"});
    CHECK(j.exit_code == 0);
    auto parsed = nlohmann::ordered_json::parse(j.output);
    CHECK(parsed.size() == 55);
    // each certificate round-trips through the schema
    strata::Certificate c = strata::Certificate::from_json(parsed.front());
    CHECK(c.to_json() == parsed.front());
}

TEST_CASE("certify routes by stratum shape") {
    CHECK(run({"certify", "k=1", "g=3", "mu=4^odd"}).output.find("verdict: Affine") !=
          std::string::npos);
    CHECK(run({"certify", "k=1", "g=2", "mu=4,-2"}).output.find("InfiniteArea") !=
          std::string::npos);
    // (1,-1) has an entry <= -k, so the infinite-area route fires first
    CHECK(run({"certify", "k=1", "g=1", "mu=1,-1"}).output.find("InfiniteArea") !=
          std::string::npos);
    CHECK(run({"certify", "k=1", "g=2", "mu=1,1"}).output.find("LowGenus") != std::string::npos);
    // unstable genus-0 configurations fall back to the genus-0 route
    CHECK(run({"certify", "k=1", "g=0", "mu=-5,3"}).output.find("LowGenus") != std::string::npos);
    CHECK(run({"certify", "k=1", "g=4", "mu=4,2^even"}).output.find("requires L != 28/45") !=
          std::string::npos);
    CommandResult hn = run({"certify", "k=1", "g=4", "mu=4,2^even", "--L", "1/2"});
    CHECK(hn.output.find("TrivialTautologicalRing") != std::string::npos);
    CHECK(run({"certify", "k=1", "g=7", "mu=12"}).output.find("Inconclusive") !=
          std::string::npos);
}

TEST_CASE("extremal report prints the ratio") {
    CommandResult r = run({"extremal", "report", "k=1", "g=2", "mu=1,1"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("ratio -1/3") != std::string::npos);
}

TEST_CASE("origami commands") {
    CommandResult lyap = run({"origami", "lyapunov", "(1,2)", "(1,3)"});
    CHECK(lyap.exit_code == 0);
    CHECK(lyap.output.find("lyapunov sum: 4/3") != std::string::npos);
    CHECK(lyap.output.find("orbit size: 3") != std::string::npos);

    CommandResult orbit = run({"origami", "orbit", "(1,2)", "(1,3)"});
    CHECK(orbit.output.find("orbit size: 3") != std::string::npos);

    CommandResult enumerate =
        run({"origami", "enumerate", "--squares", "3", "--stratum", "k=1 g=2 mu=2"});
    CHECK(enumerate.output.find("3 origamis") != std::string::npos);

    // bare mu shorthand for --stratum
    CommandResult shorthand = run({"origami", "enumerate", "--squares", "3", "--stratum", "2"});
    CHECK(shorthand.output == enumerate.output);

    CommandResult varying =
        run({"origami", "varying", "--stratum", "2", "--max-squares", "4"});
    CHECK(varying.exit_code == 0);
    CHECK(varying.output.find("consistent with nonvarying") != std::string::npos);

    CommandResult disconnected = run({"origami", "orbit", "(1,2)(3,4)", "(1,2)(3,4)"});
    CHECK(disconnected.exit_code == 1);
    CHECK(disconnected.output.find("NotConnected") != std::string::npos);

    CommandResult garbage =
        run({"origami", "enumerate", "--squares", "3", "--stratum", "abc"});
    CHECK(garbage.exit_code == 1);
    CHECK(garbage.output.find("ParseError") != std::string::npos);
}

TEST_CASE("identical argv gives byte-identical output") {
    for (const auto& argv : std::vector<std::vector<std::string>>{
             {"catalog", "verify", "--json"},
             {"origami", "varying", "--stratum", "2", "--max-squares", "5", "--json"},
             {"extremal", "report", "k=2", "g=3", "mu=10,-1,-1", "--json"},
             {"certify", "k=2", "g=2", "mu=7,-3"}}) {
        CommandResult a = run(argv);
        CommandResult b = run(argv);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
}
