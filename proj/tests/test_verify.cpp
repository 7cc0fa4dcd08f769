#include <doctest.h>

#include "qgt/verify.hpp"

using namespace qgt;

TEST_CASE("small verification suites pass") {
    VerifyOptions opt;
    opt.max_n = 3;
    opt.random_rows = 40;
    for (const char* s : {"contour-A", "multivar", "structural", "stochastic", "multistep"}) {
        CAPTURE(s);
        const auto r = run_verify_suite(s, opt);
        CHECK(r.pass);
        CHECK(r.result.at("cases").get<long>() > 0);
        CHECK(r.result.at("failures").get<long>() == 0);
    }
}

TEST_CASE("suite reports are independent of scheduling") {
    VerifyOptions opt;
    opt.max_n = 4;
    const auto a = run_verify_suite("multistep", opt).to_json().dump();
    opt.parallel = false;
    CHECK(run_verify_suite("multistep", opt).to_json().dump() == a);
}

TEST_CASE("suite options are validated") {
    CHECK_THROWS_AS(run_verify_suite("nonsense", {}), InvalidConfig);
    VerifyOptions bad;
    bad.q = 2;
    CHECK_THROWS_AS(run_verify_suite("contour-A", bad), InvalidConfig);
    CHECK(verify_suites().size() == 8);
    CHECK(verify_default_max_n("contour-A") == 6);
}
