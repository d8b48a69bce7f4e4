#include <doctest.h>

#include <algorithm>

#include "qtrace/errors.hpp"
#include "qtrace/verify.hpp"

using namespace qtrace;

TEST_CASE("report rendering") {
    VerificationReport pass;
    pass.identity = "eq6";
    pass.n = 3;
    pass.pass = true;
    pass.note = "6 smooth permutations";
    pass.seconds = 0.0125;
    const std::string line = pass.to_line();
    CHECK(line.find("eq6") != std::string::npos);
    CHECK(line.find("n=3") != std::string::npos);
    CHECK(line.find("pass") != std::string::npos);
    CHECK(line.find("6 smooth permutations") != std::string::npos);
    CHECK(line.find("fail") == std::string::npos);

    VerificationReport fail;
    fail.identity = "rkl.degree";
    fail.n = 4;
    fail.pass = false;
    fail.counterexample = "u=1234 w=4231";
    const std::string fline = fail.to_line();
    CHECK(fline.find("fail") != std::string::npos);
    CHECK(fline.find("u=1234 w=4231") != std::string::npos);
}

TEST_CASE("report json schema") {
    VerificationReport pass;
    pass.identity = "cor11.eps.psi";
    pass.n = 2;
    pass.pass = true;
    pass.seconds = 0.5;
    nlohmann::json j = pass.to_json();
    CHECK(j["identity"] == "cor11.eps.psi");
    CHECK(j["n"] == 2);
    CHECK(j["status"] == "pass");
    CHECK(j["counterexample"].is_null());
    CHECK(j["seconds"].is_number());
    CHECK_FALSE(j.contains("note"));

    VerificationReport fail;
    fail.identity = "eq6";
    fail.n = 3;
    fail.pass = false;
    fail.counterexample = "w=321 value=q";
    j = fail.to_json();
    CHECK(j["status"] == "fail");
    CHECK(j["counterexample"] == "w=321 value=q");
}

TEST_CASE("suite registry") {
    const auto& names = verification_suites();
    for (const char* required : {"hecke", "rkl", "minreps", "straighten", "induction",
                                 "routes", "eq6", "psillt", "cor11", "coloring",
                                 "expansions"})
        CHECK(std::find(names.begin(), names.end(), required) != names.end());
    CHECK_THROWS_AS(run_verification("bogus", 2), input_error);
    CHECK_THROWS_AS(run_verification("", 2), input_error);
}

TEST_CASE("single suites run and pass") {
    const auto eq6 = run_verification("eq6", 3);
    REQUIRE(eq6.size() == 1);
    CHECK(eq6[0].identity == "eq6");
    CHECK(eq6[0].n == 3);
    CHECK(eq6[0].pass);
    CHECK(eq6[0].counterexample.empty());

    const auto cor11 = run_verification("cor11", 2);
    REQUIRE(cor11.size() == 8);
    for (const auto& r : cor11) {
        CHECK(r.identity.rfind("cor11.", 0) == 0);
        CHECK(r.pass);
    }
}

TEST_CASE("all fans out over every suite") {
    const auto all = run_verification("all", 2);
    // fixed report count: every suite contributes its identities exactly once
    CHECK(all.size() == 29);
    for (const auto& r : all) {
        CHECK(r.pass);
        CHECK(r.n == 2);
    }
    // emission order starts with the kernel suites
    CHECK(all.front().identity == "hecke.assoc");
    CHECK(all.back().identity == "expansions.dual");
}
