#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include "cgh/matrix.hpp"
#include "cgh/padic.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace cgh;
using Json = nlohmann::json;

namespace {

const std::string kCli = CGH_CLI_PATH;
const std::string kDir = CGH_FIXTURE_DIR;

struct Result {
    int code;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = "'" + kCli + "' " + args + " 2>&1";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = fread(buf, 1, sizeof buf, f)) out.append(buf, n);
    int status = pclose(f);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json machine(const std::string& args) {
    Result r = run(args + " --out machine");
    INFO(r.out);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

PadicNumber digits(std::uint32_t p, std::vector<long> d, int prec) { return PadicNumber::from_digits(p, 0, d, prec); }

Matrix<PadicNumber> rows_of(const Json& rows, std::uint32_t p) {
    Matrix<PadicNumber> m(rows.size(), rows[0].size(), PadicNumber::zero(p, 1));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = PadicNumber::parse(rows[i][j].get<std::string>(), p);
    return m;
}

const char* kG2 = "x^5+5x^4-168x^3+1584x^2-10368x+20736";
const char* kG2p7 = "x^5-4x^4-48x^3+64x^2+512x+256";

} // namespace

TEST_CASE("cup-matrix prints the rational cup product matrix") {
    Json doc = machine(std::string("cup-matrix --curve \"") + kG2 + "\"");
    Json expected = {{"0", "0", "0", "1/3"}, {"0", "0", "1", "-10/3"}, {"0", "-1", "0", "-56"}, {"-1/3", "10/3", "56", "0"}};
    CHECK(doc["matrix"] == expected);
    CHECK(doc["basis"].size() == 4);
}

TEST_CASE("canonical-subspace matches the published basis at level 4") {
    Json doc = machine(std::string("canonical-subspace --curve \"") + kG2p7 + "\" --p 7 --n 4");
    CHECK(doc["N"] == 4);
    CHECK(doc["cC_symmetric"] == true);
    auto c = [](long v) { return PadicNumber::from_integer(7, v, 4); };
    Matrix<PadicNumber> paper(2, 4, c(0));
    const PadicNumber r0[] = {digits(7, {0, 1, 6, 2}, 4), digits(7, {2, 6, 1, 4}, 4), c(1), c(0)};
    const PadicNumber r1[] = {digits(7, {2, 1, 6, 0}, 4), digits(7, {0, 4, 4, 6}, 4), c(-12), c(3)};
    for (std::size_t j = 0; j < 4; ++j) paper(0, j) = r0[j], paper(1, j) = r1[j];
    CHECK(span_equal_mod_pN(rows_of(doc["basis_rows"], 7), paper, 4));
    // both routes agree
    Json ladder = machine(std::string("canonical-subspace --curve \"") + kG2p7 + "\" --p 7 --n 2 --method ladder");
    Json closed = machine(std::string("canonical-subspace --curve \"") + kG2p7 + "\" --p 7 --n 2");
    CHECK(ladder["basis_rows"] == closed["basis_rows"]);
}

TEST_CASE("local-height replays the genus-2 fixture") {
    std::string args = "local-height --oracle '" + kDir + "/g2_p5.json' --D1 \"(-8,528)-w\" --D2 \"(12,432)-((-12,-720))\" --subspace canonical";
    Json doc = machine(args);
    CHECK(doc["local_height"]["value"] == "5 + 3*5^2 + 2*5^3 + 2*5^4 + 3*5^5 + 4*5^6 + O(5^7)");
    CHECK(doc["local_height"]["valuation"] == 1);
    CHECK(doc["local_height"]["precision"] == 7);
    CHECK(doc["N"] == 7);
    // text output carries the same digit string
    Result text = run(args);
    CHECK(text.code == 0);
    CHECK(text.out.find("local_height: 5 + 3*5^2 + 2*5^3 + 2*5^4 + 3*5^5 + 4*5^6 + O(5^7)") != std::string::npos);
}

TEST_CASE("global-height on the genus-1 fixture with an explicit unit-root line") {
    Json doc = machine("global-height --backend 'oracle:" + kDir + "/g1_p43.json' --subspace 'file:" + kDir +
                       "/g1_p43_unit_root.json' --D1 \"(2523,114912)-w\" --D2 \"(219,16416)-w\" --away 2:9");
    CHECK(doc["local_height"]["value"] == "29*43 + 28*43^2 + 10*43^3 + 39*43^4 + 7*43^5 + O(43^6)");
    CHECK(doc["global_height"]["value"] == "19*43 + 7*43^2 + 8*43^3 + 2*43^4 + 28*43^5 + O(43^6)");
}

TEST_CASE("integrate and psi through the reference integrator") {
    Json zero = machine("integrate --curve \"x^3+1\" --p 7 --form omega_0 --from \"(2,-3)\" --to \"(2,3)\"");
    CHECK(zero["integral"]["value"] == "O(7^6)");
    CHECK(zero["backend"] == "kedlaya");
    Json ps = machine("psi --curve \"x^3+1\" --p 7 --D1 \"(2,3)-w\"");
    CHECK(ps["psi"].size() == 2);
    CHECK(ps["symbols"].size() == 2);
    Json ord = machine("is-ordinary --curve \"x^5-2x^4+3x^3+x+5\" --p 11");
    CHECK(ord["ordinary"] == true);
    Json ss = machine("is-ordinary --curve \"x^5+1\" --p 7");
    CHECK(ss["ordinary"] == false);
}

TEST_CASE("errors map to distinct exit codes") {
    const std::string g2 = "--oracle '" + kDir + "/g2_p5.json' --D1 \"(-8,528)-w\" --D2 \"(12,432)-((-12,-720))\"";
    // branch mismatch between table and job is a hard error
    Result branch = run("local-height " + g2 + " --branch 1");
    CHECK(branch.code == 3);
    CHECK(branch.out.find("branch") != std::string::npos);
    // usage
    CHECK(run("").code == 2);
    CHECK(run("cup-matrix").code == 2);
    CHECK(run("cup-matrix --curve \"x^5+1\" --out html").code == 2);
    CHECK(run("local-height " + g2 + " --p 7").code == 2);
    CHECK(run("integrate --curve \"x^3+1\" --p 7 --form omega_x --from \"(2,3)\" --to \"(0,1)\"").code == 2);
    // domain: supersingular reduction has no unit-root subspace
    CHECK(run("unit-root --curve \"x^3+1\" --p 5 --n 3").code == 3);
    // precision: p^n too large for the word-size canonical subspace route
    CHECK(run("canonical-subspace --curve \"x^5+x+3\" --p 11 --n 12").code == 4);
    // capability: third-kind forms are outside the reference integrator
    CHECK(run("integrate --curve \"x^3+1\" --p 7 --D1 \"(2,3)-(0,1)\" --from \"(2,-3)\" --to \"(0,-1)\"").code == 5);
    // machine mode reports the error as a document
    Result m = run("local-height " + g2 + " --branch 1 --out machine");
    CHECK(m.code == 3);
    Json err = Json::parse(m.out);
    CHECK(err["error"]["class"] == "domain");
}
