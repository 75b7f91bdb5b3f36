#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rademacher/cli.hpp"
#include "rademacher/dedekind.hpp"
#include "rademacher/error.hpp"
#include "rademacher/fricke_symbol.hpp"
#include "rademacher/render.hpp"
#include "rademacher/text_format.hpp"
#include "rademacher/tridiag.hpp"
#include "support/generators.hpp"

using namespace rademacher;
using namespace rademacher::testing;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
    Outcome o = invoke(std::move(args));
    REQUIRE(o.code == cli::kExitOk);
    return Json::parse(o.out);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string error_code(const Outcome& o) { return Json::parse(o.err)["error"]["code"].get<std::string>(); }

Integer json_integer(const Json& j) { return j.is_string() ? Integer(j.get<std::string>()) : Integer(j.get<long>()); }

}  // namespace

TEST_CASE("documented CLI examples") {
    CHECK(invoke({"phi", "--matrix", "3,1,8,3"}).out == "{\"phi\":0}\n");
    CHECK(invoke({"phi-p", "--p", "5", "--matrix", "1,0,5,1"}).out == "{\"phi_p\":\"0\"}\n");
    CHECK(invoke({"decompose", "--matrix", "0,-1,1,0"}).out == "{\"word\":[],\"endpoints\":[\"1/0\",\"0/1\"]}\n");
    CHECK(Json::parse(invoke({"phi", "--matrix", "3,1,8,3"}).out) == Json::parse(R"({"phi": 0})"));
}

TEST_CASE("other subcommands") {
    Json e = invoke_json({"endpoints", "--word", "-2,1,-2"});
    CHECK(e["endpoints"] == Json::parse(R"(["1/0","0/1","1/2","1/3","3/8"])"));
    CHECK(invoke_json({"endpoints", "--word=[-2,1,-2]"}) == e);

    Json k = invoke_json({"km", "--word", "-2,1,-2"});
    CHECK(k["trace"] == -3);
    CHECK(k["signature"] == -1);
    CHECK(k["phi"] == 0);

    CHECK(invoke_json({"phi-p", "--fricke", "5:0,-1,1,0"})["phi_p"] == "0");
    CHECK(invoke_json({"phi-p", "--p", "5", "--matrix", "0,-1,5,0"})["phi_p"] == "0");
    CHECK(invoke_json({"phi-p", "--p", "5", "--matrix", "1,1,0,1"})["phi_p"] == "3");

    Outcome plain = invoke({"--plain", "phi", "--matrix", "1,1,0,1"});
    CHECK(plain.code == 0);
    CHECK(plain.out == "phi: 1\n");
}

TEST_CASE("big integers are emitted as strings") {
    Json j = invoke_json({"phi", "--matrix", "1,100000000000000000000,0,1"});
    CHECK(j["phi"] == "100000000000000000000");
}

TEST_CASE("error reporting and exit codes") {
    Outcome det = invoke({"phi", "--matrix", "1,2,3,4"});
    CHECK(det.code == cli::kExitDomain);
    CHECK(error_code(det) == "determinant_mismatch");

    Outcome malformed = invoke({"phi", "--matrix", "1,2,3"});
    CHECK(malformed.code == cli::kExitUsage);
    CHECK(error_code(malformed) == "parse_error");

    Outcome unknown = invoke({"frobnicate"});
    CHECK(unknown.code == cli::kExitUsage);
    CHECK(error_code(unknown) == "usage_error");

    Outcome none = invoke({});
    CHECK(none.code == cli::kExitUsage);

    Outcome prime = invoke({"phi-p", "--p", "9", "--matrix", "1,0,9,1"});
    CHECK(prime.code == cli::kExitDomain);
    CHECK(error_code(prime) == "not_odd_prime");

    Outcome divis = invoke({"phi-p", "--p", "5", "--matrix", "1,0,1,1"});
    CHECK(error_code(divis) == "divisibility_violation");

    Outcome low = invoke({"verify-eta", "--matrix", "0,-1,1,0", "--z", "0,0.00001"});
    CHECK(low.code == cli::kExitDomain);
    CHECK(error_code(low) == "domain_error");

    Outcome render_bad = invoke({"render", "--word", "1", "--x-min", "1", "--x-max", "0"});
    CHECK(render_bad.code == cli::kExitUsage);
}

TEST_CASE("verify-theorem1 exit code follows the tolerance") {
    std::vector<std::string> base{"verify-theorem1", "--p", "5", "--matrix", "1,1,0,1", "--z", "1/3,1/2",
                                  "--precision", "40"};
    Outcome ok = invoke(base);
    CHECK(ok.code == cli::kExitOk);
    Json j = Json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["precision"] == 40);

    // A residual that is exactly representable shows the boundary: a
    // tolerance equal to the residual fails, one above it passes.
    std::vector<std::string> strict = base;
    strict.insert(strict.end(), {"--tolerance", "1e-300"});
    Outcome tight = invoke(strict);
    double residual = std::stod(Json::parse(tight.out)["residual"].get<std::string>());
    CHECK(tight.code == (residual < 1e-300 ? cli::kExitOk : cli::kExitDomain));

    std::vector<std::string> loose = base;
    loose.insert(loose.end(), {"--tolerance", "1e-20"});
    CHECK(invoke(loose).code == cli::kExitOk);

    std::vector<std::string> fricke{"verify-theorem1", "--fricke", "7:0,-1,1,0", "--z", "0.1,0.4"};
    CHECK(invoke(fricke).code == cli::kExitOk);
    fricke.insert(fricke.end(), {"--precision", "30", "--tolerance", "1e-80"});
    Outcome f = invoke(fricke);
    CHECK(f.code == cli::kExitDomain);
    CHECK(Json::parse(f.out)["pass"] == false);
}

TEST_CASE("verify commands exit 1 when the residual exceeds the tolerance") {
    // At P = 30 the residual sits far above 1e-60.
    Outcome o = invoke({"verify-eta", "--matrix", "3,1,8,3", "--z", "1/3,1/2", "--precision", "30",
                        "--tolerance", "1e-60"});
    Json j = Json::parse(o.out);
    bool pass = j["pass"].get<bool>();
    CHECK_FALSE(pass);
    CHECK(o.code == cli::kExitDomain);
    double residual = std::stod(j["residual"].get<std::string>());
    CHECK(pass == (residual < 1e-60));
}

TEST_CASE("RADEMACHER_PRECISION overrides the default precision") {
    setenv("RADEMACHER_PRECISION", "35", 1);
    Json j = invoke_json({"verify-eta", "--matrix", "1,1,0,1", "--z", "0,1"});
    unsetenv("RADEMACHER_PRECISION");
    CHECK(j["precision"] == 35);
    CHECK(invoke_json({"verify-eta", "--matrix", "1,1,0,1", "--z", "0,1"})["precision"] == 50);
}

TEST_CASE("JSON outputs round-trip and recompute") {
    Rng rng(71);
    for (int i = 0; i < 200; ++i) {
        UnimodularMatrix g = scrambled_matrix(rng, 10, 6);
        std::string text = format_matrix(g);
        Json phi = invoke_json({"phi", "--matrix=" + text});
        CHECK(json_integer(phi["phi"]) == rademacher_phi(g));

        Json dec = invoke_json({"decompose", "--matrix=" + text});
        std::vector<Integer> exps;
        for (const auto& a : dec["word"]) exps.push_back(json_integer(a));
        EdgeWord w(exps);
        CHECK(psl_eq(reconstruct(w), g));
        std::vector<Farey> pts;
        for (const auto& s : dec["endpoints"]) pts.push_back(Farey::parse(s.get<std::string>()));
        CHECK(pts == endpoints(w));

        Json km = invoke_json({"km", "--word=" + dec["word"].dump()});
        CHECK(json_integer(km["phi"]) == rademacher_phi(g));
        CHECK(json_integer(km["trace"]) == trace(w));
    }
    for (long pv : {3L, 5L, 7L}) {
        OddPrime p(pv);
        for (int i = 0; i < 40; ++i) {
            FrickeElement e = uniform(rng, 0, 1) ? random_gamma0(rng, p) : random_coset(rng, p);
            std::string arg = e.in_gamma0() ? format_matrix(e.gamma0_matrix()) : "";
            Json j = e.in_gamma0() ? invoke_json({"phi-p", "--p", std::to_string(pv), "--matrix=" + arg})
                                   : invoke_json({"phi-p", "--fricke=" + format_fricke(e)});
            CHECK(parse_rational(j["phi_p"].get<std::string>()) == phi_p(e));
        }
    }
}

TEST_CASE("render: structure of the drawing of (-2,1,-2)") {
    std::string svg = render_svg({-2, 1, -2}, RenderOptions::fit({-2, 1, -2}));
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (std::size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
        return n;
    };
    CHECK(count("class=\"edge\"") == 4);
    CHECK(count(" A ") == 3);  // semicircular arcs
    for (const char* label : {">1/0<", ">0/1<", ">1/2<", ">1/3<", ">3/8<"}) CHECK(count(label) == 1);

    std::string base = render_svg({}, RenderOptions::fit({}));
    std::size_t base_edges = 0;
    for (std::size_t pos = base.find("class=\"edge\""); pos != std::string::npos;
         pos = base.find("class=\"edge\"", pos + 1))
        ++base_edges;
    CHECK(base_edges == 1);
    CHECK(base.find(" A ") == std::string::npos);

    CHECK(render_svg({-2, 1, -2}, RenderOptions::fit({-2, 1, -2})) == svg);
}

TEST_CASE("render options and decimal formatting") {
    CHECK(format_fixed(make_rational(1, 3)) == "0.333333333333");
    CHECK(format_fixed(make_rational(-2, 3)) == "-0.666666666667");
    CHECK(format_fixed(make_rational(5, 2), 0) == "2");
    CHECK(format_fixed(make_rational(7, 2), 0) == "4");
    CHECK(format_fixed(make_rational(-5, 2), 0) == "-2");
    CHECK(format_fixed(make_rational(1, 8), 2) == "0.12");
    CHECK(format_fixed(0) == "0.000000000000");
    RenderOptions bad;
    bad.x_min = 1;
    bad.x_max = 1;
    CHECK_THROWS_AS(bad.validate(), Error);
    RenderOptions zero_cap;
    zero_cap.height_cap = 0;
    CHECK_THROWS_AS(zero_cap.validate(), Error);
}

TEST_CASE("render golden file for (-2,1,-2)") {
    std::string expected = read_file(std::string(RADEMACHER_TEST_DATA) + "/path_m2_1_m2.svg");
    REQUIRE_FALSE(expected.empty());
    CHECK(render_svg({-2, 1, -2}, RenderOptions::fit({-2, 1, -2})) == expected);

    std::string path = (std::filesystem::temp_directory_path() / "rademacher_cli_render.svg").string();
    Json j = invoke_json({"render", "--word", "-2,1,-2", "--out", path});
    CHECK(j["bytes"] == expected.size());
    CHECK(read_file(path) == expected);
    std::remove(path.c_str());
    CHECK(invoke({"render", "--word", "-2,1,-2"}).out == expected);
}
