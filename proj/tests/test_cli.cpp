#include <cstdlib>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "rbs/json_io.hpp"

using namespace rbs;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string line(const Result& r) {
    auto s = r.out;
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

const Signature kXY({"x", "y"});

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("normalize") {
    auto r = run({"--generators", "x,y", "normalize", "R(x)R(y)"});
    CHECK(r.code == 0);
    CHECK(line(r) == "R(R(x) y) + R(x S(y))");
    CHECK(line(run({"normalize", "1"})) == "1");
    auto five = run({"normalize", "R(1)R(1)R(1)"});
    CHECK(line(five) == "R(R(1) S(1)) + R(R(R(1))) + R(R(S(1))) + R(S(R(1))) + R(S(S(1)))");
    CHECK(parse_poly(line(five), Signature::standard()) ==
          normal_form(parse_poly("R(1)R(1)R(1)", Signature::standard()), Signature::standard()));
    CHECK(run({"normalize", "R(("}).code == 2);
    CHECK(run({"normalize", "q"}).code == 2);
}

TEST_CASE("normalize --trace") {
    auto r = run({"normalize", "--trace", "R(1)R(1)"});
    CHECK(r.code == 0);
    CHECK(r.out == "# 1 * R(1) R(1) -> R(R(1)) + R(S(1))\nR(R(1)) + R(S(1))\n");
    auto j = Json::parse(run({"--format", "json", "normalize", "--trace", "S(1)S(1)"}).out);
    REQUIRE(j["steps"].size() == 1);
    CHECK(j["steps"][0]["word"] == "S(1) S(1)");
    CHECK(j["steps"][0]["context"] == "★");
    CHECK(j["result"].size() == 2);
}

TEST_CASE("mul") {
    CHECK(line(run({"--generators", "x,y", "mul", "x", "y"})) == "x y");
    CHECK(line(run({"--generators", "x,y", "mul", "S(x)", "S(y)"})) == "S(R(x) y) + S(x S(y))");
    CHECK(line(run({"mul", "R(1)", "S(1)"})) == "R(1) S(1)");
    // arguments are normalized before multiplying
    CHECK(line(run({"mul", "R(1)R(1)", "1"})) == "R(R(1)) + R(S(1))");
    CHECK(run({"mul", "x"}).code == 2);
}

TEST_CASE("coprod counit antipode") {
    CHECK(line(run({"coprod", "x"})) == "1⊗x + x⊗1");
    CHECK(line(run({"--ascii", "coprod", "x"})) == "1 (x) x + x (x) 1");
    CHECK(line(run({"coprod", "S(1)"})) == "1⊗S(1) + R(1)⊗1");
    CHECK(line(run({"counit", "1"})) == "1");
    CHECK(line(run({"counit", "5 + 2*x"})) == "5");
    CHECK(line(run({"antipode", "S(1)"})) == "-R(1)");
    auto sig = Signature::standard();
    auto t = run({"coprod", "R(S(x))"});
    Bialgebra h(sig);
    CHECK(parse_tensor(line(t), sig) == h.coproduct(parse_word("R(S(x))", sig)));
    auto j = Json::parse(run({"--format", "json", "coprod", "x"}).out);
    CHECK(tensor_from_json(j, sig) == parse_tensor("1⊗x + x⊗1", sig));
    CHECK(j[0]["coeff"] == "1/1");
}

TEST_CASE("basis") {
    auto r = run({"basis", "--max-degree", "2"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::vector<std::size_t> counts;
    std::size_t words = 0;
    for (std::string l; std::getline(in, l);) {
        if (l.rfind("# degree ", 0) == 0) {
            counts.push_back(std::stoul(l.substr(l.find(':') + 1)));
        } else {
            ++words;
            CHECK(is_rbs_word(parse_word(l, Signature::standard())));
        }
    }
    CHECK(counts == std::vector<std::size_t>{1, 3, 13});
    CHECK(words == 17);
    CHECK(run({"basis", "--max-degree", "0"}).out == "# degree 0: 1\n1\n");
    auto j = Json::parse(run({"--format", "json", "basis", "--max-degree", "1"}).out);
    CHECK(j["degrees"][1]["count"] == 3);
}

TEST_CASE("signature options") {
    CHECK(line(run({"--generators", "a,b", "--operators", "P", "mul", "P(a)", "P(b)"})) ==
          "P(P(a) b) + P(a P(b))");
    CHECK(run({"--generators", "x,x", "normalize", "x"}).code == 2);
    CHECK(run({"--operators", "", "normalize", "x"}).code == 2);
    CHECK(run({"--format", "yaml", "normalize", "x"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify exit codes") {
    CHECK(run({"verify", "gsb"}).code == 0);
    CHECK(run({"verify", "hopf", "--max-degree", "3", "--random-pairs", "50"}).code == 0);
    CHECK(run({"verify", "gsb", "--mutate", "S:2"}).code == 1);
    CHECK(run({"verify", "gsb", "--bounds", "uvw=1,pi=x"}).code == 2);
    CHECK(run({"verify", "gsb", "--bounds", "depth=2"}).code == 2);
    CHECK(run({"verify", "gsb", "--mutate", "T:0"}).code == 2);
    CHECK(run({"verify", "gsb", "--mutate", "R:3"}).code == 2);
    CHECK(run({"verify", "everything"}).code == 2);
}

TEST_CASE("verify json reports") {
    auto g = Json::parse(run({"--format", "json", "verify", "gsb"}).out);
    CHECK(g["passed"] == true);
    REQUIRE(g["families"].size() == 10);
    for (const auto& f : g["families"]) {
        CHECK(f.contains("family"));
        CHECK(f.contains("instances_checked"));
        CHECK(f["failures"].empty());
    }
    auto bad = Json::parse(run({"--format", "json", "verify", "gsb", "--mutate", "R:1"}).out);
    CHECK(bad["passed"] == false);
    const auto& fail = bad["families"][0]["failures"][0];
    for (const char* key : {"u", "v", "w", "pi", "residual"}) CHECK(fail.contains(key));

    auto h = Json::parse(run({"--format", "json", "verify", "hopf", "--max-degree", "3"}).out);
    for (const auto& s : h["suites"]) {
        CHECK(s.contains("suite"));
        CHECK(s.contains("checked"));
        CHECK(s["failures"].empty());
    }
    CHECK(h["informational"]["right_antipode"] == "pass");
    CHECK(h["informational"]["left_antipode_holds"] == false);

    auto all = Json::parse(run({"--format", "json", "verify", "all", "--max-degree", "2"}).out);
    CHECK(all.contains("gsb"));
    CHECK(all.contains("hopf"));
}

TEST_CASE("same seed, same bytes") {
    std::vector<std::string> args{"--format", "json", "verify", "hopf", "--max-degree", "3", "--seed", "7"};
    auto a = run(args);
    ::setenv("RBS_KERNEL_THREADS", "1", 1);
    auto b = run(args);
    ::unsetenv("RBS_KERNEL_THREADS");
    CHECK(a.out == b.out);
    ::setenv("RBS_KERNEL_THREADS", "lots", 1);
    CHECK(run(args).code == 2);
    ::unsetenv("RBS_KERNEL_THREADS");
}

TEST_CASE("json round trip") {
    auto sig = Signature::standard();
    Poly p = parse_poly("-1/3*R(x) + 2 + S(1) x", sig);
    CHECK(poly_from_json(to_json(p, sig), sig) == p);
    CHECK(to_json(Poly(), sig).dump() == "[]");
    CHECK(to_json(p, sig)[0]["coeff"] == "1/1");
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"([{"coeff": 1, "word": "x"}])"), sig), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"x": 1})"), sig), ParseError);
}

}  // TEST_SUITE
