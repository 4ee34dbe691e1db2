#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resolve/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "resolve");
    std::ostringstream out, err;
    int code = resolve::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
    auto dir = fs::temp_directory_path() / "resolve_cli_test";
    fs::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

const std::string kStd = write("std.txt", "vars: a b\na^2\na*b\nb^3\n");
const std::string kTriangle = write("triangle.txt", "vars: a b c\na*b\na*c\nb*c\n");
const std::string kLinear = write("linear.txt", "vars: a b c\na\nb\nc\n");
const std::string kKoszul = write("koszul.txt", "vars: a b c\na\nb^2\nc^3\n");
const std::string kPath = write("path.txt", "0,1\n1,2\n");

}  // namespace

TEST_CASE("taylor json") {
    auto r = run({"taylor", kKoszul, "--format", "json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    std::vector<std::size_t> ranks;
    for (const auto& m : j["modules"]) ranks.push_back(m.size());
    CHECK(ranks == std::vector<std::size_t>{1, 3, 3, 1});
}

TEST_CASE("check reports the homology witness") {
    auto r = run({"check", kLinear, "--complex", kPath});
    CHECK(r.code == 2);
    CHECK(r.out.find("a*c") != std::string::npos);
    CHECK(r.out.find("rat") != std::string::npos);
    auto ok = run({"check", kStd, "--complex", kPath, "--field", "gf:2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("gf:2") != std::string::npos);
    auto j = nlohmann::json::parse(run({"check", kLinear, "--complex", kPath, "--format", "json"}).out);
    CHECK(j["verdict"]["witness"] == "a*c");
    CHECK(j["closure_added"] == 4);
}

TEST_CASE("intersect") {
    auto r = run({"intersect", kTriangle});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("intersection = Scarf, 4 faces", 0) == 0);
}

TEST_CASE("lyubeznik") {
    auto all = run({"lyubeznik", kStd, "--all"});
    CHECK(all.code == 0);
    CHECK(all.out.rfind("2 distinct Lyubeznik complexes", 0) == 0);
    CHECK(run({"lyubeznik", kStd, "--order", "ab,a2,b3"}).code == 0);
    CHECK(run({"lyubeznik", kStd, "--order", "a*b, a^2, b^3"}).code == 0);
    CHECK(run({"lyubeznik", kStd, "--order", "1,0,2"}).code == 0);
    CHECK(run({"lyubeznik", kStd, "--order", "1,0"}).code == 1);
    CHECK(run({"lyubeznik", kStd, "--order", "1,1,0"}).code == 1);
    CHECK(run({"lyubeznik", kStd, "--order", "a,ab,b3"}).code == 1);
    CHECK(run({"lyubeznik", kStd}).code == 1);
    CHECK(run({"lyubeznik", kStd, "--all", "--max-orders", "5"}).code == 1);
}

TEST_CASE("betti, scarf and minimize") {
    auto b = run({"betti", kStd, "--format", "json"});
    CHECK(b.code == 0);
    auto j = nlohmann::json::parse(b.out);
    CHECK(j["totals"] == nlohmann::json::array({1, 3, 2}));
    auto bi = nlohmann::json::parse(run({"betti", kStd, "--for-ideal", "--format", "json"}).out);
    CHECK(bi["totals"] == nlohmann::json::array({3, 2}));
    auto s = run({"scarf", kTriangle});
    CHECK(s.code == 0);
    CHECK(s.out.find("a*b*c") != std::string::npos);
    auto m = run({"minimize", kStd, "--format", "json"});
    CHECK(m.code == 0);
    CHECK(nlohmann::json::parse(m.out)["complex"]["modules"].size() == 3);
    CHECK(run({"minimize", kStd, "--shuffle", "--seed", "4"}).out == run({"minimize", kStd, "--shuffle", "--seed", "4"}).out);
}

TEST_CASE("selftest") {
    auto r = run({"selftest", "--count", "5", "--seed", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("errors exit 1 with a one-line message") {
    for (auto args : std::vector<std::vector<std::string>>{{"taylor", "/nonexistent"},
                                                           {"bogus"},
                                                           {"taylor", kStd, "--nope"},
                                                           {"taylor", kStd, "--field", "gf:6"},
                                                           {"taylor", kStd, "--max-gens", "2"},
                                                           {"check", kStd, "--complex", kStd},
                                                           {}}) {
        auto r = run(args);
        CHECK(r.code == 1);
        CHECK_FALSE(r.err.empty());
        CHECK(r.err.find('\n') == r.err.size() - 1);
    }
}

TEST_CASE("environment overrides") {
    setenv("RESOLVE_FIELD", "gf:2", 1);
    auto r = run({"check", kStd, "--complex", kPath});
    unsetenv("RESOLVE_FIELD");
    CHECK(r.out.find("gf:2") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
    for (auto cmd : {"taylor", "scarf", "betti", "intersect", "minimize"})
        CHECK(run({cmd, kTriangle}).out == run({cmd, kTriangle}).out);
}
