#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "support/fixtures.hpp"
#include "skewpbw/cli.hpp"
#include "skewpbw/io.hpp"

using namespace skewpbw;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = runCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tempFile(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("skewpbw-cli-" + name + ".json")).string();
}

std::string catalogFile(const std::string& name) {
  const std::string path = tempFile(name);
  writeJsonFile(presentationToJson(buildCatalog(name)), path);
  return path;
}

}  // namespace

TEST_CASE("mul and nf") {
  const std::string w = catalogFile("weyl1");
  Run r = run({"mul", "-p", w, "x1", "t"});
  CHECK(r.code == 0);
  CHECK(r.out == "t*x1 + 1\n");
  r = run({"nf", "-p", w, "x1*t - t*x1"});
  CHECK(r.out == "1\n");
  r = run({"add", "-p", w, "x1", "x1", "t"});
  CHECK(r.out == "2*x1 + t\n");
  r = run({"mul", "-p", w, "--format", "json", "x1", "t"});
  CHECK(Json::parse(r.out)["text"] == "t*x1 + 1");
  CHECK(run({"mul", "-p", w, "x1", "t"}).out == run({"mul", "-p", w, "x1", "t"}).out);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "-p", catalogFile("sl2")}).code == 0);
  const Run broken = run({"check", "-p", catalogFile("sl2-broken")});
  CHECK(broken.code == 1);
  CHECK(broken.out.find("x3 x2 x1") != std::string::npos);
  CHECK(run({"check", "-p", catalogFile("zero-constant")}).code == 1);
}

TEST_CASE("ore commands echo the identity") {
  const std::string w = catalogFile("weyl1");
  Run r = run({"ore-left", "-p", w, "x1", "t"});
  CHECK(r.code == 0);
  CHECK(r.out == "u = t^2\ng = t*x1 - 1\nu*f == g*s: t^2*x1 == t^2*x1\n");
  r = run({"ore-right", "-p", w, "x1", "t"});
  CHECK(r.code == 0);
  CHECK(r.out.find("f*u == s*g: ") != std::string::npos);
}

TEST_CASE("fraction commands") {
  const std::string w = catalogFile("weyl1");
  CHECK(run({"frac-eq", "-p", w, "t \\ (t*x1)", "1 \\ x1"}).out == "true\n");
  CHECK(run({"frac-eq", "-p", w, "t \\ 1", "t \\ (1 + t)"}).out == "false\n");
  const Run prod = run({"frac-mul", "-p", w, "t \\ x1", "t \\ 1"});
  CHECK(prod.code == 0);
  CHECK(run({"frac-eq", "-p", w, prod.out.substr(0, prod.out.size() - 1), "t^3 \\ (t*x1 - 1)"}).out == "true\n");
  CHECK(run({"frac-add", "-p", w, "t \\ 1", "t^2 \\ 1"}).code == 0);
  CHECK(run({"frac-eq", "-p", w, "x1 \\ 1", "1 \\ 1"}).code == 2);
  CHECK(run({"frac-eq", "-p", w, "t 1", "1 \\ 1"}).code == 2);
}

TEST_CASE("graded commands") {
  const std::string w = catalogFile("weyl1");
  const std::string out = tempFile("gr");
  CHECK(run({"gr", "-p", w, "-o", out}).code == 0);
  CHECK(presentationFromJson(readJsonFile(out)) == associatedGradedPresentation(weylPresentation(1)));
  CHECK(run({"symbol", "-p", w, "t*x1 + 1"}).out == "t*x1\n");
  CHECK(run({"symbol", "-p", w, "0"}).code == 2);
}

TEST_CASE("quantum commands") {
  const std::string qfile = tempFile("q2");
  writeJsonFile(Json::parse(R"({"ring": {"kind": "rational-function", "parameter": "q"}, "n": 2, "upper": [["q"]]})"),
                qfile);
  const std::string space = tempFile("qspace");
  CHECK(run({"qspace", "-q", qfile, "-o", space}).code == 0);
  CHECK(presentationFromJson(readJsonFile(space)) == quantumPlanePresentation());
  CHECK(run({"torus-mul", "-q", qfile, "-r", "1", "x1^-1", "x2*x1"}).out == "q*x2\n");
  CHECK(run({"to-laurent", "-p", space, "-r", "1", "x1 \\ (x2*x1)"}).out == "q*x2\n");
  CHECK(run({"to-fraction", "-p", space, "-r", "1", "x1^-2 + x1^-1"}).out == "x1^2 \\ (x1 + 1)\n");
  CHECK(run({"frac-eq", "-p", space, "-r", "1", "x1 \\ x2", "(x1^2) \\ (x1*x2)"}).code == 0);
  CHECK(run({"gk-check", "1", "2", qfile, "--samples", "5"}).code == 0);
  CHECK(run({"gk-check", "1", "2", qfile, "--samples", "5", "--corrupt"}).code == 1);
  CHECK(run({"gk-check", "1", "3", qfile}).code == 2);
}

TEST_CASE("catalog command") {
  Run r = run({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sl2-broken") != std::string::npos);
  r = run({"catalog", "emit", "shift"});
  CHECK(presentationFromJson(Json::parse(r.out)) == shiftPresentation());
  CHECK(run({"catalog", "emit", "nope"}).code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"mul"}).code == 2);
  CHECK(run({"mul", "-p", "/nonexistent.json", "x1"}).code == 2);
  const std::string w = catalogFile("weyl1");
  const Run r = run({"mul", "-p", w, "x^(-1)"});
  CHECK(r.code == 2);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(run({"mul", "-p", w, "--format", "xml", "x1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("fraction literals") {
  const AlgebraPtr w = fixtures::algebra("weyl1");
  const NonzeroCoefficients S(w);
  const Fraction x = parseFraction("(t + 1) \\ (x1 - 2)", S);
  CHECK(x.side == Side::Left);
  CHECK(formatFraction(x) == "(t + 1) \\ (x1 - 2)");
  const Fraction y = parseFraction("x1 / t", S);
  CHECK(y.side == Side::Right);
  CHECK(formatFraction(y) == "x1 / t");
  CHECK_THROWS_AS(parseFraction("x1 / t / t", S), Error);
}
