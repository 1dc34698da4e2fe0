#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "support/fixtures.hpp"
#include "skewpbw/io.hpp"

using namespace skewpbw;
using fixtures::algebra;
using fixtures::el;

TEST_CASE("element text") {
  const AlgebraPtr w = algebra("weyl1");
  CHECK(formatElement(w->zero()) == "0");
  CHECK(formatElement(el(w, "x1*t")) == "t*x1 + 1");
  CHECK(el(w, "x1 + x1") == el(w, "2*x1"));
  CHECK(formatElement(el(w, "-(t^2+1)*x1 - 3/2")) == "(-t^2 - 1)*x1 - 3/2");
  const AlgebraPtr qp = algebra("quantum-plane");
  CHECK(el(qp, "x2*x1") == el(qp, "q*x1*x2"));
  CHECK(formatElement(el(qp, "x2^2*x1^2")) == "q^4*x1^2*x2^2");
  CHECK(el(qp, "x1/(2*q)") == el(qp, "1/(2*q)*x1"));
}

TEST_CASE("element parse errors") {
  const AlgebraPtr w = algebra("weyl1");
  for (const char* bad : {"x1^(-1)", "x1^-1", "x3", "x1 +", "(x1", "x1 / x1", "x1 / t", "2 ** x1", "u"}) {
    try {
      parseElement(bad, w);
      FAIL("accepted " << bad);
    } catch (const Error& e) {
      CHECK_MESSAGE(e.kind() == ErrorKind::Parse, bad);
    }
  }
  try {
    parseElement("x1 + $", w);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 5") != std::string::npos);
  }
}

TEST_CASE("format and parse round-trip") {
  Rng rng(23);
  for (const auto& name : fixtures::benchmarkNames()) {
    const AlgebraPtr a = algebra(name);
    for (int k = 0; k < 50; ++k) {
      const Element f = randomElement(a, rng, {});
      CHECK_MESSAGE(parseElement(formatElement(f), a) == f, formatElement(f));
    }
  }
}

TEST_CASE("presentation JSON round-trip") {
  for (const auto& entry : catalog()) {
    const Presentation p = buildCatalog(entry.name);
    const Json j = presentationToJson(p);
    CHECK_MESSAGE(presentationFromJson(j) == p, entry.name);
    CHECK(presentationFromJson(Json::parse(j.dump())) == p);
  }
  const Presentation lw = localizePresentation(weylPresentation(1));
  CHECK(presentationFromJson(presentationToJson(lw)) == lw);
}

TEST_CASE("presentation JSON defaults and errors") {
  const Json minimal = Json::parse(R"({"ring": {"kind": "rational"}, "n": 2})");
  const Presentation p = presentationFromJson(minimal);
  CHECK(p.c(0, 1).isOne());
  CHECK(p.sigma(0).isIdentity());

  const Json badTail = Json::parse(
      R"({"ring": {"kind": "rational"}, "n": 2, "tails": [{"pair": [1, 2], "terms": {"3": "1"}}]})");
  CHECK_THROWS_AS(presentationFromJson(badTail), Error);
  CHECK_THROWS_AS(presentationFromJson(Json::parse(R"({"ring": {"kind": "octonions"}, "n": 1})")), Error);
  CHECK_THROWS_AS(readJsonFile("/nonexistent/file.json"), Error);
}

TEST_CASE("parameter matrix JSON") {
  const Json j = Json::parse(R"({"ring": {"kind": "rational-function", "parameter": "q"}, "n": 3,
                                 "upper": [["q", "q^2"], ["q^3"]]})");
  const QuantumSpec spec = quantumSpecFromJson(j);
  CHECK(spec.q(2, 1) == parseCoeff("1/q^3", spec.q.ring()));
  CHECK(spec.sigma.size() == 3);
  const QuantumSpec again = quantumSpecFromJson(quantumSpecToJson(spec));
  CHECK(again.q == spec.q);
  CHECK(again.sigma == spec.sigma);
}

TEST_CASE("JSON files") {
  const auto path = std::filesystem::temp_directory_path() / "skewpbw-io-test.json";
  writeJsonFile(presentationToJson(sl2Presentation()), path.string());
  CHECK(presentationFromJson(readJsonFile(path.string())) == sl2Presentation());
  std::filesystem::remove(path);
  const Json e = elementToJson(el(algebra("weyl1"), "t*x1 + 1"));
  CHECK(e["text"] == "t*x1 + 1");
  CHECK(e["terms"].size() == 2);
}
