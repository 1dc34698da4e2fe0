#include "skewpbw/io.hpp"

#include <fstream>

#include "skewpbw/text.hpp"

namespace skewpbw {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string str(const Json& j, const std::string& what) {
  if (!j.is_string()) bad(what + " must be a string");
  return j.get<std::string>();
}

Coeff coeffFrom(const Json& j, const CoeffRing& ring, const std::string& what) {
  if (j.is_number_integer()) return ring.constant(Rational(static_cast<long>(j.get<long long>())));
  return parseCoeff(str(j, what), ring);
}

Json imageTable(const std::vector<Coeff>& images, const CoeffRing& ring) {
  Json t = Json::object();
  for (std::size_t v = 0; v < images.size(); ++v) t[ring.symbols()[v]] = formatCoeff(images[v], ring);
  return t;
}

std::vector<Coeff> imagesFrom(const Json& j, const CoeffRing& ring, const std::string& what) {
  if (!j.is_object()) bad(what + " must map ring symbols to values");
  if (j.size() != ring.generatorCount()) bad(what + " must give one image per ring symbol");
  std::vector<Coeff> out;
  for (const auto& sym : ring.symbols()) {
    if (!j.contains(sym)) bad(what + " lacks an image for '" + sym + "'");
    out.push_back(coeffFrom(j.at(sym), ring, what));
  }
  return out;
}

Json sigmaToJson(const Endomorphism& s, const CoeffRing& ring) {
  if (s.isIdentity()) return "identity";
  Json j{{"images", imageTable(*s.images, ring)}};
  if (s.inverseImages) j["inverse"] = imageTable(*s.inverseImages, ring);
  return j;
}

Endomorphism sigmaFromJson(const Json& j, const CoeffRing& ring) {
  if (j.is_string()) {
    if (j.get<std::string>() != "identity") bad("sigma must be \"identity\" or an image table");
    return Endomorphism::identity();
  }
  Endomorphism s = Endomorphism::fromImages(imagesFrom(field(j, "images"), ring, "sigma images"));
  if (j.contains("inverse")) s.inverseImages = imagesFrom(j.at("inverse"), ring, "sigma inverse");
  return s;
}

std::vector<Endomorphism> sigmaListFromJson(const Json& j, const CoeffRing& ring, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("sigma must list one entry per generator");
  std::vector<Endomorphism> out;
  for (const auto& e : j) out.push_back(sigmaFromJson(e, ring));
  return out;
}

std::size_t sizeFrom(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad(std::string(what) + " must be a positive integer");
  return j.get<std::size_t>();
}

// Ragged upper-triangular rows: rows[i][j - i - 1] holds entry (i, j).
std::vector<Coeff> upperFrom(const Json& j, const CoeffRing& ring, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() + 1 < n || j.size() > n) bad(what + " must have n-1 rows");
  std::vector<Coeff> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Json& row = j.at(i);
    if (!row.is_array() || row.size() != n - i - 1) bad(what + " row " + std::to_string(i + 1) + " has the wrong length");
    for (const auto& e : row) out.push_back(coeffFrom(e, ring, what));
  }
  if (j.size() == n && !(j.back().is_array() && j.back().empty())) bad(what + " last row must be empty");
  return out;
}

}  // namespace

Json ringToJson(const CoeffRing& ring) {
  switch (ring.kind()) {
    case CoeffRing::Kind::RationalField: return {{"kind", "rational"}};
    case CoeffRing::Kind::RationalFunctionField: return {{"kind", "rational-function"}, {"parameter", ring.symbols().front()}};
    case CoeffRing::Kind::PolynomialRing: return {{"kind", "polynomial"}, {"variables", ring.symbols()}};
  }
  return {};
}

CoeffRing ringFromJson(const Json& j) {
  const std::string kind = str(field(j, "kind"), "ring kind");
  if (kind == "rational") return CoeffRing::rationalField();
  if (kind == "rational-function") return CoeffRing::rationalFunctionField(str(field(j, "parameter"), "parameter"));
  if (kind == "polynomial") {
    const Json& vars = field(j, "variables");
    if (!vars.is_array()) bad("variables must be a list");
    std::vector<std::string> names;
    for (const auto& v : vars) names.push_back(str(v, "variable name"));
    return CoeffRing::polynomialRing(std::move(names));
  }
  bad("unknown ring kind '" + kind + "'");
}

Json presentationToJson(const Presentation& p) {
  const CoeffRing& ring = p.ring();
  const std::size_t n = p.n();
  Json j;
  j["ring"] = ringToJson(ring);
  j["n"] = n;
  Json sigma = Json::array(), delta = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    sigma.push_back(sigmaToJson(p.sigma(i), ring));
    const Derivation& d = p.delta(i);
    if (d.isZero()) delta.push_back("zero");
    else delta.push_back(Json{{"images", imageTable(*d.images, ring)}});
  }
  j["sigma"] = sigma;
  j["delta"] = delta;
  Json c = Json::array(), tails = Json::array();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Json row = Json::array();
    for (std::size_t jj = i + 1; jj < n; ++jj) {
      row.push_back(formatCoeff(p.c(i, jj), ring));
      const Tail& t = p.tail(i, jj);
      if (t.isZero()) continue;
      Json terms = Json::object();
      if (!t.constant.isZero()) terms["0"] = formatCoeff(t.constant, ring);
      for (std::size_t k = 0; k < n; ++k)
        if (!t.linear[k].isZero()) terms[std::to_string(k + 1)] = formatCoeff(t.linear[k], ring);
      tails.push_back(Json{{"pair", {i + 1, jj + 1}}, {"terms", terms}});
    }
    c.push_back(row);
  }
  j["c"] = c;
  j["tails"] = tails;
  j["flags"] = {{"quasi_commutative", p.quasiCommutative()}, {"bijective", p.bijective()}};
  return j;
}

Presentation presentationFromJson(const Json& j) {
  const CoeffRing ring = ringFromJson(field(j, "ring"));
  const std::size_t n = sizeFrom(field(j, "n"), "n");
  Presentation p(ring, n);
  if (j.contains("sigma")) {
    auto sigma = sigmaListFromJson(j.at("sigma"), ring, n);
    for (std::size_t i = 0; i < n; ++i) p.setSigma(i, sigma[i]);
  }
  if (j.contains("delta")) {
    const Json& d = j.at("delta");
    if (!d.is_array() || d.size() != n) bad("delta must list one entry per generator");
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i].is_string()) {
        if (d[i].get<std::string>() != "zero") bad("delta must be \"zero\" or an image table");
        continue;
      }
      p.setDelta(i, Derivation::fromImages(imagesFrom(field(d[i], "images"), ring, "delta images")));
    }
  }
  std::vector<Coeff> c(n * (n - 1) / 2, ring.one());
  if (j.contains("c")) c = upperFrom(j.at("c"), ring, n, "c");
  std::vector<Tail> tails(c.size(), p.zeroTail());
  auto index = [n](std::size_t i, std::size_t jj) { return i * (2 * n - i - 1) / 2 + (jj - i - 1); };
  if (j.contains("tails")) {
    const Json& ts = j.at("tails");
    if (!ts.is_array()) bad("tails must be a list");
    for (const auto& t : ts) {
      const Json& pair = field(t, "pair");
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        bad("tail pair must be [i, j]");
      const long long i = pair[0].get<long long>(), jj = pair[1].get<long long>();
      if (!(1 <= i && i < jj && jj <= static_cast<long long>(n))) bad("tail pair must satisfy 1 <= i < j <= n");
      Tail& tail = tails[index(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1))];
      const Json& terms = field(t, "terms");
      if (!terms.is_object()) bad("tail terms must map degree-one indices to coefficients");
      for (const auto& [key, value] : terms.items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          k = std::stoul(key, &used);
          if (used != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
          bad("tail key '" + key + "' is not a generator index");
        }
        if (k > n)
          throw Error(ErrorKind::InvalidPresentation, "tails may only involve 1, x1..xn (key '" + key + "')");
        const Coeff v = coeffFrom(value, ring, "tail coefficient");
        if (k == 0) tail.constant = v;
        else tail.linear[k - 1] = v;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = i + 1; jj < n; ++jj) p.setRelation(i, jj, c[index(i, jj)], tails[index(i, jj)]);
  bool qc = false, bij = false;
  if (j.contains("flags")) {
    const Json& f = j.at("flags");
    if (f.contains("quasi_commutative")) qc = f.at("quasi_commutative").get<bool>();
    if (f.contains("bijective")) bij = f.at("bijective").get<bool>();
  }
  p.setFlags(qc, bij);
  return p;
}

Json quantumSpecToJson(const QuantumSpec& spec) {
  const CoeffRing& ring = spec.q.ring();
  const std::size_t n = spec.q.n();
  Json upper = Json::array();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = i + 1; j < n; ++j) row.push_back(formatCoeff(spec.q(i, j), ring));
    upper.push_back(row);
  }
  Json sigma = Json::array();
  for (const auto& s : spec.sigma) sigma.push_back(sigmaToJson(s, ring));
  return Json{{"ring", ringToJson(ring)}, {"n", n}, {"upper", upper}, {"sigma", sigma}};
}

QuantumSpec quantumSpecFromJson(const Json& j) {
  const CoeffRing ring = ringFromJson(field(j, "ring"));
  const std::size_t n = sizeFrom(field(j, "n"), "n");
  std::vector<Endomorphism> sigma(n);
  if (j.contains("sigma")) sigma = sigmaListFromJson(j.at("sigma"), ring, n);
  if (j.contains("q")) {
    const Json& m = j.at("q");
    if (!m.is_array() || m.size() != n) bad("q must be an n x n matrix");
    std::vector<std::vector<Coeff>> entries;
    for (const auto& row : m) {
      if (!row.is_array() || row.size() != n) bad("q must be an n x n matrix");
      std::vector<Coeff> r;
      for (const auto& e : row) r.push_back(coeffFrom(e, ring, "q entry"));
      entries.push_back(std::move(r));
    }
    return QuantumSpec{QMatrix(ring, std::move(entries)), std::move(sigma)};
  }
  return QuantumSpec{QMatrix::fromUpper(ring, n, upperFrom(field(j, "upper"), ring, n, "upper")), std::move(sigma)};
}

Json elementToJson(const Element& f) {
  const CoeffRing& ring = f.algebra()->ring();
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(Json{{"exponents", t.mono.exponents()}, {"coeff", formatCoeff(t.coeff, ring)}});
  return Json{{"terms", terms}, {"text", formatElement(f)}};
}

Json laurentToJson(const LaurentElement& f, const CoeffRing& ring) {
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back(Json{{"exponents", t.mono}, {"coeff", formatCoeff(t.coeff, ring)}});
  return Json{{"terms", terms}, {"text", formatLaurent(f, ring)}};
}

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void writeJsonFile(const Json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace skewpbw
