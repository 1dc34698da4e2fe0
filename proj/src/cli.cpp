#include "skewpbw/cli.hpp"

#include <algorithm>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "skewpbw/algebras.hpp"
#include "skewpbw/graded.hpp"
#include "skewpbw/io.hpp"
#include "skewpbw/quantum.hpp"
#include "skewpbw/text.hpp"

namespace skewpbw {

namespace {

bool enclosed(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
    if (depth == 0) return false;
  }
  return true;
}

std::string wrap(const std::string& s) {
  return s.find(' ') == std::string::npos || enclosed(s) ? s : "(" + s + ")";
}

struct Options {
  std::string presentation;
  std::string qfile;
  std::string output;
  std::string format = "text";
  long block = -1;
  unsigned degree = 3;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  bool corrupt = false;
  bool right = false;
  std::vector<std::string> args;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  bool json() const { return o_.format == "json"; }

  AlgebraPtr algebra() const {
    if (o_.presentation.empty()) throw Error(ErrorKind::InvalidArgument, "a presentation file (-p) is required");
    return Algebra::create(presentationFromJson(readJsonFile(o_.presentation)));
  }

  std::unique_ptr<MultiplicativeSet> multiplicativeSet(const AlgebraPtr& a) const {
    if (o_.block >= 0) return std::make_unique<UnitTimesMonomial>(a, static_cast<std::size_t>(o_.block));
    return std::make_unique<NonzeroCoefficients>(a);
  }

  const std::string& arg(std::size_t i) const {
    if (i >= o_.args.size()) throw Error(ErrorKind::InvalidArgument, "missing argument " + std::to_string(i + 1));
    return o_.args[i];
  }

  void requireArgs(std::size_t lo, std::size_t hi) const {
    if (o_.args.size() < lo || o_.args.size() > hi)
      throw Error(ErrorKind::InvalidArgument, "expected " + (lo == hi ? std::to_string(lo) : std::to_string(lo) + " or more") +
                                                  " argument(s), got " + std::to_string(o_.args.size()));
  }

  void printElement(const Element& f) {
    if (json()) out_ << elementToJson(f).dump() << "\n";
    else out_ << formatElement(f) << "\n";
  }

  void emit(const Json& j) {
    if (o_.output.empty()) out_ << j.dump(2) << "\n";
    else writeJsonFile(j, o_.output);
  }

  int check() {
    requireArgs(0, 0);
    if (o_.presentation.empty()) throw Error(ErrorKind::InvalidArgument, "a presentation file (-p) is required");
    const CheckReport report = checkPresentation(presentationFromJson(readJsonFile(o_.presentation)), o_.degree);
    if (json()) {
      Json v = Json::array();
      for (const auto& x : report.violations)
        v.push_back(Json{{"kind", to_string(x.kind)}, {"location", x.location}, {"detail", x.detail}});
      out_ << Json{{"ok", report.ok()}, {"violations", v}}.dump() << "\n";
    } else if (report.ok()) {
      out_ << "ok\n";
    } else {
      for (const auto& x : report.violations) out_ << to_string(x.kind) << " at " << x.location << ": " << x.detail << "\n";
    }
    return report.ok() ? 0 : 1;
  }

  int fold(bool multiply) {
    requireArgs(1, SIZE_MAX);
    const AlgebraPtr a = algebra();
    Element acc = parseElement(o_.args[0], a);
    for (std::size_t i = 1; i < o_.args.size(); ++i) {
      const Element f = parseElement(o_.args[i], a);
      acc = multiply ? a->mul(acc, f) : a->add(acc, f);
    }
    printElement(acc);
    return 0;
  }

  int gr() {
    requireArgs(0, 0);
    emit(presentationToJson(associatedGradedPresentation(algebra()->presentation())));
    return 0;
  }

  int symbol() {
    requireArgs(1, 1);
    const AlgebraPtr a = algebra();
    const AlgebraPtr g = Algebra::create(associatedGradedPresentation(a->presentation()));
    printElement(principalSymbol(parseElement(arg(0), a), g));
    return 0;
  }

  int ore(bool left) {
    requireArgs(2, 2);
    const AlgebraPtr a = algebra();
    const Element f = parseElement(arg(0), a);
    const Coeff s = parseCoeff(arg(1), a->ring());
    const CoeffOreSolution sol = left ? oreSolveLeft(f, s) : oreSolveRight(f, s);
    const Element lhs = left ? a->mul(a->constant(sol.u), f) : a->mul(f, a->constant(sol.u));
    const Element rhs = left ? a->mul(sol.g, a->constant(s)) : a->mul(a->constant(s), sol.g);
    const std::string identity = left ? "u*f == g*s" : "f*u == s*g";
    if (json()) {
      out_ << Json{{"u", formatCoeff(sol.u, a->ring())},
                   {"g", elementToJson(sol.g)},
                   {"identity", identity},
                   {"lhs", formatElement(lhs)},
                   {"rhs", formatElement(rhs)},
                   {"verified", lhs == rhs}}
                  .dump()
           << "\n";
    } else {
      out_ << "u = " << formatCoeff(sol.u, a->ring()) << "\n";
      out_ << "g = " << formatElement(sol.g) << "\n";
      out_ << identity << ": " << formatElement(lhs) << " == " << formatElement(rhs) << "\n";
    }
    return 0;
  }

  int fraction(const std::string& op) {
    requireArgs(2, 2);
    const AlgebraPtr a = algebra();
    const auto set = multiplicativeSet(a);
    const Fraction x = parseFraction(arg(0), *set), y = parseFraction(arg(1), *set);
    if (op == "eq") {
      const bool eq = fracEq(x, y, *set);
      out_ << (json() ? Json(eq).dump() : std::string(eq ? "true" : "false")) << "\n";
      return 0;
    }
    const Fraction z = op == "add" ? fracAdd(x, y, *set) : fracMul(x, y, *set);
    if (json()) {
      out_ << Json{{"side", z.side == Side::Left ? "left" : "right"},
                   {"denom", elementToJson(z.denom)},
                   {"numer", elementToJson(z.numer)},
                   {"text", formatFraction(z)}}
                  .dump()
           << "\n";
    } else {
      out_ << formatFraction(z) << "\n";
    }
    return 0;
  }

  QuantumSpec quantumSpec(const std::string& path) const {
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "a parameter matrix file (-q) is required");
    return quantumSpecFromJson(readJsonFile(path));
  }

  std::size_t block() const {
    if (o_.block < 0) throw Error(ErrorKind::InvalidArgument, "the invertible block size (-r) is required");
    return static_cast<std::size_t>(o_.block);
  }

  void printLaurent(const LaurentElement& f, const CoeffRing& ring) {
    if (json()) out_ << laurentToJson(f, ring).dump() << "\n";
    else out_ << formatLaurent(f, ring) << "\n";
  }

  int qspace() {
    requireArgs(0, 0);
    const QuantumSpec spec = quantumSpec(o_.qfile);
    const Presentation p = quantumSpacePresentation(spec.q, spec.sigma, spec.q.ring());
    Algebra::create(p);
    emit(presentationToJson(p));
    return 0;
  }

  int torusMul() {
    requireArgs(2, 2);
    const QuantumSpec spec = quantumSpec(o_.qfile);
    const QuantumTorus torus(spec.q, spec.sigma, block());
    printLaurent(torus.mul(parseLaurent(arg(0), torus), parseLaurent(arg(1), torus)), torus.ring());
    return 0;
  }

  int toLaurent() {
    requireArgs(1, 1);
    const AlgebraPtr a = algebra();
    const UnitTimesMonomial set(a, block());
    printLaurent(fractionToLaurent(parseFraction(arg(0), set), set.torus()), a->ring());
    return 0;
  }

  int toFraction() {
    requireArgs(1, 1);
    const AlgebraPtr a = algebra();
    const QuantumTorus torus = QuantumTorus::fromPresentation(a->presentation(), block());
    const Fraction x = laurentToFraction(parseLaurent(arg(0), torus), torus, a, o_.right ? Side::Right : Side::Left);
    out_ << formatFraction(x) << "\n";
    return 0;
  }

  int gkCheck() {
    requireArgs(3, 3);
    const auto number = [](const std::string& s, const char* what) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be a natural number");
      return static_cast<std::size_t>(v);
    };
    const std::size_t r = number(arg(0), "r"), n = number(arg(1), "n");
    const QuantumSpec spec = quantumSpec(arg(2));
    if (spec.q.n() != n) throw Error(ErrorKind::InvalidArgument, "n does not match the parameter matrix");
    const GkReport report = gkStructureCheck(r, spec.q, spec.sigma, spec.q.ring(), o_.samples, o_.seed, o_.corrupt);
    if (json()) {
      out_ << Json{{"structural_match", report.structuralMatch},
                   {"samples", report.samples},
                   {"agreements", report.agreements},
                   {"notes", report.notes},
                   {"passed", report.passed()}}
                  .dump()
           << "\n";
    } else {
      out_ << "structure: " << (report.structuralMatch ? "match" : "mismatch") << "\n";
      out_ << "products: " << report.agreements << "/" << report.samples << " agree\n";
      for (const auto& note : report.notes) out_ << "  " << note << "\n";
      out_ << (report.passed() ? "pass" : "fail") << "\n";
    }
    return report.passed() ? 0 : 1;
  }

  int catalogCmd() {
    requireArgs(1, 2);
    if (arg(0) == "list") {
      requireArgs(1, 1);
      for (const auto& e : catalog()) {
        if (json()) out_ << Json{{"name", e.name}, {"description", e.description}, {"consistent", e.consistent}}.dump() << "\n";
        else out_ << e.name << "  " << e.description << "\n";
      }
      return 0;
    }
    if (arg(0) == "emit") {
      requireArgs(2, 2);
      emit(presentationToJson(buildCatalog(arg(1))));
      return 0;
    }
    throw Error(ErrorKind::InvalidArgument, "catalog takes 'list' or 'emit <name>'");
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

Fraction parseFraction(const std::string& text, const MultiplicativeSet& set) {
  int depth = 0;
  std::size_t at = std::string::npos;
  char sep = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && (c == '\\' || c == '/') && i > 0 && i + 1 < text.size() && text[i - 1] == ' ' &&
             text[i + 1] == ' ') {
      if (at != std::string::npos) throw Error(ErrorKind::Parse, "fraction has more than one separator");
      at = i;
      sep = c;
    }
  }
  if (at == std::string::npos)
    throw Error(ErrorKind::Parse, "expected a fraction 's \\ a' or 'a / s' (spaces around the separator)");
  const AlgebraPtr& a = set.algebra();
  const Element lhs = parseElement(text.substr(0, at), a);
  const Element rhs = parseElement(text.substr(at + 1), a);
  return sep == '\\' ? makeFraction(Side::Left, lhs, rhs, set) : makeFraction(Side::Right, rhs, lhs, set);
}

std::string formatFraction(const Fraction& x) {
  const std::string d = wrap(formatElement(x.denom)), n = wrap(formatElement(x.numer));
  return x.side == Side::Left ? d + " \\ " + n : n + " / " + d;
}

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic in skew PBW extensions", "skewpbw"};
  app.require_subcommand(1, 1);
  Options o;

  auto common = [&](CLI::App* sub, bool needsPresentation) {
    if (needsPresentation) sub->add_option("-p,--presentation", o.presentation, "presentation file");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("args", o.args, "arguments");
  };

  auto* check = app.add_subcommand("check", "check a presentation for consistency");
  common(check, true);
  check->add_option("--degree", o.degree, "overlap degree bound")->check(CLI::Range(3U, 6U));
  auto* mul = app.add_subcommand("mul", "multiply expressions left to right");
  common(mul, true);
  auto* nf = app.add_subcommand("nf", "normal form of an expression");
  common(nf, true);
  auto* add = app.add_subcommand("add", "add expressions");
  common(add, true);
  auto* gr = app.add_subcommand("gr", "emit the associated graded presentation");
  common(gr, true);
  gr->add_option("-o,--output", o.output, "output file");
  auto* symbol = app.add_subcommand("symbol", "principal symbol of an expression");
  common(symbol, true);
  auto* oreLeft = app.add_subcommand("ore-left", "solve u f = g s");
  common(oreLeft, true);
  auto* oreRight = app.add_subcommand("ore-right", "solve f u = s g");
  common(oreRight, true);
  std::vector<CLI::App*> fracs;
  for (const char* name : {"frac-add", "frac-mul", "frac-eq"}) {
    auto* f = app.add_subcommand(name, "fraction arithmetic");
    common(f, true);
    f->add_option("-r,--block", o.block, "denominators are units times monomials in x1..xr");
    fracs.push_back(f);
  }
  auto* qspace = app.add_subcommand("qspace", "emit a quantum space presentation");
  common(qspace, false);
  qspace->add_option("-q,--qmatrix", o.qfile, "parameter matrix file");
  qspace->add_option("-o,--output", o.output, "output file");
  auto* torusMul = app.add_subcommand("torus-mul", "multiply Laurent expressions");
  common(torusMul, false);
  torusMul->add_option("-q,--qmatrix", o.qfile, "parameter matrix file");
  torusMul->add_option("-r,--block", o.block, "number of invertible generators")->required();
  auto* toLaurent = app.add_subcommand("to-laurent", "fraction to Laurent element");
  common(toLaurent, true);
  toLaurent->add_option("-r,--block", o.block, "number of invertible generators")->required();
  auto* toFraction = app.add_subcommand("to-fraction", "Laurent element to fraction");
  common(toFraction, true);
  toFraction->add_option("-r,--block", o.block, "number of invertible generators")->required();
  toFraction->add_flag("--right", o.right, "produce a right fraction");
  auto* gk = app.add_subcommand("gk-check", "compare localization with the quantum space over Q(R): r n qfile");
  common(gk, false);
  gk->add_option("--samples", o.samples, "number of sampled products");
  gk->add_option("--seed", o.seed, "random seed");
  gk->add_flag("--corrupt", o.corrupt, "swap q12 and q21 in the direct route");
  auto* cat = app.add_subcommand("catalog", "list or emit catalog presentations");
  common(cat, false);
  cat->add_option("-o,--output", o.output, "output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Runner run(o, out);
  try {
    if (check->parsed()) return run.check();
    if (mul->parsed()) return run.fold(true);
    if (nf->parsed()) return (run.requireArgs(1, 1), run.fold(false));
    if (add->parsed()) return run.fold(false);
    if (gr->parsed()) return run.gr();
    if (symbol->parsed()) return run.symbol();
    if (oreLeft->parsed()) return run.ore(true);
    if (oreRight->parsed()) return run.ore(false);
    if (fracs[0]->parsed()) return run.fraction("add");
    if (fracs[1]->parsed()) return run.fraction("mul");
    if (fracs[2]->parsed()) return run.fraction("eq");
    if (qspace->parsed()) return run.qspace();
    if (torusMul->parsed()) return run.torusMul();
    if (toLaurent->parsed()) return run.toLaurent();
    if (toFraction->parsed()) return run.toFraction();
    if (gk->parsed()) return run.gkCheck();
    if (cat->parsed()) return run.catalogCmd();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace skewpbw
