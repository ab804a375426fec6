// affcore: core abaci of twisted and untwisted affine types from the shell.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "affcore/suite.hpp"

using namespace affcore;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kInternal = 3 };

struct Target {
  std::string family = "C~1";
  int rank = 2;
  int charge = 0;
  std::string partition;
  std::optional<std::int64_t> base;
  std::string beads;
  std::string format = "jsonl";
  unsigned workers = 1;
};

std::vector<std::int64_t> parseList(std::string s) {
  std::vector<std::int64_t> out;
  for (char& c : s)
    if (c == '(' || c == ')' || c == '[' || c == ']' || c == ',') c = ' ';
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw DomainError("cannot read '" + tok + "' as an integer");
    }
  }
  return out;
}

Abacus targetAbacus(const Target& t) {
  const AffineKind kind = parseKind(t.family, t.rank);
  if (!t.base && t.beads.empty() && t.partition.empty()) return weightAbacus(kind, t.charge);
  if (t.base) {
    auto h = HalfAbacus::make(*t.base, parseList(t.beads));
    return Abacus(kind, t.charge, h);
  }
  return fromPartition(kind, Partition(parseList(t.partition)), t.charge);
}

void checkFormat(const std::string& f) {
  if (f != "jsonl" && f != "json" && f != "csv" && f != "ascii")
    throw DomainError("format must be one of jsonl, json, csv, ascii");
}

void addTarget(CLI::App* app, Target& t, bool withAbacus) {
  app->add_option("--family", t.family,
                  "family label, see the list below")
      ->required();
  app->add_option("--rank", t.rank, "rank l")->required();
  app->add_option("--charge", t.charge, "charge j, 0 <= j <= l");
  if (withAbacus) {
    app->add_option("--partition", t.partition, "partition of a whole abacus, e.g. 4,2,1 (default: the weight abacus)");
    app->add_option("--base", t.base, "base of a half abacus");
    app->add_option("--beads", t.beads, "bead positions of a half abacus, e.g. 0,3,5");
  }
  app->add_option("--format", t.format, "jsonl (default), json, csv or ascii");
  app->add_option("--workers", t.workers, "worker threads")->check(CLI::Range(1u, 256u));
}

Json opsJson(const std::vector<ElementaryOp>& ops) {
  Json a = Json::array();
  for (auto& op : ops) {
    Json o;
    o["kind"] = std::string(elementaryKindName(op.kind));
    o["positions"] = op.positions;
    if (op.step) o["step"] = op.step;
    a.push_back(o);
  }
  return a;
}

void emit(const Json& j, const std::string& format) {
  std::cout << (format == "json" ? j.dump(2) : j.dump()) << "\n";
}

int cmdEnumerate(const Target& t, std::int64_t maxHeight) {
  checkFormat(t.format);
  const AffineKind kind = parseKind(t.family, t.rank);
  const auto cores = enumerateCores(kind, t.charge, maxHeight, t.workers);
  if (t.format == "csv") std::cout << coreRecordCsvHeader() << "\n";
  for (auto& c : cores) {
    if (t.format == "csv") {
      std::cout << coreRecordCsv(c) << "\n";
    } else if (t.format == "ascii") {
      const auto lo = c.abacus.lowestActive() - 2, hi = c.abacus.highestBead() + 3;
      std::cout << "height " << c.beta.height() << "  " << wordString(c.word) << "\n"
                << renderBeads(c.abacus, std::min<std::int64_t>(lo, -1), std::max<std::int64_t>(hi, 1)) << "\n";
    } else {
      emit(coreRecordJson(c), t.format);
    }
  }
  return kPass;
}

int cmdInspect(const Target& t) {
  checkFormat(t.format);
  const Abacus a = targetAbacus(t);
  const auto cert = coreCertificate(a);
  const auto ops = elementaryOps(a);
  Json j = shapeJson(a);
  j["family"] = t.family;
  j["rank"] = t.rank;
  j["charge"] = a.charge();
  j["isCore"] = cert.noElementaryOps;
  j["elementaryOps"] = opsJson(ops);
  j["descentReachesWeight"] = cert.descentReachesWeight;
  if (cert.defectValue) j["defect"] = rationalJson(*cert.defectValue);
  if (cert.word) j["word"] = wordString(*cert.word);
  if (!cert.consistent()) {
    std::cerr << "internal inconsistency: core tests disagree\n";
    emit(j, t.format);
    return kInternal;
  }
  bool agree = true;
  if (cert.noElementaryOps) {
    const auto u = uglovVector(a);
    j["u"] = uglovJson(u);
    j["weightedU"] = quadJson(weightedUglov(a));
    const auto spec = equationFor(a.kind(), a.charge());
    Json h;
    h["tally"] = cert.beta->height();
    h["atomicLength"] = atomicLength(a.context(), a.charge(), *cert.word);
    h["realization"] = heightViaRealization(a);
    h["equation"] = heightFromUglov(spec, u);
    h["perNode"] = cert.beta->k;
    for (auto& [k, v] : h.items())
      if (k != "perNode" && v != h["tally"]) agree = false;
    if (nodeHeightsViaRealization(a) != *cert.beta) agree = false;
    j["heights"] = h;
    j["F"] = applyF(spec, u);
  }
  if (t.format == "ascii") {
    std::cout << renderBeads(a, std::min<std::int64_t>(a.lowestActive() - 2, -1), a.highestBead() + 3) << "\n";
    std::cout << (cert.noElementaryOps ? "core" : "not a core") << "\n";
    for (auto& op : ops) std::cout << "  " << elementaryKindName(op.kind) << " " << joinInts(op.positions, ",") << "\n";
    if (j.contains("heights")) std::cout << "heights " << j["heights"].dump() << "\n";
  } else {
    emit(j, t.format);
  }
  if (!agree) {
    std::cerr << "internal inconsistency: height methods disagree\n";
    return kInternal;
  }
  return kPass;
}

int cmdUglov(const Target& t) {
  checkFormat(t.format);
  const Abacus a = targetAbacus(t);
  const auto d = uglovMap(a);
  if (t.format == "ascii") {
    std::cout << renderUglov(d) << "u = " << str(uglovVector(a)) << "\n";
    return kPass;
  }
  Json j;
  j["runners"] = runnerCharges(d);
  j["u"] = uglovJson(uglovVector(a));
  emit(j, t.format);
  return kPass;
}

int cmdWord(const Target& t) {
  checkFormat(t.format);
  const Abacus a = targetAbacus(t);
  const auto w = grassmannianWord(a);
  const auto R = realizationFor(a.kind());
  const auto sd = semidirect(w, *R);
  Json j;
  j["word"] = wordString(w);
  j["length"] = w.size();
  j["atomicLength"] = atomicLength(a.context(), a.charge(), w);
  j["translation"] = quadJson(sd.q);
  j["finiteWord"] = wordString(sd.finiteWord);
  emit(j, t.format);
  return kPass;
}

int cmdAlcoves(const Target& t, std::int64_t maxHeight) {
  checkFormat(t.format);
  const AffineKind kind = parseKind(t.family, t.rank);
  if (kind.l != 2) throw ScopeError("alcove data is produced for rank 2 only");
  const auto& ctx = *contextFor(kind);
  const auto R = realizationFor(kind);
  bool inside = true;
  for (auto& c : enumerateCores(kind, t.charge, maxHeight, t.workers)) {
    const auto al = alcoveCoords(c.word, ctx, *R);
    Json j = shapeJson(c.abacus);
    j["height"] = c.beta.height();
    j["word"] = wordString(c.word);
    Json vs = Json::array();
    for (auto& v : al.vertices) vs.push_back(quadJson(v));
    j["vertices"] = vs;
    Json approx = Json::array();
    for (auto& v : al.vertices) approx.push_back({v[0].toDouble(), v[1].toDouble()});
    j["approx"] = approx;
    j["insideCone"] = inTitsCone(al.interior, t.charge, ctx, *R);
    inside = inside && j["insideCone"].get<bool>();
    emit(j, t.format);
  }
  return inside ? kPass : kInternal;
}

std::optional<std::int64_t> formulaOrNull(AffineKind kind, int j, std::int64_t N) {
  try {
    return countCoresByFormula(kind, j, N);
  } catch (const ScopeError&) {
    return std::nullopt;
  }
}

struct DiophArgs {
  std::optional<std::int64_t> N;
  std::optional<std::int64_t> maxN;
};

std::pair<std::int64_t, std::int64_t> nRange(const DiophArgs& d) {
  if (d.N) return {*d.N, *d.N};
  if (d.maxN) return {0, *d.maxN};
  throw DomainError("give --N or --max-N");
}

int cmdSolve(const Target& t, const DiophArgs& d) {
  checkFormat(t.format);
  const auto spec = equationFor(parseKind(t.family, t.rank), t.charge);
  auto [lo, hi] = nRange(d);
  if (t.format == "csv") std::cout << "N,t\n";
  for (auto N = lo; N <= hi; ++N)
    for (auto& s : solve(spec, N)) {
      if (t.format == "csv") {
        std::cout << N << ",\"" << joinInts(s.t) << "\"\n";
      } else {
        Json j;
        j["N"] = N;
        j["t"] = s.t;
        emit(j, t.format);
      }
    }
  return kPass;
}

Json orbitJson(const OrbitReport& o) {
  Json j;
  j["N"] = o.N;
  j["canonical"] = o.canonical;
  j["class"] = o.eqClass;
  j["members"] = o.members;
  j["parametrized"] = o.parametrized;
  return j;
}

int cmdOrbits(const Target& t, const DiophArgs& d) {
  checkFormat(t.format);
  const auto spec = equationFor(parseKind(t.family, t.rank), t.charge);
  auto [lo, hi] = nRange(d);
  if (t.format == "csv") std::cout << "N,canonical,class,members,parametrized\n";
  for (auto N = lo; N <= hi; ++N)
    for (auto& o : orbitReportsAt(spec, N)) {
      if (t.format == "csv")
        std::cout << N << ",\"" << joinInts(o.canonical) << "\",\"" << joinInts(o.eqClass) << "\"," << o.members
                  << "," << o.parametrized << "\n";
      else
        emit(orbitJson(o), t.format);
    }
  return kPass;
}

int cmdCount(const Target& t, const DiophArgs& d) {
  checkFormat(t.format);
  const AffineKind kind = parseKind(t.family, t.rank);
  const auto spec = equationFor(kind, t.charge);
  auto [lo, hi] = nRange(d);
  const auto counts = coreCountsByHeight(kind, t.charge, hi, t.workers);
  bool ok = true;
  if (t.format == "csv") std::cout << "N,cores,parametrized,formula\n";
  for (auto N = lo; N <= hi; ++N) {
    std::int64_t viaOrbits = 0;
    for (auto& o : orbitReportsAt(spec, N)) viaOrbits += o.parametrized;
    const auto formula = formulaOrNull(kind, t.charge, N);
    ok = ok && viaOrbits == counts.at(N) && (!formula || *formula == counts.at(N));
    if (t.format == "csv") {
      std::cout << N << "," << counts.at(N) << "," << viaOrbits << "," << (formula ? std::to_string(*formula) : "")
                << "\n";
    } else {
      Json j;
      j["N"] = N;
      j["cores"] = counts.at(N);
      j["parametrized"] = viaOrbits;
      j["formula"] = formula ? Json(*formula) : Json(nullptr);
      emit(j, t.format);
    }
  }
  return ok ? kPass : kFail;
}

int cmdVerifyComplete(const Target& t, const DiophArgs& d) {
  checkFormat(t.format);
  const AffineKind kind = parseKind(t.family, t.rank);
  const auto spec = equationFor(kind, t.charge);
  if (!d.maxN) throw DomainError("give --max-N");
  const auto rep = verifyCompleteness(spec, *d.maxN, t.workers);
  const auto fails = rep.failures();
  Json j;
  j["equation"] = spec.str();
  j["maxN"] = *d.maxN;
  j["orbits"] = rep.orbits.size();
  Json fs = Json::array();
  for (auto& o : fails) fs.push_back(orbitJson(o));
  j["failures"] = fs;
  std::set<std::vector<std::int64_t>> classes;
  for (auto& o : fails) classes.insert(o.eqClass);
  j["failingClasses"] = classes;
  const auto nine = completelyParametrizedEquations();
  const bool claimed = std::find(nine.begin(), nine.end(), std::make_pair(kind, t.charge)) != nine.end();
  j["claimedComplete"] = claimed;
  emit(j, t.format);
  return claimed && !fails.empty() ? kFail : kPass;
}

int cmdVerify(const std::vector<std::string>& only, const SuiteBounds& b, const std::string& format) {
  checkFormat(format);
  for (auto& id : only) {
    const auto& es = suiteEntries();
    if (std::none_of(es.begin(), es.end(), [&](const SuiteEntry& e) { return e.id == id; }))
      throw DomainError("unknown check '" + id + "'");
  }
  Json all = Json::array();
  bool ok = true;
  for (auto& e : suiteEntries()) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    const auto r = e.run(b);
    ok = ok && r.passed;
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << "  (" << r.cases << " cases, " << r.seconds << " s)\n";
    for (auto& f : r.failures) std::cerr << "    " << f << "\n";
    all.push_back(r.toJson());
  }
  Json out;
  out["passed"] = ok;
  out["checks"] = all;
  std::cout << (format == "jsonl" ? out.dump() : out.dump(2)) << "\n";
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affcore: core abaci, Uglov vectors and their Diophantine equations"};
  app.require_subcommand(1);
  app.footer(
      "Family labels (l = --rank):\n"
      "  A2l-1~2  twisted A_{2l-1}^(2), l >= 2\n"
      "  A2l~2    twisted A_{2l}^(2), l >= 2\n"
      "  B~1      untwisted B_l^(1), l >= 2   (alias B, B1)\n"
      "  C~1      untwisted C_l^(1), l >= 2   (alias C, C1)\n"
      "  D~1      untwisted D_l^(1), l >= 3   (alias D1)\n"
      "  D~2      twisted D_{l+1}^(2), l >= 2 (alias D2)\n"
      "Exit codes: 0 ok, 1 verification failure or not a core, 2 bad input, 3 internal inconsistency.");
  Target t;
  std::int64_t maxHeight = 10;
  DiophArgs d;

  auto* cores = app.add_subcommand("cores", "core abaci")->require_subcommand(1);
  auto* en = cores->add_subcommand("enumerate", "cores up to a height, canonical order");
  addTarget(en, t, false);
  en->add_option("--max-height", maxHeight, "largest height")->check(CLI::NonNegativeNumber);
  auto* in = cores->add_subcommand("inspect", "core test with certificate and heights");
  addTarget(in, t, true);
  auto* ug = cores->add_subcommand("uglov", "Uglov display and vector");
  addTarget(ug, t, true);
  auto* wd = cores->add_subcommand("word", "Grassmannian word and its translation/finite parts");
  addTarget(wd, t, true);
  auto* al = cores->add_subcommand("alcoves", "alcove polygons of rank-2 cores");
  addTarget(al, t, false);
  al->add_option("--max-height", maxHeight, "largest height")->check(CLI::NonNegativeNumber);

  auto* dio = app.add_subcommand("dioph", "sums of squares attached to cores")->require_subcommand(1);
  std::vector<CLI::App*> diophCmds;
  for (auto [name, help] : {std::pair{"solve", "all solutions"}, {"orbits", "signed-permutation orbits"},
                            {"count", "core counts three ways"}, {"verify-complete", "orbits missing a core"}}) {
    auto* c = dio->add_subcommand(name, help);
    addTarget(c, t, false);
    c->add_option("--N", d.N, "height")->check(CLI::NonNegativeNumber);
    c->add_option("--max-N", d.maxN, "largest height")->check(CLI::NonNegativeNumber);
    diophCmds.push_back(c);
  }

  auto* ver = app.add_subcommand("verify", "run the property suite");
  std::vector<std::string> only;
  SuiteBounds b;
  std::string vformat = "json";
  std::string ids;
  for (auto& e : suiteEntries()) ids += " " + e.id;
  ver->add_option("--only", only, "run only these checks:" + ids);
  ver->add_option("--max-height", b.maxHeight, "core height bound override");
  ver->add_option("--max-n", b.maxN, "N bound override");
  ver->add_option("--max-depth", b.maxDepth, "move depth for reachable abaci");
  ver->add_option("--workers", b.workers, "worker threads")->check(CLI::Range(1u, 256u));
  ver->add_option("--seed", b.seed, "seed for random descent words");
  ver->add_option("--format", vformat, "json or jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    if (en->parsed()) return cmdEnumerate(t, maxHeight);
    if (in->parsed()) return cmdInspect(t);
    if (ug->parsed()) return cmdUglov(t);
    if (wd->parsed()) return cmdWord(t);
    if (al->parsed()) return cmdAlcoves(t, maxHeight);
    if (diophCmds[0]->parsed()) return cmdSolve(t, d);
    if (diophCmds[1]->parsed()) return cmdOrbits(t, d);
    if (diophCmds[2]->parsed()) return cmdCount(t, d);
    if (diophCmds[3]->parsed()) return cmdVerifyComplete(t, d);
    if (ver->parsed()) return cmdVerify(only, b, vformat);
  } catch (const Inconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kInternal;
  } catch (const NotACore& e) {
    std::cerr << "not a core: " << e.what() << "\n";
    return kFail;
  } catch (const NotInOrbit& e) {
    std::cerr << "not in the orbit: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
