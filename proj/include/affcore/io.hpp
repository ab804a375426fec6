#pragma once

#include <sstream>
#include <string>

#include "affcore/dioph.hpp"
#include "json.hpp"

namespace affcore {

using Json = nlohmann::ordered_json;

inline AffineKind parseKind(const std::string& family, int rank) {
  auto f = parseFamily(family);
  if (!f) throw DomainError("unknown family label '" + family + "'");
  if (rank < minimumRank(*f) || rank > 64) throw InvalidRank("rank " + std::to_string(rank) + " is not allowed for " + family);
  return {*f, rank};
}

// Integers stay numbers, everything else becomes "p/q".
inline Json rationalJson(const Rational& r) {
  if (auto v = toInt64(r)) return *v;
  return str(r);
}

inline Json uglovJson(const UglovVector& u) {
  Json a = Json::array();
  for (auto& x : u) a.push_back(rationalJson(x));
  return a;
}

inline Json quadJson(const QVector& v) {
  Json a = Json::array();
  for (auto& x : v) {
    if (auto r = isRational(x)) a.push_back(rationalJson(*r));
    else a.push_back(x.str());
  }
  return a;
}

inline Json shapeJson(const Abacus& a) {
  Json j;
  if (a.isWhole()) {
    j["partition"] = a.whole().lambda.parts();
  } else {
    j["partition"] = nullptr;
    j["base"] = a.half().base;
    j["beads"] = a.half().beads;
  }
  return j;
}

inline Json coreRecordJson(const CoreRecord& r) {
  const auto u = uglovVector(r.abacus);
  const auto spec = equationFor(r.abacus.kind(), r.abacus.charge());
  Json j = shapeJson(r.abacus);
  j["charge"] = r.abacus.charge();
  j["height"] = r.beta.height();
  j["beta"] = r.beta.k;
  j["u"] = uglovJson(u);
  j["word"] = wordString(r.word);
  j["F"] = applyF(spec, u);
  return j;
}

inline std::string joinInts(const std::vector<std::int64_t>& v, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

inline std::string coreRecordCsvHeader() { return "partition,base,beads,charge,height,beta,u,word,F"; }

inline std::string coreRecordCsv(const CoreRecord& r) {
  const auto u = uglovVector(r.abacus);
  const auto spec = equationFor(r.abacus.kind(), r.abacus.charge());
  std::ostringstream os;
  if (r.abacus.isWhole()) os << '"' << joinInts(r.abacus.whole().lambda.parts()) << "\",,";
  else os << ',' << r.abacus.half().base << ",\"" << joinInts(r.abacus.half().beads) << '"';
  os << ',' << r.abacus.charge() << ',' << r.beta.height() << ",\"" << joinInts(r.beta.k) << "\",\"";
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? " " : "") << str(u[i]);
  os << "\"," << wordString(r.word) << ",\"" << joinInts(applyF(spec, u)) << '"';
  return os.str();
}

}  // namespace affcore
