#include <gtest/gtest.h>

#include "affcore/io.hpp"

using namespace affcore;

namespace {

// rebuild a core from its JSON record, using only the documented fields
Abacus fromRecord(const Json& j, AffineKind kind) {
  const int charge = j.at("charge").get<int>();
  if (!j.at("partition").is_null())
    return fromPartition(kind, Partition(j.at("partition").get<std::vector<std::int64_t>>()), charge);
  return Abacus(kind, charge,
                HalfAbacus::make(j.at("base").get<std::int64_t>(), j.at("beads").get<std::vector<std::int64_t>>()));
}

Rational rationalFrom(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  return rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

WeylWord wordFrom(const std::string& s) {
  WeylWord w;
  if (s == "e") return w;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto next = s.find('s', pos + 1);
    w.push_back(std::stoi(s.substr(pos + 1, next - pos - 1)));
    pos = next == std::string::npos ? s.size() : next;
  }
  return w;
}

}  // namespace

TEST(ParseKind, Labels) {
  EXPECT_EQ(parseKind("D~2", 2).family, Family::D2);
  EXPECT_EQ(parseKind("A2l-1~2", 3).l, 3);
  EXPECT_THROW(parseKind("E~8", 2), DomainError);
  EXPECT_THROW(parseKind("D~1", 2), InvalidRank);
  EXPECT_THROW(parseKind("C~1", 0), InvalidRank);
}

TEST(RationalJson, Forms) {
  EXPECT_EQ(rationalJson(rat(4)).dump(), "4");
  EXPECT_EQ(rationalJson(rat(-1, 2)).dump(), "\"-1/2\"");
  EXPECT_EQ(quadJson({Quad2(rat(0), rat(-1)), Quad2(rat(3, 2))}).dump(), "[\"-sqrt2\",\"3/2\"]");
}

TEST(CoreRecord, ExampleFields) {
  const AffineKind d2{Family::D2, 2};
  for (auto& c : enumerateCores(d2, 1, 11)) {
    if (c.abacus.whole().lambda.parts() != std::vector<std::int64_t>{4, 2, 1, 1, 1, 1, 1}) continue;
    const auto j = coreRecordJson(c);
    EXPECT_EQ(j.dump(),
              "{\"partition\":[4,2,1,1,1,1,1],\"charge\":1,\"height\":11,\"beta\":[2,5,4],\"u\":[-2,1],"
              "\"word\":\"s1s2s1s0s1\",\"F\":[-8,2]}");
    return;
  }
  FAIL() << "example core not enumerated";
}

TEST(CoreRecord, RoundTrip) {
  for (Family f : kAllFamilies)
    for (int l = minimumRank(f); l <= 3; ++l) {
      const AffineKind kind{f, l};
      for (int j = 0; j <= l; ++j)
        for (auto& c : enumerateCores(kind, j, 8)) {
          const auto text = coreRecordJson(c).dump();
          const auto j2 = Json::parse(text);
          const Abacus a = fromRecord(j2, kind);
          EXPECT_EQ(a, c.abacus) << text;
          EXPECT_EQ(j2.at("height").get<std::int64_t>(), betaOf(a).height());
          EXPECT_EQ(j2.at("beta").get<std::vector<std::int64_t>>(), betaOf(a).k);
          UglovVector u;
          for (auto& x : j2.at("u")) u.push_back(rationalFrom(x));
          EXPECT_EQ(u, uglovVector(a));
          const auto w = wordFrom(j2.at("word").get<std::string>());
          EXPECT_EQ(applyWord(weightAbacus(kind, j), w).abacus, a);
          EXPECT_EQ(static_cast<std::int64_t>(w.size()), static_cast<std::int64_t>(grassmannianWord(a).size()));
          const auto spec = equationFor(kind, j);
          EXPECT_EQ(j2.at("F").get<std::vector<std::int64_t>>(), applyF(spec, u));
        }
    }
}

TEST(CoreRecord, CsvColumns) {
  const auto header = coreRecordCsvHeader();
  EXPECT_EQ(std::count(header.begin(), header.end(), ','), 8);
  for (auto& c : enumerateCores({Family::B1, 3}, 0, 6)) {
    const auto row = coreRecordCsv(c);
    int commas = 0;
    bool quoted = false;
    for (char ch : row) {
      if (ch == '"') quoted = !quoted;
      if (ch == ',' && !quoted) ++commas;
    }
    EXPECT_EQ(commas, 8) << row;
  }
}
