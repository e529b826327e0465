#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>
#include <tuple>

#include "subduce/pipeline.hpp"
#include "subduce/report.hpp"

using namespace subduce;

namespace {

Grid grid_of(const char* l, const char* a, const char* b) {
  return Grid(Partition::parse(l), Partition::parse(a), Partition::parse(b));
}

using Key = std::tuple<int, int, int, int>;

std::map<Key, double> from_json(const nlohmann::ordered_json& j) {
  std::map<Key, double> out;
  for (const auto& block : j["basis"])
    for (const auto& c : block["coefficients"])
      out[{block["eta"].get<int>(), c["m"].get<int>(), c["m1"].get<int>(), c["m2"].get<int>()}] =
          c["value"].get<double>();
  return out;
}

std::map<Key, double> from_csv(const std::string& csv) {
  std::map<Key, double> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("eta", 0) == 0) continue;
    int eta, m, m1, m2;
    double v;
    char sep;
    std::istringstream row(line);
    row >> eta >> sep >> m >> sep >> m1 >> sep >> m2 >> sep >> v;
    out[{eta, m, m1, m2}] = v;
  }
  return out;
}

}  // namespace

TEST_CASE("rounding to twelve digits") {
  CHECK(rounded(0.1234567890123456) == 0.123456789012);
  CHECK(rounded(-1e-20) == -1e-20);
  CHECK(rounded(2.0 / 3.0) == 0.666666666667);
  CHECK_FALSE(std::signbit(rounded(-0.0)));
}

TEST_CASE("json document for the worked case") {
  const auto g = grid_of("2,1", "1", "2");
  const auto t = compute_sdc(g);
  const auto j = to_json(g, t);
  CHECK(j["multiplicity"] == 1);
  CHECK(j["n1"] == 1);
  CHECK(j["lambda"] == nlohmann::json::array({2, 1}));
  REQUIRE(j["basis"].size() == 1);
  const auto& cs = j["basis"][0]["coefficients"];
  REQUIRE(cs.size() == 2);
  CHECK(cs[0]["value"].get<double>() == 0.5);
  CHECK(cs[1]["value"].get<double>() == 0.866025403784);
  CHECK(cs[0]["surd"] == nlohmann::json({{"a", 1}, {"b", 1}, {"c", 2}}));
  CHECK(cs[1]["surd"] == nlohmann::json({{"a", 1}, {"b", 3}, {"c", 2}}));
  CHECK(j["tableau_index"]["lambda"][1]["tableau"] == "1 3/2");
  CHECK(j["tableau_index"]["lambda2"][0]["tableau"] == "2 3");
  CHECK(j["residual"].get<double>() < 1e-10);
  ReportOptions plain;
  plain.surds = false;
  CHECK_FALSE(to_json(g, t, plain)["basis"][0]["coefficients"][0].contains("surd"));
}

TEST_CASE("json and csv carry the same values, deterministically") {
  for (const auto* triple : {"3,2,1|2,1|2,1", "4,1|1|3,1", "3|1|1,1", "2|1|1"}) {
    const std::string s(triple);
    const auto p1 = s.find('|'), p2 = s.rfind('|');
    const Grid g(Partition::parse(s.substr(0, p1)), Partition::parse(s.substr(p1 + 1, p2 - p1 - 1)),
                 Partition::parse(s.substr(p2 + 1)));
    const auto t = compute_sdc(g);
    const auto json_text = to_json(g, t).dump(2);
    const auto csv = to_csv(t);
    CHECK(json_text == to_json(g, compute_sdc(g)).dump(2));
    CHECK(csv == to_csv(compute_sdc(g)));
    const auto parsed = nlohmann::ordered_json::parse(json_text);
    CHECK(from_json(parsed) == from_csv(csv));
    CHECK(parsed["multiplicity"].get<std::size_t>() == t.multiplicity());
  }
}
