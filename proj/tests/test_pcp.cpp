#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "categorica/parse.hpp"
#include "categorica/pcp.hpp"

using namespace categorica;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

struct GoldenRow {
  std::string code;
  int group;
  std::string anchor;
  std::string name;
  std::string coined;
  std::vector<std::string> precise;
  std::vector<std::string> ei;  // lit:cell:name
};

std::vector<GoldenRow> load_golden() {
  std::ifstream file(std::string(TESTS_DATA_DIR) + "/moods_golden.txt");
  REQUIRE(file.good());
  std::vector<GoldenRow> rows;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '|');
    REQUIRE(fields.size() == 7);
    GoldenRow row;
    row.code = fields[0];
    row.group = std::stoi(fields[1]);
    row.anchor = fields[2];
    row.name = fields[3];
    row.coined = fields[4];
    if (!fields[5].empty()) row.precise = split(fields[5], ',');
    if (!fields[6].empty()) row.ei = split(fields[6], ',');
    rows.push_back(std::move(row));
  }
  REQUIRE(rows.size() == 32);
  return rows;
}

}  // namespace

TEST_CASE("code round-trip over all 64 pairs") {
  auto all = enumerate_all(false);
  CHECK(all.size() == 64);
  for (const PCP& pcp : all) {
    std::string code = pcp_code(pcp);
    CHECK(pcp_from_code(code) == pcp);
  }
}

TEST_CASE("classification census") {
  std::map<PcpType, int> all_hist, pos_hist;
  for (const PCP& pcp : enumerate_all(false)) all_hist[classify(pcp)]++;
  for (const PCP& pcp : enumerate_all(true)) pos_hist[classify(pcp)]++;
  for (auto [type, n] : all_hist) CHECK(n == 8);
  CHECK(all_hist.size() == 8);
  CHECK(pos_hist[PcpType::T1] == 4);
  CHECK(pos_hist[PcpType::T2] == 5);
  CHECK(pos_hist[PcpType::T3a] == 5);
  CHECK(pos_hist[PcpType::T3b] == 5);
  CHECK(pos_hist[PcpType::T4a] == 5);
  CHECK(pos_hist[PcpType::T4b] == 4);
  CHECK(pos_hist[PcpType::T5a] == 4);
  CHECK(pos_hist[PcpType::T5b] == 4);
}

TEST_CASE("positive formulability excludes double-complement premises") {
  Literal m{kTermM, Polarity::complemented};
  Literal p{kTermP, Polarity::complemented};
  CHECK_FALSE(positive_formulable(StatementNF::make(NfKind::empty, m, p)));
  CHECK(positive_formulable(
      StatementNF::make(NfKind::empty, m, p.complement())));
}

TEST_CASE("conclusion counts per type") {
  for (const PCP& pcp : enumerate_all(false)) {
    auto conclusions = derive(pcp);
    switch (classify(pcp)) {
      case PcpType::T1: CHECK(conclusions.size() == 4); break;
      case PcpType::T2: CHECK(conclusions.size() == 2); break;
      case PcpType::T3a:
      case PcpType::T3b: CHECK(conclusions.size() == 1); break;
      default: CHECK(conclusions.empty());
    }
  }
}

TEST_CASE("golden table: groups, names, precise and ei conclusions") {
  Universe u = syllogistic_universe();
  for (const GoldenRow& row : load_golden()) {
    CAPTURE(row.code);
    PCP pcp = pcp_from_code(row.code);
    BoundGroup group = bound_subset_group(pcp);
    CHECK(group.index == row.group);
    CHECK(u.cell_name(group.anchor) == row.anchor);

    MoodName mood = mood_name(pcp);
    CHECK(mood.name == row.name);
    CHECK(mood.coined == row.coined);
    CHECK(mood.has_lc);

    std::vector<std::string> precise, ei;
    for (const Conclusion& c : derive(pcp)) {
      if (c.ei()) {
        std::string name = ei_mood_name(pcp, *c.ei_condition);
        ei.push_back(u.literal_name(*c.ei_condition) + ":" +
                     u.cell_name(c.cell) + ":" + name);
      } else {
        precise.push_back(to_string(u, c));
      }
    }
    CHECK(precise == row.precise);
    CHECK(ei == row.ei);
  }
}

TEST_CASE("type 4 and 5 have no names, groups, or ei moods") {
  PCP ii = pcp_from_code("II");
  CHECK_FALSE(mood_name(ii).has_lc);
  CHECK_THROWS_AS(bound_subset_group(ii), std::domain_error);
  CHECK_THROWS_AS(ei_mood_name(ii, {kTermS, Polarity::positive}),
                  std::invalid_argument);
}

TEST_CASE("premise layout is validated") {
  StatementNF over_sp = StatementNF::make(
      NfKind::empty, {kTermS, Polarity::positive}, {kTermP, Polarity::positive});
  StatementNF over_sm = StatementNF::make(
      NfKind::empty, {kTermS, Polarity::positive}, {kTermM, Polarity::positive});
  CHECK_THROWS_AS(PCP::make(over_sp, over_sm), std::invalid_argument);
  CHECK_THROWS_AS(PCP::make(over_sm, over_sm), std::invalid_argument);
}

TEST_CASE("middle-dropped readings") {
  // Barbara keeps one A(S,P) reading across both universal pinpoints
  Universe u = syllogistic_universe();
  PCP barbara = pcp_from_code("AE'");
  for (const Conclusion& c : derive(barbara)) {
    if (c.ei()) continue;
    REQUIRE(c.middle_dropped);
    CHECK(to_string(u, *c.middle_dropped) == "A(S,P)");
  }
  // type 2 precise conclusion keeps its middle, so no dropped reading
  for (const Conclusion& c : derive(pcp_from_code("AA"))) {
    if (c.ei()) {
      REQUIRE(c.middle_dropped);
      CHECK(to_string(u, *c.middle_dropped) == "I(S,P)");
    } else {
      CHECK_FALSE(c.middle_dropped);
    }
  }
}
