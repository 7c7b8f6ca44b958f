// End-to-end acceptance gate: one pass/fail line per criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "categorica/oracle.hpp"
#include "categorica/parse.hpp"
#include "categorica/pcp.hpp"
#include "categorica/relabel.hpp"
#include "categorica/rules.hpp"
#include "categorica/sorites.hpp"

using namespace categorica;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int index, const char* label, bool ok) {
  std::printf("criterion %2d (%s): %s\n", index, label, ok ? "pass" : "FAIL");
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Literal lit(int term, bool positive = true) {
  return {term, positive ? Polarity::positive : Polarity::complemented};
}

std::vector<StatementNF> premises_of(const PCP& pcp) {
  return {pcp.p_premise, pcp.s_premise};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

Literal named(const Universe& u, const std::string& text) {
  bool primed = text.back() == '\'';
  return {u.index_of(primed ? text.substr(0, text.size() - 1) : text),
          primed ? Polarity::complemented : Polarity::positive};
}

bool check_census() {
  auto start = Clock::now();
  auto all = enumerate_all(false);
  auto pos = enumerate_all(true);
  std::map<PcpType, int> all_hist, pos_hist;
  for (const PCP& p : all) all_hist[classify(p)]++;
  for (const PCP& p : pos) pos_hist[classify(p)]++;
  bool ok = all.size() == 64 && pos.size() == 36 && all_hist.size() == 8;
  for (auto [type, n] : all_hist) ok = ok && n == 8;
  ok = ok && pos_hist[PcpType::T1] == 4 && pos_hist[PcpType::T2] == 5 &&
       pos_hist[PcpType::T3a] == 5 && pos_hist[PcpType::T3b] == 5 &&
       pos_hist[PcpType::T4a] == 5 && pos_hist[PcpType::T4b] == 4 &&
       pos_hist[PcpType::T5a] == 4 && pos_hist[PcpType::T5b] == 4;
  return ok && seconds_since(start) < 0.1;
}

bool check_conclusion_census() {
  int entailing = 0, non_ei = 0, ei = 0, dropped = 0;
  for (const PCP& pcp : enumerate_all(false)) {
    auto conclusions = derive(pcp);
    if (!conclusions.empty()) ++entailing;
    std::set<StatementNF> dropped_here;
    for (const Conclusion& c : conclusions) {
      (c.ei() ? ei : non_ei)++;
      if (!c.ei() && c.middle_dropped)
        dropped_here.insert(normalize(*c.middle_dropped));
    }
    dropped += static_cast<int>(dropped_here.size());
  }
  return entailing == 32 && non_ei == 40 && ei == 24 && dropped == 24;
}

bool check_oracle() {
  auto start = Clock::now();
  Universe u = syllogistic_universe();
  bool ok = true;
  for (const PCP& pcp : enumerate_all(false)) {
    auto premises = premises_of(pcp);
    auto found =
        oracle::pinpoint_search(u, std::span<const StatementNF>(premises));
    auto expected = derive(pcp);
    for (Conclusion& c : expected) c.middle_dropped.reset();
    std::sort(expected.begin(), expected.end());
    std::sort(found.conclusions.begin(), found.conclusions.end());
    ok = ok && found.consistent && found.conclusions == expected;
    for (const Conclusion& c : derive(pcp))
      ok = ok &&
           oracle::entails(u, std::span<const StatementNF>(premises), {}, c)
               .holds;
    if (!entails_lc(classify(pcp))) {
      // completeness: no one-subset conclusion survives the model check
      for (Cell cell = 0; cell < 8; ++cell) {
        Conclusion ep;
        ep.kind = Conclusion::Kind::existential_pinpoint;
        ep.cell = cell;
        ok = ok && !oracle::entails(u, std::span<const StatementNF>(premises),
                                    {}, ep)
                        .holds;
        for (int term = 0; term < 3; ++term)
          for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
            if (!u.cell_in(cell, {term, pol})) continue;
            Conclusion up;
            up.kind = Conclusion::Kind::universal_pinpoint;
            up.subject = Literal{term, pol};
            up.cell = cell;
            ok = ok &&
                 !oracle::entails(u, std::span<const StatementNF>(premises),
                                  {}, up)
                      .holds;
          }
      }
    }
  }
  return ok && seconds_since(start) < 5.0;
}

bool check_golden_table() {
  std::ifstream file(std::string(TESTS_DATA_DIR) + "/moods_golden.txt");
  if (!file) return false;
  Universe u = syllogistic_universe();
  int rows = 0;
  bool ok = true;
  std::string line;
  while (std::getline(file, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '|');
    if (fields.size() != 7) return false;
    ++rows;
    PCP pcp = pcp_from_code(fields[0]);
    BoundGroup group = bound_subset_group(pcp);
    MoodName mood = mood_name(pcp);
    ok = ok && group.index == std::stoi(fields[1]) &&
         u.cell_name(group.anchor) == fields[2] && mood.name == fields[3] &&
         mood.coined == fields[4];
    std::vector<std::string> precise, ei;
    for (const Conclusion& c : derive(pcp)) {
      if (c.ei())
        ei.push_back(u.literal_name(*c.ei_condition) + ":" +
                     u.cell_name(c.cell) + ":" +
                     ei_mood_name(pcp, *c.ei_condition));
      else
        precise.push_back(to_string(u, c));
    }
    auto expected_precise =
        fields[5].empty() ? std::vector<std::string>{} : split(fields[5], ',');
    auto expected_ei =
        fields[6].empty() ? std::vector<std::string>{} : split(fields[6], ',');
    ok = ok && precise == expected_precise && ei == expected_ei;
  }
  return ok && rows == 32;
}

bool check_group() {
  auto start = Clock::now();
  auto elements = all_relabelings();
  bool ok = true;
  std::set<std::string> names;
  for (Relabeling g : elements) {
    names.insert(g.to_string());
    ok = ok && compose(g, g).is_identity();
  }
  ok = ok && names.size() == 8;
  for (const char* code : {"AE'", "AA", "AI", "IA"}) {
    std::set<std::string> orbit;
    for (Relabeling g : elements)
      orbit.insert(pcp_code(apply(g, pcp_from_code(code))));
    ok = ok && orbit.size() == 8;
  }
  for (const PCP& pcp : enumerate_all(false)) {
    if (entails_lc(classify(pcp))) {
      int index = bound_subset_group(pcp).index;
      auto moved = [&](const char* flips) {
        return bound_subset_group(apply(Relabeling::from_string(flips), pcp))
            .index;
      };
      ok = ok && moved("s") == (index % 2 == 1 ? index + 1 : index - 1);
      ok = ok && moved("p") == ((index - 1) % 4 < 2 ? index + 2 : index - 2);
      ok = ok && moved("m") == (index <= 4 ? index + 4 : index - 4);
    }
    for (Relabeling g : elements) {
      auto direct = derive(apply(g, pcp));
      auto mapped = derive(pcp);
      for (Conclusion& c : mapped) {
        c = apply(g, c);
        c.middle_dropped.reset();
      }
      for (Conclusion& c : direct) c.middle_dropped.reset();
      std::sort(direct.begin(), direct.end());
      std::sort(mapped.begin(), mapped.end());
      ok = ok && direct == mapped;
    }
  }
  return ok && seconds_since(start) < 1.0;
}

bool check_canonicalization() {
  std::map<std::string, int> per_name;
  for (const PCP& pcp : enumerate_all(false)) {
    if (!entails_lc(classify(pcp))) continue;
    CanonicalForm cf = canonicalize(pcp);
    PCP input = cf.metathesis_applied ? metathesis(pcp) : pcp;
    if (apply(cf.relabeling, input) != cf.representative) return false;
    per_name[cf.representative_name]++;
  }
  return per_name.size() == 4 && per_name["Barbara"] == 8 &&
         per_name["Darapti"] == 8 && per_name["Darii"] == 8 &&
         per_name["Disamis"] == 8;
}

bool check_carroll() {
  auto start = Clock::now();
  Sorite s =
      parse_sorite_file(std::string(TESTS_DATA_DIR) + "/carroll.txt").sorite;
  if (s.universe.term_count() != 10 || s.premises.size() != 8) return false;
  std::vector<Literal> lc{named(s.universe, "c'"), named(s.universe, "l"),
                          named(s.universe, "e")};
  std::sort(lc.begin(), lc.end());
  bool ok = verify_universal(s, lc);
  EliminationResult elim = eliminated_lc(s);
  ok = ok && std::find(elim.empty_products.begin(), elim.empty_products.end(),
                       lc) != elim.empty_products.end();
  SubstitutionTrace trace = substitution_trace(
      s, std::vector<Literal>{named(s.universe, "e"), named(s.universe, "l")});
  ok = ok && trace.success && trace.cell.has_value();
  if (ok)
    for (const char* name :
         {"e", "l", "m'", "a'", "h", "b", "n'", "d", "k", "c"})
      ok = ok && s.universe.cell_in(*trace.cell, named(s.universe, name));
  return ok && seconds_since(start) < 1.0;
}

bool check_sorites_suite() {
  const std::string chain = "Sm1' = 0\nm1m2' = 0\nm2p' = 0\n";
  auto count = [](const std::string& text) {
    auto result = solve(parse_sorite_text(text).sorite);
    if (!result.consistent) return -1;
    return static_cast<int>(std::count_if(
        result.conclusions.begin(), result.conclusions.end(),
        [](const Conclusion& c) { return !c.ei(); }));
  };
  return count(chain) == 2 && count("MS' = 0\nMM1' = 0\nMP' = 0\n") == 1 &&
         count("m3m4 != 0\nm3P' = 0\nm4S' = 0\n") == 1 &&
         count(chain + "m1a1 = 0\na1'a2 = 0\na2'm2' = 0\n") == 2 &&
         count(chain + "m1a1 = 0\na1'a2 = 0\n") == 1 &&
         count(chain + "m1'b1 = 0\nb1'b2 = 0\nb2'm2 = 0\n") == 2 &&
         count(chain + "m1a1 = 0\na1'a2 = 0\nm1'd1 = 0\n") == 0 &&
         count(chain + "m1'g1 = 0\nm1'd1 = 0\n") == 1;
}

bool check_rules() {
  bool ok = true;
  for (const PCP& pcp : enumerate_all(false)) {
    if (!entails_lc(classify(pcp))) continue;
    auto pred = rules::rofvca_predict(pcp);
    ok = ok && !pred.ambiguous && pred.statement.has_value();
    bool agrees = false;
    for (const Conclusion& c : derive(pcp)) {
      auto audit = rules::rofvca_check(pcp, c);
      ok = ok && audit.conservation.verdict != rules::RuleVerdict::fail &&
           audit.universality.verdict != rules::RuleVerdict::fail &&
           audit.particularity.verdict != rules::RuleVerdict::fail &&
           audit.parity.verdict != rules::RuleVerdict::fail;
      if (!c.middle_dropped || !pred.statement) continue;
      if (c.ei() != pred.ei_condition.has_value()) continue;
      if (classify(pcp) == PcpType::T1 && c.ei()) continue;
      if (normalize(*c.middle_dropped) == *pred.statement) agrees = true;
    }
    ok = ok && agrees;
  }
  auto report = rules::rofvs_dofa();
  std::map<std::string, int> by_rule;
  for (const auto& r : report.rejected) by_rule[r.rule]++;
  ok = ok && report.positive.size() == 36 && report.candidates.size() == 15 &&
       report.dofa_members.size() == 12 && report.ei_only.size() == 3 &&
       by_rule.size() == 4;
  for (const auto& r : report.rejected) ok = ok && !r.reason.empty();
  return ok;
}

bool check_joint_and_coexistence() {
  Universe u = syllogistic_universe();
  auto empty_nf = [&](Literal a, Literal b) {
    return StatementNF::make(NfKind::empty, a, b);
  };
  auto a = empty_nf(lit(kTermM), lit(kTermP, false));
  auto e = empty_nf(lit(kTermM), lit(kTermP));
  auto ap = empty_nf(lit(kTermM, false), lit(kTermP, false));
  auto ep = empty_nf(lit(kTermM, false), lit(kTermP));
  using Kind = rules::JointConsequence::Kind;
  auto jc = [&](const StatementNF& x, const StatementNF& y) {
    return rules::joint_universal_consequence(u, x, y);
  };
  bool ok = jc(a, e).kind == Kind::empty_literal && jc(a, e).lhs == lit(kTermM);
  ok = ok && jc(e, ep).lhs == lit(kTermP);
  ok = ok && jc(ap, ep).lhs == lit(kTermM, false);
  ok = ok && jc(a, ap).lhs == lit(kTermP, false);
  ok = ok && jc(a, ep).kind == Kind::equal_literals &&
       jc(a, ep).lhs == lit(kTermP) && jc(a, ep).rhs == lit(kTermM);
  ok = ok && jc(ap, e).kind == Kind::equal_literals &&
       jc(ap, e).rhs == lit(kTermM, false);

  auto celarent = rules::coexistence(pcp_from_code("EE'"), pcp_from_code("E'E"));
  ok = ok && celarent.forced_empty.size() == 2 &&
       celarent.forced_empty[0] == lit(kTermS) &&
       celarent.forced_empty[1] == lit(kTermP);
  std::vector<StatementNF> swapped{
      empty_nf(lit(kTermM), lit(kTermP, false)),
      empty_nf(lit(kTermM, false), lit(kTermS)),
      empty_nf(lit(kTermP), lit(kTermM, false)),
      empty_nf(lit(kTermP, false), lit(kTermS))};
  auto forced = rules::coexistence(u, swapped);
  ok = ok && forced.forced_equal.size() == 1 &&
       forced.forced_equal[0] ==
           std::pair<Literal, Literal>(lit(kTermP), lit(kTermM));
  std::vector<StatementNF> triple{
      empty_nf(lit(kTermM), lit(kTermP, false)),
      empty_nf(lit(kTermM), lit(kTermS)),
      empty_nf(lit(kTermS), lit(kTermP, false))};
  return ok && !rules::coexistence(u, triple).forced();
}

bool check_esc() {
  auto single = [](Literal l) { return rules::EscConstraint{l}; };
  PCP darii = pcp_from_code("AI");
  auto dconc = derive(darii);
  bool ok = true;
  for (int term : {kTermS, kTermP, kTermM}) {
    std::vector<rules::EscConstraint> esc{single(lit(term))};
    ok = ok && !rules::esc_compatible(darii, dconc, esc).items[0].compatible;
  }
  std::vector<rules::EscConstraint> complements{
      single(lit(kTermS, false)), single(lit(kTermM, false)),
      single(lit(kTermP, false))};
  ok = ok &&
       rules::esc_compatible(darii, dconc, complements).items[0].compatible;

  PCP darapti = pcp_from_code("AA");
  auto daconc = derive(darapti);
  std::vector<rules::EscConstraint> m_empty{single(lit(kTermM))};
  auto darapti_report = rules::esc_compatible(darapti, daconc, m_empty);
  ok = ok && darapti_report.premises_compatible;
  for (const auto& item : darapti_report.items)
    ok = ok && item.compatible == !item.conclusion.ei();

  PCP barbara = pcp_from_code("AE'");
  auto bconc = derive(barbara);
  for (int term : {kTermS, kTermP, kTermM})
    for (bool positive : {true, false}) {
      std::vector<rules::EscConstraint> esc{single(lit(term, positive))};
      auto r = rules::esc_compatible(barbara, bconc, esc);
      ok = ok && r.premises_compatible;
      for (const auto& item : r.items)
        if (!item.conclusion.ei()) ok = ok && item.compatible;
    }
  return ok;
}

bool check_parser() {
  Universe u{{"alpha", "beta", "gamma", "delta"}};
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> form_dist(0, 3), term_dist(0, 3),
      pol_dist(0, 1);
  int cases = 0;
  while (cases < 10000) {
    int subject = term_dist(rng), predicate = term_dist(rng);
    if (subject == predicate) continue;
    SurfaceStatement st{static_cast<Form>(form_dist(rng)),
                        lit(subject, pol_dist(rng) == 0),
                        lit(predicate, pol_dist(rng) == 0)};
    if (to_surface(parse_statement(render(u, st)), u) != st) return false;
    ++cases;
  }
  SoriteSource src =
      parse_sorite_file(std::string(TESTS_DATA_DIR) + "/carroll.txt");
  if (src.sorite.premises.size() != 8) return false;
  const char* expected[] = {"d'n'm' = 0", "ka'c' = 0", "lem = 0", "dhk' = 0",
                            "h'la' = 0",  "hm'b' = 0", "a'bn = 0", "am'e = 0"};
  for (int i = 0; i < 8; ++i)
    if (src.sorite.premises[i] !=
        to_product(parse_statement(expected[i]), src.sorite.universe))
      return false;
  return true;
}

}  // namespace

int main() {
  report(1, "census", check_census());
  report(2, "conclusion census", check_conclusion_census());
  report(3, "oracle agreement", check_oracle());
  report(4, "golden mood table", check_golden_table());
  report(5, "relabeling group", check_group());
  report(6, "canonicalization", check_canonicalization());
  report(7, "carroll sorite", check_carroll());
  report(8, "decorated sorites", check_sorites_suite());
  report(9, "argument rules", check_rules());
  report(10, "joint consequences", check_joint_and_coexistence());
  report(11, "empty-set constraints", check_esc());
  report(12, "parser round-trip", check_parser());
  return failures == 0 ? 0 : 1;
}
