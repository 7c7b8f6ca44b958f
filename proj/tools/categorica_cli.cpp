#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "categorica/parse.hpp"
#include "categorica/pcp.hpp"
#include "categorica/relabel.hpp"
#include "categorica/rules.hpp"
#include "categorica/sorites.hpp"

using json = nlohmann::json;
using namespace categorica;

namespace {

constexpr const char* kSchema = "categorica/1";

struct Options {
  bool json_output = false;
  std::string universe_letters;
  long seed = 0;  // reserved for sampling helpers
};

struct BoundPcp {
  Universe universe;
  PCP pcp;
};

std::vector<std::string> role_names(const ParsedStatement& p,
                                    const ParsedStatement& s,
                                    const std::string& letters) {
  if (!letters.empty()) {
    std::vector<std::string> names;
    if (letters.find(',') != std::string::npos) {
      std::size_t pos = 0;
      while (pos <= letters.size()) {
        std::size_t comma = letters.find(',', pos);
        if (comma == std::string::npos) comma = letters.size();
        names.push_back(letters.substr(pos, comma - pos));
        pos = comma + 1;
      }
    } else {
      for (char c : letters) names.emplace_back(1, c);
    }
    if (names.size() != 3)
      throw ParseError("--universe needs exactly three terms", 1, 1);
    return names;  // S, P, M order
  }
  auto p_terms = statement_terms(p);
  auto s_terms = statement_terms(s);
  if (p_terms.size() != 2 || s_terms.size() != 2)
    throw ParseError("premises must be two-term statements", 1, 1);
  std::string middle;
  for (const auto& t : p_terms)
    if (std::find(s_terms.begin(), s_terms.end(), t) != s_terms.end())
      middle = t;
  if (middle.empty())
    throw ParseError("premises share no middle term", 1, 1);
  std::string p_end = p_terms[0] == middle ? p_terms[1] : p_terms[0];
  std::string s_end = s_terms[0] == middle ? s_terms[1] : s_terms[0];
  if (p_end == s_end)
    throw ParseError("premises share both terms", 1, 1);
  return {s_end, p_end, middle};
}

StatementNF to_nf(const ParsedStatement& st, const Universe& u) {
  ProductStatement prod = to_product(st, u);
  if (prod.lits.size() != 2)
    throw ParseError("premise must involve exactly two terms", 1, 1);
  return StatementNF::make(prod.kind, prod.lits[0], prod.lits[1]);
}

BoundPcp bind_pcp(const std::string& p_text, const std::string& s_text,
                  const Options& opt) {
  ParsedStatement p = parse_statement(p_text);
  ParsedStatement s = parse_statement(s_text);
  Universe u{role_names(p, s, opt.universe_letters)};
  return {u, PCP::make(to_nf(p, u), to_nf(s, u))};
}

std::string mood_label(const MoodName& mood) {
  if (!mood.has_lc) return "no name (no LC)";
  if (mood.name == "No name" && !mood.coined.empty())
    return "No name (\"" + mood.coined + "\")";
  return mood.name;
}

json literal_json(const Universe& u, Literal l) {
  return u.literal_name(l);
}

json conclusion_json(const Universe& u, const Conclusion& c) {
  json j;
  j["kind"] = c.kind == Conclusion::Kind::universal_pinpoint ? "universal"
                                                             : "existential";
  if (c.subject) j["subject"] = literal_json(u, *c.subject);
  j["cell"] = u.cell_name(c.cell);
  if (c.ei_condition) j["ei"] = literal_json(u, *c.ei_condition);
  if (c.middle_dropped) j["classical"] = to_string(u, *c.middle_dropped);
  j["text"] = to_string(u, c);
  return j;
}

std::string product_text(const Universe& u, std::span<const Literal> lits,
                         bool universal) {
  // alphabetical by term name for stable, conventional output
  std::vector<Literal> sorted(lits.begin(), lits.end());
  std::sort(sorted.begin(), sorted.end(), [&](Literal a, Literal b) {
    return u.name(a.term) < u.name(b.term);
  });
  std::string out;
  for (Literal l : sorted) out += u.literal_name(l);
  out += universal ? " = 0" : " != 0";
  return out;
}

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json_output)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int run_classify(const Options& opt, const std::string& p_text,
                 const std::string& s_text) {
  BoundPcp b = bind_pcp(p_text, s_text, opt);
  PcpType type = classify(b.pcp);
  MoodName mood = mood_name(b.pcp);
  json j{{"schema", kSchema},
         {"code", pcp_code(b.pcp)},
         {"type", to_string(type)},
         {"mood", mood.name},
         {"has_lc", mood.has_lc}};
  if (!mood.coined.empty()) j["coined"] = mood.coined;
  std::string text = "type " + to_string(type) + ", " + mood_label(mood);
  if (entails_lc(type)) {
    BoundGroup group = bound_subset_group(b.pcp);
    j["group"] = group.index;
    j["bound_to"] = b.universe.cell_name(group.anchor);
    text += ", group " + std::to_string(group.index) + " (bound to " +
            b.universe.cell_name(group.anchor) + ")";
  }
  emit(opt, j, text + "\n");
  return 0;
}

int run_conclude(const Options& opt, const std::string& p_text,
                 const std::string& s_text, bool precise, bool classical,
                 bool ei) {
  BoundPcp b = bind_pcp(p_text, s_text, opt);
  auto conclusions = derive(b.pcp);
  json j{{"schema", kSchema},
         {"code", pcp_code(b.pcp)},
         {"conclusions", json::array()}};
  std::string text;
  for (const Conclusion& c : conclusions) {
    if (precise && c.ei()) continue;
    if (ei && !c.ei()) continue;
    j["conclusions"].push_back(conclusion_json(b.universe, c));
    if (classical) {
      if (!c.middle_dropped) continue;
      std::string name = c.ei() ? ei_mood_name(b.pcp, *c.ei_condition)
                                : mood_name(b.pcp).name;
      std::string line = to_string(b.universe, *c.middle_dropped);
      if (c.ei())
        line += " if " + b.universe.literal_name(*c.ei_condition) + " != 0";
      line += " (" + name + ")\n";
      if (text.find(line) == std::string::npos) text += line;
    } else {
      text += to_string(b.universe, c) + "\n";
    }
  }
  if (text.empty()) text = "no conclusion\n";
  emit(opt, j, text);
  return 0;
}

int run_reduce(const Options& opt, const std::string& p_text,
               const std::string& s_text, bool darii) {
  BoundPcp b = bind_pcp(p_text, s_text, opt);
  CanonicalForm cf = canonicalize(b.pcp, darii);
  json j{{"schema", kSchema},
         {"code", pcp_code(b.pcp)},
         {"representative", pcp_code(cf.representative)},
         {"representative_name", cf.representative_name},
         {"relabeling", cf.relabeling.to_string()},
         {"metathesis", cf.metathesis_applied}};
  std::string text = "representative " + pcp_code(cf.representative) + " (" +
                     cf.representative_name + "), relabeling " +
                     cf.relabeling.to_string() + ", metathesis " +
                     (cf.metathesis_applied ? "yes" : "no") + "\n";
  emit(opt, j, text);
  return 0;
}

int run_sorite(const Options& opt, const std::string& path,
               const std::string& trace_start, bool eliminate) {
  SoriteSource src = parse_sorite_file(path);
  const Universe& u = src.sorite.universe;
  json j{{"schema", kSchema}, {"terms", json::array()}};
  for (int t = 0; t < u.term_count(); ++t) j["terms"].push_back(u.name(t));
  std::string text;
  if (!trace_start.empty()) {
    ParsedStatement start = parse_statement(trace_start + " != 0");
    ProductStatement prod = to_product(start, u);
    SubstitutionTrace tr = substitution_trace(src.sorite, prod.lits);
    j["trace"] = json::array();
    for (const auto& step : tr.steps) {
      std::string after;
      for (Literal l : step.product) after += u.literal_name(l);
      j["trace"].push_back(
          {{"premise", step.premise_index + 1}, {"product", after}});
      text += "premise " + std::to_string(step.premise_index + 1) + ": " +
              after + "\n";
    }
    j["success"] = tr.success;
    text += tr.success ? "single cell reached\n" : "stuck\n";
  } else if (eliminate) {
    EliminationResult elim = eliminated_lc(src.sorite);
    j["retinends"] = json::array();
    j["eliminated"] = json::array();
    for (Literal l : elim.retinends) j["retinends"].push_back(u.literal_name(l));
    for (const auto& prod : elim.empty_products) {
      std::string line = product_text(u, prod, true);
      j["eliminated"].push_back(line);
      text += line + "\n";
    }
  } else {
    oracle::PinpointResult result = solve(src.sorite);
    j["consistent"] = result.consistent;
    j["conclusions"] = json::array();
    if (!result.consistent) {
      text = "inconsistent premises (premise " +
             std::to_string(*result.offending_premise + 1) + ")\n";
    } else {
      for (const Conclusion& c : result.conclusions) {
        j["conclusions"].push_back(conclusion_json(u, c));
        text += to_string(u, c) + "\n";
      }
      if (text.empty()) text = "no conclusion\n";
    }
  }
  emit(opt, j, text);
  return 0;
}

int run_enumerate(const Options& opt, bool positive_only, bool histogram) {
  auto pcps = enumerate_all(positive_only);
  json j{{"schema", kSchema}, {"count", pcps.size()}};
  std::string text;
  if (histogram) {
    std::map<std::string, int> hist;
    for (const PCP& p : pcps) hist[to_string(classify(p))]++;
    j["histogram"] = hist;
    for (const auto& [type, n] : hist)
      text += "type " + type + ": " + std::to_string(n) + "\n";
  } else {
    j["pcps"] = json::array();
    for (const PCP& p : pcps) {
      MoodName mood = mood_name(p);
      j["pcps"].push_back({{"code", pcp_code(p)},
                           {"type", to_string(classify(p))},
                           {"mood", mood.name}});
      text += pcp_code(p) + "\ttype " + to_string(classify(p)) + "\t" +
              mood_label(mood) + "\n";
    }
  }
  text += "total " + std::to_string(pcps.size()) + "\n";
  emit(opt, j, text);
  return 0;
}

const char* verdict_text(rules::RuleVerdict v) {
  switch (v) {
    case rules::RuleVerdict::pass: return "pass";
    case rules::RuleVerdict::fail: return "fail";
    default: return "n/a";
  }
}

int run_audit(const Options& opt, const std::string& p_text,
              const std::string& s_text) {
  BoundPcp b = bind_pcp(p_text, s_text, opt);
  json j{{"schema", kSchema},
         {"code", pcp_code(b.pcp)},
         {"audits", json::array()}};
  std::string text;
  for (const Conclusion& c : derive(b.pcp)) {
    rules::RuleAudit audit = rules::rofvca_check(b.pcp, c);
    auto rule_json = [](const rules::RuleResult& r) {
      return json{{"verdict", verdict_text(r.verdict)}, {"reason", r.reason}};
    };
    j["audits"].push_back({{"conclusion", conclusion_json(b.universe, c)},
                           {"rofvca1", rule_json(audit.conservation)},
                           {"rofvca2", rule_json(audit.universality)},
                           {"rofvca3", rule_json(audit.particularity)},
                           {"rofvca4", rule_json(audit.parity)}});
    text += to_string(b.universe, c) + "\n";
    text += "  #1 distribution: " +
            std::string(verdict_text(audit.conservation.verdict)) + "\n";
    text += "  #2 universality: " +
            std::string(verdict_text(audit.universality.verdict)) + "\n";
    text += "  #3 particularity: " +
            std::string(verdict_text(audit.particularity.verdict)) + "\n";
    text += "  #4 signature: " +
            std::string(verdict_text(audit.parity.verdict)) + "\n";
  }
  if (text.empty()) text = "no conclusion to audit\n";
  emit(opt, j, text);
  return 0;
}

int run_dofa(const Options& opt) {
  rules::DofaReport report = rules::rofvs_dofa();
  json j{{"schema", kSchema},
         {"positive", report.positive.size()},
         {"rejected", json::array()},
         {"candidates", json::array()},
         {"dofa", json::array()},
         {"ei_only", json::array()},
         {"note", report.note}};
  for (const auto& r : report.rejected)
    j["rejected"].push_back(
        {{"code", pcp_code(r.pcp)}, {"rule", r.rule}, {"reason", r.reason}});
  for (const PCP& p : report.candidates)
    j["candidates"].push_back(pcp_code(p));
  for (const PCP& p : report.dofa_members) j["dofa"].push_back(pcp_code(p));
  for (const PCP& p : report.ei_only) j["ei_only"].push_back(pcp_code(p));
  std::string text =
      "positive: " + std::to_string(report.positive.size()) + "\n";
  for (const auto& r : report.rejected)
    text += "rejected " + pcp_code(r.pcp) + " (" + r.rule + ": " + r.reason +
            ")\n";
  text += "candidates: " + std::to_string(report.candidates.size()) + "\n";
  text += "members:";
  for (const PCP& p : report.dofa_members) text += " " + pcp_code(p);
  text += "\nei-only:";
  for (const PCP& p : report.ei_only) text += " " + pcp_code(p);
  text += "\n" + report.note + "\n";
  emit(opt, j, text);
  return 0;
}

int run_oracle(const Options& opt, const std::string& path,
               const std::string& conclusion_text) {
  SoriteSource src = parse_sorite_file(path);
  const Universe& u = src.sorite.universe;
  ParsedStatement parsed = parse_statement(conclusion_text);
  ProductStatement conclusion = to_product(parsed, u);
  auto verdict = oracle::entails(
      u, std::span<const ProductStatement>(src.sorite.premises), {},
      conclusion);
  json j{{"schema", kSchema}, {"holds", verdict.holds}};
  std::string text = verdict.holds ? "holds\n" : "does not hold\n";
  if (verdict.countermodel) {
    json cells = json::array();
    text += "countermodel, nonempty cells:";
    for (Cell c : verdict.countermodel->nonempty.cells()) {
      cells.push_back(u.cell_name(c));
      text += " " + u.cell_name(c);
    }
    if (verdict.countermodel->nonempty.none()) text += " (none)";
    text += "\n";
    j["countermodel"] = cells;
  }
  emit(opt, j, text);
  return 0;
}

int run_esc(const Options& opt, const std::string& p_text,
            const std::string& s_text,
            const std::vector<std::string>& empty_terms) {
  BoundPcp b = bind_pcp(p_text, s_text, opt);
  std::vector<rules::EscConstraint> constraints;
  for (const std::string& name : empty_terms) {
    ParsedStatement st = parse_statement(name + " = 0");
    ProductStatement prod = to_product(st, b.universe);
    if (prod.lits.size() != 1)
      throw ParseError("--empty takes single literals", 1, 1);
    constraints.push_back({prod.lits[0]});
  }
  auto conclusions = derive(b.pcp);
  rules::EscReport report = rules::esc_compatible(
      b.pcp, conclusions, constraints);
  json j{{"schema", kSchema},
         {"premises_compatible", report.premises_compatible},
         {"items", json::array()}};
  std::string text = std::string("premises: ") +
                     (report.premises_compatible ? "compatible" : "incompatible") +
                     "\n";
  for (const auto& item : report.items) {
    j["items"].push_back(
        {{"conclusion", conclusion_json(b.universe, item.conclusion)},
         {"compatible", item.compatible}});
    text += to_string(b.universe, item.conclusion) + ": " +
            (item.compatible ? "compatible" : "incompatible") + "\n";
  }
  emit(opt, j, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"set-model engine for categorical arguments and sorites"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json_output, "machine-readable output");
  app.add_option("--universe", opt.universe_letters,
                 "term letters in S,P,M role order");
  app.add_option("--seed", opt.seed, "seed for sampling helpers");

  std::string p_text, s_text, path, conclusion, trace_start;
  bool precise = false, classical = false, ei = false, darii = false;
  bool eliminate = false, positive_only = false, histogram = false;
  std::vector<std::string> empty_terms;

  auto* classify_cmd = app.add_subcommand("classify", "type, mood, and group")->fallthrough();
  classify_cmd->add_option("p-premise", p_text)->required();
  classify_cmd->add_option("s-premise", s_text)->required();

  auto* conclude_cmd = app.add_subcommand("conclude", "derived conclusions")->fallthrough();
  conclude_cmd->add_option("p-premise", p_text)->required();
  conclude_cmd->add_option("s-premise", s_text)->required();
  conclude_cmd->add_flag("--precise", precise, "precise conclusions only");
  conclude_cmd->add_flag("--classical", classical, "middle-dropped readings");
  conclude_cmd->add_flag("--ei", ei, "existential-import conclusions only");

  auto* reduce_cmd = app.add_subcommand("reduce", "canonical representative")->fallthrough();
  reduce_cmd->add_option("p-premise", p_text)->required();
  reduce_cmd->add_option("s-premise", s_text)->required();
  reduce_cmd->add_flag("--darii", darii, "send type 3b to Darii by metathesis");

  auto* sorite_cmd = app.add_subcommand("sorite", "solve a premise file")->fallthrough();
  sorite_cmd->add_option("file", path)->required();
  sorite_cmd->add_option("--trace", trace_start, "substitution trace start");
  sorite_cmd->add_flag("--eliminate", eliminate, "minimal eliminated products");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "PCP census")->fallthrough();
  enumerate_cmd->add_flag("--positive-only", positive_only);
  enumerate_cmd->add_flag("--histogram", histogram);

  auto* audit_cmd = app.add_subcommand("audit", "argument-rule audit")->fallthrough();
  audit_cmd->add_option("p-premise", p_text)->required();
  audit_cmd->add_option("s-premise", s_text)->required();

  app.add_subcommand("dofa", "syllogism-rule domain of applicability")->fallthrough();

  auto* oracle_cmd = app.add_subcommand("oracle", "entailment check")->fallthrough();
  oracle_cmd->add_option("file", path)->required();
  oracle_cmd->add_option("--conclusion", conclusion)->required();

  auto* esc_cmd = app.add_subcommand("esc", "empty-set compatibility")->fallthrough();
  esc_cmd->add_option("p-premise", p_text)->required();
  esc_cmd->add_option("s-premise", s_text)->required();
  esc_cmd->add_option("--empty", empty_terms, "literals asserted empty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify_cmd->parsed()) return run_classify(opt, p_text, s_text);
    if (conclude_cmd->parsed())
      return run_conclude(opt, p_text, s_text, precise, classical, ei);
    if (reduce_cmd->parsed()) return run_reduce(opt, p_text, s_text, darii);
    if (sorite_cmd->parsed())
      return run_sorite(opt, path, trace_start, eliminate);
    if (enumerate_cmd->parsed())
      return run_enumerate(opt, positive_only, histogram);
    if (audit_cmd->parsed()) return run_audit(opt, p_text, s_text);
    if (app.get_subcommand("dofa")->parsed()) return run_dofa(opt);
    if (oracle_cmd->parsed()) return run_oracle(opt, path, conclusion);
    if (esc_cmd->parsed()) return run_esc(opt, p_text, s_text, empty_terms);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": "
              << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "out of domain: " << e.what() << "\n";
    return 3;
  } catch (const std::length_error& e) {
    std::cerr << "capability limit: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
