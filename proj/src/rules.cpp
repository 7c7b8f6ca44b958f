#include "categorica/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace categorica::rules {

namespace {

int literal_sign(Literal l) { return l.positive() ? 0 : 1; }

bool negative_positive_form(const StatementNF& premise) {
  // the quality of the statement's all-positive-terms reading
  return signature(premise) == 1;
}

StatementNF lc_nf(const Conclusion& c) {
  return normalize(*c.middle_dropped);
}

const StatementNF& premise_of_end(const PCP& pcp, int term) {
  return term == kTermP ? pcp.p_premise : pcp.s_premise;
}

RuleResult conservation_check(const PCP& pcp, const Conclusion& c) {
  if (!c.middle_dropped)
    return {RuleVerdict::not_applicable, "no middle-dropped reading"};
  const StatementNF lc = lc_nf(c);
  const bool t1 = classify(pcp) == PcpType::T1;
  std::string failures;
  for (int term : {kTermS, kTermP}) {
    const StatementNF& premise = premise_of_end(pcp, term);
    if (t1 && c.ei_condition && c.ei_condition->term == term) {
      if (distribution(premise, *c.ei_condition) == Distribution::distributed &&
          distribution(lc, *c.ei_condition) == Distribution::undistributed)
        continue;  // existential import demotes the conditioned end term
      failures += failures.empty() ? "" : "; ";
      failures += "ei end term not demoted";
      continue;
    }
    Literal probe{term, Polarity::positive};
    if (distribution(premise, probe) != distribution(lc, probe)) {
      failures += failures.empty() ? "" : "; ";
      failures += "end term distribution not conserved";
    }
  }
  if (failures.empty())
    return {RuleVerdict::pass, "end term distribution conserved"};
  return {RuleVerdict::fail, failures};
}

RuleResult universality_check(const PCP& pcp, const Conclusion& c) {
  if (!pcp.p_premise.universal() || !pcp.s_premise.universal())
    return {RuleVerdict::not_applicable, "a premise is particular"};
  if (c.kind == Conclusion::Kind::universal_pinpoint)
    return {RuleVerdict::pass, "universal conclusion from two universals"};
  if (c.ei())
    return {RuleVerdict::pass,
            "particular conclusion under an existential import condition"};
  return {RuleVerdict::fail,
          "unconditioned particular conclusion from two universals"};
}

RuleResult particularity_check(const PCP& pcp, const Conclusion& c) {
  if (pcp.p_premise.universal() && pcp.s_premise.universal())
    return {RuleVerdict::not_applicable, "both premises universal"};
  if (c.kind == Conclusion::Kind::existential_pinpoint)
    return {RuleVerdict::pass, "particular conclusion from a particular premise"};
  return {RuleVerdict::fail,
          "universal conclusion despite a particular premise"};
}

RuleResult parity_check(const PCP& pcp, const Conclusion& c) {
  if (!c.middle_dropped)
    return {RuleVerdict::not_applicable, "no middle-dropped reading"};
  int premises = (signature(pcp.p_premise) + signature(pcp.s_premise)) % 2;
  if (signature(lc_nf(c)) == premises)
    return {RuleVerdict::pass, "conclusion signature matches premise parity"};
  return {RuleVerdict::fail, "conclusion signature breaks premise parity"};
}

}  // namespace

Distribution distribution(const StatementNF& st, Literal l) {
  Literal stored = st.literal_of(l.term);
  bool matches = l == stored;
  return matches == st.universal() ? Distribution::distributed
                                   : Distribution::undistributed;
}

Distribution distribution(const SurfaceStatement& st, Literal l) {
  return distribution(normalize(st), l);
}

int signature(const StatementNF& st) {
  int bit = st.universal() ? 1 : 0;
  return (bit + literal_sign(st.first) + literal_sign(st.second)) % 2;
}

int signature(const SurfaceStatement& st) { return signature(normalize(st)); }

RofvcaPrediction rofvca_predict(const PCP& pcp) {
  const PcpType type = classify(pcp);
  if (!entails_lc(type))
    throw std::domain_error("prediction is defined for types 1-3 only");

  RofvcaPrediction out;
  out.particular = type != PcpType::T1;
  if (type == PcpType::T2) out.ei_condition = pcp.p_middle();

  const int parity = (signature(pcp.p_premise) + signature(pcp.s_premise)) % 2;
  const NfKind kind = out.particular ? NfKind::nonempty : NfKind::empty;
  for (Polarity ps : {Polarity::positive, Polarity::complemented})
    for (Polarity pp : {Polarity::positive, Polarity::complemented}) {
      StatementNF cand =
          StatementNF::make(kind, {kTermS, ps}, {kTermP, pp});
      if (signature(cand) != parity) continue;
      bool conserved = true;
      for (int term : {kTermS, kTermP}) {
        Literal probe{term, Polarity::positive};
        if (distribution(premise_of_end(pcp, term), probe) !=
            distribution(cand, probe)) {
          conserved = false;
          break;
        }
      }
      if (conserved) out.candidates.push_back(cand);
    }
  if (out.candidates.size() == 1)
    out.statement = out.candidates.front();
  else if (out.candidates.size() > 1)
    out.ambiguous = true;
  return out;
}

RuleAudit rofvca_check(const PCP& pcp, const Conclusion& c) {
  bool matched = false;
  for (const Conclusion& d : derive(pcp))
    if (d.kind == c.kind && d.subject == c.subject && d.cell == c.cell &&
        d.ei_condition == c.ei_condition) {
      matched = true;
      break;
    }
  if (!matched)
    throw std::invalid_argument("conclusion is not derived from this pair");
  RuleAudit audit;
  audit.conservation = conservation_check(pcp, c);
  audit.universality = universality_check(pcp, c);
  audit.particularity = particularity_check(pcp, c);
  audit.parity = parity_check(pcp, c);
  return audit;
}

DofaReport rofvs_dofa() {
  DofaReport report;
  report.positive = enumerate_all(true);
  report.note =
      "the three ei-only moods conclude nothing without existential import, "
      "which the syllogism rules never mention";
  for (const PCP& pcp : report.positive) {
    const PcpType type = classify(pcp);
    const bool p_particular = !pcp.p_premise.universal();
    const bool s_particular = !pcp.s_premise.universal();
    const bool p_negative = negative_positive_form(pcp.p_premise);
    const bool s_negative = negative_positive_form(pcp.s_premise);
    const bool middle_undistributed =
        distribution(pcp.p_premise, {kTermM, Polarity::positive}) ==
            Distribution::undistributed &&
        distribution(pcp.s_premise, {kTermM, Polarity::positive}) ==
            Distribution::undistributed;

    if (p_particular && s_particular) {
      report.rejected.push_back(
          {pcp, "two particulars", "both premises are particular"});
    } else if (type == PcpType::T5a || type == PcpType::T5b) {
      report.rejected.push_back(
          {pcp, "type 5", "complementary middles with a particular premise"});
    } else if (p_negative && s_negative) {
      report.rejected.push_back(
          {pcp, "RofVS #2", "both premises are negative"});
    } else if (middle_undistributed) {
      report.rejected.push_back(
          {pcp, "RofVS #1", "middle term distributed in neither premise"});
    } else if (classify(pcp) == PcpType::T2) {
      report.candidates.push_back(pcp);
      report.ei_only.push_back(pcp);
    } else {
      report.candidates.push_back(pcp);
      report.dofa_members.push_back(pcp);
    }
  }
  return report;
}

EscReport esc_compatible(const PCP& pcp, std::span<const Conclusion> conclusions,
                         std::span<const EscConstraint> esc) {
  const Universe u = syllogistic_universe();
  std::vector<ProductStatement> constraints{
      ProductStatement::from(pcp.p_premise),
      ProductStatement::from(pcp.s_premise)};
  for (const EscConstraint& e : esc)
    constraints.push_back(ProductStatement::make(NfKind::empty, {e.empty}));

  EscReport report;
  report.premises_compatible =
      oracle::satisfiable(u, std::span<const ProductStatement>(constraints), {})
          .has_value();
  for (const Conclusion& c : conclusions) {
    std::vector<Literal> assume;
    if (c.ei_condition) assume.push_back(*c.ei_condition);
    bool ok = oracle::satisfiable(
                  u, std::span<const ProductStatement>(constraints), assume)
                  .has_value();
    report.items.push_back({c, ok});
  }
  return report;
}

JointConsequence joint_universal_consequence(const Universe& u,
                                             const StatementNF& u1,
                                             const StatementNF& u2) {
  if (!u1.universal() || !u2.universal())
    throw std::invalid_argument("both statements must be universal");
  const int t1 = u1.first.term;
  const int t2 = u1.second.term;
  if (!u2.mentions(t1) || !u2.mentions(t2))
    throw std::invalid_argument("statements must share their term pair");

  Region emptied = region_of_product(u, std::vector<Literal>{u1.first, u1.second}) |
                   region_of_product(u, std::vector<Literal>{u2.first, u2.second});

  JointConsequence out;
  for (int term : {t1, t2})
    for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
      Literal l{term, pol};
      if (region_of_literal(u, l).subset_of(emptied)) {
        out.kind = JointConsequence::Kind::empty_literal;
        out.lhs = l;
        return out;
      }
    }
  Literal low{std::min(t1, t2), Polarity::positive};
  const int high = std::max(t1, t2);
  Region low_region = region_of_literal(u, low);
  for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
    Region other = region_of_literal(u, {high, pol});
    Region symdiff = (low_region - other) | (other - low_region);
    if (symdiff.subset_of(emptied)) {
      out.kind = JointConsequence::Kind::equal_literals;
      out.lhs = low;
      out.rhs = Literal{high, pol};
      return out;
    }
  }
  return out;
}

CoexistenceReport coexistence(const Universe& u,
                              std::span<const StatementNF> premises) {
  if (u.term_count() > oracle::kExhaustiveCap)
    throw std::invalid_argument("coexistence analysis needs a small universe");
  CoexistenceReport report;
  Region possible(u.term_count());
  bool any = false;
  const std::uint64_t n_models = std::uint64_t{1} << u.cell_count();
  for (std::uint64_t mask = 0; mask < n_models; ++mask) {
    oracle::Model m{Region(u.term_count())};
    for (std::size_t cell = 0; cell < u.cell_count(); ++cell)
      if ((mask >> cell) & 1u) m.nonempty.set(static_cast<Cell>(cell));
    bool ok = true;
    for (const StatementNF& p : premises)
      if (!oracle::satisfies(u, m, p)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    any = true;
    possible |= m.nonempty;
  }
  if (!any) {
    report.satisfiable = false;
    return report;
  }
  std::vector<bool> term_degenerate(u.term_count(), false);
  for (int term = 0; term < u.term_count(); ++term)
    for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
      Literal l{term, pol};
      if (!region_of_literal(u, l).intersects(possible)) {
        report.forced_empty.push_back(l);
        term_degenerate[term] = true;
      }
    }
  for (int t1 = 0; t1 < u.term_count(); ++t1) {
    if (term_degenerate[t1]) continue;
    Region r1 = region_of_literal(u, {t1, Polarity::positive});
    for (int t2 = t1 + 1; t2 < u.term_count(); ++t2) {
      if (term_degenerate[t2]) continue;
      for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
        Region r2 = region_of_literal(u, {t2, pol});
        Region symdiff = (r1 - r2) | (r2 - r1);
        if (!symdiff.intersects(possible))
          report.forced_equal.push_back(
              {Literal{t1, Polarity::positive}, Literal{t2, pol}});
      }
    }
  }
  return report;
}

CoexistenceReport coexistence(const PCP& a, const PCP& b) {
  const Universe u = syllogistic_universe();
  std::vector<StatementNF> premises{a.p_premise, a.s_premise, b.p_premise,
                                    b.s_premise};
  return coexistence(u, premises);
}

}  // namespace categorica::rules
