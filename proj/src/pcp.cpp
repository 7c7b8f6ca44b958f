#include "categorica/pcp.hpp"

#include <map>
#include <stdexcept>

namespace categorica {

std::string to_string(PcpType t) {
  switch (t) {
    case PcpType::T1: return "1";
    case PcpType::T2: return "2";
    case PcpType::T3a: return "3a";
    case PcpType::T3b: return "3b";
    case PcpType::T4a: return "4a";
    case PcpType::T4b: return "4b";
    case PcpType::T5a: return "5a";
    case PcpType::T5b: return "5b";
  }
  throw std::logic_error("bad type");
}

bool entails_lc(PcpType t) {
  return t == PcpType::T1 || t == PcpType::T2 || t == PcpType::T3a ||
         t == PcpType::T3b;
}

PCP PCP::make(StatementNF p, StatementNF s) {
  if (!p.mentions(kTermM) || !p.mentions(kTermP) || p.mentions(kTermS))
    throw std::invalid_argument("P premise must be over the P and M terms");
  if (!s.mentions(kTermM) || !s.mentions(kTermS) || s.mentions(kTermP))
    throw std::invalid_argument("S premise must be over the S and M terms");
  return PCP{p, s};
}

PcpType classify(const PCP& pcp) {
  bool same_middle = pcp.p_middle() == pcp.s_middle();
  bool p_univ = pcp.p_premise.universal();
  bool s_univ = pcp.s_premise.universal();
  if (p_univ && s_univ) return same_middle ? PcpType::T2 : PcpType::T1;
  if (!p_univ && !s_univ) return same_middle ? PcpType::T4a : PcpType::T4b;
  if (p_univ) return same_middle ? PcpType::T3a : PcpType::T5a;
  return same_middle ? PcpType::T3b : PcpType::T5b;
}

namespace {

Cell cell_of(Literal a, Literal b, Literal c) {
  Cell cell = 0;
  for (Literal l : {a, b, c})
    if (l.positive()) cell |= Cell{1} << l.term;
  return cell;
}

Conclusion universal_pinpoint(Literal subject, Cell cell,
                              std::optional<SurfaceStatement> dropped) {
  Conclusion c;
  c.kind = Conclusion::Kind::universal_pinpoint;
  c.subject = subject;
  c.cell = cell;
  c.middle_dropped = dropped;
  return c;
}

Conclusion existential_pinpoint(Cell cell, std::optional<Literal> ei,
                                SurfaceStatement dropped) {
  Conclusion c;
  c.kind = Conclusion::Kind::existential_pinpoint;
  c.cell = cell;
  c.ei_condition = ei;
  c.middle_dropped = dropped;
  return c;
}

}  // namespace

std::vector<Conclusion> derive(const PCP& pcp) {
  const PcpType type = classify(pcp);
  const Literal mu = pcp.p_middle();
  const Literal a = pcp.p_end();
  const Literal b = pcp.s_end();
  std::vector<Conclusion> out;
  switch (type) {
    case PcpType::T1: {
      // b is included in mu, mu in a' (the premises empty {mu,a}, {mu',b})
      Cell cb = cell_of(b, mu, a.complement());
      Cell ca = cell_of(a, mu.complement(), b.complement());
      auto dropped =
          preferred_surface(StatementNF::make(NfKind::empty, b, a));
      out.push_back(universal_pinpoint(b, cb, dropped));
      out.push_back(universal_pinpoint(a, ca, dropped));
      out.push_back(existential_pinpoint(
          cb, b,
          preferred_surface(
              StatementNF::make(NfKind::nonempty, b, a.complement()))));
      out.push_back(existential_pinpoint(
          ca, a,
          preferred_surface(
              StatementNF::make(NfKind::nonempty, a, b.complement()))));
      break;
    }
    case PcpType::T2: {
      Cell c = cell_of(mu, a.complement(), b.complement());
      out.push_back(universal_pinpoint(mu, c, std::nullopt));
      out.push_back(existential_pinpoint(
          c, mu,
          preferred_surface(StatementNF::make(
              NfKind::nonempty, a.complement(), b.complement()))));
      break;
    }
    case PcpType::T3a:
      out.push_back(existential_pinpoint(
          cell_of(mu, b, a.complement()), std::nullopt,
          preferred_surface(
              StatementNF::make(NfKind::nonempty, b, a.complement()))));
      break;
    case PcpType::T3b:
      out.push_back(existential_pinpoint(
          cell_of(mu, a, b.complement()), std::nullopt,
          preferred_surface(
              StatementNF::make(NfKind::nonempty, a, b.complement()))));
      break;
    default:
      break;
  }
  return out;
}

namespace {

char letter_for(const StatementNF& premise) {
  Literal end = premise.other_than(kTermM);
  if (premise.kind == NfKind::empty)
    return end.positive() ? 'E' : 'A';
  return end.positive() ? 'I' : 'O';
}

std::string premise_code(const StatementNF& premise) {
  std::string out(1, letter_for(premise));
  if (!premise.literal_of(kTermM).positive()) out += '\'';
  return out;
}

StatementNF premise_from_letter(char letter, bool primed, int end_term) {
  Literal mu{kTermM, primed ? Polarity::complemented : Polarity::positive};
  switch (letter) {
    case 'A':
      return StatementNF::make(NfKind::empty, mu,
                               {end_term, Polarity::complemented});
    case 'E':
      return StatementNF::make(NfKind::empty, mu, {end_term, Polarity::positive});
    case 'I':
      return StatementNF::make(NfKind::nonempty, mu,
                               {end_term, Polarity::positive});
    case 'O':
      return StatementNF::make(NfKind::nonempty, mu,
                               {end_term, Polarity::complemented});
    default:
      throw std::invalid_argument(std::string("bad premise letter: ") + letter);
  }
}

struct NameEntry {
  const char* name;
  const char* coined;
};

const std::map<std::string, NameEntry, std::less<>>& nonei_names() {
  static const std::map<std::string, NameEntry, std::less<>> table = {
      {"EE", {"No name", ""}},
      {"IE", {"No name", "Fireo"}},
      {"EI", {"Ferio/Festino/Ferison/Fresison", ""}},
      {"EE'", {"Celarent/Cesare", ""}},
      {"EA", {"Felapton", ""}},
      {"IA", {"Disamis/Dimaris", ""}},
      {"EO", {"No name", ""}},
      {"EA'", {"No name", ""}},
      {"AE", {"No name", "Falepton"}},
      {"OE", {"No name", ""}},
      {"AI", {"Darii/Datisi", ""}},
      {"AE'", {"Barbara", ""}},
      {"AA", {"Darapti", ""}},
      {"OA", {"Bocardo", ""}},
      {"AO", {"No name", "Bacordo"}},
      {"AA'", {"No name", ""}},
      {"E'E'", {"No name", ""}},
      {"I'E'", {"No name", "Boraco"}},
      {"E'I'", {"Baroco", ""}},
      {"E'E", {"Camestres/Camenes", ""}},
      {"E'A'", {"Felapton'", ""}},
      {"I'A'", {"Disamis'/Dimaris'", ""}},
      {"E'O'", {"No name", ""}},
      {"E'A", {"No name", "Bramanta"}},
      {"A'E'", {"No name", ""}},
      {"O'E'", {"No name", ""}},
      {"A'I'", {"Darii'/Datisi'", ""}},
      {"A'E", {"Barbara'", ""}},
      {"A'A'", {"Darapti'", ""}},
      {"O'A'", {"Bocardo'", ""}},
      {"A'O'", {"No name", ""}},
      {"A'A", {"No name", ""}},
  };
  return table;
}

const std::map<std::string, const char*, std::less<>>& ei_names() {
  // keyed "<code>|<ei literal>"
  static const std::map<std::string, const char*, std::less<>> table = {
      {"EE|M", "No name"},
      {"EE'|S", "Celaront/Cesaro"},
      {"EE'|P", "No name"},
      {"EA|M", "Felapton/Fesapo"},
      {"EA'|P", "Bramantip'"},
      {"EA'|S'", "No name"},
      {"AE|M", "No name"},
      {"AE'|S", "Barbari"},
      {"AE'|P'", "No name"},
      {"AA|M", "Darapti"},
      {"AA'|S'", "No name"},
      {"AA'|P'", "No name"},
      {"E'E'|M'", "No name"},
      {"E'E|S", "Camestros/Camenos"},
      {"E'E|P", "No name"},
      {"E'A'|M'", "Felapton'/Fesapo'"},
      {"E'A|P", "Bramantip"},
      {"E'A|S'", "No name"},
      {"A'E'|M'", "No name"},
      {"A'E|S", "Barbari'"},
      {"A'E|P'", "No name"},
      {"A'A'|M'", "Darapti'"},
      {"A'A|S'", "No name"},
      {"A'A|P'", "No name"},
  };
  return table;
}

}  // namespace

std::string pcp_code(const PCP& pcp) {
  return premise_code(pcp.p_premise) + premise_code(pcp.s_premise);
}

PCP pcp_from_code(std::string_view code) {
  std::size_t i = 0;
  auto take = [&](int end_term) {
    if (i >= code.size()) throw std::invalid_argument("truncated PCP code");
    char letter = code[i++];
    bool primed = i < code.size() && code[i] == '\'';
    if (primed) ++i;
    return premise_from_letter(letter, primed, end_term);
  };
  StatementNF p = take(kTermP);
  StatementNF s = take(kTermS);
  if (i != code.size())
    throw std::invalid_argument("trailing characters in PCP code");
  return PCP::make(p, s);
}

std::vector<PCP> enumerate_all(bool positive_only) {
  std::vector<PCP> out;
  const char letters[] = {'A', 'E', 'I', 'O'};
  for (bool p_primed : {false, true})
    for (char pl : letters)
      for (bool s_primed : {false, true})
        for (char sl : letters) {
          PCP pcp = PCP::make(premise_from_letter(pl, p_primed, kTermP),
                              premise_from_letter(sl, s_primed, kTermS));
          if (positive_only && !(positive_formulable(pcp.p_premise) &&
                                 positive_formulable(pcp.s_premise)))
            continue;
          out.push_back(pcp);
        }
  return out;
}

bool positive_formulable(const StatementNF& premise) {
  return premise.first.positive() || premise.second.positive();
}

MoodName mood_name(const PCP& pcp) {
  if (!entails_lc(classify(pcp))) return MoodName{"no name (no LC)", "", false};
  auto it = nonei_names().find(pcp_code(pcp));
  if (it == nonei_names().end()) throw std::logic_error("missing name entry");
  return MoodName{it->second.name, it->second.coined, true};
}

std::string ei_mood_name(const PCP& pcp, Literal ei) {
  bool found = false;
  for (const Conclusion& c : derive(pcp))
    if (c.ei_condition == ei) found = true;
  if (!found)
    throw std::invalid_argument("PCP has no ei conclusion on that literal");
  Universe u = syllogistic_universe();
  auto it = ei_names().find(pcp_code(pcp) + "|" + u.literal_name(ei));
  return it == ei_names().end() ? "No name" : it->second;
}

BoundGroup bound_subset_group(const PCP& pcp) {
  if (!entails_lc(classify(pcp)))
    throw std::domain_error("PCP entails no LC; it is bound to no subset");
  Cell anchor =
      cell_of(pcp.p_middle(), pcp.p_end().complement(), pcp.s_end().complement());
  int s_bit = (anchor >> kTermS) & 1;
  int p_bit = (anchor >> kTermP) & 1;
  int m_bit = (anchor >> kTermM) & 1;
  return BoundGroup{1 + s_bit + 2 * p_bit + 4 * (1 - m_bit), anchor};
}

}  // namespace categorica
