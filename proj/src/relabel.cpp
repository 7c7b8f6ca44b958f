#include "categorica/relabel.hpp"

#include <stdexcept>

namespace categorica {

Relabeling Relabeling::from_string(std::string_view text) {
  if (text == "e") return {};
  Relabeling g;
  for (char c : text) {
    switch (c) {
      case 'p':
        if (g.flip_p) throw std::invalid_argument("duplicate flip in relabeling");
        g.flip_p = true;
        break;
      case 's':
        if (g.flip_s) throw std::invalid_argument("duplicate flip in relabeling");
        g.flip_s = true;
        break;
      case 'm':
        if (g.flip_m) throw std::invalid_argument("duplicate flip in relabeling");
        g.flip_m = true;
        break;
      default:
        throw std::invalid_argument("bad relabeling: " + std::string(text));
    }
  }
  if (text.empty()) throw std::invalid_argument("empty relabeling");
  return g;
}

std::string Relabeling::to_string() const {
  std::string out;
  if (flip_p) out += 'p';
  if (flip_s) out += 's';
  if (flip_m) out += 'm';
  return out.empty() ? "e" : out;
}

bool Relabeling::flips(int term) const {
  switch (term) {
    case kTermP: return flip_p;
    case kTermS: return flip_s;
    case kTermM: return flip_m;
    default: throw std::invalid_argument("relabeling acts on S, P, M only");
  }
}

Relabeling compose(Relabeling g, Relabeling h) {
  return Relabeling{g.flip_p != h.flip_p, g.flip_s != h.flip_s,
                    g.flip_m != h.flip_m};
}

std::array<Relabeling, 8> all_relabelings() {
  std::array<Relabeling, 8> out;
  int i = 0;
  for (bool p : {false, true})
    for (bool s : {false, true})
      for (bool m : {false, true}) out[i++] = Relabeling{p, s, m};
  return out;
}

Literal apply(Relabeling g, Literal l) {
  return g.flips(l.term) ? l.complement() : l;
}

StatementNF apply(Relabeling g, const StatementNF& nf) {
  return StatementNF::make(nf.kind, apply(g, nf.first), apply(g, nf.second));
}

SurfaceStatement apply(Relabeling g, const SurfaceStatement& s) {
  return SurfaceStatement{s.form, apply(g, s.subject), apply(g, s.predicate)};
}

Cell apply(Relabeling g, Cell c) {
  for (int t : {kTermS, kTermP, kTermM})
    if (g.flips(t)) c ^= Cell{1} << t;
  return c;
}

Conclusion apply(Relabeling g, const Conclusion& c) {
  Conclusion out = c;
  if (out.subject) out.subject = apply(g, *out.subject);
  out.cell = apply(g, out.cell);
  if (out.ei_condition) out.ei_condition = apply(g, *out.ei_condition);
  if (out.middle_dropped) out.middle_dropped = apply(g, *out.middle_dropped);
  return out;
}

PCP apply(Relabeling g, const PCP& pcp) {
  return PCP::make(apply(g, pcp.p_premise), apply(g, pcp.s_premise));
}

namespace {

Literal swap_sp(Literal l) {
  if (l.term == kTermS) return {kTermP, l.pol};
  if (l.term == kTermP) return {kTermS, l.pol};
  return l;
}

StatementNF swap_sp(const StatementNF& nf) {
  return StatementNF::make(nf.kind, swap_sp(nf.first), swap_sp(nf.second));
}

}  // namespace

PCP metathesis(const PCP& pcp) {
  return PCP::make(swap_sp(pcp.s_premise), swap_sp(pcp.p_premise));
}

CanonicalForm canonicalize(const PCP& pcp, bool metathesis_to_darii) {
  const PcpType type = classify(pcp);
  if (!entails_lc(type))
    throw std::domain_error("only LC-entailing PCPs have a canonical form");

  PCP input = pcp;
  bool used_metathesis = false;
  const char* name = nullptr;
  const char* code = nullptr;
  switch (type) {
    case PcpType::T1: name = "Barbara"; code = "AE'"; break;
    case PcpType::T2: name = "Darapti"; code = "AA"; break;
    case PcpType::T3a: name = "Darii"; code = "AI"; break;
    case PcpType::T3b:
      if (metathesis_to_darii) {
        input = metathesis(pcp);
        used_metathesis = true;
        name = "Darii";
        code = "AI";
      } else {
        name = "Disamis";
        code = "IA";
      }
      break;
    default: break;
  }
  const PCP representative = pcp_from_code(code);
  for (Relabeling g : all_relabelings())
    if (apply(g, input) == representative)
      return CanonicalForm{representative, name, g, used_metathesis};
  throw std::logic_error("no relabeling reaches the type representative");
}

}  // namespace categorica
