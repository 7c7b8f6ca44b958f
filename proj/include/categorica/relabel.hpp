#pragma once

#include <array>
#include <string>
#include <string_view>

#include "categorica/pcp.hpp"

namespace categorica {

// Element of the eight-element commutative relabeling group G: a set of
// terms whose polarity is flipped everywhere.  Serialized as one of
// "e","p","s","m","ps","pm","sm","psm".
struct Relabeling {
  bool flip_p = false;
  bool flip_s = false;
  bool flip_m = false;

  static Relabeling identity() { return {}; }
  static Relabeling from_string(std::string_view text);  // throws on junk
  std::string to_string() const;

  bool flips(int term) const;
  bool is_identity() const { return !flip_p && !flip_s && !flip_m; }

  auto operator<=>(const Relabeling&) const = default;
};

// Composition = symmetric difference of flip sets; every element is its own
// inverse.
Relabeling compose(Relabeling g, Relabeling h);
std::array<Relabeling, 8> all_relabelings();

Literal apply(Relabeling g, Literal l);
StatementNF apply(Relabeling g, const StatementNF& nf);
SurfaceStatement apply(Relabeling g, const SurfaceStatement& s);
Cell apply(Relabeling g, Cell c);
Conclusion apply(Relabeling g, const Conclusion& c);
PCP apply(Relabeling g, const PCP& pcp);

// Premise swap plus the S/P relettering the listing convention forces.
PCP metathesis(const PCP& pcp);

struct CanonicalForm {
  PCP representative;               // Barbara, Darapti, Darii or Disamis
  std::string representative_name;  // "Barbara", "Darapti", "Darii", "Disamis"
  Relabeling relabeling;
  bool metathesis_applied = false;
};

// The unique g in G (plus, when `metathesis_to_darii` and the input is type
// 3b, a metathesis) taking the PCP to its type representative:
// T1 -> Barbara (AE'), T2 -> Darapti (AA), T3a -> Darii (AI),
// T3b -> Disamis (IA).  Throws std::domain_error on T4/T5 input.
CanonicalForm canonicalize(const PCP& pcp, bool metathesis_to_darii = false);

}  // namespace categorica
