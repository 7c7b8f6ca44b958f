#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "categorica/core.hpp"

namespace categorica {

enum class PcpType : std::uint8_t { T1, T2, T3a, T3b, T4a, T4b, T5a, T5b };

std::string to_string(PcpType t);
bool entails_lc(PcpType t);  // true for T1, T2, T3a, T3b

// Ordered pair of categorical premises over the canonical S/P/M universe.
// The P premise mentions {P, M}, the S premise {S, M}; the middle term M is
// the shared one.
struct PCP {
  StatementNF p_premise;
  StatementNF s_premise;

  // validates the term layout; throws std::invalid_argument otherwise
  static PCP make(StatementNF p, StatementNF s);

  Literal p_middle() const { return p_premise.literal_of(kTermM); }
  Literal s_middle() const { return s_premise.literal_of(kTermM); }
  Literal p_end() const { return p_premise.other_than(kTermM); }
  Literal s_end() const { return s_premise.other_than(kTermM); }

  auto operator<=>(const PCP&) const = default;
};

PcpType classify(const PCP& pcp);

// Precise conclusions per the four derivation formulas.  Order: for T1 the
// S-side universal pinpoint, the P-side universal pinpoint, then the two ei
// existential pinpoints (S side, P side); T2 the universal pinpoint then its
// ei variant; T3a/T3b the single existential pinpoint; T4/T5 empty.
std::vector<Conclusion> derive(const PCP& pcp);

struct MoodName {
  std::string name;    // traditional slash-joined label, or "No name"
  std::string coined;  // playful non-traditional alias, empty if none
  bool has_lc = true;  // false means "no name (no LC)" (T4/T5)
};

// Name of the PCP's non-ei conclusion(s).
MoodName mood_name(const PCP& pcp);
// Name of the ei conclusion conditioned on `ei`; "No name" when unnamed.
// Throws std::invalid_argument if the PCP has no ei conclusion on `ei`.
std::string ei_mood_name(const PCP& pcp, Literal ei);

// Two-letter exchange codes, P letter first: A/E/I/O with an optional prime.
// A=EMPTY{M,x'}, E=EMPTY{M,x}, I=NONEMPTY{M,x}, O=NONEMPTY{M,x'}; a prime
// marks M' in place of M.
std::string pcp_code(const PCP& pcp);
PCP pcp_from_code(std::string_view code);  // throws on malformed code

// All 64 PCPs (8 P premises x 8 S premises) in code order, or the 36 whose
// premises both have an all-positive-terms surface form.
std::vector<PCP> enumerate_all(bool positive_only);
bool positive_formulable(const StatementNF& premise);

struct BoundGroup {
  int index = 0;  // 1..8
  Cell anchor = 0;
};

// The four-PCP group of the eight-set arrangement the PCP belongs to, and
// the cell the group is bound to (the one cell none of its PCPs acts on).
// Throws std::domain_error for T4/T5 input.
BoundGroup bound_subset_group(const PCP& pcp);

}  // namespace categorica
