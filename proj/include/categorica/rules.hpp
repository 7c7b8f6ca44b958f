#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "categorica/core.hpp"
#include "categorica/oracle.hpp"
#include "categorica/pcp.hpp"

namespace categorica::rules {

enum class Distribution : std::uint8_t { distributed, undistributed };

// Expanded distribution: in EMPTY{X,Y} the stored literals are distributed
// and their complements are not; in NONEMPTY{X,Y} the reverse.  Throws if
// the literal's term does not occur in the statement.
Distribution distribution(const StatementNF& st, Literal l);
Distribution distribution(const SurfaceStatement& st, Literal l);

// Statement parity: 0 affirmative, 1 negative.  A complemented literal
// contributes 1; EMPTY kind contributes 1 more.
int signature(const StatementNF& st);
int signature(const SurfaceStatement& st);

// Shape of the middle-dropped conclusion the four argument rules predict:
// quantity from the premise quantities (two universals give a universal,
// particular only under an ei condition), quality from signature parity,
// end-term polarities from distribution conservation.
struct RofvcaPrediction {
  bool particular = false;
  std::optional<Literal> ei_condition;      // the middle, when quantity is ei
  std::vector<StatementNF> candidates;      // shape-satisfying S/P statements
  std::optional<StatementNF> statement;     // set iff exactly one candidate
  bool ambiguous = false;                   // more than one candidate
};

// Throws std::domain_error for type 4/5 input.
RofvcaPrediction rofvca_predict(const PCP& pcp);

enum class RuleVerdict : std::uint8_t { pass, fail, not_applicable };

struct RuleResult {
  RuleVerdict verdict = RuleVerdict::not_applicable;
  std::string reason;
};

struct RuleAudit {
  RuleResult conservation;   // end-term distribution is conserved
  RuleResult universality;   // two universals give a universal (ei aside)
  RuleResult particularity;  // a particular premise gives a particular
  RuleResult parity;         // conclusion signature = sum of premise signatures
};

// Audits a derived conclusion of `pcp` against the four rules.  The
// conclusion must structurally match one of derive(pcp)'s conclusions up to
// its middle-dropped reading, which is what gets audited; anything else
// throws std::invalid_argument.
RuleAudit rofvca_check(const PCP& pcp, const Conclusion& c);

// The syllogism-rule screening of the 36 positively formulable PCPs down to
// the 15 candidates and the 12-member domain of applicability plus the 3
// ei-only moods the classical rules cannot reach.
struct DofaReport {
  struct Rejection {
    PCP pcp;
    std::string rule;
    std::string reason;
  };
  std::vector<PCP> positive;      // the 36
  std::vector<Rejection> rejected;
  std::vector<PCP> candidates;    // the 15 survivors
  std::vector<PCP> dofa_members;  // the 12
  std::vector<PCP> ei_only;       // the 3 the rules cannot handle
  std::string note;
};

DofaReport rofvs_dofa();

struct EscConstraint {
  Literal empty;  // this literal denotes the empty set
};

struct EscReport {
  struct Item {
    Conclusion conclusion;
    bool compatible = false;
  };
  bool premises_compatible = true;
  std::vector<Item> items;
};

// A conclusion is compatible with the constraint set iff the premises, its
// ei condition, and the constraints are jointly satisfiable.
EscReport esc_compatible(const PCP& pcp, std::span<const Conclusion> conclusions,
                         std::span<const EscConstraint> esc);

struct JointConsequence {
  enum class Kind : std::uint8_t { none, empty_literal, equal_literals };
  Kind kind = Kind::none;
  std::optional<Literal> lhs;  // the emptied literal, or the lower-term side
  std::optional<Literal> rhs;  // equal_literals only
};

// The structural consequence of two universal statements over the same term
// pair: a literal forced empty, a forced literal equality, or none.
// Throws std::invalid_argument unless both are EMPTY over the same pair.
JointConsequence joint_universal_consequence(const Universe& u,
                                             const StatementNF& u1,
                                             const StatementNF& u2);

struct CoexistenceReport {
  bool satisfiable = true;
  std::vector<Literal> forced_empty;
  std::vector<std::pair<Literal, Literal>> forced_equal;

  bool forced() const { return !forced_empty.empty() || !forced_equal.empty(); }
};

// Structure forced on the universe when all premises hold at once: every
// literal forced empty and every forced equality between literals of
// distinct terms (equalities between forced-empty literals are omitted).
// Exhaustive over all models; requires term_count <= oracle::kExhaustiveCap.
CoexistenceReport coexistence(const Universe& u,
                              std::span<const StatementNF> premises);
CoexistenceReport coexistence(const PCP& a, const PCP& b);

}  // namespace categorica::rules
