#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace categorica {

enum class Polarity : std::uint8_t { positive, complemented };

constexpr Polarity flipped(Polarity p) {
  return p == Polarity::positive ? Polarity::complemented : Polarity::positive;
}

// A term (by index into a Universe) together with a polarity.
struct Literal {
  int term = 0;
  Polarity pol = Polarity::positive;

  Literal complement() const { return {term, flipped(pol)}; }
  bool positive() const { return pol == Polarity::positive; }

  // positive sorts before complemented within a term
  auto operator<=>(const Literal&) const = default;
};

enum class Form : std::uint8_t { A, E, I, O };

constexpr bool is_universal(Form f) { return f == Form::A || f == Form::E; }
constexpr bool is_particular(Form f) { return f == Form::I || f == Form::O; }

struct SurfaceStatement {
  Form form = Form::A;
  Literal subject;
  Literal predicate;

  auto operator<=>(const SurfaceStatement&) const = default;
};

enum class NfKind : std::uint8_t { empty, nonempty };

// Normal form of a categorical statement: "the intersection of two literals
// is empty / is nonempty".  The literal pair is stored canonically ordered
// (term index, then positive before complemented) so structural equality is
// logical equality.
struct StatementNF {
  NfKind kind = NfKind::empty;
  Literal first;
  Literal second;

  static StatementNF make(NfKind kind, Literal a, Literal b);

  bool universal() const { return kind == NfKind::empty; }
  bool mentions(int term) const { return first.term == term || second.term == term; }
  // the literal of `term`; throws if absent
  Literal literal_of(int term) const;
  // the literal whose term is not `term`; throws if absent
  Literal other_than(int term) const;

  auto operator<=>(const StatementNF&) const = default;
};

// k-literal generalization used by sorites premises and ESC constraints.
struct ProductStatement {
  NfKind kind = NfKind::empty;
  std::vector<Literal> lits;  // canonically sorted, distinct terms

  static ProductStatement make(NfKind kind, std::vector<Literal> lits);
  static ProductStatement from(const StatementNF& nf);

  bool universal() const { return kind == NfKind::empty; }

  auto operator<=>(const ProductStatement&) const = default;
};

using Cell = std::uint32_t;

class Universe {
 public:
  explicit Universe(std::vector<std::string> terms);

  int term_count() const { return static_cast<int>(names_.size()); }
  std::size_t cell_count() const { return std::size_t{1} << names_.size(); }
  const std::string& name(int term) const { return names_.at(term); }
  int index_of(std::string_view name) const;          // throws on unknown term
  std::optional<int> find(std::string_view name) const;

  // cell bit i is 1 iff the cell lies in the positive half of term i
  bool cell_in(Cell c, Literal l) const;
  std::string cell_name(Cell c) const;                // e.g. "SP'M"
  std::string literal_name(Literal l) const;          // e.g. "P'"

 private:
  std::vector<std::string> names_;
};

// The canonical three-term universe of the syllogistic: S=0, P=1, M=2.
Universe syllogistic_universe();
inline constexpr int kTermS = 0;
inline constexpr int kTermP = 1;
inline constexpr int kTermM = 2;

// A set of cells of a universe's 2^n-cell partition, as a bit vector.
class Region {
 public:
  Region() = default;
  explicit Region(int term_count);
  static Region full(int term_count);

  int term_count() const { return term_count_; }
  std::size_t cell_count() const { return std::size_t{1} << term_count_; }

  void set(Cell c);
  void reset(Cell c);
  bool test(Cell c) const;

  Region& operator|=(const Region& o);
  Region& operator&=(const Region& o);
  Region& operator-=(const Region& o);  // set difference
  Region operator~() const;
  friend Region operator|(Region a, const Region& b) { return a |= b; }
  friend Region operator&(Region a, const Region& b) { return a &= b; }
  friend Region operator-(Region a, const Region& b) { return a -= b; }

  bool operator==(const Region& o) const = default;

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  bool subset_of(const Region& o) const;
  bool intersects(const Region& o) const;
  std::optional<Cell> single_cell() const;
  std::vector<Cell> cells() const;

 private:
  int term_count_ = 0;
  std::vector<std::uint64_t> words_;
};

// --- statement normalization ---------------------------------------------

// A(X,Y) -> EMPTY{X,Y'}; E(X,Y) -> EMPTY{X,Y}; I(X,Y) -> NONEMPTY{X,Y};
// O(X,Y) -> NONEMPTY{X,Y'}.  Same-term statements are rejected.
StatementNF normalize(const SurfaceStatement& s);

// All distinct A/E/I/O readings of a normal form; normalize of each is `nf`.
std::vector<SurfaceStatement> surface_forms(const StatementNF& nf);

// The paper-style rendering of a normal form: mixed-polarity pairs as A/O
// with the positive literal as subject, same-polarity pairs as E/I.
SurfaceStatement preferred_surface(const StatementNF& nf);

// --- region algebra -------------------------------------------------------

Region region_of_literal(const Universe& u, Literal l);
Region region_of_product(const Universe& u, std::span<const Literal> lits);
// Union of the product regions of the EMPTY statements; rejects NONEMPTY.
Region emptied_region(const Universe& u, std::span<const StatementNF> universals);
Region emptied_region(const Universe& u, std::span<const ProductStatement> universals);

// --- conclusions ----------------------------------------------------------

// A "one subset" conclusion: either "subject = cell" (the subject literal's
// other cells are all empty) or "cell != 0"; existential conclusions may be
// conditioned on a literal being nonempty (existential import).
struct Conclusion {
  enum class Kind : std::uint8_t { universal_pinpoint, existential_pinpoint };

  Kind kind = Kind::existential_pinpoint;
  std::optional<Literal> subject;  // universal pinpoints only
  Cell cell = 0;
  std::optional<Literal> ei_condition;
  std::optional<SurfaceStatement> middle_dropped;

  bool ei() const { return ei_condition.has_value(); }

  auto operator<=>(const Conclusion&) const = default;
};

std::string to_string(const Universe& u, const StatementNF& nf);      // "EMPTY{M,P'}" style
std::string to_string(const Universe& u, const SurfaceStatement& s);  // "A(M,P)"
std::string to_string(const Universe& u, const Conclusion& c);        // "S = SPM" / "SPM != 0"

}  // namespace categorica
