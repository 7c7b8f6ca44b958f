#pragma once

#include <optional>
#include <span>
#include <vector>

#include "categorica/core.hpp"

namespace categorica::oracle {

// Assignment of empty/nonempty to every cell of the universe.
struct Model {
  Region nonempty;
};

bool satisfies(const Universe& u, const Model& m, const ProductStatement& st);
bool satisfies(const Universe& u, const Model& m, const StatementNF& st);
// ei conditions are read as implications: vacuously true when the condition
// literal is empty in the model.
bool satisfies(const Universe& u, const Model& m, const Conclusion& c);

struct EntailmentVerdict {
  bool holds = false;
  std::optional<Model> countermodel;
};

// Universes up to this many terms are checked by enumerating all 2^(2^n)
// models; larger ones by region algebra (exact for these premise forms:
// each premise constrains cells independently).
inline constexpr int kExhaustiveCap = 4;

EntailmentVerdict entails(const Universe& u,
                          std::span<const ProductStatement> premises,
                          std::span<const Literal> assumptions,
                          const ProductStatement& conclusion);
EntailmentVerdict entails(const Universe& u,
                          std::span<const ProductStatement> premises,
                          std::span<const Literal> assumptions,
                          const Conclusion& conclusion);
EntailmentVerdict entails(const Universe& u,
                          std::span<const StatementNF> premises,
                          std::span<const Literal> assumptions,
                          const StatementNF& conclusion);
EntailmentVerdict entails(const Universe& u,
                          std::span<const StatementNF> premises,
                          std::span<const Literal> assumptions,
                          const Conclusion& conclusion);

std::optional<Model> satisfiable(const Universe& u,
                                 std::span<const ProductStatement> premises,
                                 std::span<const Literal> assumptions);
std::optional<Model> satisfiable(const Universe& u,
                                 std::span<const StatementNF> premises,
                                 std::span<const Literal> assumptions);

struct PinpointResult {
  std::vector<Conclusion> conclusions;
  bool consistent = true;
  std::optional<int> offending_premise;  // NONEMPTY premise fully emptied
};

// Complete one-subset conclusion search by region algebra: every literal
// whose region minus the emptied region is a single cell yields a universal
// pinpoint (with its ei variant); every NONEMPTY premise whose witness
// region minus the emptied region is a single cell yields an existential
// pinpoint.  Inconsistency is reported, and no conclusions are emitted from
// it.  The emitted conclusions carry no middle-dropped surface form.
PinpointResult pinpoint_search(const Universe& u,
                               std::span<const ProductStatement> premises);
PinpointResult pinpoint_search(const Universe& u,
                               std::span<const StatementNF> premises);

std::vector<ProductStatement> as_products(std::span<const StatementNF> premises);

}  // namespace categorica::oracle
