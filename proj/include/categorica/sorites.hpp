#pragma once

#include <optional>
#include <span>
#include <vector>

#include "categorica/core.hpp"
#include "categorica/oracle.hpp"

namespace categorica {

// Premise list over an n-term universe; premises may be k-literal products
// (Carroll's equations) as well as ordinary two-literal statements.
struct Sorite {
  Universe universe;
  std::vector<ProductStatement> premises;
};

// All one-subset conclusions, by complete region search.
oracle::PinpointResult solve(const Sorite& s);

struct SubstitutionTrace {
  struct Step {
    int premise_index = 0;          // which EMPTY premise licensed the step
    std::vector<Literal> product;   // literal set after the step
  };
  std::vector<Literal> start;
  std::vector<Step> steps;
  std::vector<Literal> final_product;
  std::optional<Cell> cell;  // set iff the final product is a single cell
  bool success = false;      // false leaves final_product as the stuck product
};

// Jevons-style decomposition: repeatedly pick the first unused EMPTY premise
// all but one of whose literals already factor the current product, the
// leftover literal's term being absent, and append that literal's
// complement.  Succeeds iff the final product covers every term.
SubstitutionTrace substitution_trace(const Sorite& s,
                                     std::vector<Literal> start);
SubstitutionTrace substitution_trace(const Sorite& s, Literal start);

// Literals whose term occurs in the premises at a single polarity.
std::vector<Literal> retinends(const Sorite& s);

struct EliminationResult {
  std::vector<Literal> retinends;
  // minimal literal products whose region the premises empty; each one is a
  // universal conclusion "product = 0"
  std::vector<std::vector<Literal>> empty_products;
};

// Carroll-style elimination: mine the emptied region for minimal empty
// products over the retinend literals (or over all literals when
// `retinends_only` is false).  Requires all-EMPTY premises.
EliminationResult eliminated_lc(const Sorite& s, bool retinends_only = true);

// True iff the premises force the product empty; sound and complete for
// universal conclusions from universal premises.
bool verify_universal(const Sorite& s, std::span<const Literal> product);

}  // namespace categorica
