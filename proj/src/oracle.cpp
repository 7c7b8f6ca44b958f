#include "categorica/oracle.hpp"

#include <algorithm>

namespace categorica::oracle {

namespace {

bool pinpoint_holds(const Universe& u, const Model& m, const Conclusion& c) {
  if (c.kind == Conclusion::Kind::universal_pinpoint) {
    Region rest = region_of_literal(u, *c.subject);
    rest.reset(c.cell);
    return !rest.intersects(m.nonempty);
  }
  return m.nonempty.test(c.cell);
}

Model model_from_mask(const Universe& u, std::uint64_t mask) {
  Model m{Region(u.term_count())};
  for (std::size_t cell = 0; cell < u.cell_count(); ++cell)
    if ((mask >> cell) & 1u) m.nonempty.set(static_cast<Cell>(cell));
  return m;
}

bool model_ok(const Universe& u, const Model& m,
              std::span<const ProductStatement> premises,
              std::span<const Literal> assumptions) {
  for (const auto& p : premises)
    if (!satisfies(u, m, p)) return false;
  for (Literal l : assumptions)
    if (!region_of_literal(u, l).intersects(m.nonempty)) return false;
  return true;
}

// Split into the emptied region and the NONEMPTY witness regions
// (assumptions included as single-literal witnesses).
struct RegionView {
  Region emptied;
  std::vector<Region> witnesses;
  std::vector<int> witness_premise;  // premise index, -1 for assumptions
};

RegionView region_view(const Universe& u,
                       std::span<const ProductStatement> premises,
                       std::span<const Literal> assumptions) {
  RegionView v{Region(u.term_count()), {}, {}};
  for (std::size_t i = 0; i < premises.size(); ++i) {
    Region r = region_of_product(u, premises[i].lits);
    if (premises[i].universal()) {
      v.emptied |= r;
    } else {
      v.witnesses.push_back(r);
      v.witness_premise.push_back(static_cast<int>(i));
    }
  }
  for (Literal l : assumptions) {
    v.witnesses.push_back(region_of_literal(u, l));
    v.witness_premise.push_back(-1);
  }
  return v;
}

// A model satisfying all constraints, each witness avoiding `avoid` when it
// can; absent if the constraints are inconsistent.
std::optional<Model> witness_model(const Universe& u, const RegionView& v,
                                   const Region& avoid) {
  Model m{Region(u.term_count())};
  for (const Region& w : v.witnesses) {
    Region free = w - v.emptied;
    if (free.none()) return std::nullopt;
    Region preferred = free - avoid;
    const Region& pick = preferred.any() ? preferred : free;
    m.nonempty.set(pick.cells().front());
  }
  return m;
}

EntailmentVerdict entails_regionwise(const Universe& u, const RegionView& v,
                                     NfKind kind, const Region& target) {
  for (const Region& w : v.witnesses)
    if ((w - v.emptied).none()) return {true, std::nullopt};  // inconsistent
  if (kind == NfKind::empty) {
    if (target.subset_of(v.emptied)) return {true, std::nullopt};
    Model cm = *witness_model(u, v, Region(u.term_count()));
    cm.nonempty.set((target - v.emptied).cells().front());
    return {false, cm};
  }
  for (const Region& w : v.witnesses)
    if ((w - v.emptied).subset_of(target)) return {true, std::nullopt};
  return {false, witness_model(u, v, target)};
}

EntailmentVerdict entails_impl(const Universe& u,
                               std::span<const ProductStatement> premises,
                               std::span<const Literal> assumptions,
                               NfKind kind, const Region& target) {
  if (u.term_count() <= kExhaustiveCap) {
    std::uint64_t n_models = std::uint64_t{1} << u.cell_count();
    for (std::uint64_t mask = 0; mask < n_models; ++mask) {
      Model m = model_from_mask(u, mask);
      if (!model_ok(u, m, premises, assumptions)) continue;
      bool ok = kind == NfKind::empty ? !target.intersects(m.nonempty)
                                      : target.intersects(m.nonempty);
      if (!ok) return {false, m};
    }
    return {true, std::nullopt};
  }
  return entails_regionwise(u, region_view(u, premises, assumptions), kind,
                            target);
}

Region universal_pinpoint_rest(const Universe& u, const Conclusion& c) {
  Region rest = region_of_literal(u, *c.subject);
  rest.reset(c.cell);
  return rest;
}

}  // namespace

bool satisfies(const Universe& u, const Model& m, const ProductStatement& st) {
  bool hit = region_of_product(u, st.lits).intersects(m.nonempty);
  return st.universal() ? !hit : hit;
}

bool satisfies(const Universe& u, const Model& m, const StatementNF& st) {
  return satisfies(u, m, ProductStatement::from(st));
}

bool satisfies(const Universe& u, const Model& m, const Conclusion& c) {
  if (c.ei_condition &&
      !region_of_literal(u, *c.ei_condition).intersects(m.nonempty))
    return true;
  return pinpoint_holds(u, m, c);
}

EntailmentVerdict entails(const Universe& u,
                          std::span<const ProductStatement> premises,
                          std::span<const Literal> assumptions,
                          const ProductStatement& conclusion) {
  return entails_impl(u, premises, assumptions, conclusion.kind,
                      region_of_product(u, conclusion.lits));
}

EntailmentVerdict entails(const Universe& u,
                          std::span<const ProductStatement> premises,
                          std::span<const Literal> assumptions,
                          const Conclusion& conclusion) {
  std::vector<Literal> assume(assumptions.begin(), assumptions.end());
  if (conclusion.ei_condition) assume.push_back(*conclusion.ei_condition);
  if (conclusion.kind == Conclusion::Kind::universal_pinpoint)
    return entails_impl(u, premises, assume, NfKind::empty,
                        universal_pinpoint_rest(u, conclusion));
  Region target(u.term_count());
  target.set(conclusion.cell);
  return entails_impl(u, premises, assume, NfKind::nonempty, target);
}

EntailmentVerdict entails(const Universe& u,
                          std::span<const StatementNF> premises,
                          std::span<const Literal> assumptions,
                          const StatementNF& conclusion) {
  return entails(u, as_products(premises), assumptions,
                 ProductStatement::from(conclusion));
}

EntailmentVerdict entails(const Universe& u,
                          std::span<const StatementNF> premises,
                          std::span<const Literal> assumptions,
                          const Conclusion& conclusion) {
  auto products = as_products(premises);
  return entails(u, std::span<const ProductStatement>(products), assumptions,
                 conclusion);
}

std::optional<Model> satisfiable(const Universe& u,
                                 std::span<const ProductStatement> premises,
                                 std::span<const Literal> assumptions) {
  if (u.term_count() <= kExhaustiveCap) {
    std::uint64_t n_models = std::uint64_t{1} << u.cell_count();
    for (std::uint64_t mask = 0; mask < n_models; ++mask) {
      Model m = model_from_mask(u, mask);
      if (model_ok(u, m, premises, assumptions)) return m;
    }
    return std::nullopt;
  }
  return witness_model(u, region_view(u, premises, assumptions),
                       Region(u.term_count()));
}

std::optional<Model> satisfiable(const Universe& u,
                                 std::span<const StatementNF> premises,
                                 std::span<const Literal> assumptions) {
  auto products = as_products(premises);
  return satisfiable(u, std::span<const ProductStatement>(products),
                     assumptions);
}

PinpointResult pinpoint_search(const Universe& u,
                               std::span<const ProductStatement> premises) {
  PinpointResult out;
  Region emptied(u.term_count());
  for (const auto& p : premises)
    if (p.universal()) emptied |= region_of_product(u, p.lits);
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (premises[i].universal()) continue;
    if ((region_of_product(u, premises[i].lits) - emptied).none()) {
      out.consistent = false;
      out.offending_premise = static_cast<int>(i);
      return out;
    }
  }
  for (int t = 0; t < u.term_count(); ++t)
    for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
      Literal l{t, pol};
      Region rest = region_of_literal(u, l) - emptied;
      if (auto cell = rest.single_cell()) {
        Conclusion up;
        up.kind = Conclusion::Kind::universal_pinpoint;
        up.subject = l;
        up.cell = *cell;
        out.conclusions.push_back(up);
        Conclusion ei;
        ei.kind = Conclusion::Kind::existential_pinpoint;
        ei.cell = *cell;
        ei.ei_condition = l;
        out.conclusions.push_back(ei);
      }
    }
  std::vector<Cell> seen;
  for (const auto& p : premises) {
    if (p.universal()) continue;
    Region rest = region_of_product(u, p.lits) - emptied;
    if (auto cell = rest.single_cell()) {
      if (std::find(seen.begin(), seen.end(), *cell) != seen.end()) continue;
      seen.push_back(*cell);
      Conclusion ep;
      ep.kind = Conclusion::Kind::existential_pinpoint;
      ep.cell = *cell;
      out.conclusions.push_back(ep);
    }
  }
  return out;
}

PinpointResult pinpoint_search(const Universe& u,
                               std::span<const StatementNF> premises) {
  auto products = as_products(premises);
  return pinpoint_search(u, std::span<const ProductStatement>(products));
}

std::vector<ProductStatement> as_products(
    std::span<const StatementNF> premises) {
  std::vector<ProductStatement> out;
  out.reserve(premises.size());
  for (const auto& p : premises) out.push_back(ProductStatement::from(p));
  return out;
}

}  // namespace categorica::oracle
