#include "categorica/sorites.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace categorica {

namespace {

void require_universal(const Sorite& s, const char* what) {
  for (const auto& p : s.premises)
    if (!p.universal())
      throw std::invalid_argument(std::string(what) +
                                  " requires all-universal premises");
}

bool contains_literal(std::span<const Literal> product, Literal l) {
  return std::find(product.begin(), product.end(), l) != product.end();
}

bool contains_term(std::span<const Literal> product, int term) {
  for (Literal l : product)
    if (l.term == term) return true;
  return false;
}

Region emptied(const Sorite& s) {
  Region r(s.universe.term_count());
  for (const auto& p : s.premises)
    if (p.universal()) r |= region_of_product(s.universe, p.lits);
  return r;
}

}  // namespace

oracle::PinpointResult solve(const Sorite& s) {
  return oracle::pinpoint_search(s.universe, s.premises);
}

SubstitutionTrace substitution_trace(const Sorite& s,
                                     std::vector<Literal> start) {
  require_universal(s, "substitution_trace");
  SubstitutionTrace trace;
  trace.start = start;
  std::vector<Literal> product = std::move(start);
  std::vector<bool> used(s.premises.size(), false);
  for (;;) {
    bool applied = false;
    for (std::size_t i = 0; i < s.premises.size() && !applied; ++i) {
      if (used[i]) continue;
      const auto& lits = s.premises[i].lits;
      const Literal* leftover = nullptr;
      bool viable = true;
      for (const Literal& l : lits) {
        if (contains_literal(product, l)) continue;
        if (leftover || contains_term(product, l.term)) {
          viable = false;
          break;
        }
        leftover = &l;
      }
      if (!viable || !leftover) continue;
      product.push_back(leftover->complement());
      used[i] = true;
      trace.steps.push_back({static_cast<int>(i), product});
      applied = true;
    }
    if (!applied) break;
  }
  trace.final_product = product;
  if (static_cast<int>(product.size()) == s.universe.term_count()) {
    trace.success = true;
    Cell cell = 0;
    for (Literal l : product)
      if (l.positive()) cell |= Cell{1} << l.term;
    trace.cell = cell;
  }
  return trace;
}

SubstitutionTrace substitution_trace(const Sorite& s, Literal start) {
  return substitution_trace(s, std::vector<Literal>{start});
}

std::vector<Literal> retinends(const Sorite& s) {
  const int n = s.universe.term_count();
  std::vector<bool> pos(n, false), neg(n, false);
  for (const auto& p : s.premises)
    for (Literal l : p.lits) (l.positive() ? pos : neg)[l.term] = true;
  std::vector<Literal> out;
  for (int t = 0; t < n; ++t) {
    if (pos[t] && !neg[t]) out.push_back({t, Polarity::positive});
    if (neg[t] && !pos[t]) out.push_back({t, Polarity::complemented});
  }
  return out;
}

EliminationResult eliminated_lc(const Sorite& s, bool retinends_only) {
  require_universal(s, "eliminated_lc");
  EliminationResult result;
  result.retinends = retinends(s);
  const Region emp = emptied(s);

  std::vector<std::vector<Literal>> candidates;
  if (retinends_only) {
    const auto& pool = result.retinends;
    for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
      std::vector<Literal> lits;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if ((mask >> i) & 1u) lits.push_back(pool[i]);
      candidates.push_back(std::move(lits));
    }
  } else {
    const int n = s.universe.term_count();
    if (n > 10)
      throw std::invalid_argument(
          "unrestricted elimination is limited to 10 terms");
    // every term takes one of: absent, positive, complemented
    std::vector<Literal> lits;
    auto recurse = [&](auto&& self, int t) -> void {
      if (t == n) {
        if (!lits.empty()) candidates.push_back(lits);
        return;
      }
      self(self, t + 1);
      for (Polarity pol : {Polarity::positive, Polarity::complemented}) {
        lits.push_back({t, pol});
        self(self, t + 1);
        lits.pop_back();
      }
    };
    recurse(recurse, 0);
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (auto& cand : candidates) {
    if (!region_of_product(s.universe, cand).subset_of(emp)) continue;
    bool minimal = std::none_of(
        result.empty_products.begin(), result.empty_products.end(),
        [&](const auto& kept) {
          return std::all_of(kept.begin(), kept.end(), [&](Literal l) {
            return contains_literal(cand, l);
          });
        });
    if (minimal) result.empty_products.push_back(std::move(cand));
  }
  return result;
}

bool verify_universal(const Sorite& s, std::span<const Literal> product) {
  require_universal(s, "verify_universal");
  return region_of_product(s.universe, product).subset_of(emptied(s));
}

}  // namespace categorica
