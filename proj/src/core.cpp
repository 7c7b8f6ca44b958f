#include "categorica/core.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace categorica {

StatementNF StatementNF::make(NfKind kind, Literal a, Literal b) {
  if (a.term == b.term)
    throw std::invalid_argument("statement over a single term is malformed");
  if (b < a) std::swap(a, b);
  return StatementNF{kind, a, b};
}

Literal StatementNF::literal_of(int term) const {
  if (first.term == term) return first;
  if (second.term == term) return second;
  throw std::invalid_argument("term does not occur in statement");
}

Literal StatementNF::other_than(int term) const {
  if (first.term == term) return second;
  if (second.term == term) return first;
  throw std::invalid_argument("term does not occur in statement");
}

ProductStatement ProductStatement::make(NfKind kind, std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i)
    if (lits[i].term == lits[i - 1].term)
      throw std::invalid_argument("product mentions a term twice");
  return ProductStatement{kind, std::move(lits)};
}

ProductStatement ProductStatement::from(const StatementNF& nf) {
  return ProductStatement{nf.kind, {nf.first, nf.second}};
}

Universe::Universe(std::vector<std::string> terms) : names_(std::move(terms)) {
  if (names_.empty() || names_.size() > 16)
    throw std::invalid_argument("universe needs between 1 and 16 terms");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty term name");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        throw std::invalid_argument("duplicate term name: " + names_[i]);
  }
}

int Universe::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw std::invalid_argument("unknown term: " + std::string(name));
}

std::optional<int> Universe::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Universe::cell_in(Cell c, Literal l) const {
  bool positive_half = (c >> l.term) & 1u;
  return positive_half == l.positive();
}

std::string Universe::cell_name(Cell c) const {
  std::string out;
  for (int t = 0; t < term_count(); ++t) {
    out += names_[t];
    if (!((c >> t) & 1u)) out += '\'';
  }
  return out;
}

std::string Universe::literal_name(Literal l) const {
  std::string out = name(l.term);
  if (!l.positive()) out += '\'';
  return out;
}

Universe syllogistic_universe() { return Universe({"S", "P", "M"}); }

Region::Region(int term_count) : term_count_(term_count) {
  if (term_count < 0 || term_count > 16)
    throw std::invalid_argument("region supports at most 16 terms");
  words_.assign((cell_count() + 63) / 64, 0);
}

Region Region::full(int term_count) {
  Region r(term_count);
  std::size_t n = r.cell_count();
  for (std::size_t i = 0; i < n; ++i) r.words_[i / 64] |= std::uint64_t{1} << (i % 64);
  return r;
}

void Region::set(Cell c) { words_.at(c / 64) |= std::uint64_t{1} << (c % 64); }
void Region::reset(Cell c) { words_.at(c / 64) &= ~(std::uint64_t{1} << (c % 64)); }
bool Region::test(Cell c) const { return (words_.at(c / 64) >> (c % 64)) & 1u; }

Region& Region::operator|=(const Region& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}
Region& Region::operator&=(const Region& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}
Region& Region::operator-=(const Region& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}
Region Region::operator~() const { return full(term_count_) -= *this; }

std::size_t Region::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool Region::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

bool Region::subset_of(const Region& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Region::intersects(const Region& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::optional<Cell> Region::single_cell() const {
  if (count() != 1) return std::nullopt;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return static_cast<Cell>(i * 64 + std::countr_zero(words_[i]));
  return std::nullopt;
}

std::vector<Cell> Region::cells() const {
  std::vector<Cell> out;
  for (std::size_t c = 0; c < cell_count(); ++c)
    if (test(static_cast<Cell>(c))) out.push_back(static_cast<Cell>(c));
  return out;
}

StatementNF normalize(const SurfaceStatement& s) {
  Literal subj = s.subject;
  Literal pred = s.predicate;
  switch (s.form) {
    case Form::A: return StatementNF::make(NfKind::empty, subj, pred.complement());
    case Form::E: return StatementNF::make(NfKind::empty, subj, pred);
    case Form::I: return StatementNF::make(NfKind::nonempty, subj, pred);
    case Form::O: return StatementNF::make(NfKind::nonempty, subj, pred.complement());
  }
  throw std::logic_error("bad form");
}

std::vector<SurfaceStatement> surface_forms(const StatementNF& nf) {
  std::vector<SurfaceStatement> out;
  const int terms[2] = {nf.first.term, nf.second.term};
  const Form forms[4] = {Form::A, Form::E, Form::I, Form::O};
  for (int si = 0; si < 2; ++si)
    for (Polarity sp : {Polarity::positive, Polarity::complemented})
      for (Polarity pp : {Polarity::positive, Polarity::complemented})
        for (Form f : forms) {
          SurfaceStatement cand{f, {terms[si], sp}, {terms[1 - si], pp}};
          if (normalize(cand) == nf) out.push_back(cand);
        }
  return out;
}

SurfaceStatement preferred_surface(const StatementNF& nf) {
  bool universal = nf.kind == NfKind::empty;
  if (nf.first.pol != nf.second.pol) {
    Literal pos = nf.first.positive() ? nf.first : nf.second;
    Literal other = nf.first.positive() ? nf.second : nf.first;
    return {universal ? Form::A : Form::O, pos, other.complement()};
  }
  return {universal ? Form::E : Form::I, nf.first, nf.second};
}

Region region_of_literal(const Universe& u, Literal l) {
  if (l.term < 0 || l.term >= u.term_count())
    throw std::invalid_argument("literal term outside universe");
  Region r(u.term_count());
  for (std::size_t c = 0; c < u.cell_count(); ++c)
    if (u.cell_in(static_cast<Cell>(c), l)) r.set(static_cast<Cell>(c));
  return r;
}

Region region_of_product(const Universe& u, std::span<const Literal> lits) {
  Region r = Region::full(u.term_count());
  for (Literal l : lits) r &= region_of_literal(u, l);
  return r;
}

Region emptied_region(const Universe& u, std::span<const StatementNF> universals) {
  Region r(u.term_count());
  for (const auto& nf : universals) {
    if (nf.kind != NfKind::empty)
      throw std::invalid_argument("emptied_region requires EMPTY statements");
    const Literal lits[2] = {nf.first, nf.second};
    r |= region_of_product(u, lits);
  }
  return r;
}

Region emptied_region(const Universe& u, std::span<const ProductStatement> universals) {
  Region r(u.term_count());
  for (const auto& p : universals) {
    if (p.kind != NfKind::empty)
      throw std::invalid_argument("emptied_region requires EMPTY statements");
    r |= region_of_product(u, p.lits);
  }
  return r;
}

std::string to_string(const Universe& u, const StatementNF& nf) {
  std::string out = nf.kind == NfKind::empty ? "EMPTY{" : "NONEMPTY{";
  out += u.literal_name(nf.first);
  out += ',';
  out += u.literal_name(nf.second);
  out += '}';
  return out;
}

std::string to_string(const Universe& u, const SurfaceStatement& s) {
  static constexpr const char* kForm[] = {"A", "E", "I", "O"};
  std::string out = kForm[static_cast<int>(s.form)];
  out += '(';
  out += u.literal_name(s.subject);
  out += ',';
  out += u.literal_name(s.predicate);
  out += ')';
  return out;
}

std::string to_string(const Universe& u, const Conclusion& c) {
  std::string out;
  if (c.ei_condition) out += "if " + u.literal_name(*c.ei_condition) + " != 0: ";
  if (c.kind == Conclusion::Kind::universal_pinpoint)
    out += u.literal_name(*c.subject) + " = " + u.cell_name(c.cell);
  else
    out += u.cell_name(c.cell) + " != 0";
  return out;
}

}  // namespace categorica
