#include "zerodim/space.hpp"

#include <algorithm>

namespace zerodim {

std::string Ambient::str() const {
  switch (kind) {
    case Baire: return "baire";
    case Cantor: return "cantor";
    case Z0S2: return "z0s2";
    case Z0S3: return "z0s3";
  }
  return "?";
}

Ambient Ambient::parse(const std::string& s) {
  if (s == "baire") return baire();
  if (s == "cantor") return cantor();
  if (s == "z0s2") return z0(SectionTag::S2);
  if (s == "z0s3") return z0(SectionTag::S3);
  throw DomainError("unknown ambient: " + s);
}

std::optional<std::vector<Nat>> letters_at(const Ambient& amb, std::size_t i, const Limits& lim) {
  switch (amb.kind) {
    case Ambient::Baire: return std::nullopt;
    case Ambient::Cantor: return std::vector<Nat>{Nat(0), Nat(1)};
    case Ambient::Z0S2: return alphabet(SectionTag::S2, i, lim);
    case Ambient::Z0S3: return alphabet(SectionTag::S3, i, lim);
  }
  return std::nullopt;
}

bool letter_ok(const Ambient& amb, std::size_t i, const Nat& letter, const Limits& lim) {
  auto ls = letters_at(amb, i, lim);
  if (!ls) return true;
  return std::binary_search(ls->begin(), ls->end(), letter,
                            [](const Nat& a, const Nat& b) { return nat_cmp(a, b) < 0; });
}

bool word_in_ambient(const Ambient& amb, const Word& u, const Limits& lim) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!letter_ok(amb, i, u[i], lim)) return false;
  return true;
}

namespace {

void normalize_cells(std::vector<Word>& cells) {
  std::sort(cells.begin(), cells.end(), [](const Word& a, const Word& b) { return lex_cmp(a, b) < 0; });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

}  // namespace

ClopenSet whole_space(const Ambient& amb) { return ClopenSet{amb, 0, {Word{}}}; }

ClopenSet empty_set(const Ambient& amb, int depth) { return ClopenSet{amb, depth, {}}; }

ClopenSet cylinder(const Ambient& amb, const Word& prefix) {
  return ClopenSet{amb, static_cast<int>(prefix.size()), {prefix}};
}

ClopenSet make_clopen(const Ambient& amb, int depth, std::vector<Word> cells) {
  for (const Word& c : cells)
    if (static_cast<int>(c.size()) != depth) throw DomainError("clopen cell depth mismatch");
  normalize_cells(cells);
  return ClopenSet{amb, depth, std::move(cells)};
}

ClopenSet refine(const ClopenSet& a, int depth, const Limits& lim) {
  if (depth < a.depth) throw DomainError("refine: target depth is shallower");
  if (depth > lim.depth) throw ResourceError("refine: depth cap exceeded");
  if (depth == a.depth) return a;
  std::vector<Word> cells = a.cells;
  for (int d = a.depth; d < depth; ++d) {
    auto ls = letters_at(a.amb, static_cast<std::size_t>(d), lim);
    if (!ls) throw ResourceError("refine: ambient has unbounded branching");
    std::vector<Word> next;
    if (cells.size() * ls->size() > lim.cells) throw ResourceError("refine: cell cap exceeded");
    next.reserve(cells.size() * ls->size());
    for (const Word& c : cells)
      for (const Nat& l : *ls) {
        Word w = c;
        w.push_back(l);
        next.push_back(std::move(w));
      }
    cells = std::move(next);
  }
  // Extension by sorted letters preserves lex order.
  return ClopenSet{a.amb, depth, std::move(cells)};
}

namespace {

void check_same_ambient(const ClopenSet& a, const ClopenSet& b) {
  if (a.amb != b.amb) throw DomainError("clopen sets from different ambients");
}

}  // namespace

ClopenSet meet(const ClopenSet& a, const ClopenSet& b, const Limits& lim) {
  check_same_ambient(a, b);
  const ClopenSet& sh = a.depth <= b.depth ? a : b;
  const ClopenSet& dp = a.depth <= b.depth ? b : a;
  std::vector<Word> cells;
  for (const Word& c : dp.cells) {
    Word p = prefix(c, static_cast<std::size_t>(sh.depth));
    if (std::binary_search(sh.cells.begin(), sh.cells.end(), p,
                           [](const Word& x, const Word& y) { return lex_cmp(x, y) < 0; }))
      cells.push_back(c);
  }
  if (cells.size() > lim.cells) throw ResourceError("meet: cell cap exceeded");
  return ClopenSet{a.amb, dp.depth, std::move(cells)};
}

ClopenSet join(const ClopenSet& a, const ClopenSet& b, const Limits& lim) {
  check_same_ambient(a, b);
  int d = std::max(a.depth, b.depth);
  ClopenSet ra = refine(a, d, lim);
  ClopenSet rb = refine(b, d, lim);
  std::vector<Word> cells = ra.cells;
  cells.insert(cells.end(), rb.cells.begin(), rb.cells.end());
  normalize_cells(cells);
  if (cells.size() > lim.cells) throw ResourceError("join: cell cap exceeded");
  return ClopenSet{a.amb, d, std::move(cells)};
}

bool subset(const ClopenSet& a, const ClopenSet& b, const Limits& lim) {
  check_same_ambient(a, b);
  if (a.empty()) return true;
  if (a.depth >= b.depth) {
    for (const Word& c : a.cells) {
      Word p = prefix(c, static_cast<std::size_t>(b.depth));
      if (!std::binary_search(b.cells.begin(), b.cells.end(), p,
                              [](const Word& x, const Word& y) { return lex_cmp(x, y) < 0; }))
        return false;
    }
    return true;
  }
  ClopenSet ra = refine(a, b.depth, lim);
  return subset(ra, b, lim);
}

bool same_set(const ClopenSet& a, const ClopenSet& b, const Limits& lim) {
  return subset(a, b, lim) && subset(b, a, lim);
}

bool nonempty_meet(const ClopenSet& a, const ClopenSet& b, const Limits& lim) {
  check_same_ambient(a, b);
  const ClopenSet& sh = a.depth <= b.depth ? a : b;
  const ClopenSet& dp = a.depth <= b.depth ? b : a;
  (void)lim;
  for (const Word& c : dp.cells) {
    Word p = prefix(c, static_cast<std::size_t>(sh.depth));
    if (std::binary_search(sh.cells.begin(), sh.cells.end(), p,
                           [](const Word& x, const Word& y) { return lex_cmp(x, y) < 0; }))
      return true;
  }
  return false;
}

ClopenSet complement(const ClopenSet& a, const Limits& lim) {
  if (!a.amb.enumerable())
    throw DomainError("complement is not materializable in the Baire ambient");
  ClopenSet all = refine(whole_space(a.amb), a.depth, lim);
  std::vector<Word> cells;
  std::set_difference(all.cells.begin(), all.cells.end(), a.cells.begin(), a.cells.end(),
                      std::back_inserter(cells),
                      [](const Word& x, const Word& y) { return lex_cmp(x, y) < 0; });
  return ClopenSet{a.amb, a.depth, std::move(cells)};
}

int diameter_exp(const ClopenSet& a) {
  if (a.empty()) throw DomainError("diameter of the empty set");
  const Word& first = a.cells.front();
  std::size_t common = first.size();
  for (const Word& c : a.cells) {
    std::size_t k = 0;
    while (k < common && c[k] == first[k]) ++k;
    common = k;
  }
  return static_cast<int>(common);
}

Word PointRep::prefix_word(std::size_t len) const {
  Word out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) out.push_back(at(i));
  return out;
}

bool PointRep::operator==(const PointRep& o) const {
  std::size_t n = std::max(head.size(), o.head.size());
  for (std::size_t i = 0; i < n; ++i)
    if (at(i) != o.at(i)) return false;
  return tail == o.tail;
}

std::string PointRep::str() const { return word_str(head) + "." + tail.str() + "^w"; }

bool point_in(const PointRep& x, const ClopenSet& a) {
  Word p = x.prefix_word(static_cast<std::size_t>(a.depth));
  for (const Word& c : a.cells)
    if (c == p) return true;
  return false;
}

bool point_in_ambient(const PointRep& x, const Ambient& amb, const Limits& lim) {
  if (!word_in_ambient(amb, x.head, lim)) return false;
  switch (amb.kind) {
    case Ambient::Baire: return true;
    case Ambient::Cantor: return x.tail == Nat(0) || x.tail == Nat(1);
    case Ambient::Z0S2:
    case Ambient::Z0S3: return x.tail == Nat(1);
  }
  return true;
}

std::string ClopenSet::str() const {
  std::string out = "{" + amb.str() + " d" + std::to_string(depth) + ":";
  for (std::size_t i = 0; i < cells.size() && i < 8; ++i) out += " " + word_str(cells[i]);
  if (cells.size() > 8) out += " ... [" + std::to_string(cells.size()) + " cells]";
  out += "}";
  return out;
}

}  // namespace zerodim
