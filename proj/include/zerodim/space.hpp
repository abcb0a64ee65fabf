#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerodim/coding.hpp"
#include "zerodim/common.hpp"
#include "zerodim/nat.hpp"

namespace zerodim {

// The four spaces cylinders live in. Baire has unbounded branching, so sets
// there cannot be refined or complemented; the other three branch finitely.
struct Ambient {
  enum Kind { Baire, Cantor, Z0S2, Z0S3 } kind = Baire;

  static Ambient baire() { return {Baire}; }
  static Ambient cantor() { return {Cantor}; }
  static Ambient z0(SectionTag::Kind sec) { return {sec == SectionTag::S2 ? Z0S2 : Z0S3}; }

  bool enumerable() const { return kind != Baire; }
  bool operator==(const Ambient& o) const { return kind == o.kind; }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
  std::string str() const;
  static Ambient parse(const std::string& s);
};

// Letters allowed at coordinate i (nullopt for Baire).
std::optional<std::vector<Nat>> letters_at(const Ambient& amb, std::size_t i, const Limits& lim);
bool letter_ok(const Ambient& amb, std::size_t i, const Nat& letter, const Limits& lim);
bool word_in_ambient(const Ambient& amb, const Word& u, const Limits& lim);

// A normalized finite union of cylinders at a common depth: the cells are
// sorted, distinct, all of length `depth`, all inside the ambient. Set
// equality is cell-set equality.
struct ClopenSet {
  Ambient amb;
  int depth = 0;
  std::vector<Word> cells;  // sorted by lex order, unique

  bool empty() const { return cells.empty(); }
  bool single_cell() const { return cells.size() == 1; }
  std::string str() const;
};

ClopenSet whole_space(const Ambient& amb);
ClopenSet empty_set(const Ambient& amb, int depth = 0);
ClopenSet cylinder(const Ambient& amb, const Word& prefix);
ClopenSet make_clopen(const Ambient& amb, int depth, std::vector<Word> cells);

// Same denotation, cells at the requested (deeper) depth.
ClopenSet refine(const ClopenSet& a, int depth, const Limits& lim);

ClopenSet meet(const ClopenSet& a, const ClopenSet& b, const Limits& lim);
ClopenSet join(const ClopenSet& a, const ClopenSet& b, const Limits& lim);
bool subset(const ClopenSet& a, const ClopenSet& b, const Limits& lim);
bool same_set(const ClopenSet& a, const ClopenSet& b, const Limits& lim);
bool nonempty_meet(const ClopenSet& a, const ClopenSet& b, const Limits& lim);

// Complement within the ambient at the set's own depth. Only enumerable
// ambients materialize complements.
ClopenSet complement(const ClopenSet& a, const Limits& lim);

// Exponent k of the diameter bound 2^-k: the length of the longest common
// prefix of all cells. Errors on the empty set.
int diameter_exp(const ClopenSet& a);

// An eventually-constant point: head, then the tail letter forever.
struct PointRep {
  Word head;
  Nat tail = Nat(1);

  Nat at(std::size_t i) const { return i < head.size() ? head[i] : tail; }
  Word prefix_word(std::size_t len) const;
  bool operator==(const PointRep& o) const;
  std::string str() const;
};

bool point_in(const PointRep& x, const ClopenSet& a);
bool point_in_ambient(const PointRep& x, const Ambient& amb, const Limits& lim);

}  // namespace zerodim
