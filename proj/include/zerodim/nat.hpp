#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zerodim/common.hpp"

namespace zerodim {

using BigNat = boost::multiprecision::cpp_int;

class Nat;
using Word = std::vector<Nat>;

// A natural number that can exceed positional storage.
//
// The alphabet recursion produces letters like 5^(4.5e19) by level 3; those
// can only be held as the code N(w) of the word w that produced them. A Nat
// is therefore either a materialized big integer (whenever the value needs at
// most kMaterializeBits bits) or the unevaluated code of a word. The split is
// canonical: equal values always have equal representations, so structural
// equality is value equality (N is injective).
class Nat {
 public:
  static constexpr double kMaterializeBits = 4096.0;

  Nat() : small_(0) {}
  Nat(unsigned long long v) : small_(v) {}  // NOLINT: implicit by design
  explicit Nat(BigNat v);

  // The code N(w) of a word already known to exceed the materialize bound.
  static Nat coded(Word w);

  bool is_small() const { return coded_ == nullptr; }
  const BigNat& small_value() const;
  const Word& coded_word() const;

  // Total order: materialized values numerically, every coded value above
  // every materialized one, coded values by shortlex on their source words.
  // This coincides with numeric order except possibly between two coded
  // giants, where the artifact never needs the numeric order.
  friend int nat_cmp(const Nat& a, const Nat& b);

  bool operator==(const Nat& o) const { return nat_cmp(*this, o) == 0; }
  bool operator!=(const Nat& o) const { return !(*this == o); }
  bool operator<(const Nat& o) const { return nat_cmp(*this, o) < 0; }

  std::string str() const;

 private:
  BigNat small_;
  std::shared_ptr<const Word> coded_;
};

int nat_cmp(const Nat& a, const Nat& b);
int lex_cmp(const Word& a, const Word& b);       // equal lengths expected
int shortlex_cmp(const Word& a, const Word& b);  // length, then lex

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_cmp(a, b) < 0; }
};

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    int c = shortlex_cmp(a.first, b.first);
    if (c != 0) return c < 0;
    return shortlex_cmp(a.second, b.second) < 0;
  }
};

bool is_prefix(const Word& p, const Word& w);
Word prefix(const Word& w, std::size_t n);

// Small-integer words (indices, tree nodes). Throws DomainError if a letter
// does not fit.
std::vector<std::uint64_t> to_small_word(const Word& w);
Word from_small_word(const std::vector<std::uint64_t>& w);

// Text format: "(1,36,900)", "()" for the empty word. Letters are decimal
// when materialized and "N(...)" (the coding of the inner word) otherwise.
std::string word_str(const Word& w);
Word parse_word(const std::string& text);
Nat parse_nat(const std::string& text);

}  // namespace zerodim
