#include "zerodim/nat.hpp"

namespace zerodim {

Nat::Nat(BigNat v) : small_(std::move(v)) {
  if (small_ < 0) throw DomainError("Nat: negative value");
}

Nat Nat::coded(Word w) {
  Nat n;
  n.coded_ = std::make_shared<const Word>(std::move(w));
  return n;
}

const BigNat& Nat::small_value() const {
  if (coded_) throw DomainError("Nat: value exceeds materialize bound");
  return small_;
}

const Word& Nat::coded_word() const {
  if (!coded_) throw DomainError("Nat: not a coded value");
  return *coded_;
}

int nat_cmp(const Nat& a, const Nat& b) {
  if (a.coded_ == nullptr && b.coded_ == nullptr) {
    if (a.small_ < b.small_) return -1;
    if (a.small_ > b.small_) return 1;
    return 0;
  }
  if (a.coded_ == nullptr) return -1;
  if (b.coded_ == nullptr) return 1;
  return shortlex_cmp(*a.coded_, *b.coded_);
}

int lex_cmp(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = nat_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

int shortlex_cmp(const Word& a, const Word& b) {
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return lex_cmp(a, b);
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != w[i]) return false;
  return true;
}

Word prefix(const Word& w, std::size_t n) {
  if (n > w.size()) throw DomainError("prefix: length exceeds word");
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n));
}

std::vector<std::uint64_t> to_small_word(const Word& w) {
  std::vector<std::uint64_t> out;
  out.reserve(w.size());
  for (const Nat& n : w) {
    if (!n.is_small() || n.small_value() > BigNat(UINT64_MAX))
      throw DomainError("word letter does not fit in a machine integer");
    out.push_back(n.small_value().convert_to<std::uint64_t>());
  }
  return out;
}

Word from_small_word(const std::vector<std::uint64_t>& w) {
  Word out;
  out.reserve(w.size());
  for (std::uint64_t v : w) out.emplace_back(v);
  return out;
}

std::string Nat::str() const {
  if (!coded_) return small_.str();
  return "N" + word_str(*coded_);
}

std::string word_str(const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += w[i].str();
  }
  out += ')';
  return out;
}

}  // namespace zerodim
