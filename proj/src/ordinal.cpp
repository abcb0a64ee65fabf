#include "zerodim/ordinal.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace zerodim {

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) {
  OrdinalCNF o;
  if (n > 0) o.terms.push_back({0, n});
  return o;
}

OrdinalCNF OrdinalCNF::omega() { return of_term(1, 1); }

OrdinalCNF OrdinalCNF::of_term(std::uint32_t exp, std::uint64_t coeff) {
  OrdinalCNF o;
  if (coeff == 0) throw DomainError("ordinal term with zero coefficient");
  o.terms.push_back({exp, coeff});
  return o;
}

std::uint64_t OrdinalCNF::finite_part() const {
  if (terms.empty() || terms.back().first != 0) return 0;
  return terms.back().second;
}

std::uint64_t OrdinalCNF::finite_value() const {
  if (!is_finite()) throw DomainError("ordinal is not finite");
  return finite_part();
}

OrdinalCNF OrdinalCNF::successor() const { return plus_finite(1); }

OrdinalCNF OrdinalCNF::predecessor() const {
  if (!is_successor()) throw DomainError("predecessor of a non-successor ordinal");
  OrdinalCNF o = *this;
  if (--o.terms.back().second == 0) o.terms.pop_back();
  return o;
}

OrdinalCNF OrdinalCNF::plus_finite(std::uint64_t n) const {
  if (n == 0) return *this;
  OrdinalCNF o = *this;
  if (!o.terms.empty() && o.terms.back().first == 0)
    o.terms.back().second += n;
  else
    o.terms.push_back({0, n});
  return o;
}

int ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b) {
  std::size_t n = std::min(a.terms.size(), b.terms.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms[i].first != b.terms[i].first)
      return a.terms[i].first < b.terms[i].first ? -1 : 1;
    if (a.terms[i].second != b.terms[i].second)
      return a.terms[i].second < b.terms[i].second ? -1 : 1;
  }
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size() ? -1 : 1;
  return 0;
}

std::string OrdinalCNF::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += '+';
    auto [e, c] = terms[i];
    if (e == 0) {
      out += std::to_string(c);
    } else {
      out += 'w';
      if (e >= 2) out += "^" + std::to_string(e);
      if (c >= 2) out += "*" + std::to_string(c);
    }
  }
  return out;
}

namespace {

std::uint64_t parse_number(const std::string& s, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == start) throw DomainError("ordinal parse: expected a number in " + s);
  return std::stoull(s.substr(start, pos - start));
}

}  // namespace

OrdinalCNF parse_ordinal(const std::string& text) {
  if (text == "0") return OrdinalCNF::zero();
  OrdinalCNF out;
  std::size_t pos = 0;
  bool saw_finite = false;
  while (true) {
    if (saw_finite) throw DomainError("ordinal parse: finite term must be last in " + text);
    std::uint32_t exp;
    std::uint64_t coeff;
    if (pos < text.size() && text[pos] == 'w') {
      ++pos;
      exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        std::uint64_t e = parse_number(text, pos);
        if (e < 2) throw DomainError("ordinal parse: exponent " + std::to_string(e) +
                                     " must be written without '^' in " + text);
        if (e > UINT32_MAX) throw DomainError("ordinal parse: exponent too large");
        exp = static_cast<std::uint32_t>(e);
      }
      coeff = 1;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        coeff = parse_number(text, pos);
        if (coeff < 2) throw DomainError("ordinal parse: coefficient " + std::to_string(coeff) +
                                         " must be omitted in " + text);
      }
    } else {
      exp = 0;
      coeff = parse_number(text, pos);
      if (coeff == 0) throw DomainError("ordinal parse: zero term in a sum in " + text);
      saw_finite = true;
    }
    if (!out.terms.empty() && out.terms.back().first <= exp)
      throw DomainError("ordinal parse: exponents not strictly decreasing in " + text);
    out.terms.push_back({exp, coeff});
    if (pos == text.size()) break;
    if (text[pos] != '+') throw DomainError("ordinal parse: unexpected character in " + text);
    ++pos;
  }
  return out;
}

Parity parity(const OrdinalCNF& x) {
  return (x.finite_part() % 2 == 0) ? Parity::Even : Parity::Odd;
}

namespace {

// Cache of fundamental-sequence prefixes, one vector per limit ordinal.
std::mutex fs_mutex;
std::map<std::string, std::vector<OrdinalCNF>> fs_cache;

OrdinalCNF fs_raw(const OrdinalCNF& lambda, std::uint64_t k) {
  auto [gamma, coeff] = lambda.terms.back();
  OrdinalCNF mu = lambda;
  if (--mu.terms.back().second == 0) mu.terms.pop_back();
  if (gamma == 1) return mu.plus_finite(k + 1);
  OrdinalCNF out = mu;
  out.terms.push_back({gamma - 1, k + 1});
  return out;
}

}  // namespace

OrdinalCNF fundamental_sequence(const OrdinalCNF& lambda, std::uint64_t n) {
  if (!lambda.is_limit())
    throw DomainError("fundamental_sequence: " + lambda.str() + " is not a nonzero limit");
  std::lock_guard<std::mutex> lock(fs_mutex);
  std::vector<OrdinalCNF>& seq = fs_cache[lambda.str()];
  while (seq.size() <= n) {
    std::uint64_t k = seq.size();
    OrdinalCNF cand = fs_raw(lambda, k);
    if (!seq.empty() && !(seq.back() < cand)) cand = seq.back().successor();
    if (parity(cand) == Parity::Even) cand = cand.successor();
    if (!(cand < lambda)) throw DomainError("fundamental_sequence: overflow at " + lambda.str());
    seq.push_back(std::move(cand));
  }
  return seq[n];
}

namespace {

std::mutex psi_mutex;
std::map<std::pair<std::string, std::vector<std::uint64_t>>, PsiValue> psi_cache;

}  // namespace

PsiValue psi(const OrdinalCNF& xi, const std::vector<std::uint64_t>& s) {
  {
    std::lock_guard<std::mutex> lock(psi_mutex);
    auto it = psi_cache.find({xi.str(), s});
    if (it != psi_cache.end()) return it->second;
  }
  PsiValue cur = PsiValue::ordinal(xi);
  for (std::uint64_t letter : s) {
    if (cur.is_minus_one() || cur.v->is_zero()) {
      cur = PsiValue::minus_one();
    } else if (cur.v->is_successor()) {
      cur = PsiValue::ordinal(cur.v->predecessor());
    } else {
      cur = PsiValue::ordinal(fundamental_sequence(*cur.v, letter));
    }
  }
  std::lock_guard<std::mutex> lock(psi_mutex);
  psi_cache.insert({{xi.str(), s}, cur});
  return cur;
}

bool in_tree(const OrdinalCNF& xi, const std::vector<std::uint64_t>& s, bool prime) {
  PsiValue v = psi(xi, s);
  if (v.is_minus_one()) return false;
  if (prime && v.v->is_zero()) return false;
  return true;
}

std::uint64_t tree_height(const OrdinalCNF& xi) {
  if (!xi.is_finite()) throw DomainError("tree_height: height is enumerable only for finite xi");
  std::vector<std::uint64_t> s;
  while (in_tree(xi, s, false)) s.push_back(0);
  // s is now one step past the deepest word on the all-zero branch; for
  // finite xi every branch has that same length.
  return s.size();
}

}  // namespace zerodim
