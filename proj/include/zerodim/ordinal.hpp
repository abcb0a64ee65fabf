#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zerodim/nat.hpp"

namespace zerodim {

// Ordinals below omega^omega in Cantor normal form: a strictly decreasing
// list of (exponent, coefficient) terms, sum of omega^exponent * coefficient.
// The exponent cap is a documented constant of the artifact, not a silent
// failure mode; everything desk-scale (finite, w, w+1, w*2) fits.
struct OrdinalCNF {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> terms;

  static OrdinalCNF zero() { return {}; }
  static OrdinalCNF finite(std::uint64_t n);
  static OrdinalCNF omega();
  static OrdinalCNF of_term(std::uint32_t exp, std::uint64_t coeff);

  bool is_zero() const { return terms.empty(); }
  bool is_finite() const { return terms.empty() || terms.back().first == 0; }
  std::uint64_t finite_part() const;  // coefficient of omega^0
  std::uint64_t finite_value() const;  // value, requires is_finite()
  bool is_successor() const { return finite_part() > 0; }
  bool is_limit() const { return !is_zero() && finite_part() == 0; }

  OrdinalCNF successor() const;
  OrdinalCNF predecessor() const;  // requires is_successor()
  OrdinalCNF plus_finite(std::uint64_t n) const;

  bool operator==(const OrdinalCNF& o) const { return terms == o.terms; }
  bool operator!=(const OrdinalCNF& o) const { return !(*this == o); }
  bool operator<(const OrdinalCNF& o) const { return ordinal_cmp(*this, o) < 0; }
  bool operator<=(const OrdinalCNF& o) const { return ordinal_cmp(*this, o) <= 0; }

  friend int ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b);

  std::string str() const;
};

int ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b);

// Text grammar, bit-exact: `0`, `k`, `w`, `w*k`, `w^e`, `w^e*k`, sums joined
// by `+` with strictly decreasing exponents. Rejects non-canonical forms
// ("w^1", "w^0*3", zero coefficients, unsorted sums).
OrdinalCNF parse_ordinal(const std::string& text);

enum class Parity { Even, Odd };

// Parity of the finite part: x = lambda + n with lambda limit-or-zero and n
// finite; the parity of x is the parity of n.
Parity parity(const OrdinalCNF& x);
inline bool same_parity(const OrdinalCNF& a, const OrdinalCNF& b) { return parity(a) == parity(b); }

// Canonical fundamental sequence of a nonzero limit ordinal: write
// lambda = mu + omega^gamma (last CNF term), take mu + omega^(gamma-1)*(n+1),
// then bump each value to the least odd ordinal at least as large that keeps
// the sequence strictly increasing. For lambda = omega this gives 2n+1.
OrdinalCNF fundamental_sequence(const OrdinalCNF& lambda, std::uint64_t n);

// Rank value: either -1 or an ordinal <= xi.
struct PsiValue {
  std::optional<OrdinalCNF> v;  // nullopt encodes -1

  static PsiValue minus_one() { return {std::nullopt}; }
  static PsiValue ordinal(OrdinalCNF o) { return {std::move(o)}; }

  bool is_minus_one() const { return !v.has_value(); }
  bool operator==(const PsiValue& o) const { return v == o.v; }
  std::string str() const { return v ? v->str() : "-1"; }
};

// The rank recursion on finite words: psi(xi, empty) = xi; children of a
// successor value drop to its predecessor, children of a nonpositive value
// drop to -1, children of a nonzero limit follow the fundamental sequence.
// Memoized; memoization is internally synchronized and never changes results.
PsiValue psi(const OrdinalCNF& xi, const std::vector<std::uint64_t>& s);

// Membership in T_xi (prime=false) or T'_xi (prime=true).
bool in_tree(const OrdinalCNF& xi, const std::vector<std::uint64_t>& s, bool prime);

// Number of levels (root included) of T_xi for finite xi, computed by
// walking the recursion, not by the closed form.
std::uint64_t tree_height(const OrdinalCNF& xi);

}  // namespace zerodim
