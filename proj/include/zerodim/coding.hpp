#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zerodim/common.hpp"
#include "zerodim/nat.hpp"
#include "zerodim/ordinal.hpp"

namespace zerodim {

// Which of the two constructions sharing the names A_n, Z_0, f is meant.
// The alphabets depend only on the section; the ordinal parameter selects
// the tree that indexes the S3 map family.
struct SectionTag {
  enum Kind { S2, S3 } kind = S2;
  OrdinalCNF xi;

  static SectionTag s2() { return {S2, {}}; }
  static SectionTag s3(OrdinalCNF x) { return {S3, std::move(x)}; }
  bool operator==(const SectionTag& o) const { return kind == o.kind && xi == o.xi; }
};

const BigNat& nth_prime(std::size_t i);

// The prime-power code: q_0^(s(0)+1) * ... * q_(|s|-1)^(s(|s|-1)+1) for a
// nonempty word, 0 for the empty word. The result materializes when it fits
// and stays symbolic otherwise.
Nat encode_word(const Word& s);

// Code as a machine integer, for coordinate indices. Errors out loudly when
// the code exceeds the addressable range.
std::uint64_t encode_index(const std::vector<std::uint64_t>& s);

// Inverse of the code: defined exactly on 0 and on products of the first k
// primes with all exponents >= 1 (contiguous support).
std::optional<Word> decode_value(const BigNat& n);
std::optional<Word> decode_nat(const Nat& n);

// The recursive alphabets. S2: A_0 = {1}, A_(n+1) = {1} + codes of extended
// products. S3: {1} off the image of the code, the constrained variant on it.
// Sorted, memoized, capped.
const std::vector<Nat>& alphabet(SectionTag::Kind section, std::size_t n, const Limits& lim);

// Prefix membership in Z_0 = prod A_n.
bool in_Z0(SectionTag::Kind section, const Word& u, const Limits& lim);

}  // namespace zerodim
