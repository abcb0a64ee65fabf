#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zerodim/maps.hpp"

namespace zerodim {

// Which family of maps generates the relations, and over which space.
// S2: the level maps indexed by {empty} plus single integers, with n = 0
// optionally excluded (the Z_0 family starts at 1). S3: the tree maps
// indexed by T_xi.
struct RelContext {
  SectionTag tag;
  Ambient amb;
  bool exclude_zero = false;  // S2 only: use the family (f_n) with n > 0

  static RelContext s2_baire() { return {SectionTag::s2(), Ambient::baire(), false}; }
  static RelContext s2_z0() { return {SectionTag::s2(), Ambient::z0(SectionTag::S2), true}; }
  static RelContext s3(OrdinalCNF xi, Ambient amb) { return {SectionTag::s3(std::move(xi)), amb, false}; }
};

// Index words of maps whose modified coordinates are all visible below ell,
// sorted by length then lexicographically. The empty index (the identity) is
// always first. Any witnessing map prunes to one of these.
std::vector<std::vector<std::uint64_t>> visible_indices(const RelContext& ctx, std::uint64_t ell,
                                                        const Limits& lim);

MapPtr index_map(const RelContext& ctx, const std::vector<std::uint64_t>& w);

bool related_R(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim);

// Minimal witness length and the (length, lex)-least witness index.
std::uint64_t m_value(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim);
std::vector<std::uint64_t> minimal_witness(const RelContext& ctx, const Word& u, const Word& v,
                                           const Limits& lim);

// Least n with u|n R v|n and m(u,v) = m(u|n, v|n).
std::uint64_t n_value(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim);

// All v with u T v (u R v or v R u), sorted; always contains u.
std::vector<Word> neighbors(const RelContext& ctx, const Word& u, const Limits& lim);

// Closure of u under T: the equivalence class, sorted; capped.
std::vector<Word> e_class(const RelContext& ctx, const Word& u, const Limits& lim);

// Chain distance within a class (min chain length minus one).
std::uint64_t dist(const RelContext& ctx, const Word& x, const Word& y, const Limits& lim);

// Distance strata H_k around an anchor, each stratum sorted.
std::vector<std::vector<Word>> strata(const RelContext& ctx, const Word& anchor, const Limits& lim);

// The processing order: strata concatenated, anchor first.
std::vector<Word> phi_order(const RelContext& ctx, const Word& anchor, const Limits& lim);

struct ChainReport {
  std::size_t classes_checked = 0;
  std::size_t chains_checked = 0;
  std::vector<std::vector<Word>> counterexamples;

  bool pass() const { return counterexamples.empty(); }
};

// Exhaustively enumerates closed T-chains without consecutive repeats, of
// length at most chain_bound, over the classes of all length-ell words (the
// Z_0 product in Z_0 ambients, entries below base_bound in Baire). Reports
// every chain that never backtracks (no i with c(i) = c(i+2)).
ChainReport check_very_good(const RelContext& ctx, std::uint64_t ell, std::uint64_t chain_bound,
                            std::uint64_t base_bound, const Limits& lim);

struct CorrectReport {
  struct Entry {
    std::vector<std::pair<std::size_t, int>> word;  // (map position, exponent)
    FixedSearchResult result;
  };
  std::size_t words_checked = 0;
  std::vector<Entry> fixed;
  std::vector<Entry> inconclusive;

  bool pass() const { return fixed.empty() && inconclusive.empty(); }
};

// Runs the fixed-point search on every composition word up to the given
// length with no adjacent cancellation.
CorrectReport check_very_correct(const std::vector<MapPtr>& maps, const Ambient& amb,
                                 std::uint64_t comp_bound, int depth, const Limits& lim);

// Words of length ell over the context's base alphabet (for enumeration).
std::vector<Word> level_words(const RelContext& ctx, std::uint64_t ell, std::uint64_t base_bound,
                              const Limits& lim);

}  // namespace zerodim
