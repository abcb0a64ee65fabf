#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zerodim/space.hpp"

namespace zerodim {

// Which factor of the product a map's domain lives in. Pure data: the
// two-sided builders dispatch on it, nothing else reads it.
enum class Side { Auto, ZtoT, TtoZ };

std::string side_str(Side s);
Side parse_side(const std::string& s);

struct MapDesc;
using MapPtr = std::shared_ptr<const MapDesc>;

// Symbolic descriptor of a partial map. Six kinds:
//   Identity    on a clopen domain
//   Level n     rewrites coordinate n to the code of the prefix below it
//   Tree s      rewrites the coordinates coded by the prefixes of s
//   Shuffle n   total on Cantor space, relocates coordinates = -1 mod 2^n
//   Restrict    a map cut down to a clopen subset of its domain
//   Inverse     the formal flip (images and preimages swap)
struct MapDesc {
  enum Kind { Identity, Level, Tree, Shuffle, Restrict, Inverse } kind = Identity;

  ClopenSet dom;                 // Identity: the domain; Restrict: the cut
  std::uint64_t n = 0;           // Level, Shuffle
  std::vector<std::uint64_t> tree_s;  // Tree
  SectionTag::Kind section = SectionTag::S2;  // Tree (S3 for tree maps)
  MapPtr inner;                  // Restrict, Inverse
  Side side = Side::Auto;

  std::string str() const;
};

MapPtr make_identity(ClopenSet dom, Side side = Side::Auto);
MapPtr make_level(std::uint64_t n, Side side = Side::Auto);
MapPtr make_tree(std::vector<std::uint64_t> s, SectionTag::Kind sec, Side side = Side::Auto);
MapPtr make_shuffle(std::uint64_t n, Side side = Side::Auto);
MapPtr make_restrict(MapPtr inner, ClopenSet dom, Side side = Side::Auto);
MapPtr make_inverse(MapPtr inner, Side side = Side::Auto);

// Modified coordinates of a Level/Tree map: the set P. Level n: {n};
// Tree s: the codes of the nonempty prefixes of s (empty s: identity).
std::vector<std::uint64_t> modified_coords(const MapDesc& f);

enum class ApplyStatus { Ok, Undetermined, OutsideDomain };

struct ApplyResult {
  ApplyStatus status = ApplyStatus::Ok;
  Word out;

  bool ok() const { return status == ApplyStatus::Ok; }
};

// Image prefix of the same length. Every modified coordinate of a level or
// tree map depends only on strictly earlier input coordinates, so a long
// enough prefix determines the image prefix exactly.
ApplyResult apply_prefix(const MapDesc& f, const Word& u);

struct PointResult {
  ApplyStatus status = ApplyStatus::Ok;
  PointRep out;

  bool ok() const { return status == ApplyStatus::Ok; }
};

// Exact image of an eventually-constant point.
PointResult apply_point(const MapDesc& f, const PointRep& x);

// Does the graph of f meet N_u x N_v? Decided by the visibility clauses for
// level and tree maps (modified coordinates at or beyond |u| impose nothing
// because extensions by letter 1 exist), coordinate checks for shuffles, and
// exact set algebra otherwise. `amb` supplies the ambient membership clause.
bool graph_meets(const MapDesc& f, const Word& u, const Word& v, const Ambient& amb,
                 const Limits& lim);

// Exact clopen image of A-intersect-domain, and exact preimage. The result
// depth is raised as needed so every constraint is visible.
ClopenSet image(const MapDesc& f, const ClopenSet& a, const Limits& lim);
ClopenSet preimage(const MapDesc& f, const ClopenSet& b, const Limits& lim);

// Domain and image as clopen sets at the given depth.
ClopenSet domain_at(const MapDesc& f, const Ambient& amb, int depth, const Limits& lim);
ClopenSet image_at(const MapDesc& f, const Ambient& amb, int depth, const Limits& lim);

// Least n0 such that every later sibling map agrees with the parent on all
// coordinates below `ell`. S2 (children of the identity): the level index
// itself. S3: driven by the code of the extended tree index.
std::uint64_t convergence_threshold(const std::vector<std::uint64_t>& parent, SectionTag tag,
                                    std::uint64_t ell);

// One letter of a composition word.
struct CompStep {
  MapPtr map;
  int exp = 1;  // +1 or -1
};

enum class FixedSearchVerdict { NoFixedCylinder, FixedOn, Inconclusive };

struct FixedSearchResult {
  FixedSearchVerdict verdict = FixedSearchVerdict::NoFixedCylinder;
  std::optional<Word> cell;          // FixedOn witness
  std::size_t inconclusive_cells = 0;
  std::size_t fixed_cells = 0;
  std::size_t checked_cells = 0;
};

// Scans every depth-D cylinder of the ambient and classifies the action of
// the composition word on it: fixed (defined everywhere, prefix preserved),
// moved, or undetermined at this depth.
FixedSearchResult composition_fixed_point_search(const std::vector<CompStep>& word, int depth,
                                                 const Ambient& amb, const Limits& lim);

}  // namespace zerodim
