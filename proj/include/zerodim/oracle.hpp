#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "zerodim/relations.hpp"

namespace zerodim {

using IndexWord = std::vector<std::uint64_t>;

// Target side of a build: a family of partial maps over an index tree, with
// the five capabilities the builders need (identity of the space, per-index
// map and side, domains/images through the map calculus, and minimal-child
// search for graph meets). Everything a builder learns about its target goes
// through this interface.
class SituationOracle {
 public:
  virtual ~SituationOracle() = default;

  virtual Ambient ambient() const = 0;
  virtual int child_bound() const = 0;
  virtual bool has_index(const IndexWord& w) const = 0;
  virtual MapPtr map_at(const IndexWord& w) const = 0;
  virtual Side side_at(const IndexWord& w) const = 0;

  // Least single-letter extension t of `parent` whose map's graph meets
  // zside x tside. Carved oracles may extend their family here.
  virtual std::optional<IndexWord> min_child(const IndexWord& parent, const ClopenSet& zside,
                                             const ClopenSet& tside, const Limits& lim) = 0;

  // G(g_w) meets zside x tside (side-aware).
  bool graph_meets_product(const IndexWord& w, const ClopenSet& zside, const ClopenSet& tside,
                           const Limits& lim) const;

  ClopenSet map_image(const IndexWord& w, const ClopenSet& a, const Limits& lim) const;
  ClopenSet map_preimage(const IndexWord& w, const ClopenSet& b, const Limits& lim) const;
};

// The level-map family on its own space: index universe {empty} + integers,
// identity at the root.
class CanonicalS2Oracle : public SituationOracle {
 public:
  CanonicalS2Oracle(Ambient amb, bool exclude_zero, int child_bound)
      : amb_(amb), exclude_zero_(exclude_zero), bound_(child_bound) {}

  Ambient ambient() const override { return amb_; }
  int child_bound() const override { return bound_; }
  bool has_index(const IndexWord& w) const override;
  MapPtr map_at(const IndexWord& w) const override;
  Side side_at(const IndexWord&) const override { return Side::ZtoT; }
  std::optional<IndexWord> min_child(const IndexWord& parent, const ClopenSet& zside,
                                     const ClopenSet& tside, const Limits& lim) override;

 private:
  Ambient amb_;
  bool exclude_zero_;
  int bound_;
};

// The tree-map family indexed by T_xi, child indices truncated at the bound.
class CanonicalS3Oracle : public SituationOracle {
 public:
  CanonicalS3Oracle(OrdinalCNF xi, Ambient amb, int child_bound)
      : xi_(std::move(xi)), amb_(amb), bound_(child_bound) {}

  Ambient ambient() const override { return amb_; }
  int child_bound() const override { return bound_; }
  bool has_index(const IndexWord& w) const override { return in_tree(xi_, w, false); }
  MapPtr map_at(const IndexWord& w) const override;
  Side side_at(const IndexWord&) const override { return Side::ZtoT; }
  std::optional<IndexWord> min_child(const IndexWord& parent, const ClopenSet& zside,
                                     const ClopenSet& tside, const Limits& lim) override;
  const OrdinalCNF& xi() const { return xi_; }

 private:
  OrdinalCNF xi_;
  Ambient amb_;
  int bound_;
};

// One carved restriction of a shuffle: the shuffle index, the clopen piece
// of its domain, and the seed ball the graph was placed in.
struct CarvedMap {
  std::uint64_t index = 0;
  ClopenSet piece;      // C_index
  Word ball;            // prefix of the seed ball the graph lives in
  MapPtr map;           // shuffle restricted to the piece
};

struct CarveResult {
  std::vector<CarvedMap> maps;
};

// Default dense seeds: the binary words in shortlex order, padded with 0s.
std::vector<PointRep> default_seeds(std::size_t count);

// Restricts shuffles to small cylinders around the seeds: map k lives inside
// the 2^-(k+1) ball of seed k squared, indices strictly increase, and every
// piece is disjoint from its image.
CarveResult carve_general(std::size_t count, const std::vector<PointRep>& seeds, int depth_budget,
                          const Limits& lim);

struct CarveCheck {
  struct Entry {
    std::uint64_t index;
    bool piece_disjoint_from_image = false;
    bool graph_in_ball = false;
    bool graph_off_diagonal = false;
  };
  std::vector<Entry> entries;
  bool indices_strictly_increase = false;
  std::uint64_t seed_density_depth = 0;  // every cell this deep holds a seed ball

  bool pass() const;
};

CarveCheck verify_carve(const CarveResult& carved, const std::vector<PointRep>& seeds,
                        int depth_budget, const Limits& lim);

// Carved shuffles as a build target. When on-demand extension is enabled the
// oracle carves a fresh shuffle inside any requested product it cannot serve
// (the dense-seed freedom of the construction); otherwise the family is
// fixed and searches may come back empty.
class CarvedOracle : public SituationOracle {
 public:
  CarvedOracle(CarveResult carved, bool on_demand, Side root_side = Side::ZtoT);

  Ambient ambient() const override { return Ambient::cantor(); }
  int child_bound() const override;
  bool has_index(const IndexWord& w) const override;
  MapPtr map_at(const IndexWord& w) const override;
  Side side_at(const IndexWord& w) const override;
  std::optional<IndexWord> min_child(const IndexWord& parent, const ClopenSet& zside,
                                     const ClopenSet& tside, const Limits& lim) override;

  const std::vector<CarvedMap>& maps() const { return carved_.maps; }

 private:
  CarveResult carved_;
  bool on_demand_;
  Side root_side_;
};

// Carves one restriction of shuffle `index` whose graph lies inside the
// cylinder square over `cell`; nullopt when the cell's bit pattern is
// incompatible with that shuffle.
std::optional<CarvedMap> carve_in_cell(std::uint64_t index, const Word& cell, const Limits& lim);

// An explicitly listed family (used for mixed-side fixtures and file
// targets).
class FixedOracle : public SituationOracle {
 public:
  struct Entry {
    IndexWord index;
    MapPtr map;
    Side side = Side::ZtoT;
  };

  FixedOracle(Ambient amb, std::vector<Entry> entries, int child_bound);

  Ambient ambient() const override { return amb_; }
  int child_bound() const override { return bound_; }
  bool has_index(const IndexWord& w) const override;
  MapPtr map_at(const IndexWord& w) const override;
  Side side_at(const IndexWord& w) const override;
  std::optional<IndexWord> min_child(const IndexWord& parent, const ClopenSet& zside,
                                     const ClopenSet& tside, const Limits& lim) override;

 private:
  Ambient amb_;
  std::vector<Entry> entries_;
  int bound_;
};

}  // namespace zerodim
