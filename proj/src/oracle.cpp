#include "zerodim/oracle.hpp"

#include <algorithm>
#include <map>

namespace zerodim {

bool SituationOracle::graph_meets_product(const IndexWord& w, const ClopenSet& zside,
                                          const ClopenSet& tside, const Limits& lim) const {
  MapPtr f = map_at(w);
  if (side_at(w) == Side::TtoZ) return nonempty_meet(image(*f, tside, lim), zside, lim);
  return nonempty_meet(image(*f, zside, lim), tside, lim);
}

ClopenSet SituationOracle::map_image(const IndexWord& w, const ClopenSet& a,
                                     const Limits& lim) const {
  return image(*map_at(w), a, lim);
}

ClopenSet SituationOracle::map_preimage(const IndexWord& w, const ClopenSet& b,
                                        const Limits& lim) const {
  return preimage(*map_at(w), b, lim);
}

// --------------------------------------------------------------------------
// Canonical S2

bool CanonicalS2Oracle::has_index(const IndexWord& w) const {
  if (w.empty()) return true;
  if (w.size() != 1) return false;
  return !exclude_zero_ || w[0] > 0;
}

MapPtr CanonicalS2Oracle::map_at(const IndexWord& w) const {
  if (w.empty()) return make_identity(whole_space(amb_));
  if (!has_index(w)) throw DomainError("index outside the level-map family");
  return make_level(w[0]);
}

std::optional<IndexWord> CanonicalS2Oracle::min_child(const IndexWord& parent,
                                                      const ClopenSet& zside,
                                                      const ClopenSet& tside, const Limits& lim) {
  if (!parent.empty()) return std::nullopt;  // only the root has children here
  for (std::uint64_t t = exclude_zero_ ? 1 : 0; t < static_cast<std::uint64_t>(bound_); ++t)
    if (graph_meets_product({t}, zside, tside, lim)) return IndexWord{t};
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Canonical S3

MapPtr CanonicalS3Oracle::map_at(const IndexWord& w) const {
  if (!has_index(w)) throw DomainError("index outside the tree");
  if (w.empty()) return make_identity(whole_space(amb_));
  return make_tree(w, SectionTag::S3);
}

std::optional<IndexWord> CanonicalS3Oracle::min_child(const IndexWord& parent,
                                                      const ClopenSet& zside,
                                                      const ClopenSet& tside, const Limits& lim) {
  for (std::uint64_t j = 0; j < static_cast<std::uint64_t>(bound_); ++j) {
    IndexWord child = parent;
    child.push_back(j);
    if (!in_tree(xi_, child, false)) continue;
    if (graph_meets_product(child, zside, tside, lim)) return child;
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Carving

std::vector<PointRep> default_seeds(std::size_t count) {
  std::vector<PointRep> out;
  std::vector<Word> level{Word{}};
  while (out.size() < count) {
    std::vector<Word> next;
    for (const Word& w : level) {
      if (out.size() >= count) break;
      out.push_back(PointRep{w, Nat(0)});
      for (unsigned b : {0u, 1u}) {
        Word e = w;
        e.emplace_back(b);
        next.push_back(std::move(e));
      }
    }
    level = std::move(next);
  }
  return out;
}

std::optional<CarvedMap> carve_in_cell(std::uint64_t index, const Word& cell, const Limits& lim) {
  const std::uint64_t block = std::uint64_t(1) << index;
  const std::uint64_t base = cell.size();
  auto src = [&](std::uint64_t k) { return 2 * block * ((k + 1) >> index) - block - 1; };
  auto is_mod = [&](std::uint64_t k) { return (k + 1) % block == 0; };

  std::map<std::uint64_t, Nat> pins;
  // The image must stay under the cell: every relocated coordinate below the
  // base either already matches or pins its source.
  for (std::uint64_t k = 0; k < base; ++k) {
    if (!is_mod(k)) continue;
    std::uint64_t s = src(k);
    if (s < base) {
      if (cell[s] != cell[k]) return std::nullopt;
    } else {
      auto [it, fresh] = pins.emplace(s, cell[k]);
      if (!fresh && it->second != cell[k]) return std::nullopt;
    }
  }
  // A visible obstruction: one relocated coordinate whose source is pinned to
  // the opposite bit, so the piece never meets its image.
  std::uint64_t q = std::max<std::uint64_t>(2, (base + block) / block);
  std::uint64_t big, s_big;
  while (true) {
    big = block * q - 1;
    s_big = src(big);
    if (big >= base && !pins.count(big) && !pins.count(s_big)) break;
    ++q;
  }
  pins[big] = Nat(0);
  pins[s_big] = Nat(1);

  std::uint64_t depth = s_big + 1;
  if (depth > static_cast<std::uint64_t>(lim.depth))
    throw ResourceError("carve: piece depth exceeds the depth cap");
  Word p(depth, Nat(0));
  for (std::uint64_t i = 0; i < base; ++i) p[i] = cell[i];
  for (const auto& [pos, bit] : pins) p[pos] = bit;

  CarvedMap out;
  out.index = index;
  out.ball = cell;
  out.piece = cylinder(Ambient::cantor(), p);
  out.map = make_restrict(make_shuffle(index), out.piece, Side::ZtoT);
  return out;
}

CarveResult carve_general(std::size_t count, const std::vector<PointRep>& seeds, int depth_budget,
                          const Limits& lim) {
  if (seeds.size() < count) throw DomainError("carve_general: not enough seeds");
  CarveResult out;
  std::uint64_t next_index = 1;
  for (std::size_t k = 0; k < count; ++k) {
    Word ball = seeds[k].prefix_word(k + 2);
    std::optional<CarvedMap> carved;
    std::uint64_t idx = next_index;
    for (; idx < next_index + static_cast<std::uint64_t>(lim.child_bound); ++idx) {
      carved = carve_in_cell(idx, ball, lim);
      if (carved) break;
    }
    if (!carved) throw ResourceError("carve_general: no shuffle fits seed ball " + word_str(ball));
    (void)depth_budget;
    out.maps.push_back(std::move(*carved));
    next_index = idx + 1;
  }
  return out;
}

bool CarveCheck::pass() const {
  if (!indices_strictly_increase) return false;
  for (const Entry& e : entries)
    if (!e.piece_disjoint_from_image || !e.graph_in_ball || !e.graph_off_diagonal) return false;
  return true;
}

CarveCheck verify_carve(const CarveResult& carved, const std::vector<PointRep>& seeds,
                        int depth_budget, const Limits& lim) {
  CarveCheck out;
  out.indices_strictly_increase = true;
  for (std::size_t k = 0; k < carved.maps.size(); ++k) {
    const CarvedMap& cm = carved.maps[k];
    if (k > 0 && carved.maps[k - 1].index >= cm.index) out.indices_strictly_increase = false;
    CarveCheck::Entry e;
    e.index = cm.index;
    ClopenSet im = image(*cm.map, cm.piece, lim);
    e.piece_disjoint_from_image = !nonempty_meet(cm.piece, im, lim);
    ClopenSet ball = k < seeds.size() ? cylinder(Ambient::cantor(), seeds[k].prefix_word(k + 2))
                                      : cylinder(Ambient::cantor(), cm.ball);
    e.graph_in_ball = subset(cm.piece, ball, lim) && subset(im, ball, lim);
    // No diagonal graph cell: at the common depth, the piece and image share
    // no cell, which rules out any pair (x, x) in the graph.
    e.graph_off_diagonal = e.piece_disjoint_from_image;
    out.entries.push_back(e);
  }
  // Seed density: the deepest level at which every cell contains some ball.
  std::uint64_t d = 0;
  while (true) {
    ClopenSet all = refine(whole_space(Ambient::cantor()), static_cast<int>(d + 1), lim);
    bool covered = true;
    for (const Word& c : all.cells) {
      bool hit = false;
      for (std::size_t k = 0; k < carved.maps.size() && !hit; ++k) {
        if (k >= seeds.size()) break;
        Word ball = seeds[k].prefix_word(k + 2);
        if (is_prefix(c, ball)) hit = true;
      }
      if (!hit) {
        covered = false;
        break;
      }
    }
    if (!covered || d + 1 > static_cast<std::uint64_t>(depth_budget)) break;
    ++d;
  }
  out.seed_density_depth = d;
  return out;
}

// --------------------------------------------------------------------------
// Carved oracle

CarvedOracle::CarvedOracle(CarveResult carved, bool on_demand, Side root_side)
    : carved_(std::move(carved)), on_demand_(on_demand), root_side_(root_side) {}

int CarvedOracle::child_bound() const {
  std::uint64_t m = 0;
  for (const CarvedMap& cm : carved_.maps) m = std::max(m, cm.index);
  return static_cast<int>(m + 1);
}

bool CarvedOracle::has_index(const IndexWord& w) const {
  if (w.empty()) return true;
  if (w.size() != 1) return false;
  for (const CarvedMap& cm : carved_.maps)
    if (cm.index == w[0]) return true;
  return false;
}

MapPtr CarvedOracle::map_at(const IndexWord& w) const {
  if (w.empty()) return make_identity(whole_space(Ambient::cantor()), root_side_);
  for (const CarvedMap& cm : carved_.maps)
    if (w.size() == 1 && cm.index == w[0]) return cm.map;
  throw DomainError("index outside the carved family");
}

Side CarvedOracle::side_at(const IndexWord& w) const {
  if (w.empty()) return root_side_;
  return map_at(w)->side;
}

std::optional<IndexWord> CarvedOracle::min_child(const IndexWord& parent, const ClopenSet& zside,
                                                 const ClopenSet& tside, const Limits& lim) {
  if (!parent.empty()) return std::nullopt;
  for (const CarvedMap& cm : carved_.maps)
    if (graph_meets_product({cm.index}, zside, tside, lim)) return IndexWord{cm.index};
  if (!on_demand_) return std::nullopt;
  // Extend the carving inside the requested product: any nonempty clopen
  // piece of the near-diagonal region accepts a fresh shuffle.
  ClopenSet both = meet(zside, tside, lim);
  if (both.empty()) return std::nullopt;
  const Word& cell = both.cells.front();
  std::uint64_t next = carved_.maps.empty() ? 1 : carved_.maps.back().index + 1;
  for (std::uint64_t idx = next; idx < next + static_cast<std::uint64_t>(lim.child_bound); ++idx) {
    std::optional<CarvedMap> cm = carve_in_cell(idx, cell, lim);
    if (cm) {
      carved_.maps.push_back(std::move(*cm));
      return IndexWord{carved_.maps.back().index};
    }
  }
  return std::nullopt;
}

// --------------------------------------------------------------------------
// Fixed family

FixedOracle::FixedOracle(Ambient amb, std::vector<Entry> entries, int child_bound)
    : amb_(amb), entries_(std::move(entries)), bound_(child_bound) {}

bool FixedOracle::has_index(const IndexWord& w) const {
  for (const Entry& e : entries_)
    if (e.index == w) return true;
  return false;
}

MapPtr FixedOracle::map_at(const IndexWord& w) const {
  for (const Entry& e : entries_)
    if (e.index == w) return e.map;
  throw DomainError("index outside the fixed family");
}

Side FixedOracle::side_at(const IndexWord& w) const {
  for (const Entry& e : entries_)
    if (e.index == w) return e.side;
  throw DomainError("index outside the fixed family");
}

std::optional<IndexWord> FixedOracle::min_child(const IndexWord& parent, const ClopenSet& zside,
                                                const ClopenSet& tside, const Limits& lim) {
  std::vector<const Entry*> children;
  for (const Entry& e : entries_)
    if (e.index.size() == parent.size() + 1 &&
        std::equal(parent.begin(), parent.end(), e.index.begin()))
      children.push_back(&e);
  std::sort(children.begin(), children.end(),
            [](const Entry* a, const Entry* b) { return a->index < b->index; });
  for (const Entry* e : children)
    if (graph_meets_product(e->index, zside, tside, lim)) return e->index;
  return std::nullopt;
}

}  // namespace zerodim
