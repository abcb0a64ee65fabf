#include "zerodim/maps.hpp"

#include <algorithm>

namespace zerodim {

std::string side_str(Side s) {
  switch (s) {
    case Side::Auto: return "auto";
    case Side::ZtoT: return "ztot";
    case Side::TtoZ: return "ttoz";
  }
  return "?";
}

Side parse_side(const std::string& s) {
  if (s == "auto") return Side::Auto;
  if (s == "ztot") return Side::ZtoT;
  if (s == "ttoz") return Side::TtoZ;
  throw DomainError("unknown side tag: " + s);
}

MapPtr make_identity(ClopenSet dom, Side side) {
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Identity;
  m->dom = std::move(dom);
  m->side = side;
  return m;
}

MapPtr make_level(std::uint64_t n, Side side) {
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Level;
  m->n = n;
  m->side = side;
  return m;
}

MapPtr make_tree(std::vector<std::uint64_t> s, SectionTag::Kind sec, Side side) {
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Tree;
  m->tree_s = std::move(s);
  m->section = sec;
  m->side = side;
  return m;
}

MapPtr make_shuffle(std::uint64_t n, Side side) {
  if (n == 0) throw DomainError("shuffle index must be positive");
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Shuffle;
  m->n = n;
  m->side = side;
  return m;
}

MapPtr make_restrict(MapPtr inner, ClopenSet dom, Side side) {
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Restrict;
  m->inner = std::move(inner);
  m->dom = std::move(dom);
  m->side = side;
  return m;
}

MapPtr make_inverse(MapPtr inner, Side side) {
  auto m = std::make_shared<MapDesc>();
  m->kind = MapDesc::Inverse;
  m->inner = std::move(inner);
  m->side = side;
  return m;
}

std::string MapDesc::str() const {
  switch (kind) {
    case Identity: return "id" + dom.str();
    case Level: return "f_" + std::to_string(n);
    case Tree: {
      std::string out = "f_(";
      for (std::size_t i = 0; i < tree_s.size(); ++i)
        out += (i ? "," : "") + std::to_string(tree_s[i]);
      return out + ")";
    }
    case Shuffle: return "h_" + std::to_string(n);
    case Restrict: return inner->str() + "|" + dom.str();
    case Inverse: return inner->str() + "^-1";
  }
  return "?";
}

std::vector<std::uint64_t> modified_coords(const MapDesc& f) {
  switch (f.kind) {
    case MapDesc::Identity: return {};
    case MapDesc::Level: return {f.n};
    case MapDesc::Tree: {
      std::vector<std::uint64_t> out;
      for (std::size_t i = 1; i <= f.tree_s.size(); ++i)
        out.push_back(encode_index({f.tree_s.begin(), f.tree_s.begin() + i}));
      return out;
    }
    case MapDesc::Shuffle: throw DomainError("shuffle has infinitely many modified coordinates");
    case MapDesc::Restrict:
    case MapDesc::Inverse: return modified_coords(*f.inner);
  }
  return {};
}

namespace {

bool shuffle_mod(std::uint64_t k, std::uint64_t n) {
  std::uint64_t block = std::uint64_t(1) << n;
  return (k + 1) % block == 0;
}

std::uint64_t shuffle_src(std::uint64_t k, std::uint64_t n) {
  std::uint64_t block = std::uint64_t(1) << n;
  std::uint64_t q = (k + 1) >> n;
  return 2 * block * q - block - 1;
}

Nat rewrite_letter(const Word& original, std::uint64_t p) {
  Word pre = prefix(original, p);
  pre.emplace_back(1);
  return encode_word(pre);
}

// How N_u sits inside a clopen set: fully, partially, or not at all.
enum class CylFit { Inside, Outside, Partial };

CylFit cylinder_fit(const Word& u, const ClopenSet& c, const Limits& lim) {
  ClopenSet cu = cylinder(c.amb, u);
  if (!nonempty_meet(cu, c, lim)) return CylFit::Outside;
  if (static_cast<int>(u.size()) >= c.depth) return CylFit::Inside;  // prefix matched a cell
  if (!c.amb.enumerable()) return CylFit::Partial;
  return subset(cu, c, lim) ? CylFit::Inside : CylFit::Partial;
}

const Limits& apply_lim() {
  static Limits lim;
  return lim;
}

ApplyResult apply_prefix_inverse(const MapDesc& f, const Word& u);

}  // namespace

ApplyResult apply_prefix(const MapDesc& f, const Word& u) {
  switch (f.kind) {
    case MapDesc::Identity: {
      switch (cylinder_fit(u, f.dom, apply_lim())) {
        case CylFit::Inside: return {ApplyStatus::Ok, u};
        case CylFit::Outside: return {ApplyStatus::OutsideDomain, {}};
        case CylFit::Partial: return {ApplyStatus::Undetermined, {}};
      }
      return {ApplyStatus::Undetermined, {}};
    }
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      if (!mods.empty() && mods.back() >= u.size()) return {ApplyStatus::Undetermined, {}};
      for (std::uint64_t p : mods)
        if (u[p] != Nat(1)) return {ApplyStatus::OutsideDomain, {}};
      Word v = u;
      for (std::uint64_t p : mods) v[p] = rewrite_letter(u, p);
      return {ApplyStatus::Ok, std::move(v)};
    }
    case MapDesc::Shuffle: {
      Word v = u;
      for (std::uint64_t k = 0; k < u.size(); ++k) {
        if (!shuffle_mod(k, f.n)) continue;
        std::uint64_t s = shuffle_src(k, f.n);
        if (s >= u.size()) return {ApplyStatus::Undetermined, {}};
        v[k] = u[s];
      }
      return {ApplyStatus::Ok, std::move(v)};
    }
    case MapDesc::Restrict: {
      switch (cylinder_fit(u, f.dom, apply_lim())) {
        case CylFit::Outside: return {ApplyStatus::OutsideDomain, {}};
        case CylFit::Partial: return {ApplyStatus::Undetermined, {}};
        case CylFit::Inside: break;
      }
      return apply_prefix(*f.inner, u);
    }
    case MapDesc::Inverse: return apply_prefix_inverse(*f.inner, u);
  }
  return {ApplyStatus::Undetermined, {}};
}

namespace {

ApplyResult apply_prefix_inverse(const MapDesc& f, const Word& u) {
  switch (f.kind) {
    case MapDesc::Identity: return apply_prefix(f, u);
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      if (!mods.empty() && mods.back() >= u.size()) return {ApplyStatus::Undetermined, {}};
      Word v = u;
      for (std::uint64_t p : mods) v[p] = Nat(1);
      for (std::uint64_t p : mods)
        if (u[p] != rewrite_letter(v, p)) return {ApplyStatus::OutsideDomain, {}};
      return {ApplyStatus::Ok, std::move(v)};
    }
    case MapDesc::Shuffle: return {ApplyStatus::Undetermined, {}};
    case MapDesc::Restrict: {
      ApplyResult r = apply_prefix_inverse(*f.inner, u);
      if (!r.ok()) return r;
      switch (cylinder_fit(r.out, f.dom, apply_lim())) {
        case CylFit::Inside: return r;
        case CylFit::Outside: return {ApplyStatus::OutsideDomain, {}};
        case CylFit::Partial: return {ApplyStatus::Undetermined, {}};
      }
      return {ApplyStatus::Undetermined, {}};
    }
    case MapDesc::Inverse: return apply_prefix(*f.inner, u);
  }
  return {ApplyStatus::Undetermined, {}};
}

}  // namespace

PointResult apply_point(const MapDesc& f, const PointRep& x) {
  switch (f.kind) {
    case MapDesc::Identity: {
      if (!point_in(x, f.dom)) return {ApplyStatus::OutsideDomain, {}};
      return {ApplyStatus::Ok, x};
    }
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      std::size_t need = x.head.size();
      if (!mods.empty()) need = std::max<std::size_t>(need, mods.back() + 1);
      Word head = x.prefix_word(need);
      for (std::uint64_t p : mods)
        if (head[p] != Nat(1)) return {ApplyStatus::OutsideDomain, {}};
      Word out = head;
      for (std::uint64_t p : mods) out[p] = rewrite_letter(head, p);
      return {ApplyStatus::Ok, PointRep{std::move(out), x.tail}};
    }
    case MapDesc::Shuffle: {
      // Sources sit at or beyond their target, so past the head both sides
      // read the tail and the image is eventually the same constant.
      std::size_t hl = x.head.size();
      Word out;
      out.reserve(hl);
      for (std::uint64_t k = 0; k < hl; ++k)
        out.push_back(shuffle_mod(k, f.n) ? x.at(shuffle_src(k, f.n)) : x.at(k));
      return {ApplyStatus::Ok, PointRep{std::move(out), x.tail}};
    }
    case MapDesc::Restrict: {
      if (!point_in(x, f.dom)) return {ApplyStatus::OutsideDomain, {}};
      return apply_point(*f.inner, x);
    }
    case MapDesc::Inverse: {
      const MapDesc& g = *f.inner;
      switch (g.kind) {
        case MapDesc::Identity:
          return apply_point(g, x);
        case MapDesc::Level:
        case MapDesc::Tree: {
          std::vector<std::uint64_t> mods = modified_coords(g);
          std::size_t len = x.head.size();
          if (!mods.empty()) len = std::max<std::size_t>(len, mods.back() + 1);
          ApplyResult r = apply_prefix_inverse(g, x.prefix_word(len));
          if (!r.ok()) return {r.status, {}};
          return {ApplyStatus::Ok, PointRep{std::move(r.out), x.tail}};
        }
        case MapDesc::Restrict: {
          PointResult r = apply_point(*make_inverse(g.inner), x);
          if (!r.ok()) return r;
          if (!point_in(r.out, g.dom)) return {ApplyStatus::OutsideDomain, {}};
          return r;
        }
        case MapDesc::Inverse:
          return apply_point(*g.inner, x);
        case MapDesc::Shuffle:
          throw DomainError("apply_point: inverse of " + g.str() + " is not single-valued");
      }
      return {ApplyStatus::Undetermined, {}};
    }
  }
  return {ApplyStatus::Undetermined, {}};
}

bool graph_meets(const MapDesc& f, const Word& u, const Word& v, const Ambient& amb,
                 const Limits& lim) {
  if (u.size() != v.size()) throw DomainError("graph_meets: length mismatch");
  if (!word_in_ambient(amb, u, lim) || !word_in_ambient(amb, v, lim)) return false;
  std::uint64_t ell = u.size();
  switch (f.kind) {
    case MapDesc::Identity:
      return u == v && nonempty_meet(cylinder(amb, u), f.dom, lim);
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      for (std::uint64_t p = 0; p < ell; ++p) {
        bool is_mod = std::binary_search(mods.begin(), mods.end(), p);
        if (is_mod) {
          if (u[p] != Nat(1)) return false;
          if (v[p] != rewrite_letter(u, p)) return false;
        } else if (u[p] != v[p]) {
          return false;
        }
      }
      return true;
    }
    case MapDesc::Shuffle: {
      for (std::uint64_t k = 0; k < ell; ++k) {
        if (!shuffle_mod(k, f.n)) {
          if (u[k] != v[k]) return false;
        } else {
          std::uint64_t s = shuffle_src(k, f.n);
          if (s < ell && v[k] != u[s]) return false;
        }
      }
      return true;
    }
    case MapDesc::Restrict:
    case MapDesc::Inverse: {
      if (f.kind == MapDesc::Inverse) return graph_meets(*f.inner, v, u, amb, lim);
      ClopenSet im = image(f, cylinder(amb, u), lim);
      return nonempty_meet(im, cylinder(amb, v), lim);
    }
  }
  return false;
}

namespace {

void push_in_ambient(std::vector<Word>& cells, Word w, const Ambient& amb, const Limits& lim) {
  if (word_in_ambient(amb, w, lim)) cells.push_back(std::move(w));
}

// Enumerates completions of a partially constrained cell over the ambient
// alphabets; positions holding nullopt are free.
void expand_free(const Ambient& amb, std::vector<std::optional<Nat>>& slots, std::size_t i,
                 std::vector<Word>& out, const Limits& lim) {
  if (i == slots.size()) {
    Word w;
    w.reserve(slots.size());
    for (const auto& s : slots) w.push_back(*s);
    out.push_back(std::move(w));
    if (out.size() > lim.cells) throw ResourceError("map image: cell cap exceeded");
    return;
  }
  if (slots[i]) {
    expand_free(amb, slots, i + 1, out, lim);
    return;
  }
  auto ls = letters_at(amb, i, lim);
  if (!ls) throw ResourceError("map image: free coordinate in an unbounded ambient");
  for (const Nat& l : *ls) {
    slots[i] = l;
    expand_free(amb, slots, i + 1, out, lim);
    slots[i] = std::nullopt;
  }
  slots[i] = std::nullopt;
}

}  // namespace

ClopenSet image(const MapDesc& f, const ClopenSet& a, const Limits& lim) {
  switch (f.kind) {
    case MapDesc::Identity: return meet(a, f.dom, lim);
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      int need = a.depth;
      if (!mods.empty()) need = std::max(need, static_cast<int>(mods.back()) + 1);
      ClopenSet r = refine(a, need, lim);
      std::vector<Word> cells;
      for (const Word& c : r.cells) {
        ApplyResult ar = apply_prefix(f, c);
        if (ar.ok()) push_in_ambient(cells, std::move(ar.out), a.amb, lim);
      }
      return make_clopen(a.amb, r.depth, std::move(cells));
    }
    case MapDesc::Shuffle: {
      std::vector<Word> cells;
      for (const Word& c : a.cells) {
        std::vector<std::optional<Nat>> slots(c.size());
        for (std::uint64_t k = 0; k < c.size(); ++k) {
          if (!shuffle_mod(k, f.n)) {
            slots[k] = c[k];
          } else {
            std::uint64_t s = shuffle_src(k, f.n);
            if (s < c.size()) slots[k] = c[s];
          }
        }
        expand_free(a.amb, slots, 0, cells, lim);
      }
      return make_clopen(a.amb, a.depth, std::move(cells));
    }
    case MapDesc::Restrict: return image(*f.inner, meet(a, f.dom, lim), lim);
    case MapDesc::Inverse: return preimage(*f.inner, a, lim);
  }
  throw DomainError("image: unknown map kind");
}

ClopenSet preimage(const MapDesc& f, const ClopenSet& b, const Limits& lim) {
  switch (f.kind) {
    case MapDesc::Identity: return meet(b, f.dom, lim);
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      int need = b.depth;
      if (!mods.empty()) need = std::max(need, static_cast<int>(mods.back()) + 1);
      ClopenSet r = refine(b, need, lim);
      std::vector<Word> cells;
      for (const Word& c : r.cells) {
        ApplyResult ar = apply_prefix_inverse(f, c);
        if (ar.ok()) push_in_ambient(cells, std::move(ar.out), b.amb, lim);
      }
      return make_clopen(b.amb, r.depth, std::move(cells));
    }
    case MapDesc::Shuffle: {
      // Source constraints may reach beyond the cells' depth; materialize
      // deep enough to pin every read coordinate.
      int deep = b.depth;
      for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(b.depth); ++k)
        if (shuffle_mod(k, f.n))
          deep = std::max<int>(deep, static_cast<int>(shuffle_src(k, f.n)) + 1);
      if (deep > lim.depth) throw ResourceError("shuffle preimage: depth cap exceeded");
      std::vector<Word> cells;
      for (const Word& c : b.cells) {
        std::vector<std::optional<Nat>> slots(static_cast<std::size_t>(deep));
        bool consistent = true;
        for (std::uint64_t k = 0; k < c.size() && consistent; ++k) {
          if (!shuffle_mod(k, f.n)) {
            if (slots[k] && *slots[k] != c[k]) consistent = false;
            slots[k] = c[k];
          } else {
            std::uint64_t s = shuffle_src(k, f.n);
            if (slots[s] && *slots[s] != c[k]) consistent = false;
            slots[s] = c[k];
          }
        }
        if (consistent) expand_free(b.amb, slots, 0, cells, lim);
      }
      return make_clopen(b.amb, deep, std::move(cells));
    }
    case MapDesc::Restrict: return meet(preimage(*f.inner, b, lim), f.dom, lim);
    case MapDesc::Inverse: return image(*f.inner, b, lim);
  }
  throw DomainError("preimage: unknown map kind");
}

ClopenSet domain_at(const MapDesc& f, const Ambient& amb, int depth, const Limits& lim) {
  switch (f.kind) {
    case MapDesc::Identity: return refine(meet(whole_space(amb), f.dom, lim),
                                          std::max(depth, f.dom.depth), lim);
    case MapDesc::Level:
    case MapDesc::Tree: {
      std::vector<std::uint64_t> mods = modified_coords(f);
      int need = depth;
      if (!mods.empty()) need = std::max(need, static_cast<int>(mods.back()) + 1);
      ClopenSet all = refine(whole_space(amb), need, lim);
      std::vector<Word> cells;
      for (const Word& c : all.cells) {
        bool ok = true;
        for (std::uint64_t p : mods)
          if (c[p] != Nat(1)) {
            ok = false;
            break;
          }
        if (ok) cells.push_back(c);
      }
      return make_clopen(amb, need, std::move(cells));
    }
    case MapDesc::Shuffle: return refine(whole_space(amb), depth, lim);
    case MapDesc::Restrict:
      return meet(domain_at(*f.inner, amb, depth, lim), f.dom, lim);
    case MapDesc::Inverse: return image_at(*f.inner, amb, depth, lim);
  }
  throw DomainError("domain_at: unknown map kind");
}

ClopenSet image_at(const MapDesc& f, const Ambient& amb, int depth, const Limits& lim) {
  if (f.kind == MapDesc::Inverse) return domain_at(*f.inner, amb, depth, lim);
  if (f.kind == MapDesc::Identity) return domain_at(f, amb, depth, lim);
  return image(f, domain_at(f, amb, depth, lim), lim);
}

std::uint64_t convergence_threshold(const std::vector<std::uint64_t>& parent, SectionTag tag,
                                    std::uint64_t ell) {
  if (tag.kind == SectionTag::S2) {
    if (!parent.empty())
      throw DomainError("convergence_threshold: S2 families converge to the diagonal only");
    return ell;
  }
  if (!in_tree(tag.xi, parent, true))
    throw DomainError("convergence_threshold: parent index is not in the inner tree");
  std::uint64_t n = 0;
  while (true) {
    std::vector<std::uint64_t> child = parent;
    child.push_back(n);
    if (encode_index(child) >= ell) return n;
    ++n;
  }
}

FixedSearchResult composition_fixed_point_search(const std::vector<CompStep>& word, int depth,
                                                 const Ambient& amb, const Limits& lim) {
  ClopenSet all = refine(whole_space(amb), depth, lim);
  FixedSearchResult res;
  std::optional<Word> first_fixed;
  for (const Word& start : all.cells) {
    ++res.checked_cells;
    Word cur = start;
    ApplyStatus status = ApplyStatus::Ok;
    // Rightmost letter acts first.
    for (auto it = word.rbegin(); it != word.rend() && status == ApplyStatus::Ok; ++it) {
      ApplyResult r = it->exp >= 0 ? apply_prefix(*it->map, cur)
                                   : apply_prefix(*make_inverse(it->map), cur);
      status = r.status;
      if (r.ok()) cur = std::move(r.out);
    }
    if (status == ApplyStatus::Undetermined) {
      ++res.inconclusive_cells;
    } else if (status == ApplyStatus::Ok && cur == start) {
      ++res.fixed_cells;
      if (!first_fixed) first_fixed = start;
    }
  }
  if (res.fixed_cells > 0) {
    res.verdict = FixedSearchVerdict::FixedOn;
    res.cell = first_fixed;
  } else if (res.inconclusive_cells > 0) {
    res.verdict = FixedSearchVerdict::Inconclusive;
  } else {
    res.verdict = FixedSearchVerdict::NoFixedCylinder;
  }
  return res;
}

}  // namespace zerodim
