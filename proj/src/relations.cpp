#include "zerodim/relations.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace zerodim {

namespace {

bool word_less(const Word& a, const Word& b) { return shortlex_cmp(a, b) < 0; }

}  // namespace

std::vector<std::vector<std::uint64_t>> visible_indices(const RelContext& ctx, std::uint64_t ell,
                                                        const Limits& lim) {
  std::vector<std::vector<std::uint64_t>> out;
  out.push_back({});  // the identity index
  if (ctx.tag.kind == SectionTag::S2) {
    for (std::uint64_t n = ctx.exclude_zero ? 1 : 0; n < ell; ++n) out.push_back({n});
    return out;
  }
  // S3: tree words whose code is below ell. The code grows strictly under
  // extension and in the appended letter, so the enumeration is finite.
  std::function<void(std::vector<std::uint64_t>&)> rec = [&](std::vector<std::uint64_t>& w) {
    for (std::uint64_t j = 0;; ++j) {
      w.push_back(j);
      if (encode_index(w) >= ell) {
        w.pop_back();
        return;
      }
      if (in_tree(ctx.tag.xi, w, false)) {
        out.push_back(w);
        rec(w);
      }
      w.pop_back();
      if (out.size() > lim.chain_nodes) throw ResourceError("visible index enumeration cap");
    }
  };
  std::vector<std::uint64_t> w;
  rec(w);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

MapPtr index_map(const RelContext& ctx, const std::vector<std::uint64_t>& w) {
  if (w.empty()) return make_identity(whole_space(ctx.amb));
  if (ctx.tag.kind == SectionTag::S2) {
    if (w.size() != 1) throw DomainError("S2 map indices are single integers");
    return make_level(w[0]);
  }
  if (!in_tree(ctx.tag.xi, w, false)) throw DomainError("map index outside the tree");
  return make_tree(w, SectionTag::S3);
}

bool related_R(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim) {
  if (u.size() != v.size()) throw DomainError("related_R: length mismatch");
  for (const auto& w : visible_indices(ctx, u.size(), lim))
    if (graph_meets(*index_map(ctx, w), u, v, ctx.amb, lim)) return true;
  return false;
}

namespace {

std::optional<std::vector<std::uint64_t>> first_witness(const RelContext& ctx, const Word& u,
                                                        const Word& v, const Limits& lim) {
  for (const auto& w : visible_indices(ctx, u.size(), lim))
    if (graph_meets(*index_map(ctx, w), u, v, ctx.amb, lim)) return w;
  return std::nullopt;
}

}  // namespace

std::uint64_t m_value(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim) {
  auto w = first_witness(ctx, u, v, lim);
  if (!w) throw DomainError("m_value: words are not related");
  return w->size();
}

std::vector<std::uint64_t> minimal_witness(const RelContext& ctx, const Word& u, const Word& v,
                                           const Limits& lim) {
  auto w = first_witness(ctx, u, v, lim);
  if (!w) throw DomainError("minimal_witness: words are not related");
  return *w;
}

std::uint64_t n_value(const RelContext& ctx, const Word& u, const Word& v, const Limits& lim) {
  auto full = first_witness(ctx, u, v, lim);
  if (!full) throw DomainError("n_value: words are not related");
  for (std::uint64_t n = 0; n <= u.size(); ++n) {
    Word pu = prefix(u, n), pv = prefix(v, n);
    auto w = first_witness(ctx, pu, pv, lim);
    if (w && w->size() == full->size()) return n;
  }
  throw DomainError("n_value: no stabilization level");  // unreachable
}

std::vector<Word> neighbors(const RelContext& ctx, const Word& u, const Limits& lim) {
  std::vector<Word> out;
  if (!word_in_ambient(ctx.amb, u, lim)) return out;
  out.push_back(u);
  for (const auto& w : visible_indices(ctx, u.size(), lim)) {
    if (w.empty()) continue;
    MapPtr f = index_map(ctx, w);
    ApplyResult fwd = apply_prefix(*f, u);
    if (fwd.ok() && word_in_ambient(ctx.amb, fwd.out, lim)) out.push_back(fwd.out);
    ApplyResult bwd = apply_prefix(*make_inverse(f), u);
    if (bwd.ok() && word_in_ambient(ctx.amb, bwd.out, lim)) out.push_back(bwd.out);
  }
  std::sort(out.begin(), out.end(), word_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> e_class(const RelContext& ctx, const Word& u, const Limits& lim) {
  std::set<Word, WordLess> seen;
  std::deque<Word> frontier;
  seen.insert(u);
  frontier.push_back(u);
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (const Word& v : neighbors(ctx, cur, lim)) {
      if (seen.insert(v).second) {
        if (seen.size() > lim.class_size) throw ResourceError("e_class: class size cap exceeded");
        frontier.push_back(v);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

namespace {

std::map<Word, std::uint64_t, WordLess> bfs_depths(const RelContext& ctx, const Word& anchor,
                                                   const Limits& lim) {
  std::map<Word, std::uint64_t, WordLess> depth;
  std::deque<Word> frontier;
  depth[anchor] = 0;
  frontier.push_back(anchor);
  while (!frontier.empty()) {
    Word cur = frontier.front();
    frontier.pop_front();
    for (const Word& v : neighbors(ctx, cur, lim)) {
      if (depth.count(v)) continue;
      if (depth.size() >= lim.class_size) throw ResourceError("class BFS cap exceeded");
      depth[v] = depth[cur] + 1;
      frontier.push_back(v);
    }
  }
  return depth;
}

}  // namespace

std::uint64_t dist(const RelContext& ctx, const Word& x, const Word& y, const Limits& lim) {
  auto depth = bfs_depths(ctx, x, lim);
  auto it = depth.find(y);
  if (it == depth.end()) throw DomainError("dist: words are not equivalent");
  return it->second;
}

std::vector<std::vector<Word>> strata(const RelContext& ctx, const Word& anchor,
                                      const Limits& lim) {
  auto depth = bfs_depths(ctx, anchor, lim);
  std::uint64_t maxd = 0;
  for (const auto& [w, d] : depth) maxd = std::max(maxd, d);
  std::vector<std::vector<Word>> out(maxd + 1);
  for (const auto& [w, d] : depth) out[d].push_back(w);
  for (auto& level : out) std::sort(level.begin(), level.end(), word_less);
  return out;
}

std::vector<Word> phi_order(const RelContext& ctx, const Word& anchor, const Limits& lim) {
  std::vector<Word> out;
  for (const auto& level : strata(ctx, anchor, lim))
    out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Word> level_words(const RelContext& ctx, std::uint64_t ell, std::uint64_t base_bound,
                              const Limits& lim) {
  std::vector<Word> out;
  Word cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t i) {
    if (i == ell) {
      out.push_back(cur);
      if (out.size() > lim.chain_nodes) throw ResourceError("word enumeration cap");
      return;
    }
    auto ls = letters_at(ctx.amb, i, lim);
    if (ls) {
      for (const Nat& a : *ls) {
        cur.push_back(a);
        rec(i + 1);
        cur.pop_back();
      }
    } else {
      for (std::uint64_t a = 0; a < base_bound; ++a) {
        cur.emplace_back(a);
        rec(i + 1);
        cur.pop_back();
      }
    }
  };
  rec(0);
  return out;
}

ChainReport check_very_good(const RelContext& ctx, std::uint64_t ell, std::uint64_t chain_bound,
                            std::uint64_t base_bound, const Limits& lim) {
  ChainReport report;
  std::set<Word, WordLess> covered;
  for (const Word& seed : level_words(ctx, ell, base_bound, lim)) {
    if (covered.count(seed)) continue;
    std::vector<Word> cls = e_class(ctx, seed, lim);
    for (const Word& w : cls) covered.insert(w);
    ++report.classes_checked;

    // Adjacency inside the class.
    std::map<Word, std::vector<Word>, WordLess> adj;
    for (const Word& w : cls) {
      std::vector<Word> ns = neighbors(ctx, w, lim);
      ns.erase(std::remove(ns.begin(), ns.end(), w), ns.end());
      adj[w] = std::move(ns);
    }

    // All walks c with no consecutive repeats, |c| <= chain_bound. A walk
    // that closes up with |c| >= 3 must backtrack somewhere.
    std::size_t budget = lim.chain_nodes;
    std::vector<Word> walk;
    std::function<void()> extend = [&]() {
      if (budget-- == 0) throw ResourceError("chain enumeration cap exceeded");
      if (walk.size() >= 3 && walk.front() == walk.back()) {
        ++report.chains_checked;
        bool backtracks = false;
        for (std::size_t i = 0; i + 2 < walk.size(); ++i)
          if (walk[i] == walk[i + 2]) {
            backtracks = true;
            break;
          }
        if (!backtracks) report.counterexamples.push_back(walk);
      }
      if (walk.size() >= chain_bound) return;
      for (const Word& next : adj[walk.back()]) {
        walk.push_back(next);
        extend();
        walk.pop_back();
      }
    };
    for (const Word& start : cls) {
      walk = {start};
      extend();
    }
  }
  return report;
}

CorrectReport check_very_correct(const std::vector<MapPtr>& maps, const Ambient& amb,
                                 std::uint64_t comp_bound, int depth, const Limits& lim) {
  CorrectReport report;
  std::vector<std::pair<std::size_t, int>> word;
  std::function<void()> extend = [&]() {
    if (!word.empty()) {
      ++report.words_checked;
      std::vector<CompStep> steps;
      for (auto [i, e] : word) steps.push_back({maps[i], e});
      FixedSearchResult r = composition_fixed_point_search(steps, depth, amb, lim);
      if (r.verdict == FixedSearchVerdict::FixedOn)
        report.fixed.push_back({word, r});
      else if (r.verdict == FixedSearchVerdict::Inconclusive)
        report.inconclusive.push_back({word, r});
    }
    if (word.size() >= comp_bound) return;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (int e : {1, -1}) {
        // Words with adjacent cancellation are identities by fiat; skip.
        if (!word.empty() && word.back().first == i && word.back().second == -e) continue;
        word.push_back({i, e});
        extend();
        word.pop_back();
      }
    }
  };
  extend();
  return report;
}

}  // namespace zerodim
