#ifndef HYPERMAPS_DC_HPP
#define HYPERMAPS_DC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/noncrossing.hpp"
#include "hypermaps/spanning.hpp"

namespace hypermaps {

enum class DCKind { deletion, contraction };

struct DCOperation {
  DCKind kind;
  Transposition t;
  bool topological = false;  // filled when the operation is applied
};

struct DCResult {
  Hypermap result;
  bool topological;
  int genus_change;  // 0 when topological, -1 otherwise
};

/// (sigma, alpha) -> (sigma, alpha t) for a transposition t disconnecting
/// alpha. Topological iff t connects alpha^-1 sigma.
inline DCResult hyperdelete(const Hypermap& h, const Transposition& t) {
  if (connects(h.alpha(), t))
    throw precondition_error("NotDisconnecting: t does not disconnect alpha");
  Permutation a = right_mul(h.alpha(), t);
  if (!is_transitive(h.sigma(), a))
    throw precondition_error("Isthmus: deleting t disconnects the hypermap");
  bool topological = connects(h.faces(), t);
  return DCResult{Hypermap(h.sigma(), std::move(a)), topological, topological ? 0 : -1};
}

/// (sigma, alpha) -> (t sigma, t alpha) for a transposition t disconnecting
/// alpha. Topological iff t connects sigma.
inline DCResult hypercontract(const Hypermap& h, const Transposition& t) {
  if (connects(h.alpha(), t))
    throw precondition_error("NotDisconnecting: t does not disconnect alpha");
  Permutation s = left_mul(t, h.sigma());
  Permutation a = left_mul(t, h.alpha());
  if (!is_transitive(s, a))
    throw precondition_error("Disconnects: contracting t disconnects the hypermap");
  bool topological = connects(h.sigma(), t);
  return DCResult{Hypermap(std::move(s), std::move(a)), topological, topological ? 0 : -1};
}

/// The deletion/contraction duality: deleting t in h is the same as
/// contracting t in dual(h), topologicality included.
struct DualityTransport {
  DCResult deleted;
  DCResult contracted_dual;
  bool consistent;
};

inline DualityTransport duality_transport(const Hypermap& h, const Transposition& t) {
  DCResult del = hyperdelete(h, t);
  DCResult con = hypercontract(h.dual(), t);
  bool ok = del.result.dual() == con.result && del.topological == con.topological;
  return DualityTransport{std::move(del), std::move(con), ok};
}

/// Graph of underlying transpositions: vertices are the cycles of sigma,
/// edges are the transpositions of a deletion-contraction process.
struct DCGraph {
  std::vector<Transposition> edges;  // sorted, duplicate-free
};

namespace detail {

/// Per alpha-cycle, edges must form a spanning noncrossing tree on the
/// cycle's support.
inline bool locally_tree_like(const Hypermap& h, const std::vector<Transposition>& edges) {
  auto alpha_cycles = h.alpha().cycles();
  std::vector<int> cycle_of(static_cast<std::size_t>(h.size()), -1);
  std::vector<int> pos(static_cast<std::size_t>(h.size()), -1);
  for (std::size_t c = 0; c < alpha_cycles.size(); ++c)
    for (std::size_t k = 0; k < alpha_cycles[c].size(); ++k) {
      cycle_of[static_cast<std::size_t>(alpha_cycles[c][k])] = static_cast<int>(c);
      pos[static_cast<std::size_t>(alpha_cycles[c][k])] = static_cast<int>(k);
    }
  std::vector<std::vector<std::pair<int, int>>> per_cycle(alpha_cycles.size());
  for (const auto& e : edges) {
    int c = cycle_of[static_cast<std::size_t>(e.i)];
    if (c != cycle_of[static_cast<std::size_t>(e.j)]) return false;
    per_cycle[static_cast<std::size_t>(c)].emplace_back(pos[static_cast<std::size_t>(e.i)],
                                                        pos[static_cast<std::size_t>(e.j)]);
  }
  for (std::size_t c = 0; c < alpha_cycles.size(); ++c) {
    auto& es = per_cycle[c];
    int m = static_cast<int>(alpha_cycles[c].size());
    if (static_cast<int>(es.size()) != m - 1) return false;
    // acyclic + connected
    std::vector<int> comp(static_cast<std::size_t>(m));
    std::iota(comp.begin(), comp.end(), 0);
    for (auto [a, b] : es) {
      if (a > b) std::swap(a, b);
      int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
      if (ca == cb) return false;
      for (auto& x : comp)
        if (x == ca) x = cb;
    }
    // noncrossing in the cycle order
    for (std::size_t u = 0; u < es.size(); ++u)
      for (std::size_t v = u + 1; v < es.size(); ++v) {
        auto [a, b] = es[u];
        auto [c2, d] = es[v];
        if (a > b) std::swap(a, b);
        if (c2 > d) std::swap(c2, d);
        if ((a < c2 && c2 < b && b < d) || (c2 < a && a < d && d < b)) return false;
      }
  }
  return true;
}

/// Goulden-Yong ordering constraint for a candidate contraction set:
/// walking the alpha^-1 cycle from each point, the incident contraction
/// edges come before the incident deletion edges.
inline bool allowable(const Hypermap& h, const std::vector<Transposition>& edges,
                      const std::set<Transposition>& tree) {
  Permutation alpha_inv = h.alpha().inverse();
  std::set<Transposition> all(edges.begin(), edges.end());
  for (int u = 0; u < h.size(); ++u) {
    bool seen_deletion = false;
    for (Point v = alpha_inv(u); v != u; v = alpha_inv(v)) {
      Transposition e(u, v);
      if (!all.count(e)) continue;
      if (tree.count(e)) {
        if (seen_deletion) return false;
      } else {
        seen_deletion = true;
      }
    }
  }
  return true;
}

/// Spanning trees of the vertex graph (cycles of sigma) drawn from the
/// candidate edges, visited in lexicographic order.
template <typename F>
inline void for_each_spanning_tree(const Hypermap& h, const std::vector<Transposition>& edges,
                                   F&& f) {
  auto sigma_cycles = h.sigma().cycles();
  int nv = static_cast<int>(sigma_cycles.size());
  std::vector<int> vertex_of(static_cast<std::size_t>(h.size()), -1);
  for (std::size_t c = 0; c < sigma_cycles.size(); ++c)
    for (Point p : sigma_cycles[c]) vertex_of[static_cast<std::size_t>(p)] = static_cast<int>(c);
  std::vector<std::size_t> usable;
  for (std::size_t k = 0; k < edges.size(); ++k)
    if (vertex_of[static_cast<std::size_t>(edges[k].i)] !=
        vertex_of[static_cast<std::size_t>(edges[k].j)])
      usable.push_back(k);
  std::vector<int> comp(static_cast<std::size_t>(nv));
  std::iota(comp.begin(), comp.end(), 0);
  std::vector<std::size_t> chosen;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (stop) return;
    if (static_cast<int>(chosen.size()) == nv - 1) {
      std::set<Transposition> tree;
      for (std::size_t k : chosen) tree.insert(edges[k]);
      if (f(tree)) stop = true;
      return;
    }
    if (next >= usable.size()) return;
    if (usable.size() - next < static_cast<std::size_t>(nv - 1) - chosen.size()) return;
    const auto& e = edges[usable[next]];
    int a = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(e.i)])];
    int b = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(e.j)])];
    if (a != b) {
      auto saved = comp;
      for (auto& x : comp)
        if (x == a) x = b;
      chosen.push_back(usable[next]);
      rec(next + 1);
      chosen.pop_back();
      comp = saved;
      if (stop) return;
    }
    rec(next + 1);
  };
  rec(0);
}

}  // namespace detail

/// The relation (sigma, alpha) |= G: locally tree-like and possessing an
/// allowable spanning tree.
inline bool validate_dc_graph(const Hypermap& h, const std::vector<Transposition>& edges) {
  std::vector<Transposition> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!detail::locally_tree_like(h, sorted)) return false;
  bool found = false;
  detail::for_each_spanning_tree(h, sorted, [&](const std::set<Transposition>& tree) {
    if (detail::allowable(h, sorted, tree)) {
      found = true;
      return true;
    }
    return false;
  });
  return found;
}

/// The first allowable spanning tree of a valid graph, in the search order
/// of validate_dc_graph.
inline std::optional<std::set<Transposition>> allowable_tree(
    const Hypermap& h, const std::vector<Transposition>& edges) {
  std::optional<std::set<Transposition>> out;
  detail::for_each_spanning_tree(h, edges, [&](const std::set<Transposition>& tree) {
    if (detail::allowable(h, edges, tree)) {
      out = tree;
      return true;
    }
    return false;
  });
  return out;
}

/// All deletion-contraction graphs of h, generated from its spanning
/// hypertrees: gamma = theta^-1, delta = alpha^-1 theta, one noncrossing
/// tree on each cycle of gamma and of delta, drawn in the circular order of
/// the containing alpha-cycle. Deduplicated.
inline std::vector<DCGraph> enumerate_dc_graphs(const Hypermap& h) {
  std::set<std::vector<Transposition>> seen;
  std::vector<int> pos_in_alpha(static_cast<std::size_t>(h.size()), -1);
  std::vector<int> alpha_cycle_of(static_cast<std::size_t>(h.size()), -1);
  auto alpha_cycles = h.alpha().cycles();
  for (std::size_t c = 0; c < alpha_cycles.size(); ++c)
    for (std::size_t k = 0; k < alpha_cycles[c].size(); ++k) {
      pos_in_alpha[static_cast<std::size_t>(alpha_cycles[c][k])] = static_cast<int>(k);
      alpha_cycle_of[static_cast<std::size_t>(alpha_cycles[c][k])] = static_cast<int>(c);
    }
  // support of a gamma/delta cycle in the induced order of its alpha-cycle
  auto induced_support = [&](const std::vector<Point>& cyc) {
    std::vector<Point> sup = cyc;
    std::sort(sup.begin(), sup.end(), [&](Point a, Point b) {
      return pos_in_alpha[static_cast<std::size_t>(a)] < pos_in_alpha[static_cast<std::size_t>(b)];
    });
    return sup;
  };

  for (const auto& s : spanning_unicellular(h, 0)) {
    Permutation gamma = s.theta.inverse();
    Permutation delta = h.alpha().inverse() * s.theta;
    std::vector<std::vector<std::vector<Transposition>>> choices;  // per block
    for (const Permutation* p : {&gamma, &delta}) {
      for (const auto& cyc : p->cycles()) {
        if (cyc.size() < 2) continue;
        auto sup = induced_support(cyc);
        std::vector<std::vector<Transposition>> block_choices;
        for (const auto& tree : noncrossing_trees(static_cast<int>(sup.size()))) {
          std::vector<Transposition> es;
          for (auto [a, b] : tree)
            es.emplace_back(sup[static_cast<std::size_t>(a)], sup[static_cast<std::size_t>(b)]);
          block_choices.push_back(std::move(es));
        }
        choices.push_back(std::move(block_choices));
      }
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
      std::vector<Transposition> edges;
      for (std::size_t k = 0; k < choices.size(); ++k)
        for (const auto& e : choices[k][idx[k]]) edges.push_back(e);
      std::sort(edges.begin(), edges.end());
      seen.insert(std::move(edges));
      std::size_t k = choices.size();
      bool done = choices.empty();
      while (k > 0) {
        --k;
        if (++idx[k] < choices[k].size()) break;
        idx[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
  }
  std::vector<DCGraph> out;
  for (const auto& e : seen) out.push_back(DCGraph{e});
  return out;
}

namespace detail {

/// Orders the edges of a noncrossing spanning tree on a circularly ordered
/// support so that their left-to-right composition equals the support
/// cycle, by the leaf-peeling recursion.
inline void lemma_order_rec(const std::vector<Point>& support,
                            std::vector<std::pair<Point, Point>> edges,
                            std::vector<Transposition>& out) {
  std::size_t m = support.size();
  if (m <= 1) return;
  std::map<Point, int> pos;
  for (std::size_t k = 0; k < m; ++k) pos[support[k]] = static_cast<int>(k);
  std::map<Point, int> degree;
  for (const auto& e : edges) {
    ++degree[e.first];
    ++degree[e.second];
  }
  // rotate so the last support point is a leaf
  int leaf_pos = -1;
  for (std::size_t k = 0; k < m; ++k)
    if (degree[support[k]] == 1) leaf_pos = static_cast<int>(k);
  // take the last leaf in the order so rotation is minimal; any leaf works
  std::vector<Point> rot(support.begin(), support.end());
  std::rotate(rot.begin(), rot.begin() + (leaf_pos + 1) % static_cast<int>(m), rot.end());
  // rot.back() is now the leaf
  Point leaf = rot.back();
  std::pair<Point, Point> leaf_edge{-1, -1};
  for (const auto& e : edges)
    if (e.first == leaf || e.second == leaf) leaf_edge = e;
  Point anchor = leaf_edge.first == leaf ? leaf_edge.second : leaf_edge.first;
  std::map<Point, int> rpos;
  for (std::size_t k = 0; k < m; ++k) rpos[rot[k]] = static_cast<int>(k);
  int ai = rpos[anchor];
  std::vector<Point> left(rot.begin(), rot.begin() + ai + 1);
  std::vector<Point> right(rot.begin() + ai, rot.end() - 1);
  std::vector<std::pair<Point, Point>> left_edges, right_edges;
  for (const auto& e : edges) {
    if (e.first == leaf || e.second == leaf) continue;
    int a = rpos[e.first], b = rpos[e.second];
    if (a <= ai && b <= ai)
      left_edges.push_back(e);
    else
      right_edges.push_back(e);
  }
  lemma_order_rec(left, std::move(left_edges), out);
  out.emplace_back(anchor, leaf);
  lemma_order_rec(right, std::move(right_edges), out);
}

}  // namespace detail

struct DCProcess {
  std::vector<DCOperation> ops;
};

/// Canonical deletion-contraction process for an allowable tree T of a
/// valid graph G: the contractions first, per gamma-cycle in the
/// leaf-recursion order, then the deletions per delta-cycle in the reverse
/// order.
inline DCProcess canonical_process(const Hypermap& h, const DCGraph& g,
                                   const std::set<Transposition>& tree) {
  if (!validate_dc_graph(h, g.edges))
    throw precondition_error("canonical_process: not a deletion-contraction graph");
  std::set<Transposition> edge_set(g.edges.begin(), g.edges.end());
  for (const auto& e : tree)
    if (!edge_set.count(e))
      throw precondition_error("canonical_process: tree edge outside the graph");
  if (!detail::allowable(h, g.edges, tree))
    throw precondition_error("canonical_process: tree is not allowable");
  // tree must span the vertex graph
  {
    auto sigma_cycles = h.sigma().cycles();
    std::vector<int> vertex_of(static_cast<std::size_t>(h.size()), -1);
    for (std::size_t c = 0; c < sigma_cycles.size(); ++c)
      for (Point p : sigma_cycles[c]) vertex_of[static_cast<std::size_t>(p)] = static_cast<int>(c);
    std::vector<int> comp(sigma_cycles.size());
    std::iota(comp.begin(), comp.end(), 0);
    int merges = 0;
    for (const auto& e : tree) {
      int a = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(e.i)])];
      int b = comp[static_cast<std::size_t>(vertex_of[static_cast<std::size_t>(e.j)])];
      if (a == b) throw precondition_error("canonical_process: tree has a cycle");
      for (auto& x : comp)
        if (x == a) x = b;
      ++merges;
    }
    if (merges != static_cast<int>(sigma_cycles.size()) - 1)
      throw precondition_error("canonical_process: tree does not span the vertices");
  }

  // gamma blocks: components of the tree forest inside each alpha-cycle
  std::vector<int> pos_in_alpha(static_cast<std::size_t>(h.size()), -1);
  auto alpha_cycles = h.alpha().cycles();
  for (const auto& c : alpha_cycles)
    for (std::size_t k = 0; k < c.size(); ++k)
      pos_in_alpha[static_cast<std::size_t>(c[k])] = static_cast<int>(k);

  std::vector<int> comp(static_cast<std::size_t>(h.size()));
  std::iota(comp.begin(), comp.end(), 0);
  for (const auto& e : tree) {
    int a = comp[static_cast<std::size_t>(e.i)], b = comp[static_cast<std::size_t>(e.j)];
    for (auto& x : comp)
      if (x == a) x = b;
  }
  DCProcess process;
  // contraction blocks in alpha-cycle order, block by minimum point
  std::map<std::pair<int, Point>, std::vector<Point>> blocks;
  {
    int cyc_idx = 0;
    for (const auto& c : alpha_cycles) {
      std::map<int, std::vector<Point>> by_comp;
      for (Point p : c) by_comp[comp[static_cast<std::size_t>(p)]].push_back(p);
      for (auto& [root, pts] : by_comp) {
        if (pts.size() < 2) continue;
        std::sort(pts.begin(), pts.end(), [&](Point a, Point b) {
          return pos_in_alpha[static_cast<std::size_t>(a)] < pos_in_alpha[static_cast<std::size_t>(b)];
        });
        blocks[{cyc_idx, *std::min_element(pts.begin(), pts.end())}] = pts;
      }
      ++cyc_idx;
    }
  }
  for (const auto& [key, sup] : blocks) {
    std::vector<std::pair<Point, Point>> es;
    for (const auto& e : tree) {
      bool in = false, jn = false;
      for (Point p : sup) {
        if (p == e.i) in = true;
        if (p == e.j) jn = true;
      }
      if (in && jn) es.emplace_back(e.i, e.j);
    }
    std::vector<Transposition> ordered;
    detail::lemma_order_rec(sup, std::move(es), ordered);
    for (const auto& t : ordered)
      process.ops.push_back(DCOperation{DCKind::contraction, t});
  }

  // deletion blocks: delta = alpha^-1 theta where theta has the tree
  // components as cycles
  Permutation theta = Permutation::identity(h.size());
  {
    std::vector<Point> img(static_cast<std::size_t>(h.size()));
    std::iota(img.begin(), img.end(), 0);
    for (const auto& [key, sup] : blocks)
      for (std::size_t k = 0; k < sup.size(); ++k)
        img[static_cast<std::size_t>(sup[k])] = sup[(k + 1) % sup.size()];
    theta = Permutation(img);
  }
  Permutation delta = h.alpha().inverse() * theta;
  std::set<Transposition> dels;
  for (const auto& e : g.edges)
    if (!tree.count(e)) dels.insert(e);
  std::map<std::pair<int, Point>, std::vector<Point>> dblocks;
  {
    std::vector<int> alpha_cycle_of(static_cast<std::size_t>(h.size()), -1);
    int ci = 0;
    for (const auto& c : alpha_cycles) {
      for (Point p : c) alpha_cycle_of[static_cast<std::size_t>(p)] = ci;
      ++ci;
    }
    for (const auto& cyc : delta.cycles()) {
      if (cyc.size() < 2) continue;
      auto sup = cyc;
      std::sort(sup.begin(), sup.end(), [&](Point a, Point b) {
        return pos_in_alpha[static_cast<std::size_t>(a)] < pos_in_alpha[static_cast<std::size_t>(b)];
      });
      dblocks[{alpha_cycle_of[static_cast<std::size_t>(sup[0])],
               *std::min_element(sup.begin(), sup.end())}] = sup;
    }
  }
  std::size_t used = 0;
  for (const auto& [key, sup] : dblocks) {
    std::vector<std::pair<Point, Point>> es;
    for (const auto& e : dels) {
      bool in = false, jn = false;
      for (Point p : sup) {
        if (p == e.i) in = true;
        if (p == e.j) jn = true;
      }
      if (in && jn) es.emplace_back(e.i, e.j);
    }
    if (es.size() != sup.size() - 1)
      throw precondition_error("canonical_process: deletions do not form trees on delta");
    used += es.size();
    std::vector<Transposition> ordered;
    detail::lemma_order_rec(sup, std::move(es), ordered);
    for (auto it = ordered.rbegin(); it != ordered.rend(); ++it)
      process.ops.push_back(DCOperation{DCKind::deletion, *it});
  }
  if (used != dels.size())
    throw precondition_error("canonical_process: stray deletion edges");
  return process;
}

/// One executed step of a process.
struct DCStep {
  DCOperation op;
  int genus_after;
};

struct DCTrace {
  std::vector<DCStep> steps;
  Hypermap final_state;
  int topological_deletions = 0;
  int nontopological_deletions = 0;
  int contractions = 0;
};

/// Runs a process, validating every step; the end state must be a
/// monopole with identity hyperedges.
inline DCTrace run_process(const Hypermap& h, const std::vector<DCOperation>& ops) {
  Hypermap current = h;
  std::vector<DCStep> steps;
  int td = 0, nd = 0, ct = 0;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    try {
      if (ops[k].kind == DCKind::deletion) {
        DCResult r = hyperdelete(current, ops[k].t);
        (r.topological ? td : nd) += 1;
        steps.push_back(DCStep{DCOperation{ops[k].kind, ops[k].t, r.topological},
                               r.result.genus()});
        current = std::move(r.result);
      } else {
        DCResult r = hypercontract(current, ops[k].t);
        if (!r.topological)
          throw precondition_error("non-topological hypercontraction in a process");
        ++ct;
        steps.push_back(DCStep{DCOperation{ops[k].kind, ops[k].t, true}, r.result.genus()});
        current = std::move(r.result);
      }
    } catch (const precondition_error& e) {
      throw precondition_error("step " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  if (current.sigma().cycle_count() != 1)
    throw precondition_error("process did not end at a monopole");
  if (!current.alpha().is_identity())
    throw precondition_error("process did not clear the hyperedges");
  return DCTrace{std::move(steps), std::move(current), td, nd, ct};
}

/// Line-oriented trace: `C (i,j) topo=+ genus=g` per operation.
inline std::string trace_to_string(const DCTrace& trace) {
  std::string out;
  for (const auto& s : trace.steps) {
    out += s.op.kind == DCKind::deletion ? "D" : "C";
    out += " (" + std::to_string(s.op.t.i + 1) + "," + std::to_string(s.op.t.j + 1) + ")";
    out += " topo=";
    out += s.op.topological ? '+' : '-';
    out += " genus=" + std::to_string(s.genus_after) + "\n";
  }
  return out;
}

/// Bivariate polynomial with integer coefficients, coeff[(i,j)] x^i y^j.
using TuttePoly = std::map<std::pair<int, int>, std::int64_t>;

namespace detail {

struct TutteGraph {
  int nv = 0;
  std::vector<std::pair<int, int>> edges;  // ordered by the fixed numbering
};

inline bool tg_connected(const TutteGraph& g) {
  if (g.nv <= 1) return true;
  std::vector<int> comp(static_cast<std::size_t>(g.nv));
  std::iota(comp.begin(), comp.end(), 0);
  for (auto [a, b] : g.edges) {
    int ca = comp[static_cast<std::size_t>(a)], cb = comp[static_cast<std::size_t>(b)];
    if (ca == cb) continue;
    for (auto& x : comp)
      if (x == ca) x = cb;
  }
  for (int v = 1; v < g.nv; ++v)
    if (comp[static_cast<std::size_t>(v)] != comp[0]) return false;
  return true;
}

inline void tutte_rec(TutteGraph g, int xdeg, int ydeg, TuttePoly& poly) {
  while (!g.edges.empty()) {
    auto [a, b] = g.edges.back();
    if (a == b) {  // loop: forced deletion, externally active
      g.edges.pop_back();
      ++ydeg;
      continue;
    }
    TutteGraph del = g;
    del.edges.pop_back();
    if (!tg_connected(del)) {  // bridge: forced contraction, internally active
      g.edges.pop_back();
      for (auto& e : g.edges) {
        if (e.first == b) e.first = a;
        if (e.second == b) e.second = a;
      }
      // relabel the removed vertex away
      for (auto& e : g.edges) {
        if (e.first == g.nv - 1) e.first = b;
        if (e.second == g.nv - 1) e.second = b;
      }
      --g.nv;
      ++xdeg;
      continue;
    }
    // free edge: branch
    tutte_rec(std::move(del), xdeg, ydeg, poly);
    g.edges.pop_back();
    for (auto& e : g.edges) {
      if (e.first == b) e.first = a;
      if (e.second == b) e.second = a;
    }
    for (auto& e : g.edges) {
      if (e.first == g.nv - 1) e.first = b;
      if (e.second == g.nv - 1) e.second = b;
    }
    --g.nv;
  }
  poly[{xdeg, ydeg}] += 1;
}

}  // namespace detail

/// Classical Tutte polynomial of the underlying graph of a map, via
/// deletion-contraction with a fixed edge numbering (the result does not
/// depend on it). edge_order lists edge indices from lowest to highest
/// number; edges are the 2-cycles of alpha sorted by minimum point.
inline TuttePoly tutte_polynomial(const Hypermap& h, const std::vector<int>& edge_order) {
  auto sigma_cycles = h.sigma().cycles();
  std::vector<int> vertex_of(static_cast<std::size_t>(h.size()), -1);
  for (std::size_t c = 0; c < sigma_cycles.size(); ++c)
    for (Point p : sigma_cycles[c]) vertex_of[static_cast<std::size_t>(p)] = static_cast<int>(c);
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : h.alpha().cycles()) {
    if (c.size() == 1)
      throw precondition_error("tutte_polynomial: alpha has a fixed point, not a graph edge");
    if (c.size() > 2) throw precondition_error("tutte_polynomial: not a map");
    edges.emplace_back(vertex_of[static_cast<std::size_t>(c[0])],
                       vertex_of[static_cast<std::size_t>(c[1])]);
  }
  if (edge_order.size() != edges.size())
    throw precondition_error("tutte_polynomial: bad edge numbering");
  detail::TutteGraph g;
  g.nv = static_cast<int>(sigma_cycles.size());
  for (int k : edge_order) g.edges.push_back(edges[static_cast<std::size_t>(k)]);
  TuttePoly poly;
  detail::tutte_rec(std::move(g), 0, 0, poly);
  return poly;
}

inline TuttePoly tutte_polynomial(const Hypermap& h) {
  std::size_t m = 0;
  for (const auto& c : h.alpha().cycles())
    if (c.size() == 2) ++m;
    else if (c.size() > 2) throw precondition_error("tutte_polynomial: not a map");
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  return tutte_polynomial(h, order);
}

inline std::int64_t tutte_eval_11(const TuttePoly& p) {
  std::int64_t s = 0;
  for (const auto& [k, v] : p) s += v;
  return s;
}

inline std::string tutte_to_string(const TuttePoly& p) {
  std::string out;
  for (const auto& [k, v] : p)
    out += "x^" + std::to_string(k.first) + " y^" + std::to_string(k.second) + ": " +
           std::to_string(v) + "\n";
  return out;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_DC_HPP
