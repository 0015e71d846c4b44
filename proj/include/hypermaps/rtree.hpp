#ifndef HYPERMAPS_RTREE_HPP
#define HYPERMAPS_RTREE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/noncrossing.hpp"
#include "hypermaps/spanning.hpp"

namespace hypermaps {

/// Edge label j or j' of a vertex-edge labeling; loop edges carry both.
struct EdgeLabel {
  int j = 0;  // 1-based edge number
  bool prime = false;

  bool operator==(const EdgeLabel& o) const { return j == o.j && prime == o.prime; }
  bool operator<(const EdgeLabel& o) const { return j < o.j || (j == o.j && prime < o.prime); }

  std::string to_string() const { return std::to_string(j) + (prime ? "'" : ""); }
};

/// Canonical vertex and edge numbering of a map: sigma-cycles and
/// alpha-cycles numbered by minimum point; every point becomes a pair
/// (vertex number, edge label), the larger point of a loop primed.
struct VertexEdgeLabeling {
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<int> vertex_number;  // per point, 1-based
  std::vector<EdgeLabel> edge_label;
  std::vector<bool> edge_is_loop;  // per edge, 0-based index j-1

  std::pair<int, EdgeLabel> coords(Point p) const {
    return {vertex_number[static_cast<std::size_t>(p)], edge_label[static_cast<std::size_t>(p)]};
  }
};

/// The labeling of a map whose hyperedges all have exactly two points.
inline VertexEdgeLabeling label_map(const Hypermap& h) {
  if (!h.is_map()) throw precondition_error("label_map: not a map");
  VertexEdgeLabeling lab;
  lab.vertex_number.assign(static_cast<std::size_t>(h.size()), 0);
  lab.edge_label.assign(static_cast<std::size_t>(h.size()), EdgeLabel{});
  auto sigma_cycles = h.sigma().cycles();
  for (std::size_t c = 0; c < sigma_cycles.size(); ++c)
    for (Point p : sigma_cycles[c]) lab.vertex_number[static_cast<std::size_t>(p)] = static_cast<int>(c) + 1;
  lab.vertex_count = static_cast<int>(sigma_cycles.size());
  auto alpha_cycles = h.alpha().cycles();
  int j = 0;
  for (const auto& c : alpha_cycles) {
    if (c.size() != 2)
      throw precondition_error("label_map: every edge needs exactly two points");
    ++j;
    bool loop = h.sigma().same_cycle(c[0], c[1]);
    lab.edge_is_loop.push_back(loop);
    Point lo = std::min(c[0], c[1]);
    Point hi = std::max(c[0], c[1]);
    lab.edge_label[static_cast<std::size_t>(lo)] = EdgeLabel{j, false};
    lab.edge_label[static_cast<std::size_t>(hi)] = EdgeLabel{j, loop};
  }
  lab.edge_count = j;
  return lab;
}

/// A plane tree with colored vertices and labeled edges: each vertex
/// carries the cyclic (counterclockwise) order of its incident edge
/// labels. Vertices of color 0 subdivide loop edges.
struct LabeledPlaneTree {
  struct Vertex {
    int color = 0;
    std::vector<EdgeLabel> edges;  // cyclic order
  };
  std::vector<Vertex> vertices;

  /// Rotation-normalized, vertex-order-independent form.
  std::string canonical_form() const {
    std::vector<std::string> parts;
    for (const auto& v : vertices) {
      std::vector<EdgeLabel> rot = v.edges;
      if (!rot.empty()) {
        auto mn = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), mn, rot.end());
      }
      std::string s = std::to_string(v.color) + "@(";
      for (std::size_t k = 0; k < rot.size(); ++k) {
        if (k) s += ',';
        s += rot[k].to_string();
      }
      s += ')';
      parts.push_back(std::move(s));
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += ';';
      out += p;
    }
    return out;
  }

  bool operator==(const LabeledPlaneTree& o) const {
    return canonical_form() == o.canonical_form();
  }
  bool operator<(const LabeledPlaneTree& o) const {
    return canonical_form() < o.canonical_form();
  }

  /// Endpoint pairs per label; every label must occur exactly twice.
  std::map<EdgeLabel, std::vector<std::size_t>> incidence() const {
    std::map<EdgeLabel, std::vector<std::size_t>> inc;
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (const auto& l : vertices[v].edges) inc[l].push_back(v);
    return inc;
  }

  /// Connected and acyclic on its labels.
  bool is_tree() const {
    auto inc = incidence();
    for (const auto& [l, vs] : inc)
      if (vs.size() != 2 || vs[0] == vs[1]) return false;
    if (vertices.empty()) return false;
    if (inc.size() + 1 != vertices.size()) return false;
    std::vector<int> comp(vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    for (const auto& [l, vs] : inc) {
      int a = comp[vs[0]], b = comp[vs[1]];
      if (a == b) return false;
      for (auto& x : comp)
        if (x == a) x = b;
    }
    for (std::size_t v = 1; v < vertices.size(); ++v)
      if (comp[v] != comp[0]) return false;
    return true;
  }
};

/// Spanning hypertree of the reciprocal (alpha, sigma) of the map
/// (sigma, alpha), as the coherently labeled plane tree of centers:
/// one vertex per theta-cycle, one 0-colored vertex per loop edge.
inline LabeledPlaneTree span_to_tree(const Hypermap& h, const Permutation& theta) {
  VertexEdgeLabeling lab = label_map(h);
  if (!is_refinement(theta, h.sigma()))
    throw precondition_error("span_to_tree: theta does not refine sigma");
  if ((theta.inverse() * h.alpha()).cycle_count() != 1)
    throw precondition_error("span_to_tree: (alpha, theta) is not unicellular");
  if (genus_of(h.alpha(), theta) != 0)
    throw precondition_error("span_to_tree: (alpha, theta) is not a hypertree");
  LabeledPlaneTree t;
  for (const auto& cyc : theta.cycles()) {
    LabeledPlaneTree::Vertex v;
    v.color = lab.vertex_number[static_cast<std::size_t>(cyc[0])];
    for (Point p : cyc) v.edges.push_back(lab.edge_label[static_cast<std::size_t>(p)]);
    t.vertices.push_back(std::move(v));
  }
  for (int j = 1; j <= lab.edge_count; ++j)
    if (lab.edge_is_loop[static_cast<std::size_t>(j - 1)]) {
      LabeledPlaneTree::Vertex v;
      v.color = 0;
      v.edges = {EdgeLabel{j, false}, EdgeLabel{j, true}};
      t.vertices.push_back(std::move(v));
    }
  return t;
}

/// Inverse of span_to_tree: reads theta off the colored vertices and
/// validates coherence and unicellularity.
inline Permutation tree_to_span(const Hypermap& h, const LabeledPlaneTree& t) {
  VertexEdgeLabeling lab = label_map(h);
  // point lookup by (color, label)
  std::map<std::pair<int, std::pair<int, int>>, Point> point_at;
  for (Point p = 0; p < h.size(); ++p) {
    auto [vn, el] = lab.coords(p);
    point_at[{vn, {el.j, el.prime ? 1 : 0}}] = p;
  }
  if (!t.is_tree()) throw precondition_error("tree_to_span: not a tree");
  // 0-vertices pair up exactly with the loop edges
  std::set<int> loop_labels_seen;
  std::vector<Point> img(static_cast<std::size_t>(h.size()));
  std::iota(img.begin(), img.end(), 0);
  std::set<Point> used;
  for (const auto& v : t.vertices) {
    if (v.color == 0) {
      if (v.edges.size() != 2 || v.edges[0].j != v.edges[1].j ||
          v.edges[0].prime == v.edges[1].prime)
        throw precondition_error("tree_to_span: bad loop-subdivision vertex");
      int j = v.edges[0].j;
      if (j < 1 || j > lab.edge_count || !lab.edge_is_loop[static_cast<std::size_t>(j - 1)])
        throw precondition_error("tree_to_span: 0-vertex on a non-loop edge");
      if (!loop_labels_seen.insert(j).second)
        throw precondition_error("tree_to_span: duplicate loop vertex");
      continue;
    }
    std::vector<Point> cyc;
    for (const auto& l : v.edges) {
      auto it = point_at.find({v.color, {l.j, l.prime ? 1 : 0}});
      if (it == point_at.end())
        throw precondition_error("tree_to_span: no point with coords (" +
                                 std::to_string(v.color) + "," + l.to_string() + ")");
      if (!used.insert(it->second).second)
        throw precondition_error("tree_to_span: point used twice");
      cyc.push_back(it->second);
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  if (static_cast<int>(used.size()) != h.size())
    throw precondition_error("tree_to_span: not all points covered");
  for (int j = 1; j <= lab.edge_count; ++j)
    if (lab.edge_is_loop[static_cast<std::size_t>(j - 1)] && !loop_labels_seen.count(j))
      throw precondition_error("tree_to_span: missing loop vertex");
  Permutation theta{img};
  if (!is_refinement(theta, h.sigma()))
    throw precondition_error("tree_to_span: incoherent tree");
  if ((theta.inverse() * h.alpha()).cycle_count() != 1)
    throw precondition_error("tree_to_span: (alpha, theta) is not unicellular");
  return theta;
}

/// Splits the sigma-cycle through i and j into the two arcs separated by
/// i and j, keeping the hyperedges. The graph-level vertex splitting of a
/// hypermap; legal when the result remains transitive.
inline Hypermap vertex_split(const Hypermap& h, Point i, Point j) {
  if (i == j || !h.sigma().same_cycle(i, j))
    throw precondition_error("vertex_split: points must share a sigma-cycle");
  Permutation s = left_mul(Transposition(i, j), h.sigma());
  if (!is_transitive(s, h.alpha()))
    throw precondition_error("vertex_split: split disconnects the hypermap");
  return Hypermap(std::move(s), h.alpha());
}

/// All maps reachable from h by sequences of vertex splittings that are
/// trees (unicellular of genus zero); their reciprocals are exactly the
/// spanning hypertrees of reciprocal(h).
inline std::set<Hypermap> reachable_split_trees(const Hypermap& h) {
  std::set<Hypermap> seen;
  std::set<Hypermap> trees;
  std::vector<Hypermap> queue = {h};
  seen.insert(h);
  while (!queue.empty()) {
    Hypermap cur = queue.back();
    queue.pop_back();
    if (cur.genus() == 0 && cur.faces().cycle_count() == 1) trees.insert(cur);
    for (int i = 0; i < cur.size(); ++i)
      for (int j = i + 1; j < cur.size(); ++j) {
        if (!cur.sigma().same_cycle(i, j)) continue;
        try {
          Hypermap next = vertex_split(cur, i, j);
          if (seen.insert(next).second) queue.push_back(next);
        } catch (const precondition_error&) {
        }
      }
  }
  return trees;
}

/// A reduction move: merge two same-colored vertices (their blocks must
/// stay noncrossing), then break the unique created cycle by splitting
/// some vertex's cyclic edge list into two consecutive arcs.
struct ReductionMove {
  std::size_t merge_a = 0, merge_b = 0;  // vertex indices in the input tree
  std::size_t split_vertex = 0;          // index in the merged tree
  std::size_t cut1 = 0, cut2 = 0;        // split into [cut1,cut2) and [cut2,cut1)
};

namespace detail {

/// Merged edge list of two same-color blocks, in the induced order of the
/// host sigma-cycle; empty optional when the merged partition crosses.
inline std::optional<std::vector<EdgeLabel>> merge_blocks(const Hypermap& h,
                                                          const VertexEdgeLabeling& lab,
                                                          const Permutation& theta,
                                                          const LabeledPlaneTree& t,
                                                          std::size_t a, std::size_t b) {
  if (a == b) return std::nullopt;
  const auto& va = t.vertices[a];
  const auto& vb = t.vertices[b];
  if (va.color != vb.color || va.color == 0) return std::nullopt;
  // points of both blocks
  std::set<Point> pts;
  for (const auto& v : {va, vb})
    for (const auto& l : v.edges)
      for (Point p = 0; p < h.size(); ++p)
        if (lab.vertex_number[static_cast<std::size_t>(p)] == v.color &&
            lab.edge_label[static_cast<std::size_t>(p)] == l)
          pts.insert(p);
  // the merged block in induced sigma order
  std::vector<Point> merged;
  for (Point p : h.sigma().cycle_of(*std::min_element(pts.begin(), pts.end())))
    if (pts.count(p)) merged.push_back(p);
  // noncrossing test: theta with the two blocks replaced by the union
  std::vector<Point> img(static_cast<std::size_t>(h.size()));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : theta.cycles()) {
    if (pts.count(cyc[0])) continue;  // replaced below
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[static_cast<std::size_t>(cyc[k])] = cyc[(k + 1) % cyc.size()];
  }
  for (std::size_t k = 0; k < merged.size(); ++k)
    img[static_cast<std::size_t>(merged[k])] = merged[(k + 1) % merged.size()];
  Permutation candidate{img};
  if (!is_refinement(candidate, h.sigma())) return std::nullopt;
  std::vector<EdgeLabel> edges;
  for (Point p : merged) edges.push_back(lab.edge_label[static_cast<std::size_t>(p)]);
  return edges;
}

}  // namespace detail

/// The one-cycle plane graph obtained by merging two same-colored
/// vertices of t; empty when the merged blocks cross. The merged vertex
/// replaces the smaller index.
inline std::optional<LabeledPlaneTree> merge_step(const Hypermap& h, const LabeledPlaneTree& t,
                                                  std::size_t a, std::size_t b) {
  if (a >= t.vertices.size() || b >= t.vertices.size() || a == b) return std::nullopt;
  VertexEdgeLabeling lab = label_map(h);
  Permutation theta = tree_to_span(h, t);
  auto merged_edges = detail::merge_blocks(h, lab, theta, t, a, b);
  if (!merged_edges) return std::nullopt;
  LabeledPlaneTree merged;
  std::size_t lo = std::min(a, b);
  std::size_t hi = std::max(a, b);
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    if (v == hi) continue;
    if (v == lo)
      merged.vertices.push_back({t.vertices[lo].color, *merged_edges});
    else
      merged.vertices.push_back(t.vertices[v]);
  }
  return merged;
}

/// Applies a reduction move; throws IllegalMerge / SplitLeavesCycle /
/// SplitDisconnects when the move is not legal.
inline LabeledPlaneTree reduction_move(const Hypermap& h, const LabeledPlaneTree& t,
                                       const ReductionMove& mv) {
  auto merged = merge_step(h, t, mv.merge_a, mv.merge_b);
  if (!merged) throw precondition_error("IllegalMerge: blocks cannot merge noncrossingly");
  if (mv.split_vertex >= merged->vertices.size())
    throw precondition_error("IllegalMerge: split vertex out of range");
  const auto& w = merged->vertices[mv.split_vertex];
  if (w.color == 0)
    throw precondition_error("IllegalMerge: cannot split a loop-subdivision vertex");
  std::size_t d = w.edges.size();
  if (mv.cut1 >= d || mv.cut2 >= d || mv.cut1 == mv.cut2)
    throw precondition_error("IllegalMerge: bad cut positions");
  LabeledPlaneTree result = *merged;
  std::vector<EdgeLabel> arc1, arc2;
  for (std::size_t k = mv.cut1; k != mv.cut2; k = (k + 1) % d) arc1.push_back(w.edges[k]);
  for (std::size_t k = mv.cut2; k != mv.cut1; k = (k + 1) % d) arc2.push_back(w.edges[k]);
  result.vertices[mv.split_vertex].edges = arc1;
  result.vertices.push_back({w.color, arc2});
  if (!result.is_tree()) {
    auto inc = result.incidence();
    std::vector<int> comp(result.vertices.size());
    std::iota(comp.begin(), comp.end(), 0);
    bool cycle = false;
    for (const auto& [l, vs] : inc) {
      if (vs.size() != 2 || vs[0] == vs[1]) {
        cycle = true;
        break;
      }
      int x = comp[vs[0]], y = comp[vs[1]];
      if (x == y) {
        cycle = true;
        continue;
      }
      for (auto& z : comp)
        if (z == x) z = y;
    }
    if (cycle)
      throw precondition_error("SplitLeavesCycle: the created cycle survives the split");
    throw precondition_error("SplitDisconnects: the split disconnects the graph");
  }
  tree_to_span(h, result);  // validates coherence
  return result;
}

/// Every legal (merge, split) pair from t, with the resulting trees, in
/// deterministic order.
inline std::vector<std::pair<ReductionMove, LabeledPlaneTree>> legal_reduction_moves(
    const Hypermap& h, const LabeledPlaneTree& t) {
  std::vector<std::pair<ReductionMove, LabeledPlaneTree>> out;
  for (std::size_t a = 0; a < t.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < t.vertices.size(); ++b) {
      auto merged = merge_step(h, t, a, b);
      if (!merged) continue;
      for (std::size_t w = 0; w < merged->vertices.size(); ++w) {
        if (merged->vertices[w].color == 0) continue;
        std::size_t d = merged->vertices[w].edges.size();
        for (std::size_t c1 = 0; c1 < d; ++c1)
          for (std::size_t c2 = c1 + 1; c2 < d; ++c2) {
            ReductionMove mv{a, b, w, c1, c2};
            try {
              LabeledPlaneTree r = reduction_move(h, t, mv);
              out.emplace_back(mv, std::move(r));
            } catch (const precondition_error&) {
            }
          }
      }
    }
  return out;
}

/// Labeled-tree count for a loopless map with vertex degrees at most
/// three: distribute each vertex's edge set over copies and count the
/// assignments forming a tree. Independent of the cyclic orders.
inline std::int64_t cubic_count(const Hypermap& h) {
  auto sigma_cycles = h.sigma().cycles();
  std::vector<int> vertex_of(static_cast<std::size_t>(h.size()), -1);
  for (std::size_t c = 0; c < sigma_cycles.size(); ++c) {
    if (sigma_cycles[c].size() > 3)
      throw precondition_error("cubic_count: vertex degree exceeds three");
    for (Point p : sigma_cycles[c]) vertex_of[static_cast<std::size_t>(p)] = static_cast<int>(c);
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& c : h.alpha().cycles()) {
    if (c.size() != 2) throw precondition_error("cubic_count: every edge needs two points");
    int u = vertex_of[static_cast<std::size_t>(c[0])];
    int v = vertex_of[static_cast<std::size_t>(c[1])];
    if (u == v) throw precondition_error("cubic_count: loops are not allowed");
    edges.emplace_back(u, v);
  }
  int nv = static_cast<int>(sigma_cycles.size());
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(nv));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[static_cast<std::size_t>(edges[e].first)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(edges[e].second)].push_back(static_cast<int>(e));
  }
  // set partitions of up to three incident edges
  auto partitions_of = [](const std::vector<int>& items) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == items.size()) {
        out.push_back(cur);
        return;
      }
      // index-based: recursion grows and shrinks cur underneath us
      std::size_t existing = cur.size();
      for (std::size_t bi = 0; bi < existing; ++bi) {
        cur[bi].push_back(items[k]);
        rec(k + 1);
        cur[bi].pop_back();
      }
      cur.push_back({items[k]});
      rec(k + 1);
      cur.pop_back();
    };
    rec(0);
    return out;
  };
  std::vector<std::vector<std::vector<std::vector<int>>>> choices;
  for (int v = 0; v < nv; ++v) choices.push_back(partitions_of(incident[static_cast<std::size_t>(v)]));
  std::int64_t count = 0;
  std::vector<std::size_t> idx(static_cast<std::size_t>(nv), 0);
  for (;;) {
    // build the copy graph: one node per part
    int nodes = 0;
    std::vector<std::pair<int, int>> copy_of_edge(edges.size(), {-1, -1});
    for (int v = 0; v < nv; ++v) {
      for (const auto& part : choices[static_cast<std::size_t>(v)][idx[static_cast<std::size_t>(v)]]) {
        for (int e : part) {
          if (copy_of_edge[static_cast<std::size_t>(e)].first < 0)
            copy_of_edge[static_cast<std::size_t>(e)].first = nodes;
          else
            copy_of_edge[static_cast<std::size_t>(e)].second = nodes;
        }
        ++nodes;
      }
    }
    if (nodes == static_cast<int>(edges.size()) + 1) {
      std::vector<int> comp(static_cast<std::size_t>(nodes));
      std::iota(comp.begin(), comp.end(), 0);
      bool acyclic = true;
      for (const auto& [x, y] : copy_of_edge) {
        int a = comp[static_cast<std::size_t>(x)], b = comp[static_cast<std::size_t>(y)];
        if (a == b) {
          acyclic = false;
          break;
        }
        for (auto& z : comp)
          if (z == a) z = b;
      }
      if (acyclic) ++count;
    }
    int k = nv;
    bool done = nv == 0;
    while (k > 0) {
      --k;
      if (++idx[static_cast<std::size_t>(k)] < choices[static_cast<std::size_t>(k)].size()) break;
      idx[static_cast<std::size_t>(k)] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return count;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_RTREE_HPP
