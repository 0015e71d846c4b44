#ifndef HYPERMAPS_MEANDER_HPP
#define HYPERMAPS_MEANDER_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/spanning.hpp"

namespace hypermaps {

/// A folding of n-1 stamps: a permutation of {1..n} listed as
/// (pi(1),...,pi(n)) with pi(1)=1 whose upper arcs (2i,2i+1) and lower
/// arcs (2i-1,2i) are noncrossing. Values are stored 1-based.
struct StampFolding {
  std::vector<int> order;

  bool operator<(const StampFolding& o) const { return order < o.order; }
  bool operator==(const StampFolding& o) const { return order == o.order; }

  /// No two upright arches (2i, 2i+1) cross, and no two upside-down
  /// arches (2i-1, 2i) cross. This is the stated meaning of the two
  /// forbidden-sublist conditions; taken literally those patterns only
  /// cover arcs traversed in ascending order, so the arc test is used.
  bool valid() const {
    int n = static_cast<int>(order.size());
    if (n == 0 || order[0] != 1) return false;
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 0; k < n; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    auto crossing = [&](int a, int b, int c, int d) {
      int p1 = std::min(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
      int p2 = std::max(pos[static_cast<std::size_t>(a)], pos[static_cast<std::size_t>(b)]);
      int q1 = std::min(pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(d)]);
      int q2 = std::max(pos[static_cast<std::size_t>(c)], pos[static_cast<std::size_t>(d)]);
      return (p1 < q1 && q1 < p2 && p2 < q2) || (q1 < p1 && p1 < q2 && q2 < p2);
    };
    for (int i = 1; 2 * i + 1 <= n; ++i)
      for (int j = i + 1; 2 * j + 1 <= n; ++j)
        if (crossing(2 * i, 2 * i + 1, 2 * j, 2 * j + 1)) return false;
    for (int i = 1; 2 * i <= n; ++i)
      for (int j = i + 1; 2 * j <= n; ++j)
        if (crossing(2 * i - 1, 2 * i, 2 * j - 1, 2 * j)) return false;
    return true;
  }
};

/// A meander of order n: a pair of noncrossing perfect matchings on the
/// points 1..2n (above and below the line) whose union is one closed loop.
/// Arcs are stored as sorted (a, b) pairs with a < b, lists sorted.
struct MeanderDiagram {
  std::vector<std::pair<int, int>> upper;
  std::vector<std::pair<int, int>> lower;

  bool operator<(const MeanderDiagram& o) const {
    return upper < o.upper || (upper == o.upper && lower < o.lower);
  }
  bool operator==(const MeanderDiagram& o) const {
    return upper == o.upper && lower == o.lower;
  }

  static bool noncrossing(const std::vector<std::pair<int, int>>& arcs) {
    for (std::size_t u = 0; u < arcs.size(); ++u)
      for (std::size_t v = u + 1; v < arcs.size(); ++v) {
        auto [a, b] = arcs[u];
        auto [c, d] = arcs[v];
        if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
      }
    return true;
  }

  /// Both families perfect and noncrossing, union a single loop.
  bool valid() const {
    if (upper.size() != lower.size() || upper.empty()) return false;
    int n2 = static_cast<int>(2 * upper.size());
    std::vector<int> up(static_cast<std::size_t>(n2) + 1, 0), lo(static_cast<std::size_t>(n2) + 1, 0);
    for (auto [a, b] : upper) {
      if (a < 1 || b > n2 || up[static_cast<std::size_t>(a)] || up[static_cast<std::size_t>(b)])
        return false;
      up[static_cast<std::size_t>(a)] = b;
      up[static_cast<std::size_t>(b)] = a;
    }
    for (auto [a, b] : lower) {
      if (a < 1 || b > n2 || lo[static_cast<std::size_t>(a)] || lo[static_cast<std::size_t>(b)])
        return false;
      lo[static_cast<std::size_t>(a)] = b;
      lo[static_cast<std::size_t>(b)] = a;
    }
    for (int x = 1; x <= n2; ++x)
      if (!up[static_cast<std::size_t>(x)] || !lo[static_cast<std::size_t>(x)]) return false;
    if (!noncrossing(upper) || !noncrossing(lower)) return false;
    // walk the loop
    int visited = 0;
    int x = 1;
    do {
      x = up[static_cast<std::size_t>(x)];
      x = lo[static_cast<std::size_t>(x)];
      visited += 2;
    } while (x != 1);
    return visited == n2;
  }

  /// Crossings in the order the loop encounters them, starting at 1 and
  /// leaving along the upper arc.
  std::vector<int> meandric_permutation() const {
    int n2 = static_cast<int>(2 * upper.size());
    std::vector<int> up(static_cast<std::size_t>(n2) + 1, 0), lo(static_cast<std::size_t>(n2) + 1, 0);
    for (auto [a, b] : upper) {
      up[static_cast<std::size_t>(a)] = b;
      up[static_cast<std::size_t>(b)] = a;
    }
    for (auto [a, b] : lower) {
      lo[static_cast<std::size_t>(a)] = b;
      lo[static_cast<std::size_t>(b)] = a;
    }
    std::vector<int> out;
    int x = 1;
    do {
      out.push_back(x);
      int y = up[static_cast<std::size_t>(x)];
      out.push_back(y);
      x = lo[static_cast<std::size_t>(y)];
    } while (x != 1 && static_cast<int>(out.size()) < n2);
    return out;
  }
};

/// Monopole with m nested edges, m given as the integer order = 2m.
/// Even order 2m: vertex (2,4,...,2m,2m-1,2m-3,...,3,1), edges
/// (1,2)(3,4)...(2m-1,2m). Odd order (half-integer m): vertex
/// (2,4,...,2m-1,2m,2m-2,...,3,1), edges (1,2)...(2m-2,2m-1)(2m).
inline Hypermap nested_monopole(int order) {
  if (order < 1) throw precondition_error("nested_monopole: order must be >= 1 (order = 2m)");
  int n = order;
  std::vector<Point> vertex;
  for (int x = 2; x <= n; x += 2) vertex.push_back(x - 1);
  int start_down = n % 2 == 0 ? n - 1 : n;
  for (int x = start_down; x >= 1; x -= 2) vertex.push_back(x - 1);
  std::vector<std::vector<Point>> edges;
  for (int x = 1; x + 1 <= n; x += 2) edges.push_back({x - 1, x});
  Permutation sigma = Permutation::from_cycles(n, {vertex});
  Permutation alpha = Permutation::from_cycles(n, edges);
  return Hypermap(sigma, alpha);
}

/// Dipole with n parallel edges: vertices (1,3,...,2n-1)(2n,2n-2,...,2),
/// edges (2n,1)(2,3)...(2n-2,2n-1).
inline Hypermap parallel_dipole(int n) {
  if (n < 1) throw precondition_error("parallel_dipole: n must be >= 1");
  std::vector<Point> top, bottom;
  for (int x = 1; x <= 2 * n - 1; x += 2) top.push_back(x - 1);
  for (int x = 2 * n; x >= 2; x -= 2) bottom.push_back(x - 1);
  std::vector<std::vector<Point>> edges;
  edges.push_back({2 * n - 1, 0});
  for (int x = 2; x + 1 <= 2 * n - 1; x += 2) edges.push_back({x - 1, x});
  Permutation sigma = Permutation::from_cycles(2 * n, {top, bottom});
  Permutation alpha = Permutation::from_cycles(2 * n, edges);
  return Hypermap(sigma, alpha);
}

inline std::int64_t count_semimeanders(int n) {
  return count_spanning_hypertrees(nested_monopole(n).reciprocal());
}

inline std::int64_t count_meanders(int n) {
  return count_spanning_hypertrees(parallel_dipole(n).reciprocal());
}

/// Exhaustive stamp-folding enumeration: all permutations of {1..k+1}
/// starting with 1 that pass the two sublist tests.
inline std::set<StampFolding> foldings_oracle(int k) {
  int n = k + 1;
  std::vector<int> rest;
  for (int x = 2; x <= n; ++x) rest.push_back(x);
  std::set<StampFolding> out;
  do {
    StampFolding f;
    f.order.push_back(1);
    f.order.insert(f.order.end(), rest.begin(), rest.end());
    if (f.valid()) out.insert(std::move(f));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// All noncrossing perfect matchings of the segment pts: the first point
/// pairs at an odd distance, the two sides pair independently.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_matchings(
    const std::vector<int>& pts) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (pts.empty()) {
    out.push_back({});
    return out;
  }
  for (std::size_t k = 1; k < pts.size(); k += 2) {
    std::vector<int> left(pts.begin() + 1, pts.begin() + static_cast<long>(k));
    std::vector<int> right(pts.begin() + static_cast<long>(k) + 1, pts.end());
    for (const auto& ml : noncrossing_matchings(left))
      for (const auto& mr : noncrossing_matchings(right)) {
        std::vector<std::pair<int, int>> m;
        m.emplace_back(pts[0], pts[k]);
        m.insert(m.end(), ml.begin(), ml.end());
        m.insert(m.end(), mr.begin(), mr.end());
        out.push_back(std::move(m));
      }
  }
  return out;
}

/// Exhaustive meander enumeration: all pairs of noncrossing perfect
/// matchings on 2n points whose union is a single closed loop.
inline std::set<MeanderDiagram> meanders_oracle(int n) {
  std::vector<int> pts;
  for (int x = 1; x <= 2 * n; ++x) pts.push_back(x);
  auto matchings = noncrossing_matchings(pts);
  std::set<MeanderDiagram> out;
  for (const auto& up : matchings)
    for (const auto& lo : matchings) {
      MeanderDiagram m;
      m.upper = up;
      m.lower = lo;
      std::sort(m.upper.begin(), m.upper.end());
      std::sort(m.lower.begin(), m.lower.end());
      if (m.valid()) out.insert(std::move(m));
    }
  return out;
}

/// Reads the single face theta^-1 sigma of a spanning hypertree of the
/// reciprocal of a nested monopole, starting at point 1, as a stamp
/// folding.
inline StampFolding span_to_folding(const Hypermap& h, const Permutation& theta) {
  Tour t = face_tour(h, theta);
  if (genus_of(h.sigma(), theta) != 0)
    throw precondition_error("span_to_folding: not a spanning hypertree");
  StampFolding f;
  for (Point p : t.cycle.cycle_of(0)) f.order.push_back(p + 1);
  return f;
}

/// Reads the face tour of a spanning hypertree of the reciprocal of a
/// dipole as a meander: positions along the tour, upper arcs from the
/// faces, lower arcs from the vertices.
inline MeanderDiagram span_to_meander(const Hypermap& h, const Permutation& theta) {
  Tour t = face_tour(h, theta);
  if (genus_of(h.sigma(), theta) != 0)
    throw precondition_error("span_to_meander: not a spanning hypertree");
  auto order = t.cycle.cycle_of(0);
  int n2 = static_cast<int>(order.size());
  std::vector<int> pos(static_cast<std::size_t>(n2), 0);
  for (int k = 0; k < n2; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k + 1;
  MeanderDiagram m;
  for (const auto& c : h.faces().cycles()) {
    if (c.size() != 2) throw precondition_error("span_to_meander: host faces are not arcs");
    int a = pos[static_cast<std::size_t>(c[0])], b = pos[static_cast<std::size_t>(c[1])];
    m.upper.emplace_back(std::min(a, b), std::max(a, b));
  }
  for (const auto& c : h.sigma().cycles()) {
    if (c.size() != 2) throw precondition_error("span_to_meander: host vertices are not arcs");
    int a = pos[static_cast<std::size_t>(c[0])], b = pos[static_cast<std::size_t>(c[1])];
    m.lower.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(m.upper.begin(), m.upper.end());
  std::sort(m.lower.begin(), m.lower.end());
  return m;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_MEANDER_HPP
