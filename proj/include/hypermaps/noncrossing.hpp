#ifndef HYPERMAPS_NONCROSSING_HPP
#define HYPERMAPS_NONCROSSING_HPP

#include <limits>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/perm.hpp"

namespace hypermaps {

/// Noncrossing partitions of positions {0..m-1} in circular order,
/// enumerated by recursion on the block containing the first position.
/// Blocks are sorted lists of positions; blocks sorted by minimum.
/// The order is deterministic: candidate blocks of the first element in
/// lexicographic order, gap partitions filled in recursively.
namespace detail {

inline void nc_partitions_segment(const std::vector<int>& seg,
                                  std::vector<std::vector<int>>& current,
                                  std::vector<std::vector<std::vector<int>>>& out) {
  if (seg.empty()) {
    out.push_back(current);
    return;
  }
  // Choose the block of seg[0] as a subset of seg containing seg[0];
  // the gaps between consecutive chosen elements are partitioned
  // independently, which is exactly the noncrossing condition.
  // Subsets enumerated by recursion over positions keep the order
  // lexicographic on the block of the first element.
  struct Rec {
    const std::vector<int>& seg;
    std::vector<std::vector<int>>& current;
    std::vector<std::vector<std::vector<int>>>& out;
    std::vector<int> block;
    void go(std::size_t next, std::vector<int> pending_gap,
            std::vector<std::vector<int>> gaps) {
      if (next == seg.size()) {
        gaps.push_back(std::move(pending_gap));
        current.push_back(block);
        // after closing the block, partition each gap independently
        fill_gaps(gaps, 0);
        current.pop_back();
        return;
      }
      // seg[next] joins the block of seg[0]: the pending gap closes.
      block.push_back(seg[next]);
      {
        auto gaps2 = gaps;
        gaps2.push_back(pending_gap);
        go(next + 1, {}, std::move(gaps2));
      }
      block.pop_back();
      // seg[next] stays outside the block.
      pending_gap.push_back(seg[next]);
      go(next + 1, std::move(pending_gap), std::move(gaps));
    }
    void fill_gaps(const std::vector<std::vector<int>>& gaps, std::size_t k) {
      if (k == gaps.size()) {
        out.push_back(current);
        return;
      }
      std::vector<std::vector<std::vector<int>>> sub;
      std::vector<std::vector<int>> tmp;
      nc_partitions_segment(gaps[k], tmp, sub);
      for (const auto& parts : sub) {
        std::size_t before = current.size();
        for (const auto& b : parts) current.push_back(b);
        fill_gaps(gaps, k + 1);
        current.resize(before);
      }
    }
  };
  Rec rec{seg, current, out, {seg[0]}};
  rec.go(1, {}, {});
}

}  // namespace detail

/// All noncrossing partitions of {0..m-1}; C_m of them.
inline std::vector<std::vector<std::vector<int>>> noncrossing_partitions(int m) {
  std::vector<int> seg(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) seg[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  detail::nc_partitions_segment(seg, current, out);
  return out;
}

inline std::uint64_t catalan(int m) {
  std::uint64_t c = 1;
  for (int k = 0; k < m; ++k) {
    if (c > std::numeric_limits<std::uint64_t>::max() / (2 * (2 * static_cast<std::uint64_t>(k) + 1)))
      throw precondition_error("catalan: count overflows 64 bits");
    c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
  }
  return c;
}

/// theta_part permutes exactly the support of the host cycle; true iff its
/// cycles are the blocks of a noncrossing partition of that cycle, each
/// traversed in the induced circular order. Equivalent to the genus-zero
/// monopole condition, computed here on the relabeled support.
inline bool is_noncrossing(const std::vector<Point>& host_cycle, const Permutation& theta_part) {
  int n = theta_part.size();
  int m = static_cast<int>(host_cycle.size());
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < m; ++k) index[static_cast<std::size_t>(host_cycle[static_cast<std::size_t>(k)])] = k;
  std::vector<Point> host_img(static_cast<std::size_t>(m));
  std::vector<Point> part_img(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k)
    host_img[static_cast<std::size_t>(k)] = (k + 1) % m;
  for (int x = 0; x < n; ++x) {
    int ix = index[static_cast<std::size_t>(x)];
    Point y = theta_part(x);
    int iy = index[static_cast<std::size_t>(y)];
    if (ix < 0) {
      if (y != x) throw precondition_error("theta_part moves a point outside the host support");
      continue;
    }
    if (iy < 0) throw precondition_error("theta_part leaves the host support");
    part_img[static_cast<std::size_t>(ix)] = iy;
  }
  Permutation host(std::move(host_img));
  Permutation part(std::move(part_img));
  return genus2x(host, part) == 0;
}

/// theta refines gamma: every gamma-cycle is replaced by a noncrossing
/// partition in its cyclic order. Checked by the two-condition
/// characterization: i and theta(i) share a gamma-cycle for all i, and
/// z(theta^-1 gamma) + z(theta) = n + z(gamma).
inline bool is_refinement(const Permutation& theta, const Permutation& gamma) {
  if (theta.size() != gamma.size()) return false;
  int n = theta.size();
  std::vector<int> cyc(static_cast<std::size_t>(n), -1);
  int c = 0;
  for (const auto& cycle : gamma.cycles()) {
    for (Point x : cycle) cyc[static_cast<std::size_t>(x)] = c;
    ++c;
  }
  for (int x = 0; x < n; ++x)
    if (cyc[static_cast<std::size_t>(x)] != cyc[static_cast<std::size_t>(theta(x))]) return false;
  Permutation q = theta.inverse() * gamma;
  return q.cycle_count() + theta.cycle_count() == n + gamma.cycle_count();
}

/// Deterministic enumeration of all refinements of gamma: the Cartesian
/// product over gamma-cycles of each cycle's noncrossing partitions.
/// Count is the product of Catalan numbers C_{n_i}.
class RefinementRange {
public:
  explicit RefinementRange(const Permutation& gamma) : n_(gamma.size()) {
    for (const auto& cycle : gamma.cycles()) {
      PerCycle pc;
      pc.support = cycle;
      pc.partitions = noncrossing_partitions(static_cast<int>(cycle.size()));
      cycles_.push_back(std::move(pc));
    }
  }

  std::uint64_t count() const {
    std::uint64_t total = 1;
    for (const auto& pc : cycles_) {
      std::uint64_t f = pc.partitions.size();
      if (f && total > std::numeric_limits<std::uint64_t>::max() / f)
        throw precondition_error("refinements: count overflows 64 bits");
      total *= f;
    }
    return total;
  }

  /// Visits every refinement in canonical (odometer) order.
  template <typename F>
  void for_each(F&& f) const {
    std::vector<std::size_t> idx(cycles_.size(), 0);
    std::vector<Point> img(static_cast<std::size_t>(n_));
    for (;;) {
      for (int x = 0; x < n_; ++x) img[static_cast<std::size_t>(x)] = x;
      for (std::size_t k = 0; k < cycles_.size(); ++k) {
        const auto& pc = cycles_[k];
        for (const auto& block : pc.partitions[idx[k]]) {
          for (std::size_t t = 0; t < block.size(); ++t) {
            Point a = pc.support[static_cast<std::size_t>(block[t])];
            Point b = pc.support[static_cast<std::size_t>(block[(t + 1) % block.size()])];
            img[static_cast<std::size_t>(a)] = b;
          }
        }
      }
      f(Permutation(img));
      std::size_t k = cycles_.size();
      while (k > 0) {
        --k;
        if (++idx[k] < cycles_[k].partitions.size()) break;
        idx[k] = 0;
        if (k == 0) return;
      }
      if (cycles_.empty()) return;
    }
  }

  std::vector<Permutation> all() const {
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](const Permutation& p) { out.push_back(p); });
    return out;
  }

private:
  struct PerCycle {
    std::vector<Point> support;
    std::vector<std::vector<std::vector<int>>> partitions;  // over positions
  };
  int n_;
  std::vector<PerCycle> cycles_;
};

inline std::vector<Permutation> refinements(const Permutation& gamma) {
  return RefinementRange(gamma).all();
}

/// Kreweras complement delta = alpha^-1 gamma^-1, the coarsest noncrossing
/// partition compatible with gamma inside alpha; gamma * alpha * delta is
/// the identity. Requires gamma*alpha to be a refinement of alpha.
inline Permutation kreweras_complement(const Permutation& alpha, const Permutation& gamma) {
  if (!is_refinement(gamma * alpha, alpha))
    throw precondition_error("kreweras_complement: gamma*alpha does not refine alpha");
  return alpha.inverse() * gamma.inverse();
}

/// All noncrossing spanning trees on m points in circular order, as edge
/// lists over positions. Small m only; used by the deletion-contraction
/// machinery.
inline std::vector<std::vector<std::pair<int, int>>> noncrossing_trees(int m) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (m <= 1) {
    out.push_back({});
    return out;
  }
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) chords.emplace_back(i, j);
  auto crossing = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
  };
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  // DFS over chords in lexicographic order; standard acyclicity and
  // noncrossing pruning.
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (chosen.size() == static_cast<std::size_t>(m - 1)) {
      out.push_back(chosen);
      return;
    }
    if (next >= chords.size()) return;
    if (chords.size() - next < static_cast<std::size_t>(m - 1) - chosen.size()) return;
    // take chords[next]
    auto e = chords[next];
    bool ok = find(e.first) != find(e.second);
    if (ok)
      for (const auto& c : chosen)
        if (crossing(c, e)) {
          ok = false;
          break;
        }
    if (ok) {
      auto saved = parent;
      parent[static_cast<std::size_t>(find(e.first))] = find(e.second);
      chosen.push_back(e);
      rec(next + 1);
      chosen.pop_back();
      parent = saved;
    }
    rec(next + 1);
  };
  rec(0);
  return out;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_NONCROSSING_HPP
