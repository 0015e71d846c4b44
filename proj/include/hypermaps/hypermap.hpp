#ifndef HYPERMAPS_HYPERMAP_HPP
#define HYPERMAPS_HYPERMAP_HPP

#include <numeric>
#include <utility>
#include <vector>

#include "hypermaps/perm.hpp"

namespace hypermaps {

/// True iff the group generated by the listed permutations acts
/// transitively on {0..n-1}. n <= 1 counts as transitive.
inline bool is_transitive(const Permutation& a, const Permutation& b) {
  int n = a.size();
  if (n <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> stack;
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[static_cast<std::size_t>(x)] = y;
  };
  for (int x = 0; x < n; ++x) {
    unite(x, a(x));
    unite(x, b(x));
  }
  int root = find(0);
  for (int x = 1; x < n; ++x)
    if (find(x) != root) return false;
  return true;
}

/// 2g of the pair (vertices, edges) by the cycle-count formula
/// n + 2 - 2g = z(sigma) + z(alpha) + z(alpha^-1 sigma). Meaningful for
/// transitive pairs only.
inline int genus2x(const Permutation& vertices, const Permutation& edges) {
  int n = vertices.size();
  Permutation faces = edges.inverse() * vertices;
  return n + 2 - vertices.cycle_count() - edges.cycle_count() - faces.cycle_count();
}

inline int genus_of(const Permutation& vertices, const Permutation& edges) {
  int g2 = genus2x(vertices, edges);
  assert(g2 >= 0 && g2 % 2 == 0);
  return g2 / 2;
}

/// A validated transitive pair (sigma, alpha). Cycles of sigma are the
/// vertices, cycles of alpha the hyperedges, cycles of alpha^-1 sigma the
/// faces. Immutable; faces and genus are computed once at construction.
class Hypermap {
public:
  Hypermap(Permutation sigma, Permutation alpha)
      : sigma_(std::move(sigma)), alpha_(std::move(alpha)) {
    if (sigma_.size() != alpha_.size())
      throw validation_error("GroundSetMismatch: sigma and alpha act on different sets");
    if (!is_transitive(sigma_, alpha_))
      throw validation_error("NotTransitive: sigma and alpha generate an intransitive group");
    faces_ = alpha_.inverse() * sigma_;
    if (sigma_.size() == 0) {
      genus_ = 0;  // empty hypermap; the cycle-count formula needs n >= 1
      return;
    }
    int g2 = sigma_.size() + 2 - sigma_.cycle_count() - alpha_.cycle_count() -
             faces_.cycle_count();
    assert(g2 >= 0 && g2 % 2 == 0);
    genus_ = g2 / 2;
  }

  int size() const { return sigma_.size(); }
  const Permutation& sigma() const { return sigma_; }
  const Permutation& alpha() const { return alpha_; }
  const Permutation& faces() const { return faces_; }
  int genus() const { return genus_; }

  bool operator==(const Hypermap& o) const { return sigma_ == o.sigma_ && alpha_ == o.alpha_; }
  bool operator<(const Hypermap& o) const {
    return sigma_ < o.sigma_ || (sigma_ == o.sigma_ && alpha_ < o.alpha_);
  }

  /// Every cycle of alpha has length at most 2.
  bool is_map() const {
    for (const auto& c : alpha_.cycles())
      if (c.size() > 2) return false;
    return true;
  }

  bool is_unicellular() const { return faces_.cycle_count() == 1; }

  // The six-fold dual family. All preserve genus; dual, reciprocal,
  // hyperdual and mirror are involutions.
  Hypermap dual() const { return Hypermap(faces_, alpha_.inverse()); }
  Hypermap reciprocal() const { return Hypermap(alpha_, sigma_); }
  Hypermap hyperdual() const { return Hypermap(sigma_.inverse(), sigma_.inverse() * alpha_); }
  Hypermap mirror() const { return Hypermap(sigma_.inverse(), alpha_.inverse()); }
  Hypermap kreweras_dual() const { return Hypermap(sigma_, faces_); }

private:
  Permutation sigma_;
  Permutation alpha_;
  Permutation faces_;
  int genus_ = 0;
};

}  // namespace hypermaps

#endif  // HYPERMAPS_HYPERMAP_HPP
