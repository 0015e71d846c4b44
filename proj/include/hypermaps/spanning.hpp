#ifndef HYPERMAPS_SPANNING_HPP
#define HYPERMAPS_SPANNING_HPP

#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/noncrossing.hpp"
#include "hypermaps/perm.hpp"

namespace hypermaps {

/// A unicellular hypermap (sigma, theta) spanning its host: theta refines
/// host.alpha and theta^-1 sigma is circular. A spanning hypertree is the
/// genus-zero case.
struct SpanningStructure {
  Permutation theta;
  int genus;
  Permutation face_tour;  // theta^-1 sigma, a single cycle

  bool is_hypertree() const { return genus == 0; }
};

enum class TourKind { face, vertex };

struct Tour {
  TourKind kind;
  Permutation cycle;
};

/// Every refinement theta of alpha with z(theta^-1 sigma) = 1 and
/// g(sigma, theta) = g, in the canonical refinement order. Unicellularity
/// makes (sigma, theta) transitive by itself.
inline std::vector<SpanningStructure> spanning_unicellular(const Hypermap& h, int g) {
  std::vector<SpanningStructure> out;
  RefinementRange rr(h.alpha());
  rr.for_each([&](const Permutation& theta) {
    Permutation zeta = theta.inverse() * h.sigma();
    if (zeta.cycle_count() != 1) return;
    int g2 = h.size() + 2 - h.sigma().cycle_count() - theta.cycle_count() - 1;
    if (g2 != 2 * g) return;
    out.push_back(SpanningStructure{theta, g, std::move(zeta)});
  });
  return out;
}

inline std::int64_t count_spanning_unicellular(const Hypermap& h, int g) {
  std::int64_t count = 0;
  RefinementRange rr(h.alpha());
  rr.for_each([&](const Permutation& theta) {
    Permutation zeta = theta.inverse() * h.sigma();
    if (zeta.cycle_count() != 1) return;
    int g2 = h.size() + 2 - h.sigma().cycle_count() - theta.cycle_count() - 1;
    if (g2 == 2 * g) ++count;
  });
  return count;
}

inline std::int64_t count_spanning_hypertrees(const Hypermap& h) {
  return count_spanning_unicellular(h, 0);
}

/// Number of genus-g unicellular hypermaps spanning a genus-g hypermap.
inline std::int64_t complexity(const Hypermap& h) {
  return count_spanning_unicellular(h, h.genus());
}

namespace detail {

struct RecursionMemo {
  std::map<std::tuple<std::vector<Point>, std::vector<Point>, int>, std::int64_t> cache;
};

inline std::int64_t count_rec(const Permutation& sigma, const Permutation& alpha, int g,
                              RecursionMemo& memo) {
  if (g < 0) return 0;
  if (!is_transitive(sigma, alpha)) return 0;
  // base case: no hyperedge of length >= 2 left
  const auto alpha_cycles = alpha.cycles();
  const std::vector<Point>* pivot = nullptr;
  for (const auto& c : alpha_cycles)
    if (c.size() >= 2) {
      pivot = &c;
      break;
    }
  if (!pivot) return (sigma.cycle_count() == 1 && g == 0) ? 1 : 0;

  auto key = std::make_tuple(sigma.images(), alpha.images(), g);
  auto hit = memo.cache.find(key);
  if (hit != memo.cache.end()) return hit->second;

  // Decompose over the classes S_1..S_m of the chosen hyperedge
  // (c_1,...,c_m): S_1 deletes (c_1,c_m); S_2 contracts (c_1,c_2); S_k
  // deletes (c_1,c_{k-1}) and contracts (c_1,c_k). Contractions keep the
  // target genus when they merge two vertices and lower it otherwise.
  const std::vector<Point>& c = *pivot;
  int m = static_cast<int>(c.size());
  std::int64_t total = 0;

  {  // S_1
    Permutation a1 = right_mul(alpha, Transposition(c[0], c[static_cast<std::size_t>(m - 1)]));
    total += count_rec(sigma, a1, g, memo);
  }
  for (int k = 2; k <= m; ++k) {
    Transposition contract(c[0], c[static_cast<std::size_t>(k - 1)]);
    Permutation ak = alpha;
    if (k >= 3) ak = right_mul(ak, Transposition(c[0], c[static_cast<std::size_t>(k - 2)]));
    Permutation sk = left_mul(contract, sigma);
    ak = left_mul(contract, ak);
    bool topological = !sigma.same_cycle(contract.i, contract.j);
    total += count_rec(sk, ak, topological ? g : g - 1, memo);
  }

  memo.cache.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

/// The count of spanning genus-g unicellular hypermaps by the
/// deletion-contraction recursion; agrees with the brute-force count.
inline std::int64_t count_via_recursion(const Hypermap& h, int g) {
  detail::RecursionMemo memo;
  return detail::count_rec(h.sigma(), h.alpha(), g, memo);
}

/// zeta = theta^-1 sigma, the single face of a spanning unicellular
/// hypermap (sigma, theta). Lands in C_sigma(sigma, alpha^-1 sigma) when
/// g(sigma, theta) matches the host genus.
inline Tour face_tour(const Hypermap& h, const Permutation& theta) {
  if (!is_refinement(theta, h.alpha()))
    throw precondition_error("face_tour: theta does not refine alpha");
  Permutation zeta = theta.inverse() * h.sigma();
  if (zeta.cycle_count() != 1)
    throw precondition_error("face_tour: (sigma, theta) is not unicellular");
  return Tour{TourKind::face, std::move(zeta)};
}

/// eta = gamma sigma for a spanning hypertree (sigma, gamma^-1).
inline Tour vertex_tour(const Hypermap& h, const Permutation& gamma) {
  Permutation theta = gamma.inverse();
  if (!is_refinement(theta, h.alpha()))
    throw precondition_error("vertex_tour: gamma^-1 does not refine alpha");
  Permutation eta = gamma * h.sigma();
  if (eta.cycle_count() != 1)
    throw precondition_error("vertex_tour: (sigma, gamma^-1) is not unicellular");
  if (genus_of(h.sigma(), theta) != 0)
    throw precondition_error("vertex_tour: (sigma, gamma^-1) is not a hypertree");
  return Tour{TourKind::vertex, std::move(eta)};
}

/// Definition checker for C_sigma(sigma, alpha^-1 sigma): zeta circular,
/// g(sigma, zeta) equal to the host genus, g(alpha^-1 sigma, zeta) = 0.
inline bool in_face_tour_set(const Hypermap& h, const Permutation& zeta) {
  if (!zeta.is_circular()) return false;
  return genus2x(h.sigma(), zeta) == 2 * h.genus() && genus2x(h.faces(), zeta) == 0;
}

/// Definition checker for C_{alpha^-1 sigma}(alpha^-1 sigma, sigma).
inline bool in_vertex_tour_set(const Hypermap& h, const Permutation& eta) {
  if (!eta.is_circular()) return false;
  return genus2x(h.faces(), eta) == 2 * h.genus() && genus2x(h.sigma(), eta) == 0;
}

/// Image of the tour bijections: face mode maps every spanning genus-g
/// unicellular theta to theta^-1 sigma, vertex mode maps every spanning
/// hypertree (sigma, gamma^-1) to gamma sigma.
inline std::set<Permutation> machi_set(const Hypermap& h, TourKind mode) {
  std::set<Permutation> out;
  if (mode == TourKind::face) {
    for (const auto& s : spanning_unicellular(h, h.genus())) out.insert(s.face_tour);
  } else {
    for (const auto& s : spanning_unicellular(h, 0))
      out.insert(s.theta.inverse() * h.sigma());
  }
  return out;
}

/// theta |-> alpha^-1 theta carries spanning unicellular hypermaps of h to
/// spanning unicellular hypermaps of dual(h), with genus sum equal to the
/// host genus.
inline SpanningStructure dual_span(const Hypermap& h, const Permutation& theta) {
  if (!is_refinement(theta, h.alpha()))
    throw precondition_error("dual_span: theta does not refine alpha");
  Permutation zeta = theta.inverse() * h.sigma();
  if (zeta.cycle_count() != 1)
    throw precondition_error("dual_span: (sigma, theta) is not unicellular");
  Permutation dual_theta = h.alpha().inverse() * theta;
  int g = genus_of(h.faces(), dual_theta);
  return SpanningStructure{dual_theta, g, zeta};
}

/// (eta, zeta) is compatible when both lie in their tour sets and
/// (eta, eta zeta^-1) has the genus of the host.
inline bool is_compatible_tours(const Hypermap& h, const Permutation& eta,
                                const Permutation& zeta) {
  if (!eta.is_circular() || !zeta.is_circular())
    throw precondition_error("is_compatible_tours: tours must be circular");
  if (!in_vertex_tour_set(h, eta) || !in_face_tour_set(h, zeta)) return false;
  return genus2x(eta, eta * zeta.inverse()) == 2 * h.genus();
}

/// One-line diagram of a spanning hypertree of a genus-zero hypermap: the
/// points in face-tour order starting at 1, faces as arc blocks above the
/// line, vertices below.
struct OneLineDiagram {
  std::vector<Point> order;                  // zeta starting at point 0
  std::vector<std::vector<Point>> upper;     // cycles of alpha^-1 sigma
  std::vector<std::vector<Point>> lower;     // cycles of sigma
};

inline OneLineDiagram one_line_diagram(const Hypermap& h, const Permutation& theta) {
  Tour t = face_tour(h, theta);
  if (!in_face_tour_set(h, t.cycle))
    throw precondition_error("one_line_diagram: theta's face is not in the tour set");
  OneLineDiagram d;
  d.order = t.cycle.cycle_of(0);
  d.upper = h.faces().cycles();
  d.lower = h.sigma().cycles();
  return d;
}

/// Two-disk diagram data: the vertex tour disk carries the cycles of sigma
/// as a noncrossing partition, the face tour disk the cycles of
/// alpha^-1 sigma, and eta zeta^-1 gives the hyperedges of the bipole
/// between the disks.
struct TwoDiskDiagram {
  Tour eta;
  Tour zeta;
  std::vector<std::vector<Point>> vertex_partition;
  std::vector<std::vector<Point>> face_partition;
  std::vector<std::vector<Point>> bipole_edges;
  int genus = 0;
};

inline TwoDiskDiagram two_disk_diagram(const Hypermap& h, const Permutation& eta,
                                       const Permutation& zeta) {
  if (!is_compatible_tours(h, eta, zeta))
    throw precondition_error("two_disk_diagram: (eta, zeta) is not a compatible pair");
  TwoDiskDiagram d;
  d.eta = Tour{TourKind::vertex, eta};
  d.zeta = Tour{TourKind::face, zeta};
  d.vertex_partition = h.sigma().cycles();
  d.face_partition = h.faces().cycles();
  d.bipole_edges = (eta * zeta.inverse()).cycles();
  d.genus = h.genus();
  return d;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_SPANNING_HPP
