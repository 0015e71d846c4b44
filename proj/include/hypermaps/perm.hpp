#ifndef HYPERMAPS_PERM_HPP
#define HYPERMAPS_PERM_HPP

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypermaps {

/// Points are 0-based internally; all text I/O uses the 1-based labels
/// {1..n} of the usual cycle notation.
using Point = int;

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// A bijection of {0..n-1}. Immutable after construction; composition is
/// right-to-left, (p*q)(x) = p(q(x)).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : img_(std::move(images)) {
    validate();
  }

  static Permutation identity(int n) {
    std::vector<Point> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    Permutation p;
    p.img_ = std::move(v);
    return p;
  }

  /// Builds from 0-based cycles; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) {
        Point a = c[k];
        Point b = c[(k + 1) % c.size()];
        if (a < 0 || a >= n) throw parse_error("cycle point out of range");
        if (seen[static_cast<std::size_t>(a)]) throw parse_error("repeated point in cycles");
        seen[static_cast<std::size_t>(a)] = true;
        v[static_cast<std::size_t>(a)] = b;
      }
    }
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(img_.size()); }

  Point operator()(Point x) const {
    assert(x >= 0 && x < size());
    return img_[static_cast<std::size_t>(x)];
  }

  const std::vector<Point>& images() const { return img_; }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw precondition_error("ground-set mismatch in composition");
    std::vector<Point> v(p.img_.size());
    for (std::size_t x = 0; x < v.size(); ++x)
      v[x] = p.img_[static_cast<std::size_t>(q.img_[x])];
    Permutation r;
    r.img_ = std::move(v);
    return r;
  }

  Permutation inverse() const {
    std::vector<Point> v(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x)
      v[static_cast<std::size_t>(img_[x])] = static_cast<Point>(x);
    Permutation r;
    r.img_ = std::move(v);
    return r;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }
  bool operator!=(const Permutation& o) const { return img_ != o.img_; }
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != static_cast<Point>(x)) return false;
    return true;
  }

  /// Canonical cycle decomposition: each cycle starts at its minimum
  /// element, cycles sorted by minimum. Fixed points included.
  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<Point> c;
      Point x = static_cast<Point>(s);
      do {
        c.push_back(x);
        seen[static_cast<std::size_t>(x)] = true;
        x = img_[static_cast<std::size_t>(x)];
      } while (x != static_cast<Point>(s));
      out.push_back(std::move(c));
    }
    return out;
  }

  /// z(p): number of cycles, fixed points included.
  int cycle_count() const {
    int z = 0;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      ++z;
      for (Point x = static_cast<Point>(s); !seen[static_cast<std::size_t>(x)];
           x = img_[static_cast<std::size_t>(x)])
        seen[static_cast<std::size_t>(x)] = true;
    }
    return z;
  }

  bool is_circular() const { return size() >= 1 && cycle_count() == 1; }

  /// The cycle through x, starting at x.
  std::vector<Point> cycle_of(Point x) const {
    std::vector<Point> c;
    Point y = x;
    do {
      c.push_back(y);
      y = img_[static_cast<std::size_t>(y)];
    } while (y != x);
    return c;
  }

  bool same_cycle(Point a, Point b) const {
    if (a == b) return true;
    for (Point x = img_[static_cast<std::size_t>(a)]; x != a; x = img_[static_cast<std::size_t>(x)])
      if (x == b) return true;
    return false;
  }

  std::string to_string(bool with_singletons = false) const;

private:
  void validate() const {
    std::vector<bool> seen(img_.size(), false);
    for (Point v : img_) {
      if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
        throw validation_error("images are not a bijection on {1..n}");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  std::vector<Point> img_;
};

/// A transposition (i,j), normalized so i < j.
struct Transposition {
  Point i;
  Point j;

  Transposition(Point a, Point b) : i(std::min(a, b)), j(std::max(a, b)) {
    if (a == b) throw precondition_error("transposition needs two distinct points");
  }

  bool operator==(const Transposition& o) const { return i == o.i && j == o.j; }
  bool operator<(const Transposition& o) const { return i < o.i || (i == o.i && j < o.j); }

  Permutation as_permutation(int n) const {
    if (j >= n) throw precondition_error("transposition point outside ground set");
    return Permutation::from_cycles(n, {{i, j}});
  }
};

/// t connects p iff i and j lie in different cycles of p (Serret:
/// connecting drops z by one, disconnecting raises it by one, on either
/// side of the product).
inline bool connects(const Permutation& p, const Transposition& t) {
  return !p.same_cycle(t.i, t.j);
}

inline Permutation left_mul(const Transposition& t, const Permutation& p) {
  return t.as_permutation(p.size()) * p;
}

inline Permutation right_mul(const Permutation& p, const Transposition& t) {
  return p * t.as_permutation(p.size());
}

/// Parses whitespace-tolerant cycle notation over {1..n}, e.g.
/// "(1,2,3)(4,5)". Singletons may be listed or omitted; "" is the identity.
inline Permutation parse_cycles(const std::string& text, int n) {
  std::vector<std::vector<Point>> cycles;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw parse_error("expected '(' in cycle notation");
    ++pos;
    std::vector<Point> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw parse_error("expected integer in cycle");
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > n) throw parse_error("point out of range: " + std::to_string(v));
        ++pos;
      }
      if (v < 1) throw parse_error("points are 1-based");
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (pos < text.size() && (text[pos] == ',' || text[pos] == ' ')) {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) throw parse_error("unclosed cycle");
    ++pos;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));  // "()" is the identity
    skip_ws();
  }
  return Permutation::from_cycles(n, cycles);
}

inline std::string Permutation::to_string(bool with_singletons) const {
  std::string out;
  for (const auto& c : cycles()) {
    if (c.size() == 1 && !with_singletons) continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace hypermaps

#endif  // HYPERMAPS_PERM_HPP
