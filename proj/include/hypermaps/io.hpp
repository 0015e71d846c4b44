#ifndef HYPERMAPS_IO_HPP
#define HYPERMAPS_IO_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypermaps/hypermap.hpp"
#include "hypermaps/rtree.hpp"
#include "hypermaps/spanning.hpp"

namespace hypermaps {

/// The hypermap text file: `n = <int>`, `sigma = <cycles>`,
/// `alpha = <cycles>`, optional `name = <string>`; '#' starts a comment.
struct HypermapFile {
  int n = 0;
  std::string sigma_text;
  std::string alpha_text;
  std::string name;

  Hypermap to_hypermap() const {
    return Hypermap(parse_cycles(sigma_text, n), parse_cycles(alpha_text, n));
  }
};

inline HypermapFile parse_hypermap_file(const std::string& text) {
  HypermapFile f;
  bool have_n = false, have_sigma = false, have_alpha = false;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw parse_error("hypermap file: expected `key = value`, got: " + line);
      continue;
    }
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t\r");
      auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "n") {
      try {
        f.n = std::stoi(value);
      } catch (const std::exception&) {
        throw parse_error("hypermap file: bad n: " + value);
      }
      have_n = true;
    } else if (key == "sigma") {
      f.sigma_text = value;
      have_sigma = true;
    } else if (key == "alpha") {
      f.alpha_text = value;
      have_alpha = true;
    } else if (key == "name") {
      f.name = value;
    } else {
      throw parse_error("hypermap file: unknown key: " + key);
    }
  }
  if (!have_n || !have_sigma || !have_alpha)
    throw parse_error("hypermap file: n, sigma and alpha are all required");
  return f;
}

inline std::string serialize_hypermap(const Hypermap& h, const std::string& name = "") {
  std::string out;
  if (!name.empty()) out += "name = " + name + "\n";
  out += "n = " + std::to_string(h.size()) + "\n";
  out += "sigma = " + h.sigma().to_string() + "\n";
  out += "alpha = " + h.alpha().to_string() + "\n";
  return out;
}

namespace detail {

inline nlohmann::json blocks_json(const std::vector<std::vector<Point>>& blocks) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& b : blocks) {
    nlohmann::json blk = nlohmann::json::array();
    for (Point p : b) blk.push_back(p + 1);
    arr.push_back(blk);
  }
  return arr;
}

}  // namespace detail

inline std::string one_line_json(const OneLineDiagram& d) {
  nlohmann::json j;
  nlohmann::json order = nlohmann::json::array();
  for (Point p : d.order) order.push_back(p + 1);
  j["kind"] = "one-line";
  j["order"] = order;
  j["upper_arcs"] = detail::blocks_json(d.upper);
  j["lower_arcs"] = detail::blocks_json(d.lower);
  return j.dump(2) + "\n";
}

inline std::string two_disk_json(const TwoDiskDiagram& d) {
  nlohmann::json j;
  j["kind"] = "two-disk";
  j["genus"] = d.genus;
  j["eta"] = d.eta.cycle.to_string();
  j["zeta"] = d.zeta.cycle.to_string();
  j["vertex_partition"] = detail::blocks_json(d.vertex_partition);
  j["face_partition"] = detail::blocks_json(d.face_partition);
  j["bipole_edges"] = detail::blocks_json(d.bipole_edges);
  return j.dump(2) + "\n";
}

/// Nested-parenthesis form `label@color(children...)`, rooted at the
/// canonically smallest vertex, children in cyclic order after the
/// parent edge.
inline std::string tree_to_text(const LabeledPlaneTree& t) {
  auto inc = t.incidence();
  // root: vertex whose canonical rotation is smallest
  std::vector<std::string> keys(t.vertices.size());
  for (std::size_t v = 0; v < t.vertices.size(); ++v) {
    auto rot = t.vertices[v].edges;
    if (!rot.empty()) std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end()), rot.end());
    std::string s = std::to_string(t.vertices[v].color) + "@(";
    for (std::size_t k = 0; k < rot.size(); ++k) s += (k ? "," : "") + rot[k].to_string();
    keys[v] = s + ")";
  }
  std::size_t root = 0;
  for (std::size_t v = 1; v < t.vertices.size(); ++v)
    if (keys[v] < keys[root]) root = v;

  std::function<std::string(std::size_t, std::optional<EdgeLabel>)> emit =
      [&](std::size_t v, std::optional<EdgeLabel> in) -> std::string {
    const auto& vert = t.vertices[v];
    std::string s = (in ? in->to_string() : std::string()) + "@" + std::to_string(vert.color) + "(";
    // children in cyclic order starting after the incoming edge
    std::vector<EdgeLabel> order = vert.edges;
    if (in) {
      auto it = std::find(order.begin(), order.end(), *in);
      std::rotate(order.begin(), it, order.end());
      order.erase(order.begin());
    } else if (!order.empty()) {
      std::rotate(order.begin(), std::min_element(order.begin(), order.end()), order.end());
    }
    bool first = true;
    for (const auto& l : order) {
      auto vs = inc.at(l);
      std::size_t child = vs[0] == v ? vs[1] : vs[0];
      if (!first) s += ",";
      first = false;
      s += emit(child, l);
    }
    return s + ")";
  };
  return emit(root, std::nullopt) + "\n";
}

inline std::string tree_to_dot(const LabeledPlaneTree& t) {
  std::string out = "graph tree {\n  node [shape=circle];\n";
  for (std::size_t v = 0; v < t.vertices.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(t.vertices[v].color) +
           "\"];\n";
  auto inc = t.incidence();
  for (const auto& [l, vs] : inc)
    out += "  v" + std::to_string(vs[0]) + " -- v" + std::to_string(vs[1]) + " [label=\"" +
           l.to_string() + "\"];\n";
  out += "}\n";
  return out;
}

/// One-line diagram as SVG: points on a line, face blocks arced above,
/// vertex blocks below. Genus-zero hosts only.
inline std::string one_line_svg(const OneLineDiagram& d) {
  int n = static_cast<int>(d.order.size());
  int step = 40, x0 = 30, y = 150;
  int width = x0 * 2 + step * (n - 1);
  std::vector<int> xpos(static_cast<std::size_t>(n));
  std::vector<int> pos_of(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    xpos[static_cast<std::size_t>(k)] = x0 + step * k;
    pos_of[static_cast<std::size_t>(d.order[static_cast<std::size_t>(k)])] = k;
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"300\" viewBox=\"0 0 " << width << " 300\">\n";
  svg << "<line x1=\"" << x0 - 15 << "\" y1=\"" << y << "\" x2=\"" << width - x0 + 15
      << "\" y2=\"" << y << "\" stroke=\"black\"/>\n";
  auto arcs = [&](const std::vector<std::vector<Point>>& blocks, bool above,
                  const char* color) {
    for (const auto& b : blocks) {
      if (b.size() < 2) continue;
      for (std::size_t k = 0; k < b.size(); ++k) {
        Point p = b[k];
        Point q = b[(k + 1) % b.size()];
        if (b.size() == 2 && k == 1) break;  // one arc per pair
        int xa = xpos[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(p)])];
        int xb = xpos[static_cast<std::size_t>(pos_of[static_cast<std::size_t>(q)])];
        int r = std::abs(xb - xa) / 2;
        svg << "<path d=\"M " << xa << " " << y << " A " << r << " " << r << " 0 0 "
            << (above ? (xa < xb ? 1 : 0) : (xa < xb ? 0 : 1)) << " " << xb << " " << y
            << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
      }
    }
  };
  arcs(d.upper, true, "#1f77b4");
  arcs(d.lower, false, "#d62728");
  for (int k = 0; k < n; ++k) {
    svg << "<circle cx=\"" << xpos[static_cast<std::size_t>(k)] << "\" cy=\"" << y
        << "\" r=\"3\" fill=\"black\"/>\n";
    svg << "<text x=\"" << xpos[static_cast<std::size_t>(k)] - 4 << "\" y=\"" << y + 20
        << "\" font-size=\"12\">" << d.order[static_cast<std::size_t>(k)] + 1 << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hypermaps

#endif  // HYPERMAPS_IO_HPP
