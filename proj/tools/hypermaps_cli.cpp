// Command-line surface over the hypermaps library: genus, transforms,
// spanning counts and enumeration, tours, deletion-contraction graphs and
// processes, Tutte polynomials, meander/semimeander counts, reciprocal
// tree machinery and diagram export.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypermaps/dc.hpp"
#include "hypermaps/io.hpp"
#include "hypermaps/meander.hpp"
#include "hypermaps/rtree.hpp"
#include "hypermaps/spanning.hpp"

using namespace hypermaps;

namespace {

Hypermap load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hypermap_file(ss.str()).to_hypermap();
}

std::vector<Transposition> parse_edges(const std::string& text, int n) {
  std::vector<Transposition> out;
  // "(1,2)(1,3)" as a list of pairs; points may repeat across pairs
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    if (cleaned[pos] != '(') throw parse_error("edges: expected '('");
    auto close = cleaned.find(')', pos);
    if (close == std::string::npos) throw parse_error("edges: unclosed pair");
    std::string body = cleaned.substr(pos + 1, close - pos - 1);
    auto comma = body.find(',');
    if (comma == std::string::npos) throw parse_error("edges: expected (i,j)");
    int i = std::stoi(body.substr(0, comma));
    int j = std::stoi(body.substr(comma + 1));
    if (i < 1 || j < 1 || i > n || j > n) throw parse_error("edges: point out of range");
    out.emplace_back(i - 1, j - 1);
    pos = close + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string edges_to_string(const std::vector<Transposition>& edges) {
  std::string s;
  for (const auto& e : edges)
    s += "(" + std::to_string(e.i + 1) + "," + std::to_string(e.j + 1) + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypermaps: spanning hypertrees, tours and meanders"};
  app.require_subcommand(1);

  std::string file, op = "dual", method = "brute", kind = "face", format = "json";
  std::string edges_text, trace_path, theta_text, gamma_text, out_path;
  int genus_opt = 0, order = 1;
  bool semi = false, list_flag = false, use_oracle = false;

  auto* c_genus = app.add_subcommand("genus", "print the genus of a hypermap file");
  c_genus->add_option("file", file)->required();

  auto* c_transform = app.add_subcommand("transform", "print a transformed hypermap");
  c_transform->add_option("--op", op)
      ->check(CLI::IsMember({"dual", "reciprocal", "hyperdual", "mirror", "kreweras"}));
  c_transform->add_option("file", file)->required();

  auto* c_count = app.add_subcommand("count", "count spanning genus-g unicellular hypermaps");
  c_count->add_option("--genus", genus_opt);
  c_count->add_option("--method", method)->check(CLI::IsMember({"brute", "recursion"}));
  c_count->add_option("file", file)->required();

  auto* c_enum = app.add_subcommand("enumerate", "list spanning genus-g unicellular hypermaps");
  c_enum->add_option("--genus", genus_opt);
  c_enum->add_option("file", file)->required();

  auto* c_tours = app.add_subcommand("tours", "list the face or vertex tour set");
  c_tours->add_option("--kind", kind)->check(CLI::IsMember({"face", "vertex"}));
  c_tours->add_option("file", file)->required();

  auto* c_dc = app.add_subcommand("dc", "deletion-contraction graphs and processes");
  c_dc->require_subcommand(1);
  auto* c_dc_validate = c_dc->add_subcommand("validate", "test the |= relation for --edges");
  c_dc_validate->add_option("--edges", edges_text)->required();
  c_dc_validate->add_option("file", file)->required();
  auto* c_dc_enum = c_dc->add_subcommand("enumerate", "list all deletion-contraction graphs");
  c_dc_enum->add_option("file", file)->required();
  auto* c_dc_run = c_dc->add_subcommand("run", "run a canonical process for --edges");
  c_dc_run->add_option("--edges", edges_text)->required();
  c_dc_run->add_option("--trace", trace_path);
  c_dc_run->add_option("file", file)->required();

  auto* c_tutte = app.add_subcommand("tutte", "Tutte polynomial of a map");
  c_tutte->add_option("file", file)->required();

  auto* c_meanders = app.add_subcommand("meanders", "meander and semimeander counts");
  c_meanders->add_option("--order", order)->required();
  c_meanders->add_flag("--semi", semi);
  c_meanders->add_flag("--list", list_flag);
  c_meanders->add_flag("--oracle", use_oracle);

  auto* c_rtree = app.add_subcommand("rtree", "labeled plane trees of reciprocal hypertrees");
  c_rtree->require_subcommand(1);
  auto* c_rtree_enum = c_rtree->add_subcommand("enumerate", "list the coherent labeled trees");
  c_rtree_enum->add_option("file", file)->required();
  auto* c_rtree_reduce = c_rtree->add_subcommand("reduce", "list legal reduction moves of --theta");
  c_rtree_reduce->add_option("--theta", theta_text)->required();
  c_rtree_reduce->add_option("file", file)->required();

  auto* c_diagram = app.add_subcommand("diagram", "emit a diagram");
  c_diagram->add_option("--kind", kind)->check(CLI::IsMember({"one-line", "two-disk", "tree"}));
  c_diagram->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "svg"}));
  c_diagram->add_option("--theta", theta_text);
  c_diagram->add_option("--gamma", gamma_text);
  c_diagram->add_option("--out", out_path);
  c_diagram->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream out;
    if (*c_genus) {
      out << load(file).genus() << "\n";
    } else if (*c_transform) {
      Hypermap h = load(file);
      Hypermap t = op == "dual"        ? h.dual()
                   : op == "reciprocal" ? h.reciprocal()
                   : op == "hyperdual"  ? h.hyperdual()
                   : op == "mirror"     ? h.mirror()
                                        : h.kreweras_dual();
      out << serialize_hypermap(t);
    } else if (*c_count) {
      Hypermap h = load(file);
      out << (method == "brute" ? count_spanning_unicellular(h, genus_opt)
                                : count_via_recursion(h, genus_opt))
          << "\n";
    } else if (*c_enum) {
      Hypermap h = load(file);
      for (const auto& s : spanning_unicellular(h, genus_opt)) out << s.theta.to_string() << "\n";
    } else if (*c_tours) {
      Hypermap h = load(file);
      for (const auto& t : machi_set(h, kind == "face" ? TourKind::face : TourKind::vertex))
        out << t.to_string() << "\n";
    } else if (*c_dc_validate) {
      Hypermap h = load(file);
      out << (validate_dc_graph(h, parse_edges(edges_text, h.size())) ? "true" : "false") << "\n";
    } else if (*c_dc_enum) {
      Hypermap h = load(file);
      for (const auto& g : enumerate_dc_graphs(h)) out << edges_to_string(g.edges) << "\n";
    } else if (*c_dc_run) {
      Hypermap h = load(file);
      DCGraph g{parse_edges(edges_text, h.size())};
      auto tree = allowable_tree(h, g.edges);
      if (!tree) throw precondition_error("no allowable spanning tree for these edges");
      DCTrace trace = run_process(h, canonical_process(h, g, *tree).ops);
      std::string text = trace_to_string(trace);
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path);
        tf << text;
      }
      out << text;
      out << "final sigma = " << trace.final_state.sigma().to_string() << "\n";
    } else if (*c_tutte) {
      out << tutte_to_string(tutte_polynomial(load(file)));
    } else if (*c_meanders) {
      if (list_flag) {
        if (semi) {
          Hypermap h = nested_monopole(order).reciprocal();
          if (use_oracle) {
            for (const auto& f : foldings_oracle(order - 1)) {
              for (std::size_t k = 0; k < f.order.size(); ++k)
                out << (k ? "," : "") << f.order[k];
              out << "\n";
            }
          } else {
            for (const auto& s : spanning_unicellular(h, 0)) {
              StampFolding f = span_to_folding(h, s.theta);
              for (std::size_t k = 0; k < f.order.size(); ++k)
                out << (k ? "," : "") << f.order[k];
              out << "\n";
            }
          }
        } else {
          Hypermap h = parallel_dipole(order).reciprocal();
          std::set<MeanderDiagram> items;
          if (use_oracle) {
            items = meanders_oracle(order);
          } else {
            for (const auto& s : spanning_unicellular(h, 0))
              items.insert(span_to_meander(h, s.theta));
          }
          for (const auto& m : items) {
            nlohmann::json j;
            j["upper"] = m.upper;
            j["lower"] = m.lower;
            out << j.dump() << "\n";
          }
        }
      } else {
        long long c;
        if (use_oracle)
          c = semi ? static_cast<long long>(foldings_oracle(order - 1).size())
                   : static_cast<long long>(meanders_oracle(order).size());
        else
          c = semi ? count_semimeanders(order) : count_meanders(order);
        out << order << "\t" << c << "\n";
      }
    } else if (*c_rtree_enum) {
      Hypermap h = load(file);
      for (const auto& s : spanning_unicellular(h.reciprocal(), 0))
        out << tree_to_text(span_to_tree(h, s.theta));
    } else if (*c_rtree_reduce) {
      Hypermap h = load(file);
      Permutation theta = parse_cycles(theta_text, h.size());
      LabeledPlaneTree t = span_to_tree(h, theta);
      for (const auto& [mv, result] : legal_reduction_moves(h, t)) {
        out << "merge(" << mv.merge_a << "," << mv.merge_b << ") split(" << mv.split_vertex
            << ":" << mv.cut1 << "," << mv.cut2 << ") -> "
            << tree_to_span(h, result).to_string() << "\n";
      }
    } else if (*c_diagram) {
      Hypermap h = load(file);
      std::string text;
      if (kind == "tree") {
        if (theta_text.empty()) {
          auto spans = spanning_unicellular(h.reciprocal(), 0);
          if (spans.empty()) throw precondition_error("no spanning hypertree of the reciprocal");
          theta_text = spans.front().theta.to_string();
        }
        LabeledPlaneTree t = span_to_tree(h, parse_cycles(theta_text, h.size()));
        if (format == "dot")
          text = tree_to_dot(t);
        else if (format == "json") {
          nlohmann::json j;
          j["kind"] = "tree";
          j["text"] = tree_to_text(t);
          j["canonical"] = t.canonical_form();
          text = j.dump(2) + "\n";
        } else {
          text = tree_to_text(t);  // no SVG for trees; the text form
        }
      } else if (kind == "one-line") {
        if (theta_text.empty()) {
          auto spans = spanning_unicellular(h, h.genus());
          if (spans.empty()) throw precondition_error("no spanning structure to draw");
          theta_text = spans.front().theta.to_string();
        }
        OneLineDiagram d = one_line_diagram(h, parse_cycles(theta_text, h.size()));
        if (format == "svg") {
          if (h.genus() != 0) {
            std::cerr << "warning: host genus is positive, emitting JSON data instead\n";
            text = one_line_json(d);
          } else {
            text = one_line_svg(d);
          }
        } else {
          text = one_line_json(d);
        }
      } else {
        Permutation eta = gamma_text.empty()
                              ? [&] {
                                  auto trees = spanning_unicellular(h, 0);
                                  if (trees.empty())
                                    throw precondition_error("no spanning hypertree");
                                  return vertex_tour(h, trees.front().theta.inverse()).cycle;
                                }()
                              : vertex_tour(h, parse_cycles(gamma_text, h.size())).cycle;
        Permutation zeta = theta_text.empty()
                               ? [&] {
                                   auto spans = spanning_unicellular(h, h.genus());
                                   if (spans.empty())
                                     throw precondition_error("no spanning structure");
                                   return spans.front().face_tour;
                                 }()
                               : face_tour(h, parse_cycles(theta_text, h.size())).cycle;
        text = two_disk_json(two_disk_diagram(h, eta, zeta));
      }
      if (!out_path.empty()) {
        std::ofstream of(out_path);
        of << text;
      }
      out << text;
    }
    std::cout << out.str();
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
