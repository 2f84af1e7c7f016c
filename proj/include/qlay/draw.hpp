#pragma once

#include <array>
#include <sstream>
#include <string>

#include "qlay/error.hpp"
#include "qlay/layout.hpp"
#include "qlay/poset.hpp"

namespace qlay {

namespace detail {

constexpr std::array<const char*, 12> kQueuePalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};

inline const char* queue_color(int queue_index) {  // 1-based
  return kQueuePalette[(queue_index - 1) % kQueuePalette.size()];
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// Dominance drawing: element at (rank in l1, rank in l2), cover relations as
/// straight segments. Requires realizers.
inline std::string svg_dominance(const Poset& p) {
  if (!p.realizers()) {
    throw Error(ErrorKind::Input, "dominance drawing requires realizers");
  }
  const auto& [l1, l2] = *p.realizers();
  int n = p.size();
  std::vector<int> rank1(n), rank2(n);
  for (int i = 0; i < n; i++) rank1[l1[i]] = i + 1;
  for (int i = 0; i < n; i++) rank2[l2[i]] = i + 1;

  const int cell = 36, margin = 40;
  int side = 2 * margin + (n - 1) * cell;
  auto px = [&](int rank) { return margin + (rank - 1) * cell; };
  auto py = [&](int rank) { return side - margin - (rank - 1) * cell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
      << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
  for (auto [u, v] : cover_graph(p).edges) {
    svg << "  <line x1=\"" << px(rank1[u]) << "\" y1=\"" << py(rank2[u]) << "\" x2=\""
        << px(rank1[v]) << "\" y2=\"" << py(rank2[v])
        << "\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
  }
  for (int u = 0; u < n; u++) {
    svg << "  <circle cx=\"" << px(rank1[u]) << "\" cy=\"" << py(rank2[u])
        << "\" r=\"4\" fill=\"#1f77b4\"/>\n";
    svg << "  <text x=\"" << px(rank1[u]) + 6 << "\" y=\"" << py(rank2[u]) - 6
        << "\" font-size=\"11\" font-family=\"sans-serif\">" << detail::xml_escape(p.name(u))
        << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

/// Arc diagram of a layout: elements on a line in extension order, cover edges
/// as semicircles colored by their queue.
inline std::string svg_arcs(const Layout& layout, const QueueAssignment& qa) {
  int n = static_cast<int>(layout.order().size());
  const int cell = 40, margin = 40;
  int widest = 0;
  for (const auto& edge : layout.edges()) widest = std::max(widest, edge.right - edge.left);
  int height = margin + (widest * cell) / 2 + 60;
  int width_px = 2 * margin + (n - 1) * cell;
  int baseline = height - 40;
  auto px = [&](int position) { return margin + position * cell; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_px << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width_px << " " << height << "\">\n";
  svg << "  <line x1=\"" << px(0) << "\" y1=\"" << baseline << "\" x2=\"" << px(n - 1)
      << "\" y2=\"" << baseline << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  for (std::size_t e = 0; e < layout.edges().size(); e++) {
    const auto& edge = layout.edges()[e];
    int x1 = px(edge.left), x2 = px(edge.right);
    int radius = (x2 - x1) / 2;
    svg << "  <path d=\"M " << x1 << " " << baseline << " A " << radius << " " << radius
        << " 0 0 1 " << x2 << " " << baseline << "\" fill=\"none\" stroke=\""
        << detail::queue_color(qa.queue_of[e]) << "\" stroke-width=\"2\"/>\n";
  }
  for (int i = 0; i < n; i++) {
    int element = layout.order()[i];
    svg << "  <circle cx=\"" << px(i) << "\" cy=\"" << baseline << "\" r=\"3.5\" fill=\"#333333\"/>\n";
    svg << "  <text x=\"" << px(i) << "\" y=\"" << baseline + 18
        << "\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">"
        << detail::xml_escape(layout.poset().name(element)) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

/// Cover graph as a DOT digraph, edges in canonical order.
inline std::string dot_cover_graph(const Poset& p) {
  std::ostringstream dot;
  dot << "digraph covers {\n  rankdir=BT;\n  node [shape=circle, fontsize=11];\n";
  for (const auto& name : p.elements()) {
    dot << "  \"" << name << "\";\n";
  }
  for (auto [u, v] : cover_graph(p).edges) {
    dot << "  \"" << p.name(u) << "\" -> \"" << p.name(v) << "\";\n";
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace qlay
