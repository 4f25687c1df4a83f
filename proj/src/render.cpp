#include "mstp/render.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "mstp/instance.hpp"

namespace mstp {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

} // namespace

std::string svg_document(const Network& net, const EdgeSet& tree) {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  if (net.size() > 0) {
    min_x = min_y = std::numeric_limits<double>::infinity();
    max_x = max_y = -std::numeric_limits<double>::infinity();
    for (const Node& n : net.nodes()) {
      min_x = std::min(min_x, n.x);
      min_y = std::min(min_y, n.y);
      max_x = std::max(max_x, n.x);
      max_y = std::max(max_y, n.y);
    }
  }
  double extent = std::max(max_x - min_x, max_y - min_y);
  if (!(extent > 0.0)) {
    extent = 1.0;
  }
  const double margin = 0.05 * extent;
  const double radius = 0.01 * extent;
  const double stroke = 0.004 * extent;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(min_x - margin) + ' ' + num(min_y - margin) +
         ' ' + num(max_x - min_x + 2 * margin) + ' ' + num(max_y - min_y + 2 * margin) + "\">\n";

  out += "<g stroke=\"#1f4e79\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const EdgeId& e : tree) {
    const Node& a = net.node(e.a);
    const Node& b = net.node(e.b);
    out += "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>\n";
  }
  out += "</g>\n";

  out += "<g fill=\"#000000\">\n";
  for (const Node& n : net.nodes()) {
    if (n.kind == NodeKind::Terminal) {
      out += "<circle cx=\"" + num(n.x) + "\" cy=\"" + num(n.y) + "\" r=\"" + num(radius) + "\"/>\n";
    }
  }
  out += "</g>\n";

  out += "<g fill=\"none\" stroke=\"#c00000\" stroke-width=\"" + num(stroke) + "\">\n";
  for (const Node& n : net.nodes()) {
    if (n.kind == NodeKind::Steiner) {
      out += "<rect x=\"" + num(n.x - radius) + "\" y=\"" + num(n.y - radius) + "\" width=\"" + num(2 * radius) +
             "\" height=\"" + num(2 * radius) + "\"/>\n";
    }
  }
  out += "</g>\n</svg>\n";
  return out;
}

void render_svg(const Network& net, const EdgeSet& tree, const std::string& path) {
  write_text_file(path, svg_document(net, tree));
}

} // namespace mstp
