#pragma once

#include <string>

#include "mstp/model.hpp"

namespace mstp {

/// Standalone SVG: tree edges as lines, terminals as filled circles, Steiner
/// nodes as hollow squares; viewBox is the node bounding box plus a 5% margin.
/// Every node of `net` is drawn; only `tree` edges are.
std::string svg_document(const Network& net, const EdgeSet& tree);

void render_svg(const Network& net, const EdgeSet& tree, const std::string& path);

} // namespace mstp
