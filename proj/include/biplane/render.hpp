#pragma once

#include <string>

#include "biplane/biplane_test.hpp"

namespace biplane {

struct RenderSpec {
  std::string red = "#d62728";
  std::string blue = "#1f77b4";
  std::string purple = "#7b2d8e";
  double scale = 0;  // SVG units per coordinate unit; 0 fits the drawing into `extent`
  double extent = 800;
  double margin = 20;
  double vertex_radius = 4;
};

/// SVG drawing: edges only in layer1 red and dashed, only in layer2 blue and
/// dotted, in both layers purple and solid. Identical inputs give identical
/// bytes. Throws GeometryError when the layers do not cover g's edges
/// exactly or contain a crossing.
std::string render_svg(const GeometricGraph& g, const BiplaneDecomposition& d, const RenderSpec& spec = {});

/// Adds every edge crossed by no other edge of g to both layers.
BiplaneDecomposition with_shared_edges(const GeometricGraph& g, const BiplaneDecomposition& d);

}  // namespace biplane
