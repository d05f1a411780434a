#pragma once

#include <string>
#include <string_view>

#include "feuerbach/triangle.hpp"

namespace feuerbach {

enum class Layer : unsigned {
  Triangle = 1u << 0,
  Circumcircle = 1u << 1,
  NinePoint = 1u << 2,
  Incircle = 1u << 3,
  Excircles = 1u << 4,
  TangencyPoints = 1u << 5,
  Labels = 1u << 6,
};

inline constexpr unsigned kAllLayers = 0x7f;

/// Parses a comma-separated list such as "triangle,ninepoint". Accepted names:
/// triangle, circumcircle, ninepoint, incircle, excircles, tangency_points,
/// labels, all. Throws InvalidArgument.
unsigned parse_layers(std::string_view csv);

struct RenderOptions {
  unsigned layers = kAllLayers;
  int width_px = 800;
  double margin_fraction = 0.05;

  bool has(Layer l) const { return (layers & static_cast<unsigned>(l)) != 0; }
};

/// SVG 1.1 figure of the triangle with its circumcircle, nine-point circle,
/// incircle, excircles and nine-point tangency points, in the canonical
/// placement (B at the origin, C on the positive x-axis, A above).
///
/// Output is byte-deterministic: fixed element and attribute order, every
/// coordinate printed with exactly six decimals. The only line that varies
/// across library versions is the leading "<!-- feuerbach ... -->" comment.
std::string render_svg(const Triangle& t, const RenderOptions& opts = {});

/// Drops XML comments, for comparing against golden files.
std::string strip_xml_comments(std::string_view svg);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace feuerbach
