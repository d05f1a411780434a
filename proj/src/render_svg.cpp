#include "feuerbach/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <vector>

#include "feuerbach/embedding.hpp"
#include "feuerbach/identities.hpp"
#include "feuerbach/oracle_compare.hpp"

namespace feuerbach {

unsigned parse_layers(std::string_view csv) {
  unsigned mask = 0;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const auto comma = csv.find(',', pos);
    const auto item = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
    if (item == "triangle") mask |= static_cast<unsigned>(Layer::Triangle);
    else if (item == "circumcircle") mask |= static_cast<unsigned>(Layer::Circumcircle);
    else if (item == "ninepoint") mask |= static_cast<unsigned>(Layer::NinePoint);
    else if (item == "incircle") mask |= static_cast<unsigned>(Layer::Incircle);
    else if (item == "excircles") mask |= static_cast<unsigned>(Layer::Excircles);
    else if (item == "tangency_points") mask |= static_cast<unsigned>(Layer::TangencyPoints);
    else if (item == "labels") mask |= static_cast<unsigned>(Layer::Labels);
    else if (item == "all") mask |= kAllLayers;
    else throw Error(ErrorCode::InvalidArgument, "unknown layer '" + std::string(item) + "'");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return mask;
}

std::string strip_xml_comments(std::string_view svg) {
  std::string out;
  std::size_t pos = 0;
  while (pos < svg.size()) {
    const auto open = svg.find("<!--", pos);
    if (open == std::string_view::npos) {
      out.append(svg.substr(pos));
      break;
    }
    out.append(svg.substr(pos, open - pos));
    const auto close = svg.find("-->", open);
    if (close == std::string_view::npos) break;
    pos = close + 3;
    if (pos < svg.size() && svg[pos] == '\n') ++pos;
  }
  return out;
}

namespace {

// Stroke palette, widths in output pixels.
struct Style {
  const char* stroke;
  double width_px;
};
constexpr Style kTriangleStyle{"#000000", 2.0};
constexpr Style kCircumStyle{"#1f77b4", 1.5};
constexpr Style kNinePointStyle{"#d62728", 2.0};
constexpr Style kIncircleStyle{"#2ca02c", 1.5};
constexpr Style kExcircleStyle{"#9467bd", 1.5};
constexpr const char* kMarkerFill = "#ff7f0e";
constexpr double kMarkerHalfPx = 4.0;
constexpr double kFontPx = 14.0;

// Six decimals; glibc printf rounds the exact binary value, ties to even.
std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct CircleShape {
  const char* css_class;
  Point2 center;
  double radius;
  Style style;
};

struct Box {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  void add(Point2 p, double pad = 0.0) {
    min_x = std::min(min_x, p.x - pad);
    min_y = std::min(min_y, p.y - pad);
    max_x = std::max(max_x, p.x + pad);
    max_y = std::max(max_y, p.y + pad);
  }
  bool empty() const { return min_x > max_x; }
};

}  // namespace

std::string render_svg(const Triangle& t, const RenderOptions& opts) {
  if (opts.width_px <= 0) throw Error(ErrorCode::InvalidArgument, "width must be positive");
  if (!(opts.margin_fraction >= 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "margin fraction must be non-negative");
  }

  const DerivedScalars d = derive(t);
  const Embedding e = embed(t);
  auto place = [&](CenterId id) { return e.to_canonical(realize(coeffs(id, t), e)); };

  const Point2 A = e.to_canonical(e.A), B = e.to_canonical(e.B), C = e.to_canonical(e.C);
  const double R = std::sqrt(d.circumradius_sq.to_double());
  const bool coincident = euler_inequality(d).equality;

  std::vector<CircleShape> circles;
  if (opts.has(Layer::Circumcircle)) {
    circles.push_back({"circumcircle", place(CenterId::Circumcenter), R, kCircumStyle});
  }
  if (coincident && opts.has(Layer::NinePoint) && opts.has(Layer::Incircle)) {
    circles.push_back(
        {"ninepoint incircle coincident", place(CenterId::NinePointCenter), 0.5 * R, kNinePointStyle});
  } else {
    if (opts.has(Layer::NinePoint)) {
      circles.push_back({"ninepoint", place(CenterId::NinePointCenter), 0.5 * R, kNinePointStyle});
    }
    if (opts.has(Layer::Incircle)) {
      circles.push_back({"incircle", place(CenterId::Incenter),
                         std::sqrt(d.inradius_sq.to_double()), kIncircleStyle});
    }
  }
  if (opts.has(Layer::Excircles)) {
    static constexpr const char* kExClass[] = {"excircle excircle-a", "excircle excircle-b",
                                               "excircle excircle-c"};
    for (Side x : kSides) {
      circles.push_back({kExClass[index(x)], place(excenter_opposite(x)),
                         std::sqrt(d.exradius_sq_for(x).to_double()), kExcircleStyle});
    }
  }

  std::vector<Point2> markers;
  if (opts.has(Layer::TangencyPoints)) {
    for (Circle c : kCircles) {
      if (c == Circle::Incircle && coincident) continue;
      markers.push_back(e.to_canonical(realize(tangency_point(t, c).coeffs, e)));
    }
  }

  Box box;
  if (opts.has(Layer::Triangle) || opts.has(Layer::Labels)) {
    for (Point2 p : {A, B, C}) box.add(p);
  }
  for (const auto& c : circles) box.add(c.center, c.radius);
  for (Point2 p : markers) box.add(p);
  if (box.empty()) {
    for (Point2 p : {A, B, C}) box.add(p);
  }

  const double extent = std::max(box.max_x - box.min_x, box.max_y - box.min_y);
  const double margin = opts.margin_fraction * extent;
  // SVG's y axis points down, so figure y is negated.
  const double vb_x = box.min_x - margin;
  const double vb_y = -(box.max_y + margin);
  const double vb_w = box.max_x - box.min_x + 2.0 * margin;
  const double vb_h = box.max_y - box.min_y + 2.0 * margin;
  const double unit = vb_w / opts.width_px;  // figure units per pixel
  const long height_px = std::lround(opts.width_px * vb_h / vb_w);

  auto xy = [](Point2 p) { return num(p.x) + "," + num(-p.y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out << "<!-- feuerbach " << kVersion << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opts.width_px
      << "\" height=\"" << height_px << "\" viewBox=\"" << num(vb_x) << " " << num(vb_y) << " "
      << num(vb_w) << " " << num(vb_h) << "\">\n";
  out << "<title>triangle " << t.a() << " " << t.b() << " " << t.c() << "</title>\n";

  if (opts.has(Layer::Triangle)) {
    out << "<polygon class=\"triangle\" points=\"" << xy(A) << " " << xy(B) << " " << xy(C)
        << "\" fill=\"none\" stroke=\"" << kTriangleStyle.stroke << "\" stroke-width=\""
        << num(kTriangleStyle.width_px * unit) << "\" stroke-linejoin=\"round\"/>\n";
  }
  for (const auto& c : circles) {
    out << "<circle class=\"" << c.css_class << "\" cx=\"" << num(c.center.x) << "\" cy=\""
        << num(-c.center.y) << "\" r=\"" << num(c.radius) << "\" fill=\"none\" stroke=\""
        << c.style.stroke << "\" stroke-width=\"" << num(c.style.width_px * unit) << "\"/>\n";
  }
  const double h = kMarkerHalfPx * unit;
  for (Point2 p : markers) {
    out << "<path class=\"tangency\" d=\"M " << num(p.x) << "," << num(-p.y - h) << " L "
        << num(p.x + h) << "," << num(-p.y) << " L " << num(p.x) << "," << num(-p.y + h) << " L "
        << num(p.x - h) << "," << num(-p.y) << " Z\" fill=\"" << kMarkerFill << "\"/>\n";
  }

  const bool label_coincident =
      coincident && opts.has(Layer::NinePoint) && opts.has(Layer::Incircle);
  if (opts.has(Layer::Labels) || label_coincident) {
    const double font = kFontPx * unit;
    auto text = [&](Point2 p, std::string_view css, std::string_view body) {
      out << "<text class=\"" << css << "\" x=\"" << num(p.x) << "\" y=\"" << num(-p.y)
          << "\" font-family=\"sans-serif\" font-size=\"" << num(font)
          << "\" text-anchor=\"middle\">" << body << "</text>\n";
    };
    if (opts.has(Layer::Labels)) {
      const Point2 g = place(CenterId::Centroid);
      const std::pair<Point2, const char*> vertices[] = {{A, "A"}, {B, "B"}, {C, "C"}};
      for (const auto& [p, name] : vertices) {
        const Point2 away = p - g;
        const double len = norm(away);
        text(p + (1.2 * font / len) * away, "label vertex", name);
      }
      for (CenterId id : {CenterId::Circumcenter, CenterId::NinePointCenter, CenterId::Orthocenter,
                          CenterId::Incenter, CenterId::ExcenterA, CenterId::ExcenterB,
                          CenterId::ExcenterC}) {
        text(place(id), "label center", symbol(id));
      }
    }
    if (label_coincident) {
      text(place(CenterId::NinePointCenter) + Point2{0.0, 0.5 * R + 0.5 * font},
           "label coincident", "coincident");
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace feuerbach
