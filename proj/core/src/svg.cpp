#include "reeb/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace reeb {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
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

std::string edge_style(const std::string& part, double width) {
  if (part == "E1") return "stroke=\"#e67e22\" stroke-width=\"" + fmt(width) + "\"";
  if (part == "E2") {
    return "stroke=\"#555555\" stroke-width=\"" + fmt(width) + "\" stroke-dasharray=\"2,3\"";
  }
  if (part == "E3") return "stroke=\"#c0392b\" stroke-width=\"" + fmt(width) + "\"";
  return "stroke=\"#000000\" stroke-width=\"" + fmt(width) + "\"";
}

}  // namespace

void check_render_options(const RenderOptions& o) {
  if (!(o.width > 0 && o.height > 0 && o.margin > 0 && o.vertex_radius > 0 &&
        o.stroke_width > 0)) {
    throw Error(ErrorCode::InvalidArgument, "render dimensions must be positive");
  }
  if (!(2 * o.margin < o.width && 2 * o.margin < o.height)) {
    throw Error(ErrorCode::InvalidArgument, "margins leave no room to draw");
  }
}

std::string render_svg(const Drawing& d, const RenderOptions& o,
                       std::span<const std::string> edge_parts) {
  check_render_options(o);
  const ReebGraph& g = d.graph();

  std::vector<Point> all;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) all.push_back(d.position(v));
  for (const auto& list : d.all_bends()) all.insert(all.end(), list.begin(), list.end());

  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  if (!all.empty()) {
    xmin = xmax = to_double(all[0].x);
    ymin = ymax = to_double(all[0].y);
    for (const Point& p : all) {
      xmin = std::min(xmin, to_double(p.x));
      xmax = std::max(xmax, to_double(p.x));
      ymin = std::min(ymin, to_double(p.y));
      ymax = std::max(ymax, to_double(p.y));
    }
  }
  const double inner_w = o.width - 2 * o.margin;
  const double inner_h = o.height - 2 * o.margin;
  auto sx = [&](const Rational& x) {
    if (xmax == xmin) return o.width / 2;
    return o.margin + (to_double(x) - xmin) / (xmax - xmin) * inner_w;
  };
  auto sy = [&](const Rational& y) {
    if (ymax == ymin) return o.height / 2;
    return o.margin + (ymax - to_double(y)) / (ymax - ymin) * inner_h;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!-- y axis flipped: screen_y = margin + (ymax - y) * (height - 2*margin) / (ymax - ymin);"
         " larger heights appear higher -->\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(o.width) + "\" height=\"" +
         fmt(o.height) + "\" viewBox=\"0 0 " + fmt(o.width) + " " + fmt(o.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (o.level_lines) {
    std::set<Rational> hs;
    for (const VertexSpec& v : g.vertices()) hs.insert(v.height);
    out += "<g class=\"levels\" stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
    for (const Rational& h : hs) {
      const std::string y = fmt(sy(h));
      out += "<line x1=\"" + fmt(o.margin / 2) + "\" y1=\"" + y + "\" x2=\"" +
             fmt(o.width - o.margin / 2) + "\" y2=\"" + y + "\"/>\n";
    }
    out += "</g>\n";
  }

  out += "<g class=\"edges\" fill=\"none\">\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    std::string pts;
    for (const Point& p : d.polyline(e)) {
      if (!pts.empty()) pts += ' ';
      pts += fmt(sx(p.x)) + "," + fmt(sy(p.y));
    }
    const std::string part =
        o.color_by_part && e < edge_parts.size() ? edge_parts[e] : std::string();
    out += "<polyline points=\"" + pts + "\" " + edge_style(part, o.stroke_width);
    if (!part.empty()) out += " class=\"" + escape(part) + "\"";
    out += "/>\n";
  }
  out += "</g>\n";

  out += "<g class=\"vertices\" fill=\"#1f4e79\">\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out += "<circle cx=\"" + fmt(sx(d.x(v))) + "\" cy=\"" + fmt(sy(g.height(v))) + "\" r=\"" +
           fmt(o.vertex_radius) + "\"><title>" + escape(g.id(v)) + "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace reeb
