#pragma once

// Minimal SVG figures: outlines at 1px, the intersection filled at 30%
// opacity, singular points as 4px disks. World y points up; the viewBox is
// fixed from the bounds of everything drawn.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tsing/geometry.hpp"

namespace tsing {

class SvgFigure {
 public:
  explicit SvgFigure(double width_px = 600.0) : width_px_(width_px) {}

  void outline(const std::vector<Vec2>& pts, const std::string& color) {
    items_.push_back({Kind::Outline, pts, color});
    grow(pts);
  }
  void filled(const std::vector<Vec2>& pts, const std::string& color) {
    items_.push_back({Kind::Filled, pts, color});
    grow(pts);
  }
  void polyline(const std::vector<Vec2>& pts, const std::string& color) {
    items_.push_back({Kind::Polyline, pts, color});
    grow(pts);
  }
  void marker(Vec2 p, const std::string& color) {
    items_.push_back({Kind::Marker, {p}, color});
    grow({p});
  }
  void label(Vec2 p, std::string text) { labels_.push_back({p, std::move(text)}); }

  std::string str() const {
    const double pad = 0.05 * std::max(hi_.x - lo_.x, hi_.y - lo_.y) + 1e-9;
    const double x0 = lo_.x - pad, y0 = lo_.y - pad;
    const double w = hi_.x - lo_.x + 2 * pad, h = hi_.y - lo_.y + 2 * pad;
    const double px = w / width_px_;  // world units per pixel
    const double height_px = width_px_ * h / w;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width_px_) << "\" height=\""
        << fmt(height_px) << "\" viewBox=\"" << fmt(x0) << ' ' << fmt(-(y0 + h)) << ' ' << fmt(w) << ' '
        << fmt(h) << "\">\n";
    out << "<g transform=\"scale(1,-1)\">\n";
    for (const auto& it : items_) {
      switch (it.kind) {
        case Kind::Filled:
          out << "<polygon points=\"" << points(it.pts) << "\" fill=\"" << it.color
              << "\" fill-opacity=\"0.3\" stroke=\"none\"/>\n";
          break;
        case Kind::Outline:
          out << "<polygon points=\"" << points(it.pts) << "\" fill=\"none\" stroke=\"" << it.color
              << "\" stroke-width=\"" << fmt(px) << "\"/>\n";
          break;
        case Kind::Polyline:
          out << "<polyline points=\"" << points(it.pts) << "\" fill=\"none\" stroke=\"" << it.color
              << "\" stroke-width=\"" << fmt(px) << "\"/>\n";
          break;
        case Kind::Marker:
          out << "<circle cx=\"" << fmt(it.pts[0].x) << "\" cy=\"" << fmt(it.pts[0].y) << "\" r=\""
              << fmt(4.0 * px) << "\" fill=\"" << it.color << "\"/>\n";
          break;
      }
    }
    out << "</g>\n";
    for (const auto& l : labels_) {
      out << "<text x=\"" << fmt(l.at.x) << "\" y=\"" << fmt(-l.at.y) << "\" font-size=\"" << fmt(12.0 * px)
          << "\" font-family=\"sans-serif\">" << escape(l.text) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
  }

 private:
  enum class Kind { Outline, Filled, Polyline, Marker };
  struct Item {
    Kind kind;
    std::vector<Vec2> pts;
    std::string color;
  };
  struct Label {
    Vec2 at;
    std::string text;
  };

  void grow(const std::vector<Vec2>& pts) {
    for (Vec2 p : pts) {
      lo_.x = std::min(lo_.x, p.x);
      lo_.y = std::min(lo_.y, p.y);
      hi_.x = std::max(hi_.x, p.x);
      hi_.y = std::max(hi_.y, p.y);
    }
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

  static std::string points(const std::vector<Vec2>& pts) {
    std::string s;
    for (Vec2 p : pts) {
      if (!s.empty()) s += ' ';
      s += fmt(p.x) + "," + fmt(p.y);
    }
    return s;
  }

  static std::string escape(const std::string& in) {
    std::string s;
    for (char c : in) {
      switch (c) {
        case '<': s += "&lt;"; break;
        case '>': s += "&gt;"; break;
        case '&': s += "&amp;"; break;
        case '"': s += "&quot;"; break;
        default: s += c;
      }
    }
    return s;
  }

  double width_px_;
  Vec2 lo_{INFINITY, INFINITY};
  Vec2 hi_{-INFINITY, -INFINITY};
  std::vector<Item> items_;
  std::vector<Label> labels_;
};

}  // namespace tsing
