#include "polarcoh/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polarcoh/serialize.hpp"

namespace polarcoh {

namespace {

constexpr double kWidth = 520;
constexpr double kHeight = 400;
constexpr double kMargin = 56;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
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

std::string label(const BigRational& y) { return to_string(y); }

struct Frame {
  long max_x;
  long max_y;
  double sx() const { return (kWidth - 2 * kMargin) / static_cast<double>(std::max(max_x, 1L)); }
  double sy() const { return (kHeight - 2 * kMargin) / static_cast<double>(std::max(max_y, 1L)); }
  double px(double x) const { return kMargin + x * sx(); }
  double py(double y) const { return kHeight - kMargin - y * sy(); }
};

void polyline(std::ostringstream& svg, const Frame& f, const std::vector<Vertex>& vs,
              const std::string& stroke, bool dashed) {
  svg << "  <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\"";
  if (dashed) svg << " stroke-dasharray=\"6 4\"";
  svg << " points=\"";
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) svg << ' ';
    svg << num(f.px(static_cast<double>(vs[k].x))) << ',' << num(f.py(vs[k].y.convert_to<double>()));
  }
  svg << "\"/>\n";
}

void slope_labels(std::ostringstream& svg, const Frame& f, const std::vector<Vertex>& vs,
                  const std::string& fill, double dy) {
  for (std::size_t k = 0; k + 1 < vs.size(); ++k) {
    const BigRational slope = (vs[k + 1].y - vs[k].y) / BigRational(vs[k + 1].x - vs[k].x);
    const double mx = (static_cast<double>(vs[k].x) + static_cast<double>(vs[k + 1].x)) / 2;
    const double my = (vs[k].y.convert_to<double>() + vs[k + 1].y.convert_to<double>()) / 2;
    svg << "  <text x=\"" << num(f.px(mx)) << "\" y=\"" << num(f.py(my) + dy) << "\" fill=\"" << fill
        << "\" font-size=\"11\" text-anchor=\"middle\">slope " << escape(label(slope)) << "</text>\n";
  }
}

}  // namespace

std::string render_polygons_svg(const nlohmann::json& newton, const nlohmann::json& hodge,
                                const std::string& title) {
  const auto np = vertices_from_json(newton);
  const auto hp = hodge.is_null() ? std::vector<Vertex>{} : vertices_from_json(hodge);
  if (np.empty()) throw EmptyPolygonError("nothing to render");

  Frame f{0, 0};
  for (const auto* list : {&np, &hp})
    for (const auto& v : *list) {
      f.max_x = std::max(f.max_x, v.x);
      f.max_y = std::max(f.max_y, static_cast<long>(std::ceil(v.y.convert_to<double>())));
    }

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "  <text x=\"" << num(kWidth / 2) << "\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">"
      << escape(title) << "</text>\n";

  // axes
  svg << "  <line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(f.max_x) + 16)
      << "\" y2=\"" << num(f.py(0)) << "\" stroke=\"black\"/>\n";
  svg << "  <line x1=\"" << num(f.px(0)) << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << num(f.px(0))
      << "\" y2=\"" << num(f.py(f.max_y) - 16) << "\" stroke=\"black\"/>\n";
  for (long x = 0; x <= f.max_x; ++x)
    svg << "  <text x=\"" << num(f.px(static_cast<double>(x))) << "\" y=\"" << num(f.py(0) + 18)
        << "\" font-size=\"11\" text-anchor=\"middle\">" << x << "</text>\n";
  for (long y = 0; y <= f.max_y; ++y)
    svg << "  <text x=\"" << num(f.px(0) - 10) << "\" y=\"" << num(f.py(static_cast<double>(y)) + 4)
        << "\" font-size=\"11\" text-anchor=\"end\">" << y << "</text>\n";

  // lattice
  for (long x = 0; x <= f.max_x; ++x)
    for (long y = 0; y <= f.max_y; ++y)
      svg << "  <circle cx=\"" << num(f.px(static_cast<double>(x))) << "\" cy=\""
          << num(f.py(static_cast<double>(y))) << "\" r=\"1.5\" fill=\"#999999\"/>\n";

  if (!hp.empty()) {
    polyline(svg, f, hp, "#d62728", true);
    slope_labels(svg, f, hp, "#d62728", 16);
  }
  polyline(svg, f, np, "#1f77b4", false);
  slope_labels(svg, f, np, "#1f77b4", -8);

  for (const auto& v : np) {
    const double x = f.px(static_cast<double>(v.x)), y = f.py(v.y.convert_to<double>());
    svg << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
    svg << "  <text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6) << "\" font-size=\"11\">(" << v.x << ", "
        << escape(label(v.y)) << ")</text>\n";
  }

  // legend
  const double lx = kWidth - kMargin - 120, ly = 44;
  svg << "  <line x1=\"" << num(lx) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(lx + 24) << "\" y2=\""
      << num(ly) << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  svg << "  <text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 4) << "\" font-size=\"11\">Newton</text>\n";
  if (!hp.empty()) {
    svg << "  <line x1=\"" << num(lx) << "\" y1=\"" << num(ly + 16) << "\" x2=\"" << num(lx + 24)
        << "\" y2=\"" << num(ly + 16) << "\" stroke=\"#d62728\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    svg << "  <text x=\"" << num(lx + 30) << "\" y=\"" << num(ly + 20) << "\" font-size=\"11\">Hodge</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace polarcoh
