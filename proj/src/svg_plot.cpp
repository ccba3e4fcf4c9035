#include "evtcvar/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "evtcvar/errors.hpp"

namespace evtcvar {

namespace {

constexpr double width = 640, height = 420;
constexpr double left = 70, right = 150, top = 40, bottom = 60;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick_label(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", std::abs(x) < 1e-12 ? 0.0 : x);
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

// Round step for about `target` ticks across span.
double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double f : {1.0, 2.0, 2.5, 5.0, 10.0})
    if (f * mag >= raw) return f * mag;
  return 10 * mag;
}

struct Series {
  const char* name;
  const char* colour;
  const char* dash;
  double SweepRow::*field;
};

}  // namespace

std::string render_ratio_svg(const std::vector<SweepRow>& rows, const std::string& title) {
  if (rows.empty()) detail::raise<DataError>("render_ratio_svg", "no rows to plot");
  const Series series[] = {{"ratio_asym", "#1f77b4", "", &SweepRow::ratio_asym},
                           {"ratio_sim", "#d62728", "6,4", &SweepRow::ratio_sim}};

  double xmin = rows.front().gamma, xmax = rows.front().gamma;
  double ymin = 0.0, ymax = 0.0;
  bool have_y = false;
  for (const auto& r : rows) {
    xmin = std::min(xmin, r.gamma);
    xmax = std::max(xmax, r.gamma);
    for (const auto& s : series) {
      const double y = r.*s.field;
      if (!std::isfinite(y)) continue;
      ymin = have_y ? std::min(ymin, y) : y;
      ymax = have_y ? std::max(ymax, y) : y;
      have_y = true;
    }
  }
  if (xmax == xmin) {
    xmin -= 0.5;
    xmax += 0.5;
  }
  ymin = std::min(ymin, 0.0);
  if (!have_y || ymax <= ymin) ymax = ymin + 1.0;
  const double ystep = nice_step(ymax - ymin, 5);
  ymax = std::ceil(ymax / ystep) * ystep;
  const double xstep = nice_step(xmax - xmin, 6);

  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - ymin) / (ymax - ymin)) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" << escape(title)
      << "</text>\n";

  // axes and grid
  svg << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep)
    svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(py(y)) << "\" x2=\"" << num(left + pw) << "\" y2=\""
        << num(py(y)) << "\"/>\n";
  svg << "</g>\n";
  svg << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top + ph) << "\" x2=\"" << num(left + pw) << "\" y2=\""
      << num(top + ph) << "\"/>\n"
      << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left) << "\" y2=\""
      << num(top + ph) << "\"/>\n</g>\n";
  for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep)
    svg << "<text x=\"" << num(left - 6) << "\" y=\"" << num(py(y) + 4) << "\" text-anchor=\"end\">"
        << tick_label(y) << "</text>\n";
  for (double x = std::ceil(xmin / xstep) * xstep; x <= xmax + 1e-9 * xstep; x += xstep)
    svg << "<text x=\"" << num(px(x)) << "\" y=\"" << num(top + ph + 18) << "\" text-anchor=\"middle\">"
        << tick_label(x) << "</text>\n";
  svg << "<text x=\"" << num(left + pw / 2) << "\" y=\"" << num(height - 15)
      << "\" text-anchor=\"middle\">extreme value index gamma</text>\n";
  svg << "<text x=\"18\" y=\"" << num(top + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << num(top + ph / 2) << ")\">variance ratio (CVaR / Pickands)</text>\n";

  for (const auto& s : series) {
    std::ostringstream points;
    bool first = true;
    for (const auto& r : rows) {
      const double y = r.*s.field;
      if (!std::isfinite(y)) continue;
      points << (first ? "" : " ") << num(px(r.gamma)) << ',' << num(py(y));
      first = false;
    }
    svg << "<polyline fill=\"none\" stroke=\"" << s.colour << "\" stroke-width=\"2\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << '"';
    svg << " points=\"" << points.str() << "\"/>\n";
    for (const auto& r : rows) {
      const double y = r.*s.field;
      if (!std::isfinite(y)) continue;
      svg << "<circle cx=\"" << num(px(r.gamma)) << "\" cy=\"" << num(py(y)) << "\" r=\"2.5\" fill=\"" << s.colour
          << "\"/>\n";
    }
  }

  // legend
  double ly = top + 10;
  for (const auto& s : series) {
    svg << "<line x1=\"" << num(left + pw + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(left + pw + 45)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << s.colour << "\" stroke-width=\"2\"";
    if (*s.dash) svg << " stroke-dasharray=\"" << s.dash << '"';
    svg << "/>\n<text x=\"" << num(left + pw + 50) << "\" y=\"" << num(ly + 4) << "\">" << s.name << "</text>\n";
    ly += 20;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace evtcvar
