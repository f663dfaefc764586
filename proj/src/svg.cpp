#include "pipp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "pipp/errors.hpp"

namespace pipp {

namespace {

constexpr double kPanelW = 420, kPanelH = 320;
constexpr double kLeft = 58, kRight = 16, kTop = 34, kBottom = 44;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
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

// Step from {1, 2, 5} x 10^k giving about five intervals over [0, top].
double nice_step(double top) {
  const double raw = top / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0})
    if (m * mag >= raw) return m * mag;
  return 10.0 * mag;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void render_panel(std::string& svg, const FigurePanel& panel, double x0) {
  const auto& rows = panel.table.rows;
  double top = 0.0;
  for (const auto& r : rows) {
    top = std::max({top, r.lambda_ps, r.lambda_dpp});
    if (panel.table.has_mc) top = std::max({top, r.mc_q3, r.mc_mean});
  }
  if (!(top > 0.0)) top = 1.0;
  const double step = nice_step(top * 1.05);
  const double y_max = std::ceil(top * 1.05 / step) * step;

  const double plot_w = kPanelW - kLeft - kRight;
  const double plot_h = kPanelH - kTop - kBottom;
  auto sx = [&](double g) { return x0 + kLeft + g * plot_w; };
  auto sy = [&](double v) { return kTop + plot_h * (1.0 - v / y_max); };

  svg += "<g class=\"panel\">\n";
  svg += "<text x=\"" + num(x0 + kLeft + plot_w / 2) + "\" y=\"20\" "
         "text-anchor=\"middle\" font-size=\"14\">" + escape(panel.title) +
         "</text>\n";
  svg += "<rect x=\"" + num(sx(0)) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#000\"/>\n";

  for (int i = 0; i <= 5; ++i) {
    const double g = i / 5.0;
    svg += "<line x1=\"" + num(sx(g)) + "\" y1=\"" + num(sy(0)) + "\" x2=\"" +
           num(sx(g)) + "\" y2=\"" + num(sy(0) + 5) + "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + num(sx(g)) + "\" y=\"" + num(sy(0) + 18) +
           "\" text-anchor=\"middle\" font-size=\"11\">" + tick_label(g) +
           "</text>\n";
  }
  for (double v = 0.0; v <= y_max + 1e-9 * y_max; v += step) {
    svg += "<line x1=\"" + num(sx(0) - 5) + "\" y1=\"" + num(sy(v)) +
           "\" x2=\"" + num(sx(0)) + "\" y2=\"" + num(sy(v)) +
           "\" stroke=\"#000\"/>\n";
    svg += "<text x=\"" + num(sx(0) - 8) + "\" y=\"" + num(sy(v) + 4) +
           "\" text-anchor=\"end\" font-size=\"11\">" + tick_label(v) +
           "</text>\n";
  }
  svg += "<text x=\"" + num(sx(0.5)) + "\" y=\"" + num(kPanelH - 6) +
         "\" text-anchor=\"middle\" font-size=\"12\">gamma1</text>\n";
  svg += "<text x=\"" + num(x0 + 14) + "\" y=\"" + num(kTop + plot_h / 2) +
         "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 " +
         num(x0 + 14) + " " + num(kTop + plot_h / 2) + ")\">intensity</text>\n";

  if (panel.table.has_mc) {
    const double half = 0.35 * plot_w / std::max<std::size_t>(rows.size(), 1) ;
    for (const auto& r : rows) {
      const double cx = sx(r.gamma1);
      svg += "<g class=\"mc-box\" stroke=\"#555\" fill=\"#ddd\">";
      svg += "<rect x=\"" + num(cx - half) + "\" y=\"" + num(sy(r.mc_q3)) +
             "\" width=\"" + num(2 * half) + "\" height=\"" +
             num(std::max(0.0, sy(r.mc_q1) - sy(r.mc_q3))) + "\"/>";
      svg += "<line x1=\"" + num(cx - half) + "\" y1=\"" + num(sy(r.mc_median)) +
             "\" x2=\"" + num(cx + half) + "\" y2=\"" + num(sy(r.mc_median)) +
             "\" stroke=\"#000\"/>";
      svg += "</g>\n";
    }
  }

  auto polyline = [&](const char* cls, auto value, const char* extra) {
    svg += std::string("<polyline class=\"") + cls +
           "\" fill=\"none\" stroke=\"#000\" stroke-width=\"1.5\"" + extra +
           " points=\"";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) svg += ' ';
      svg += num(sx(rows[i].gamma1)) + "," + num(sy(value(rows[i])));
    }
    svg += "\"/>\n";
  };
  polyline("lambda-dpp", [](const SweepRow& r) { return r.lambda_dpp; }, "");
  polyline("lambda-ps", [](const SweepRow& r) { return r.lambda_ps; },
           " stroke-dasharray=\"6,4\"");

  const double lx = sx(0) + 10, ly = kTop + 14;
  svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" +
         num(lx + 24) + "\" y2=\"" + num(ly) + "\" stroke=\"#000\"/>";
  svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) +
         "\" font-size=\"11\">DPP</text>\n";
  svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly + 16) + "\" x2=\"" +
         num(lx + 24) + "\" y2=\"" + num(ly + 16) +
         "\" stroke=\"#000\" stroke-dasharray=\"6,4\"/>";
  svg += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 20) +
         "\" font-size=\"11\">Poisson-saddlepoint</text>\n";
  svg += "</g>\n";
}

}  // namespace

std::string render_figure(const std::vector<FigurePanel>& panels) {
  if (panels.empty()) throw SchemaError("no tables to plot");
  const double width = kPanelW * static_cast<double>(panels.size());
  std::string svg =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
      "\" height=\"" + num(kPanelH) + "\" viewBox=\"0 0 " + num(width) + " " +
      num(kPanelH) + "\" font-family=\"sans-serif\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i)
    render_panel(svg, panels[i], kPanelW * static_cast<double>(i));
  svg += "</svg>\n";
  return svg;
}

}  // namespace pipp
