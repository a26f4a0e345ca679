#include "render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace bpi::render {

namespace {

std::string fmt(const char* pattern, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), pattern, value);
  return buffer;
}

// five-stop viridis-like ramp over t in [0, 1]
std::string heat_color(double t) {
  static constexpr std::array<std::array<int, 3>, 5> stops{{
      {68, 1, 84},
      {59, 82, 139},
      {33, 145, 140},
      {94, 201, 98},
      {253, 231, 37},
  }};
  t = std::clamp(t, 0.0, 1.0);
  const double scaled = t * 4.0;
  const auto lo = std::min<std::size_t>(3, static_cast<std::size_t>(scaled));
  const double f = scaled - static_cast<double>(lo);
  auto mix = [&](int channel) {
    return static_cast<int>(
        std::lround(stops[lo][channel] +
                    f * (stops[lo + 1][channel] - stops[lo][channel])));
  };
  char buffer[8];
  std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x", mix(0), mix(1),
                mix(2));
  return buffer;
}

const char* const angle_ticks[5] = {"0", "pi/8", "pi/4", "3pi/8", "pi/2"};

}  // namespace

std::string format_full(double value) { return fmt("%.17g", value); }

std::string sweep_csv(const SweepResult& result) {
  std::string out = "theta_c,theta_d,beta,degenerate\n";
  for (const SweepCell& cell : result.cells) {
    out += format_full(cell.theta_c);
    out += ',';
    out += format_full(cell.theta_d);
    out += ',';
    if (cell.beta) out += format_full(*cell.beta);
    out += cell.beta ? ",0\n" : ",1\n";
  }
  return out;
}

std::string dip_csv(const std::vector<DipPoint>& points) {
  std::string out = "beta,p_11\n";
  for (const DipPoint& point : points) {
    out += format_full(point.beta);
    out += ',';
    out += format_full(point.coincidence);
    out += '\n';
  }
  return out;
}

std::string sweep_svg(const SweepResult& result) {
  constexpr double plot = 440.0;
  constexpr double left = 70.0, top = 40.0, bottom = 50.0, bar_gap = 30.0;
  constexpr double bar_w = 18.0;
  const double width = left + plot + bar_gap + bar_w + 60.0;
  const double height = top + plot + bottom;
  const double cell = plot / static_cast<double>(result.grid_n - 1);
  constexpr double half_pi = std::numbers::pi / 2;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << left + plot / 2
      << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">bunching parameter over (theta_C, theta_D)</text>\n";

  // cells centered on their grid point; theta_c on x, theta_d on y
  for (const SweepCell& c : result.cells) {
    const double fx = c.theta_c / half_pi, fy = c.theta_d / half_pi;
    const double x = left + fx * plot - cell / 2;
    const double y = top + (1.0 - fy) * plot - cell / 2;
    const std::string color =
        c.beta ? heat_color(*c.beta - 1.0) : std::string("#d8d8d8");
    svg << "<rect x=\"" << fmt("%.2f", x) << "\" y=\"" << fmt("%.2f", y)
        << "\" width=\"" << fmt("%.2f", cell + 0.25) << "\" height=\""
        << fmt("%.2f", cell + 0.25) << "\" fill=\"" << color << "\"/>\n";
  }

  svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot
      << "\" height=\"" << plot << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (int k = 0; k <= 4; ++k) {
    const double f = k / 4.0;
    const double x = left + f * plot;
    const double y = top + (1.0 - f) * plot;
    svg << "<line x1=\"" << x << "\" y1=\"" << top + plot << "\" x2=\"" << x
        << "\" y2=\"" << top + plot + 6 << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << x << "\" y=\"" << top + plot + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << angle_ticks[k] << "</text>\n"
        << "<line x1=\"" << left - 6 << "\" y1=\"" << y << "\" x2=\"" << left
        << "\" y2=\"" << y << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << left - 10 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << angle_ticks[k] << "</text>\n";
  }
  svg << "<text x=\"" << left + plot / 2 << "\" y=\"" << height - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">theta_C (rad)</text>\n"
      << "<text x=\"18\" y=\"" << top + plot / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << top + plot / 2 << ")\">theta_D (rad)</text>\n";

  // colorbar, beta = 1 at the bottom to beta = 2 at the top
  const double bar_x = left + plot + bar_gap;
  constexpr int bar_steps = 64;
  for (int k = 0; k < bar_steps; ++k) {
    const double f = (k + 0.5) / bar_steps;
    const double y = top + (1.0 - (k + 1.0) / bar_steps) * plot;
    svg << "<rect x=\"" << bar_x << "\" y=\"" << fmt("%.2f", y)
        << "\" width=\"" << bar_w << "\" height=\""
        << fmt("%.2f", plot / bar_steps + 0.5) << "\" fill=\"" << heat_color(f)
        << "\"/>\n";
  }
  svg << "<rect x=\"" << bar_x << "\" y=\"" << top << "\" width=\"" << bar_w
      << "\" height=\"" << plot << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 2; ++k) {
    const double y = top + (1.0 - k * 0.5) * plot;
    svg << "<text x=\"" << bar_x + bar_w + 6 << "\" y=\"" << y + 4
        << "\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt("%.1f", 1.0 + k * 0.5) << "</text>\n";
  }
  svg << "<text x=\"" << bar_x + bar_w / 2 << "\" y=\"" << top - 8
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">beta</text>\n"
      << "</svg>\n";
  return svg.str();
}

std::string dip_svg(const std::vector<DipPoint>& points) {
  constexpr double plot_w = 460.0, plot_h = 300.0;
  constexpr double left = 70.0, top = 40.0, bottom = 56.0;
  const double width = left + plot_w + 30.0;
  const double height = top + plot_h + bottom;

  auto x_of = [&](double beta) { return left + (beta - 1.0) * plot_w; };
  auto y_of = [&](double p) { return top + (1.0 - p / 0.5) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << left + plot_w / 2
      << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"15\">dip minimum versus bunching parameter</text>\n";

  for (int k = 0; k <= 4; ++k) {
    const double beta = 1.0 + k * 0.25;
    const double p = 0.5 * k / 4.0;
    svg << "<line x1=\"" << x_of(beta) << "\" y1=\"" << top << "\" x2=\""
        << x_of(beta) << "\" y2=\"" << top + plot_h
        << "\" stroke=\"#e0e0e0\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << fmt("%.2f", y_of(p))
        << "\" x2=\"" << left + plot_w << "\" y2=\"" << fmt("%.2f", y_of(p))
        << "\" stroke=\"#e0e0e0\"/>\n"
        << "<text x=\"" << x_of(beta) << "\" y=\"" << top + plot_h + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << fmt("%.2f", beta) << "</text>\n"
        << "<text x=\"" << left - 8 << "\" y=\"" << fmt("%.2f", y_of(p) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">"
        << fmt("%.3f", p) << "</text>\n";
  }
  svg << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  std::vector<DipPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const DipPoint& a, const DipPoint& b) {
    return a.beta < b.beta;
  });
  svg << "<polyline fill=\"none\" stroke=\"#3b528b\" stroke-width=\"2\" "
         "points=\"";
  for (const DipPoint& point : sorted) {
    svg << fmt("%.2f", x_of(point.beta)) << ','
        << fmt("%.2f", y_of(point.coincidence)) << ' ';
  }
  svg << "\"/>\n";
  for (const DipPoint& point : sorted) {
    svg << "<circle cx=\"" << fmt("%.2f", x_of(point.beta)) << "\" cy=\""
        << fmt("%.2f", y_of(point.coincidence))
        << "\" r=\"2.5\" fill=\"#3b528b\"/>\n";
  }

  svg << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 14
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">beta</text>\n"
      << "<text x=\"18\" y=\"" << top + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << top + plot_h / 2 << ")\">coincidence probability</text>\n"
      << "</svg>\n";
  return svg.str();
}

}  // namespace bpi::render
