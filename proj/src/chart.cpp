// Error-bar chart rendered as a self-contained SVG document.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "vscif/bench.hpp"

namespace vscif {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 190.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 60.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v, int places = 2) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", places, v);
  return buffer;
}

std::string escape(std::string_view text) {
  std::string out;
  for (const char c : text) {
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

template <typename T>
std::size_t index_of(std::vector<T>& list, const T& value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it != list.end()) return static_cast<std::size_t>(it - list.begin());
  list.push_back(value);
  return list.size() - 1;
}

}  // namespace

void emit_chart(std::span<const BenchReport> reports, std::ostream& out, std::string_view title) {
  std::vector<const SeriesRow*> rows;
  for (const auto& r : reports)
    for (const auto& row : r.rows) rows.push_back(&row);
  if (rows.empty()) raise(ErrorKind::Precondition, "refusing to chart an empty report");

  std::vector<std::string> axes;
  std::vector<std::string> algorithms;
  double lo = rows.front()->mean;
  double hi = lo;
  for (const auto* row : rows) {
    index_of(axes, row->axis);
    index_of(algorithms, row->algorithm);
    lo = std::min(lo, row->mean - row->ci_half_width);
    hi = std::max(hi, row->mean + row->ci_half_width);
  }
  const double pad = hi > lo ? 0.08 * (hi - lo) : std::max(0.05, std::abs(hi) * 0.05);
  lo -= pad;
  hi += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](std::size_t axis, std::size_t algo) {
    const double slot = plot_w / static_cast<double>(axes.size());
    const double spread = std::min(18.0, slot / (2.0 * static_cast<double>(algorithms.size())));
    const double offset = (static_cast<double>(algo) - (static_cast<double>(algorithms.size()) - 1) / 2.0) * spread;
    return kLeft + slot * (static_cast<double>(axis) + 0.5) + offset;
  };
  auto y_of = [&](double v) { return kTop + plot_h * (hi - v) / (hi - lo); };

  const std::string metric(to_string(rows.front()->metric));
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty())
    out << "<text x=\"" << num(kWidth / 2) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"15\">"
        << escape(title) << "</text>\n";

  // frame and y ticks
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\"" << plot_h
      << "\" fill=\"none\" stroke=\"#333\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t <= kTicks; ++t) {
    const double v = lo + (hi - lo) * t / kTicks;
    const double y = y_of(v);
    out << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
        << num(y) << "\" stroke=\"#ddd\"/>\n"
        << "<text x=\"" << kLeft - 8 << "\" y=\"" << num(y + 4) << "\" text-anchor=\"end\">" << num(v, 3)
        << "</text>\n";
  }
  out << "<text transform=\"translate(20," << num(kTop + plot_h / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
      << escape(metric) << "</text>\n";
  for (std::size_t a = 0; a < axes.size(); ++a) {
    out << "<text x=\"" << num(x_of(a, (algorithms.size() - 1) / 2)) << "\" y=\"" << num(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << escape(axes[a]) << "</text>\n";
  }

  for (std::size_t g = 0; g < algorithms.size(); ++g) {
    const char* colour = kPalette[g % std::size(kPalette)];
    std::ostringstream path;
    bool first = true;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      for (const auto* row : rows) {
        if (row->algorithm != algorithms[g] || row->axis != axes[a]) continue;
        const double x = x_of(a, g);
        const double y = y_of(row->mean);
        const double y_lo = y_of(row->mean - row->ci_half_width);
        const double y_hi = y_of(row->mean + row->ci_half_width);
        out << "<g stroke=\"" << colour << "\">"
            << "<line x1=\"" << num(x) << "\" y1=\"" << num(y_lo) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y_hi) << "\"/>"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(y_lo) << "\" x2=\"" << num(x + 4) << "\" y2=\"" << num(y_lo) << "\"/>"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(y_hi) << "\" x2=\"" << num(x + 4) << "\" y2=\"" << num(y_hi) << "\"/>"
            << "</g>\n"
            << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3.5\" fill=\"" << colour << "\">"
            << "<title>" << escape(row->algorithm) << " " << escape(row->axis) << ": " << num(row->mean, 6)
            << " &#177; " << num(row->ci_half_width, 6) << "</title></circle>\n";
        path << (first ? "M" : " L") << num(x) << ' ' << num(y);
        first = false;
      }
    }
    if (!first)
      out << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << colour
          << "\" stroke-opacity=\"0.5\"/>\n";
    const double ly = kTop + 10 + 20.0 * static_cast<double>(g);
    out << "<rect x=\"" << kLeft + plot_w + 15 << "\" y=\"" << num(ly - 9) << "\" width=\"12\" height=\"12\" fill=\""
        << colour << "\"/>"
        << "<text x=\"" << kLeft + plot_w + 33 << "\" y=\"" << num(ly + 1) << "\">" << escape(algorithms[g])
        << "</text>\n";
  }
  out << "</svg>\n";
}

void emit_chart(std::span<const BenchReport> reports, const std::string& path,
                std::string_view title) {
  std::ostringstream buffer;
  emit_chart(reports, buffer, title);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorKind::Io, "cannot open '" + path + "' for writing");
  out << buffer.str();
  if (!out) raise(ErrorKind::Io, "error writing '" + path + "'");
}

}  // namespace vscif
