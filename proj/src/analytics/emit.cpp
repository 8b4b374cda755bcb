#include "climakg/analytics/emit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "climakg/errors.hpp"

namespace climakg::analytics {

namespace {

std::string Num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

// Fixed two decimals for coordinates so output is stable and compact.
std::string Px(double v) {
  if (std::abs(v) < 0.005) v = 0;
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  return std::string(buf, end);
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

const char* kStationColors[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756",
                                "#72b7b2", "#b279a2", "#ff9da6", "#9d755d"};

const char* LabelColor(WeatherLabel label) {
  switch (label) {
    case WeatherLabel::kRain:
      return "#1f77b4";
    case WeatherLabel::kSnow:
      return "#9edae5";
    case WeatherLabel::kFog:
      return "#7f7f7f";
    case WeatherLabel::kDrizzle:
      return "#2ca02c";
    case WeatherLabel::kSun:
      return "#ffbf00";
  }
  return "#000000";
}

const char* kMonthNames[] = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                             "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};

std::string SvgOpen(int width, int height, const std::string& title) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " + std::to_string(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
  out += "<text x=\"" + std::to_string(width / 2) +
         "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         XmlEscape(title) + "</text>\n";
  return out;
}

std::string Text(double x, double y, const std::string& s, const char* anchor = "middle",
                 int size = 11) {
  return "<text x=\"" + Px(x) + "\" y=\"" + Px(y) + "\" text-anchor=\"" + anchor +
         "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) + "\">" +
         XmlEscape(s) + "</text>\n";
}

std::string Line(double x1, double y1, double x2, double y2, const char* cls,
                 const char* stroke = "#333333") {
  return "<line class=\"" + std::string(cls) + "\" x1=\"" + Px(x1) + "\" y1=\"" + Px(y1) +
         "\" x2=\"" + Px(x2) + "\" y2=\"" + Px(y2) + "\" stroke=\"" + stroke +
         "\" stroke-width=\"1\"/>\n";
}

}  // namespace

std::string EmitBoxStatsCsv(const std::vector<StationBoxStats>& stats) {
  bool any = false;
  for (const auto& s : stats) any = any || !s.months.empty();
  if (!any) throw EmptyInput("no box statistics to write");
  std::string out = "station,month,n,min,q1,median,q3,max,lower_fence,upper_fence,outliers,mean\n";
  for (const auto& s : stats) {
    for (const auto& m : s.months) {
      out += CsvField(s.station) + ',' + std::to_string(m.month) + ',' + std::to_string(m.n) +
             ',' + Num(m.minimum) + ',' + Num(m.q1) + ',' + Num(m.median) + ',' + Num(m.q3) +
             ',' + Num(m.maximum) + ',' + Num(m.lower_fence) + ',' + Num(m.upper_fence) + ',' +
             std::to_string(m.outlier_count) + ',' + Num(m.mean) + '\n';
    }
  }
  return out;
}

std::string EmitDistributionCsv(const std::vector<DistributionSeries>& series) {
  bool any = false;
  for (const auto& s : series) any = any || !s.entries.empty();
  if (!any) throw EmptyInput("no distribution entries to write");
  std::string out = "year,day_of_year,date,label\n";
  for (const auto& s : series) {
    for (const auto& e : s.entries) {
      out += std::to_string(s.year) + ',' + std::to_string(e.day_of_year) + ',' +
             FormatIsoDate(DateFromDayOfYear(s.year, e.day_of_year)) + ',' +
             std::string(LabelName(e.label)) + '\n';
    }
  }
  return out;
}

std::string EmitBoxPlotSvg(const std::vector<StationBoxStats>& stats, const std::string& title) {
  double lo = INFINITY, hi = -INFINITY;
  for (const auto& s : stats) {
    for (const auto& m : s.months) {
      lo = std::min(lo, m.minimum);
      hi = std::max(hi, m.maximum);
    }
  }
  if (!std::isfinite(lo)) throw EmptyInput("no box statistics to plot");
  lo = std::floor(lo / 5.0) * 5.0;
  hi = std::ceil(hi / 5.0) * 5.0;
  if (hi <= lo) hi = lo + 5.0;

  const int width = 900, height = 480;
  const double left = 60, right = 20, top = 50, bottom = 70;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const double slot = plot_w / 12.0;
  const double group_w = slot * 0.8;
  const double box_w = group_w / static_cast<double>(std::max<std::size_t>(1, stats.size()));
  auto y_of = [&](double v) { return top + (hi - v) / (hi - lo) * plot_h; };

  std::string out = SvgOpen(width, height, title);
  out += "<g class=\"axis\">\n";
  out += Line(left, top, left, top + plot_h, "axis");
  out += Line(left, top + plot_h, left + plot_w, top + plot_h, "axis");
  for (double t = lo; t <= hi + 1e-9; t += 5.0) {
    out += Line(left - 4, y_of(t), left, y_of(t), "tick");
    out += Text(left - 6, y_of(t) + 4, Num(t), "end");
  }
  for (int m = 0; m < 12; ++m) {
    out += Text(left + slot * (m + 0.5), top + plot_h + 16, kMonthNames[m]);
  }
  out += Text(16, top + plot_h / 2, "°C", "middle");
  out += "</g>\n";

  for (std::size_t si = 0; si < stats.size(); ++si) {
    const char* color = kStationColors[si % std::size(kStationColors)];
    const std::string station = XmlEscape(stats[si].station);
    out += "<g class=\"station\" data-station=\"" + station + "\">\n";
    for (const auto& m : stats[si].months) {
      const double x0 = left + slot * (m.month - 1) + (slot - group_w) / 2 + box_w * si;
      const double cx = x0 + box_w / 2;
      const double inner = box_w * 0.8;
      const double bx = cx - inner / 2;
      out += Line(cx, y_of(m.whisker_high), cx, y_of(m.q3), "whisker");
      out += Line(cx, y_of(m.q1), cx, y_of(m.whisker_low), "whisker");
      out += "<rect class=\"box\" data-station=\"" + station + "\" data-month=\"" +
             std::to_string(m.month) + "\" x=\"" + Px(bx) + "\" y=\"" + Px(y_of(m.q3)) +
             "\" width=\"" + Px(inner) + "\" height=\"" + Px(y_of(m.q1) - y_of(m.q3)) +
             "\" fill=\"" + color + "\" fill-opacity=\"0.6\" stroke=\"#333333\"/>\n";
      out += Line(bx, y_of(m.median), bx + inner, y_of(m.median), "median", "#000000");
    }
    out += "</g>\n";
  }

  out += "<g class=\"legend\">\n";
  for (std::size_t si = 0; si < stats.size(); ++si) {
    const double x = left + 160.0 * si;
    const double y = height - 24.0;
    out += "<rect x=\"" + Px(x) + "\" y=\"" + Px(y - 10) + "\" width=\"12\" height=\"12\" fill=\"" +
           kStationColors[si % std::size(kStationColors)] + "\"/>\n";
    out += Text(x + 18, y, stats[si].station, "start");
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::string EmitStripPlotSvg(const std::vector<DistributionSeries>& series,
                             const std::string& title) {
  bool any = false;
  for (const auto& s : series) any = any || !s.entries.empty();
  if (!any) throw EmptyInput("no distribution entries to plot");

  const double left = 60, right = 20, top = 50, row_h = 28, mark_w = 2;
  const int width = static_cast<int>(left + right + 366 * mark_w);
  const int height = static_cast<int>(top + row_h * series.size() + 70);

  std::string out = SvgOpen(width, height, title);
  out += "<g class=\"axis\">\n";
  for (int doy : {1, 60, 121, 182, 244, 305, 366}) {
    out += Text(left + (doy - 1) * mark_w, top + row_h * series.size() + 16, std::to_string(doy));
  }
  out += "</g>\n";
  for (std::size_t row = 0; row < series.size(); ++row) {
    const auto& s = series[row];
    const double y = top + row_h * row;
    out += Text(left - 6, y + row_h / 2 + 4, std::to_string(s.year), "end");
    out += "<g class=\"year\" data-year=\"" + std::to_string(s.year) + "\">\n";
    for (const auto& e : s.entries) {
      const std::string label(LabelName(e.label));
      out += "<rect class=\"mark\" data-label=\"" + label + "\" data-day=\"" +
             std::to_string(e.day_of_year) + "\" x=\"" + Px(left + (e.day_of_year - 1) * mark_w) +
             "\" y=\"" + Px(y + 2) + "\" width=\"" + Px(mark_w) + "\" height=\"" +
             Px(row_h - 4) + "\" fill=\"" + LabelColor(e.label) + "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "<g class=\"legend\">\n";
  double x = left;
  const double y = height - 24.0;
  for (WeatherLabel label : AllLabels()) {
    out += "<rect x=\"" + Px(x) + "\" y=\"" + Px(y - 10) + "\" width=\"12\" height=\"12\" fill=\"" +
           LabelColor(label) + "\"/>\n";
    out += Text(x + 18, y, std::string(LabelName(label)), "start");
    x += 90;
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace climakg::analytics
