#include "slopes/plot.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace slopes {

namespace {

RationalInterval default_window() {
  return RationalInterval::closed(Rational(-9, 2), Rational(9, 2));
}

FigureRowSpec set_row(std::string label, SlopeSetDescriptor desc, RationalInterval window,
                      i64 max_den, std::optional<i64> max_level,
                      std::optional<SlopeSetDescriptor> highlight, bool limit_circles) {
  return FigureRowSpec{std::move(label), desc,
                       EnumerationWindow{window, max_den, max_level}, highlight,
                       limit_circles};
}

}  // namespace

FigureDef figure_def(int id) {
  const RationalInterval W = default_window();
  const SlopeSetDescriptor L1 = SlopeSetDescriptor::l1();
  const SlopeSetDescriptor L2 = SlopeSetDescriptor::lg(2);
  switch (id) {
    case 1:
      return FigureDef{1, W,
                       {set_row("M:g=1", SlopeSetDescriptor::mg(1), W, 60, 8, L1, false)}};
    case 2:
      return FigureDef{2, W,
                       {set_row("M:g=2", SlopeSetDescriptor::mg(2), W, 56, 12, L2, false)}};
    case 3:
      return FigureDef{
          3, W,
          {set_row("M:g=2,n=1", SlopeSetDescriptor::mgn(2, 1), W, 30, std::nullopt,
                   std::nullopt, true),
           set_row("M:g=2,n=2", SlopeSetDescriptor::mgn(2, 2), W, 30, std::nullopt,
                   std::nullopt, true),
           set_row("M:g=2,n=4", SlopeSetDescriptor::mgn(2, 4), W, 28, std::nullopt,
                   std::nullopt, true),
           set_row("M:g=2", SlopeSetDescriptor::mg(2), W, 46, 12, std::nullopt, false)}};
    case 4:
      return FigureDef{
          4, W,
          {set_row("Z", SlopeSetDescriptor::integers(), W, 1, std::nullopt, L1, false),
           set_row("M:g=1,n=1", SlopeSetDescriptor::mgn(1, 1), W, 25, std::nullopt, L1, true),
           set_row("M:g=1,n=2", SlopeSetDescriptor::mgn(1, 2), W, 30, std::nullopt, L1, true),
           set_row("M:g=1,n=4", SlopeSetDescriptor::mgn(1, 4), W, 60, std::nullopt, L1, true),
           set_row("M:g=1", SlopeSetDescriptor::mg(1), W, 60, 8, L1, false)}};
    case 5:
      return FigureDef{
          5, W,
          {set_row("M:g=2,n=1", SlopeSetDescriptor::mgn(2, 1), W, 30, std::nullopt, L2, true),
           set_row("M:g=2,n=2", SlopeSetDescriptor::mgn(2, 2), W, 30, std::nullopt, L2, true),
           set_row("M:g=2,n=4", SlopeSetDescriptor::mgn(2, 4), W, 28, std::nullopt, L2, true),
           set_row("M:g=2", SlopeSetDescriptor::mg(2), W, 46, 12, L2, false)}};
    default:
      throw std::invalid_argument("unknown figure id " + std::to_string(id));
  }
}

PlotRow build_row(const FigureRowSpec& row) {
  PlotRow out;
  out.label = row.label;
  std::vector<PlotPoint> pts;
  for (const Slope& s : enumerate_set(row.desc, row.window)) {
    bool green = row.highlight && contains(*row.highlight, s);
    pts.push_back({s.value(), green ? PointClass::green : PointClass::member});
  }
  if (row.limit_circles) {
    // Accumulation points m/n of a fixed-level row; never members there.
    for (i64 m : series_offsets(row.desc)) {
      Rational lp(m, row.desc.n());
      if (row.window.interval.contains(lp)) pts.push_back({lp, PointClass::limit});
    }
  }
  std::sort(pts.begin(), pts.end(), [](const PlotPoint& a, const PlotPoint& b) {
    if (a.value != b.value) return a.value < b.value;
    return static_cast<int>(a.cls) < static_cast<int>(b.cls);
  });
  out.points = std::move(pts);
  return out;
}

PlotSpec figure_spec(int id) {
  FigureDef def = figure_def(id);
  PlotSpec spec;
  spec.window = def.window;
  for (const FigureRowSpec& row : def.rows) spec.rows.push_back(build_row(row));
  return spec;
}

namespace {

// Layout constants (SVG user units).
constexpr i64 kPlotWidth = 900;
constexpr i64 kMarginLeft = 110;
constexpr i64 kMarginRight = 30;
constexpr i64 kRowHeight = 46;
constexpr i64 kTopMargin = 34;
constexpr i64 kBottomMargin = 26;

// Horizontal position of value v in milli-units, computed exactly.
i64 position_milli(const Rational& v, const RationalInterval& window) {
  Rational rel = (v - window.lo().value()) / window.width();
  i128 numer = i128(rel.num()) * kPlotWidth * 1000;
  i128 den = rel.den();
  i128 rounded = (numer >= 0 ? numer + den / 2 : numer - den / 2) / den;
  return static_cast<i64>(rounded) + kMarginLeft * 1000;
}

std::string milli_str(i64 milli) {
  i64 whole = milli / 1000;
  i64 frac = milli % 1000;
  if (frac < 0) {
    frac += 1000;
    --whole;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%lld.%03lld", static_cast<long long>(whole),
                static_cast<long long>(frac));
  return buf;
}

void svg_point(std::ostringstream& out, i64 x_milli, i64 y, PointClass cls) {
  switch (cls) {
    case PointClass::member:
      out << "<circle cx=\"" << milli_str(x_milli) << "\" cy=\"" << y
          << "\" r=\"2.3\" fill=\"black\"/>\n";
      break;
    case PointClass::green:
      out << "<circle cx=\"" << milli_str(x_milli) << "\" cy=\"" << y
          << "\" r=\"2.8\" fill=\"#1b9e51\"/>\n";
      break;
    case PointClass::limit:
      out << "<circle cx=\"" << milli_str(x_milli) << "\" cy=\"" << y
          << "\" r=\"3.0\" fill=\"white\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
      break;
  }
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (!spec.window.bounded()) throw std::invalid_argument("plot window must be bounded");
  const i64 width = kMarginLeft + kPlotWidth + kMarginRight;
  const i64 height = kTopMargin + kRowHeight * static_cast<i64>(spec.rows.size()) + kBottomMargin;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  for (size_t r = 0; r < spec.rows.size(); ++r) {
    const PlotRow& row = spec.rows[r];
    const i64 y = kTopMargin + kRowHeight * static_cast<i64>(r) + kRowHeight / 2;
    out << "<text x=\"8\" y=\"" << y + 4
        << "\" font-family=\"monospace\" font-size=\"12\">" << row.label << "</text>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << y << "\" x2=\""
        << kMarginLeft + kPlotWidth << "\" y2=\"" << y
        << "\" stroke=\"black\" stroke-width=\"0.6\"/>\n";
    // Integer ticks with labels.
    for (i64 z = spec.window.lo().value().ceil(); z <= spec.window.hi().value().floor(); ++z) {
      i64 x = position_milli(Rational(z), spec.window);
      out << "<line x1=\"" << milli_str(x) << "\" y1=\"" << y - 3 << "\" x2=\""
          << milli_str(x) << "\" y2=\"" << y + 3
          << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
      out << "<text x=\"" << milli_str(x - 3500) << "\" y=\"" << y + 16
          << "\" font-family=\"monospace\" font-size=\"9\">" << z << "</text>\n";
    }
    for (const PlotPoint& pt : row.points)
      svg_point(out, position_milli(pt.value, spec.window), y, pt.cls);
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ascii(const PlotSpec& spec) {
  if (!spec.window.bounded()) throw std::invalid_argument("plot window must be bounded");
  constexpr i64 kCols = 121;
  std::ostringstream out;
  out << "window " << spec.window.str()
      << "   key: # highlighted member, * member, o excluded limit point\n";
  for (const PlotRow& row : spec.rows) {
    std::string line(kCols, '-');
    auto put = [&](const Rational& v, char c) {
      Rational rel = (v - spec.window.lo().value()) / spec.window.width();
      i128 col128 = (i128(rel.num()) * (kCols - 1) * 2 + rel.den()) / (i128(rel.den()) * 2);
      i64 col = static_cast<i64>(col128);
      if (col < 0 || col >= kCols) return;
      char& cell = line[static_cast<size_t>(col)];
      // Precedence: highlight over member over limit over axis.
      auto rank = [](char ch) {
        return ch == '#' ? 3 : ch == '*' ? 2 : ch == 'o' ? 1 : 0;
      };
      int new_rank = c == '#' ? 3 : c == '*' ? 2 : 1;
      if (new_rank >= rank(cell)) cell = c;
    };
    for (const PlotPoint& pt : row.points)
      put(pt.value, pt.cls == PointClass::green  ? '#'
                    : pt.cls == PointClass::member ? '*'
                                                   : 'o');
    out << row.label;
    out << std::string(row.label.size() < 12 ? 12 - row.label.size() : 1, ' ');
    out << line << "\n";
  }
  return out.str();
}

std::string render_figure(int id, bool as_svg) {
  PlotSpec spec = figure_spec(id);
  return as_svg ? render_svg(spec) : render_ascii(spec);
}

}  // namespace slopes
