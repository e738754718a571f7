#include "hcube_cli/render.hpp"

#include <sstream>

#include "hcube/error.hpp"

namespace hcube::cli {

namespace {

constexpr int kPanel = 400;
constexpr int kMargin = 20;
constexpr int kSamplesPerCell = 4;

const char* region_fill(Region r) {
  switch (r) {
    case Region::I:
    case Region::IPrime:
    case Region::A1: return "#fbb4ae";
    case Region::II:
    case Region::IIPrime:
    case Region::A2: return "#b3cde3";
    case Region::III:
    case Region::IIIPrime:
    case Region::A3: return "#ccebc5";
    case Region::IV:
    case Region::IVPrime:
    case Region::A4: return "#decbe4";
  }
  return "#ffffff";
}

struct Panel {
  int left;
  int top;

  std::string px(const Rational& x) const { return to_decimal(left + (x + 1) * (kPanel / 2), 3); }
  std::string py(const Rational& y) const { return to_decimal(top + (1 - y) * (kPanel / 2), 3); }
};

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  long log_grid = 0;
  if (spec.grid < 8 || !exact_log2(Rational(spec.grid), log_grid)) {
    throw Error(ErrorCode::OutOfRange, "grid density must be a power of two >= 8");
  }

  const CellMap& map = spec.map;
  const CellMap single = map.single();
  const Panel source{kMargin, kMargin + 20};
  const Panel image{2 * kMargin + kPanel + 20, kMargin + 20};
  const int width = 2 * kPanel + 3 * kMargin + 20;
  const int height = kPanel + 2 * kMargin + 40;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<title>" << map.describe() << "</title>\n";
  svg << "<text x=\"" << source.left << "\" y=\"" << kMargin + 8 << "\" font-size=\"14\">pieces of "
      << single.describe() << "</text>\n";
  svg << "<text x=\"" << image.left << "\" y=\"" << kMargin + 8 << "\" font-size=\"14\">image grid under "
      << map.describe() << "</text>\n";

  // Source panel: piece coloring at cell centers.
  const Rational cell = Rational(2, spec.grid);
  svg << "<g id=\"regions\" stroke=\"none\">\n";
  for (int i = 0; i < spec.grid; ++i) {
    for (int j = 0; j < spec.grid; ++j) {
      const Rational x0 = -1 + cell * i;
      const Rational y1 = -1 + cell * (j + 1);
      const Rational cx = x0 + cell / 2;
      const Rational cy = y1 - cell / 2;
      const Region r = classify_region(single.kind, map.n, map.m, cx, cy);
      svg << "<rect x=\"" << source.px(x0) << "\" y=\"" << source.py(y1) << "\" width=\""
          << to_decimal(cell * (kPanel / 2), 3) << "\" height=\"" << to_decimal(cell * (kPanel / 2), 3)
          << "\" fill=\"" << region_fill(r) << "\" data-region=\"" << to_string(r) << "\"/>\n";
    }
  }
  svg << "</g>\n";
  svg << "<rect x=\"" << source.left << "\" y=\"" << source.top << "\" width=\"" << kPanel << "\" height=\""
      << kPanel << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // Image panel: deformed grid lines.
  const int samples = spec.grid * kSamplesPerCell;
  const Rational step = Rational(2, samples);
  svg << "<rect x=\"" << image.left << "\" y=\"" << image.top << "\" width=\"" << kPanel << "\" height=\""
      << kPanel << "\" fill=\"none\" stroke=\"#333\"/>\n";
  svg << "<g id=\"grid\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"0.8\">\n";
  for (int dir = 0; dir < 2; ++dir) {
    for (int i = 0; i <= spec.grid; ++i) {
      const Rational fixed = -1 + cell * i;
      svg << "<polyline data-line=\"" << (dir == 0 ? 'v' : 'h') << i << "\" points=\"";
      for (int k = 0; k <= samples; ++k) {
        const Rational moving = -1 + step * k;
        const CellPoint out = dir == 0 ? twist_eval_unchecked(map, fixed, moving)
                                       : twist_eval_unchecked(map, moving, fixed);
        svg << (k ? " " : "") << image.px(out.x) << ',' << image.py(out.y);
      }
      svg << "\"/>\n";
    }
  }
  svg << "</g>\n";

  if (spec.trace) {
    CellPoint p{spec.trace->coord(map.n), spec.trace->coord(map.m)};
    std::ostringstream path;
    std::ostringstream dots;
    for (int k = 0; k <= spec.trace_stages; ++k) {
      path << (k ? " L " : "M ") << image.px(p.x) << ' ' << image.py(p.y);
      dots << "<circle cx=\"" << image.px(p.x) << "\" cy=\"" << image.py(p.y) << "\" r=\"3\" data-stage=\"" << k
           << "\"/>\n";
      if (k < spec.trace_stages) p = twist_eval_unchecked(map, p.x, p.y);
    }
    svg << "<g id=\"trace\" stroke=\"#c0392b\" fill=\"#c0392b\">\n";
    svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke-width=\"1.5\"/>\n" << dots.str() << "</g>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace hcube::cli
