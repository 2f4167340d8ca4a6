#include "cactuslab/svg_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

namespace cactuslab {

namespace {

// exact rational to fixed six decimals, round half up
std::string fixed6(const Rat& r) {
  Rat scaled = r * 1000000 + Rat(1, 2);
  Int n = rat_floor(scaled);
  bool neg = n < 0;
  if (neg) n = -n;
  Int whole = n / 1000000;
  Int frac = n % 1000000;
  std::string digits = frac.get_str();
  std::string out = (neg && (whole != 0 || frac != 0) ? "-" : "") + whole.get_str() + "." +
                    std::string(6 - digits.size(), '0') + digits;
  return out;
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  std::string out(buf);
  if (out == "-0.000000") out = "0.000000";
  return out;
}

constexpr const char* kHeader =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" ";

// circles are drawn in mathematical coordinates; the y flip happens at
// print time so labels stay upright
template <typename Num>
void emit_circle(std::ostringstream& svg, const Num& cx, const Num& cy, const Num& r,
                 const char* style) {
  svg << "<circle cx=\"" << fixed6(cx) << "\" cy=\"" << fixed6(-cy) << "\" r=\"" << fixed6(r)
      << "\" " << style << "/>\n";
}

template <typename Num>
void emit_label(std::ostringstream& svg, const Num& x, const Num& y, const Num& size, int index) {
  svg << "<text x=\"" << fixed6(x) << "\" y=\"" << fixed6(-y) << "\" font-size=\"" << fixed6(size)
      << "\" text-anchor=\"middle\" dominant-baseline=\"middle\" font-family=\"sans-serif\">"
      << index << "</text>\n";
}

}  // namespace

std::string render_discs(const FramedDiscConfig& a) {
  std::ostringstream svg;
  svg << kHeader << "viewBox=\"-1.100000 -1.100000 2.200000 2.200000\">\n";
  emit_circle(svg, Rat(0), Rat(0), Rat(1), "fill=\"none\" stroke=\"black\" stroke-width=\"0.012\"");
  // marked point of the ambient disc
  emit_circle(svg, Rat(1), Rat(0), Rat(1, 40), "fill=\"black\"");
  for (int i = 1; i <= a.arity(); ++i) {
    const LittleDisc& d = a.disc(i);
    emit_circle(svg, d.center.re, d.center.im, d.radius,
                "fill=\"none\" stroke=\"black\" stroke-width=\"0.008\"");
    RationalComplex tick = d.embed(RationalComplex(Rat(1), Rat(0)));
    svg << "<line x1=\"" << fixed6(d.center.re) << "\" y1=\"" << fixed6(Rat(-d.center.im))
        << "\" x2=\"" << fixed6(tick.re) << "\" y2=\"" << fixed6(Rat(-tick.im))
        << "\" stroke=\"black\" stroke-width=\"0.008\"/>\n";
    Rat size = d.radius / 2;
    emit_label(svg, d.center.re, d.center.im, Rat(size), i);
  }
  svg << "</svg>\n";
  return svg.str();
}

namespace {

struct LobeShape {
  double cx = 0, cy = 0, r = 0;
  double phase = 0;  // angle of the lobe's own parameter zero
};

double tau() { return 8 * std::atan(1.0); }

// position of parameter u on a placed lobe
void lobe_point_xy(const LobeShape& s, double u, double& x, double& y) {
  double th = s.phase + tau() * u;
  x = s.cx + s.r * std::cos(th);
  y = s.cy + s.r * std::sin(th);
}

}  // namespace

std::string render_cactus(const Cactus& c) {
  int n = c.arity();
  std::vector<IntervalPiece> pieces = c.interval_sequence();

  std::vector<double> radius(static_cast<std::size_t>(n) + 1, 0.0);
  for (const auto& pc : pieces) {
    Rat len = pc.end - pc.start;
    radius[static_cast<std::size_t>(pc.label)] += len.get_d() / 2;
  }

  // attachment data: where each non-root lobe first touches the tree
  struct Attach {
    int parent;
    TorusPoint at;
    Rat entry;
  };
  std::map<int, Attach> attach;
  // all lobes through one global point share a fan around it
  std::map<TorusPoint, std::vector<int>> groups;
  int root = pieces.front().label;
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    int lobe = pieces[k].label;
    if (lobe == root || attach.count(lobe)) continue;
    int parent = pieces[k - 1].label;
    TorusPoint at = normalize_torus(cactus_boundary_out(c, pieces[k].start));
    Rat entry = at[static_cast<std::size_t>(lobe - 1)];
    groups[at].push_back(lobe);
    attach[lobe] = Attach{parent, std::move(at), std::move(entry)};
  }

  std::vector<LobeShape> shape(static_cast<std::size_t>(n) + 1);
  shape[static_cast<std::size_t>(root)] =
      LobeShape{0.0, 0.0, radius[static_cast<std::size_t>(root)], -tau() / 4};
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    int lobe = pieces[k].label;
    if (lobe == root || shape[static_cast<std::size_t>(lobe)].r > 0) continue;
    const Attach& a = attach.at(lobe);
    const auto& mates = groups.at(a.at);
    // the whole fan hangs off the circle the first arrival came from
    const Attach& first = attach.at(mates.front());
    const LobeShape& ps = shape[static_cast<std::size_t>(first.parent)];
    double ax, ay;
    lobe_point_xy(ps, a.at[static_cast<std::size_t>(first.parent - 1)].get_d(), ax, ay);
    double beta = std::atan2(ay - ps.cy, ax - ps.cx);
    std::size_t slot = static_cast<std::size_t>(
        std::find(mates.begin(), mates.end(), lobe) - mates.begin());
    double spread = (static_cast<double>(slot + 1) / (static_cast<double>(mates.size()) + 1) - 0.5) *
                    tau() / 2;
    double dir = beta + spread;
    double r = radius[static_cast<std::size_t>(lobe)];
    LobeShape& out = shape[static_cast<std::size_t>(lobe)];
    out.cx = ax + r * std::cos(dir);
    out.cy = ay + r * std::sin(dir);
    out.r = r;
    out.phase = dir + tau() / 2 - tau() * a.entry.get_d();
  }

  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (int i = 1; i <= n; ++i) {
    const LobeShape& s = shape[static_cast<std::size_t>(i)];
    lo_x = std::min(lo_x, s.cx - s.r);
    hi_x = std::max(hi_x, s.cx + s.r);
    lo_y = std::min(lo_y, s.cy - s.r);
    hi_y = std::max(hi_y, s.cy + s.r);
  }
  double pad = 0.1;
  // viewBox in svg coordinates, so the y extent flips
  double vb_x = lo_x - pad, vb_y = -hi_y - pad;
  double vb_w = hi_x - lo_x + 2 * pad, vb_h = hi_y - lo_y + 2 * pad;

  std::ostringstream svg;
  svg << kHeader << "viewBox=\"" << fixed6(vb_x) << " " << fixed6(vb_y) << " " << fixed6(vb_w)
      << " " << fixed6(vb_h) << "\">\n";
  for (int i = 1; i <= n; ++i) {
    const LobeShape& s = shape[static_cast<std::size_t>(i)];
    emit_circle(svg, s.cx, s.cy, s.r, "fill=\"none\" stroke=\"black\" stroke-width=\"0.012\"");
    // local marked point: the lobe's own parameter zero
    double mx, my;
    lobe_point_xy(s, 0.0, mx, my);
    emit_circle(svg, mx, my, 0.018, "fill=\"white\" stroke=\"black\" stroke-width=\"0.008\"");
    emit_label(svg, s.cx, s.cy, s.r / 2, i);
  }
  // global marked point: where the outer boundary starts
  TorusPoint base = cactus_boundary_out(c, Rat(0));
  double gx, gy;
  lobe_point_xy(shape[static_cast<std::size_t>(root)],
                base[static_cast<std::size_t>(root - 1)].get_d(), gx, gy);
  emit_circle(svg, gx, gy, 0.024, "fill=\"black\"");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace cactuslab
