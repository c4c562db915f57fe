/* SPDX-License-Identifier: Apache-2.0
 *
 * figure.cpp -- SVG rendering of the stability plane and of the triangle.
 */
#include "figure.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "k3wall/polysearch.hpp"

namespace k3wall::cli {

namespace {

constexpr long kWidth = 800, kHeight = 600, kMargin = 40;

/* Affine map from an exact world box onto the canvas (y pointing up). */
class Canvas {
 public:
  Canvas(Rational x0, Rational x1, Rational y0, Rational y1)
      : x0_(std::move(x0)), y0_(std::move(y0)) {
    if (x1 <= x0_ || y1 <= y0_) throw std::invalid_argument("figure: empty window");
    sx_ = Rational(kWidth - 2 * kMargin) / (x1 - x0_);
    sy_ = Rational(kHeight - 2 * kMargin) / (y1 - y0_);
    x1_ = std::move(x1);
    y1_ = std::move(y1);
  }
  std::string x(const Rational& wx) const { return decimal_round_half_away(Rational(kMargin) + (wx - x0_) * sx_, 3); }
  std::string y(const Rational& wy) const {
    return decimal_round_half_away(Rational(kHeight - kMargin) - (wy - y0_) * sy_, 3);
  }
  std::string xy(const RatPoint& pt) const { return x(pt.x) + "," + y(pt.y); }
  const Rational& x0() const { return x0_; }
  const Rational& x1() const { return x1_; }
  const Rational& y0() const { return y0_; }
  const Rational& y1() const { return y1_; }

 private:
  Rational x0_, x1_, y0_, y1_, sx_, sy_;
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string header(const std::string& title, const std::string& desc) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
     << "<title>" << xml_escape(title) << "</title>\n"
     << "<desc>" << xml_escape(desc) << "</desc>\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  return os.str();
}

std::string polygon_path(const Canvas& cv, const std::vector<RatPoint>& pts, bool closed, const std::string& id,
                         const std::string& cls, const std::string& style) {
  std::ostringstream os;
  os << "<path id=\"" << id << "\" class=\"" << cls << "\" d=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " L " : "M ") << cv.xy(pts[i]);
  if (closed) os << " Z";
  os << "\" " << style << "/>\n";
  return os.str();
}

std::string label(const Canvas& cv, const RatPoint& pt, const std::string& text) {
  std::ostringstream os;
  os << "<circle class=\"vertex\" cx=\"" << cv.x(pt.x) << "\" cy=\"" << cv.y(pt.y)
     << "\" r=\"3\" fill=\"black\"/>\n"
     << "<text x=\"" << cv.x(pt.x) << "\" y=\"" << cv.y(pt.y) << "\" dx=\"5\" dy=\"-5\" font-family=\"sans-serif\" "
     << "font-size=\"12\">" << xml_escape(text) << "</text>\n";
  return os.str();
}

std::vector<RatPoint> chain_points(const Chain& ch) {
  std::vector<RatPoint> out;
  for (const auto& g : ch.vertices) out.push_back(g.rat());
  return out;
}

/* Clip the segment a -> b to the canvas window (Liang-Barsky, exact). */
bool clip(const Canvas& cv, RatPoint& a, RatPoint& b) {
  Rational t0(0), t1(1);
  const Rational dx = b.x - a.x, dy = b.y - a.y;
  auto edge = [&](const Rational& pcoef, const Rational& qcoef) {
    if (sgn(pcoef) == 0) return sgn(qcoef) >= 0;
    const Rational r = qcoef / pcoef;
    if (sgn(pcoef) < 0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
    return true;
  };
  if (!edge(-dx, a.x - cv.x0()) || !edge(dx, cv.x1() - a.x) || !edge(-dy, a.y - cv.y0()) ||
      !edge(dy, cv.y1() - a.y))
    return false;
  const RatPoint a0 = a;
  a = RatPoint{a0.x + t0 * dx, a0.y + t0 * dy};
  b = RatPoint{a0.x + t1 * dx, a0.y + t1 * dy};
  return true;
}

std::string parabola(const Canvas& cv, const Surface& X) {
  constexpr long kSamples = 400;
  std::ostringstream os;
  os << "<path id=\"parabola\" class=\"parabola\" d=\"";
  bool pen = false;
  for (long i = 0; i <= kSamples; ++i) {
    const Rational x = cv.x0() + (cv.x1() - cv.x0()) * make_rational(i, kSamples);
    const Rational y = Rational(X.p()) * x * x;
    if (y > cv.y1()) {
      pen = false;
      continue;
    }
    os << (pen ? " L " : " M ") << cv.xy(RatPoint{x, y});
    pen = true;
  }
  os << "\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"/>\n";
  return os.str();
}

std::string holes(const Canvas& cv, const Surface& X, std::int64_t s_max, std::size_t& count) {
  Region box;
  box.vertices = {RatPoint{cv.x0(), cv.y0()}, RatPoint{cv.x1(), cv.y0()}, RatPoint{cv.x1(), cv.y1()},
                  RatPoint{cv.x0(), cv.y1()}};
  box.edge_open_included = {true, true, true, true};
  box.clip_to_cone = true;
  const RootScan scan = enumerate_roots_in_region(box, X, s_max);
  std::ostringstream os;
  count = 0;
  for (const auto& delta : scan.roots) {
    Segment hs = hole_segment(delta, X);
    RatPoint a = hs.a, b = hs.b;
    if (!clip(cv, a, b)) continue;
    ++count;
    os << "<path class=\"hole\" d=\"M " << cv.xy(a) << " L " << cv.xy(b)
       << "\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"1\"><title>" << xml_escape(delta.to_string())
       << "</title></path>\n";
  }
  return os.str();
}

std::string plane_figure(const Surface& X, bool grey, const FigureOptions& opt) {
  const GreyVertices gv = grey_vertices(X);
  const std::vector<RatPoint> pts{gv.o, gv.p_u, gv.q, gv.p_v, gv.o_prime};
  Rational xmin = pts[0].x, xmax = pts[0].x, ymax = pts[0].y;
  for (const auto& pt : pts) {
    if (pt.x < xmin) xmin = pt.x;
    if (pt.x > xmax) xmax = pt.x;
    if (pt.y > ymax) ymax = pt.y;
  }
  const Rational padx = (xmax - xmin) / 4, pady = ymax / 4;
  const Canvas cv(xmin - padx, xmax + padx, Rational(0), ymax + pady);
  std::size_t n_holes = 0;
  const std::string hole_svg = holes(cv, X, opt.hole_smax, n_holes);
  std::ostringstream os;
  const std::string title = std::string(grey ? "Grey region" : "Holes") + " for p = " + std::to_string(X.p());
  os << header(title, "parabola y = " + std::to_string(X.p()) + " x^2; " + std::to_string(n_holes) +
                          " holes of roots with s <= " + std::to_string(opt.hole_smax) +
                          "; exact coordinates rounded to three decimals");
  if (grey) {
    os << polygon_path(cv, {gv.o, gv.p_v, gv.q, gv.p_u}, true, "grey-region", "polygon",
                       "fill=\"#c8c8c8\" stroke=\"#606060\" stroke-width=\"1\"");
    os << polygon_path(cv, {gv.p_u, gv.p_v}, false, "first-wall", "wall",
                       "fill=\"none\" stroke=\"black\" stroke-dasharray=\"4,3\"");
  }
  os << parabola(cv, X);
  os << hole_svg;
  if (grey) {
    os << label(cv, gv.o, "o") << label(cv, gv.p_u, "p_u") << label(cv, gv.q, "q") << label(cv, gv.p_v, "p_v")
       << label(cv, gv.o_prime, "o'");
  } else {
    os << label(cv, gv.o, "o");
  }
  os << "</svg>\n";
  return os.str();
}

std::string triangle_figure(const Surface& X, const FigureOptions& opt) {
  const Triangle t = triangle(X);
  const std::vector<GaussPoint> lattice = lattice_points(t);
  const Rational x0(std::min<long>(t.z1.a, 0) - 1), x1(t.z2.a + 1), y0(-1), y1(t.z2.b + 1);
  const Canvas cv(x0, x1, y0, y1);
  const bool detailed = lattice.size() <= opt.max_lattice_points;
  std::ostringstream os;
  std::string desc = "triangle o z1 z2 with " + std::to_string(lattice.size()) + " lattice points";
  if (detailed) desc += ", and the maximizing interior chains of the plain and refined searches";
  else desc += "; too many lattice points for chains and markers";
  os << header("Triangle for (p, m) = (" + std::to_string(t.p) + ", " + std::to_string(t.m) + ")", desc);
  os << polygon_path(cv, {t.o.rat(), t.z1.rat(), t.z2.rat()}, true, "triangle", "polygon",
                     "fill=\"#eeeeee\" stroke=\"black\" stroke-width=\"1.5\"");
  if (detailed) {
    SearchOptions so;
    so.budget_sec = opt.budget_sec;
    so.phase2 = false;
    const Verdict plain = max_interior_bound(X, SearchMode::Plain, so);
    const Verdict refined = max_interior_bound(X, SearchMode::Refined, so);
    if (plain.status == VerdictStatus::ResourceCapped || refined.status == VerdictStatus::ResourceCapped)
      throw std::runtime_error("figure: chain search exceeded the budget");
    os << polygon_path(cv, chain_points(plain.witness), true, "plain-chain", "polygon",
                       "fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\"");
    os << polygon_path(cv, chain_points(refined.witness), true, "refined-chain", "polygon",
                       "fill=\"none\" stroke=\"#b03030\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"");
    for (const auto& g : lattice)
      os << "<circle class=\"lattice\" cx=\"" << cv.x(Rational(static_cast<long>(g.a))) << "\" cy=\""
         << cv.y(Rational(static_cast<long>(g.b))) << "\" r=\"1.5\" fill=\"#404040\"/>\n";
  }
  os << label(cv, t.o.rat(), "o") << label(cv, t.z1.rat(), "z1") << label(cv, t.z2.rat(), "z2");
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_figure(const Surface& X, FigureKind kind, const FigureOptions& opt) {
  switch (kind) {
    case FigureKind::Triangle: return triangle_figure(X, opt);
    case FigureKind::Grey: return plane_figure(X, true, opt);
    case FigureKind::Holes: return plane_figure(X, false, opt);
  }
  throw std::invalid_argument("figure: unknown kind");
}

}  // namespace k3wall::cli
