#include "monotoric/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "monotoric/io.hpp"

namespace monotoric {

namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

struct Canvas {
  double radius;
  double scale;
  double half;

  double x(const Rational& v) const { return half + scale * v.toDouble(); }
  double y(const Rational& v) const { return half - scale * v.toDouble(); }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return std::string(buf);
}

// Clip a region to the view box and return its boundary cycle (exact
// vertices, ordered counterclockwise around the exact barycenter).
std::vector<RatVec> clippedCycle(const Polyhedron& region, const Rational& R) {
  std::vector<HalfSpace> box;
  for (int i = 0; i < 2; ++i) {
    RatVec e = RatVec::Constant(2, Rational(0));
    e[i] = Rational(1);
    box.push_back({e, -R, false});
    box.push_back({(-e).eval(), -R, false});
  }
  Polyhedron clipped = region.intersect(Polyhedron(2, box));
  std::vector<RatVec> verts = clipped.vertices();
  if (verts.size() < 3) return verts;
  RatVec c = RatVec::Constant(2, Rational(0));
  for (const auto& v : verts) c += v;
  c /= Rational(static_cast<long>(verts.size()));
  auto half = [&](const RatVec& p) {
    Rational dx = p[0] - c[0], dy = p[1] - c[1];
    if (dy > Rational(0) || (dy.isZero() && dx > Rational(0))) return 0;
    return 1;
  };
  std::sort(verts.begin(), verts.end(), [&](const RatVec& a, const RatVec& b) {
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    Rational cross = (a[0] - c[0]) * (b[1] - c[1]) - (a[1] - c[1]) * (b[0] - c[0]);
    if (!cross.isZero()) return cross > Rational(0);
    LexLess lt;
    return lt(a, b);
  });
  return verts;
}

}  // namespace

std::string renderDivisionSvg(const Fan& F, const std::optional<MonomialDivision>& div,
                              const Rational& viewRadius) {
  if (F.dim() != 2) throw UnsupportedError("plot: only 2D fans can be drawn");
  Canvas cv{viewRadius.toDouble(), 0.0, 300.0};
  cv.scale = cv.half / cv.radius * 0.92;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";

  if (div) {
    for (int a = 0; a < div->numRays(); ++a) {
      auto cycle = clippedCycle(region(*div, a), viewRadius);
      if (cycle.size() < 3) continue;
      os << "<polygon points=\"";
      for (const auto& v : cycle) os << fmt(cv.x(v[0])) << "," << fmt(cv.y(v[1])) << " ";
      os << "\" fill=\"" << kPalette[a % 10] << "\" fill-opacity=\"0.45\" stroke=\""
         << kPalette[a % 10] << "\" stroke-width=\"1\"/>\n";
    }
  }

  // cone walls: rays extended to the box edge
  for (int i = 0; i < F.numRays(); ++i) {
    RatVec r = toRat(F.ray(i));
    double nx = r[0].toDouble(), ny = r[1].toDouble();
    double len = std::hypot(nx, ny);
    double ex = cv.half + nx / len * cv.half * 0.92;
    double ey = cv.half - ny / len * cv.half * 0.92;
    os << "<line x1=\"" << fmt(cv.half) << "\" y1=\"" << fmt(cv.half) << "\" x2=\"" << fmt(ex)
       << "\" y2=\"" << fmt(ey) << "\" stroke=\"black\" stroke-width=\"1\" "
          "stroke-dasharray=\"4 3\"/>\n";
    // arrow head on the primitive generator
    double ax = cv.x(r[0]);
    double ay = cv.y(r[1]);
    os << "<line x1=\"" << fmt(cv.half) << "\" y1=\"" << fmt(cv.half) << "\" x2=\"" << fmt(ax)
       << "\" y2=\"" << fmt(ay) << "\" stroke=\"black\" stroke-width=\"2.2\"/>\n";
    os << "<circle cx=\"" << fmt(ax) << "\" cy=\"" << fmt(ay)
       << "\" r=\"3.4\" fill=\"black\"/>\n";
    os << "<text x=\"" << fmt(ax + 7) << "\" y=\"" << fmt(ay - 5) << "\" font-size=\"13\">"
       << repr(F.ray(i)) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void writeDivisionSvg(const std::string& path, const Fan& F,
                      const std::optional<MonomialDivision>& div, const Rational& viewRadius) {
  std::ofstream out(resolveOutputPath(path));
  if (!out) throw InputError("plot: cannot open output file '" + path + "'");
  out << renderDivisionSvg(F, div, viewRadius);
}

std::string renderValuePathsSvg(const std::vector<std::vector<std::complex<double>>>& values) {
  double radius = 1.0;
  for (const auto& path : values) {
    for (const auto& v : path) radius = std::max(radius, std::abs(v));
  }
  radius *= 1.1;
  const double half = 300.0;
  auto X = [&](double re) { return half + re / radius * half * 0.95; };
  auto Y = [&](double im) { return half - im / radius * half * 0.95; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "<line x1=\"0\" y1=\"" << fmt(half) << "\" x2=\"600\" y2=\"" << fmt(half)
     << "\" stroke=\"#cccccc\"/>\n";
  os << "<line x1=\"" << fmt(half) << "\" y1=\"0\" x2=\"" << fmt(half)
     << "\" y2=\"600\" stroke=\"#cccccc\"/>\n";
  for (size_t p = 0; p < values.size(); ++p) {
    if (values[p].empty()) continue;
    os << "<polyline fill=\"none\" stroke=\"" << kPalette[p % 10]
       << "\" stroke-width=\"1.6\" points=\"";
    for (const auto& v : values[p]) os << fmt(X(v.real())) << "," << fmt(Y(v.imag())) << " ";
    os << "\"/>\n";
    os << "<circle cx=\"" << fmt(X(values[p].front().real())) << "\" cy=\""
       << fmt(Y(values[p].front().imag())) << "\" r=\"4\" fill=\"" << kPalette[p % 10]
       << "\"/>\n";
    os << "<circle cx=\"" << fmt(X(values[p].back().real())) << "\" cy=\""
       << fmt(Y(values[p].back().imag())) << "\" r=\"4\" fill=\"none\" stroke=\""
       << kPalette[p % 10] << "\" stroke-width=\"1.6\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void writeValuePathsSvg(const std::string& path,
                        const std::vector<std::vector<std::complex<double>>>& values) {
  std::ofstream out(resolveOutputPath(path));
  if (!out) throw InputError("plot: cannot open output file '" + path + "'");
  out << renderValuePathsSvg(values);
}

}  // namespace monotoric
