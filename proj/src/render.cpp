#include "mds/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace mds::render {

namespace {

constexpr double kSize = 800.0;
constexpr double kPi = 3.14159265358979323846;

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

double to_double(const Int& v) { return v.get_d(); }

std::string fill_for(std::size_t chamber, const std::optional<std::size_t>& ample,
                     const std::vector<std::size_t>& class_size, const std::vector<std::size_t>& class_of) {
  if (ample && chamber == *ample) return "#000000";
  if (!class_of.empty() && class_size[class_of[chamber]] > 1) return "#b4b4b4";
  return "#ffffff";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

// Generator names grouped by the primitive ray of their degree.
std::map<IntVector, std::string> ray_labels(const cox::CoxPresentation& p) {
  std::map<IntVector, std::string> labels;
  auto degs = p.degrees();
  for (std::size_t i = 0; i < degs.size(); ++i) {
    if (is_zero(degs[i])) continue;
    auto& l = labels[make_primitive(degs[i])];
    l += (l.empty() ? "" : ",") + p.var_names[i];
  }
  return labels;
}

double angle_of(const IntVector& v) { return std::atan2(to_double(v[1]), to_double(v[0])); }

void sector_path(std::ostringstream& out, const geom::Cone& c, const std::string& fill) {
  const Pt o{kSize / 2, kSize / 2};
  const double rad = 300.0;
  std::vector<double> angles;
  for (const auto& r : c.rays()) angles.push_back(angle_of(r));
  for (const auto& l : c.lineality()) {
    angles.push_back(angle_of(l));
    angles.push_back(angle_of(-l));
  }
  std::sort(angles.begin(), angles.end());
  auto pt = [&](double t) { return Pt{o.x + rad * std::cos(t), o.y - rad * std::sin(t)}; };
  if (c.lineality().size() == 2 || angles.empty()) {
    out << "<circle cx=\"" << num(o.x) << "\" cy=\"" << num(o.y) << "\" r=\"" << num(rad) << "\" fill=\"" << fill
        << "\" stroke=\"none\"/>\n";
    return;
  }
  // The sector is the complement of the largest angular gap.
  std::size_t k = angles.size();
  std::size_t gap_at = 0;
  double gap = -1;
  for (std::size_t i = 0; i < k; ++i) {
    double g = (i + 1 < k ? angles[i + 1] : angles[0] + 2 * kPi) - angles[i];
    if (g > gap) {
      gap = g;
      gap_at = i;
    }
  }
  double start = angles[(gap_at + 1) % k];
  double sweep = 2 * kPi - gap;
  Pt a = pt(start), b = pt(start + sweep);
  out << "<path d=\"M " << num(o.x) << " " << num(o.y) << " L " << num(a.x) << " " << num(a.y) << " A " << num(rad)
      << " " << num(rad) << " 0 " << (sweep > kPi ? 1 : 0) << " 0 " << num(b.x) << " " << num(b.y)
      << " Z\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
}

void render_rank2(std::ostringstream& out, const cox::CoxPresentation& p, const engine::Analysis& a,
                  const std::optional<std::size_t>& ample, const std::vector<std::size_t>& class_size,
                  const std::vector<std::size_t>& class_of) {
  for (std::size_t i = 0; i < a.fan.size(); ++i)
    sector_path(out, a.fan.chambers[i], fill_for(i, ample, class_size, class_of));
  const Pt o{kSize / 2, kSize / 2};
  std::set<IntVector> walls;
  for (const auto& c : a.fan.chambers) {
    for (const auto& r : c.rays()) walls.insert(r);
    for (const auto& l : c.lineality()) {
      walls.insert(l);
      walls.insert(-l);
    }
  }
  for (const auto& w : walls) {
    double t = angle_of(w);
    out << "<line x1=\"" << num(o.x) << "\" y1=\"" << num(o.y) << "\" x2=\"" << num(o.x + 330 * std::cos(t))
        << "\" y2=\"" << num(o.y - 330 * std::sin(t)) << "\" stroke=\"#404040\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (const auto& [ray, label] : ray_labels(p)) {
    double t = angle_of(ray);
    Pt q{o.x + 355 * std::cos(t), o.y - 355 * std::sin(t)};
    out << "<circle cx=\"" << num(o.x + 330 * std::cos(t)) << "\" cy=\"" << num(o.y - 330 * std::sin(t))
        << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << num(q.x) << "\" y=\"" << num(q.y) << "\" font-size=\"14\" text-anchor=\"middle\">"
        << escape(label) << "</text>\n";
  }
}

void render_rank3(std::ostringstream& out, const cox::CoxPresentation& p, const engine::Analysis& a,
                  const std::optional<std::size_t>& ample, const std::vector<std::size_t>& class_size,
                  const std::vector<std::size_t>& class_of) {
  if (!a.eff.is_pointed()) throw PreconditionError("render: rank-3 effective cone must be pointed");
  IntVector u(3);
  for (const auto& n : a.eff.facet_normals()) u = u + n;
  const double ux = to_double(u[0]), uy = to_double(u[1]), uz = to_double(u[2]);
  // Orthonormal basis (e1, e2) of the plane orthogonal to u.
  double un = std::sqrt(ux * ux + uy * uy + uz * uz);
  double n0 = ux / un, n1 = uy / un, n2 = uz / un;
  double t0 = std::abs(n0) < 0.9 ? 1 : 0, t1 = std::abs(n0) < 0.9 ? 0 : 1, t2 = 0;
  double d = t0 * n0 + t1 * n1 + t2 * n2;
  double e0 = t0 - d * n0, e1 = t1 - d * n1, e2 = t2 - d * n2;
  double en = std::sqrt(e0 * e0 + e1 * e1 + e2 * e2);
  e0 /= en, e1 /= en, e2 /= en;
  double f0 = n1 * e2 - n2 * e1, f1 = n2 * e0 - n0 * e2, f2 = n0 * e1 - n1 * e0;
  auto project = [&](const IntVector& v) {
    double x = to_double(v[0]), y = to_double(v[1]), z = to_double(v[2]);
    double s = x * ux + y * uy + z * uz;
    x /= s, y /= s, z /= s;
    return Pt{x * e0 + y * e1 + z * e2, x * f0 + y * f1 + z * f2};
  };
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& r : a.eff.rays()) {
    Pt q = project(r);
    minx = std::min(minx, q.x), maxx = std::max(maxx, q.x);
    miny = std::min(miny, q.y), maxy = std::max(maxy, q.y);
  }
  double scale = 640.0 / std::max({maxx - minx, maxy - miny, 1e-9});
  double cx = (minx + maxx) / 2, cy = (miny + maxy) / 2;
  auto screen = [&](const IntVector& v) {
    Pt q = project(v);
    return Pt{kSize / 2 + (q.x - cx) * scale, kSize / 2 - (q.y - cy) * scale};
  };
  for (std::size_t i = 0; i < a.fan.size(); ++i) {
    std::vector<Pt> pts;
    for (const auto& r : a.fan.chambers[i].rays()) pts.push_back(screen(r));
    Pt c{0, 0};
    for (auto& q : pts) c.x += q.x / pts.size(), c.y += q.y / pts.size();
    std::sort(pts.begin(), pts.end(), [&](const Pt& x, const Pt& y) {
      return std::atan2(x.y - c.y, x.x - c.x) < std::atan2(y.y - c.y, y.x - c.x);
    });
    out << "<polygon points=\"";
    for (std::size_t j = 0; j < pts.size(); ++j) out << (j ? " " : "") << num(pts[j].x) << "," << num(pts[j].y);
    out << "\" fill=\"" << fill_for(i, ample, class_size, class_of)
        << "\" stroke=\"#404040\" stroke-dasharray=\"6,4\"/>\n";
  }
  for (const auto& [ray, label] : ray_labels(p)) {
    Pt q = screen(ray);
    out << "<circle cx=\"" << num(q.x) << "\" cy=\"" << num(q.y) << "\" r=\"4\" fill=\"#000000\"/>\n";
    out << "<text x=\"" << num(q.x + 8) << "\" y=\"" << num(q.y - 8) << "\" font-size=\"14\">" << escape(label)
        << "</text>\n";
  }
}

}  // namespace

std::string render_section(const cox::CoxPresentation& p, const engine::Analysis& a, std::optional<std::size_t> ample) {
  const std::size_t k = p.rank();
  if (k < 2 || k > 3) throw PreconditionError("render: class group rank must be 2 or 3");
  std::vector<std::size_t> class_size, class_of;
  if (ample) {
    auto an = engine::analyze_ample(a, *ample);
    class_of.assign(a.fan.size(), 0);
    for (std::size_t c = 0; c < an.partition.size(); ++c) {
      class_size.push_back(an.partition[c].size());
      for (auto i : an.partition[c]) class_of[i] = c;
    }
  }
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<title>" << escape(p.label) << "</title>\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"#ffffff\"/>\n";
  if (k == 2) render_rank2(out, p, a, ample, class_size, class_of);
  else render_rank3(out, p, a, ample, class_size, class_of);
  out << "</svg>\n";
  return out.str();
}

}  // namespace mds::render
