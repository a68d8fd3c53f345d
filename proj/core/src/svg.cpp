#include <algorithm>
#include <cerrno>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "pytri/packing.hpp"

namespace pytri {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct View {
  double cx, cy, scale, half;
  double x(const Rational& v) const { return half + (v.get_d() - cx) * scale; }
  double y(const Rational& v) const { return half - (v.get_d() - cy) * scale; }
};

View view_of(const Packing& p, const SvgOptions& opts) {
  const double half = opts.radius_px + opts.margin_px;
  if (auto e = p.enclosing()) {
    const PackedCircle& outer = p.circles[*e];
    const PlanePoint c = outer.center();
    return {c.x.get_d(), c.y.get_d(), opts.radius_px / outer.radius().get_d(), half};
  }
  double lo_x = std::numeric_limits<double>::max(), hi_x = -lo_x;
  double lo_y = lo_x, hi_y = -lo_x;
  for (const PackedCircle& c : p.circles) {
    const PlanePoint o = c.center();
    const double r = c.radius().get_d();
    lo_x = std::min(lo_x, o.x.get_d() - r);
    hi_x = std::max(hi_x, o.x.get_d() + r);
    lo_y = std::min(lo_y, o.y.get_d() - r);
    hi_y = std::max(hi_y, o.y.get_d() + r);
  }
  const double extent = std::max(hi_x - lo_x, hi_y - lo_y);
  return {(lo_x + hi_x) / 2, (lo_y + hi_y) / 2, extent > 0 ? 2 * opts.radius_px / extent : 1.0, half};
}

}  // namespace

std::string render_svg(const Packing& p, const SvgOptions& opts) {
  const View v = view_of(p, opts);
  const std::string size = fmt(2 * v.half);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  const auto outer = p.enclosing();
  const double outer_r = outer ? p.circles[*outer].radius().get_d() : 0.0;
  std::ostringstream labels;
  for (std::size_t i = 0; i < p.circles.size(); ++i) {
    const PackedCircle& c = p.circles[i];
    const PlanePoint o = c.center();
    const double r = c.radius().get_d();
    const double r_px = r * v.scale;
    out << "<circle cx=\"" << fmt(v.x(o.x)) << "\" cy=\"" << fmt(v.y(o.y)) << "\" r=\"" << fmt(r_px)
        << "\" data-k=\"" << to_string(c.k) << '"';
    if (c.k < 0) {
      out << " fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    } else {
      out << " fill=\"#dbe9f6\" stroke=\"#1f3b57\" stroke-width=\"1\"/>\n";
    }
    if (!opts.labels || !outer || r < opts.label_min_radius * outer_r) continue;
    // the enclosing circle is labeled just inside its top edge
    const double font = c.k < 0 ? 24.0 : std::max(8.0, r_px * 0.5);
    const double y = c.k < 0 ? v.y(o.y) - r_px + font * 1.2 : v.y(o.y) + font * 0.35;
    labels << "<text x=\"" << fmt(v.x(o.x)) << "\" y=\"" << fmt(y)
           << "\" font-family=\"sans-serif\" font-size=\"" << fmt(font)
           << "\" text-anchor=\"middle\">" << to_string(c.k) << "</text>\n";
  }
  out << labels.str() << "</svg>\n";
  return out.str();
}

void write_svg(const Packing& p, const std::filesystem::path& path, const SvgOptions& opts) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::system_error(errno ? errno : EIO, std::generic_category(), "cannot open " + path.string());
  }
  file << render_svg(p, opts);
  file.close();
  if (!file) throw std::system_error(EIO, std::generic_category(), "cannot write " + path.string());
}

std::string circles_json_lines(const Packing& p) {
  std::string out;
  for (const PackedCircle& c : p.circles) {
    const PlanePoint o = c.center();
    nlohmann::ordered_json line;
    if (is_integral(c.k) && mpz_fits_slong_p(c.k.get_num_mpz_t()) != 0) {
      line["curvature"] = c.k.get_num().get_si();
    } else {
      line["curvature"] = to_string(c.k);
    }
    line["x"] = to_string(o.x);
    line["y"] = to_string(o.y);
    line["depth"] = c.depth;
    out += line.dump();
    out += '\n';
  }
  return out;
}

}  // namespace pytri
