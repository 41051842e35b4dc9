#include "report_io.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace rootclust {

namespace {

using nlohmann::ordered_json;

long bits_of(const Dyadic& d) { return static_cast<long>(d.bits()); }

ordered_json stats_json(const SolverStats& s, bool detailed) {
  ordered_json j;
  j["depth"] = s.depth;
  j["tree_size"] = s.tree_size;
  j["c0_calls"] = s.counts.c0_calls;
  j["cstar_calls"] = s.counts.cstar_calls;
  j["pstar_calls"] = s.counts.pstar_calls;
  j["tstar_calls"] = s.counts.tstar_calls;
  j["wall_ms"] = static_cast<long>(std::llround(s.wall_ms));
  if (detailed) {
    j["pstar_approx_calls"] = s.counts.pstar_approx_calls;
    j["approx_minus1"] = s.counts.approx_minus1;
    j["approx_minus2"] = s.counts.approx_minus2;
    j["c0_ms"] = s.counts.c0_ms;
    j["cstar_ms"] = s.counts.cstar_ms;
    j["tstar_ms"] = s.counts.tstar_ms;
    j["pstar_ms"] = s.counts.pstar_ms;
    j["pstar_approx_ms"] = s.counts.pstar_approx_ms;
    ordered_json hist = ordered_json::object();
    for (const auto& [bits, n] : s.counts.pstar_precisions) hist[std::to_string(bits)] = n;
    j["pstar_precisions"] = hist;
  }
  return j;
}

std::string emit_json(const ClusterReport& r, const EmitOptions& opt) {
  ordered_json j;
  j["degree"] = r.degree;
  j["roi"] = {{"cx", r.roi.center.re.to_decimal()},
              {"cy", r.roi.center.im.to_decimal()},
              {"w", r.roi.width.to_decimal()},
              {"bits", std::max({bits_of(r.roi.center.re), bits_of(r.roi.center.im), bits_of(r.roi.width)})}};
  j["epsilon_exp"] = r.eps_exp;
  j["algo"] = r.algo;
  ordered_json clusters = ordered_json::array();
  for (const auto& c : r.clusters) {
    clusters.push_back({{"center_re", c.disc.center.re.to_decimal()},
                        {"center_im", c.disc.center.im.to_decimal()},
                        {"radius", c.disc.radius.to_decimal()},
                        {"multiplicity", c.multiplicity},
                        {"bits", std::max({bits_of(c.disc.center.re), bits_of(c.disc.center.im),
                                           bits_of(c.disc.radius)})}});
  }
  j["clusters"] = clusters;
  j["stats"] = stats_json(r.stats, opt.detailed_stats);
  return j.dump(2) + "\n";
}

std::string emit_csv(const ClusterReport& r) {
  std::ostringstream out;
  out << "center_re,center_im,radius,multiplicity\n";
  for (const auto& c : r.clusters) {
    out << c.disc.center.re.to_decimal() << "," << c.disc.center.im.to_decimal() << ","
        << c.disc.radius.to_decimal() << "," << c.multiplicity << "\n";
  }
  return out.str();
}

std::string short_decimal(const Dyadic& d) {
  std::ostringstream s;
  s << std::setprecision(17) << d.to_double();
  return s.str();
}

std::string emit_txt(const ClusterReport& r, const EmitOptions& opt) {
  std::ostringstream out;
  out << "degree " << r.degree << ", region center (" << r.roi.center.re.to_decimal() << ", "
      << r.roi.center.im.to_decimal() << ") width " << r.roi.width.to_decimal() << ", epsilon 2^-"
      << r.eps_exp << ", algorithm " << r.algo << "\n";
  out << r.clusters.size() << " clusters, total multiplicity " << r.total_multiplicity() << "\n";
  for (std::size_t i = 0; i < r.clusters.size(); ++i) {
    const auto& c = r.clusters[i];
    out << std::setw(4) << i << "  m=" << c.multiplicity << "  center " << short_decimal(c.disc.center.re)
        << (c.disc.center.im.sign() < 0 ? " - " : " + ") << short_decimal(c.disc.center.im.abs())
        << "i  radius " << short_decimal(c.disc.radius) << "\n";
  }
  if (opt.detailed_stats) {
    const auto& s = r.stats;
    out << "depth " << s.depth << ", tree size " << s.tree_size << ", C0 " << s.counts.c0_calls << ", C* "
        << s.counts.cstar_calls << ", P* " << s.counts.pstar_calls << ", approx P* "
        << s.counts.pstar_approx_calls << ", T* " << s.counts.tstar_calls << ", " << std::fixed
        << std::setprecision(1) << s.wall_ms << " ms\n";
  }
  return out.str();
}

std::string emit_svg(const ClusterReport& r, const EmitOptions& opt) {
  constexpr double kSize = 800.0;
  constexpr double kMargin = 20.0;
  const double x0 = r.roi.xmin().to_double();
  const double y1 = r.roi.ymax().to_double();
  const double w = r.roi.width.to_double();
  const double scale = kSize / w;
  auto px = [&](double x) { return kMargin + (x - x0) * scale; };
  auto py = [&](double y) { return kMargin + (y1 - y) * scale; };
  std::ostringstream out;
  out << std::setprecision(10);
  const double full = kSize + 2 * kMargin;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full
      << "\" viewBox=\"0 0 " << full << " " << full << "\">\n";
  out << "  <rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kSize << "\" height=\"" << kSize
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (x0 < 0 && x0 + w > 0) {
    out << "  <line x1=\"" << px(0) << "\" y1=\"" << kMargin << "\" x2=\"" << px(0) << "\" y2=\""
        << kMargin + kSize << "\" stroke=\"#ccc\"/>\n";
  }
  if (y1 > 0 && y1 - w < 0) {
    out << "  <line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << kMargin + kSize << "\" y2=\""
        << py(0) << "\" stroke=\"#ccc\"/>\n";
  }
  for (const auto& c : r.clusters) {
    const double cx = px(c.disc.center.re.to_double());
    const double cy = py(c.disc.center.im.to_double());
    if (opt.draw_boxes) {
      const double bw = std::max(c.component_box.width.to_double() * scale, 1.0);
      out << "  <rect x=\"" << px(c.component_box.xmin().to_double()) << "\" y=\""
          << py(c.component_box.ymax().to_double()) << "\" width=\"" << bw << "\" height=\"" << bw
          << "\" fill=\"none\" stroke=\"#888\"/>\n";
    }
    const double rad = std::max(c.disc.radius.to_double() * scale, 2.0);
    out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << rad
        << "\" fill=\"none\" stroke=\"#c00\"/>\n";
    if (c.multiplicity >= 2) {
      out << "  <text x=\"" << cx + rad + 2 << "\" y=\"" << cy - rad - 2
          << "\" font-size=\"12\" fill=\"#00c\">" << c.multiplicity << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "txt") return OutputFormat::txt;
  if (name == "svg") return OutputFormat::svg;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string emit_report(const ClusterReport& report, OutputFormat format, const EmitOptions& options) {
  switch (format) {
    case OutputFormat::json:
      return emit_json(report, options);
    case OutputFormat::csv:
      return emit_csv(report);
    case OutputFormat::txt:
      return emit_txt(report, options);
    case OutputFormat::svg:
      return emit_svg(report, options);
  }
  throw std::invalid_argument("unknown output format");
}

ClusterReport parse_report_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  ClusterReport r;
  r.degree = j.at("degree").get<int>();
  const auto& roi = j.at("roi");
  r.roi = Box{{Dyadic::parse(roi.at("cx").get<std::string>()), Dyadic::parse(roi.at("cy").get<std::string>())},
              Dyadic::parse(roi.at("w").get<std::string>())};
  r.eps_exp = j.at("epsilon_exp").get<long>();
  r.algo = j.at("algo").get<std::string>();
  for (const auto& c : j.at("clusters")) {
    Cluster cl;
    cl.disc.center.re = Dyadic::parse(c.at("center_re").get<std::string>());
    cl.disc.center.im = Dyadic::parse(c.at("center_im").get<std::string>());
    cl.disc.radius = Dyadic::parse(c.at("radius").get<std::string>());
    cl.multiplicity = c.at("multiplicity").get<long>();
    // The component box is not serialized; its containing disc is.
    cl.component_box = Box{cl.disc.center, cl.disc.radius * Dyadic(4)};
    r.clusters.push_back(std::move(cl));
  }
  if (j.contains("stats")) {
    const auto& s = j.at("stats");
    r.stats.depth = s.value("depth", 0L);
    r.stats.tree_size = s.value("tree_size", 0L);
    r.stats.counts.c0_calls = s.value("c0_calls", 0L);
    r.stats.counts.cstar_calls = s.value("cstar_calls", 0L);
    r.stats.counts.pstar_calls = s.value("pstar_calls", 0L);
    r.stats.counts.tstar_calls = s.value("tstar_calls", 0L);
    r.stats.wall_ms = s.value("wall_ms", 0.0);
  }
  return r;
}

}  // namespace rootclust
