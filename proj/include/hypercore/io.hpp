#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypercore/core_detector.hpp"
#include "hypercore/graph.hpp"
#include "hypercore/visual.hpp"

namespace hypercore {

// Fixed numeric format for CSV: 12 significant digits with trailing
// zeros kept, so downstream diffs are stable byte for byte.
inline std::string format_sig12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", x);
    return buf;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

// --- JSON bindings ---------------------------------------------------------

inline void to_json(nlohmann::json& j, const SeriesPoint& p) {
    j = nlohmann::json{{"n", p.n}, {"N", p.N}, {"proportion", p.proportion}};
}
inline void from_json(const nlohmann::json& j, SeriesPoint& p) {
    j.at("n").get_to(p.n);
    j.at("N").get_to(p.N);
    j.at("proportion").get_to(p.proportion);
}

inline void to_json(nlohmann::json& j, const CoreQuery& q) {
    j = nlohmann::json{{"centers", q.centers},
                       {"all_nodes_of_smallest", q.all_nodes_of_smallest},
                       {"radii", q.radii},
                       {"alphas", q.alphas},
                       {"tail_window", q.tail_window}};
}
inline void from_json(const nlohmann::json& j, CoreQuery& q) {
    j.at("centers").get_to(q.centers);
    j.at("all_nodes_of_smallest").get_to(q.all_nodes_of_smallest);
    j.at("radii").get_to(q.radii);
    j.at("alphas").get_to(q.alphas);
    j.at("tail_window").get_to(q.tail_window);
}

inline void to_json(nlohmann::json& j, const FamilyValidation& v) {
    j = nlohmann::json{{"indices", v.indices},
                       {"nesting_ok", v.nesting_ok},
                       {"closure_ok", v.closure_ok}};
}
inline void from_json(const nlohmann::json& j, FamilyValidation& v) {
    j.at("indices").get_to(v.indices);
    j.at("nesting_ok").get_to(v.nesting_ok);
    j.at("closure_ok").get_to(v.closure_ok);
}

inline void to_json(nlohmann::json& j, const CoreCell& c) {
    j = nlohmann::json{{"center", c.center},
                       {"radius", c.radius},
                       {"series", c.series},
                       {"liminf_estimate", c.liminf_estimate},
                       {"verdicts", c.verdicts}};
}
inline void from_json(const nlohmann::json& j, CoreCell& c) {
    j.at("center").get_to(c.center);
    j.at("radius").get_to(c.radius);
    j.at("series").get_to(c.series);
    j.at("liminf_estimate").get_to(c.liminf_estimate);
    j.at("verdicts").get_to(c.verdicts);
}

inline void to_json(nlohmann::json& j, const CoreReport& r) {
    j = nlohmann::json{{"family_kind", r.family_kind},
                       {"family_params", r.family_params},
                       {"n_min", r.n_min},
                       {"n_max", r.n_max},
                       {"sizes", r.sizes},
                       {"query", r.query},
                       {"validation", r.validation},
                       {"cells", r.cells},
                       {"note", "liminf estimates are at-horizon values, not true limits"}};
}
inline void from_json(const nlohmann::json& j, CoreReport& r) {
    j.at("family_kind").get_to(r.family_kind);
    j.at("family_params").get_to(r.family_params);
    j.at("n_min").get_to(r.n_min);
    j.at("n_max").get_to(r.n_max);
    j.at("sizes").get_to(r.sizes);
    j.at("query").get_to(r.query);
    j.at("validation").get_to(r.validation);
    j.at("cells").get_to(r.cells);
}

inline bool operator==(const CoreQuery& a, const CoreQuery& b) {
    return a.centers == b.centers && a.all_nodes_of_smallest == b.all_nodes_of_smallest &&
           a.radii == b.radii && a.alphas == b.alphas && a.tail_window == b.tail_window;
}

inline bool operator==(const CoreReport& a, const CoreReport& b) {
    return a.family_kind == b.family_kind && a.family_params == b.family_params &&
           a.n_min == b.n_min && a.n_max == b.n_max && a.sizes == b.sizes &&
           a.query == b.query && a.validation == b.validation && a.cells == b.cells;
}

// --- SVG -------------------------------------------------------------------

namespace svg {

inline const std::vector<std::string>& color_cycle() {
    static const std::vector<std::string> colors = {"#1f77b4", "#ff7f0e", "#2ca02c",
                                                    "#d62728", "#9467bd", "#8c564b"};
    return colors;
}

inline std::string coord(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

// Plain line plot on a fixed 800x600 viewBox: one polyline per series.
inline std::string line_plot(const std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>>& series,
                             const std::string& x_label, const std::string& y_label) {
    const double W = 800, H = 600, ml = 70, mr = 20, mt = 30, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymin = 0.0, ymax = 1e-12;
    for (const auto& [name, pts] : series)
        for (auto [x, y] : pts) {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (series.empty() || xmin > xmax) { xmin = 0; xmax = 1; }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += "<line x1=\"" + coord(ml) + "\" y1=\"" + coord(H - mb) + "\" x2=\"" + coord(W - mr) +
           "\" y2=\"" + coord(H - mb) + "\" stroke=\"black\"/>\n";
    out += "<line x1=\"" + coord(ml) + "\" y1=\"" + coord(mt) + "\" x2=\"" + coord(ml) +
           "\" y2=\"" + coord(H - mb) + "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 4.0;
        const double fy = ymin + (ymax - ymin) * i / 4.0;
        out += "<text x=\"" + coord(px(fx)) + "\" y=\"" + coord(H - mb + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + format_sig12(fx).substr(0, 6) +
               "</text>\n";
        out += "<text x=\"" + coord(ml - 8) + "\" y=\"" + coord(py(fy) + 4) +
               "\" font-size=\"12\" text-anchor=\"end\">" + format_sig12(fy).substr(0, 6) +
               "</text>\n";
    }
    out += "<text x=\"" + coord((ml + W - mr) / 2) + "\" y=\"" + coord(H - 10) +
           "\" font-size=\"14\" text-anchor=\"middle\">" + x_label + "</text>\n";
    out += "<text x=\"15\" y=\"" + coord((mt + H - mb) / 2) +
           "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
           coord((mt + H - mb) / 2) + ")\">" + y_label + "</text>\n";

    std::size_t ci = 0;
    double legend_y = mt + 10;
    for (const auto& [name, pts] : series) {
        const auto& color = color_cycle()[ci % color_cycle().size()];
        std::string poly;
        for (auto [x, y] : pts) poly += coord(px(x)) + "," + coord(py(y)) + " ";
        out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"" +
               poly + "\"/>\n";
        out += "<text x=\"" + coord(W - mr - 150) + "\" y=\"" + coord(legend_y) +
               "\" font-size=\"12\" fill=\"" + color + "\">" + name + "</text>\n";
        legend_y += 16;
        ++ci;
    }
    out += "</svg>\n";
    return out;
}

// Polar bar plot of one histogram: one wedge-shaped bar per arc, radius
// proportional to arc mass.
inline std::string polar_bars(const VisualHistogram& hist, const std::string& title) {
    const double cx = 400, cy = 300, R = 240;
    double max_mass = hist.max_mass();
    if (max_mass <= 0) max_mass = 1;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n";
    out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
    out += "<circle cx=\"" + coord(cx) + "\" cy=\"" + coord(cy) + "\" r=\"" + coord(R) +
           "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    for (int a = 0; a < hist.K; ++a) {
        const double m = hist.masses[static_cast<std::size_t>(a)];
        if (m <= 0) continue;
        const double r = R * m / max_mass;
        const double t0 = a * 2.0 * std::numbers::pi / hist.K;
        const double t1 = (a + 1) * 2.0 * std::numbers::pi / hist.K;
        // y axis points down in SVG; negate to keep angles ccw
        out += "<path d=\"M " + coord(cx) + " " + coord(cy) + " L " +
               coord(cx + r * std::cos(t0)) + " " + coord(cy - r * std::sin(t0)) + " A " +
               coord(r) + " " + coord(r) + " 0 " + (t1 - t0 > std::numbers::pi ? "1" : "0") +
               " 0 " + coord(cx + r * std::cos(t1)) + " " + coord(cy - r * std::sin(t1)) +
               " Z\" fill=\"" + color_cycle()[0] + "\" fill-opacity=\"0.7\"/>\n";
    }
    out += "<text x=\"400\" y=\"24\" font-size=\"16\" text-anchor=\"middle\">" + title +
           "</text>\n";
    out += "</svg>\n";
    return out;
}

} // namespace svg

// --- report writers --------------------------------------------------------

// CSV + JSON + SVG for a core report. The CSV carries one row per
// (n, center, radius) cell with the proportion at 12 significant digits.
inline void write_core_report(const CoreReport& report, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::string csv = "n,N,center,radius,proportion\n";
    for (const auto& cell : report.cells)
        for (const auto& pt : cell.series)
            csv += std::to_string(pt.n) + "," + std::to_string(pt.N) + "," +
                   std::to_string(cell.center) + "," + std::to_string(cell.radius) + "," +
                   format_sig12(pt.proportion) + "\n";
    write_text_file(dir / "proportions.csv", csv);

    nlohmann::json j = report;
    write_text_file(dir / "report.json", j.dump(2) + "\n");

    std::vector<std::pair<std::string, std::vector<std::pair<double, double>>>> series;
    for (const auto& cell : report.cells) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& pt : cell.series)
            pts.emplace_back(static_cast<double>(pt.n), pt.proportion);
        series.emplace_back("center " + std::to_string(cell.center) + ", r " +
                                std::to_string(cell.radius),
                            std::move(pts));
    }
    write_text_file(dir / "proportions.svg", svg::line_plot(series, "n", "proportion"));
}

inline CoreReport read_core_report(const std::filesystem::path& dir) {
    std::ifstream in(dir / "report.json");
    if (!in) throw std::runtime_error("cannot read " + (dir / "report.json").string());
    nlohmann::json j;
    in >> j;
    return j.get<CoreReport>();
}

// CSV + JSON + per-n polar SVG for boundary histograms.
inline void write_histograms(const std::vector<VisualHistogram>& hists,
                             const TrichotomyVerdict& verdict,
                             const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);

    std::string csv = "n,K,arc_index,mass\n";
    for (const auto& h : hists)
        for (int a = 0; a < h.K; ++a)
            csv += std::to_string(h.n) + "," + std::to_string(h.K) + "," + std::to_string(a) +
                   "," + format_sig12(h.masses[static_cast<std::size_t>(a)]) + "\n";
    write_text_file(dir / "histograms.csv", csv);

    nlohmann::json j{{"class", to_string(verdict.klass)},
                     {"max_mass_evidence", verdict.max_mass_evidence}};
    if (verdict.alpha_star) j["alpha_star"] = *verdict.alpha_star;
    write_text_file(dir / "verdict.json", j.dump(2) + "\n");

    // one polar plot per family index, at the finest K present for it
    std::map<int, const VisualHistogram*> best;
    for (const auto& h : hists) {
        auto it = best.find(h.n);
        if (it == best.end() || h.K > it->second->K) best[h.n] = &h;
    }
    for (const auto& [n, h] : best)
        write_text_file(dir / ("histogram_n" + std::to_string(n) + ".svg"),
                        svg::polar_bars(*h, "boundary mass, n=" + std::to_string(n) +
                                                ", K=" + std::to_string(h->K)));
}

// Edge list in the same format load_edge_list reads.
inline void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::string out;
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    write_text_file(path, out);
}

// Resolved-configuration echo: sorted key=value lines, one per setting,
// so a run can be reproduced from its own output directory.
inline void write_config_echo(const std::map<std::string, std::string>& resolved,
                              const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::string out;
    for (const auto& [k, v] : resolved) out += k + "=" + v + "\n";
    write_text_file(dir / "resolved.cfg", out);
}

} // namespace hypercore
