#include "legendrian/render.hpp"

#include <cstdio>
#include <sstream>

namespace legendrian {

namespace {
constexpr int kScale = 40;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v * kScale);
    return buf;
}

void line(std::ostringstream& out, double x1, double y1, double x2, double y2) {
    out << "<line x1='" << num(x1) << "' y1='" << num(y1) << "' x2='" << num(x2) << "' y2='" << num(y2)
        << "' stroke='black' stroke-width='2' fill='none'/>\n";
}

void arc(std::ostringstream& out, double x1, double y1, double x2, double y2, bool left) {
    out << "<path d='M " << num(x1) << ' ' << num(y1) << " A " << num(0.5) << ' ' << num(0.5) << " 0 0 "
        << (left ? 0 : 1) << ' ' << num(x2) << ' ' << num(y2) << "' stroke='black' stroke-width='2' fill='none'/>\n";
}

std::string svg_wrap(const std::string& body, double w, double h) {
    std::ostringstream out;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << num(w) << "' height='" << num(h) << "' viewBox='0 0 "
        << num(w) << ' ' << num(h) << "'>\n"
        << body << "</svg>\n";
    return out.str();
}
}  // namespace

std::string render_front_svg(const FrontDiagram& d) {
    std::ostringstream body;
    int m = d.num_events();
    int maxk = 0;
    for (int g = 0; g <= m; ++g) maxk = std::max(maxk, d.strands_at(g));
    for (int g = 1; g < m; ++g)
        for (int lv = 1; lv <= d.strands_at(g); ++lv) line(body, g + 0.25, lv, g + 0.75, lv);
    for (int e = 0; e < m; ++e) {
        const FrontEvent& ev = d.events()[e];
        double x = e + 1;
        int i = ev.position;
        int kl = d.strands_at(e), kr = d.strands_at(e + 1);
        auto pass = [&](int jl, int jr) { line(body, x - 0.25, jl, x + 0.25, jr); };
        switch (ev.kind) {
            case EventKind::LeftCusp:
                arc(body, x + 0.25, i, x + 0.25, i + 1, true);
                for (int j = 1; j < i; ++j) pass(j, j);
                for (int j = i; j <= kl; ++j) pass(j, j + 2);
                break;
            case EventKind::RightCusp:
                arc(body, x - 0.25, i, x - 0.25, i + 1, false);
                for (int j = 1; j < i; ++j) pass(j, j);
                for (int j = i + 2; j <= kl; ++j) pass(j, j - 2);
                break;
            case EventKind::Crossing:
                pass(i, i + 1);
                pass(i + 1, i);
                for (int j = 1; j <= kr; ++j)
                    if (j != i && j != i + 1) pass(j, j);
                break;
        }
    }
    if (m) {
        const Basepoint& bp = d.basepoint();
        body << "<circle cx='" << num(bp.gap + 0.5) << "' cy='" << num(bp.strand) << "' r='4' fill='black'/>\n";
    }
    return svg_wrap(body.str(), m + 1.0, maxk + 1.0);
}

std::string render_resolved_svg(const FrontDiagram& d) {
    LagrangianDiagram L = resolve(d);
    std::ostringstream body;
    int ncols = static_cast<int>(L.columns().size());
    int maxk = 0;
    for (int g = 0; g < L.num_gaps(); ++g) maxk = std::max(maxk, L.strands_at(g));
    // horizontal strand pieces per gap (columns at x = 1..ncols)
    for (int g = 1; g < L.num_gaps(); ++g) {
        double x0 = g - 0.25 + 0.5, x1 = g + 0.25 + 0.5;
        if (g == L.num_gaps() - 1) x1 = x0;
        for (int lv = 1; lv <= L.strands_at(g); ++lv)
            if (x0 < x1) line(body, x0, lv, x1, lv);
    }
    for (int j = 0; j < ncols; ++j) {
        const Column& col = L.columns()[j];
        double x = j + 1;
        int i = col.level;
        int kl = L.strands_at(j);
        auto pass = [&](int jl, int jr) { line(body, x - 0.25, jl, x + 0.25, jr); };
        switch (col.kind) {
            case Column::Kind::Cap:
                arc(body, x + 0.25, i, x + 0.25, i + 1, true);
                for (int q = 1; q < i; ++q) pass(q, q);
                for (int q = i; q <= kl; ++q) pass(q, q + 2);
                break;
            case Column::Kind::Cup:
                arc(body, x - 0.25, i, x - 0.25, i + 1, false);
                for (int q = 1; q < i; ++q) pass(q, q);
                for (int q = i + 2; q <= kl; ++q) pass(q, q - 2);
                break;
            case Column::Kind::Swap: {
                pass(i, i + 1);
                pass(i + 1, i);
                for (int q = 1; q <= kl; ++q)
                    if (q != i && q != i + 1) pass(q, q);
                const Crossing& cr = L.crossings()[col.crossing];
                body << "<text x='" << num(x) << "' y='" << num(i + 0.9) << "' font-size='12' fill='gray'>"
                     << cr.label << "</text>\n";
                break;
            }
        }
    }
    return svg_wrap(body.str(), ncols + 1.0, maxk + 1.0);
}

}  // namespace legendrian
