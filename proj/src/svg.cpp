#include "adaptcoord/svg.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace adaptcoord {

namespace {

constexpr int kUnit = 40;
constexpr int kPad = 30;
constexpr int kTitle = 24;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

long extent_of(const DiagramPanel& p) {
    long e = 0;
    for (const auto& v : p.vertices) e = std::max({e, v.A, v.B});
    return e + 1;
}

struct Frame {
    long extent;
    int x0; // pixel x of exponent 0
    int y0; // pixel y of exponent 0
    double px(double a) const { return x0 + a * kUnit; }
    double py(double b) const { return y0 - b * kUnit; }
};

void render_panel(std::ostringstream& os, const DiagramPanel& p, const Frame& fr) {
    const long E = fr.extent;
    const auto& vs = p.vertices;
    os << "  <g>\n";
    os << "    <text x=\"" << num(fr.px(0)) << "\" y=\"" << num(fr.py(E) - kPad / 2.0 - 4)
       << "\" font-family=\"monospace\" font-size=\"14\">" << escape(p.title) << "</text>\n";

    // Shaded polyhedron clipped to the drawing box.
    os << "    <polygon fill=\"#dbe8f5\" stroke=\"none\" points=\"";
    os << num(fr.px(vs.front().A)) << "," << num(fr.py(E));
    for (const auto& v : vs) os << " " << num(fr.px(v.A)) << "," << num(fr.py(v.B));
    os << " " << num(fr.px(E)) << "," << num(fr.py(vs.back().B));
    os << " " << num(fr.px(E)) << "," << num(fr.py(E)) << "\"/>\n";

    os << "    <line x1=\"" << num(fr.px(0)) << "\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << num(fr.px(E))
       << "\" y2=\"" << num(fr.py(0)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    os << "    <line x1=\"" << num(fr.px(0)) << "\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << num(fr.px(0))
       << "\" y2=\"" << num(fr.py(E)) << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    for (long b = 0; b <= E; ++b)
        for (long a = 0; a <= E; ++a)
            os << "    <circle cx=\"" << num(fr.px(a)) << "\" cy=\"" << num(fr.py(b))
               << "\" r=\"1.5\" fill=\"#bbb\"/>\n";

    os << "    <polyline fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\" points=\"";
    os << num(fr.px(vs.front().A)) << "," << num(fr.py(E));
    for (const auto& v : vs) os << " " << num(fr.px(v.A)) << "," << num(fr.py(v.B));
    os << " " << num(fr.px(E)) << "," << num(fr.py(vs.back().B)) << "\"/>\n";

    os << "    <line x1=\"" << num(fr.px(0)) << "\" y1=\"" << num(fr.py(0)) << "\" x2=\"" << num(fr.px(E))
       << "\" y2=\"" << num(fr.py(E)) << "\" stroke=\"#555\" stroke-width=\"1\" stroke-dasharray=\"4,4\"/>\n";

    const char* bold = "stroke=\"#c0392b\" stroke-width=\"4\" stroke-linecap=\"round\"";
    auto bold_line = [&](double a1, double b1, double a2, double b2) {
        os << "    <line x1=\"" << num(fr.px(a1)) << "\" y1=\"" << num(fr.py(b1)) << "\" x2=\"" << num(fr.px(a2))
           << "\" y2=\"" << num(fr.py(b2)) << "\" " << bold << "/>\n";
    };
    switch (p.face.kind) {
    case FaceKind::CompactEdge: bold_line(p.face.a.A, p.face.a.B, p.face.b.A, p.face.b.B); break;
    case FaceKind::HorizontalHalfline: bold_line(p.face.a.A, p.face.a.B, E, p.face.a.B); break;
    case FaceKind::VerticalHalfline: bold_line(p.face.a.A, p.face.a.B, p.face.a.A, E); break;
    case FaceKind::Vertex:
        os << "    <circle cx=\"" << num(fr.px(p.face.a.A)) << "\" cy=\"" << num(fr.py(p.face.a.B))
           << "\" r=\"6\" fill=\"none\" " << bold << "/>\n";
        break;
    }

    for (const auto& m : p.support) {
        if (m.j > E || m.k > E) continue;
        os << "    <circle cx=\"" << num(fr.px(m.j)) << "\" cy=\"" << num(fr.py(m.k))
           << "\" r=\"4\" fill=\"#1f4e79\"/>\n";
    }

    double d = p.distance.get_d();
    os << "    <circle cx=\"" << num(fr.px(d)) << "\" cy=\"" << num(fr.py(d))
       << "\" r=\"4\" fill=\"#fff\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
    os << "    <text x=\"" << num(fr.px(d) + 8) << "\" y=\"" << num(fr.py(d) + 4)
       << "\" font-family=\"monospace\" font-size=\"12\">d = " << to_string(p.distance) << " (" << num(d)
       << ")</text>\n";
    os << "  </g>\n";
}

} // namespace

DiagramPanel make_panel(const std::string& title, const BiPoly& f) {
    DiagramPanel p;
    p.title = title;
    p.support = support(f);
    NewtonPolyhedron np = build_polyhedron(p.support);
    p.vertices = np.vertices();
    p.distance = distance(np);
    p.face = principal_face(np);
    return p;
}

std::string render_svg(const std::vector<DiagramPanel>& panels) {
    if (panels.empty()) raise(ErrorCode::InvalidArgument, "no panels to render");
    long width = 0, height = 0;
    std::vector<Frame> frames;
    for (const auto& p : panels) {
        if (p.vertices.empty()) raise(ErrorCode::InvalidArgument, "panel without vertices");
        long E = extent_of(p);
        long w = 2 * kPad + E * kUnit;
        long h = 2 * kPad + kTitle + E * kUnit;
        frames.push_back({E, static_cast<int>(width + kPad), static_cast<int>(kTitle + kPad + E * kUnit)});
        width += w;
        height = std::max(height, h);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#fff\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) render_panel(os, panels[i], frames[i]);
    os << "</svg>\n";
    return os.str();
}

} // namespace adaptcoord
