#include "adaptcoord/newton.hpp"

#include "adaptcoord/error.hpp"

#include <algorithm>
#include <limits>

namespace adaptcoord {

NewtonPolyhedron::NewtonPolyhedron(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) raise(ErrorCode::EmptySupport, "polyhedron without vertices");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        ensure(vertices_[i].A > vertices_[i - 1].A && vertices_[i].B < vertices_[i - 1].B, "vertices out of order");
}

std::vector<Edge> NewtonPolyhedron::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i) out.push_back({vertices_[i - 1], vertices_[i]});
    return out;
}

bool NewtonPolyhedron::contains(long j, long k) const {
    if (j < vertices_.front().A || k < vertices_.back().B) return false;
    for (const auto& e : edges()) {
        Weight w = edge_weight(e);
        if (w.degree_of(static_cast<int>(j), static_cast<int>(k)) < 1) return false;
    }
    return true;
}

const char* face_kind_name(FaceKind kind) {
    switch (kind) {
    case FaceKind::Vertex: return "vertex";
    case FaceKind::CompactEdge: return "compact-edge";
    case FaceKind::HorizontalHalfline: return "horizontal-halfline";
    case FaceKind::VerticalHalfline: return "vertical-halfline";
    }
    return "unknown";
}

NewtonPolyhedron build_polyhedron(const std::vector<Monomial>& support) {
    if (support.empty()) raise(ErrorCode::EmptySupport, "empty support");
    std::vector<Monomial> pts = support;
    std::sort(pts.begin(), pts.end(), [](const Monomial& a, const Monomial& b) {
        return a.j != b.j ? a.j < b.j : a.k < b.k;
    });
    // Staircase of minimal points: increasing j, strictly decreasing k.
    std::vector<Vertex> stair;
    long min_k = std::numeric_limits<long>::max();
    for (const auto& p : pts) {
        if (p.k < min_k) {
            stair.push_back({p.j, p.k});
            min_k = p.k;
        }
    }
    // Lower hull by monotone chain; collinear interior points are dropped.
    auto cross = [](const Vertex& o, const Vertex& a, const Vertex& b) {
        return (a.A - o.A) * (b.B - o.B) - (a.B - o.B) * (b.A - o.A);
    };
    std::vector<Vertex> hull;
    for (const auto& p : stair) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    return NewtonPolyhedron(std::move(hull));
}

NewtonPolyhedron build_polyhedron(const BiPoly& f) { return build_polyhedron(support(f)); }

namespace {

struct Crossing {
    Face face;
    Rational d;
};

Crossing locate_crossing(const NewtonPolyhedron& np) {
    const auto& v = np.vertices();
    const Vertex& first = v.front();
    const Vertex& last = v.back();
    if (first.A >= first.B)
        return {{first.A == first.B ? FaceKind::Vertex : FaceKind::VerticalHalfline, first, first}, Rational(first.A)};
    if (last.B >= last.A)
        return {{last.A == last.B ? FaceKind::Vertex : FaceKind::HorizontalHalfline, last, last}, Rational(last.B)};
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].A < v[i].B) continue;
        if (v[i].A == v[i].B) return {{FaceKind::Vertex, v[i], v[i]}, Rational(v[i].A)};
        const Vertex& p = v[i - 1];
        const Vertex& q = v[i];
        // Solve p + t (q - p) on the bisectrix.
        Rational t = make_rational(p.B - p.A, (q.A - p.A) - (q.B - p.B));
        Rational d = p.A + t * (q.A - p.A);
        return {{FaceKind::CompactEdge, p, q}, d};
    }
    raise(ErrorCode::InternalInvariantViolation, "bisectrix misses the polyhedron boundary");
}

} // namespace

Rational distance(const NewtonPolyhedron& np) { return locate_crossing(np).d; }

Face principal_face(const NewtonPolyhedron& np) { return locate_crossing(np).face; }

Weight edge_weight(const Edge& e) {
    const Vertex& p = e.left;
    const Vertex& q = e.right;
    long det = p.A * q.B - q.A * p.B;
    if (det == 0 || p.A >= q.A) raise(ErrorCode::DegenerateFace, "edge endpoints do not span a compact edge");
    return Weight::from_kappa(make_rational(q.B - p.B, det), make_rational(p.A - q.A, det));
}

Weight face_weight(const Face& face) {
    if (face.kind != FaceKind::CompactEdge) raise(ErrorCode::DegenerateFace, "face weight needs a compact edge");
    return edge_weight({face.a, face.b});
}

BiPoly face_part(const BiPoly& f, const Face& face) {
    BiPoly out;
    switch (face.kind) {
    case FaceKind::Vertex:
        out.add_term(static_cast<int>(face.a.A), static_cast<int>(face.a.B), f.coeff(static_cast<int>(face.a.A), static_cast<int>(face.a.B)));
        return out;
    case FaceKind::CompactEdge:
        return weighted_part(f, face_weight(face), Rational(1));
    case FaceKind::HorizontalHalfline:
        for (const auto& [e, c] : f.terms())
            if (e.k == face.a.B) out.add_term(e.j, e.k, c);
        return out;
    case FaceKind::VerticalHalfline:
        for (const auto& [e, c] : f.terms())
            if (e.j == face.a.A) out.add_term(e.j, e.k, c);
        return out;
    }
    return out;
}

BiPoly principal_part(const BiPoly& f) { return face_part(f, principal_face(build_polyhedron(f))); }

} // namespace adaptcoord
