#pragma once

#include "adaptcoord/bipoly.hpp"

#include <vector>

namespace adaptcoord {

struct Vertex {
    long A = 0;
    long B = 0;
    friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
    Vertex left;  // smaller first coordinate
    Vertex right;
};

// Vertices ordered by increasing first coordinate (strictly decreasing second);
// the boundary continues with a vertical half-line above the first vertex and
// a horizontal half-line to the right of the last one.
class NewtonPolyhedron {
public:
    explicit NewtonPolyhedron(std::vector<Vertex> vertices);
    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::vector<Edge> edges() const;
    // True when (j, k) lies in the polyhedron.
    bool contains(long j, long k) const;

private:
    std::vector<Vertex> vertices_;
};

enum class FaceKind { Vertex, CompactEdge, HorizontalHalfline, VerticalHalfline };

const char* face_kind_name(FaceKind kind);

struct Face {
    FaceKind kind = FaceKind::Vertex;
    // Vertex and half-lines: the single vertex in `a`. Compact edge: endpoints a (left), b (right).
    Vertex a;
    Vertex b;
};

NewtonPolyhedron build_polyhedron(const std::vector<Monomial>& support);
NewtonPolyhedron build_polyhedron(const BiPoly& f);

Rational distance(const NewtonPolyhedron& np);
Face principal_face(const NewtonPolyhedron& np);

// Weight of a compact edge (DegenerateFace for other kinds).
Weight face_weight(const Face& face);
Weight edge_weight(const Edge& edge);

// Terms of f lying on the given face of its polyhedron.
BiPoly face_part(const BiPoly& f, const Face& face);
BiPoly principal_part(const BiPoly& f);

} // namespace adaptcoord
