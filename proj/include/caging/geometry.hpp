#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace caging {

// Absolute tolerance for geometric predicates. Inputs are expected to be
// O(1)-scaled (the CLI normalizes objects to unit diameter).
inline constexpr double kGeomTol = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double dist(Point2 a, Point2 b) { return norm(a - b); }

// Counter-clockwise rotation by theta radians.
inline Point2 rotate(Point2 p, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

struct Box {
    Point2 lo;
    Point2 hi;
    double width() const { return hi.x - lo.x; }
    double height() const { return hi.y - lo.y; }
    bool contains(Point2 p, double tol = 0.0) const {
        return p.x >= lo.x - tol && p.x <= hi.x + tol && p.y >= lo.y - tol && p.y <= hi.y + tol;
    }
};

// Interior = { x : normal . x <= offset }.
struct Halfplane {
    Point2 normal;
    double offset = 0.0;
};

struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Convex polygon with counter-clockwise vertices and a matching halfplane
// representation. Construction validates convexity and orientation.
class ConvexPolygon {
  public:
    ConvexPolygon() = default;
    static ConvexPolygon from_vertices(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return vertices_; }
    const std::vector<Halfplane>& halfplanes() const { return halfplanes_; }

    double area() const;
    Point2 centroid() const;
    Box bounding_box() const;
    double max_radius() const;  // max |v| over vertices

    // Inclusive containment: true when within tol of the boundary.
    bool contains(Point2 p, double tol = kGeomTol) const;
    // Strict interior: false when within tol of the boundary.
    bool strictly_contains(Point2 p, double tol = kGeomTol) const;

  private:
    std::vector<Point2> vertices_;
    std::vector<Halfplane> halfplanes_;
};

// One boundary edge of the object, with outward unit normal and owning piece.
struct Facet {
    Point2 start;
    Point2 end;
    Point2 normal;
    int piece = -1;
};

// A reflex outline vertex. The normal cone covers outward directions between
// the two incident facet normals: angles [angle_lo, angle_lo + width].
struct ConcaveVertex {
    Point2 position;
    double angle_lo = 0.0;
    double width = 0.0;
    int outline_index = -1;

    bool cone_contains(Point2 direction, double tol) const {
        const double a = std::atan2(direction.y, direction.x);
        const double rel = wrap_angle(a - angle_lo);
        return rel >= -tol && rel <= width + tol;
    }
};

// Object as a union of convex pieces tiling a simple polygon.
struct DecomposedObject {
    std::vector<ConvexPolygon> pieces;
    std::vector<Point2> outline;  // CCW boundary chain
    std::vector<Facet> boundary_facets;
    std::vector<ConcaveVertex> concave_vertices;
    std::vector<std::vector<uint8_t>> piece_adjacency;
    std::vector<std::vector<Point2>> adjacency_witness;  // valid where adjacent

    int piece_count() const { return static_cast<int>(pieces.size()); }
    int facet_count() const { return static_cast<int>(boundary_facets.size()); }
    double area() const;
    double diameter() const;  // max pairwise vertex distance
    double max_radius() const;
    DecomposedObject scaled(double factor) const;
    DecomposedObject rotated(double theta) const;
};

struct Pose {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;  // radians, wrapped to (-pi, pi]
};

// A contact requirement: a boundary facet or a concave vertex.
struct ContactTarget {
    enum class Kind { kFacet, kConcaveVertex };
    Kind kind = Kind::kFacet;
    int index = 0;

    bool operator==(const ContactTarget& o) const { return kind == o.kind && index == o.index; }
};

// A set of contacts that pins the object at a limit orientation; finger
// assignment is up to permutation.
struct ContactPattern {
    std::vector<ContactTarget> contacts;
};

struct OppositePair {
    int facet = 0;
    ContactTarget other;
};

ConvexPolygon rotate_polygon(const ConvexPolygon& poly, double theta);

// Ear-clipping triangulation of a simple CCW outline (CW input is reversed).
// Rejects self-intersecting and zero-area outlines.
DecomposedObject triangulate(const std::vector<Point2>& outline);

// Builds the decomposition metadata for caller-provided convex pieces that
// tile the object (shared edges only, no overlapping interiors).
DecomposedObject decompose_from_pieces(std::vector<ConvexPolygon> pieces);

// All facet/facet pairs with antiparallel normals within angle_tol, plus
// facet/concave-vertex pairs where the reversed facet normal lies in the
// vertex cone.
std::vector<OppositePair> opposite_facet_pairs(const DecomposedObject& obj, double angle_tol);

// The contact patterns that can pin the object at a limit orientation:
// opposite pairs for two fingers; facet triples (pairwise non-parallel,
// positively spanning) and facet quadruples (non-co-directional, positively
// spanning) for three or more.
std::vector<ContactPattern> limit_assignment_set(const DecomposedObject& obj, int n_fingers,
                                                 double angle_tol = 1e-6);

// True when the direction set leaves no escape direction d with n.d <= 0 for
// every normal n (checked over the candidate extreme rays of the dual cone).
bool positively_spans(const std::vector<Point2>& normals, double tol = 1e-9);

double polygon_signed_area(const std::vector<Point2>& outline);

// Sutherland-Hodgman clip of a convex polygon against halfplanes; may return
// a degenerate (segment/point) vertex chain.
std::vector<Point2> clip_convex(const std::vector<Point2>& poly, const std::vector<Halfplane>& cutters,
                                double tol = kGeomTol);

}  // namespace caging
