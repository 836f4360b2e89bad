#include "scmp/polytope.hpp"

#include <algorithm>

#include "scmp/errors.hpp"

namespace scmp {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

Polygon2 convex_hull(std::vector<Point2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) return Polygon2{std::move(points)};

    // Monotone chain; popping on cross <= 0 drops collinear interior points.
    std::vector<Point2> hull(2 * points.size());
    size_t h = 0;
    for (const Point2& p : points) {
        while (h >= 2 && cross(hull[h - 2], hull[h - 1], p) <= 0) --h;
        hull[h++] = p;
    }
    size_t lower = h + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (h >= lower && cross(hull[h - 2], hull[h - 1], *it) <= 0) --h;
        hull[h++] = *it;
    }
    hull.resize(h - 1);  // last point repeats the first
    return Polygon2{std::move(hull)};
}

Polygon2 project_hull(const std::vector<Vertex>& vertices, const ProjectionMap& map) {
    assert(map.m.rows == 2);
    std::vector<Point2> points;
    points.reserve(vertices.size());
    for (const Vertex& v : vertices) {
        Vec p = mat_vec(map.m, v);
        points.push_back({std::move(p[0]), std::move(p[1])});
    }
    return convex_hull(std::move(points));
}

Rational polygon_area(const Polygon2& p) {
    const auto& v = p.vertices;
    if (v.size() < 3) return Rational(0);
    Rational twice = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return abs(twice) / 2;
}

bool contains(const Polygon2& p, const Point2& point) {
    const auto& v = p.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return v[0] == point;
    if (v.size() == 2) {
        if (cross(v[0], v[1], point) != 0) return false;
        Rational t = (v[1].x - v[0].x) * (point.x - v[0].x) + (v[1].y - v[0].y) * (point.y - v[0].y);
        Rational len = (v[1].x - v[0].x) * (v[1].x - v[0].x) + (v[1].y - v[0].y) * (v[1].y - v[0].y);
        return t >= 0 && t <= len;
    }
    for (size_t i = 0; i < v.size(); ++i)
        if (cross(v[i], v[(i + 1) % v.size()], point) < 0) return false;
    return true;
}

std::pair<Interval, Interval> polygon_extents(const Polygon2& p) {
    if (p.vertices.empty()) throw Error("extents of an empty polygon");
    Interval x{p.vertices[0].x, p.vertices[0].x};
    Interval y{p.vertices[0].y, p.vertices[0].y};
    for (const Point2& v : p.vertices) {
        x.lo = std::min(x.lo, v.x);
        x.hi = std::max(x.hi, v.x);
        y.lo = std::min(y.lo, v.y);
        y.hi = std::max(y.hi, v.y);
    }
    return {x, y};
}

namespace {

// Extreme vertex of the projected polygon in direction `dir`, with ties along
// the optimal face broken by a second LP in direction `tie` (chosen
// non-parallel to the face so the maximizer is a polygon vertex).
Point2 support_vertex(const HPolytope& poly, const ProjectionMap& map, const Point2& dir,
                      const Point2& tie) {
    const int n = poly.dimension();
    Vec objective(n);
    for (int c = 0; c < n; ++c) objective[c] = dir.x * map.m(0, c) + dir.y * map.m(1, c);

    LpResult first = solve_lp(poly, objective, Sense::Max);
    if (first.status != LpResult::Status::Optimal) throw EmptyPolytope("empty feasible set");

    HPolytope pinned = poly;
    pinned.eq.rows += 1;
    pinned.eq.data.insert(pinned.eq.data.end(), objective.begin(), objective.end());
    pinned.eq_rhs.push_back(first.value);

    Vec tie_objective(n);
    for (int c = 0; c < n; ++c) tie_objective[c] = tie.x * map.m(0, c) + tie.y * map.m(1, c);
    LpResult second = solve_lp(pinned, tie_objective, Sense::Max);
    if (second.status != LpResult::Status::Optimal) throw Error("internal: pinned support LP failed");

    Vec p = mat_vec(map.m, second.witness);
    return {std::move(p[0]), std::move(p[1])};
}

void expand_chain(const HPolytope& poly, const ProjectionMap& map, const Point2& from,
                  const Point2& to, std::vector<Point2>& out) {
    Point2 edge{to.x - from.x, to.y - from.y};
    Point2 outward{edge.y, -edge.x};
    Point2 found = support_vertex(poly, map, outward, edge);
    Rational beyond = outward.x * (found.x - from.x) + outward.y * (found.y - from.y);
    if (beyond > 0) {
        expand_chain(poly, map, from, found, out);
        out.push_back(found);
        expand_chain(poly, map, found, to, out);
    }
}

}  // namespace

Polygon2 directional_extremes(const HPolytope& poly, const ProjectionMap& map) {
    Point2 lo = support_vertex(poly, map, {-1, 0}, {0, -1});
    Point2 hi = support_vertex(poly, map, {1, 0}, {0, 1});
    if (lo == hi) return Polygon2{{lo}};

    // Counterclockwise from the lexicographically smallest vertex: lower
    // chain from lo to hi, then upper chain back.
    std::vector<Point2> vertices{lo};
    expand_chain(poly, map, lo, hi, vertices);
    vertices.push_back(hi);
    expand_chain(poly, map, hi, lo, vertices);
    return Polygon2{std::move(vertices)};
}

}  // namespace scmp
