#pragma once

#include <vector>

#include "scmp/matrix.hpp"
#include "scmp/merge.hpp"

namespace scmp {

enum class Sense { Min, Max };

struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded };

    Status status = Status::Infeasible;
    Rational value;  // valid when Optimal
    Vec witness;     // a feasible optimizer, valid when Optimal
};

/// Exact optimum of <objective, x> over {x : ineq x <= rhs, eq x = rhs}.
/// Two-phase primal simplex with Bland's rule; rows of the form -x_i <= 0 are
/// recognized as variable bounds rather than treated as general rows.
LpResult solve_lp(const HPolytope& poly, const Vec& objective, Sense sense);

using Vertex = Vec;

/// Complete, duplicate-free vertex set of a bounded H-polytope, computed by
/// the double description method in the equality-reduced subspace.
/// Throws EmptyPolytope when the feasible set is empty.
std::vector<Vertex> enumerate_vertices(const HPolytope& poly);

struct Point2 {
    Rational x;
    Rational y;
    bool operator==(const Point2&) const = default;
    bool operator<(const Point2& o) const { return x != o.x ? x < o.x : y < o.y; }
};

/// Convex polygon in canonical form: vertices counterclockwise, no collinear
/// triples retained, starting at the lexicographically smallest vertex.
/// A point is stored as one vertex and a segment as two.
struct Polygon2 {
    std::vector<Point2> vertices;
    bool operator==(const Polygon2&) const = default;
};

/// Exact convex hull (monotone chain) in canonical form.
Polygon2 convex_hull(std::vector<Point2> points);

/// Projects every vertex through the 2x16 map and returns the hull.
Polygon2 project_hull(const std::vector<Vertex>& vertices, const ProjectionMap& map);

/// The same projected polygon computed without enumerating vertices: support
/// LPs in the plane, refined between adjacent extreme points until no new
/// vertex appears. Agrees with project_hull exactly on every instance.
Polygon2 directional_extremes(const HPolytope& poly, const ProjectionMap& map);

/// Shoelace area; zero for points and segments.
Rational polygon_area(const Polygon2& p);

/// Exact membership; the boundary counts as inside.
bool contains(const Polygon2& p, const Point2& point);

/// Axis-aligned extents of a polygon ([min x, max x], [min y, max y]).
std::pair<Interval, Interval> polygon_extents(const Polygon2& p);

}  // namespace scmp
