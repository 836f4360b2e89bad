#include "scmp/polytope.hpp"

#include <bitset>
#include <map>

#include "scmp/errors.hpp"

namespace scmp {

namespace {

constexpr size_t kMaxConeRows = 192;
using RowBits = std::bitset<kMaxConeRows>;

// The positive factor turning v into a vector of coprime integers.
Rational primitive_scale(const Vec& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Integer l = 1;
    for (const Rational& r : v)
        if (r != 0) l = lcm(l, denominator(r));
    Integer g = 0;
    for (const Rational& r : v)
        if (r != 0) g = gcd(g, abs(numerator(r) * (l / denominator(r))));
    if (g == 0) return Rational(1);
    return Rational(l, g);
}

// Scales a vector in place to coprime integers. Keeps ray and constraint
// coefficients small during the double description run.
void make_primitive(Vec& v) {
    Rational scale = primitive_scale(v);
    if (scale == 1) return;
    for (Rational& r : v) r *= scale;
}

struct Ray {
    Vec u;         // point of the homogenized cone, primitive integer entries
    RowBits zero;  // processed constraint rows this ray satisfies with equality
};

// Extreme rays of the pointed cone {u : rows u <= 0} via incremental double
// description with the combinatorial adjacency test.
std::vector<Ray> double_description(const std::vector<Vec>& rows, int dim) {
    if (rows.size() > kMaxConeRows) throw Error("internal: too many cone rows");

    // Pick dim linearly independent rows for the initial cone.
    std::vector<Vec> eliminator;
    std::vector<int> lead_cols;
    std::vector<int> selected;
    std::vector<char> is_selected(rows.size(), 0);
    for (size_t i = 0; i < rows.size() && static_cast<int>(selected.size()) < dim; ++i) {
        Vec reduced = rows[i];
        for (size_t e = 0; e < eliminator.size(); ++e) {
            const Rational& factor = reduced[lead_cols[e]];
            if (factor == 0) continue;
            Rational f = factor;
            for (int c = 0; c < dim; ++c) reduced[c] -= f * eliminator[e][c];
        }
        int lead = -1;
        for (int c = 0; c < dim; ++c) {
            if (reduced[c] != 0) {
                lead = c;
                break;
            }
        }
        if (lead < 0) continue;
        Rational inv = 1 / reduced[lead];
        for (int c = 0; c < dim; ++c) reduced[c] *= inv;
        eliminator.push_back(std::move(reduced));
        lead_cols.push_back(lead);
        selected.push_back(static_cast<int>(i));
        is_selected[i] = 1;
    }
    if (static_cast<int>(selected.size()) < dim)
        throw Error("internal: homogenized cone is not pointed");

    // Order of processing: the initial rows (bits 0..dim-1), then the rest.
    std::vector<int> order = selected;
    for (size_t i = 0; i < rows.size(); ++i)
        if (!is_selected[i]) order.push_back(static_cast<int>(i));

    // Invert the initial block; its negated inverse columns are the initial
    // extreme rays (ray j is tight on every initial row except j).
    Mat aug(dim, 2 * dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) aug(r, c) = rows[selected[r]][c];
        aug(r, dim + r) = 1;
    }
    RrefSystem red = rref_system(aug, Vec());
    for (int r = 0; r < dim; ++r)
        if (r >= red.rank || red.pivot_col[r] != r)
            throw Error("internal: singular initial block");

    std::vector<Ray> rays;
    for (int j = 0; j < dim; ++j) {
        Ray ray;
        ray.u.resize(dim);
        for (int r = 0; r < dim; ++r) ray.u[r] = -red.m(r, dim + j);
        make_primitive(ray.u);
        for (int b = 0; b < dim; ++b)
            if (b != j) ray.zero.set(b);
        rays.push_back(std::move(ray));
    }

    for (size_t step = dim; step < order.size(); ++step) {
        const Vec& row = rows[order[step]];
        std::vector<Rational> side(rays.size());
        std::vector<int> plus, minus;
        for (size_t i = 0; i < rays.size(); ++i) {
            side[i] = dot(row, rays[i].u);
            if (side[i] > 0)
                plus.push_back(static_cast<int>(i));
            else if (side[i] < 0)
                minus.push_back(static_cast<int>(i));
            else
                rays[i].zero.set(step);
        }
        if (plus.empty()) continue;

        std::vector<Ray> created;
        for (int ip : plus) {
            for (int im : minus) {
                RowBits common = rays[ip].zero & rays[im].zero;
                if (static_cast<int>(common.count()) < dim - 2) continue;
                bool adjacent = true;
                for (size_t r = 0; r < rays.size(); ++r) {
                    if (static_cast<int>(r) == ip || static_cast<int>(r) == im) continue;
                    if ((common & rays[r].zero) == common) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Ray fresh;
                fresh.u.resize(dim);
                for (int c = 0; c < dim; ++c)
                    fresh.u[c] = side[ip] * rays[im].u[c] - side[im] * rays[ip].u[c];
                make_primitive(fresh.u);
                fresh.zero = common;
                fresh.zero.set(step);
                created.push_back(std::move(fresh));
            }
        }

        std::vector<Ray> kept;
        kept.reserve(rays.size() - plus.size() + created.size());
        for (size_t i = 0; i < rays.size(); ++i)
            if (side[i] <= 0) kept.push_back(std::move(rays[i]));
        for (Ray& r : created) kept.push_back(std::move(r));
        rays = std::move(kept);
        if (rays.empty()) break;
    }
    return rays;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const HPolytope& poly) {
    AffineSubspace sub = solve_affine(poly.eq, poly.eq_rhs);
    const int n = poly.dimension();
    const int k = sub.basis.cols;

    if (k == 0) {
        if (!poly.contains(sub.particular)) throw EmptyPolytope("infeasible H-representation");
        return {sub.particular};
    }

    // Substitute c = particular + basis t into the inequalities and merge
    // duplicate directions, keeping the tightest right-hand side.
    struct VecLess {
        bool operator()(const Vec& a, const Vec& b) const {
            return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        }
    };
    std::map<Vec, Rational, VecLess> reduced;
    for (int r = 0; r < poly.ineq.rows; ++r) {
        Vec dir(k, Rational(0));
        for (int c = 0; c < n; ++c) {
            const Rational& coeff = poly.ineq(r, c);
            if (coeff == 0) continue;
            for (int j = 0; j < k; ++j) dir[j] += coeff * sub.basis(c, j);
        }
        Rational rhs = poly.ineq_rhs[r] - dot(poly.ineq.row(r), sub.particular);
        bool zero = true;
        for (const Rational& d : dir)
            if (d != 0) {
                zero = false;
                break;
            }
        if (zero) {
            if (rhs < 0) throw EmptyPolytope("infeasible H-representation");
            continue;
        }
        // Canonicalize the direction alone so parallel rows share a key; the
        // right-hand side scales by the same factor and stays comparable.
        Rational scale = primitive_scale(dir);
        for (Rational& d : dir) d *= scale;
        rhs *= scale;
        auto [it, inserted] = reduced.emplace(std::move(dir), rhs);
        if (!inserted && rhs < it->second) it->second = rhs;
    }

    // Homogenize: (dir, -rhs) u <= 0 over u = (t, w), plus w >= 0.
    const int dim = k + 1;
    std::vector<Vec> cone_rows;
    for (auto& [dir, rhs] : reduced) {
        Vec row = dir;
        row.push_back(-rhs);
        make_primitive(row);
        cone_rows.push_back(std::move(row));
    }
    Vec w_row(dim, Rational(0));
    w_row[k] = -1;
    cone_rows.push_back(std::move(w_row));

    std::vector<Ray> rays = double_description(cone_rows, dim);

    std::vector<Vertex> vertices;
    for (const Ray& ray : rays) {
        if (ray.u[k] == 0) throw Error("internal: unbounded polyhedron in vertex enumeration");
        Vertex v = sub.particular;
        for (int j = 0; j < k; ++j) {
            Rational t = ray.u[j] / ray.u[k];
            if (t == 0) continue;
            for (int c = 0; c < n; ++c)
                if (sub.basis(c, j) != 0) v[c] += sub.basis(c, j) * t;
        }
        vertices.push_back(std::move(v));
    }
    if (vertices.empty()) throw EmptyPolytope("infeasible H-representation");
    return vertices;
}

}  // namespace scmp
