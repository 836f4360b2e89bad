#include "scmp/polytope.hpp"

#include <algorithm>

#include "scmp/errors.hpp"

namespace scmp {

namespace {

// Full-tableau two-phase simplex over exact rationals. Bland's rule for both
// the entering and the leaving variable guarantees termination.
class SimplexTableau {
  public:
    SimplexTableau(const HPolytope& poly, const Vec& objective, Sense sense) {
        const int n = poly.dimension();
        assert(static_cast<int>(objective.size()) == n);

        // Rows of the form -s * x_j <= 0 (s > 0) are variable bounds, not
        // general constraints.
        nonneg_.assign(n, false);
        std::vector<int> general_rows;
        for (int r = 0; r < poly.ineq.rows; ++r) {
            int nonzero_col = -1;
            int nonzeros = 0;
            for (int c = 0; c < n && nonzeros < 2; ++c) {
                if (poly.ineq(r, c) != 0) {
                    ++nonzeros;
                    nonzero_col = c;
                }
            }
            if (nonzeros == 1 && poly.ineq(r, nonzero_col) < 0 && poly.ineq_rhs[r] == 0)
                nonneg_[nonzero_col] = true;
            else
                general_rows.push_back(r);
        }

        // Column layout: one column per nonnegative variable, two (u, v with
        // x = u - v) per free variable, then one slack per general row.
        for (int j = 0; j < n; ++j) {
            col_var_.push_back({j, 1});
            if (!nonneg_[j]) col_var_.push_back({j, -1});
        }
        n_struct_ = static_cast<int>(col_var_.size());
        n_slack_ = static_cast<int>(general_rows.size());
        const int m = n_slack_ + poly.eq.rows;
        n_cols_ = n_struct_ + n_slack_ + m;  // artificials appended at the end
        art_begin_ = n_struct_ + n_slack_;

        rows_.assign(m, Vec(n_cols_ + 1, Rational(0)));
        basis_.assign(m, -1);

        auto fill_row = [&](int tr, const Mat& src, int sr, const Rational& rhs, int slack) {
            bool flip = rhs < 0;
            for (int c = 0; c < n_struct_; ++c) {
                const Rational& v = src(sr, col_var_[c].first);
                if (v == 0) continue;
                rows_[tr][c] = flip ? Rational(-v * col_var_[c].second) : Rational(v * col_var_[c].second);
            }
            rows_[tr][n_cols_] = flip ? Rational(-rhs) : rhs;
            if (slack >= 0) rows_[tr][n_struct_ + slack] = flip ? -1 : 1;
            if (slack >= 0 && !flip) {
                basis_[tr] = n_struct_ + slack;
            } else {
                rows_[tr][art_begin_ + tr] = 1;
                basis_[tr] = art_begin_ + tr;
            }
        };
        int tr = 0;
        for (int r : general_rows) fill_row(tr, poly.ineq, r, poly.ineq_rhs[r], tr), ++tr;
        for (int r = 0; r < poly.eq.rows; ++r) fill_row(tr, poly.eq, r, poly.eq_rhs[r], -1), ++tr;

        objective_.assign(n_cols_, Rational(0));
        for (int c = 0; c < n_struct_; ++c) {
            Rational v = objective[col_var_[c].first] * col_var_[c].second;
            objective_[c] = sense == Sense::Max ? Rational(-v) : v;
        }
    }

    LpResult run(const Vec& objective, Sense sense) {
        // Phase 1: minimize the sum of the artificials.
        Vec cost(n_cols_, Rational(0));
        for (int c = art_begin_; c < n_cols_; ++c) cost[c] = 1;
        allow_artificials_ = true;
        Rational phase1 = iterate(cost);
        LpResult result;
        if (phase1 > 0) {
            result.status = LpResult::Status::Infeasible;
            return result;
        }
        drop_artificials();
        allow_artificials_ = false;

        if (!iterate_status(objective_)) {
            result.status = LpResult::Status::Unbounded;
            return result;
        }

        result.status = LpResult::Status::Optimal;
        result.witness.assign(nonneg_.size(), Rational(0));
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (basis_[r] < n_struct_) {
                auto [var, sign] = col_var_[basis_[r]];
                result.witness[var] += Rational(sign) * rows_[r][n_cols_];
            }
        }
        result.value = dot(objective, result.witness);
        (void)sense;
        return result;
    }

  private:
    // Runs Bland simplex for the given cost vector; returns the optimum.
    Rational iterate(const Vec& cost) {
        prepare_cost_row(cost);
        while (true) {
            int enter = entering();
            if (enter < 0) return -cost_row_[n_cols_];
            int leave = leaving(enter);
            if (leave < 0) throw Error("internal: phase-1 objective unbounded");
            pivot(leave, enter);
        }
    }

    // Same, but reports false on unboundedness instead of asserting.
    bool iterate_status(const Vec& cost) {
        prepare_cost_row(cost);
        while (true) {
            int enter = entering();
            if (enter < 0) return true;
            int leave = leaving(enter);
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void prepare_cost_row(const Vec& cost) {
        cost_row_.assign(n_cols_ + 1, Rational(0));
        for (int c = 0; c < n_cols_; ++c) cost_row_[c] = cost[c];
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational& cb = cost[basis_[r]];
            if (cb == 0) continue;
            for (int c = 0; c <= n_cols_; ++c)
                if (rows_[r][c] != 0) cost_row_[c] -= cb * rows_[r][c];
        }
    }

    int entering() const {
        int limit = allow_artificials_ ? n_cols_ : art_begin_;
        for (int c = 0; c < limit; ++c)
            if (cost_row_[c] < 0) return c;
        return -1;
    }

    int leaving(int enter) const {
        int best = -1;
        Rational best_ratio;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r][enter] <= 0) continue;
            Rational ratio = rows_[r][n_cols_] / rows_[r][enter];
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[r] < basis_[best])) {
                best = static_cast<int>(r);
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(int row, int col) {
        Vec& pr = rows_[row];
        Rational inv = 1 / pr[col];
        for (int c = 0; c <= n_cols_; ++c)
            if (pr[c] != 0) pr[c] *= inv;
        for (size_t r = 0; r < rows_.size(); ++r) {
            if (static_cast<int>(r) == row) continue;
            eliminate(rows_[r], pr, col);
        }
        eliminate(cost_row_, pr, col);
        basis_[row] = col;
    }

    static void eliminate(Vec& target, const Vec& pivot_row, int col) {
        const Rational factor = target[col];
        if (factor == 0) return;
        for (size_t c = 0; c < target.size(); ++c)
            if (pivot_row[c] != 0) target[c] -= factor * pivot_row[c];
    }

    // After phase 1, pivot any artificial still in the basis out on a
    // non-artificial column; an all-zero row is redundant and is dropped.
    void drop_artificials() {
        for (size_t r = 0; r < rows_.size();) {
            if (basis_[r] < art_begin_) {
                ++r;
                continue;
            }
            int col = -1;
            for (int c = 0; c < art_begin_; ++c) {
                if (rows_[r][c] != 0) {
                    col = c;
                    break;
                }
            }
            if (col >= 0) {
                pivot(static_cast<int>(r), col);
                ++r;
            } else {
                rows_.erase(rows_.begin() + static_cast<long>(r));
                basis_.erase(basis_.begin() + static_cast<long>(r));
            }
        }
    }

    std::vector<bool> nonneg_;
    std::vector<std::pair<int, int>> col_var_;  // column -> (variable, sign)
    std::vector<Vec> rows_;
    std::vector<int> basis_;
    Vec cost_row_;
    Vec objective_;
    int n_struct_ = 0;
    int n_slack_ = 0;
    int n_cols_ = 0;
    int art_begin_ = 0;
    bool allow_artificials_ = false;
};

}  // namespace

LpResult solve_lp(const HPolytope& poly, const Vec& objective, Sense sense) {
    SimplexTableau tableau(poly, objective, sense);
    return tableau.run(objective, sense);
}

}  // namespace scmp
