#include "horo/simplex_lp.hpp"

#include <stdexcept>

namespace horo {

namespace {

// Dense tableau simplex over rationals. Artificial columns are kept in the
// tableau through phase 2 (barred from entering) so the equality-row duals
// can be read off their reduced costs.
class Tableau {
  public:
    Tableau(const MatQ& a, const VecQ& b, const VecQ& c)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
        rows_.assign(m_, VecQ(n_ + m_ + 1, rational(0)));
        basis_.assign(m_, 0);
        for (size_t i = 0; i < m_; ++i) {
            const bool flip = b[i] < 0;
            for (size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? -a[i][j] : a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i].back() = flip ? -b[i] : b[i];
            basis_[i] = static_cast<int>(n_ + i);
        }
        cost_ = c;
    }

    LpResult run() {
        // Phase 1: minimize the sum of artificials.
        VecQ phase1(n_ + m_, rational(0));
        for (size_t i = 0; i < m_; ++i) phase1[n_ + i] = 1;
        build_objective(phase1);
        iterate(/*allow_artificial=*/true);
        if (objective_value() != 0) return {LpStatus::infeasible, {}, rational(0), {}};
        drive_out_artificials();

        // Phase 2.
        VecQ phase2(n_ + m_, rational(0));
        for (size_t j = 0; j < n_; ++j) phase2[j] = cost_[j];
        build_objective(phase2);
        if (!iterate(/*allow_artificial=*/false))
            return {LpStatus::unbounded, {}, rational(0), {}};

        LpResult res;
        res.status = LpStatus::optimal;
        res.x.assign(n_, rational(0));
        for (size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && static_cast<size_t>(basis_[i]) < n_)
                res.x[basis_[i]] = rows_[i].back();
        res.value = objective_value();
        // Dual of equality row i = reduced cost of artificial column i
        // (its phase-2 cost is zero), up to the sign flip applied to row i.
        res.duals.assign(m_, rational(0));
        for (size_t i = 0; i < m_; ++i) res.duals[i] = -obj_[n_ + i] * row_sign_[i];
        return res;
    }

    void record_row_signs(const VecQ& b) {
        row_sign_.assign(m_, rational(1));
        for (size_t i = 0; i < m_; ++i)
            if (b[i] < 0) row_sign_[i] = -1;
    }

  private:
    void build_objective(const VecQ& costs) {
        costs_full_ = costs;
        obj_.assign(n_ + m_ + 1, rational(0));
        for (size_t j = 0; j < costs.size(); ++j) obj_[j] = costs[j];
        obj_.back() = 0;
        for (size_t i = 0; i < m_; ++i) {
            const rational cb = costs_full_[basis_[i]];
            if (cb == 0) continue;
            for (size_t j = 0; j <= n_ + m_; ++j) obj_[j] -= cb * rows_[i][j];
        }
    }

    rational objective_value() const { return -obj_.back(); }

    // Returns false when unbounded.
    bool iterate(bool allow_artificial) {
        for (;;) {
            int enter = -1;
            const size_t limit = allow_artificial ? n_ + m_ : n_;
            for (size_t j = 0; j < limit; ++j) {
                if (obj_[j] < 0) {  // Bland: first improving index
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter < 0) return true;
            int leave = -1;
            rational best_ratio = 0;
            for (size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                const rational ratio = rows_[i].back() / rows_[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(static_cast<size_t>(leave), static_cast<size_t>(enter));
        }
    }

    void drive_out_artificials() {
        for (size_t i = 0; i < m_; ++i) {
            if (static_cast<size_t>(basis_[i]) < n_) continue;
            int enter = -1;
            for (size_t j = 0; j < n_; ++j) {
                if (rows_[i][j] != 0) {
                    enter = static_cast<int>(j);
                    break;
                }
            }
            if (enter >= 0) pivot(i, static_cast<size_t>(enter));
            // Otherwise the row is redundant; the artificial stays basic at 0.
        }
    }

    void pivot(size_t leave, size_t enter) {
        const rational inv = 1 / rows_[leave][enter];
        for (auto& v : rows_[leave]) v *= inv;
        for (size_t i = 0; i < m_; ++i) {
            if (i == leave || rows_[i][enter] == 0) continue;
            const rational f = rows_[i][enter];
            for (size_t j = 0; j <= n_ + m_; ++j) rows_[i][j] -= f * rows_[leave][j];
        }
        if (obj_[enter] != 0) {
            const rational f = obj_[enter];
            for (size_t j = 0; j <= n_ + m_; ++j) obj_[j] -= f * rows_[leave][j];
        }
        basis_[leave] = static_cast<int>(enter);
    }

    size_t m_, n_;
    MatQ rows_;
    VecQ obj_;
    VecQ cost_;
    VecQ costs_full_;
    VecQ row_sign_;
    std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_lp: row mismatch");
    if (!a.empty() && a[0].size() != c.size())
        throw std::invalid_argument("solve_lp: column mismatch");
    Tableau t(a, b, c);
    t.record_row_signs(b);
    return t.run();
}

InequalityLpResult maximize_over_halfspaces(const MatQ& normals, const VecQ& offsets,
                                            const VecQ& objective) {
    // Standard form: y = u - v, add slacks: A u - A v + s = b, min -c.(u-v).
    const size_t m = normals.size();
    const size_t d = objective.size();
    MatQ a(m, VecQ(2 * d + m, rational(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < d; ++j) {
            a[i][j] = normals[i][j];
            a[i][d + j] = -normals[i][j];
        }
        a[i][2 * d + i] = 1;
    }
    VecQ c(2 * d + m, rational(0));
    for (size_t j = 0; j < d; ++j) {
        c[j] = -objective[j];
        c[d + j] = objective[j];
    }
    const LpResult r = solve_lp(a, offsets, c);
    InequalityLpResult out;
    out.status = r.status;
    if (r.status == LpStatus::optimal) {
        out.y.assign(d, rational(0));
        for (size_t j = 0; j < d; ++j) out.y[j] = r.x[j] - r.x[d + j];
        out.value = -r.value;
    }
    return out;
}

InteriorPointResult interior_point(const MatQ& normals, const VecQ& offsets) {
    const size_t d = normals.empty() ? 0 : normals[0].size();
    MatQ aug = normals;
    for (auto& row : aug) row.push_back(rational(1));  // coefficient of t
    VecQ objective(d + 1, rational(0));
    objective[d] = 1;
    // Keep t from running off to infinity for fat feasible sets.
    VecQ cap(d + 1, rational(0));
    cap[d] = 1;
    aug.push_back(cap);
    VecQ offs = offsets;
    offs.push_back(rational(1));
    const InequalityLpResult r = maximize_over_halfspaces(aug, offs, objective);
    InteriorPointResult out;
    out.status = r.status;
    if (r.status == LpStatus::optimal) {
        out.point.assign(r.y.begin(), r.y.begin() + d);
        out.margin = r.y[d];
    }
    return out;
}

}  // namespace horo
