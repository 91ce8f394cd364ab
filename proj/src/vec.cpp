#include "horo/vec.hpp"

#include <cmath>
#include <stdexcept>

namespace horo {

VecD to_double(const VecQ& v) {
    VecD out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

VecQ rationalize(const VecD& v, int64_t denom) {
    VecQ out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rational_from_double(v[i], denom);
    return out;
}

rational dot(const VecQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in dot");
    rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double dot(const VecD& a, const VecD& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

VecQ add(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

VecQ sub(const VecQ& a, const VecQ& b) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

VecQ scale(const VecQ& a, const rational& t) {
    VecQ out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * t;
    return out;
}

VecD sub(const VecD& a, const VecD& b) {
    VecD out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

double euclidean_norm(const VecD& v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

double euclidean_distance(const VecD& a, const VecD& b) { return euclidean_norm(sub(a, b)); }

bool is_zero(const VecQ& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

int rank(MatQ rows) {
    if (rows.empty()) return 0;
    const size_t cols = rows[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[row], rows[pivot]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == row || rows[r][col] == 0) continue;
            const rational factor = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

int affine_rank(const std::vector<VecQ>& points) {
    if (points.empty()) return -1;
    MatQ rows;
    rows.reserve(points.size() - 1);
    for (size_t i = 1; i < points.size(); ++i) rows.push_back(sub(points[i], points[0]));
    return rank(std::move(rows));
}

LinearSolveResult solve_linear(const MatQ& a, const VecQ& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear: shape mismatch");
    const size_t m = a.size();
    const size_t n = m == 0 ? 0 : a[0].size();
    MatQ aug(m, VecQ(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n] = b[i];
    }
    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t pivot = row;
        while (pivot < m && aug[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(aug[row], aug[pivot]);
        for (size_t r = 0; r < m; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            const rational factor = aug[r][col] / aug[row][col];
            for (size_t c = col; c <= n; ++c) aug[r][c] -= factor * aug[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (size_t r = row; r < m; ++r)
        if (aug[r][n] != 0) return {false, {}};
    LinearSolveResult res;
    res.consistent = true;
    res.solution.assign(n, rational(0));
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        const int col = pivot_col_of_row[r];
        res.solution[col] = aug[r][n] / aug[r][col];
    }
    return res;
}

}  // namespace horo
