// Copyright 2026 The vodi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace vodi {

using Vec = std::vector<double>;

/// Dense row-major matrix. All systems in this library are small
/// (at most a few hundred rows), so no sparsity or blocking.
struct Mat {
    int rows = 0;
    int cols = 0;
    Vec data;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0) : rows(r), cols(c), data(static_cast<size_t>(r) * c, fill) {}

    double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }
    double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
};

class SingularMatrixError : public std::runtime_error {
  public:
    explicit SingularMatrixError(const std::string& what) : std::runtime_error(what) {}
};

/// max_i |v(i)|
inline double sup_norm(const Vec& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

inline double sup_norm_diff(const Vec& a, const Vec& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
    return m;
}

/// Maximum absolute row-sum norm, the operator norm used throughout.
inline double row_sum_norm(const Mat& m) {
    double best = 0.0;
    for (int i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += std::fabs(m.at(i, j));
        best = std::max(best, s);
    }
    return best;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

inline Vec mat_vec(const Mat& a, const Vec& x) {
    if (a.cols != static_cast<int>(x.size())) throw std::invalid_argument("mat_vec: dimension mismatch");
    Vec out(a.rows, 0.0);
    for (int i = 0; i < a.rows; ++i) {
        double s = 0.0;
        const double* r = a.row(i);
        for (int j = 0; j < a.cols; ++j) s += r[j] * x[j];
        out[i] = s;
    }
    return out;
}

/// Solves A X = B in place by Gaussian elimination with partial pivoting.
/// B may have any number of right-hand-side columns.
/// Throws SingularMatrixError when a pivot falls below pivot_tol * scale.
inline Mat lu_solve_multi(Mat a, Mat b, double pivot_tol = 1e-12) {
    if (a.rows != a.cols || a.rows != b.rows) throw std::invalid_argument("lu_solve_multi: dimension mismatch");
    const int n = a.rows;
    double scale = 0.0;
    for (double x : a.data) scale = std::max(scale, std::fabs(x));
    if (scale == 0.0) scale = 1.0;

    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int i = col + 1; i < n; ++i)
            if (std::fabs(a.at(i, col)) > std::fabs(a.at(pivot, col))) pivot = i;
        if (std::fabs(a.at(pivot, col)) <= pivot_tol * scale)
            throw SingularMatrixError("matrix is singular to working precision");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            for (int j = 0; j < b.cols; ++j) std::swap(b.at(pivot, j), b.at(col, j));
        }
        const double inv = 1.0 / a.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            double f = a.at(i, col) * inv;
            if (f == 0.0) continue;
            a.at(i, col) = 0.0;
            for (int j = col + 1; j < n; ++j) a.at(i, j) -= f * a.at(col, j);
            for (int j = 0; j < b.cols; ++j) b.at(i, j) -= f * b.at(col, j);
        }
    }
    // back substitution
    for (int col = n - 1; col >= 0; --col) {
        const double inv = 1.0 / a.at(col, col);
        for (int j = 0; j < b.cols; ++j) b.at(col, j) *= inv;
        for (int i = 0; i < col; ++i) {
            double f = a.at(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j < b.cols; ++j) b.at(i, j) -= f * b.at(col, j);
        }
    }
    return b;
}

inline Vec lu_solve(const Mat& a, const Vec& rhs) {
    Mat b(static_cast<int>(rhs.size()), 1);
    for (size_t i = 0; i < rhs.size(); ++i) b.at(static_cast<int>(i), 0) = rhs[i];
    Mat x = lu_solve_multi(a, std::move(b));
    Vec out(rhs.size());
    for (size_t i = 0; i < rhs.size(); ++i) out[i] = x.at(static_cast<int>(i), 0);
    return out;
}

}  // namespace vodi
