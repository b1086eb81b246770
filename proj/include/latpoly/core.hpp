#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latpoly {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Row vectors and row-major matrices over Int. std::vector already compares
// lexicographically, which is the ordering used for all serialized output.
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline int int_sign(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

// Floor division and the matching nonnegative remainder.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) { return a - floor_div(a, b) * b; }

inline Int gcd_int(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int lcm_int(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Int& s, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Int dot(const Vec& a, const Vec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero_vec(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline Vec zero_vec(size_t n) { return Vec(n, Int(0)); }

inline Mat identity_matrix(size_t n) {
    Mat m(n, zero_vec(n));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Vec mat_apply(const Mat& m, const Vec& v) {
    Vec r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Mat r(n, zero_vec(c));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < k; ++j)
            if (a[i][j] != 0)
                for (size_t t = 0; t < c; ++t) r[i][t] += a[i][j] * b[j][t];
    return r;
}

inline Mat mat_transpose(const Mat& m) {
    if (m.empty()) return {};
    Mat r(m[0].size(), zero_vec(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
    return r;
}

inline Vec primitive_vector(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd_int(g, x);
    if (g == 0) throw std::invalid_argument("zero has no direction");
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline Int det(const Mat& m) {
    size_t n = m.size();
    for (const Vec& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n > 4) throw std::invalid_argument("det: dimension capped at 4");
    Int s = 0;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        Mat minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            Vec row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Int term = m[0][j] * det(minor);
        s += (j % 2 == 0) ? term : -term;
    }
    return s;
}

inline Mat unimodular_inverse(const Mat& m) {
    size_t n = m.size();
    Int d = det(m);
    if (d != 1 && d != -1) throw std::invalid_argument("not unimodular");
    Mat inv(n, zero_vec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Mat minor;
            for (size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                Vec row;
                for (size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv[i][j] = cof * d;
        }
    return inv;
}

inline Int segment_lattice_length(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("segment endpoints differ in dimension");
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) g = gcd_int(g, b[i] - a[i]);
    return g;
}

struct HnfResult {
    Mat h;
    Mat u;
};

// Row-style Hermite normal form, U*m = H. Pivot selection takes the entry of
// minimal absolute value, ties broken by row index; entries above a pivot are
// reduced into [0, pivot).
inline HnfResult hermite_normal_form(const Mat& m) {
    Mat h = m;
    size_t rows = h.size();
    size_t cols = rows == 0 ? 0 : h[0].size();
    Mat u = identity_matrix(rows);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        while (true) {
            size_t best = rows;
            for (size_t i = row; i < rows; ++i) {
                if (h[i][col] == 0) continue;
                if (best == rows || int_abs(h[i][col]) < int_abs(h[best][col])) best = i;
            }
            if (best == rows) break;
            if (best != row) {
                std::swap(h[best], h[row]);
                std::swap(u[best], u[row]);
            }
            bool clear = true;
            for (size_t i = row + 1; i < rows; ++i) {
                if (h[i][col] == 0) continue;
                Int q = floor_div(h[i][col], h[row][col]);
                if (q != 0) {
                    for (size_t c = 0; c < cols; ++c) h[i][c] -= q * h[row][c];
                    for (size_t c = 0; c < rows; ++c) u[i][c] -= q * u[row][c];
                }
                if (h[i][col] != 0) clear = false;
            }
            if (clear) break;
        }
        if (h[row][col] == 0) continue;
        if (h[row][col] < 0) {
            for (size_t c = 0; c < cols; ++c) h[row][c] = -h[row][c];
            for (size_t c = 0; c < rows; ++c) u[row][c] = -u[row][c];
        }
        for (size_t i = 0; i < row; ++i) {
            Int q = floor_div(h[i][col], h[row][col]);
            if (q != 0) {
                for (size_t c = 0; c < cols; ++c) h[i][c] -= q * h[row][c];
                for (size_t c = 0; c < rows; ++c) u[i][c] -= q * u[row][c];
            }
        }
        ++row;
    }
    return {h, u};
}

inline size_t mat_rank(const Mat& m) {
    if (m.empty()) return 0;
    Mat h = hermite_normal_form(m).h;
    size_t r = 0;
    for (const Vec& row : h)
        if (!is_zero_vec(row)) ++r;
    return r;
}

// Basis (as rows) of the lattice of integer vectors x with x*transpose(a) = 0,
// i.e. orthogonal to every row of a. The result is saturated.
inline Mat integer_orthogonal_basis(const Mat& a, size_t dim) {
    if (a.empty()) return identity_matrix(dim);
    HnfResult res = hermite_normal_form(mat_transpose(a));
    Mat out;
    for (size_t i = 0; i < res.h.size(); ++i)
        if (is_zero_vec(res.h[i])) out.push_back(res.u[i]);
    return out;
}

// Basis of span_Q(rows) intersected with Z^dim: the saturated double
// orthogonal complement.
inline Mat span_lattice_basis(const Mat& rows, size_t dim) {
    Mat normals = integer_orthogonal_basis(rows, dim);
    return integer_orthogonal_basis(normals, dim);
}

// Gaussian elimination over Q. Returns a particular solution of a*x = b with
// free variables set to zero, or nothing if the system is inconsistent.
inline bool solve_rational(const Mat& a, const std::vector<Rat>& b, std::vector<Rat>& out) {
    size_t m = a.size();
    size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = Rat(a[i][j]);
        t[i][n] = b[i];
    }
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && t[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(t[p], t[row]);
        Rat pv = t[row][col];
        for (size_t c = col; c <= n; ++c) t[row][c] /= pv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (size_t c = col; c <= n; ++c) t[i][c] -= f * t[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < m; ++i)
        if (t[i][n] != 0) return false;
    out.assign(n, Rat(0));
    for (size_t i = 0; i < pivot_col.size(); ++i) out[pivot_col[i]] = t[i][n];
    return true;
}

inline Rat rat_dot(const std::vector<Rat>& a, const Vec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

}  // namespace latpoly
