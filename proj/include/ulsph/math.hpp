#pragma once

#include <array>
#include <cmath>

namespace ulsph {

// Small fixed-size vector/matrix types for 2D and 3D field math.
template <int D>
struct Vec {
    static_assert(D == 2 || D == 3, "only 2D and 3D are supported");
    std::array<double, D> c{};

    double& operator[](int k) { return c[k]; }
    double operator[](int k) const { return c[k]; }

    Vec& operator+=(const Vec& o) {
        for (int k = 0; k < D; ++k) c[k] += o.c[k];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (int k = 0; k < D; ++k) c[k] -= o.c[k];
        return *this;
    }
    Vec& operator*=(double s) {
        for (int k = 0; k < D; ++k) c[k] *= s;
        return *this;
    }
};

using Vec2 = Vec<2>;
using Vec3 = Vec<3>;

template <int D>
inline Vec<D> operator+(Vec<D> a, const Vec<D>& b) { return a += b; }
template <int D>
inline Vec<D> operator-(Vec<D> a, const Vec<D>& b) { return a -= b; }
template <int D>
inline Vec<D> operator*(Vec<D> a, double s) { return a *= s; }
template <int D>
inline Vec<D> operator*(double s, Vec<D> a) { return a *= s; }
template <int D>
inline Vec<D> operator/(Vec<D> a, double s) { return a *= (1.0 / s); }
template <int D>
inline Vec<D> operator-(Vec<D> a) { return a *= -1.0; }

template <int D>
inline double dot(const Vec<D>& a, const Vec<D>& b) {
    double s = 0.0;
    for (int k = 0; k < D; ++k) s += a[k] * b[k];
    return s;
}

template <int D>
inline double norm2(const Vec<D>& a) { return dot(a, a); }

template <int D>
inline double norm(const Vec<D>& a) { return std::sqrt(norm2(a)); }

template <int D>
inline bool finite(const Vec<D>& a) {
    for (int k = 0; k < D; ++k)
        if (!std::isfinite(a[k])) return false;
    return true;
}

// Row-major square matrix.
template <int D>
struct Mat {
    std::array<Vec<D>, D> row{};

    double& operator()(int r, int c) { return row[r][c]; }
    double operator()(int r, int c) const { return row[r][c]; }

    Mat& operator+=(const Mat& o) {
        for (int r = 0; r < D; ++r) row[r] += o.row[r];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        for (int r = 0; r < D; ++r) row[r] -= o.row[r];
        return *this;
    }
    Mat& operator*=(double s) {
        for (int r = 0; r < D; ++r) row[r] *= s;
        return *this;
    }

    static Mat identity() {
        Mat m;
        for (int k = 0; k < D; ++k) m(k, k) = 1.0;
        return m;
    }
};

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;

template <int D>
inline Mat<D> operator+(Mat<D> a, const Mat<D>& b) { return a += b; }
template <int D>
inline Mat<D> operator-(Mat<D> a, const Mat<D>& b) { return a -= b; }
template <int D>
inline Mat<D> operator*(Mat<D> a, double s) { return a *= s; }
template <int D>
inline Mat<D> operator*(double s, Mat<D> a) { return a *= s; }

// outer(a, b)(r, c) = a[r] * b[c]
template <int D>
inline Mat<D> outer(const Vec<D>& a, const Vec<D>& b) {
    Mat<D> m;
    for (int r = 0; r < D; ++r) m.row[r] = a[r] * b;
    return m;
}

template <int D>
inline Vec<D> operator*(const Mat<D>& m, const Vec<D>& v) {
    Vec<D> out;
    for (int r = 0; r < D; ++r) out[r] = dot(m.row[r], v);
    return out;
}

template <int D>
inline Mat<D> operator*(const Mat<D>& a, const Mat<D>& b) {
    Mat<D> out;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) {
            double s = 0.0;
            for (int k = 0; k < D; ++k) s += a(r, k) * b(k, c);
            out(r, c) = s;
        }
    return out;
}

template <int D>
inline Mat<D> transpose(const Mat<D>& m) {
    Mat<D> out;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) out(r, c) = m(c, r);
    return out;
}

template <int D>
inline Mat<D> symmetric_part(const Mat<D>& m) {
    Mat<D> out;
    for (int r = 0; r < D; ++r)
        for (int c = 0; c < D; ++c) out(r, c) = 0.5 * (m(r, c) + m(c, r));
    return out;
}

template <int D>
inline double trace(const Mat<D>& m) {
    double t = 0.0;
    for (int k = 0; k < D; ++k) t += m(k, k);
    return t;
}

template <int D>
inline double frobenius_norm(const Mat<D>& m) {
    double s = 0.0;
    for (int r = 0; r < D; ++r) s += norm2(m.row[r]);
    return std::sqrt(s);
}

inline double determinant(const Mat2& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

inline double determinant(const Mat3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Adjugate-based inverse; caller checks the determinant via `det` first.
inline Mat2 inverse(const Mat2& m, double det) {
    double inv = 1.0 / det;
    Mat2 out;
    out(0, 0) = m(1, 1) * inv;
    out(0, 1) = -m(0, 1) * inv;
    out(1, 0) = -m(1, 0) * inv;
    out(1, 1) = m(0, 0) * inv;
    return out;
}

inline Mat3 inverse(const Mat3& m, double det) {
    double inv = 1.0 / det;
    Mat3 out;
    out(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) * inv;
    out(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) * inv;
    out(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) * inv;
    out(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) * inv;
    out(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) * inv;
    out(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) * inv;
    out(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) * inv;
    out(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) * inv;
    out(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) * inv;
    return out;
}

}  // namespace ulsph
