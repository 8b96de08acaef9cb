#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

namespace uavcic::linalg {

using cd = std::complex<double>;

// Small square complex matrix, row-major. The combining math never exceeds
// J+1 <= ~20 rows, so everything here is plain dense arithmetic.
struct CMat {
    int n = 0;
    std::vector<cd> a;

    CMat() = default;
    explicit CMat(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}

    cd& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const cd& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

CMat identity(int n);
CMat mul(const CMat& lhs, const CMat& rhs);

// Complex scalar over __float128. The quantities fed into the dense solves
// span many orders of magnitude, and the resulting systems can be
// ill-conditioned enough that double-precision elimination loses the last
// digits the cross-checks compare; quad precision keeps the solve exact to
// well below every tolerance in use.
struct qcd {
    __float128 re = 0;
    __float128 im = 0;

    qcd() = default;
    qcd(__float128 r, __float128 i) : re(r), im(i) {}
    explicit qcd(const cd& z) : re(z.real()), im(z.imag()) {}

    cd to_double() const { return {static_cast<double>(re), static_cast<double>(im)}; }
};

inline qcd operator+(const qcd& a, const qcd& b) { return {a.re + b.re, a.im + b.im}; }
inline qcd operator-(const qcd& a, const qcd& b) { return {a.re - b.re, a.im - b.im}; }
inline qcd operator*(const qcd& a, const qcd& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcd operator/(const qcd& a, const qcd& b) {
    const __float128 d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline qcd conj(const qcd& a) { return {a.re, -a.im}; }

inline double scalar_norm(const cd& z) { return std::norm(z); }
inline __float128 scalar_norm(const qcd& z) { return z.re * z.re + z.im * z.im; }

// Gaussian elimination with partial pivoting on an n x n system; a is
// row-major and consumed. Throws on an exactly singular pivot.
template <class C>
std::vector<C> solve_dense(std::vector<C> a, std::vector<C> b, int n) {
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        auto best = scalar_norm(a[static_cast<std::size_t>(k) * n + k]);
        for (int i = k + 1; i < n; ++i) {
            const auto mag = scalar_norm(a[static_cast<std::size_t>(i) * n + k]);
            if (mag > best) {
                best = mag;
                pivot = i;
            }
        }
        if (!(best > 0)) {
            throw std::runtime_error("solve_dense: singular system");
        }
        if (pivot != k) {
            for (int j = k; j < n; ++j) {
                std::swap(a[static_cast<std::size_t>(k) * n + j],
                          a[static_cast<std::size_t>(pivot) * n + j]);
            }
            std::swap(b[k], b[pivot]);
        }
        for (int i = k + 1; i < n; ++i) {
            const C factor = a[static_cast<std::size_t>(i) * n + k] /
                             a[static_cast<std::size_t>(k) * n + k];
            a[static_cast<std::size_t>(i) * n + k] = C{};
            for (int j = k + 1; j < n; ++j) {
                a[static_cast<std::size_t>(i) * n + j] =
                    a[static_cast<std::size_t>(i) * n + j] -
                    factor * a[static_cast<std::size_t>(k) * n + j];
            }
            b[i] = b[i] - factor * b[k];
        }
    }
    std::vector<C> x(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        C acc = b[i];
        for (int j = i + 1; j < n; ++j) {
            acc = acc - a[static_cast<std::size_t>(i) * n + j] * x[j];
        }
        x[i] = acc / a[static_cast<std::size_t>(i) * n + i];
    }
    return x;
}

std::vector<cd> solve(const CMat& a, const std::vector<cd>& b);

}  // namespace uavcic::linalg
