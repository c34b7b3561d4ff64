#pragma once

// Reference calculations for the tests. Deliberately naive: fixed-grid
// Simpson rules, direct series and complex transfer matrices, sharing no code
// with the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double c = 299792458.0;

template <class F>
double simpson(F&& f, double a, double b, std::size_t n)
{
    if (n % 2) ++n;
    const double h = (b - a) / static_cast<double>(n);
    double s = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i) s += f(a + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

/// 1 + (2/pi) Int x eps2(x) / (x^2 + w^2) dx over [lo, hi], integrated in ln x.
template <class F>
double kk_simpson(F&& eps2, double w, double lo, double hi, std::size_t n = 200000)
{
    const auto g = [&](double s) {
        const double x = std::exp(s);
        return x * x * eps2(x) / (x * x + w * w);
    };
    return 1.0 + 2.0 / std::numbers::pi * simpson(g, std::log(lo), std::log(hi), n);
}

/// sum_k a^k / k^4 by brute force.
inline double li4_series(double a, int terms = 200000)
{
    double s = 0.0, p = 1.0;
    for (int k = 1; k <= terms; ++k) {
        p *= a;
        const double k2 = double(k) * k;
        s += p / (k2 * k2);
        if (p < 1e-300) break;
    }
    return s;
}

/// eta for constant amplitude r on both mirrors and both polarizations:
/// (15/pi^4) * 2 * sum_n r^{2n} Int x^3 e^{-n x} dx Int_0^1 du u.
inline double eta_constant_series(double r) { return 90.0 / std::pow(std::numbers::pi, 4) * li4_series(r * r); }

struct Medium {
    double eps;
    double thickness;  // ignored for the outer media
};

/// Reflection of a stack seen from vacuum using 2x2 characteristic matrices
/// with k_z = i K / c. Returns {r_TE, r_TM} with the TM sign flipped from
/// the optics convention so that both polarizations agree at normal incidence.
inline std::pair<double, double> transfer_matrix(const std::vector<Medium>& layers, double back_eps, double w,
                                                 double kappa)
{
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    const auto kz = [&](double eps) { return i * std::sqrt(w * w * (eps - 1.0) + c * c * kappa * kappa) / c; };
    auto solve = [&](bool tm) {
        // Admittance-like quantity q = kz (TE) or kz / eps (TM), for a field
        // whose tangential components are (E, H) ~ (1, q).
        const auto q = [&](double eps) { return tm ? kz(eps) / eps : kz(eps); };
        cd m11 = 1.0, m12 = 0.0, m21 = 0.0, m22 = 1.0;
        for (const auto& l : layers) {
            const cd phi = kz(l.eps) * l.thickness;
            const cd ql = q(l.eps);
            const cd a11 = std::cos(phi), a12 = -i * std::sin(phi) / ql, a21 = -i * ql * std::sin(phi), a22 = std::cos(phi);
            const cd n11 = m11 * a11 + m12 * a21, n12 = m11 * a12 + m12 * a22;
            const cd n21 = m21 * a11 + m22 * a21, n22 = m21 * a12 + m22 * a22;
            m11 = n11, m12 = n12, m21 = n21, m22 = n22;
        }
        const cd q0 = q(1.0), qs = q(back_eps);
        const cd num = q0 * m11 + q0 * qs * m12 - m21 - qs * m22;
        const cd den = q0 * m11 + q0 * qs * m12 + m21 + qs * m22;
        const cd r = num / den;
        return tm ? -r.real() : r.real();
    };
    return {solve(false), solve(true)};
}

}  // namespace oracle
