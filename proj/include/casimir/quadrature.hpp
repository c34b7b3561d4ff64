#pragma once

// Fixed and adaptive quadrature rules used by the Kramers-Kronig transform
// and the Lifshitz integral.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

namespace casimir::quad {

template <std::size_t N>
using Vec = std::array<double, N>;

/// Gauss-Legendre nodes and weights on [-1, 1], computed once by Newton
/// iteration on P_n.
template <std::size_t Order>
struct GaussLegendre {
    std::array<double, Order> nodes{};
    std::array<double, Order> weights{};

    GaussLegendre()
    {
        constexpr double pi = std::numbers::pi;
        for (std::size_t i = 0; i < (Order + 1) / 2; ++i) {
            double z = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(Order) + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = z;
                for (std::size_t k = 2; k <= Order; ++k) {
                    const double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                    p0 = p1;
                    p1 = pk;
                }
                if constexpr (Order == 1) p0 = 1.0;
                dp = static_cast<double>(Order) * (z * p1 - p0) / (z * z - 1.0);
                const double dz = p1 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            nodes[i] = -z;
            nodes[Order - 1 - i] = z;
            weights[i] = weights[Order - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
    }

    static const GaussLegendre& instance()
    {
        static const GaussLegendre rule;
        return rule;
    }

    template <class F>
    double integrate(F&& f, double a, double b) const
    {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < Order; ++i) sum += weights[i] * f(mid + half * nodes[i]);
        return sum * half;
    }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights at kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <std::size_t N>
struct PanelEstimate {
    Vec<N> value{};
    Vec<N> error{};
};

template <std::size_t N, class F>
PanelEstimate<N> gauss_kronrod_15(F& f, double a, double b)
{
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::array<Vec<N>, 15> fv;
    fv[0] = f(mid);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kronrod_nodes[j];
        fv[1 + 2 * j] = f(mid - dx);
        fv[2 + 2 * j] = f(mid + dx);
    }

    PanelEstimate<N> out;
    for (std::size_t c = 0; c < N; ++c) {
        double kron = kronrod_weights[7] * fv[0][c];
        double gauss = gauss_weights[3] * fv[0][c];
        double abs_sum = std::abs(kron);
        for (std::size_t j = 0; j < 7; ++j) {
            const double s = fv[1 + 2 * j][c] + fv[2 + 2 * j][c];
            kron += kronrod_weights[j] * s;
            abs_sum += kronrod_weights[j] * (std::abs(fv[1 + 2 * j][c]) + std::abs(fv[2 + 2 * j][c]));
            if (j % 2 == 1) gauss += gauss_weights[j / 2] * s;
        }
        const double mean = 0.5 * kron;
        double asc = kronrod_weights[7] * std::abs(fv[0][c] - mean);
        for (std::size_t j = 0; j < 7; ++j)
            asc += kronrod_weights[j] * (std::abs(fv[1 + 2 * j][c] - mean) + std::abs(fv[2 + 2 * j][c] - mean));

        const double scale = std::abs(half);
        double err = std::abs((kron - gauss) * half);
        const double resasc = asc * scale;
        const double resabs = abs_sum * scale;
        if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
        constexpr double eps = std::numeric_limits<double>::epsilon();
        if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
        out.value[c] = kron * half;
        out.error[c] = err;
    }
    return out;
}

}  // namespace detail

struct Tolerance {
    double rel = 1e-8;
    double abs = 0.0;
};

template <std::size_t N>
struct AdaptiveResult {
    Vec<N> value{};
    Vec<N> error{};
    std::size_t evals = 0;
    std::size_t panels = 0;
    bool converged = false;
};

/// Globally adaptive Gauss-Kronrod integration of a vector-valued function
/// on [a, b]. The panel with the largest error is bisected until the summed
/// error of the first `controlled` components drops below
/// max(tol.abs, tol.rel * |sum of those components|). Remaining components
/// are integrated on the same partition without steering it.
template <std::size_t N, class F>
AdaptiveResult<N> integrate_adaptive(F&& f, double a, double b, Tolerance tol, std::size_t max_evals,
                                     std::size_t controlled = N)
{
    struct Panel {
        double a, b;
        detail::PanelEstimate<N> est;
        double err;
    };
    const auto panel_error = [controlled](const detail::PanelEstimate<N>& e) {
        double s = 0.0;
        for (std::size_t c = 0; c < controlled; ++c) s += e.error[c];
        return s;
    };
    const auto by_error = [](const Panel& l, const Panel& r) { return l.err < r.err; };

    AdaptiveResult<N> result;
    std::vector<Panel> done;
    std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> open(by_error);

    auto first = detail::gauss_kronrod_15<N>(f, a, b);
    result.evals = 15;
    open.push(Panel{a, b, first, panel_error(first)});

    Vec<N> total = first.value;
    double total_err = panel_error(first);
    const double min_width = std::abs(b - a) * 1e-13;

    const auto target = [&] {
        double mag = 0.0;
        for (std::size_t c = 0; c < controlled; ++c) mag += total[c];
        return std::max(tol.abs, tol.rel * std::abs(mag));
    };

    while (!open.empty() && total_err > target()) {
        if (result.evals + 30 > max_evals) break;
        Panel worst = open.top();
        open.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) < min_width) {
            done.push_back(worst);
            continue;
        }
        auto left = detail::gauss_kronrod_15<N>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<N>(f, mid, worst.b);
        result.evals += 30;
        for (std::size_t c = 0; c < N; ++c) total[c] += left.value[c] + right.value[c] - worst.est.value[c];
        const double le = panel_error(left), re = panel_error(right);
        total_err += le + re - worst.err;
        open.push(Panel{worst.a, mid, left, le});
        open.push(Panel{mid, worst.b, right, re});
    }

    while (!open.empty()) {
        done.push_back(open.top());
        open.pop();
    }
    // Re-sum in abscissa order so the result does not depend on heap history.
    std::sort(done.begin(), done.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    result.value = {};
    result.error = {};
    for (const auto& p : done) {
        for (std::size_t c = 0; c < N; ++c) {
            result.value[c] += p.est.value[c];
            result.error[c] += p.est.error[c];
        }
    }
    result.panels = done.size();
    double mag = 0.0, err = 0.0;
    for (std::size_t c = 0; c < controlled; ++c) {
        mag += result.value[c];
        err += result.error[c];
    }
    result.converged = err <= std::max(tol.abs, tol.rel * std::abs(mag));
    return result;
}

/// Scalar convenience wrapper.
template <class F>
AdaptiveResult<1> integrate_adaptive_scalar(F&& f, double a, double b, Tolerance tol, std::size_t max_evals)
{
    auto wrapped = [&f](double x) { return Vec<1>{f(x)}; };
    return integrate_adaptive<1>(wrapped, a, b, tol, max_evals);
}

}  // namespace casimir::quad
