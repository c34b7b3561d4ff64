#pragma once

// Reduction factor of the Casimir force between two plane mirrors,
//   eta = F / F_ideal,  F_ideal = hbar c pi^2 A / (240 L^4).
//
// With k dk = kappa dkappa, x = 2 kappa L and t = c kappa / w in [0, 1],
//   eta = (15/pi^4) sum_p Int_0^inf dx x^3 Int_0^1 du u R_p / (e^x - R_p),
// where t = u^2 and R_p = r_p^A r_p^B is evaluated at w = c u^2 x / (2L),
// kappa = x / (2L). The substitution t = u^2 smooths the sqrt(w) onset of
// Drude amplitudes at w -> 0.

#include <casimir/quadrature.hpp>
#include <casimir/reflection.hpp>
#include <casimir/units.hpp>

#include <atomic>
#include <cmath>
#include <cstddef>
#include <exception>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace casimir {

struct CavityConfig {
    Mirror mirror_a;
    Mirror mirror_b;
    double separation;            // L, m
    std::optional<double> area;   // m^2, for absolute forces

    void validate() const
    {
        if (!(separation > 0.0) || !std::isfinite(separation)) throw Error("separation L must be positive");
        if (area && !(*area > 0.0)) throw Error("plate area must be positive");
    }
};

struct QuadratureSpec {
    double rel_tol = 1e-6;
    std::size_t max_evals = 20'000'000;
    double cutoff_mult = 40.0;

    void validate() const
    {
        if (!(rel_tol > 0.0 && rel_tol < 1e-2)) throw Error("rel_tol must lie in (0, 1e-2)");
        if (!(cutoff_mult >= 20.0)) throw Error("cutoff_mult must be >= 20");
        if (max_evals < 1000) throw Error("max_evals must be >= 1000");
    }
};

struct ReductionResult {
    double eta = 0.0;
    double eta_te = 0.0;
    double eta_tm = 0.0;
    double est_error = 0.0;
    std::size_t evals = 0;
    bool converged = false;
};

namespace detail {

inline constexpr double eta_prefactor = 15.0 / (std::numbers::pi * std::numbers::pi * std::numbers::pi * std::numbers::pi);

// R / (e^x - R) without cancellation for R -> 1, x -> 0.
inline double round_trip_factor(double product, double x)
{
    return product / (std::expm1(x) + (1.0 - product));
}

}  // namespace detail

/// Core integral for arbitrary amplitude providers. Each provider maps a
/// Kinematics to a ReflectionPair; passing constant stubs checks the
/// integrator against closed forms.
template <class ProviderA, class ProviderB>
ReductionResult reduction_factor(const ProviderA& amp_a, const ProviderB& amp_b, double separation,
                                 const QuadratureSpec& quad = {})
{
    quad.validate();
    if (!(separation > 0.0)) throw Error("separation L must be positive");

    using quad::Vec;
    std::size_t evals = 0;
    bool inner_ok = true;
    const double half_over_l = 0.5 / separation;
    const std::size_t inner_budget = 40'000;

    auto outer = [&](double x) -> Vec<4> {
        const double kappa = x * half_over_l;
        auto inner = [&](double u) -> Vec<2> {
            const Kinematics kin{constants::c * kappa * u * u, kappa};
            const ReflectionPair ra = amp_a(kin);
            const ReflectionPair rb = amp_b(kin);
            return {u * detail::round_trip_factor(ra.te * rb.te, x), u * detail::round_trip_factor(ra.tm * rb.tm, x)};
        };
        const std::size_t budget = evals < quad.max_evals ? inner_budget : 15;
        const auto res = quad::integrate_adaptive<2>(inner, 0.0, 1.0, {quad.rel_tol * 0.05, 0.0}, budget);
        evals += res.evals;
        inner_ok = inner_ok && res.converged;
        const double w = x * x * x;
        return {w * res.value[0], w * res.value[1], w * res.error[0], w * res.error[1]};
    };

    const std::size_t outer_budget = std::max<std::size_t>(45, quad.max_evals / 60);
    const auto res = quad::integrate_adaptive<4>(outer, 0.0, quad.cutoff_mult, {quad.rel_tol * 0.5, 0.0},
                                                 outer_budget, 2);

    ReductionResult out;
    out.eta_te = detail::eta_prefactor * res.value[0];
    out.eta_tm = detail::eta_prefactor * res.value[1];
    out.eta = out.eta_te + out.eta_tm;
    // Truncation of x at cutoff_mult costs < x^3 e^{-x} of the ideal integrand.
    const double c = quad.cutoff_mult;
    const double tail = detail::eta_prefactor * (c * c * c + 3 * c * c + 6 * c + 6) * std::exp(-c);
    out.est_error = detail::eta_prefactor * (res.error[0] + res.error[1] + res.value[2] + res.value[3]) + tail;
    out.evals = evals;
    out.converged = res.converged && inner_ok && evals <= quad.max_evals && out.est_error <= quad.rel_tol * out.eta;
    return out;
}

/// Amplitude provider backed by a mirror's layer stack.
inline auto mirror_amplitudes(const Mirror& m)
{
    return [&m](const Kinematics& kin) { return layered_reflection(m, kin); };
}

inline ReductionResult reduction_factor(const CavityConfig& cfg, const QuadratureSpec& quad = {})
{
    cfg.validate();
    return reduction_factor(mirror_amplitudes(cfg.mirror_a), mirror_amplitudes(cfg.mirror_b), cfg.separation, quad);
}

/// Ideal-mirror force hbar c pi^2 A / (240 L^4), newtons.
inline double ideal_force(double separation, double area)
{
    if (!(separation > 0.0) || !(area > 0.0)) throw Error("separation and area must be positive");
    const double l2 = separation * separation;
    return constants::hbar * constants::c * std::numbers::pi * std::numbers::pi * area / (240.0 * l2 * l2);
}

/// eta times the ideal force; positive means attraction.
inline double absolute_force(double eta, double separation, double area)
{
    if (!(eta >= 0.0)) throw Error("reduction factor must be non-negative");
    return eta * ideal_force(separation, area);
}

inline double absolute_pressure(double eta, double separation) { return absolute_force(eta, separation, 1.0); }

struct SweepRow {
    double separation = 0.0;
    std::string mirror_a;
    std::string mirror_b;
    std::optional<ReductionResult> result;
    std::string error;  // set when the row failed
};

/// Evaluates every configuration; rows keep input order and a failing row
/// records its message without stopping the sweep.
inline std::vector<SweepRow> sweep(const std::vector<CavityConfig>& cfgs, const QuadratureSpec& quad = {},
                                   unsigned threads = 1)
{
    std::vector<SweepRow> rows(cfgs.size());
    const auto run = [&](std::size_t i) {
        auto& row = rows[i];
        const auto& cfg = cfgs[i];
        row.separation = cfg.separation;
        row.mirror_a = cfg.mirror_a.describe();
        row.mirror_b = cfg.mirror_b.describe();
        try {
            row.result = reduction_factor(cfg, quad);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cfgs.size())));
    if (threads <= 1) {
        for (std::size_t i = 0; i < cfgs.size(); ++i) run(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < cfgs.size(); i = next++) run(i);
        });
    for (auto& th : pool) th.join();
    return rows;
}

}  // namespace casimir
