#pragma once

// Closed-form long-distance limits: static bulk amplitudes, the effective
// thickness of Drude slabs, and the reduction factor for frequency
// independent reflectivity.

#include <casimir/dielectric.hpp>
#include <casimir/reflection.hpp>
#include <casimir/units.hpp>

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace casimir {

/// (1 - sqrt(eps0)) / (1 + sqrt(eps0)).
inline double static_reflection(double eps0)
{
    if (!(eps0 >= 1.0)) throw Error("static permittivity must be >= 1");
    const double n = std::sqrt(eps0);
    return (1.0 - n) / (1.0 + n);
}

/// Lambda = 2 gamma c / wp^2. The plasma limit gamma = 0 has no finite
/// effective thickness and is rejected.
inline double effective_thickness(double plasma_freq, double damping)
{
    if (!(plasma_freq > 0.0)) throw Error("plasma frequency must be positive");
    if (!(damping > 0.0)) throw Error("effective thickness needs gamma > 0 (plasma slabs are thickness independent)");
    return 2.0 * damping * constants::c / (plasma_freq * plasma_freq);
}

/// Low-frequency slab amplitude -1 / (1 + Lambda / D).
inline double slab_static_reflection(double thickness, double lambda)
{
    if (!(thickness > 0.0) || !(lambda > 0.0)) throw Error("thickness and effective thickness must be positive");
    return -1.0 / (1.0 + lambda / thickness);
}

/// Li_4(a) for 0 <= a <= 1. Direct series below 1/2; above, the expansion in
/// mu = ln a about a = 1,
///   Li_4(e^mu) = sum_{k != 3} zeta(4-k) mu^k / k! + mu^3/6 (H_3 - ln(-mu)),
/// which converges for |mu| < 2 pi.
inline double polylog4(double a)
{
    if (!(a >= 0.0 && a <= 1.0)) throw Error("polylog4 implemented for 0 <= a <= 1");
    constexpr double pi = std::numbers::pi;
    if (a == 1.0) return pi * pi * pi * pi / 90.0;
    if (a <= 0.5) {
        double sum = 0.0, p = a;
        for (int n = 1; n < 200; ++n) {
            const double term = p / (static_cast<double>(n) * n * n * n);
            sum += term;
            if (term < 1e-17 * sum) break;
            p *= a;
        }
        return sum;
    }
    const double mu = std::log(a);
    constexpr double zeta4 = pi * pi * pi * pi / 90.0;
    constexpr double zeta3 = 1.2020569031595942854;
    constexpr double zeta2 = pi * pi / 6.0;
    constexpr double h3 = 11.0 / 6.0;
    double sum = zeta4 + zeta3 * mu + zeta2 * mu * mu / 2.0 + mu * mu * mu / 6.0 * (h3 - std::log(-mu));
    // zeta(4-k) for k >= 4: zeta(0) = -1/2, zeta(-m) = (-1)^m B_{m+1} / (m+1);
    // zeta at negative even integers vanishes.
    constexpr std::array<double, 13> bernoulli_even = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0,
        -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0,
        8553103.0 / 6.0};
    double term_pow = mu * mu * mu * mu / 24.0;  // mu^k / k! at k = 4
    sum += -0.5 * term_pow;
    for (int k = 5; k < 30; ++k) {
        term_pow *= mu / k;
        const int m = k - 4;  // zeta(-m)
        if (m % 2 == 0) continue;
        const int idx = (m + 1) / 2 - 1;  // B_{m+1} = bernoulli_even[idx]
        if (idx >= static_cast<int>(bernoulli_even.size())) break;
        const double zeta_neg = -bernoulli_even[idx] / (m + 1);
        sum += zeta_neg * term_pow;
    }
    return sum;
}

/// eta for a reflectivity r independent of frequency and angle:
/// (90 / pi^4) Li_4(r^2).
inline double eta_constant_reflectivity(double r)
{
    if (!(std::abs(r) <= 1.0)) throw Error("constant reflectivity needs |r| <= 1");
    constexpr double pi = std::numbers::pi;
    return 90.0 / (pi * pi * pi * pi) * polylog4(r * r);
}

/// c / L, the frequency scale dominating the force at separation L.
inline double characteristic_frequency(double separation)
{
    if (!(separation > 0.0)) throw Error("separation must be positive");
    return constants::c / separation;
}

/// Low-frequency carrier response of a model: sum_i wp_i^2 / gamma_i over
/// Drude terms. Returns nullopt for insulators; plasma terms make it infinite.
struct CarrierResponse {
    double conductivity_weight;  // sum wp^2 / gamma, rad/s
    bool has_plasma_term;
};

inline std::optional<CarrierResponse> carrier_response(const DielectricModel& model)
{
    double weight = 0.0;
    bool plasma_term = false, any = false;
    for (const auto& t : model.terms()) {
        if (const auto* d = std::get_if<term::Drude>(&t)) {
            any = true;
            if (d->damping == 0.0) plasma_term = true;
            else weight += d->plasma_freq * d->plasma_freq / d->damping;
        }
    }
    if (!any) return std::nullopt;
    return CarrierResponse{weight, plasma_term};
}

struct AsymptoticReport {
    std::string model;
    std::optional<double> thickness;  // m; nullopt for a bulk mirror
    double static_rho;                // bulk amplitude as w, kappa -> 0
    std::optional<double> lambda_eff; // m; Drude conductors only
    double slab_static_r;             // slab amplitude as w, kappa -> 0
    double eta_const_r;               // eta with the static amplitude held fixed
};

/// Static limits for a bulk (no thickness) or free-standing slab of `model`.
/// Insulating slabs lose their reflectivity entirely; Drude slabs follow
/// -1/(1 + Lambda/D); plasma slabs keep r = -1.
inline AsymptoticReport asymptotic_report(const DielectricModel& model, std::optional<double> thickness)
{
    if (thickness && !(*thickness > 0.0)) throw Error("thickness must be positive");
    AsymptoticReport rep{model.label(), thickness, 0.0, std::nullopt, 0.0, 0.0};
    const auto carriers = carrier_response(model);
    if (!carriers) {
        rep.static_rho = static_reflection(model.static_value());
        rep.slab_static_r = thickness ? 0.0 : rep.static_rho;
    } else {
        rep.static_rho = -1.0;
        if (!carriers->has_plasma_term) rep.lambda_eff = 2.0 * constants::c / carriers->conductivity_weight;
        if (thickness && rep.lambda_eff) rep.slab_static_r = slab_static_reflection(*thickness, *rep.lambda_eff);
        else rep.slab_static_r = -1.0;
    }
    rep.eta_const_r = eta_constant_reflectivity(rep.slab_static_r);
    return rep;
}

struct PhaseFactorPoint {
    double omega;  // rad/s
    double delta;  // optical length
};

/// Optical length delta(w) of a slab along the path c kappa = ratio * w
/// (ratio = 1 is normal incidence).
inline std::vector<PhaseFactorPoint> phase_factor_curves(const DielectricModel& model, double thickness,
                                                         double ratio, const std::vector<double>& omegas)
{
    if (!(ratio >= 1.0)) throw Error("c kappa / w must be >= 1");
    if (!(thickness > 0.0)) throw Error("thickness must be positive");
    std::vector<PhaseFactorPoint> out;
    out.reserve(omegas.size());
    for (const double w : omegas) {
        if (!(w > 0.0)) throw Error("phase factor frequencies must be positive");
        const Kinematics kin{w, ratio * w / constants::c};
        out.push_back({w, optical_length(model.epsilon(w), thickness, kin)});
    }
    return out;
}

}  // namespace casimir
