#pragma once

// Permittivity models on the imaginary frequency axis. Every model is
//   eps(i w) = 1 + sum of terms [+ Kramers-Kronig transform of a table - 1]
// and each term is non-negative and non-increasing in w.

#include <casimir/optical_data.hpp>
#include <casimir/units.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

namespace casimir {

namespace term {

/// Frequency-independent offset.
struct Constant {
    double value;
};

/// wp^2 / (w (w + gamma)); gamma = 0 is the plasma model.
struct Drude {
    double plasma_freq;
    double damping;
};

/// s / (1 + w^2/w0^2 + Gamma w/w0), Gamma dimensionless.
struct Lorentz {
    double strength;
    double resonance;
    double width;
};

/// A / (1 + w^2/wc^2).
struct Pole {
    double amplitude;
    double cutoff;
};

}  // namespace term

using AnalyticTerm = std::variant<term::Constant, term::Drude, term::Lorentz, term::Pole>;

inline AnalyticTerm drude(double plasma_freq, double damping) { return term::Drude{plasma_freq, damping}; }
inline AnalyticTerm plasma(double plasma_freq) { return term::Drude{plasma_freq, 0.0}; }
inline AnalyticTerm lorentz(double strength, double resonance, double width)
{
    return term::Lorentz{strength, resonance, width};
}
inline AnalyticTerm pole(double amplitude, double cutoff) { return term::Pole{amplitude, cutoff}; }
inline AnalyticTerm constant_offset(double value) { return term::Constant{value}; }

inline void validate(const AnalyticTerm& t)
{
    std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, term::Constant>) {
                if (!(v.value >= 0.0)) throw Error("constant offset must be non-negative");
            } else if constexpr (std::is_same_v<T, term::Drude>) {
                if (!(v.plasma_freq > 0.0)) throw Error("Drude plasma frequency must be positive");
                if (!(v.damping >= 0.0)) throw Error("Drude damping must be non-negative");
            } else if constexpr (std::is_same_v<T, term::Lorentz>) {
                if (!(v.strength > 0.0) || !(v.resonance > 0.0) || !(v.width >= 0.0))
                    throw Error("Lorentz term needs strength > 0, resonance > 0, width >= 0");
            } else {
                if (!(v.amplitude > 0.0) || !(v.cutoff > 0.0)) throw Error("pole term needs amplitude > 0, cutoff > 0");
            }
        },
        t);
}

/// Contribution of a single term at imaginary frequency w (rad/s).
inline double evaluate(const AnalyticTerm& t, double w)
{
    return std::visit(
        [w](const auto& v) -> double {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, term::Constant>) {
                return v.value;
            } else if constexpr (std::is_same_v<T, term::Drude>) {
                if (!(w > 0.0)) throw Error("Drude term is singular at w = 0");
                return v.plasma_freq * v.plasma_freq / (w * (w + v.damping));
            } else if constexpr (std::is_same_v<T, term::Lorentz>) {
                const double u = w / v.resonance;
                return v.strength / (1.0 + u * u + v.width * u);
            } else {
                const double u = w / v.cutoff;
                return v.amplitude / (1.0 + u * u);
            }
        },
        t);
}

/// Immutable permittivity model. Composition creates new models.
class DielectricModel {
public:
    DielectricModel() = default;
    DielectricModel(std::vector<AnalyticTerm> terms, std::string label,
                    std::shared_ptr<const OpticalTable> table = nullptr)
        : terms_(std::move(terms)), table_(std::move(table)), label_(std::move(label))
    {
        for (const auto& t : terms_) validate(t);
    }

    static DielectricModel from_table(std::shared_ptr<const OpticalTable> table, std::string label)
    {
        if (!table) throw Error("null optical table");
        return DielectricModel({}, std::move(label), std::move(table));
    }

    double operator()(double w) const { return epsilon(w); }

    /// eps(i w). w = 0 is allowed only for models without Drude or table terms.
    double epsilon(double w) const
    {
        if (w < 0.0 || !std::isfinite(w)) throw Error("imaginary frequency must be finite and >= 0");
        double eps = 1.0;
        for (const auto& t : terms_) eps += evaluate(t, w);
        if (table_) {
            if (w == 0.0) throw Error("tabulated model '" + label_ + "' cannot be evaluated at w = 0");
            eps += kk_epsilon(*table_, w) - 1.0;
        }
        return eps;
    }

    bool has_drude() const
    {
        for (const auto& t : terms_)
            if (std::holds_alternative<term::Drude>(t)) return true;
        return false;
    }

    /// Static permittivity; throws for conducting or tabulated models.
    double static_value() const
    {
        if (has_drude()) throw Error("model '" + label_ + "' is conducting: no finite static permittivity");
        return epsilon(0.0);
    }

    /// Largest characteristic frequency among the terms (rad/s), 0 if none.
    double max_frequency() const
    {
        double m = 0.0;
        for (const auto& t : terms_) {
            std::visit(
                [&m](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, term::Drude>) m = std::max({m, v.plasma_freq, v.damping});
                    else if constexpr (std::is_same_v<T, term::Lorentz>) m = std::max(m, v.resonance);
                    else if constexpr (std::is_same_v<T, term::Pole>) m = std::max(m, v.cutoff);
                },
                t);
        }
        if (table_) m = std::max(m, table_->samples().back().x);
        return m;
    }

    DielectricModel with_terms(const std::vector<AnalyticTerm>& extra, std::string label) const
    {
        auto terms = terms_;
        terms.insert(terms.end(), extra.begin(), extra.end());
        return DielectricModel(std::move(terms), std::move(label), table_);
    }

    const std::vector<AnalyticTerm>& terms() const { return terms_; }
    const std::shared_ptr<const OpticalTable>& table() const { return table_; }
    const std::string& label() const { return label_; }

private:
    std::vector<AnalyticTerm> terms_;
    std::shared_ptr<const OpticalTable> table_;
    std::string label_;
};

// ---------------------------------------------------------------------------
// Catalog of material models. Parameters are quoted in eV where the source
// data is, and converted with the fixed 1.519e15 rad/s per eV.

/// Intrinsic silicon: eps_inf + (eps_0 - eps_inf) w0^2 / (w^2 + w0^2).
inline DielectricModel silicon_intrinsic()
{
    constexpr double eps_static = 11.87;
    constexpr double eps_inf = 1.035;
    constexpr double w0 = 6.6e15;
    return DielectricModel({constant_offset(eps_inf - 1.0), pole(eps_static - eps_inf, w0)}, "si");
}

/// Base model plus a free-carrier term; damping = 0 gives the plasma model.
inline DielectricModel silicon_doped(const DielectricModel& base, double plasma_freq, double damping)
{
    return base.with_terms({drude(plasma_freq, damping)}, base.label() + "+drude");
}

/// Hole and electron plasma terms for laser-induced carriers (n ~ 2e19 cm^-3).
inline DielectricModel silicon_laser_excited(const DielectricModel& base, bool use_plasma)
{
    const double holes_wp = ev_to_rad_s(0.368), holes_gamma = use_plasma ? 0.0 : ev_to_rad_s(0.00329);
    const double electrons_wp = ev_to_rad_s(0.329), electrons_gamma = use_plasma ? 0.0 : ev_to_rad_s(0.01185);
    return base.with_terms({drude(holes_wp, holes_gamma), drude(electrons_wp, electrons_gamma)},
                           base.label() + (use_plasma ? "+laser-plasma" : "+laser-drude"));
}

/// Free-carrier parameters of doped silicon for the four tabulated densities.
struct DopingLevel {
    double density_cm3;
    double plasma_freq_ev;
    double damping_ev;
    double resistivity_ohm_cm;
};

inline constexpr std::array<DopingLevel, 4> silicon_doping_table = {{
    {1.1e15, 0.0021, 0.0078, 13.0},
    {1.3e18, 0.0725, 0.0247, 3.5e-2},
    {1.4e19, 0.238, 0.0518, 6.8e-3},
    {1.0e20, 0.636, 0.06529, 1.2e-3},
}};

struct CarrierSpec {
    double density_cm3;
    double mass_ratio;  // effective mass / electron mass
    double resistivity_ohm_cm;
};

struct DrudeParameters {
    double plasma_freq;  // rad/s
    double damping;      // rad/s
};

/// wp = sqrt(N e^2 / (eps_vac m*)), gamma = N e^2 rho / m*, in SI.
inline DrudeParameters carrier_to_drude(const CarrierSpec& spec)
{
    if (!(spec.density_cm3 > 0.0) || !(spec.mass_ratio > 0.0) || !(spec.resistivity_ohm_cm > 0.0))
        throw Error("carrier density, effective mass and resistivity must be positive");
    using namespace constants;
    const double n = spec.density_cm3 * 1e6;           // m^-3
    const double rho = spec.resistivity_ohm_cm * 1e-2;  // ohm m
    const double mass = spec.mass_ratio * electron_mass;
    const double e2 = elementary_charge * elementary_charge;
    return {std::sqrt(n * e2 / (vacuum_permittivity * mass)), n * e2 * rho / mass};
}

/// Insulating VO2 below the transition: background pole plus 7 oscillators.
inline DielectricModel vo2_insulating()
{
    constexpr double eps_high = 4.26;
    constexpr double w_inf_ev = 15.0;
    constexpr std::array<std::array<double, 3>, 7> oscillators = {{
        {0.79, 1.02, 0.55},
        {0.474, 1.30, 0.55},
        {0.483, 1.50, 0.50},
        {0.536, 2.75, 0.22},
        {1.316, 3.49, 0.47},
        {1.060, 3.76, 0.38},
        {0.99, 5.1, 0.385},
    }};
    std::vector<AnalyticTerm> terms{pole(eps_high - 1.0, ev_to_rad_s(w_inf_ev))};
    for (const auto& [s, w, g] : oscillators) terms.push_back(lorentz(s, ev_to_rad_s(w), g));
    return DielectricModel(std::move(terms), "vo2-ins");
}

/// Metallic VO2 above the transition: Drude carriers plus 4 oscillators.
inline DielectricModel vo2_metallic()
{
    constexpr double eps_high = 3.95;
    constexpr double w_inf_ev = 15.0;
    constexpr std::array<std::array<double, 3>, 4> oscillators = {{
        {1.816, 0.86, 0.95},
        {0.972, 2.8, 0.23},
        {1.04, 3.48, 0.28},
        {1.05, 4.6, 0.34},
    }};
    std::vector<AnalyticTerm> terms{drude(ev_to_rad_s(3.33), ev_to_rad_s(0.66)),
                                    pole(eps_high - 1.0, ev_to_rad_s(w_inf_ev))};
    for (const auto& [s, w, g] : oscillators) terms.push_back(lorentz(s, ev_to_rad_s(w), g));
    return DielectricModel(std::move(terms), "vo2-met");
}

/// Sapphire substrate, three-pole fit.
inline DielectricModel sapphire()
{
    return DielectricModel({pole(1.023, ev_to_rad_s(20.19)), pole(1.058264, ev_to_rad_s(11.21)),
                            pole(5.280792, ev_to_rad_s(0.07))},
                           "al2o3");
}

inline constexpr double gold_plasma_freq_ev = 9.0;
inline constexpr double gold_damping_ev = 0.035;

inline DielectricModel gold_drude()
{
    return DielectricModel({drude(ev_to_rad_s(gold_plasma_freq_ev), ev_to_rad_s(gold_damping_ev))}, "au-drude");
}

inline DielectricModel gold_plasma()
{
    return DielectricModel({plasma(ev_to_rad_s(gold_plasma_freq_ev))}, "au-plasma");
}

}  // namespace casimir
