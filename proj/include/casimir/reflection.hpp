#pragma once

// Reflection amplitudes of mirrors seen from the vacuum gap, evaluated at
// imaginary frequency w and imaginary longitudinal wavevector kappa. In each
// medium the field decays with K = sqrt(w^2 (eps - 1) + c^2 kappa^2); in
// vacuum K = c kappa. All radicands are positive, so every amplitude is real.

#include <casimir/dielectric.hpp>
#include <casimir/units.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace casimir {

enum class Polarization { TE, TM };

inline const char* to_string(Polarization p) { return p == Polarization::TE ? "TE" : "TM"; }

struct Kinematics {
    double omega;  // imaginary frequency, rad/s
    double kappa;  // imaginary longitudinal wavevector, rad/m

    /// kappa = sqrt(k^2 + w^2/c^2) for transverse wavevector k.
    static Kinematics from_transverse(double omega, double k)
    {
        const double wc = omega / constants::c;
        return {omega, std::sqrt(k * k + wc * wc)};
    }

    double transverse() const
    {
        const double wc = omega / constants::c;
        return std::sqrt(std::max(0.0, kappa * kappa - wc * wc));
    }

    void validate() const
    {
        if (!(omega >= 0.0) || !std::isfinite(omega)) throw Error("kinematics: omega must be finite and >= 0");
        if (!(kappa >= 0.0) || !std::isfinite(kappa)) throw Error("kinematics: kappa must be finite and >= 0");
        if (omega == 0.0 && kappa == 0.0) throw Error("kinematics: omega = kappa = 0 is degenerate");
        if (constants::c * kappa < omega * (1.0 - 1e-12)) throw Error("kinematics: kappa must be >= omega / c");
    }
};

struct ReflectionPair {
    double te;
    double tm;

    double operator[](Polarization p) const { return p == Polarization::TE ? te : tm; }
};

/// K = sqrt(w^2 (eps - 1) + c^2 kappa^2), in rad/s.
inline double decay_factor(double eps, const Kinematics& kin)
{
    if (!(eps >= 1.0)) throw Error("permittivity on the imaginary axis must be >= 1, got " + std::to_string(eps));
    const double ck = constants::c * kin.kappa;
    return std::sqrt(kin.omega * kin.omega * (eps - 1.0) + ck * ck);
}

/// Amplitude for a wave in medium a reflected at the interface to medium b.
/// Antisymmetric under a <-> b; vacuum-to-medium reproduces the bulk
/// formulas with the TM sign convention in which both polarizations agree at
/// normal incidence.
inline ReflectionPair interface_amplitudes(double eps_a, double k_a, double eps_b, double k_b)
{
    return {(k_a - k_b) / (k_a + k_b), (eps_a * k_b - eps_b * k_a) / (eps_a * k_b + eps_b * k_a)};
}

inline ReflectionPair fresnel_bulk(double eps, const Kinematics& kin)
{
    kin.validate();
    const double k = decay_factor(eps, kin);
    return interface_amplitudes(1.0, constants::c * kin.kappa, eps, k);
}

/// Bulk vacuum-medium amplitude for one polarization.
inline double fresnel_bulk(double eps, const Kinematics& kin, Polarization pol) { return fresnel_bulk(eps, kin)[pol]; }

/// delta = (D/c) sqrt(w^2 (eps - 1) + c^2 kappa^2).
inline double optical_length(double eps, double thickness, const Kinematics& kin)
{
    if (!(thickness > 0.0)) throw Error("slab thickness must be positive");
    return thickness / constants::c * decay_factor(eps, kin);
}

/// Free-standing slab: r = rho (1 - e^{-2 delta}) / (1 - rho^2 e^{-2 delta}).
inline ReflectionPair slab_reflection(double eps, double thickness, const Kinematics& kin)
{
    const auto rho = fresnel_bulk(eps, kin);
    const double e = std::exp(-2.0 * optical_length(eps, thickness, kin));
    const auto one = [e](double r) { return r * (1.0 - e) / (1.0 - r * r * e); };
    return {one(rho.te), one(rho.tm)};
}

inline double slab_reflection(double eps, double thickness, const Kinematics& kin, Polarization pol)
{
    return slab_reflection(eps, thickness, kin)[pol];
}

struct Layer {
    DielectricModel model;
    double thickness;  // m
};

/// Layer stack facing the cavity, front to back, terminated by vacuum or a
/// bulk half-space.
class Mirror {
public:
    Mirror(std::vector<Layer> layers, std::optional<DielectricModel> backing)
        : layers_(std::move(layers)), backing_(std::move(backing))
    {
        for (const auto& l : layers_)
            if (!(l.thickness > 0.0)) throw Error("layer '" + l.model.label() + "' needs a positive thickness");
        if (layers_.empty() && !backing_) throw Error("mirror needs at least one layer or a bulk backing");
    }

    static Mirror bulk(DielectricModel model) { return Mirror({}, std::move(model)); }
    static Mirror slab(DielectricModel model, double thickness) { return Mirror({{std::move(model), thickness}}, {}); }
    static Mirror film_on(DielectricModel film, double thickness, DielectricModel substrate)
    {
        return Mirror({{std::move(film), thickness}}, std::move(substrate));
    }

    const std::vector<Layer>& layers() const { return layers_; }
    const std::optional<DielectricModel>& backing() const { return backing_; }

    /// Compact description, e.g. "vo2-ins@1e-07/al2o3".
    std::string describe() const
    {
        std::string s;
        char buf[64];
        for (const auto& l : layers_) {
            if (!s.empty()) s += '/';
            std::snprintf(buf, sizeof buf, "@%.6g", l.thickness);
            s += l.model.label() + buf;
        }
        if (backing_) {
            if (!s.empty()) s += '/';
            s += backing_->label();
        }
        return s;
    }

private:
    std::vector<Layer> layers_;
    std::optional<DielectricModel> backing_;
};

/// Both polarizations for a layered mirror, by back-to-front composition
///   r = (rho_front + r_behind e^{-2 delta}) / (1 + rho_front r_behind e^{-2 delta}).
inline ReflectionPair layered_reflection(const Mirror& mirror, const Kinematics& kin)
{
    kin.validate();
    const auto& layers = mirror.layers();
    const double k_vac = constants::c * kin.kappa;

    // Medium behind the deepest layer.
    double eps_back = 1.0, k_back = k_vac;
    if (mirror.backing()) {
        eps_back = mirror.backing()->epsilon(kin.omega);
        k_back = decay_factor(eps_back, kin);
    }
    if (layers.empty()) return interface_amplitudes(1.0, k_vac, eps_back, k_back);

    std::size_t i = layers.size() - 1;
    double eps = layers[i].model.epsilon(kin.omega);
    double k = decay_factor(eps, kin);
    ReflectionPair r = interface_amplitudes(eps, k, eps_back, k_back);
    const auto compose = [](double front, double behind, double e) {
        return (front + behind * e) / (1.0 + front * behind * e);
    };
    while (true) {
        const double e = std::exp(-2.0 * layers[i].thickness * k / constants::c);
        double eps_front = 1.0, k_front = k_vac;
        if (i > 0) {
            eps_front = layers[i - 1].model.epsilon(kin.omega);
            k_front = decay_factor(eps_front, kin);
        }
        const auto rho = interface_amplitudes(eps_front, k_front, eps, k);
        r = {compose(rho.te, r.te, e), compose(rho.tm, r.tm, e)};
        if (i == 0) break;
        --i;
        eps = eps_front;
        k = k_front;
    }
    return r;
}

inline double layered_reflection(const Mirror& mirror, const Kinematics& kin, Polarization pol)
{
    return layered_reflection(mirror, kin)[pol];
}

}  // namespace casimir
