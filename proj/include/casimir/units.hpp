#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace casimir {

/// Raised for invalid physical inputs and numerical failures across the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace constants {
inline constexpr double c = 299792458.0;                  // m/s
inline constexpr double hbar = 1.054571817e-34;           // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double electron_mass = 9.1093837015e-31;     // kg
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m

// Fixed conversion used for every eV-specified model parameter. It differs
// from e/hbar = 1.51927e15 by about 0.02%; keeping it makes tabulated
// reference parameters reproduce exactly.
inline constexpr double rad_s_per_ev = 1.519e15;
}  // namespace constants

constexpr double ev_to_rad_s(double ev) { return ev * constants::rad_s_per_ev; }
constexpr double rad_s_to_ev(double w) { return w / constants::rad_s_per_ev; }

enum class FrequencyUnit { ElectronVolt, RadPerSecond };

inline double to_rad_s(double value, FrequencyUnit unit)
{
    return unit == FrequencyUnit::ElectronVolt ? ev_to_rad_s(value) : value;
}

inline FrequencyUnit parse_frequency_unit(const std::string& tag)
{
    if (tag == "eV" || tag == "ev") return FrequencyUnit::ElectronVolt;
    if (tag == "rad_s" || tag == "rad/s") return FrequencyUnit::RadPerSecond;
    throw Error("unknown frequency unit '" + tag + "' (expected eV or rad_s)");
}

}  // namespace casimir
