#pragma once

// Tabulated loss spectra and their transform to the imaginary frequency axis:
//   eps(i w) - 1 = (2/pi) Int_0^inf x eps''(x) / (x^2 + w^2) dx

#include <casimir/quadrature.hpp>
#include <casimir/units.hpp>

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace casimir {

enum class Interpolation { LogLog, Linear };

enum class Extrapolation {
    Error,           // abort when the tail would carry more than 1e-4 of the result
    HoldEps2TimesX,  // eps''(x) * x held constant past the end sample
    Zero,            // no absorption outside the table
    InverseCube      // eps''(x) ~ x^-3 (high-frequency side only)
};

struct OpticalSample {
    double x;     // real angular frequency, rad/s
    double eps2;  // imaginary part of the permittivity
};

struct NkRow {
    double x;  // rad/s
    double n;
    double k;
};

/// Sampled eps''(x) together with the laws used between and beyond samples.
class OpticalTable {
public:
    OpticalTable(std::vector<OpticalSample> samples, Interpolation interp = Interpolation::LogLog,
                 Extrapolation low = Extrapolation::HoldEps2TimesX, Extrapolation high = Extrapolation::InverseCube)
        : samples_(std::move(samples)), interp_(interp), low_(low), high_(high)
    {
        if (samples_.size() < 2) throw Error("optical table needs at least 2 samples");
        for (std::size_t i = 0; i < samples_.size(); ++i) {
            const auto& s = samples_[i];
            if (!(s.x > 0.0) || !std::isfinite(s.x)) throw Error("optical table frequencies must be positive");
            if (!(s.eps2 >= 0.0) || !std::isfinite(s.eps2)) throw Error("optical table eps'' must be non-negative");
            if (i > 0 && !(s.x > samples_[i - 1].x)) throw Error("optical table frequencies must be strictly increasing");
        }
        if (low_ == Extrapolation::InverseCube) throw Error("x^-3 extrapolation is only valid on the high-frequency side");
    }

    const std::vector<OpticalSample>& samples() const { return samples_; }
    Interpolation interpolation() const { return interp_; }
    Extrapolation extrapolation_low() const { return low_; }
    Extrapolation extrapolation_high() const { return high_; }

    /// Interpolated eps''(x) inside the sampled range.
    double eps2(double x) const
    {
        if (x <= samples_.front().x) return samples_.front().eps2;
        if (x >= samples_.back().x) return samples_.back().eps2;
        std::size_t lo = 0, hi = samples_.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (samples_[mid].x <= x ? lo : hi) = mid;
        }
        const auto& a = samples_[lo];
        const auto& b = samples_[hi];
        if (interp_ == Interpolation::LogLog && a.eps2 > 0.0 && b.eps2 > 0.0) {
            const double p = std::log(b.eps2 / a.eps2) / std::log(b.x / a.x);
            return a.eps2 * std::pow(x / a.x, p);
        }
        return a.eps2 + (b.eps2 - a.eps2) * (x - a.x) / (b.x - a.x);
    }

private:
    std::vector<OpticalSample> samples_;
    Interpolation interp_;
    Extrapolation low_, high_;
};

/// eps'' = 2 n k for each row of a complex refractive index table.
inline OpticalTable table_from_nk(const std::vector<NkRow>& rows, Interpolation interp = Interpolation::LogLog,
                                  Extrapolation low = Extrapolation::HoldEps2TimesX,
                                  Extrapolation high = Extrapolation::InverseCube)
{
    std::vector<OpticalSample> samples;
    samples.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.n < 0.0 || r.k < 0.0) throw Error("row " + std::to_string(i) + ": n and k must be non-negative");
        if (i > 0 && !(r.x > rows[i - 1].x)) throw Error("row " + std::to_string(i) + ": frequencies not ascending");
        samples.push_back({r.x, 2.0 * r.n * r.k});
    }
    return OpticalTable(std::move(samples), interp, low, high);
}

namespace detail {

// q - atan(q), accurate for small q.
inline double q_minus_atan(double q)
{
    if (std::abs(q) < 1e-2) {
        const double q2 = q * q;
        return q * q2 * (1.0 / 3.0 - q2 * (1.0 / 5.0 - q2 * (1.0 / 7.0 - q2 / 9.0)));
    }
    return q - std::atan(q);
}

// Int_{x1}^{x2} x (a + b x) / (x^2 + w^2) dx for eps'' linear on the segment.
inline double linear_segment(const OpticalSample& s1, const OpticalSample& s2, double w)
{
    const double x1 = s1.x, x2 = s2.x, dx = x2 - x1;
    const double b = (s2.eps2 - s1.eps2) / dx;
    const double a = s1.eps2 - b * x1;
    const double w2 = w * w;
    const double log_term = 0.5 * std::log1p(dx * (x1 + x2) / (x1 * x1 + w2));
    // dx - w [atan(x2/w) - atan(x1/w)] written without cancellation
    const double q = dx * w / (w2 + x1 * x2);
    const double poly_term = dx * x1 * x2 / (w2 + x1 * x2) + w * q_minus_atan(q);
    return a * log_term + b * poly_term;
}

// Same integral for eps'' a power law between the end samples. In u = ln x the
// integrand is analytic with its nearest singularities pi/2 off the real axis,
// so 16-point Gauss-Legendre on panels of unit width is exact to rounding.
inline double power_law_segment(const OpticalSample& s1, const OpticalSample& s2, double w)
{
    const double u1 = std::log(s1.x), u2 = std::log(s2.x);
    const double p = std::log(s2.eps2 / s1.eps2) / (u2 - u1);
    const double lw = std::log(w);
    const auto integrand = [&](double u) {
        // x^2 eps''(x) / (x^2 + w^2) = eps''(x) / (1 + (w/x)^2)
        const double e = s1.eps2 * std::exp(p * (u - u1));
        const double r = std::exp(2.0 * (lw - u));
        return e / (1.0 + r);
    };
    const auto& rule = quad::GaussLegendre<16>::instance();
    const int panels = std::max(1, static_cast<int>(std::ceil(u2 - u1)));
    const double h = (u2 - u1) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) sum += rule.integrate(integrand, u1 + i * h, u1 + (i + 1) * h);
    return sum;
}

// Tail below the first sample with eps'' x held constant.
inline double low_tail_hold(const OpticalSample& s, double w) { return s.eps2 * s.x * std::atan(s.x / w) / w; }

// Tail above the last sample with eps'' x held constant.
inline double high_tail_hold(const OpticalSample& s, double w) { return s.eps2 * s.x * std::atan(w / s.x) / w; }

// Tail above the last sample with eps'' ~ x^-3.
inline double high_tail_inverse_cube(const OpticalSample& s, double w)
{
    const double z = w / s.x;
    double one_minus = 0.0;  // 1 - atan(z)/z
    if (z < 1e-2) {
        const double z2 = z * z;
        one_minus = z2 * (1.0 / 3.0 - z2 * (1.0 / 5.0 - z2 / 7.0));
    } else {
        one_minus = 1.0 - std::atan(z) / z;
    }
    return s.eps2 * s.x * s.x * one_minus / (w * w);
}

}  // namespace detail

/// Share of the transform integral carried by the out-of-table regions.
struct KkBreakdown {
    double body = 0.0;
    double low_tail = 0.0;
    double high_tail = 0.0;
};

inline KkBreakdown kk_breakdown(const OpticalTable& table, double w)
{
    if (!(w > 0.0)) throw Error("Kramers-Kronig transform requires w > 0");
    const auto& s = table.samples();
    KkBreakdown out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        const bool power = table.interpolation() == Interpolation::LogLog && s[i].eps2 > 0.0 && s[i + 1].eps2 > 0.0;
        out.body += power ? detail::power_law_segment(s[i], s[i + 1], w) : detail::linear_segment(s[i], s[i + 1], w);
    }
    switch (table.extrapolation_low()) {
    case Extrapolation::HoldEps2TimesX:
    case Extrapolation::Error: out.low_tail = detail::low_tail_hold(s.front(), w); break;
    default: break;
    }
    switch (table.extrapolation_high()) {
    case Extrapolation::HoldEps2TimesX: out.high_tail = detail::high_tail_hold(s.back(), w); break;
    case Extrapolation::InverseCube:
    case Extrapolation::Error: out.high_tail = detail::high_tail_inverse_cube(s.back(), w); break;
    default: break;
    }
    return out;
}

/// eps(i w) from the tabulated loss spectrum. Under the `Error` policy the
/// tail is estimated with the default law for that side; if it exceeds 1e-4
/// of eps(i w) - 1 the call throws, otherwise the tail is dropped.
inline double kk_epsilon(const OpticalTable& table, double w)
{
    auto parts = kk_breakdown(table, w);
    const double total = parts.body + parts.low_tail + parts.high_tail;
    constexpr double tail_limit = 1e-4;
    if (table.extrapolation_low() == Extrapolation::Error) {
        if (parts.low_tail > tail_limit * total)
            throw Error("optical table: low-frequency tail carries significant weight at w = " + std::to_string(w));
        parts.low_tail = 0.0;
    }
    if (table.extrapolation_high() == Extrapolation::Error) {
        if (parts.high_tail > tail_limit * total)
            throw Error("optical table: high-frequency tail carries significant weight at w = " + std::to_string(w));
        parts.high_tail = 0.0;
    }
    return 1.0 + (2.0 / std::numbers::pi) * (parts.body + parts.low_tail + parts.high_tail);
}

namespace detail {

inline Extrapolation parse_extrapolation(const std::string& v)
{
    if (v == "error") return Extrapolation::Error;
    if (v == "hold") return Extrapolation::HoldEps2TimesX;
    if (v == "zero") return Extrapolation::Zero;
    if (v == "inverse-cube") return Extrapolation::InverseCube;
    throw Error("unknown extrapolation policy '" + v + "'");
}

inline std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Reads the plain-text table format:
///
///   # free comment
///   #! columns = nk        (x n k, default) or eps2 (x eps'')
///   #! unit = eV           (default) or rad_s, applies to x
///   #! interp = loglog     or linear
///   #! extrap_low = hold   error | hold | zero
///   #! extrap_high = inverse-cube   error | hold | zero | inverse-cube
///   1.0  3.2  0.01
///
/// Columns may be separated by whitespace or commas.
inline OpticalTable read_optical_table(std::istream& in, const std::string& source = "<stream>")
{
    bool nk = true;
    FrequencyUnit unit = FrequencyUnit::ElectronVolt;
    Interpolation interp = Interpolation::LogLog;
    Extrapolation low = Extrapolation::HoldEps2TimesX;
    Extrapolation high = Extrapolation::InverseCube;
    std::vector<NkRow> rows;
    std::vector<OpticalSample> samples;

    std::string line;
    int lineno = 0;
    const auto fail = [&](const std::string& msg) { throw Error(source + ":" + std::to_string(lineno) + ": " + msg); };
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (t.rfind("#!", 0) == 0) {
            const std::string body = t.substr(2);
            const auto eq = body.find('=');
            if (eq == std::string::npos) fail("directive needs 'key = value'");
            const std::string key = detail::trim(body.substr(0, eq));
            const std::string val = detail::trim(body.substr(eq + 1));
            try {
                if (key == "columns") {
                    if (val == "nk") nk = true;
                    else if (val == "eps2") nk = false;
                    else fail("columns must be 'nk' or 'eps2'");
                } else if (key == "unit") {
                    unit = parse_frequency_unit(val);
                } else if (key == "interp") {
                    if (val == "loglog") interp = Interpolation::LogLog;
                    else if (val == "linear") interp = Interpolation::Linear;
                    else fail("interp must be 'loglog' or 'linear'");
                } else if (key == "extrap_low") {
                    low = detail::parse_extrapolation(val);
                } else if (key == "extrap_high") {
                    high = detail::parse_extrapolation(val);
                } else {
                    fail("unknown directive '" + key + "'");
                }
            } catch (const Error& e) {
                if (std::string(e.what()).rfind(source, 0) == 0) throw;
                fail(e.what());
            }
            continue;
        }
        if (t[0] == '#') continue;

        std::string cleaned = t;
        for (auto& ch : cleaned)
            if (ch == ',') ch = ' ';
        std::istringstream fields(cleaned);
        std::vector<double> v;
        double d;
        while (fields >> d) v.push_back(d);
        if (!fields.eof()) fail("non-numeric field");
        const std::size_t want = nk ? 3 : 2;
        if (v.size() != want) fail("expected " + std::to_string(want) + " columns, got " + std::to_string(v.size()));
        const double x = to_rad_s(v[0], unit);
        if (nk) rows.push_back({x, v[1], v[2]});
        else samples.push_back({x, v[1]});
    }
    try {
        return nk ? table_from_nk(rows, interp, low, high) : OpticalTable(std::move(samples), interp, low, high);
    } catch (const Error& e) {
        throw Error(source + ": " + e.what());
    }
}

inline OpticalTable read_optical_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open optical table '" + path + "'");
    return read_optical_table(in, path);
}

}  // namespace casimir
