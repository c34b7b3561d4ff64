#pragma once

// String identifiers for catalog models and mirror stacks.
//
//   model ids:  si, si-doped:N=1e20, si-doped:wp=0.636,gamma=0.06529,
//               si-doped:N=1e20,rho=1.2e-3[,m=0.34], si-doped-plasma:N=1e20,
//               si-laser-drude, si-laser-plasma, vo2-ins, vo2-met, al2o3,
//               au-drude, au-plasma, drude:wp=..,gamma=.., plasma:wp=..
//               (frequencies in eV) plus any user-registered name.
//   mirrors:    "MODEL" bulk, "MODEL@100nm" free slab,
//               "MODEL@100nm/MODEL2@5nm/SUBSTRATE" stack over a bulk.

#include <casimir/dielectric.hpp>
#include <casimir/reflection.hpp>

#include <cmath>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <map>
#include <string>
#include <vector>

namespace casimir {

using ModelRegistry = std::map<std::string, DielectricModel>;

namespace detail {

inline double parse_number(const std::string& s, const std::string& context)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v))
        throw Error(context + ": '" + s + "' is not a number");
    return v;
}

inline std::map<std::string, double> parse_params(const std::string& s, const std::string& id)
{
    std::map<std::string, double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const auto comma = s.find(',', pos);
        const std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("model '" + id + "': parameter '" + item + "' needs key=value");
        out[item.substr(0, eq)] = parse_number(item.substr(eq + 1), "model '" + id + "'");
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline const DopingLevel& nearest_doping_level(double density, const std::string& id)
{
    for (const auto& level : silicon_doping_table) {
        if (std::abs(std::log(density / level.density_cm3)) < std::log(1.25)) return level;
    }
    throw Error("model '" + id + "': no tabulated doping level near N = " + std::to_string(density) +
                " (give rho= or wp=,gamma= explicitly)");
}

inline DrudeParameters doped_parameters(const std::map<std::string, double>& p, const std::string& id)
{
    const auto get = [&](const char* key) -> std::optional<double> {
        const auto it = p.find(key);
        return it == p.end() ? std::nullopt : std::optional<double>(it->second);
    };
    for (const auto& [key, value] : p)
        if (key != "N" && key != "rho" && key != "m" && key != "wp" && key != "gamma")
            throw Error("model '" + id + "': unknown parameter '" + key + "'");
    if (get("wp")) {
        if (!get("gamma")) throw Error("model '" + id + "': wp= requires gamma=");
        return {ev_to_rad_s(*get("wp")), ev_to_rad_s(*get("gamma"))};
    }
    const auto n = get("N");
    if (!n) throw Error("model '" + id + "': needs N= or wp=,gamma=");
    if (get("rho")) return carrier_to_drude({*n, get("m").value_or(0.34), *get("rho")});
    const auto& level = nearest_doping_level(*n, id);
    return {ev_to_rad_s(level.plasma_freq_ev), ev_to_rad_s(level.damping_ev)};
}

}  // namespace detail

/// Resolves a model id; names in `extra` take precedence over the catalog.
inline DielectricModel make_model(const std::string& id, const ModelRegistry& extra = {})
{
    if (const auto it = extra.find(id); it != extra.end()) return it->second;
    if (id == "si") return silicon_intrinsic();
    if (id == "vo2-ins") return vo2_insulating();
    if (id == "vo2-met") return vo2_metallic();
    if (id == "al2o3") return sapphire();
    if (id == "au-drude") return gold_drude();
    if (id == "au-plasma") return gold_plasma();
    if (id == "si-laser-drude") return DielectricModel(silicon_laser_excited(silicon_intrinsic(), false).terms(), id);
    if (id == "si-laser-plasma") return DielectricModel(silicon_laser_excited(silicon_intrinsic(), true).terms(), id);

    const auto colon = id.find(':');
    const std::string head = id.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : id.substr(colon + 1);
    if (head == "si-doped" || head == "si-doped-plasma") {
        if (args.empty()) throw Error("model '" + id + "': expected si-doped:N=...");
        auto p = detail::doped_parameters(detail::parse_params(args, id), id);
        if (head == "si-doped-plasma") p.damping = 0.0;
        return DielectricModel(silicon_doped(silicon_intrinsic(), p.plasma_freq, p.damping).terms(), id);
    }
    if (head == "drude" || head == "plasma") {
        const auto p = detail::parse_params(args, id);
        const auto wp = p.find("wp");
        if (wp == p.end()) throw Error("model '" + id + "': needs wp=");
        double gamma = 0.0;
        if (head == "drude") {
            const auto g = p.find("gamma");
            if (g == p.end()) throw Error("model '" + id + "': needs gamma=");
            gamma = g->second;
        }
        return DielectricModel({drude(ev_to_rad_s(wp->second), ev_to_rad_s(gamma))}, id);
    }
    throw Error("unknown model id '" + id + "'");
}

/// Thickness with optional unit suffix: nm, um, mm or m (default m).
inline double parse_length(const std::string& s)
{
    // Divide by the exact inverse so "100nm" reads as the double nearest 1e-7.
    static const std::vector<std::pair<std::string, double>> units = {
        {"nm", 1e9}, {"um", 1e6}, {"mm", 1e3}, {"m", 1.0}};
    for (const auto& [suffix, per_metre] : units) {
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
            const std::string num = s.substr(0, s.size() - suffix.size());
            // "1e-7m" must not be read as "1e-7" + "m" with a dangling 'e'.
            if (!num.empty() && (std::isdigit(static_cast<unsigned char>(num.back())) || num.back() == '.'))
                return detail::parse_number(num, "length") / per_metre;
        }
    }
    return detail::parse_number(s, "length");
}

/// Parses a mirror spec (see header comment).
inline Mirror parse_mirror(const std::string& spec, const ModelRegistry& extra = {})
{
    if (spec.empty()) throw Error("empty mirror spec");
    std::vector<Layer> layers;
    std::optional<DielectricModel> backing;
    std::size_t pos = 0;
    while (true) {
        const auto slash = spec.find('/', pos);
        const std::string part = spec.substr(pos, slash == std::string::npos ? std::string::npos : slash - pos);
        if (backing) throw Error("mirror '" + spec + "': bulk backing must be the last component");
        const auto at = part.find('@');
        if (at == std::string::npos) {
            backing = make_model(part, extra);
        } else {
            const double d = parse_length(part.substr(at + 1));
            if (!(d > 0.0)) throw Error("mirror '" + spec + "': layer thickness must be positive");
            layers.push_back({make_model(part.substr(0, at), extra), d});
        }
        if (slash == std::string::npos) break;
        pos = slash + 1;
    }
    return Mirror(std::move(layers), std::move(backing));
}

inline std::vector<std::string> catalog_ids()
{
    return {"si", "si-doped:N=1e20", "si-laser-drude", "si-laser-plasma", "vo2-ins", "vo2-met", "al2o3",
            "au-drude", "au-plasma"};
}

}  // namespace casimir
