#include "figures.hpp"
#include "config.hpp"

#include <casimir/asymptotics.hpp>
#include <casimir/catalog.hpp>

#include <cmath>
#include <functional>
#include <limits>
#include <map>

namespace casimir::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct MirrorPair {
    std::string label;
    std::string a;
    std::string b;  // empty = same as a
};

std::string doped_id(const DopingLevel& level, bool plasma_carriers)
{
    char buf[96];
    std::snprintf(buf, sizeof buf, "si-doped%s:wp=%g,gamma=%g", plasma_carriers ? "-plasma" : "", level.plasma_freq_ev,
                  level.damping_ev);
    return buf;
}

std::string doping_label(const DopingLevel& level)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "N=%.2g", level.density_cm3);
    return buf;
}

std::vector<MirrorPair> silicon_family(const std::string& suffix, bool plasma_carriers)
{
    std::vector<MirrorPair> out{{"intrinsic", "si" + suffix, ""}};
    for (const auto& level : silicon_doping_table)
        out.push_back({doping_label(level), doped_id(level, plasma_carriers) + suffix, ""});
    return out;
}

Dataset eta_figure(const std::string& name, const std::string& description, const std::vector<MirrorPair>& pairs,
                   double l_min, double l_max, const QuadratureSpec& quad, unsigned threads, int ppd)
{
    Dataset ds;
    ds.name = name;
    ds.description = description;
    ds.x_label = "L_m";
    ds.x = log_space(l_min, l_max, ppd);

    std::vector<CavityConfig> cfgs;
    for (const auto& p : pairs) {
        ds.curve_labels.push_back(p.label);
        ds.notes.push_back(p.label + ": " + p.a + " | " + (p.b.empty() ? p.a : p.b));
        const Mirror a = parse_mirror(p.a);
        const Mirror b = parse_mirror(p.b.empty() ? p.a : p.b);
        for (const double l : ds.x) cfgs.push_back({a, b, l, std::nullopt});
    }
    const auto rows = sweep(cfgs, quad, threads);
    std::size_t idx = 0;
    for (std::size_t c = 0; c < pairs.size(); ++c) {
        std::vector<double> col;
        col.reserve(ds.x.size());
        for (std::size_t j = 0; j < ds.x.size(); ++j, ++idx) {
            const auto& row = rows[idx];
            if (row.result) {
                col.push_back(row.result->eta);
                if (!row.result->converged)
                    ds.notes.push_back("warning: " + pairs[c].label + " not converged at L=" + std::to_string(row.separation));
            } else {
                col.push_back(nan);
                ds.notes.push_back("error: " + pairs[c].label + ": " + row.error);
            }
        }
        ds.curves.push_back(std::move(col));
    }
    return ds;
}

Dataset epsilon_figure(const std::string& name, const std::string& description,
                       const std::vector<std::pair<std::string, std::string>>& models, int ppd)
{
    Dataset ds;
    ds.name = name;
    ds.description = description;
    ds.x_label = "omega_rad_s";
    ds.x = log_space(1e11, 1e17, ppd);
    for (const auto& [label, id] : models) {
        const auto m = make_model(id);
        ds.curve_labels.push_back(label);
        ds.notes.push_back(label + ": " + id);
        std::vector<double> col;
        for (const double w : ds.x) col.push_back(m.epsilon(w));
        ds.curves.push_back(std::move(col));
    }
    return ds;
}

// Normalized optical length delta c / (D w_ref) along c kappa = w, against
// w / w_ref; the thickness cancels.
Dataset phase_figure(const std::string& name, const std::string& description,
                     const std::vector<std::pair<std::string, std::string>>& models, double w_ref, int ppd)
{
    Dataset ds;
    ds.name = name;
    ds.description = description;
    ds.x_label = "omega_over_omega_ref";
    ds.x = log_space(1e-3, 1e2, ppd);
    char buf[96];
    std::snprintf(buf, sizeof buf, "omega_ref = %.6g rad/s, c kappa / omega = 1", w_ref);
    ds.notes.push_back(buf);
    constexpr double thickness = 100e-9;
    std::vector<double> omegas;
    for (const double x : ds.x) omegas.push_back(x * w_ref);
    for (const auto& [label, id] : models) {
        ds.curve_labels.push_back(label);
        ds.notes.push_back(label + ": " + id);
        std::vector<double> col;
        for (const auto& p : phase_factor_curves(make_model(id), thickness, 1.0, omegas))
            col.push_back(p.delta * constants::c / (thickness * w_ref));
        ds.curves.push_back(std::move(col));
    }
    return ds;
}

using Builder = std::function<Dataset(const QuadratureSpec&, unsigned, int)>;

const std::map<std::string, Builder>& builders()
{
    static const std::map<std::string, Builder> table = {
        {"fig1",
         [](const QuadratureSpec&, unsigned, int ppd) {
             std::vector<std::pair<std::string, std::string>> models{{"intrinsic", "si"}};
             for (const auto& level : silicon_doping_table) models.emplace_back(doping_label(level), doped_id(level, false));
             models.emplace_back("gold", "au-drude");
             return epsilon_figure("fig1", "eps(i omega) of intrinsic and p-doped silicon and gold", models, ppd);
         }},
        {"fig2",
         [](const QuadratureSpec&, unsigned, int ppd) {
             return epsilon_figure("fig2", "eps(i omega) of VO2 below/above the transition, Si, Au and Al2O3",
                                   {{"vo2-insulating", "vo2-ins"},
                                    {"vo2-metallic", "vo2-met"},
                                    {"silicon", "si"},
                                    {"gold", "au-drude"},
                                    {"sapphire", "al2o3"}},
                                   ppd);
         }},
        {"fig3",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig3", "eta(L) between bulk mirrors of intrinsic or p-doped silicon",
                               silicon_family("", false), 1e-8, 1e-4, q, t, ppd);
         }},
        {"fig4a",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig4a", "eta(L) between 100 nm slabs of intrinsic or p-doped silicon (Drude carriers)",
                               silicon_family("@100nm", false), 1e-8, 1e-4, q, t, ppd);
         }},
        {"fig4b",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig4b", "eta(L) between 100 nm slabs of intrinsic or p-doped silicon (plasma carriers)",
                               silicon_family("@100nm", true), 1e-8, 1e-4, q, t, ppd);
         }},
        {"fig5a",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig5a", "eta(L) between 100 nm laser-irradiated silicon slabs",
                               {{"laser-drude", "si-laser-drude@100nm", ""},
                                {"laser-plasma", "si-laser-plasma@100nm", ""},
                                {"p-doped-5e14", "si-doped:wp=0.00184,gamma=0.00329@100nm", ""}},
                               1e-8, 1e-4, q, t, ppd);
         }},
        {"fig5b",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig5b", "eta(L) between 4000 nm laser-irradiated silicon slabs",
                               {{"laser-drude", "si-laser-drude@4000nm", ""},
                                {"laser-plasma", "si-laser-plasma@4000nm", ""},
                                {"p-doped-5e14", "si-doped:wp=0.00184,gamma=0.00329@4000nm", ""}},
                               1e-8, 1e-4, q, t, ppd);
         }},
        {"fig6a",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig6a", "eta(L) for insulating VO2: bulks, 100 nm slabs, 100 nm films on sapphire",
                               {{"bulk", "vo2-ins", ""},
                                {"slab-100nm", "vo2-ins@100nm", ""},
                                {"film-on-al2o3", "vo2-ins@100nm/al2o3", ""}},
                               1e-8, 1e-4, q, t, ppd);
         }},
        {"fig6b",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig6b", "eta(L) for metallic VO2: bulks, 100 nm slabs, 100 nm films on sapphire",
                               {{"bulk", "vo2-met", ""},
                                {"slab-100nm", "vo2-met@100nm", ""},
                                {"film-on-al2o3", "vo2-met@100nm/al2o3", ""}},
                               1e-8, 1e-4, q, t, ppd);
         }},
        {"fig8",
         [](const QuadratureSpec& q, unsigned t, int ppd) {
             return eta_figure("fig8", "eta(L) between a VO2 mirror and a gold bulk",
                               {{"vo2-ins|au", "vo2-ins", "au-drude"},
                                {"vo2-met|au", "vo2-met", "au-drude"},
                                {"vo2-ins-film|au", "vo2-ins@100nm/al2o3", "au-drude"},
                                {"vo2-met-film|au", "vo2-met@100nm/al2o3", "au-drude"}},
                               1e-8, 1e-4, q, t, ppd);
         }},
        {"phase-weak",
         [](const QuadratureSpec&, unsigned, int ppd) {
             return phase_figure("phase-weak", "optical length of intrinsic and weakly p-doped silicon slabs",
                                 {{"intrinsic", "si"},
                                  {"drude", "si-doped:wp=0.00184,gamma=0.00329"},
                                  {"plasma", "si-doped-plasma:wp=0.00184,gamma=0.00329"}},
                                 ev_to_rad_s(0.00184), ppd);
         }},
        {"phase-laser",
         [](const QuadratureSpec&, unsigned, int ppd) {
             return phase_figure("phase-laser", "optical length of intrinsic and laser-irradiated silicon slabs",
                                 {{"intrinsic", "si"}, {"drude", "si-laser-drude"}, {"plasma", "si-laser-plasma"}},
                                 ev_to_rad_s(0.329), ppd);
         }},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& figure_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : builders()) v.push_back(k);
        return v;
    }();
    return names;
}

bool is_known_figure(const std::string& name) { return builders().count(name) > 0; }

Dataset run_figure(const std::string& name, const QuadratureSpec& quad, unsigned threads, int points_per_decade)
{
    const auto it = builders().find(name);
    if (it == builders().end()) throw Error("unknown figure '" + name + "'");
    return it->second(quad, threads, points_per_decade);
}

}  // namespace casimir::cli
