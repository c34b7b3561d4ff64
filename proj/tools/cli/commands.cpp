#include "commands.hpp"

#include <casimir/asymptotics.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

namespace casimir::cli {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

std::vector<std::string> base_comments(const RunConfig& cfg)
{
    return {std::string("command: ") + to_string(cfg.command),
            "rel_tol: " + format_double(cfg.quad.rel_tol) + ", cutoff_mult: " + format_double(cfg.quad.cutoff_mult)};
}

Table eta_table(const RunConfig& cfg)
{
    Table t;
    t.comments = base_comments(cfg);
    t.comments.push_back("units: L_m [m]; eta, eta_TE, eta_TM dimensionless; est_error absolute on eta"
                         + std::string(cfg.area ? "; force_N [N] attractive positive" : ""));
    t.columns = {"L_m", "eta", "eta_TE", "eta_TM", "est_error", "evals"};
    if (cfg.area) t.columns.push_back("force_N");
    for (const char* c : {"mirror_a", "mirror_b", "status"}) t.columns.push_back(c);

    std::vector<CavityConfig> cavities;
    for (const auto& [a, b] : expand_mirrors(cfg)) {
        const Mirror ma = parse_mirror(a, cfg.models);
        const Mirror mb = parse_mirror(b, cfg.models);
        t.comments.push_back("mirror_a: " + a + "  mirror_b: " + b);
        for (const double l : cfg.separations) cavities.push_back({ma, mb, l, cfg.area});
    }
    for (const auto& row : sweep(cavities, cfg.quad, cfg.threads)) {
        std::vector<Cell> cells{row.separation};
        if (row.result) {
            const auto& r = *row.result;
            cells.insert(cells.end(), {r.eta, r.eta_te, r.eta_tm, r.est_error, static_cast<std::int64_t>(r.evals)});
            if (cfg.area) cells.emplace_back(absolute_force(r.eta, row.separation, *cfg.area));
        } else {
            cells.insert(cells.end(), {nan, nan, nan, nan, std::int64_t{0}});
            if (cfg.area) cells.emplace_back(nan);
        }
        cells.emplace_back(row.mirror_a);
        cells.emplace_back(row.mirror_b);
        cells.emplace_back(!row.result ? "error: " + row.error : row.result->converged ? "ok" : "not-converged");
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table epsilon_table(const RunConfig& cfg)
{
    Table t;
    t.comments = base_comments(cfg);
    t.comments.push_back("eps(i omega) on the imaginary axis; 1 eV = 1.519e15 rad/s");
    t.columns = {"omega_rad_s", "omega_eV"};
    std::vector<DielectricModel> models;
    for (const auto& id : cfg.model_ids) {
        models.push_back(make_model(id, cfg.models));
        t.columns.push_back("eps[" + id + "]");
    }
    for (const double w : cfg.omegas) {
        std::vector<Cell> cells{w, rad_s_to_ev(w)};
        for (const auto& m : models) cells.emplace_back(m.epsilon(w));
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table reflect_table(const RunConfig& cfg)
{
    Table t;
    t.comments = base_comments(cfg);
    t.comments.push_back("units: omega [rad/s], k and kappa [rad/m]; kappa = sqrt(k^2 + omega^2/c^2)");
    t.columns = {"mirror", "omega_rad_s", "k_rad_m", "kappa_rad_m", "r_TE", "r_TM"};
    for (const auto& [spec, unused] : expand_mirrors(cfg)) {
        const Mirror m = parse_mirror(spec, cfg.models);
        for (const double w : cfg.omegas)
            for (const double k : cfg.transverse_k) {
                const auto kin = Kinematics::from_transverse(w, k);
                const auto r = layered_reflection(m, kin);
                t.rows.push_back({spec, w, k, kin.kappa, r.te, r.tm});
            }
    }
    return t;
}

Table asym_table(const RunConfig& cfg)
{
    Table t;
    t.comments = base_comments(cfg);
    if (cfg.phase_ratio) {
        const double d = cfg.thicknesses.empty() ? 100e-9 : cfg.thicknesses.front();
        t.comments.push_back("optical length delta of a " + format_double(d) + " m slab along c kappa = " +
                             format_double(*cfg.phase_ratio) + " omega");
        t.columns = {"omega_rad_s"};
        std::vector<std::vector<PhaseFactorPoint>> curves;
        for (const auto& id : cfg.model_ids) {
            t.columns.push_back("delta[" + id + "]");
            curves.push_back(phase_factor_curves(make_model(id, cfg.models), d, *cfg.phase_ratio, cfg.omegas));
        }
        for (std::size_t j = 0; j < cfg.omegas.size(); ++j) {
            std::vector<Cell> cells{cfg.omegas[j]};
            for (const auto& c : curves) cells.emplace_back(c[j].delta);
            t.rows.push_back(std::move(cells));
        }
        return t;
    }
    t.comments.push_back("static limits as omega, kappa -> 0; lambda_eff = 2 c / sum(wp^2/gamma), nan if undefined");
    t.columns = {"model", "thickness_m", "static_rho", "lambda_eff_m", "slab_static_r", "eta_const_r"};
    if (!cfg.separations.empty()) t.columns.insert(t.columns.end(), {"L_m", "omega_ch_rad_s"});
    std::vector<std::optional<double>> thicknesses;
    if (cfg.thicknesses.empty()) thicknesses.push_back(std::nullopt);
    for (const double d : cfg.thicknesses) thicknesses.emplace_back(d);
    for (const auto& id : cfg.model_ids) {
        const auto model = make_model(id, cfg.models);
        for (const auto& d : thicknesses) {
            const auto rep = asymptotic_report(model, d);
            std::vector<Cell> base{id, d ? *d : nan, rep.static_rho, rep.lambda_eff ? *rep.lambda_eff : nan,
                                   rep.slab_static_r, rep.eta_const_r};
            if (cfg.separations.empty()) {
                t.rows.push_back(base);
                continue;
            }
            for (const double l : cfg.separations) {
                auto cells = base;
                cells.emplace_back(l);
                cells.emplace_back(characteristic_frequency(l));
                t.rows.push_back(std::move(cells));
            }
        }
    }
    return t;
}

}  // namespace

Table dataset_table(const Dataset& ds)
{
    Table t;
    t.comments.push_back("figure: " + ds.name);
    t.comments.push_back(ds.description);
    for (const auto& n : ds.notes) t.comments.push_back(n);
    t.columns.push_back(ds.x_label);
    for (const auto& l : ds.curve_labels) t.columns.push_back(l);
    for (std::size_t j = 0; j < ds.x.size(); ++j) {
        std::vector<Cell> cells{ds.x[j]};
        for (const auto& c : ds.curves) cells.emplace_back(c[j]);
        t.rows.push_back(std::move(cells));
    }
    return t;
}

Table execute(const RunConfig& cfg)
{
    switch (cfg.command) {
    case Command::Eta:
    case Command::Sweep: return eta_table(cfg);
    case Command::Epsilon: return epsilon_table(cfg);
    case Command::Reflect: return reflect_table(cfg);
    case Command::Asym: return asym_table(cfg);
    case Command::Figure: {
        auto t = dataset_table(run_figure(cfg.figure, cfg.quad, cfg.threads, cfg.points_per_decade));
        t.comments.insert(t.comments.begin() + 1, base_comments(cfg)[1]);
        return t;
    }
    }
    throw Error("unhandled command");
}

int run(const RunConfig& cfg, std::ostream& fallback)
{
    const Table t = execute(cfg);
    std::ofstream file;
    std::ostream* os = &fallback;
    if (!cfg.output_path.empty()) {
        file.open(cfg.output_path);
        if (!file) {
            std::cerr << "error: cannot write '" << cfg.output_path << "'\n";
            return 2;
        }
        os = &file;
    }
    if (cfg.format == OutputFormat::Json) write_json(*os, t);
    else write_csv(*os, t);
    bool failed = false;
    if (cfg.command == Command::Eta || cfg.command == Command::Sweep) {
        for (const auto& row : t.rows)
            if (std::get<std::string>(row.back()).rfind("error", 0) == 0) failed = true;
    }
    return failed ? 1 : 0;
}

}  // namespace casimir::cli
