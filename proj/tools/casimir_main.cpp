// Command-line front end: reduction factors, sweeps, permittivities,
// reflection grids, static limits and figure data.

#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace casimir;
using namespace casimir::cli;

namespace {

std::vector<double> lengths(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const auto& s : items) out.push_back(parse_length(s));
    return out;
}

std::vector<double> numbers(const std::vector<std::string>& items)
{
    std::vector<double> out;
    for (const auto& s : items) out.push_back(casimir::detail::parse_number(s, "value"));
    return out;
}

void attach_table(RunConfig& cfg, const std::string& arg)
{
    std::string name, path = arg;
    if (const auto eq = arg.find('='); eq != std::string::npos) {
        name = arg.substr(0, eq);
        path = arg.substr(eq + 1);
    } else {
        name = std::filesystem::path(arg).stem().string();
    }
    auto table = std::make_shared<const OpticalTable>(read_optical_table(path));
    cfg.models[name] = DielectricModel::from_table(std::move(table), name);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Casimir force reduction factor between layered plane mirrors"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    std::vector<std::string> tables;
    std::string format = "csv";
    double tol = cfg.quad.rel_tol;
    double cutoff = cfg.quad.cutoff_mult;
    std::size_t max_evals = cfg.quad.max_evals;
    app.add_option("--tol", tol, "relative tolerance of the Lifshitz integral")->capture_default_str();
    app.add_option("--max-evals", max_evals, "integrand evaluation budget")->capture_default_str();
    app.add_option("--cutoff", cutoff, "outer cutoff x = 2 kappa L <= cutoff")->capture_default_str();
    app.add_option("--table", tables, "attach an optical table as a model: [NAME=]PATH (name defaults to file stem)");
    app.add_option("--out", cfg.output_path, "output file (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", cfg.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);

    std::string mirror_a, mirror_b;
    std::vector<std::string> l_values, d_values, omega_values, k_values;
    double l_min = 0, l_max = 0, omega_min = 0, omega_max = 0;
    std::string unit = "eV";
    double area = 0, phase_ratio = 0;

    auto* eta = app.add_subcommand("eta", "reduction factor at given separations");
    auto* sweep_cmd = app.add_subcommand("sweep", "reduction factor over a log-spaced separation range");
    for (auto* sub : {eta, sweep_cmd}) {
        sub->add_option("-a,--a", mirror_a, "mirror A spec, e.g. si@100nm or vo2-ins@100nm/al2o3")->required();
        sub->add_option("-b,--b", mirror_b, "mirror B spec (default: same as A)");
        sub->add_option("--D", d_values, "thicknesses substituted for @D in mirror specs")->delimiter(',');
        sub->add_option("--area", area, "plate area in m^2 for absolute force output");
    }
    eta->add_option("--L", l_values, "separations (m, or with nm/um suffix)")->delimiter(',')->required();
    sweep_cmd->add_option("--L", l_values, "explicit separations")->delimiter(',');
    sweep_cmd->add_option("--Lmin", l_min, "range start (m)");
    sweep_cmd->add_option("--Lmax", l_max, "range end (m)");
    sweep_cmd->add_option("--ppd", cfg.points_per_decade, "points per decade")->capture_default_str();

    std::vector<std::string> model_ids;
    auto* epsilon = app.add_subcommand("epsilon", "permittivity on the imaginary frequency axis");
    epsilon->add_option("model", model_ids, "model ids")->required();
    auto* reflect = app.add_subcommand("reflect", "reflection amplitudes on an (omega, k) grid");
    reflect->add_option("--mirror", mirror_a, "mirror spec")->required();
    reflect->add_option("--k", k_values, "transverse wavevectors (rad/m)")->delimiter(',')->required();
    reflect->add_option("--D", d_values, "thicknesses substituted for @D")->delimiter(',');
    auto* asym = app.add_subcommand("asym", "long-distance static limits for a model");
    asym->add_option("model", model_ids, "model ids")->required();
    asym->add_option("--D", d_values, "slab thickness(es); omit for bulk")->delimiter(',');
    asym->add_option("--L", l_values, "separations for the characteristic frequency c/L")->delimiter(',');
    asym->add_option("--phase-ratio", phase_ratio, "emit optical length along c kappa = ratio * omega instead");
    for (auto* sub : {epsilon, reflect, asym}) {
        sub->add_option("--omega", omega_values, "frequencies")->delimiter(',');
        sub->add_option("--omega-min", omega_min, "log range start");
        sub->add_option("--omega-max", omega_max, "log range end");
        sub->add_option("--unit", unit, "frequency unit: eV or rad_s")->check(CLI::IsMember({"eV", "rad_s"}));
        sub->add_option("--ppd", cfg.points_per_decade, "points per decade")->capture_default_str();
    }

    auto* figure = app.add_subcommand("figure", "curve data for a figure");
    figure->add_option("name", cfg.figure, "figure name")->required();
    figure->add_option("--ppd", cfg.points_per_decade, "points per decade")->capture_default_str();

    std::string config_path;
    auto* run_cmd = app.add_subcommand("run", "execute a YAML run description");
    run_cmd->add_option("config", config_path, "config file")->required()->check(CLI::ExistingFile);

    auto* list = app.add_subcommand("list", "list catalog models and figure names");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            std::cout << "models:\n";
            for (const auto& id : catalog_ids()) std::cout << "  " << id << '\n';
            std::cout << "figures:\n";
            for (const auto& f : figure_names()) std::cout << "  " << f << '\n';
            return 0;
        }

        if (run_cmd->parsed()) {
            std::ifstream in(config_path);
            std::stringstream buf;
            buf << in.rdbuf();
            const auto base = std::filesystem::path(config_path).parent_path().string();
            auto parsed = parse_config(buf.str(), base.empty() ? "." : base);
            if (!parsed) {
                for (const auto& e : parsed.errors) std::cerr << config_path << ": " << format_error(e) << '\n';
                return 2;
            }
            RunConfig file_cfg = std::move(*parsed.config);
            for (const auto& t : tables) attach_table(file_cfg, t);
            apply_environment(file_cfg);
            return run(file_cfg, std::cout);
        }

        for (const auto& t : tables) attach_table(cfg, t);
        cfg.quad = {tol, max_evals, cutoff};
        cfg.format = *parse_format(format);
        cfg.mirror_a = mirror_a;
        cfg.mirror_b = mirror_b;
        cfg.model_ids = model_ids;
        cfg.thicknesses = lengths(d_values);
        cfg.transverse_k = numbers(k_values);
        if (area > 0) cfg.area = area;
        if (phase_ratio > 0) cfg.phase_ratio = phase_ratio;

        const FrequencyUnit fu = parse_frequency_unit(unit);
        for (const double w : numbers(omega_values)) cfg.omegas.push_back(to_rad_s(w, fu));
        if (omega_min > 0 && omega_max > 0)
            for (const double w : log_space(omega_min, omega_max, cfg.points_per_decade))
                cfg.omegas.push_back(to_rad_s(w, fu));

        cfg.separations = lengths(l_values);
        if (eta->parsed()) cfg.command = Command::Eta;
        else if (sweep_cmd->parsed()) {
            cfg.command = Command::Sweep;
            if (l_min > 0 && l_max > 0) {
                const auto range = log_space(l_min, l_max, cfg.points_per_decade);
                cfg.separations.insert(cfg.separations.end(), range.begin(), range.end());
            }
        } else if (epsilon->parsed()) cfg.command = Command::Epsilon;
        else if (reflect->parsed()) cfg.command = Command::Reflect;
        else if (asym->parsed()) cfg.command = Command::Asym;
        else if (figure->parsed()) cfg.command = Command::Figure;

        apply_environment(cfg);
        std::vector<ConfigError> errors;
        validate_config(cfg, errors);
        if (!errors.empty()) {
            for (const auto& e : errors) std::cerr << "error: " << format_error(e) << '\n';
            return 2;
        }
        return run(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
