#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "cli/figures.hpp"
#include "cli/output.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace casimir;
using namespace casimir::cli;

namespace {

bool mentions(const std::vector<ConfigError>& errors, const std::string& field, int line = -1)
{
    for (const auto& e : errors)
        if (e.field == field && (line < 0 || e.line == line)) return true;
    return false;
}

std::string render(const RunConfig& cfg)
{
    std::ostringstream os;
    const auto table = execute(cfg);
    if (cfg.format == OutputFormat::Json) write_json(os, table);
    else write_csv(os, table);
    return os.str();
}

}  // namespace

TEST(Config, MinimalEta)
{
    const auto r = parse_config("command: eta\nmirror_a: au-drude\nmirror_b: si\nseparation: [1um]\n");
    ASSERT_TRUE(r) << (r.errors.empty() ? "" : format_error(r.errors[0]));
    EXPECT_EQ(r.config->command, Command::Eta);
    ASSERT_EQ(r.config->separations.size(), 1u);
    EXPECT_DOUBLE_EQ(r.config->separations[0], 1e-6);
    EXPECT_EQ(r.config->mirror_b, "si");
}

TEST(Config, MirrorBDefaultsToA)
{
    const auto r = parse_config("command: eta\nmirror_a: si@100nm\nseparation: [1e-6]\n");
    ASSERT_TRUE(r);
    const auto rows = execute(*r.config).rows;
    ASSERT_EQ(rows.size(), 1u);
}

TEST(Config, NegativeSeparationNamesTheField)
{
    const auto r = parse_config("command: eta\nmirror_a: si\nseparation: [1e-6, -2e-6]\n");
    EXPECT_FALSE(r);
    EXPECT_TRUE(mentions(r.errors, "separation"));
    EXPECT_NE(format_error(r.errors[0]).find("separation"), std::string::npos);
}

TEST(Config, ElectronVoltFrequencies)
{
    const auto r = parse_config("command: epsilon\nmodel: si\nomega: {values: [1.0, 2.0], unit: eV}\n");
    ASSERT_TRUE(r);
    EXPECT_DOUBLE_EQ(r.config->omegas[0], 1.519e15);
    const auto rs = parse_config("command: epsilon\nmodel: si\nomega: {values: [1e14], unit: rad_s}\n");
    ASSERT_TRUE(rs);
    EXPECT_DOUBLE_EQ(rs.config->omegas[0], 1e14);
    const auto bad = parse_config("command: epsilon\nmodel: si\nomega: {values: [1.0], unit: furlongs}\n");
    EXPECT_FALSE(bad);
}

TEST(Config, UnknownKeyReportsLine)
{
    const auto r = parse_config("command: eta\nmirror_a: si\nseparation: [1e-6]\nseperation: [2e-6]\n");
    EXPECT_FALSE(r);
    EXPECT_TRUE(mentions(r.errors, "seperation", 4));
}

TEST(Config, ReportsAllErrors)
{
    const auto r = parse_config("command: sweep\nmirror_a: nothing\nseparation: {min: 1e-7, max: -1}\n"
                                "quadrature: {rel_tol: 0.5}\nthreads: 0\nbogus: 1\n");
    EXPECT_FALSE(r);
    EXPECT_GE(r.errors.size(), 4u);
    EXPECT_TRUE(mentions(r.errors, "mirror_a"));
    EXPECT_TRUE(mentions(r.errors, "threads"));
    EXPECT_TRUE(mentions(r.errors, "bogus"));
    EXPECT_TRUE(mentions(r.errors, "quadrature"));
}

TEST(Config, InlineModelsAndLayeredMirror)
{
    const std::string text = R"(command: eta
models:
  gold:
    terms:
      - {kind: drude, wp: 9, gamma: 0.035, unit: eV}
mirror_a:
  layers:
    - {model: vo2-ins, thickness: 100nm}
  backing: al2o3
mirror_b: gold
separation: [1um]
)";
    const auto r = parse_config(text);
    ASSERT_TRUE(r) << format_error(r.errors.at(0));
    const auto direct = reduction_factor(
        CavityConfig{Mirror::film_on(vo2_insulating(), 100e-9, sapphire()), Mirror::bulk(gold_drude()), 1e-6, {}});
    const auto table = execute(*r.config);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_NEAR(std::get<double>(table.rows[0][1]), direct.eta, 1e-12);
}

TEST(Config, ThicknessPlaceholder)
{
    const auto r = parse_config("command: sweep\nmirror_a: au-drude@D\nseparation: [1e-4]\nthickness: [10nm, 50nm]\n");
    ASSERT_TRUE(r);
    const auto pairs = expand_mirrors(*r.config);
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[0].first, "au-drude@1e-08");
    const auto missing = parse_config("command: sweep\nmirror_a: au-drude@D\nseparation: [1e-4]\n");
    EXPECT_TRUE(mentions(missing.errors, "thickness"));
}

TEST(Config, TabulatedModel)
{
    const auto dir = std::filesystem::temp_directory_path() / "casimir_cli_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "lossy.txt");
        f << "#! columns = eps2\n#! unit = eV\n0.01 0.2\n0.1 1.5\n1 0.3\n10 0.01\n";
    }
    const auto r = parse_config("command: epsilon\nmodels:\n  lossy: {table: lossy.txt}\nmodel: lossy\nomega: [0.5]\n",
                                dir.string());
    ASSERT_TRUE(r) << format_error(r.errors.at(0));
    const auto table = execute(*r.config);
    EXPECT_GT(std::get<double>(table.rows[0][2]), 1.0);
    const auto missing = parse_config("command: epsilon\nmodels:\n  lossy: {table: nope.txt}\nmodel: lossy\nomega: [0.5]\n",
                                      dir.string());
    EXPECT_TRUE(mentions(missing.errors, "models.lossy.table"));
}

TEST(Config, EnvironmentOverrides)
{
    RunConfig cfg;
    setenv("CASIMIR_OUT", "/tmp/somewhere.csv", 1);
    setenv("CASIMIR_THREADS", "3", 1);
    apply_environment(cfg);
    EXPECT_EQ(cfg.output_path, "/tmp/somewhere.csv");
    EXPECT_EQ(cfg.threads, 3u);
    unsetenv("CASIMIR_OUT");
    unsetenv("CASIMIR_THREADS");
}

TEST(Config, LogSpaceIncludesEnds)
{
    const auto v = log_space(1e-7, 1e-5, 50);
    ASSERT_EQ(v.size(), 101u);
    EXPECT_DOUBLE_EQ(v.front(), 1e-7);
    EXPECT_NEAR(v.back(), 1e-5, 1e-19);
    EXPECT_NEAR(v[50], 1e-6, 1e-18);
}

TEST(Output, NineSignificantDigits)
{
    EXPECT_EQ(format_double(0.30448123456), "0.304481235");
    EXPECT_EQ(format_double(std::nan("")), "nan");
    Table t{{"note"}, {"a", "b"}, {{1.5, std::string("x")}}};
    std::ostringstream csv;
    write_csv(csv, t);
    EXPECT_EQ(csv.str(), "# note\na,b\n1.5,x\n");
    std::ostringstream json;
    write_json(json, t);
    const auto parsed = nlohmann::json::parse(json.str());
    EXPECT_EQ(parsed["columns"][1], "b");
}

TEST(Determinism, ByteIdenticalAcrossThreadCounts)
{
    auto r = parse_config("command: sweep\nmirror_a: vo2-met@100nm/al2o3\nmirror_b: au-drude\n"
                          "separation: {min: 1e-7, max: 1e-5, points_per_decade: 4}\n");
    ASSERT_TRUE(r);
    auto cfg = *r.config;
    cfg.threads = 1;
    const auto one = render(cfg);
    cfg.threads = 4;
    EXPECT_EQ(render(cfg), one);
    EXPECT_EQ(render(cfg), one);
}

TEST(Commands, EtaColumnsAndForce)
{
    auto r = parse_config("command: eta\nmirror_a: au-drude\nseparation: [1e-6]\narea: 1e-4\n");
    ASSERT_TRUE(r);
    const auto t = execute(*r.config);
    const std::vector<std::string> expected{"L_m",  "eta",      "eta_TE",   "eta_TM", "est_error", "evals",
                                            "force_N", "mirror_a", "mirror_b", "status"};
    EXPECT_EQ(t.columns, expected);
    const double eta = std::get<double>(t.rows[0][1]);
    EXPECT_NEAR(std::get<double>(t.rows[0][6]), absolute_force(eta, 1e-6, 1e-4), 1e-20);
    EXPECT_EQ(std::get<std::string>(t.rows[0][9]), "ok");
}

TEST(Commands, ReflectAndAsym)
{
    auto r = parse_config("command: reflect\nmirror_a: si\nomega: {values: [1e-6], unit: eV}\nk: [0]\n");
    ASSERT_TRUE(r) << format_error(r.errors.at(0));
    const auto t = execute(*r.config);
    EXPECT_NEAR(std::get<double>(t.rows[0].back()), -0.550085, 1e-5);

    auto a = parse_config("command: asym\nmodel: si-doped:N=1e20\nthickness: [100nm]\n");
    ASSERT_TRUE(a) << format_error(a.errors.at(0));
    const auto at = execute(*a.config);
    ASSERT_EQ(at.rows.size(), 1u);
}

TEST(Commands, JsonOutputParses)
{
    auto r = parse_config("command: epsilon\nmodel: [si, au-drude]\nomega: [0.1, 1.0]\noutput: {format: json}\n");
    ASSERT_TRUE(r);
    const auto doc = nlohmann::json::parse(render(*r.config));
    ASSERT_EQ(doc["rows"].size(), 2u);
    const std::string column = doc["columns"][2];
    EXPECT_NEAR(doc["rows"][1][column].get<double>(), silicon_intrinsic().epsilon(1.519e15), 1e-7);
}

TEST(Figures, NamesAndUnknown)
{
    for (const char* name : {"fig1", "fig2", "fig3", "fig4a", "fig4b", "fig5a", "fig5b", "fig8"})
        EXPECT_TRUE(is_known_figure(name)) << name;
    EXPECT_FALSE(is_known_figure("fig7z"));
    EXPECT_THROW(run_figure("fig7z"), Error);
    auto r = parse_config("command: figure\nfigure: fig99\n");
    EXPECT_TRUE(mentions(r.errors, "figure"));
}

TEST(Figures, CurveFamilies)
{
    QuadratureSpec q;
    q.rel_tol = 1e-4;
    const auto f3 = run_figure("fig3", q, 1, 2);
    EXPECT_EQ(f3.curves.size(), 5u);
    const auto f5 = run_figure("fig5a", q, 1, 2);
    EXPECT_EQ(f5.curves.size(), 3u);
    const auto f8 = run_figure("fig8", q, 1, 2);
    EXPECT_GE(f8.curves.size(), 2u);
    for (const auto& label : f8.curve_labels) EXPECT_NE(label.find("au"), std::string::npos) << label;
    const auto f1 = run_figure("fig1", q, 1, 50);
    EXPECT_GE(f1.x.size(), 6u * 50u);
    for (const auto& curve : f3.curves) EXPECT_EQ(curve.size(), f3.x.size());
}
