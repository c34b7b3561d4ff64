#include <casimir/dielectric.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

using namespace casimir;

namespace {

constexpr double ev = 1.519e15;

std::vector<DielectricModel> catalog()
{
    const auto si = silicon_intrinsic();
    std::vector<DielectricModel> out{si, vo2_insulating(), vo2_metallic(), sapphire(), gold_drude(), gold_plasma(),
                                     silicon_laser_excited(si, false), silicon_laser_excited(si, true)};
    for (const auto& row : silicon_doping_table)
        out.push_back(silicon_doped(si, row.plasma_freq_ev * ev, row.damping_ev * ev));
    return out;
}

// Written out longhand, one term at a time.
double vo2_ins_by_hand(double w)
{
    const double s[7] = {0.79, 0.474, 0.483, 0.536, 1.316, 1.060, 0.99};
    const double w0[7] = {1.02, 1.30, 1.50, 2.75, 3.49, 3.76, 5.1};
    const double g[7] = {0.55, 0.55, 0.50, 0.22, 0.47, 0.38, 0.385};
    const double we = w / ev;
    double eps = 1.0 + 3.26 * 225.0 / (225.0 + we * we);
    for (int i = 0; i < 7; ++i) eps += s[i] * w0[i] * w0[i] / (w0[i] * w0[i] + we * we + g[i] * w0[i] * we);
    return eps;
}

double vo2_met_by_hand(double w)
{
    const double s[4] = {1.816, 0.972, 1.04, 1.05};
    const double w0[4] = {0.86, 2.8, 3.48, 4.6};
    const double g[4] = {0.95, 0.23, 0.28, 0.34};
    const double we = w / ev;
    double eps = 1.0 + 3.33 * 3.33 / (we * (we + 0.66)) + 2.95 * 225.0 / (225.0 + we * we);
    for (int i = 0; i < 4; ++i) eps += s[i] * w0[i] * w0[i] / (w0[i] * w0[i] + we * we + g[i] * w0[i] * we);
    return eps;
}

}  // namespace

TEST(Units, ElectronVoltRoundTrip)
{
    EXPECT_DOUBLE_EQ(ev_to_rad_s(1.0), 1.519e15);
    EXPECT_NEAR(rad_s_to_ev(ev_to_rad_s(0.06529)), 0.06529, 1e-15);
    EXPECT_EQ(parse_frequency_unit("eV"), FrequencyUnit::ElectronVolt);
    EXPECT_THROW(parse_frequency_unit("THz"), Error);
}

TEST(Silicon, StaticAndAsymptoticValues)
{
    const auto si = silicon_intrinsic();
    EXPECT_NEAR(si.epsilon(0.0), 11.87, 1e-12);
    EXPECT_NEAR(si.epsilon(6.6e15), 6.4525, 1e-12);
    EXPECT_NEAR(si.epsilon(1e22), 1.035, 1e-6);
    EXPECT_NEAR(si.epsilon(1.02 * ev), 11.3040744, 1e-6);
}

TEST(Silicon, DopedAddsDrudeTerm)
{
    const auto si = silicon_intrinsic();
    const double wp = 0.636 * ev, g = 0.06529 * ev;
    const auto doped = silicon_doped(si, wp, g);
    EXPECT_NEAR(doped.epsilon(wp) - si.epsilon(wp), 0.636 / (0.636 + 0.06529), 1e-12);
    EXPECT_NEAR(doped.epsilon(wp) - si.epsilon(wp), 0.9069, 1e-4);
    EXPECT_NEAR(doped.epsilon(1e22), si.epsilon(1e22), 1e-9);
    EXPECT_TRUE(doped.has_drude());
    EXPECT_FALSE(si.has_drude());
}

TEST(Silicon, DopingTableRowOne)
{
    const auto& row = silicon_doping_table[0];
    EXPECT_DOUBLE_EQ(row.plasma_freq_ev, 0.0021);
    EXPECT_DOUBLE_EQ(row.damping_ev, 0.0078);
    const auto si = silicon_intrinsic();
    const auto doped = silicon_doped(si, row.plasma_freq_ev * ev, row.damping_ev * ev);
    const double w = 0.01 * ev;
    EXPECT_NEAR(doped.epsilon(w) - si.epsilon(w), 0.0021 * 0.0021 / (0.01 * 0.0178), 1e-12);
}

TEST(Silicon, LaserExcitedCarriers)
{
    const auto si = silicon_intrinsic();
    const double w = 1.0 * ev;
    const double drude = silicon_laser_excited(si, false).epsilon(w) - si.epsilon(w);
    const double plasma = silicon_laser_excited(si, true).epsilon(w) - si.epsilon(w);
    EXPECT_NEAR(drude, 0.368 * 0.368 / 1.00329 + 0.329 * 0.329 / 1.01185, 1e-12);
    EXPECT_NEAR(drude, 0.2420, 1e-4);
    EXPECT_NEAR(plasma, 0.2437, 1e-4);
    const double big = 1e4 * ev;
    EXPECT_NEAR(silicon_laser_excited(si, false).epsilon(big), silicon_laser_excited(si, true).epsilon(big), 1e-10);
}

TEST(CarrierToDrude, TableRows)
{
    const auto last = carrier_to_drude({1e20, 0.34, 1.2e-3});
    EXPECT_NEAR(rad_s_to_ev(last.plasma_freq), 0.636, 0.02 * 0.636);
    const auto third = carrier_to_drude({1.4e19, 0.34, 6.8e-3});
    EXPECT_NEAR(rad_s_to_ev(third.damping), 0.0518, 0.02 * 0.0518);
}

TEST(CarrierToDrude, SquareRootScaling)
{
    const auto a = carrier_to_drude({1e18, 0.3, 1e-2});
    const auto b = carrier_to_drude({4e18, 0.3, 1e-2});
    EXPECT_NEAR(b.plasma_freq / a.plasma_freq, 2.0, 1e-14);
    EXPECT_THROW(carrier_to_drude({0.0, 0.3, 1e-2}), Error);
    EXPECT_THROW(carrier_to_drude({1e18, -1.0, 1e-2}), Error);
}

TEST(VO2, InsulatingMatchesTermwiseSum)
{
    const auto m = vo2_insulating();
    EXPECT_NEAR(m.epsilon(0.0), 9.909, 1e-12);
    EXPECT_NEAR(m.static_value(), 9.909, 1e-12);
    for (double we : {1e-3, 0.1, 1.02, 3.0, 10.0})
        EXPECT_NEAR(m.epsilon(we * ev), vo2_ins_by_hand(we * ev), 1e-12) << "w = " << we << " eV";
    EXPECT_NEAR(m.epsilon(1.02 * ev), 8.35733715, 1e-6);
    EXPECT_NEAR(m.epsilon(1e6 * 15 * ev), 1.0, 1e-6);
}

TEST(VO2, MetallicMatchesTermwiseSum)
{
    const auto m = vo2_metallic();
    for (double we : {1e-3, 0.1, 1.0, 3.33, 10.0})
        EXPECT_NEAR(m.epsilon(we * ev) / vo2_met_by_hand(we * ev), 1.0, 1e-13) << "w = " << we << " eV";
    EXPECT_TRUE(std::isfinite(m.epsilon(3.33 * ev)));
    // Drude divergence: w eps -> wp^2 / gamma.
    const double w = 1e-6 * ev;
    EXPECT_NEAR(w * m.epsilon(w) / (3.33 * 3.33 / 0.66 * ev), 1.0, 1e-5);
    EXPECT_THROW(m.static_value(), Error);
    EXPECT_THROW(m.epsilon(0.0), Error);
}

TEST(VO2, MetallicExceedsInsulatingAtLowFrequency)
{
    for (double we : {1e-4, 1e-3, 1e-2, 0.1})
        EXPECT_GT(vo2_metallic().epsilon(we * ev), vo2_insulating().epsilon(we * ev));
}

TEST(Sapphire, StaticAndPoleValues)
{
    const auto m = sapphire();
    EXPECT_NEAR(m.epsilon(0.0), 8.362056, 1e-9);
    const double f3 = 0.07, f1 = 20.19, f2 = 11.21;
    const double by_hand = 1.0 + 5.280792 / 2.0 + 1.023 / (1.0 + (f3 / f1) * (f3 / f1)) +
                           1.058264 / (1.0 + (f3 / f2) * (f3 / f2));
    EXPECT_NEAR(m.epsilon(f3 * ev), by_hand, 1e-12);
    EXPECT_NEAR(m.epsilon(f3 * ev), 5.722, 1e-3);
    EXPECT_NEAR(m.epsilon(1e8 * ev), 1.0, 1e-6);
}

TEST(Gold, DrudeAndPlasmaAtPlasmaFrequency)
{
    const double w = 9.0 * ev;
    EXPECT_NEAR(gold_drude().epsilon(w), 1.0 + 9.0 / 9.035, 1e-12);
    EXPECT_NEAR(gold_drude().epsilon(w), 1.9961, 1e-4);
    EXPECT_DOUBLE_EQ(gold_plasma().epsilon(w), 2.0);
}

TEST(Properties, MonotoneDecreasingInFrequency)
{
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> logw(std::log(1e9), std::log(1e18));
    for (const auto& m : catalog()) {
        for (int i = 0; i < 500; ++i) {
            double a = std::exp(logw(rng)), b = std::exp(logw(rng));
            if (a > b) std::swap(a, b);
            EXPECT_GE(m.epsilon(a), m.epsilon(b) * (1.0 - 1e-15)) << m.label() << " at " << a << ", " << b;
        }
    }
}

TEST(Properties, BoundsAndHighFrequencyLimit)
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> logw(std::log(1e6), std::log(1e20));
    for (const auto& m : catalog()) {
        for (int i = 0; i < 200; ++i) EXPECT_GE(m.epsilon(std::exp(logw(rng))), 1.0) << m.label();
        const bool silicon = m.label().rfind("si", 0) == 0;
        const double limit = silicon ? 1.035 : 1.0;
        EXPECT_NEAR(m.epsilon(1e6 * m.max_frequency()), limit, 1e-6) << m.label();
    }
}

TEST(Terms, RejectInvalidParameters)
{
    EXPECT_THROW(DielectricModel({drude(-1.0, 1.0)}, "bad"), Error);
    EXPECT_THROW(DielectricModel({drude(1.0, -1.0)}, "bad"), Error);
    EXPECT_THROW(DielectricModel({lorentz(0.0, 1.0, 1.0)}, "bad"), Error);
    EXPECT_THROW(DielectricModel({pole(1.0, 0.0)}, "bad"), Error);
    EXPECT_THROW(DielectricModel({constant_offset(-0.5)}, "bad"), Error);
    EXPECT_THROW(gold_drude().epsilon(-1.0), Error);
}

TEST(Terms, CompositionLeavesOriginalUntouched)
{
    const auto si = silicon_intrinsic();
    const auto doped = si.with_terms({drude(1e14, 1e13)}, "x");
    EXPECT_EQ(si.terms().size(), 2u);
    EXPECT_EQ(doped.terms().size(), 3u);
    EXPECT_EQ(doped.label(), "x");
}
