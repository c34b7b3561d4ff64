#include <casimir/catalog.hpp>

#include <gtest/gtest.h>

using namespace casimir;

namespace {
constexpr double ev = 1.519e15;
}

TEST(Catalog, EveryListedIdResolves)
{
    for (const auto& id : catalog_ids()) {
        const auto m = make_model(id);
        EXPECT_GE(m.epsilon(1e14), 1.0) << id;
    }
    EXPECT_THROW(make_model("unobtainium"), Error);
}

TEST(Catalog, DopedSiliconForms)
{
    const auto si = silicon_intrinsic();
    const double w = 0.05 * ev;
    const auto reference = silicon_doped(si, 0.636 * ev, 0.06529 * ev);
    EXPECT_DOUBLE_EQ(make_model("si-doped:N=1e20").epsilon(w), reference.epsilon(w));
    EXPECT_DOUBLE_EQ(make_model("si-doped:N=1.1e20").epsilon(w), reference.epsilon(w));
    EXPECT_DOUBLE_EQ(make_model("si-doped:wp=0.636,gamma=0.06529").epsilon(w), reference.epsilon(w));
    const auto from_rho = make_model("si-doped:N=1e20,rho=1.2e-3");
    EXPECT_NEAR(from_rho.epsilon(w) / reference.epsilon(w), 1.0, 0.05);
    const auto plasma_variant = make_model("si-doped-plasma:N=1e20");
    EXPECT_NEAR(plasma_variant.epsilon(w) - si.epsilon(w), 0.636 * 0.636 / (0.05 * 0.05), 1e-9);
}

TEST(Catalog, DopedSiliconErrors)
{
    EXPECT_THROW(make_model("si-doped"), Error);
    EXPECT_THROW(make_model("si-doped:N=3e16"), Error);  // no table row nearby
    EXPECT_THROW(make_model("si-doped:wp=0.1"), Error);
    EXPECT_THROW(make_model("si-doped:N=1e20,colour=3"), Error);
    EXPECT_THROW(make_model("si-doped:N=abc"), Error);
}

TEST(Catalog, GenericCarrierModels)
{
    const double w = 1.0 * ev;
    EXPECT_NEAR(make_model("drude:wp=9,gamma=0.035").epsilon(w), gold_drude().epsilon(w), 1e-12);
    EXPECT_NEAR(make_model("plasma:wp=9").epsilon(w), gold_plasma().epsilon(w), 1e-12);
    EXPECT_THROW(make_model("drude:wp=9"), Error);
}

TEST(Catalog, RegistryTakesPrecedence)
{
    ModelRegistry extra{{"si", gold_drude()}};
    EXPECT_EQ(make_model("si", extra).label(), "au-drude");
}

TEST(Lengths, Suffixes)
{
    EXPECT_DOUBLE_EQ(parse_length("100nm"), 100e-9);
    EXPECT_DOUBLE_EQ(parse_length("2.5um"), 2.5e-6);
    EXPECT_DOUBLE_EQ(parse_length("1mm"), 1e-3);
    EXPECT_DOUBLE_EQ(parse_length("1e-7m"), 1e-7);
    EXPECT_DOUBLE_EQ(parse_length("1e-7"), 1e-7);
    EXPECT_THROW(parse_length("ten nm"), Error);
    EXPECT_THROW(parse_length(""), Error);
}

TEST(MirrorSpec, Shapes)
{
    const auto bulk = parse_mirror("au-drude");
    EXPECT_TRUE(bulk.layers().empty());
    EXPECT_TRUE(bulk.backing().has_value());

    const auto slab = parse_mirror("si@100nm");
    ASSERT_EQ(slab.layers().size(), 1u);
    EXPECT_DOUBLE_EQ(slab.layers()[0].thickness, 100e-9);
    EXPECT_FALSE(slab.backing().has_value());

    const auto film = parse_mirror("vo2-ins@100nm/al2o3");
    EXPECT_EQ(film.describe(), "vo2-ins@1e-07/al2o3");

    const auto stack = parse_mirror("au-drude@10nm/si@1um/al2o3@5nm");
    EXPECT_EQ(stack.layers().size(), 3u);
    EXPECT_FALSE(stack.backing().has_value());
}

TEST(MirrorSpec, Errors)
{
    EXPECT_THROW(parse_mirror(""), Error);
    EXPECT_THROW(parse_mirror("al2o3/si@10nm"), Error);
    EXPECT_THROW(parse_mirror("si@-5nm"), Error);
    EXPECT_THROW(parse_mirror("si@0nm"), Error);
    EXPECT_THROW(parse_mirror("nothing@10nm"), Error);
}
