#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "vscif/exact.hpp"
#include "vscif/instgen.hpp"
#include "vscif/json_io.hpp"

using namespace vscif;

TEST(Rng, UniformStaysInRangeAndHitsEnds) {
  Rng rng(5);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.uniform(3, 9);
    ASSERT_GE(v, 3);
    ASSERT_LE(v, 9);
    lo = lo || v == 3;
    hi = hi || v == 9;
  }
  EXPECT_TRUE(lo && hi);
  EXPECT_EQ(rng.uniform(4, 4), 4);
}

TEST(Rng, Mt19937_64ReferenceOutput) {
  // the standard pins the 10000th output for the default seed
  Rng rng(5489u);
  std::uint64_t v = 0;
  for (int i = 0; i < 10000; ++i) v = rng.next();
  EXPECT_EQ(v, 9981545732273789042ull);
}

TEST(Rng, DerivedSeedsDiffer) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Classes, SingleClass) {
  GenConfig cfg;
  cfg.m = 1;
  Rng rng(1);
  EXPECT_EQ(gen_classes(cfg, rng), (std::vector<BinClass>{{100, 100}}));
}

TEST(Classes, LinearDistinctLedByBmax) {
  GenConfig cfg;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Rng rng(seed);
    const auto classes = gen_classes(cfg, rng);
    ASSERT_EQ(classes.size(), 3u);
    EXPECT_EQ(classes[0], (BinClass{100, 100}));
    for (std::size_t i = 1; i < classes.size(); ++i) EXPECT_LT(classes[i].capacity, classes[i - 1].capacity);
    for (const auto& c : classes) EXPECT_EQ(c.cost, c.capacity);
  }
}

TEST(Classes, MonotoneDraws) {
  GenConfig cfg;
  cfg.m = 10;
  cfg.cost_model = CostModel::Monotone;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Rng rng(seed);
    const auto classes = gen_classes(cfg, rng);
    ASSERT_EQ(classes.size(), 10u);
    EXPECT_EQ(classes[0], (BinClass{100, 100}));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        EXPECT_LE(classes[j].cost, classes[i].cost);
        EXPECT_LE(classes[i].cost * classes[j].capacity, classes[j].cost * classes[i].capacity);
      }
    }
    EXPECT_NO_THROW(Instance({1}, classes, 1, CostModel::Monotone));
  }
}

TEST(KnownOptimum, OptimumIsMassOfFullLargestBins) {
  for (int d : {0, 1, 2, 8}) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.cut_limit = d;
      const auto inst = generate(cfg);
      ASSERT_TRUE(inst.known_optimum());
      EXPECT_EQ(*inst.known_optimum(), item_mass(inst));
      EXPECT_EQ(item_mass(inst) % 100, 0);
      for (const auto& it : inst.items()) EXPECT_LE(ceil_div(it.size, d + 1), 100);
    }
  }
}

TEST(KnownOptimum, DefaultScale) {
  // Fillers lift each FF bin to exactly 100, so the mass is the FF bin count
  // times 100: a little above the 10000 of the drawn items. Pieces are the
  // 200 draws plus at most one filler per bin, glued in pairs.
  double mass = 0;
  const int runs = 200;
  for (std::uint64_t seed = 1; seed <= runs; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    const auto inst = generate(cfg);
    const auto bins = item_mass(inst) / 100;
    mass += static_cast<double>(item_mass(inst));
    EXPECT_GE(2 * inst.item_count(), 200u);
    EXPECT_LE(2 * static_cast<Size>(inst.item_count()), 200 + bins + 1);
  }
  mass /= runs;
  EXPECT_GT(mass, 10000.0);
  EXPECT_LT(mass, 11000.0);
}

TEST(KnownOptimum, MonotoneCostStillHasLargestBinOptimum) {
  GenConfig cfg;
  cfg.cost_model = CostModel::Monotone;
  cfg.m = 10;
  const auto inst = generate(cfg);
  EXPECT_EQ(*inst.known_optimum(), item_mass(inst));
}

TEST(KnownOptimum, ZeroCutsKeepsPieces) {
  GenConfig cfg;
  cfg.cut_limit = 0;
  const auto inst = generate(cfg);
  for (const auto& it : inst.items()) EXPECT_LT(it.size, 100);
  EXPECT_EQ(*inst.known_optimum(), item_mass(inst));
}

TEST(KnownOptimum, TinyInstancesConfirmedByExactSearch) {
  GenConfig cfg;
  cfg.b_max = 8;
  cfg.item_high = 7;
  cfg.n_initial = 3;
  cfg.m = 3;
  ExactLimits limits;
  limits.max_size = 16;
  for (int d : {0, 1}) {
    cfg.cut_limit = d;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
      cfg.seed = seed;
      const auto inst = generate(cfg);
      if (inst.item_count() > 5) continue;
      const auto out = solve_exact(inst, limits);
      ASSERT_EQ(out.status, ExactStatus::Optimal);
      EXPECT_EQ(out.value, *inst.known_optimum()) << "seed " << seed;
    }
  }
}

TEST(Free, ComposedItemCount) {
  GenConfig cfg;
  cfg.mode = GenMode::Free;
  const auto inst = generate(cfg);
  EXPECT_EQ(inst.item_count(), 100u);
  EXPECT_FALSE(inst.known_optimum());
  cfg.cut_limit = 2;
  EXPECT_EQ(generate(cfg).item_count(), 67u);
}

TEST(Free, ExpectedMass) {
  double mass = 0;
  const int runs = 1000;
  for (std::uint64_t seed = 1; seed <= runs; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.mode = GenMode::Free;
    const auto inst = generate(cfg);
    mass += static_cast<double>(item_mass(inst));
    for (const auto& it : inst.items()) EXPECT_LE(it.size, 2 * 99);
  }
  mass /= runs;
  EXPECT_NEAR(mass, 10000.0, 200.0);
}

TEST(Generate, ByteReproducible) {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.m = 10;
  cfg.cost_model = CostModel::Monotone;
  EXPECT_EQ(instance_to_json(generate(cfg)), instance_to_json(generate(cfg)));
  GenConfig other = cfg;
  other.seed = 43;
  EXPECT_NE(instance_to_json(generate(cfg)), instance_to_json(generate(other)));
}

TEST(Generate, HeaderNamesGeneratorAndConfig) {
  GenConfig cfg;
  cfg.seed = 9;
  EXPECT_EQ(generator_header(cfg),
            "// vscif-instgen 1 rng=mt19937_64 seed=9 m=3 bmax=100 n=200 items=[1,99] d=1 "
            "cost=linear mode=optimum\n");
  // header plus JSON still parses
  EXPECT_NO_THROW(instance_from_json(generator_header(cfg) + instance_to_json(generate(cfg))));
}

TEST(Generate, ConfigValidation) {
  GenConfig cfg;
  cfg.item_high = 100;
  EXPECT_THROW(generate(cfg), Error);
  cfg = {};
  cfg.m = 0;
  EXPECT_THROW(generate(cfg), Error);
  cfg = {};
  cfg.b_max = 5;
  cfg.item_high = 4;
  cfg.m = 6;
  EXPECT_THROW(generate(cfg), Error);
}
