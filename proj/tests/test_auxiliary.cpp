#include <gtest/gtest.h>

#include <random>

#include "oracle/brute_force.hpp"
#include "tiny.hpp"
#include "vscif/auxiliary.hpp"
#include "vscif/exact.hpp"

using namespace vscif;

namespace {

std::vector<std::vector<Size>> loads_of(const Packing& p) {
  std::vector<std::vector<Size>> out;
  for (const auto& b : p.bins) {
    out.emplace_back();
    for (const auto& f : b.contents) out.back().push_back(f.size);
  }
  return out;
}

using Loads = std::vector<std::vector<Size>>;

}  // namespace

TEST(PackFf, Examples) {
  EXPECT_EQ(loads_of(pack_ff({{10, 6, 4, 10}, 10})), (Loads{{10}, {6, 4}, {10}}));
  EXPECT_TRUE(pack_ff({{}, 10}).bins.empty());
}

TEST(PackFfd, Examples) {
  const auto p = pack_ffd({{4, 10, 6, 10}, 10});
  EXPECT_EQ(loads_of(p), (Loads{{10}, {10}, {6, 4}}));
  // stable: first 10 is item 2
  EXPECT_EQ(p.bins[0].contents[0].parent, 2);
  EXPECT_EQ(pack_ffd({{7, 7, 7}, 10}).bins.size(), 3u);
}

TEST(PackFf, OversizeIsInfeasible) {
  EXPECT_THROW(pack_ff({{11}, 10}), Error);
}

TEST(PackFf, AgainstPartitionOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Size> sizes(static_cast<std::size_t>(tiny::draw(rng, 1, 6)));
    for (auto& s : sizes) s = tiny::draw(rng, 1, 12);
    const auto best = oracle::min_bins_uncut(sizes, 12);
    const auto ff = static_cast<oracle::Int>(pack_ff({sizes, 12}).bins.size());
    const auto ffd = static_cast<oracle::Int>(pack_ffd({sizes, 12}).bins.size());
    EXPECT_GE(ff, best);
    EXPECT_GE(ffd, best);
    // classic worst-case guarantees, far from tight at this size
    EXPECT_LE(10 * ff, 17 * best + 10);
    EXPECT_LE(9 * ffd, 11 * best + 6);
  }
}

TEST(PackFf, NoTwoBinsHalfEmpty) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Size> sizes(30);
    for (auto& s : sizes) s = tiny::draw(rng, 1, 100);
    for (const auto& p : {pack_ff({sizes, 100}), pack_ffd({sizes, 100})}) {
      int light = 0;
      for (const auto& b : p.bins) light += 2 * b.load() <= 100 ? 1 : 0;
      EXPECT_LE(light, 1);
    }
  }
}

TEST(SplitEven, LargerPiecesFirst) {
  EXPECT_EQ(split_even(13, 2), (std::vector<Size>{7, 6}));
  EXPECT_EQ(split_even(10, 3), (std::vector<Size>{4, 3, 3}));
  EXPECT_EQ(split_even(5, 1), (std::vector<Size>{5}));
  EXPECT_THROW(split_even(2, 3), Error);
}

TEST(PackNfc, Examples) {
  Instance sevens({7, 7, 7}, {{10, 10}, {4, 4}}, 1, CostModel::Linear);
  EXPECT_EQ(loads_of(pack_nfc(sevens)), (Loads{{7, 3}, {4, 6}, {1}}));

  Instance tens({10, 10}, {{10, 10}}, 1, CostModel::Linear);
  const auto p = pack_nfc(tens);
  EXPECT_EQ(loads_of(p), (Loads{{10}, {10}}));
  EXPECT_TRUE(verify_packing(p, tens).valid());
}

TEST(PackNfc, RejectsItemAboveLargestBin) {
  Instance inst({12}, {{10, 10}}, 1, CostModel::Linear);
  EXPECT_THROW(pack_nfc(inst), Error);
}

TEST(PackNfc, FullBinsAndOptimalCount) {
  std::mt19937_64 rng(13);
  tiny::Shape shape;
  shape.whole_items_fit = true;
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = tiny::make(rng, shape);
    const auto p = pack_nfc(inst);
    ASSERT_TRUE(verify_packing(p, inst).valid());
    for (std::size_t b = 0; b + 1 < p.bins.size(); ++b) EXPECT_EQ(p.bins[b].load(), inst.max_capacity());
    EXPECT_EQ(static_cast<Size>(p.bins.size()), ceil_div(item_mass(inst), inst.max_capacity()));
    const auto best = min_bins_exact(inst);
    ASSERT_EQ(best.status, ExactStatus::Optimal);
    EXPECT_EQ(static_cast<Cost>(p.bins.size()), best.value);
    if (inst.item_count() <= 3) {
      const auto oracle_bins =
          oracle::optimum(tiny::sizes_of(inst), tiny::classes_of(inst), inst.cut_limit(), true);
      EXPECT_EQ(static_cast<oracle::Int>(p.bins.size()), oracle_bins);
    }
  }
}

TEST(PackCff, CutsThirteensIntoSevensAndSixes) {
  Instance inst({13, 13, 13}, {{10, 10}, {4, 4}}, 1, CostModel::Linear);
  const auto p = pack_cff(inst);
  EXPECT_EQ(loads_of(p), (Loads{{7}, {6}, {7}, {6}, {7}, {6}}));
  const auto v = verify_packing(p, inst);
  ASSERT_TRUE(v.valid());
  EXPECT_EQ(v.cost, 60);
}

TEST(PackCff, NoCutWhenItemFits) {
  Instance inst({10}, {{10, 10}}, 3, CostModel::Linear);
  EXPECT_EQ(loads_of(pack_cff(inst)), (Loads{{10}}));
}

TEST(PackCff, WithinTwiceOptimalBinCount) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = tiny::make(rng, {});
    const auto p = pack_cff(inst);
    ASSERT_TRUE(verify_packing(p, inst).valid());
    for (const auto& b : p.bins)
      for (const auto& f : b.contents) EXPECT_LE(f.size, inst.max_capacity());
    const auto best = min_bins_exact(inst);
    ASSERT_EQ(best.status, ExactStatus::Optimal);
    EXPECT_LE(static_cast<Cost>(p.bins.size()), 2 * best.value);
  }
}
