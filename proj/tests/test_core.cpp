#include <gtest/gtest.h>

#include "vscif/core.hpp"
#include "vscif/json_io.hpp"

using namespace vscif;

namespace {

Instance thirteens(int d) { return Instance({13, 13, 13}, {{10, 10}}, d, CostModel::Linear); }

// three 13s cut 7|6, each piece alone in a 10-bin
Packing sevens_and_sixes() {
  Packing p;
  for (ItemId id = 1; id <= 3; ++id) {
    p.bins.push_back({0, {{id, 1, 7}}});
    p.bins.push_back({0, {{id, 2, 6}}});
  }
  return p;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Structural;
}

}  // namespace

TEST(Instance, SortsClassesByDecreasingCapacity) {
  Instance inst({5}, {{9, 9}, {16, 16}, {15, 15}}, 1, CostModel::Linear);
  ASSERT_EQ(inst.classes().size(), 3u);
  EXPECT_EQ(inst.classes()[0].capacity, 16);
  EXPECT_EQ(inst.classes()[2].capacity, 9);
  EXPECT_EQ(inst.max_capacity(), 16);
  EXPECT_EQ(inst.items()[0].id, 1);
}

TEST(Instance, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { Instance({5}, {}, 1, CostModel::Linear); }), ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { Instance({0}, {{10, 10}}, 1, CostModel::Linear); }), ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { Instance({5}, {{10, 10}, {10, 10}}, 1, CostModel::Linear); }),
            ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { Instance({5}, {{10, 10}}, -1, CostModel::Linear); }), ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { Instance({5}, {{10, 11}}, 1, CostModel::Linear); }), ErrorKind::Structural);
}

TEST(Instance, MonotoneCostModel) {
  EXPECT_NO_THROW(Instance({5}, {{10, 12}, {5, 7}}, 1, CostModel::Monotone));
  // smaller bin dearer in absolute terms
  EXPECT_EQ(kind_of([] { Instance({5}, {{10, 12}, {5, 13}}, 1, CostModel::Monotone); }),
            ErrorKind::Structural);
  // larger bin dearer per unit
  EXPECT_EQ(kind_of([] { Instance({5}, {{10, 30}, {5, 10}}, 1, CostModel::Monotone); }),
            ErrorKind::Structural);
}

TEST(Instance, FeasibilityNeedsPiecesToFitLargestBin) {
  EXPECT_NO_THROW(Instance({20}, {{10, 10}}, 1, CostModel::Linear));
  EXPECT_EQ(kind_of([] { Instance({21}, {{10, 10}}, 1, CostModel::Linear); }), ErrorKind::Infeasible);
  EXPECT_EQ(kind_of([] { Instance({11}, {{10, 10}}, 0, CostModel::Linear); }), ErrorKind::Infeasible);
}

TEST(TotalCost, Examples) {
  Instance one({16}, {{16, 16}}, 0, CostModel::Linear);
  EXPECT_EQ(total_cost(Packing{{{0, {{1, 1, 16}}}}}, one), 16);

  Instance fig({10, 10, 10, 10}, {{16, 16}, {15, 15}, {9, 9}}, 1, CostModel::Linear);
  Packing three{{{0, {}}, {1, {}}, {2, {}}}};
  EXPECT_EQ(total_cost(three, fig), 40);

  EXPECT_EQ(total_cost(sevens_and_sixes(), thirteens(1)), 60);
}

TEST(TotalCost, InvalidClassIndexThrows) {
  EXPECT_EQ(kind_of([] { total_cost(Packing{{{4, {}}}}, thirteens(1)); }), ErrorKind::Structural);
}

TEST(ItemMass, Examples) {
  EXPECT_EQ(item_mass(thirteens(1)), 39);
  EXPECT_EQ(item_mass(Instance({10, 10, 10, 10}, {{16, 16}}, 1, CostModel::Linear)), 40);
  EXPECT_EQ(item_mass(Instance({}, {{16, 16}}, 1, CostModel::Linear)), 0);
}

TEST(Verify, CutPackingIsValid) {
  const auto v = verify_packing(sevens_and_sixes(), thirteens(1));
  ASSERT_TRUE(v.valid()) << v.violation->detail;
  EXPECT_EQ(v.cost, 60);
}

TEST(Verify, CutLimitZeroRejectsCuts) {
  // same packing, but no cuts allowed; the instance itself must still be feasible
  Instance inst({13, 13, 13}, {{13, 13}, {10, 10}}, 0, CostModel::Linear);
  Packing p = sevens_and_sixes();
  for (auto& b : p.bins) b.class_index = 1;
  const auto v = verify_packing(p, inst);
  ASSERT_FALSE(v.valid());
  EXPECT_EQ(v.violation->kind, ViolationKind::CutLimitExceeded);
}

TEST(Verify, Violations) {
  const auto inst = thirteens(1);
  auto check = [&](Packing p, ViolationKind want) {
    const auto v = verify_packing(p, inst);
    ASSERT_FALSE(v.valid());
    EXPECT_EQ(v.violation->kind, want) << v.violation->detail;
  };
  Packing over = sevens_and_sixes();
  over.bins[0].contents[0].size = 11;
  over.bins[1].contents[0].size = 2;
  check(over, ViolationKind::CapacityOverflow);

  Packing short_mass = sevens_and_sixes();
  short_mass.bins[1].contents[0].size = 5;
  check(short_mass, ViolationKind::MassMismatch);

  Packing bad_class = sevens_and_sixes();
  bad_class.bins[2].class_index = 7;
  check(bad_class, ViolationKind::InvalidClass);

  Packing stranger = sevens_and_sixes();
  stranger.bins.push_back({0, {{9, 1, 1}}});
  check(stranger, ViolationKind::UnknownItem);

  Packing empty_bin = sevens_and_sixes();
  empty_bin.bins.push_back({0, {}});
  check(empty_bin, ViolationKind::EmptyBin);

  Packing three_pieces = sevens_and_sixes();
  three_pieces.bins[0].contents[0].size = 4;
  three_pieces.bins.push_back({0, {{1, 3, 3}}});
  check(three_pieces, ViolationKind::CutLimitExceeded);
}

TEST(Verify, ViolationNames) {
  EXPECT_EQ(to_string(ViolationKind::CapacityOverflow), "capacity-overflow");
  EXPECT_EQ(to_string(ViolationKind::CutLimitExceeded), "cut-limit-exceeded");
}

TEST(Arithmetic, Checked) {
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_EQ(ceil_div(8, 2), 4);
  EXPECT_EQ(kind_of([] { checked_mul(std::int64_t{1} << 62, 4); }), ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { checked_add(INT64_MAX, 1); }), ErrorKind::Structural);
}

TEST(Json, InstanceRoundTrip) {
  Instance inst({3, 14}, {{10, 12}, {4, 6}}, 2, CostModel::Monotone, 36);
  const auto text = instance_to_json(inst);
  EXPECT_EQ(text,
            "{\"items\":[3,14],\"classes\":[{\"capacity\":10,\"cost\":12},{\"capacity\":4,\"cost\":6}],"
            "\"cut_limit\":2,\"cost_model\":\"monotone\",\"known_optimum\":36}\n");
  const auto back = instance_from_json(text);
  EXPECT_EQ(instance_to_json(back), text);
  EXPECT_EQ(back.known_optimum(), 36);
}

TEST(Json, AcceptsCommentHeader) {
  const auto inst = instance_from_json(
      "// header line\n{\"items\":[1],\"classes\":[{\"capacity\":2,\"cost\":2}],\"cut_limit\":0,"
      "\"cost_model\":\"linear\",\"known_optimum\":null}");
  EXPECT_EQ(inst.item_count(), 1u);
  EXPECT_FALSE(inst.known_optimum());
}

TEST(Json, PackingRoundTrip) {
  const auto p = sevens_and_sixes();
  EXPECT_EQ(packing_from_json(packing_to_json(p)), p);
}

TEST(Json, Malformed) {
  EXPECT_EQ(kind_of([] { instance_from_json("{\"items\":[1,"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { instance_from_json("{\"items\":[\"x\"]}"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { packing_from_json("{\"bins\":[{\"class_index\":0,\"fragments\":"
                                           "[{\"parent\":1,\"piece\":0,\"size\":3}]}]}"); }),
            ErrorKind::Structural);
  EXPECT_EQ(kind_of([] { read_text_file("/nonexistent/file.json"); }), ErrorKind::Io);
}
