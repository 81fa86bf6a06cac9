#include <gtest/gtest.h>

#include "sqcolor/configurations.hpp"

using namespace sqcolor;
using namespace sqcolor::strategy;

namespace {

// Triangle with every vertex deleted and a script that ignores list overlap.
Configuration fake_triangle() {
  Configuration c;
  c.name = "K3-fake";
  c.full = complete_graph(3);
  c.names = {"a", "b", "c"};
  c.deleted = {0, 1, 2};
  c.caps = {3, 3, 3};
  c.published_vector = {2, 2, 2};
  c.strategy = StrategyScript{greedy({0, 1, 2})};
  return c;
}

ListAssignment lists_of(std::vector<std::vector<Color>> l) { return ListAssignment(std::move(l)); }

}  // namespace

TEST(Catalog, Shapes) {
  const auto& cat = catalog();
  ASSERT_EQ(cat.size(), 7U);
  std::vector<std::string> names;
  for (const auto& c : cat) names.push_back(c.name);
  EXPECT_EQ(names, (std::vector<std::string>{"TRI2V", "H", "W1", "W2", "Q1", "Q2", "Q3"}));
  EXPECT_EQ(find_configuration("H").full.size(), 8U);
  EXPECT_EQ(find_configuration("W2").full.size(), 8U);
  EXPECT_EQ(find_configuration("TRI2V").deleted, std::vector<Vertex>{2});
  EXPECT_EQ(find_configuration("TRI2V").deleted_names(), std::vector<std::string>{"w"});
  for (const auto& c : cat) {
    EXPECT_NO_THROW(validate_configuration(c));
    EXPECT_TRUE(c.strategy.has_value());
  }
  EXPECT_THROW(find_configuration("nope"), Error);
}

TEST(ResidualBounds, MatchPrintedVectors) {
  for (const auto& c : catalog()) EXPECT_EQ(derive_residual_bounds(c), c.published_vector) << c.name;
  EXPECT_EQ(derive_residual_bounds(find_configuration("H")), (SizeVector{5, 3, 2, 2, 3, 5, 4}));
  EXPECT_EQ(derive_residual_bounds(find_configuration("Q3")), (SizeVector{3, 3, 4, 3, 2, 3}));
  EXPECT_EQ(derive_residual_bounds(find_configuration("TRI2V")), (SizeVector{3}));
}

TEST(ResidualBounds, InvalidConfigurations) {
  Configuration c = fake_triangle();
  c.caps = {1, 3, 3};
  EXPECT_THROW(derive_residual_bounds(c), Error);
  Configuration lonely;
  lonely.name = "isolated";
  lonely.full = Graph(1, {});
  lonely.names = {"x"};
  lonely.deleted = {0};
  lonely.caps = {3};
  try {
    derive_residual_bounds(lonely);  // 7 - 3*3 < 0
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidConfiguration);
  }
}

TEST(VerifyReducible, SmallEntries) {
  for (const char* name : {"TRI2V", "Q1", "Q2", "Q3", "W1", "W2"}) {
    auto r = verify_reducible(find_configuration(name));
    EXPECT_TRUE(r.reducible()) << name;
    EXPECT_EQ(r.certificate.f, find_configuration(name).published_vector);
  }
  auto q1 = verify_reducible(find_configuration("Q1"));
  EXPECT_EQ(q1.certificate.greedy_order, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(verify_reducible(find_configuration("W1")).certificate.greedy_order, std::nullopt);
}

TEST(VerifyReducible, FakeTriangleIsNot) {
  auto r = verify_reducible(fake_triangle());
  ASSERT_FALSE(r.reducible());
  EXPECT_FALSE(solve_list_coloring(complete_graph(3), r.witness->lists));
}

TEST(RunStrategy, HCase1) {
  const auto& h = find_configuration("H");
  // v3 and v7 share colour 9.
  auto run = run_strategy(h, lists_of({{1, 2, 3, 4, 5}, {1, 2, 3}, {9, 1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4, 5},
                                       {9, 6, 7, 8}}));
  ASSERT_TRUE(run.succeeded()) << std::get<StrategyFailure>(run.outcome).reason;
  EXPECT_EQ(run.branches.front(), "H:case1");
  const auto& c = std::get<Coloring>(run.outcome);
  EXPECT_EQ(c.colors[2], 9);
  EXPECT_EQ(c.colors[6], 9);
}

TEST(RunStrategy, Q2PickPreserving) {
  const auto& q2 = find_configuration("Q2");
  auto lists = lists_of({{1, 2, 3}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3}});
  auto run = run_strategy(q2, lists);
  ASSERT_TRUE(run.succeeded());
  EXPECT_TRUE(check_proper(q2.conflict(), std::get<Coloring>(run.outcome), lists));
  EXPECT_EQ(std::get<Coloring>(run.outcome).colors[2], 4);
}

TEST(RunStrategy, Preconditions) {
  const auto& q2 = find_configuration("Q2");
  try {
    run_strategy(q2, lists_of({{1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3}, {1, 2, 3}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  Configuration bare = fake_triangle();
  bare.strategy.reset();
  try {
    run_strategy(bare, ListAssignment::uniform(3, 2));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ScriptMissing);
  }
  EXPECT_THROW(check_strategy(bare, {}), Error);
}

TEST(RunStrategy, FailureNamesStep) {
  auto run = run_strategy(fake_triangle(), ListAssignment::uniform(3, 2));
  ASSERT_FALSE(run.succeeded());
  EXPECT_EQ(std::get<StrategyFailure>(run.outcome).step, "Greedy(a,b,c)");
}

TEST(CheckStrategy, FakeTriangleFails) {
  auto report = check_strategy(fake_triangle(), {.trials = 500, .seed = 3, .adversarial = true});
  EXPECT_GT(report.failures, 0U);
  ASSERT_FALSE(report.examples.empty());
  EXPECT_EQ(report.examples.front().failure.step, "Greedy(a,b,c)");
  EXPECT_GT(report.family_trials["nested"], 0U);
}

TEST(CheckStrategy, SmallCatalogRandomAndAdversarial) {
  for (const char* name : {"TRI2V", "W1", "W2", "Q1", "Q2", "Q3"}) {
    auto report = check_strategy(find_configuration(name), {.trials = 3000, .seed = 1, .adversarial = true});
    EXPECT_EQ(report.failures, 0U) << name;
    EXPECT_EQ(report.unsound, 0U) << name;
    EXPECT_GT(report.family_trials["exhaustive"], 0U);
  }
}

TEST(CheckStrategy, W1SmallListBranch) {
  auto report = check_strategy(find_configuration("W1"), {.trials = 0, .seed = 1, .adversarial = true});
  EXPECT_EQ(report.failures, 0U);
  EXPECT_GT(report.branch_coverage["W1:|L(v6)|=3"], 0U);
  EXPECT_GT(report.branch_coverage["W1:|L(v6)|>=4"], 0U);
}

TEST(CheckStrategy, DeterministicForSeed) {
  const auto& q3 = find_configuration("Q3");
  auto a = check_strategy(q3, {.trials = 5000, .seed = 7, .adversarial = false});
  auto b = check_strategy(q3, {.trials = 5000, .seed = 7, .adversarial = false});
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_EQ(a.branch_coverage, b.branch_coverage);
}

TEST(CheckStrategy, HRandomCoversCase2Branches) {
  auto report = check_strategy(find_configuration("H"), {.trials = 20000, .seed = 1, .adversarial = false});
  EXPECT_EQ(report.failures, 0U);
  EXPECT_EQ(report.unsound, 0U);
  for (const char* label : {"H:case1", "H:case2.1", "H:case2.2"}) EXPECT_GT(report.branch_coverage[label], 0U) << label;
}
