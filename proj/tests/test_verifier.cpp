#include <mbdom/verifier.hpp>

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace mbdom;

namespace {

std::optional<Violation> check(CheckName c, const Graph& g) { return run_check(c, g, classify(g)); }

std::set<std::string> ids(const std::vector<ClassificationRecord>& rs) {
  std::set<std::string> out;
  for (const auto& r : rs) out.insert(r.canonical_id);
  return out;
}

}  // namespace

TEST(CheckNames, ParseAndPrint) {
  for (CheckName c : kAllChecks) EXPECT_EQ(parse_check_name(to_string(c)), c);
  EXPECT_EQ(parse_check_list("all").size(), std::size(kAllChecks));
  EXPECT_EQ(parse_check_list("thm_bip,lemma_doky"),
            (std::vector<CheckName>{CheckName::thm_bip, CheckName::lemma_doky}));
  EXPECT_THROW(parse_check_list("thm_bip,nope"), Error);
  EXPECT_FALSE(parse_check_name("thm_cutvertex ").has_value());
}

TEST(Checks, NamedInstancesPass) {
  EXPECT_FALSE(check(CheckName::thm_NoK3, Graph::cycle(5)));
  EXPECT_FALSE(check(CheckName::thm_cutvertex, build_F(2, 1, 2).graph));
  EXPECT_FALSE(check(CheckName::thm_bip, Graph::cycle(4)));
  EXPECT_FALSE(check(CheckName::lemma_multipleuniversal, build_F(0, 2, 2).graph));
  EXPECT_FALSE(check(CheckName::lemma_doky, Graph::cycle(5)));
  EXPECT_FALSE(check(CheckName::prop_allbridge, build_F(2, 1, 2).graph));
  EXPECT_FALSE(check(CheckName::prop_familyF, build_F(0, 3, 3).graph));
  EXPECT_FALSE(check(CheckName::prop_familyFprime, build_Fprime(2, 2, 2).graph));
  EXPECT_FALSE(check(CheckName::observation_o1, Graph::complete_bipartite(2, 3)));
  EXPECT_FALSE(check(CheckName::one_critical_Hm, build_H(4).graph));
  EXPECT_FALSE(check(CheckName::lemma_NoLeaves, disjoint_union(build_H(2).graph, build_H(4).graph)));
}

// A record that contradicts the graph must be reported with its witness.
TEST(Checks, TamperedRecordIsCaught) {
  const Graph g = Graph::cycle(5);
  ClassificationRecord r = classify(g);
  r.family.C5 = false;
  const auto v = run_check(CheckName::thm_NoK3, g, r);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->check, "thm_NoK3");
  EXPECT_EQ(v->graph6, "Dhc");
  EXPECT_FALSE(v->detail.empty());

  ClassificationRecord h = classify(build_H(4).graph);
  h.family.H = false;
  EXPECT_TRUE(run_check(CheckName::one_critical_Hm, build_H(4).graph, h).has_value());
}

TEST(Census, OrderFive) {
  const CensusReport r = run_census(census_items(enumerate_connected(5)), parse_check_list("all"), "builtin:5");
  EXPECT_EQ(r.total, 21);
  EXPECT_TRUE(r.passed()) << r.violations_table();
  EXPECT_EQ(ids(r.critical_list),
            (std::set<std::string>{canonical_id(Graph::cycle(5)), canonical_id(Graph::complete_bipartite(2, 3))}));
  EXPECT_EQ(r.per_order.at(5).critical_2, 2);
}

TEST(Census, CutVertexCriticalsAtOrderSix) {
  const CensusReport r =
      run_census(census_items(enumerate_connected(6)), {CheckName::thm_cutvertex}, "builtin:6", {.jobs = 3});
  EXPECT_TRUE(r.passed()) << r.violations_table();
  std::vector<ClassificationRecord> cut;
  for (const auto& c : r.critical_list)
    if (c.has_cut_vertex) cut.push_back(c);
  ASSERT_EQ(cut.size(), 1U);
  EXPECT_EQ(cut[0].canonical_id, canonical_id(build_F(0, 2, 2).graph));
}

TEST(Census, MalformedLineBecomesViolation) {
  std::istringstream in("Dhc\nD]o\nD!!\nA_\n");
  const CensusReport r = run_census(census_items(read_graph6_stream(in)), parse_check_list("all"), "file");
  EXPECT_EQ(r.total, 3);
  ASSERT_EQ(r.violations.size(), 1U);
  EXPECT_EQ(r.violations[0].check, "decode");
  EXPECT_NE(r.violations[0].detail.find("line 3"), std::string::npos);
  EXPECT_FALSE(r.passed());
}

TEST(Census, ReportIndependentOfJobs) {
  const auto items = census_items(enumerate_connected(6));
  const auto checks = parse_check_list("all");
  const CensusReport one = run_census(items, checks, "builtin:6", {.jobs = 1});
  const CensusReport many = run_census(items, checks, "builtin:6", {.jobs = 5});
  EXPECT_EQ(one.to_json().dump(), many.to_json().dump());
  EXPECT_EQ(one.criticals_jsonl(), many.criticals_jsonl());
}

TEST(Census, SeedIsRecorded) {
  const CensusReport r = run_census(census_items(enumerate_connected(4)), {CheckName::continuation_principle},
                                    "builtin:4", {.jobs = 1, .seed = 42});
  EXPECT_EQ(r.to_json().at("seed"), 42);
  EXPECT_TRUE(r.passed());
}
