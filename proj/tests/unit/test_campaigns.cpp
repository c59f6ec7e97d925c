#include <gtest/gtest.h>

#include "breadthlab/campaigns.hpp"

using namespace breadthlab;

namespace {

json stable(const CampaignReport& r) {
  json j = report_to_json(r);
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST(Campaigns, Ids) {
  EXPECT_EQ(campaign_ids().size(), 7u);
  try {
    run_campaign("t99", {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownTheorem);
  }
}

TEST(Campaigns, T03OddLayerCounts) {
  CampaignOptions o;
  o.field = Field::gf(3);
  const CampaignReport r = run_campaign("t03-odd", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.counts.scanned, 364u + 11011u + 33880u);
  EXPECT_EQ(r.details["dim1"]["bracket_free"], 234);
  EXPECT_EQ(r.details["dim2"]["bracket_free"], 2106);
  EXPECT_EQ(r.details["dim3"]["bracket_free"], 0);
}

TEST(Campaigns, T03EvenGf2) {
  CampaignOptions o;
  o.field = Field::gf(2);
  const CampaignReport r = run_campaign("t03-even", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["dim1"]["bracket_free"], 28);
  EXPECT_EQ(r.details["dim2"]["bracket_free"], 56);
  EXPECT_EQ(r.details["dim2"]["canonical_ideal"]["basis"], json::parse("[[1,0,0,0,0,1],[0,1,0,0,1,1]]"));
}

TEST(Campaigns, WrongCharacteristic) {
  CampaignOptions o;
  o.field = Field::gf(2);
  EXPECT_THROW(run_campaign("t03-odd", o), Error);
  o.field = Field::gf(3);
  EXPECT_THROW(run_campaign("t03-even", o), Error);
}

TEST(Campaigns, DeterministicAndJobIndependent) {
  CampaignOptions o;
  o.field = Field::gf(3);
  o.samples = 20;
  const json a = stable(run_campaign("t01", o));
  const json b = stable(run_campaign("t01", o));
  o.jobs = 3;
  const json c = stable(run_campaign("t01", o));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  EXPECT_EQ(a["status"], "pass");
}

TEST(Campaigns, BudgetExhaustion) {
  CampaignOptions o;
  o.field = Field::gf(3);
  o.budget = 100;
  const CampaignReport r = run_campaign("t03-odd", o);
  EXPECT_TRUE(r.budget_exceeded);
  EXPECT_EQ(r.exit_code(), 3);
  EXPECT_FALSE(r.passed());
}

TEST(Campaigns, CaminaBound) {
  CampaignOptions o;
  o.field = Field::gf(3);
  o.n = 4;
  const CampaignReport r = run_campaign("camina-bound", o);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.details["k_sks"], 2);
}

TEST(Campaigns, Correspondence) {
  CampaignOptions o;
  o.triples = 500;
  const CampaignReport r = run_campaign("correspondence", o);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.counts.scanned, 0u);
}

TEST(Campaigns, RationalCamina) {
  const CampaignReport r = run_campaign("rational-camina", {});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.field, Field::rational());
}
