#pragma once

#include <optional>
#include <string>
#include <vector>

#include "breadthlab/json_io.hpp"

namespace breadthlab {

struct CampaignOptions {
  std::optional<Field> field;
  /// Maximum number of checked instances; 0 means unlimited.
  std::uint64_t budget = 0;
  std::uint64_t seed = 20240601;
  unsigned jobs = 1;
  /// Matrix size for camina-bound.
  std::size_t n = 4;
  /// Random quotients per generator count in t01/t02.
  std::uint64_t samples = 200;
  /// Random triples per m in the correspondence campaign.
  std::uint64_t triples = 100000;
};

struct CampaignCounts {
  std::uint64_t scanned = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;
};

struct CampaignReport {
  std::string command;
  json parameters = json::object();
  Field field;
  CampaignCounts counts;
  json witnesses = json::array();
  std::optional<std::uint64_t> seed;
  double wall_time_s = 0;
  json details = json::object();
  bool budget_exceeded = false;

  bool passed() const { return counts.failed == 0 && !budget_exceeded; }
  /// 0 pass, 1 counterexample, 3 budget exhausted.
  int exit_code() const;
};

std::vector<std::string> campaign_ids();

/// Throws UnknownTheorem or UnsupportedField; a budget overrun is reported in
/// the returned report rather than thrown.
CampaignReport run_campaign(const std::string& id, const CampaignOptions& opts);

json report_to_json(const CampaignReport& r);

/// Worker count from BREADTHLAB_JOBS, else 1.
unsigned default_jobs();

}  // namespace breadthlab
