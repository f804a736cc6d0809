#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "sublin/oracle.hpp"

namespace sublin {

nlohmann::json counter_to_json(const QueryCounter& c);

struct EstimateReport {
  std::string algo;
  nlohmann::json params = nlohmann::json::object();
  double estimate = 0;
  std::optional<double> ground_truth;
  std::optional<double> relative_error;  // present iff ground_truth is
  QueryCounter queries;
  std::uint64_t seed = 0;
  double wall_ms = 0;
  nlohmann::json flags = nlohmann::json::object();

  nlohmann::json to_json() const;

  void set_ground_truth(double truth) {
    ground_truth = truth;
    relative_error = truth != 0 ? std::abs(estimate - truth) / std::abs(truth)
                                : std::abs(estimate);
  }
};

}  // namespace sublin
