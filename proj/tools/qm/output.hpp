#pragma once

#include <functional>
#include <string>

#include <json.hpp>

#include "qm/config.hpp"

namespace qm::cli {

/// A command result in both encodings; numbers are shortest round-trip decimals in each.
struct Artifact {
  nlohmann::ordered_json json;
  std::string csv;
  int exit_code = 0;
};

/// Shortest decimal string that parses back to the same double.
std::string format_number(double x);

/// Writes the artifact in the configured format to the configured path (stdout if empty).
void write_artifact(const RunConfig& config, const Artifact& artifact);

/// Runs body(i) for i in [0, count) on up to hardware_concurrency threads.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qm::cli
