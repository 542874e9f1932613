#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "qm/algebra.hpp"
#include "qm/instances.hpp"

namespace qm::cli {

enum class Instance { interval, cantor, uhf };
enum class Format { json, csv };

Instance parse_instance(const std::string& name);
const char* to_string(Instance instance) noexcept;
Format parse_format(const std::string& name);

/// geom:r | harmonic | from-element:<element> | from-element-squared:<element>
struct BetaSpec {
  enum class Kind { geometric, harmonic, from_element, from_element_squared } kind = Kind::geometric;
  double ratio = 0.5;
  std::string element;
  std::string text;
};

BetaSpec parse_beta(const std::string& text);

struct RunConfig {
  Instance instance = Instance::interval;
  int level = 10;
  BetaSpec beta;
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::string out;  // empty: stdout

  /// Level bounds: interval 2..24, cantor 1..8, uhf 1..6. Throws InvalidArgument.
  void validate() const;
};

/// The model selected by a RunConfig.
struct Workspace {
  RunConfig config;
  std::variant<IntervalModel, CantorModel, UhfModel> model;

  const AlgebraPtr& algebra() const;
  const IntervalModel* interval() const { return std::get_if<IntervalModel>(&model); }
  const CantorModel* cantor() const { return std::get_if<CantorModel>(&model); }
  const UhfModel* uhf() const { return std::get_if<UhfModel>(&model); }
};

Workspace make_workspace(const RunConfig& config);

/// Element by name: unit, p1[:cutoff], phi:n, chi:n (interval), rademacher:k
/// (cantor), pauli:k (uhf), or a path to an interval element JSON file
/// {"values": [...], "limit": l, "affine": bool}.
Element make_element(const Workspace& ws, const std::string& spec);

/// Element from the JSON file format.
Element load_interval_element(const IntervalModel& model, const std::string& path);

/// The β sequence of the config, defined at least on levels 1..N.
BetaSequence make_beta(const Workspace& ws);

}  // namespace qm::cli
