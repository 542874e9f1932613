#include "qm/config.hpp"

#include <charconv>
#include <fstream>

#include <json.hpp>

#include "qm/errors.hpp"
#include "qm/qcms.hpp"

namespace qm::cli {

namespace {

int parse_int(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("invalid " + what + " '" + text + "'");
  }
  return value;
}

std::pair<std::string, std::string> split_once(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return {text, ""};
  return {text.substr(0, colon), text.substr(colon + 1)};
}

}  // namespace

Instance parse_instance(const std::string& name) {
  if (name == "interval") return Instance::interval;
  if (name == "cantor") return Instance::cantor;
  if (name == "uhf") return Instance::uhf;
  throw InvalidArgument("unknown instance '" + name + "' (interval, cantor, uhf)");
}

const char* to_string(Instance instance) noexcept {
  switch (instance) {
    case Instance::interval: return "interval";
    case Instance::cantor: return "cantor";
    case Instance::uhf: return "uhf";
  }
  return "?";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw InvalidArgument("unknown format '" + name + "' (json, csv)");
}

BetaSpec parse_beta(const std::string& text) {
  BetaSpec spec;
  spec.text = text;
  auto [head, rest] = split_once(text);
  if (head == "geom") {
    spec.kind = BetaSpec::Kind::geometric;
    double r = 0.0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), r);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw InvalidArgument("invalid geometric ratio in '" + text + "'");
    }
    if (!(r > 0.0 && r < 1.0)) throw InvalidArgument("geometric ratio must lie in (0,1)");
    spec.ratio = r;
  } else if (head == "harmonic" && rest.empty()) {
    spec.kind = BetaSpec::Kind::harmonic;
  } else if (head == "from-element" && !rest.empty()) {
    spec.kind = BetaSpec::Kind::from_element;
    spec.element = rest;
  } else if (head == "from-element-squared" && !rest.empty()) {
    spec.kind = BetaSpec::Kind::from_element_squared;
    spec.element = rest;
  } else {
    throw InvalidArgument("unknown beta spec '" + text +
                          "' (geom:r, harmonic, from-element:E, from-element-squared:E)");
  }
  return spec;
}

void RunConfig::validate() const {
  int lo = 1, hi = 0;
  switch (instance) {
    case Instance::interval: lo = 2; hi = 24; break;
    case Instance::cantor: hi = 8; break;
    case Instance::uhf: hi = 6; break;
  }
  if (level < lo || level > hi) {
    throw InvalidArgument(std::string("--level for ") + to_string(instance) + " must lie in " +
                          std::to_string(lo) + ".." + std::to_string(hi));
  }
}

const AlgebraPtr& Workspace::algebra() const {
  return std::visit([](const auto& m) -> const AlgebraPtr& { return m.algebra; }, model);
}

Workspace make_workspace(const RunConfig& config) {
  config.validate();
  switch (config.instance) {
    case Instance::interval: return {config, IntervalModel(config.level)};
    case Instance::cantor: return {config, CantorModel(config.level)};
    case Instance::uhf: return {config, UhfModel(config.level)};
  }
  throw InvalidArgument("unknown instance");
}

Element load_interval_element(const IntervalModel& model, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open element file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
    auto values = doc.at("values").get<std::vector<double>>();
    double limit = doc.at("limit").get<double>();
    bool affine = doc.value("affine", false);
    return interval_element(model, values, limit, affine);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed element file '" + path + "': " + e.what());
  }
}

Element make_element(const Workspace& ws, const std::string& spec) {
  auto [head, rest] = split_once(spec);
  if (spec == "unit") return Element::unit(ws.algebra());
  if (const auto* iv = ws.interval()) {
    if (head == "p1") return p1(*iv, rest.empty() ? 30 : parse_int(rest, "p1 cutoff"));
    if (head == "phi" && !rest.empty()) return phi(*iv, parse_int(rest, "phi index"));
    if (head == "chi" && !rest.empty()) return chi(*iv, parse_int(rest, "chi index"));
    return load_interval_element(*iv, spec);
  }
  if (const auto* c = ws.cantor(); c && head == "rademacher" && !rest.empty()) {
    return rademacher(*c, parse_int(rest, "rademacher index"));
  }
  if (const auto* u = ws.uhf(); u && head == "pauli" && !rest.empty()) {
    return pauli_site(*u, parse_int(rest, "pauli site"));
  }
  throw InvalidArgument(std::string("unknown element '") + spec + "' for instance " +
                        to_string(ws.config.instance));
}

BetaSequence make_beta(const Workspace& ws) {
  const BetaSpec& spec = ws.config.beta;
  switch (spec.kind) {
    case BetaSpec::Kind::geometric: return BetaSequence::geometric(spec.ratio);
    case BetaSpec::Kind::harmonic: return BetaSequence::harmonic();
    case BetaSpec::Kind::from_element:
      return beta_from_element(*ws.algebra(), make_element(ws, spec.element),
                               ws.algebra()->levels());
    case BetaSpec::Kind::from_element_squared:
      return beta_squared_from_element(*ws.algebra(), make_element(ws, spec.element),
                                       ws.algebra()->levels());
  }
  throw InvalidArgument("unknown beta kind");
}

}  // namespace qm::cli
