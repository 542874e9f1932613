#include "qm/commands.hpp"

#include <cmath>
#include <sstream>

#include "qm/errors.hpp"
#include "qm/mk.hpp"
#include "qm/qcms.hpp"

namespace qm::cli {

namespace {

nlohmann::ordered_json header(const Workspace& ws, const char* command) {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["instance"] = to_string(ws.config.instance);
  j["level"] = ws.config.level;
  j["beta"] = ws.config.beta.text;
  j["seed"] = ws.config.seed;
  return j;
}

}  // namespace

Artifact cmd_distances(const Workspace& ws) {
  const AlgebraPtr& alg = ws.algebra();
  if (!alg->is_commutative()) {
    throw MatrixKindUnsupported("distances are only computed on commutative instances");
  }
  const BetaSequence beta = make_beta(ws);
  const int d = alg->dimension();

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);

  std::vector<double> lp_values(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    lp_values[p] = mk_distance(*alg, beta, pure_state(alg, i), pure_state(alg, j)).value;
  });

  const bool has_closed = beta.monotone();
  std::vector<std::vector<double>> lp(static_cast<std::size_t>(d), std::vector<double>(static_cast<std::size_t>(d), 0.0));
  auto closed = lp;
  double discrepancy = 0.0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    auto [i, j] = pairs[p];
    auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    lp[ui][uj] = lp[uj][ui] = lp_values[p];
    if (has_closed) {
      double c = ws.interval() ? closed_form_mk_points(*ws.interval(), beta, i, j)
                               : cantor_closed_form(*ws.cantor(), beta, i, j);
      closed[ui][uj] = closed[uj][ui] = c;
      discrepancy = std::max(discrepancy, std::abs(c - lp_values[p]));
    }
  }

  Artifact a;
  a.json = header(ws, "distances");
  a.json["labels"] = alg->labels();
  a.json["lp"] = lp;
  if (has_closed) {
    a.json["closed_form"] = closed;
    a.json["max_abs_discrepancy"] = discrepancy;
  } else {
    a.json["closed_form"] = nullptr;
    a.json["max_abs_discrepancy"] = nullptr;
  }

  std::ostringstream csv;
  csv << "row,col,row_label,col_label,lp,closed_form,abs_diff\n";
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      csv << i << ',' << j << ',' << alg->labels()[ui] << ',' << alg->labels()[uj] << ','
          << format_number(lp[ui][uj]) << ',';
      if (has_closed) {
        csv << format_number(closed[ui][uj]) << ','
            << format_number(std::abs(closed[ui][uj] - lp[ui][uj]));
      } else {
        csv << ',';
      }
      csv << '\n';
    }
  }
  a.csv = csv.str();
  return a;
}

Artifact cmd_domain(const Workspace& ws, const std::string& element) {
  const Element a = make_element(ws, element);
  const int levels = ws.algebra()->levels();
  const DomainSeparation rep = domain_separation_report(*ws.algebra(), a, levels);

  bool strictly_increasing = true;
  for (std::size_t i = 1; i < rep.with_beta_sq.size(); ++i) {
    if (!(rep.with_beta_sq[i] > rep.with_beta_sq[i - 1])) strictly_increasing = false;
  }
  double dev_from_one = 0.0;
  for (double x : rep.with_beta_a) dev_from_one = std::max(dev_from_one, std::abs(x - 1.0));

  Artifact out;
  out.json = header(ws, "domain");
  out.json["element"] = element;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "n,beta_a,beta_a_squared,L_beta_a,L_beta_a_squared\n";
  for (std::size_t i = 0; i < rep.beta_a.size(); ++i) {
    nlohmann::ordered_json row;
    row["n"] = i + 1;
    row["beta_a"] = rep.beta_a[i];
    row["beta_a_squared"] = rep.beta_sq[i];
    row["L_beta_a"] = rep.with_beta_a[i];
    row["L_beta_a_squared"] = rep.with_beta_sq[i];
    rows.push_back(row);
    csv << i + 1 << ',' << format_number(rep.beta_a[i]) << ',' << format_number(rep.beta_sq[i])
        << ',' << format_number(rep.with_beta_a[i]) << ',' << format_number(rep.with_beta_sq[i])
        << '\n';
  }
  out.json["levels"] = rows;
  nlohmann::ordered_json summary;
  summary["L_beta_a_max_deviation_from_1"] = dev_from_one;
  summary["L_beta_a_squared_last"] = rep.last_value;
  summary["L_beta_a_squared_growth_ratio"] = rep.growth_ratio;
  summary["L_beta_a_squared_strictly_increasing"] = strictly_increasing;
  out.json["summary"] = summary;
  out.csv = csv.str();
  return out;
}

Artifact cmd_seminorm(const Workspace& ws, const std::string& element) {
  const Element a = make_element(ws, element);
  const BetaSequence beta = make_beta(ws);
  const SeminormReport rep = lip_seminorm(*ws.algebra(), beta, a);

  Artifact out;
  out.json = header(ws, "seminorm");
  out.json["element"] = element;
  out.json["value"] = rep.value;
  out.json["exact"] = rep.exact;
  out.json["terms"] = rep.terms;
  out.json["running"] = rep.running;
  std::ostringstream csv;
  csv << "n,term,running\n";
  for (std::size_t i = 0; i < rep.terms.size(); ++i) {
    csv << i + 1 << ',' << format_number(rep.terms[i]) << ',' << format_number(rep.running[i])
        << '\n';
  }
  out.csv = csv.str();
  return out;
}

}  // namespace qm::cli
