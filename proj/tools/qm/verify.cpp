#include "qm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <sstream>

#include "qm/errors.hpp"
#include "qm/mk.hpp"
#include "qm/qcms.hpp"

namespace qm::cli {

namespace {

using Rng = std::mt19937_64;

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void check(const std::string& name, double tolerance, double deviation) {
    report_.checks.push_back({suite_, name, tolerance, deviation, deviation <= tolerance, false});
  }
  // Boolean identities: deviation 0 when true, 1 when false.
  void exact(const std::string& name, bool ok) { check(name, 0.0, ok ? 0.0 : 1.0); }
  void skip(const std::string& why) { report_.checks.push_back({suite_, why, 0.0, 0.0, true, true}); }

 private:
  VerifyReport& report_;
  std::string suite_;
};

double gauss(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  return g(rng);
}

ComplexMatrix level_matrix(const FilteredAlgebra& alg, int level, Rng& rng) {
  const Eigen::Index dim = alg.dimension();
  const Eigen::Index lead = Eigen::Index{1} << (level - 1);
  const Eigen::Index trail = dim / lead;
  ComplexMatrix b(lead, lead);
  for (Eigen::Index i = 0; i < lead; ++i)
    for (Eigen::Index j = 0; j < lead; ++j) b(i, j) = {gauss(rng), gauss(rng)};
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < lead; ++i)
    for (Eigen::Index j = 0; j < lead; ++j)
      for (Eigen::Index t = 0; t < trail; ++t) out(i * trail + t, j * trail + t) = b(i, j);
  return out;
}

Element level_element(const AlgebraPtr& alg, int level, Rng& rng) {
  if (alg->is_commutative()) {
    DenseVector v(alg->dimension());
    for (const Block& block : alg->partition(level)) {
      const double x = gauss(rng);
      for (int i : block) v(i) = x;
    }
    return Element::from_values(alg, std::move(v));
  }
  ComplexMatrix m = level_matrix(*alg, level, rng);
  return Element::from_matrix(alg, 0.5 * (m + m.adjoint()));
}

void suite_ortho(const Workspace& ws, Recorder& r) {
  const auto* iv = ws.interval();
  if (!iv) return r.skip("interval only");
  double off = 0.0, diag = 0.0;
  for (int i = 0; i < iv->level; ++i) {
    for (int j = i; j < iv->level; ++j) {
      const double g = orthogonality_check(*iv, i, j);
      if (i != j) {
        off = std::max(off, std::abs(g));
      } else {
        diag = std::max(diag, std::abs(g - (i == 0 ? 1.0 : std::ldexp(1.0, 1 - i))));
      }
    }
  }
  r.check("max |tau(phi_i phi_j)|, i != j", 1e-12, off);
  r.check("max |tau(phi_n^2) - 2^(1-n)|", 1e-12, diag);
}

void suite_expansion(const Workspace& ws, Recorder& r) {
  const auto* iv = ws.interval();
  if (!iv) return r.skip("interval only");
  bool ok = true;
  for (int n = 0; n <= std::min(15, iv->level - 1); ++n) ok = ok && chi_expansion_check(*iv, n);
  r.exact("chi_n equals its phi expansion (exact dyadic)", ok);
}

void suite_products(const Workspace& ws, Recorder& r) {
  const auto* iv = ws.interval();
  if (!iv) return r.skip("interval only");
  bool ok = true;
  const int top = std::min(15, iv->level - 1);
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m) ok = ok && product_table_check(*iv, n, m);
  r.exact("phi_n phi_m product table (exact)", ok);
}

void suite_expectations(const Workspace& ws, Recorder& r) {
  const AlgebraPtr& alg = ws.algebra();
  Rng rng(ws.config.seed);
  double idem = 0.0, contract = 0.0, bimodule = 0.0, trace = 0.0, nesting = 0.0;
  for (int sample = 0; sample < 100; ++sample) {
    const Element a = level_element(alg, alg->levels(), rng);
    for (int n = 1; n <= alg->levels(); ++n) {
      const Element e = conditional_expectation(*alg, n, a);
      idem = std::max(idem, sup_norm(conditional_expectation(*alg, n, e) - e));
      contract = std::max(contract, sup_norm(e) - sup_norm(a));
      trace = std::max(trace, std::abs(e.trace() - a.trace()));
      for (int m = 1; m <= n; ++m) {
        nesting = std::max(nesting, sup_norm(conditional_expectation(*alg, m, e) -
                                             conditional_expectation(*alg, m, a)));
      }
      if (alg->is_commutative()) {
        const Element b = level_element(alg, n, rng);
        const Element b2 = level_element(alg, n, rng);
        bimodule = std::max(bimodule, sup_norm(conditional_expectation(*alg, n, b.product(a).product(b2)) -
                                               b.product(e).product(b2)));
      } else {
        const ComplexMatrix b = level_matrix(*alg, n, rng);
        const ComplexMatrix b2 = level_matrix(*alg, n, rng);
        const ComplexMatrix lhs = conditional_expectation(*alg, n, ComplexMatrix(b * a.matrix() * b2));
        bimodule = std::max(bimodule, spectral_norm(ComplexMatrix(lhs - b * e.matrix() * b2)));
      }
    }
  }
  r.check("idempotence E_n(E_n(a)) = E_n(a)", 1e-10, idem);
  r.check("contractivity ||E_n(a)|| - ||a||", 1e-10, std::max(contract, 0.0));
  r.check("bimodule E_n(b a b') = b E_n(a) b'", 1e-10, bimodule);
  r.check("trace preservation tau(E_n(a)) = tau(a)", 1e-12, trace);
  r.check("nesting E_m(E_n(a)) = E_m(a), m <= n", 1e-12, nesting);
}

void suite_seminorm(const Workspace& ws, Recorder& r) {
  const BetaSequence beta = make_beta(ws);
  if (!beta.monotone()) return r.skip("witness values need a non-increasing beta");
  double dev = 0.0;
  if (const auto* iv = ws.interval()) {
    for (int n = 1; n <= std::min(15, iv->level - 1); ++n) {
      dev = std::max(dev, std::abs(lip_seminorm(*iv->algebra, beta, phi(*iv, n)).value * beta(n) - 1.0));
    }
    r.check("L_beta(phi_n) * beta(n) = 1", 1e-12, dev);
  } else if (const auto* c = ws.cantor()) {
    for (int k = 1; k <= c->depth; ++k) {
      dev = std::max(dev, std::abs(lip_seminorm(*c->algebra, beta, rademacher(*c, k)).value * beta(k) - 1.0));
    }
    r.check("L_beta(r_k) * beta(k) = 1", 1e-12, dev);
  } else if (const auto* u = ws.uhf()) {
    for (int k = 1; k <= u->sites; ++k) {
      dev = std::max(dev, std::abs(lip_seminorm(*u->algebra, beta, pauli_site(*u, k)).value - 1.0 / beta(k)));
    }
    r.check("|L_beta(pauli_k) - 1/beta(k)|", 1e-8, dev);
  }
}

void suite_mk(const Workspace& ws, Recorder& r) {
  const AlgebraPtr& alg = ws.algebra();
  if (!alg->is_commutative()) return r.skip("no LP distances on the matrix instance");
  const BetaSequence beta = make_beta(ws);
  if (!beta.monotone()) return r.skip("closed form needs a non-increasing beta");
  const int d = alg->dimension();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  std::vector<double> dev(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t p) {
    auto [i, j] = pairs[p];
    const double lp = mk_distance(*alg, beta, pure_state(alg, i), pure_state(alg, j)).value;
    const double closed = ws.interval() ? closed_form_mk_points(*ws.interval(), beta, i, j)
                                        : cantor_closed_form(*ws.cantor(), beta, i, j);
    dev[p] = std::abs(lp - closed);
  });
  r.check("max |LP - closed form| over " + std::to_string(pairs.size()) + " pure pairs", 1e-8,
          dev.empty() ? 0.0 : *std::max_element(dev.begin(), dev.end()));
}

void suite_sandwich(const Workspace& ws, Recorder& r) {
  const AlgebraPtr& alg = ws.algebra();
  if (!alg->is_commutative()) return r.skip("no LP distances on the matrix instance");
  const BetaSequence beta = make_beta(ws);
  if (!beta.monotone()) return r.skip("witness values need a non-increasing beta");
  const int top = std::min(8, alg->levels() - 1);
  auto witness = [&](int n) {
    return ws.interval() ? phi(*ws.interval(), n) : rademacher(*ws.cantor(), n);
  };
  struct Job {
    int pair;
    int level;
  };
  std::vector<Job> jobs;
  for (int p = 0; p < 200; ++p)
    for (int n = 1; n <= top; ++n) jobs.push_back({p, n});
  std::vector<double> lower_viol(jobs.size()), upper_viol(jobs.size()), tight(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t idx) {
    const Job& job = jobs[idx];
    const auto seed = ws.config.seed * 1000003ULL + static_cast<std::uint64_t>(2 * job.pair);
    auto [mu, nu] = push_agreement(*alg, random_state(alg, seed), random_state(alg, seed + 1), job.level);
    const Element w = witness(job.level);
    const SandwichBounds b = sandwich_bounds(*alg, beta, mu, nu, w, job.level);
    const double value = mk_distance(*alg, beta, mu, nu).value;
    lower_viol[idx] = std::max(0.0, b.lower - value);
    upper_viol[idx] = std::max(0.0, value - b.upper);
    tight[idx] = std::abs(mu(w) + nu(w)) <= 1e-12 && std::abs(std::abs(mu(w)) - 1.0) <= 1e-12
                     ? std::abs(value - b.upper)
                     : 0.0;
  });
  auto worst = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
  r.check("lower bound beta(n)|mu(w)-nu(w)| <= LP", 1e-9, worst(lower_viol));
  r.check("LP <= 2 beta(n)", 1e-8, worst(upper_viol));
  r.check("LP = 2 beta(n) when mu(w) = -nu(w) = +-1", 1e-8, worst(tight));
}

void suite_domain(const Workspace& ws, Recorder& r) {
  const auto* iv = ws.interval();
  if (!iv) return r.skip("interval only");
  const int levels = std::min(iv->level, 20);
  const DomainSeparation rep = domain_separation_report(*iv->algebra, p1(*iv, 30), levels);
  double dev_one = 0.0, rel = 0.0;
  for (int n = 1; n <= levels; ++n) {
    dev_one = std::max(dev_one, std::abs(rep.with_beta_a[static_cast<std::size_t>(n - 1)] - 1.0));
    const double expect = 0.75 * std::ldexp(1.0, n);
    rel = std::max(rel, std::abs(rep.with_beta_sq[static_cast<std::size_t>(n - 1)] - expect) / expect);
  }
  r.check("L_{beta_p1}(p1) running terms equal 1", 1e-9, dev_one);
  r.check("L_{beta_p1^2}(p1) running = (3/4) 2^n (relative)", 1e-6, rel);
}

using SuiteFn = void (*)(const Workspace&, Recorder&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"ortho", suite_ortho},       {"expansion", suite_expansion},
      {"products", suite_products}, {"expectations", suite_expectations},
      {"seminorm", suite_seminorm}, {"mk", suite_mk},
      {"sandwich", suite_sandwich}, {"domain", suite_domain},
  };
  return suites;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

VerifyReport run_verify(const Workspace& ws, const std::string& suite) {
  VerifyReport report;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      Recorder rec(report, name);
      try {
        fn(ws, rec);
      } catch (const Error& e) {
        report.checks.push_back({name, std::string("error: ") + e.what(), 0.0, 1.0, false, false});
      }
      found = true;
    }
  }
  if (!found) throw InvalidArgument("unknown verify suite '" + suite + "'");
  return report;
}

Artifact to_artifact(const Workspace& ws, const VerifyReport& report) {
  Artifact a;
  a.json["command"] = "verify";
  a.json["instance"] = to_string(ws.config.instance);
  a.json["level"] = ws.config.level;
  a.json["beta"] = ws.config.beta.text;
  a.json["seed"] = ws.config.seed;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  std::ostringstream csv;
  csv << "suite,check,tolerance,deviation,status\n";
  for (const Check& c : report.checks) {
    const char* status = c.skipped ? "skipped" : (c.passed ? "pass" : "fail");
    nlohmann::ordered_json j;
    j["suite"] = c.suite;
    j["check"] = c.name;
    j["tolerance"] = c.tolerance;
    j["deviation"] = c.deviation;
    j["status"] = status;
    checks.push_back(j);
    csv << c.suite << ",\"" << c.name << "\"," << format_number(c.tolerance) << ','
        << format_number(c.deviation) << ',' << status << '\n';
  }
  a.json["checks"] = checks;
  a.json["passed"] = report.passed();
  a.csv = csv.str();
  a.exit_code = report.passed() ? 0 : 1;
  return a;
}

}  // namespace qm::cli
