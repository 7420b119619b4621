// Copyright 2026 The purify Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "purify/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "purify/analysis.hpp"
#include "purify/bell.hpp"
#include "purify/filter.hpp"
#include "purify/oracle.hpp"
#include "purify/protocol.hpp"
#include "purify/statevec.hpp"

namespace purify {
namespace {

constexpr double kProbTolerance = 1e-10;

// Raised inside a suite to stop at the first failure.
struct SuiteFailure {
  std::string what;
};

void expect_near(double observed, double expected, double tol, const std::string& what) {
  if (!(std::abs(observed - expected) <= tol)) {
    throw SuiteFailure{fmt::format("{}: observed {:.15g}, expected {:.15g} (tolerance {:g})",
                                   what, observed, expected, tol)};
  }
}

void expect_at_most(double observed, double bound, const std::string& what) {
  if (!(observed <= bound)) {
    throw SuiteFailure{
        fmt::format("{}: observed {:.15g}, expected <= {:g}", what, observed, bound)};
  }
}

std::vector<double> weight_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 25; ++k) grid.push_back(0.02 * k);
  return grid;
}

StateVector random_state(unsigned n, std::mt19937_64& gen) {
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> amps(std::size_t{1} << n);
  for (auto& a : amps) a = {gauss(gen), gauss(gen)};
  return StateVector::normalized(n, std::move(amps));
}

FilterPlan random_plan(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  FilterPlan plan;
  plan.attenuate_bit = gen() & 1U;
  plan.ratio = std::polar(std::sqrt(unit(gen)), 2.0 * M_PI * unit(gen));
  return plan;
}

std::string suite_unitarity(std::mt19937_64& gen) {
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto plan = random_plan(gen);
    const double err = build_filter(plan).unitarity_error();
    expect_at_most(err, kUnitaryTolerance,
                   fmt::format("plan {} (bit {}, r = {}{:+}i)", i, plan.attenuate_bit,
                               plan.ratio.real(), plan.ratio.imag()));
    worst = std::max(worst, err);
  }
  return fmt::format("1000 random filter plans, max |U^dag U - I| = {:.3e}", worst);
}

std::string suite_normalization(std::mt19937_64& gen) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto s = random_state(4, gen);
    const unsigned qi = 1 + gen() % 4;
    const unsigned qj = 1 + (qi + gen() % 3) % 4;
    const auto branches = bell_measure_exact(s, qi, qj);
    double sum = 0.0;
    for (const auto& br : branches) {
      sum += br.probability;
      if (br.post_state) worst = std::max(worst, std::abs(br.post_state->norm_squared() - 1.0));
    }
    expect_near(sum, 1.0, kNormTolerance, fmt::format("Bell probabilities of draw {}", i));

    const auto plan = random_plan(gen);
    const std::array<unsigned, 2> targets = {qi, qj};
    const auto moved = apply_local(s, build_filter(plan), targets);
    worst = std::max(worst, std::abs(moved.norm_squared() - 1.0));

    const auto prod = tensor(random_state(2, gen), random_state(3, gen));
    worst = std::max(worst, std::abs(prod.norm_squared() - 1.0));
  }
  expect_at_most(worst, kNormTolerance, "worst normalization error");
  return fmt::format("200 random draws, worst | |psi|^2 - 1 | = {:.3e}", worst);
}

std::string suite_closed_form_grid() {
  const auto grid = weight_grid();
  double worst = 0.0;
  for (double beta2 : grid) {
    for (double b2 : grid) {
      const auto report =
          run_exact(PairSpec::from_small_weight(beta2), PairSpec::from_small_weight(b2));
      const double alpha2 = 1.0 - beta2;
      const double a2 = 1.0 - b2;
      const auto where = [&](const char* what) {
        return fmt::format("{} at beta2={}, b2={}", what, beta2, b2);
      };
      const double total = report.totals.total_success_probability;
      expect_near(total, 2.0 * std::min(beta2, b2), kProbTolerance, where("total success"));
      worst = std::max(worst, std::abs(total - 2.0 * std::min(beta2, b2)));
      for (auto kind : {BellOutcome::PhiPlus, BellOutcome::PhiMinus}) {
        const auto& br = report.branch(kind);
        expect_near(br.branch_probability, (alpha2 * a2 + beta2 * b2) / 2.0, kProbTolerance,
                    where("Phi branch probability"));
        expect_near(br.joint_success_probability, beta2 * b2, kProbTolerance,
                    where("Phi joint success"));
      }
      for (auto kind : {BellOutcome::PsiPlus, BellOutcome::PsiMinus}) {
        const auto& br = report.branch(kind);
        expect_near(br.branch_probability, (alpha2 * b2 + a2 * beta2) / 2.0, kProbTolerance,
                    where("Psi branch probability"));
        expect_near(br.joint_success_probability, std::min(a2 * beta2, alpha2 * b2),
                    kProbTolerance, where("Psi joint success"));
      }
    }
  }
  return fmt::format("{} grid points, max |total - 2 min(beta2, b2)| = {:.3e}",
                     grid.size() * grid.size(), worst);
}

std::string suite_state_quality() {
  const auto grid = weight_grid();
  std::size_t successes = 0;
  std::size_t failures = 0;
  for (double beta2 : grid) {
    for (double b2 : grid) {
      const auto report =
          run_exact(PairSpec::from_small_weight(beta2), PairSpec::from_small_weight(b2));
      for (const auto& br : report.branches) {
        if (br.success_state) {
          ++successes;
          expect_near(bell_fidelity(*br.success_state), 1.0, kProbTolerance,
                      fmt::format("Bell fidelity of {} success at beta2={}, b2={}",
                                  to_string(br.outcome), beta2, b2));
        }
        if (br.failure_state && br.joint_failure_probability > kProbabilityCutoff) {
          ++failures;
          expect_at_most(concurrence(*br.failure_state), kProbTolerance,
                         fmt::format("concurrence of {} failure at beta2={}, b2={}",
                                     to_string(br.outcome), beta2, b2));
        }
      }
    }
  }
  return fmt::format("{} success states maximally entangled, {} failure states product",
                     successes, failures);
}

std::string suite_oracle(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> weight(0.0, 0.5);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p12 = PairSpec::from_small_weight(weight(gen), angle(gen));
    const auto p34 = PairSpec::from_small_weight(weight(gen), angle(gen));
    const auto report = run_exact(p12, p34);
    const auto ref = oracle::brute_force_tree(p12.large, p12.small, p34.large, p34.small);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& br = report.branches[k];
      const auto what = [&](const char* field) {
        return fmt::format("{} {} of draw {}", to_string(br.outcome), field, i);
      };
      expect_near(br.branch_probability, ref[k].branch_probability, kProbTolerance,
                  what("branch probability"));
      expect_near(br.joint_success_probability, ref[k].joint_success, kProbTolerance,
                  what("joint success"));
      expect_near(br.joint_failure_probability, ref[k].joint_failure, kProbTolerance,
                  what("joint failure"));
      worst = std::max({worst, std::abs(br.branch_probability - ref[k].branch_probability),
                        std::abs(br.joint_success_probability - ref[k].joint_success),
                        std::abs(br.joint_failure_probability - ref[k].joint_failure)});
    }
  }
  return fmt::format("200 random complex draws, max deviation from dense oracle = {:.3e}",
                     worst);
}

// Empty string on success, otherwise the first cell outside 4 standard errors.
std::string check_tally(const BranchReport& report, const SampleTally& tally) {
  const double n = static_cast<double>(tally.trials);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& br = report.branches[k];
    const std::array<double, 2> exact = {br.joint_success_probability,
                                         br.joint_failure_probability};
    for (std::size_t c = 0; c < 2; ++c) {
      const double p = exact[c];
      const double freq = static_cast<double>(tally.counts[k][c]) / n;
      const double bound = 4.0 * std::sqrt(p * (1.0 - p) / n);
      const bool ok = p < kProbabilityCutoff ? tally.counts[k][c] == 0
                                             : std::abs(freq - p) <= bound;
      if (!ok) {
        return fmt::format("{} {} frequency {:.6f} vs exact {:.6f} (4 s.e. = {:.6f}, seed {})",
                           to_string(br.outcome), c == 0 ? "success" : "failure", freq, p,
                           bound, tally.seed);
      }
    }
  }
  return {};
}

std::string suite_monte_carlo(const VerifyOptions& options) {
  if (options.trials == 0) throw SuiteFailure{"monte carlo suite needs trials >= 1"};
  const std::array<std::array<double, 2>, 4> points = {
      {{0.2, 0.2}, {0.2, 0.3}, {0.3, 0.2}, {0.05, 0.45}}};
  auto attempt = [&](std::uint64_t master) -> std::string {
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto report = run_exact(PairSpec::from_small_weight(points[i][0]),
                                    PairSpec::from_small_weight(points[i][1]));
      const auto seed = derive_seed(master, i);
      const auto tally = sample_report(report, options.trials, seed);
      if (tally.counts != sample_report(report, options.trials, seed).counts) {
        return fmt::format("tally not reproducible for seed {}", seed);
      }
      auto problem = check_tally(report, tally);
      if (!problem.empty()) {
        return fmt::format("beta2={}, b2={}: {}", points[i][0], points[i][1], problem);
      }
    }
    return {};
  };
  const auto first = attempt(options.seed);
  if (first.empty()) {
    return fmt::format("{} points x {} trials within 4 standard errors", points.size(),
                       options.trials);
  }
  const auto retry = attempt(derive_seed(options.seed, 0xFFFF));
  if (!retry.empty()) throw SuiteFailure{retry + " (after one fresh-seed retry)"};
  return fmt::format("{} points x {} trials within 4 standard errors after one retry ({})",
                     points.size(), options.trials, first);
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  std::mt19937_64 gen(options.seed);
  const std::vector<std::pair<std::string, std::function<std::string()>>> suites = {
      {"unitarity", [&] { return suite_unitarity(gen); }},
      {"normalization", [&] { return suite_normalization(gen); }},
      {"closed-form grid", [] { return suite_closed_form_grid(); }},
      {"state quality", [] { return suite_state_quality(); }},
      {"oracle equivalence", [&] { return suite_oracle(gen); }},
      {"monte carlo", [&] { return suite_monte_carlo(options); }},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, body] : suites) {
    SuiteResult r{name, false, {}};
    try {
      r.detail = body();
      r.passed = true;
    } catch (const SuiteFailure& f) {
      r.detail = f.what;
    } catch (const std::exception& e) {
      r.detail = fmt::format("exception: {}", e.what());
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace purify
