// Copyright 2026 The fgu Authors
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

#include "fgu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fgu/kernels.hpp"
#include "fgu/rng.hpp"

namespace fgu {

namespace {

std::string block_name(Proposition prop, std::size_t d, std::size_t n, std::optional<double> s) {
  const char* family = prop == Proposition::mub ? "mub" : prop == Proposition::mum ? "mum" : "mbb";
  char buf[96];
  if (s) {
    std::snprintf(buf, sizeof buf, "%s.d=%zu.N=%zu.s=%.2f", family, d, n, *s);
  } else {
    std::snprintf(buf, sizeof buf, "%s.d=%zu.N=%zu", family, d, n);
  }
  return buf;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Saturating product that reports overflow as max().
std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r = saturating_mul(r, base);
  return r;
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

// Outcome strings over every N-subset of the pool, or a seeded sample.
std::vector<kernels::PickList> subset_cases(std::size_t pool_size, std::size_t d, std::size_t n,
                                            const SweepOptions& opt, bool& exhaustive) {
  const auto subsets = combinations(pool_size, n);
  const std::size_t per_subset = ipow(d, n);
  const std::size_t total = saturating_mul(subsets.size(), per_subset);
  exhaustive = total <= opt.max_exhaustive;
  std::vector<kernels::PickList> cases;
  if (exhaustive) {
    cases.reserve(total);
    for (const auto& subset : subsets) {
      for (std::size_t code = 0; code < per_subset; ++code) {
        kernels::PickList picks(n);
        std::size_t c = code;
        for (std::size_t t = 0; t < n; ++t) {
          picks[t] = {subset[t], c % d};
          c /= d;
        }
        cases.push_back(std::move(picks));
      }
    }
    return cases;
  }
  cases.reserve(opt.random_cases);
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    CounterRng rng(opt.seed + i);
    const auto& subset = subsets[rng.below(subsets.size())];
    kernels::PickList picks(n);
    for (std::size_t t = 0; t < n; ++t) picks[t] = {subset[t], rng.below(d)};
    cases.push_back(std::move(picks));
  }
  return cases;
}

std::vector<kernels::PickList> permutation_cases(std::size_t d, const SweepOptions& opt, bool& exhaustive) {
  exhaustive = factorial(d) <= opt.max_exhaustive;
  std::vector<kernels::PickList> cases;
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  auto to_picks = [d](const std::vector<std::size_t>& p) {
    kernels::PickList picks(d);
    for (std::size_t t = 0; t < d; ++t) picks[t] = {t, p[t]};
    return picks;
  };
  if (exhaustive) {
    do {
      cases.push_back(to_picks(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return cases;
  }
  for (std::size_t i = 0; i < opt.random_cases; ++i) {
    CounterRng rng(opt.seed + i);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t k = d - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
    cases.push_back(to_picks(perm));
  }
  return cases;
}

PropositionRow evaluate_block(std::span<const MeasurementSet> pool, const std::vector<kernels::PickList>& cases,
                              Normalization norm, const SweepOptions& opt) {
  const auto values = opt.parallel ? kernels::selection_values_parallel(pool, cases, norm)
                                   : kernels::selection_values_serial(pool, cases, norm);
  PropositionRow row;
  row.cases = cases.size();
  row.max_exact = *std::max_element(values.begin(), values.end());
  return row;
}

void record(PropositionSweep& sweep, PropositionRow row, const std::string& name) {
  row.worst_slack = row.closed_form - row.max_exact;
  sweep.report.add(name, std::max(0.0, -row.worst_slack), kSlackTol);
  if (sweep.rows.empty() || row.worst_slack < sweep.worst_slack) sweep.worst_slack = row.worst_slack;
  sweep.rows.push_back(row);
}

std::vector<MeasurementSet> measurements_of(const std::vector<OrthonormalBasis>& bases) {
  std::vector<MeasurementSet> out;
  for (const auto& b : bases) out.push_back(b.measurement());
  return out;
}

double monotone_violation(const std::vector<ScenarioRow>& rows, bool increasing) {
  double worst = 0.0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double step = rows[i].closed_form - rows[i - 1].closed_form;
    worst = std::max(worst, increasing ? -step : step);
  }
  return worst;
}

}  // namespace

double sampling_oracle(std::span<const MeasurementSet> sets, const OutcomeSelection& sel, std::uint64_t samples,
                       std::uint64_t seed, Normalization norm) {
  const auto problem = kernels::SamplingProblem::from_selection(sets, sel, norm);
  return kernels::sampled_max_parallel(problem, samples, seed).value;
}

OracleEstimate sampling_oracle_refined(std::span<const MeasurementSet> sets, const OutcomeSelection& sel,
                                       std::uint64_t samples, std::uint64_t seed, Normalization norm,
                                       int power_iterations) {
  const auto problem = kernels::SamplingProblem::from_selection(sets, sel, norm);
  const auto best = kernels::sampled_max_parallel(problem, samples, seed);
  OracleEstimate out;
  out.sampled = best.value;
  out.argmax_seed = seed + best.argmax;
  ComplexMatrix op(problem.dim);
  for (std::size_t t = 0; t < problem.elements.size(); ++t) {
    op += problem.elements[t] * Complex(problem.weights[t] / problem.normalizer);
  }
  out.refined = power_refine(op, haar_random_vector(problem.dim, out.argmax_seed), power_iterations);
  return out;
}

double power_refine(const ComplexMatrix& op, ComplexVector start, int iterations) {
  ComplexVector v = normalized(std::move(start));
  for (int k = 0; k < iterations; ++k) {
    auto next = op.apply(v);
    if (norm(next) == 0.0) break;
    v = normalized(std::move(next));
  }
  return op.expectation(v).real();
}

VerificationReport saturation_check(const BoundResult& result, std::optional<ComplexVector> expected_state) {
  if (result.maximizer_vector.empty()) throw std::invalid_argument("saturation_check: result has no maximizer");
  VerificationReport report;
  const double attained = result.op.expectation(normalized(result.maximizer_vector)).real();
  report.add("maximizer", std::abs(attained - result.value), kSaturationTol);
  if (expected_state) {
    const double printed = result.op.expectation(normalized(*expected_state)).real();
    report.add("expected_state", std::abs(printed - result.value), kSaturationTol);
  }
  return report;
}

TripletCensus enumerate_d3_triplets(std::array<std::size_t, 4> base_order) {
  auto sorted = base_order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<std::size_t, 4>{0, 1, 2, 3}) {
    throw std::invalid_argument("enumerate_d3_triplets: base_order must be a permutation of 0..3");
  }
  TripletCensus census;
  for (const auto& triple : combinations(4, 3)) {
    for (std::size_t code = 0; code < 27; ++code) {
      std::array<QuartetPick, 3> picks{};
      std::size_t c = code;
      for (std::size_t i = 0; i < 3; ++i) {
        picks[i] = {base_order[triple[i]], c % 3};
        c /= 3;
      }
      census.cases.push_back(classify_triplet_d3(picks));
    }
  }

  double det_r = 0.0, bound_r = 0.0, trace_r = 0.0, minor_r = 0.0;
  for (const auto& c : census.cases) {
    (c.cls == TripletClass::singular ? census.singular : census.regular) += 1;
    det_r = std::max(det_r, std::min(std::abs(c.determinant), std::abs(c.determinant - 1.0 / 3.0)));
    bound_r = std::max(bound_r, std::abs(c.bound - c.closed_form));
    trace_r = std::max(trace_r, std::abs(c.trace - 3.0));
    minor_r = std::max(minor_r, std::abs(c.minor_sum - 2.0));
  }
  const double count_r = std::abs(static_cast<double>(census.cases.size()) - 108.0);
  census.report.add("case_count", count_r, 0.0);
  census.report.add("determinant_in_{0,1/3}", det_r, 1e-9);
  census.report.add("bound_matches_class", bound_r, 1e-10);
  census.report.add("trace_3", trace_r, 1e-9);
  census.report.add("minor_sum_2", minor_r, 1e-9);
  census.report.add("both_classes_present", census.singular > 0 && census.regular > 0, 0.0, 0.0);
  return census;
}

PropositionSweep proposition_sweep(Proposition prop, std::span<const std::size_t> dims, const SweepOptions& opt) {
  PropositionSweep sweep;
  for (std::size_t d : dims) {
    if (prop == Proposition::mbb) {
      if (d < 2) throw std::invalid_argument("proposition_sweep: MBB dimension must be >= 2");
      const auto pool = measurements_of(mbb_family(d));
      bool exhaustive = true;
      const auto cases = permutation_cases(d, opt, exhaustive);
      auto row = evaluate_block(pool, cases, Normalization::per_element_norm, opt);
      row.d = d;
      row.n = d;
      row.exhaustive = exhaustive;
      row.closed_form = mbb_closed_bound(d);
      record(sweep, row, block_name(prop, d, d, std::nullopt));
      continue;
    }
    if (!is_prime(d)) {
      throw std::invalid_argument("proposition_sweep: dimension " + std::to_string(d) + " is not prime");
    }
    const auto bases = mub_family_prime(d);
    const std::vector<double> s_values = prop == Proposition::mub ? std::vector<double>{1.0} : opt.s_grid;
    for (double s : s_values) {
      const auto family = mum_from_mubs(bases, s);
      for (std::size_t n = 1; n <= d + 1; ++n) {
        bool exhaustive = true;
        const auto cases = subset_cases(family.sets.size(), d, n, opt, exhaustive);
        auto row = evaluate_block(family.sets, cases, Normalization::weight_sum, opt);
        row.d = d;
        row.n = n;
        row.s = s;
        row.kappa = family.kappa;
        row.exhaustive = exhaustive;
        row.closed_form = prop == Proposition::mub ? mub_closed_bound(d, n) : mum_closed_bound(d, n, family.kappa);
        record(sweep, row, block_name(prop, d, n, prop == Proposition::mum ? std::optional(s) : std::nullopt));
      }
    }
  }
  return sweep;
}

VerificationReport verify_discrimination(std::span<const double> etas) {
  VerificationReport report;
  for (Scenario s : {Scenario::inconclusive, Scenario::matched, Scenario::mismatched}) {
    const std::string name(scenario_name(s));
    const auto rows = scenario_sweep(s, etas);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.residual);
    report.add(name + ".closed_vs_exact", worst, 1e-10);
    report.add(name + ".monotone", monotone_violation(rows, s == Scenario::mismatched), 0.0);

    double printed_r = 0.0;
    for (double eta : etas) {
      const auto pair = DiscriminationPair::limit(eta);
      const auto h = helstrom_povm();
      const auto b = b92_povm(pair);
      for (int sign : {1, -1}) {
        const std::size_t hj = sign == 1 ? 0 : 1;
        std::size_t bj = 2;
        if (s == Scenario::matched) bj = hj;
        if (s == Scenario::mismatched) bj = 1 - hj;
        printed_r = std::max(printed_r, (printed_matrix(s, pair, sign) - h.elements[hj] - b.elements[bj]).max_abs());
      }
    }
    report.add(name + ".printed_matrix", printed_r, 1e-12);
  }

  const double inconclusive_limit = (2.0 + std::sqrt(2.0)) / 4.0;
  const double matched_limit = 0.5 + std::sqrt(5.0) / 6.0;
  report.add("inconclusive.eta0", std::abs(bound_inconclusive(0.0).value - 1.0), 1e-9);
  report.add("inconclusive.eta1", std::abs(bound_inconclusive(1.0).value - inconclusive_limit), 1e-9);
  report.add("matched.eta0", std::abs(bound_matched(0.0).value - 1.0), 1e-9);
  report.add("matched.eta1", std::abs(bound_matched(1.0).value - matched_limit), 1e-9);
  report.add("mismatched.eta0", std::abs(bound_mismatched(0.0).value - 0.5), 1e-9);
  report.add("mismatched.eta1", std::abs(bound_mismatched(1.0).value - matched_limit), 1e-9);
  report.add("matched_twice_mismatched.eta0",
             std::abs(bound_matched(0.0).value - 2.0 * bound_mismatched(0.0).value), 1e-12);

  double povm_r = 0.0, zero_error_r = 0.0, unknown_r = 0.0, conclusive_r = 0.0, norm_r = 0.0, helstrom_r = 0.0;
  const auto h = helstrom_povm();
  for (double eta : etas) {
    const auto pair = DiscriminationPair::limit(eta);
    const auto b = b92_povm(pair);
    povm_r = std::max(povm_r, validate_povm(b, 1e-12).max_residual());
    zero_error_r = std::max({zero_error_r, std::abs(b.elements[0].expectation(pair.minus())),
                             std::abs(b.elements[1].expectation(pair.plus()))});
    ComplexMatrix unknown(2);
    unknown(0, 0) = inconclusive_weight(eta);
    unknown_r = std::max(unknown_r, (b.elements[2] - unknown).max_abs());
    const double conclusive =
        0.5 * (b.elements[0].expectation(pair.plus()).real() + b.elements[1].expectation(pair.minus()).real());
    conclusive_r = std::max({conclusive_r, std::abs(conclusive - (1.0 - eta)),
                             std::abs(b92_conclusive_probability(pair) - (1.0 - eta))});
    norm_r = std::max({norm_r, std::abs(spectral_norm_psd(b.elements[0]) - 1.0 / (1.0 + eta)),
                       std::abs(spectral_norm_psd(b.elements[1]) - 1.0 / (1.0 + eta))});
    const double success =
        0.5 * (h.elements[0].expectation(pair.plus()).real() + h.elements[1].expectation(pair.minus()).real());
    helstrom_r = std::max({helstrom_r, std::abs(success - helstrom_success(eta)),
                           std::abs(success - 0.5 * (1.0 + std::sin(2.0 * pair.theta())))});
  }
  report.add("b92.valid_povm", povm_r, 1e-12);
  report.add("b92.zero_error", zero_error_r, 1e-12);
  report.add("b92.inconclusive_element", unknown_r, 1e-12);
  report.add("b92.conclusive_probability", conclusive_r, 1e-12);
  report.add("b92.element_norms", norm_r, 1e-12);
  report.add("helstrom.success_probability", helstrom_r, 1e-12);
  report.merge(validate_povm(h, 1e-12), "helstrom.");
  return report;
}

VerificationReport verify_triples(std::span<const double> etas) {
  VerificationReport report;
  double spectrum_r = 0.0, overlap_r = 0.0, charpoly_r = 0.0, bound_r = 0.0;
  for (double eta : etas) {
    const auto triple = triple_equal_overlap(eta);
    const std::array<double, 3> expected = {1.0 - eta, 1.0 - eta, 1.0 + 2.0 * eta};
    for (std::size_t k = 0; k < 3; ++k) {
      spectrum_r = std::max(spectrum_r, std::abs(triple.spectrum[k] - expected[k]));
      charpoly_r = std::max(charpoly_r, std::abs(triple_characteristic(eta, triple.spectrum[k])));
    }
    overlap_r = std::max(overlap_r, triple.overlap_residual);
    bound_r = std::max(bound_r, std::abs(triple.bound.value - (1.0 + 2.0 * eta) / 3.0));
    const auto sat = saturation_check(triple.bound, triple.saturating_state);
    report.merge(sat, "triple.eta=" + std::to_string(eta) + ".");
  }
  report.add("triple.spectrum", spectrum_r, 1e-10);
  report.add("triple.characteristic_roots", charpoly_r, 1e-10);
  report.add("triple.bound", bound_r, 1e-10);
  report.add("triple.equal_overlaps", overlap_r, 1e-10);

  // Three vectors from the 2nd, 3rd and 4th quartet bases whose projector
  // sum is [[1,0,1],[0,1,0],[1,0,1]].
  const auto quartet = mub_d3_quartet();
  const std::vector<MeasurementSet> sets = {quartet[1].measurement(), quartet[2].measurement(),
                                            quartet[3].measurement()};
  const auto result = exact_fg_bound(sets, OutcomeSelection{{0, 0, 2}, {}});
  const double r = 1.0 / std::sqrt(2.0);
  report.merge(saturation_check(result, ComplexVector{r, 0.0, r}), "d3_singular.");
  report.add("d3_singular.bound", std::abs(result.value - kTripletSingularBound), 1e-10);
  return report;
}

VerificationReport verify_oracle(std::span<const std::size_t> dims, std::size_t selections, std::uint64_t samples,
                                 std::uint64_t seed) {
  VerificationReport report;
  double above = 0.0, gap = 0.0, refined_above = 0.0, refined_drop = 0.0;
  for (std::size_t i = 0; i < selections; ++i) {
    const std::size_t d = dims[i % dims.size()];
    const auto pool = measurements_of(mub_family_prime(d));
    CounterRng rng(seed + i);
    const std::size_t n = 1 + rng.below(pool.size());
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = order.size() - 1; k > 0; --k) std::swap(order[k], order[rng.below(k + 1)]);
    std::vector<MeasurementSet> sets;
    OutcomeSelection sel;
    for (std::size_t t = 0; t < n; ++t) {
      sets.push_back(pool[order[t]]);
      sel.outcomes.push_back(rng.below(d));
    }
    const double exact = exact_fg_value(sets, sel);
    const auto est = sampling_oracle_refined(sets, sel, samples, seed + 7919 * (i + 1) * samples);
    above = std::max(above, est.sampled - exact);
    gap = std::max(gap, exact - est.sampled);
    refined_above = std::max(refined_above, est.refined - exact);
    refined_drop = std::max(refined_drop, est.sampled - est.refined);
  }
  report.add("oracle.sampled_not_above_exact", std::max(above, 0.0), 1e-10);
  report.add("oracle.sampled_gap", std::max(gap, 0.0), 0.05);
  report.add("oracle.refined_not_above_exact", std::max(refined_above, 0.0), 1e-10);
  report.add("oracle.refinement_nondecreasing", std::max(refined_drop, 0.0), 1e-12);
  return report;
}

Suite parse_suite(std::string_view name) {
  if (name == "props") return Suite::props;
  if (name == "discrimination") return Suite::discrimination;
  if (name == "d3-census") return Suite::d3_census;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

VerificationReport run_suite(Suite suite, const SuiteOptions& options) {
  VerificationReport report;
  if (suite == Suite::props || suite == Suite::all) {
    SweepOptions opt;
    opt.seed = options.seed;
    opt.max_exhaustive = 50000;
    const std::vector<std::size_t> mub_dims = {2, 3, 5};
    const std::vector<std::size_t> mum_dims = {3};
    const std::vector<std::size_t> mbb_dims = {2, 3, 4, 5, 6, 7, 8};
    const auto p1 = proposition_sweep(Proposition::mub, mub_dims, opt);
    report.merge(p1.report, "props.");
    for (const auto& row : p1.rows) {
      if (row.d == 2 && row.n == 3) report.add("props.mub_tight.d=2.N=3", std::abs(row.worst_slack), kSlackTol);
    }
    report.merge(proposition_sweep(Proposition::mum, mum_dims, opt).report, "props.");
    report.merge(proposition_sweep(Proposition::mbb, mbb_dims, opt).report, "props.");
    const std::vector<std::size_t> oracle_dims = {2, 3};
    report.merge(verify_oracle(oracle_dims, 20, options.samples, options.seed), "props.");
  }
  if (suite == Suite::discrimination || suite == Suite::all) {
    report.merge(verify_discrimination(linspace(0.01, 0.99, 99)), "discrimination.");
  }
  if (suite == Suite::d3_census || suite == Suite::all) {
    const auto census = enumerate_d3_triplets();
    report.merge(census.report, "d3-census.");
    const auto reordered = enumerate_d3_triplets({3, 1, 0, 2});
    report.add("d3-census.reorder_invariant",
               reordered.singular == census.singular && reordered.regular == census.regular, 0.0, 0.0);
    std::vector<double> etas = linspace(0.0, 0.9, 10);
    etas.push_back(1.0 / std::sqrt(3.0));
    report.merge(verify_triples(etas), "d3-census.");
  }
  return report;
}

std::vector<double> linspace(double start, double stop, std::size_t n) {
  if (n == 0) throw std::invalid_argument("linspace: count must be >= 1");
  if (n == 1) return {start};
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  out.back() = stop;
  return out;
}

}  // namespace fgu
