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

#include "fgu/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fgu/bounds.hpp"
#include "fgu/discrimination.hpp"
#include "fgu/io.hpp"
#include "fgu/measurements.hpp"
#include "fgu/verify.hpp"

namespace fgu::cli {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Family {
  std::string name;
  std::size_t dim = 0;
  std::vector<OrthonormalBasis> bases;
  std::vector<MeasurementSet> sets;
  std::optional<double> kappa;
  std::optional<double> s;
  std::optional<double> eta;
};

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::stringstream is(item);
    T value{};
    if (!(is >> value) || !(is >> std::ws).eof()) {
      throw ConfigError(std::string("cannot parse ") + what + " entry '" + item + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw ConfigError(std::string(what) + " list is empty");
  return out;
}

std::vector<double> parse_grid(const std::string& text, const char* what) {
  double start = 0.0, stop = 0.0;
  long long count = 0;
  char c1 = 0, c2 = 0;
  std::stringstream ss(text);
  if (!(ss >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1 ||
      !(ss >> std::ws).eof()) {
    throw ConfigError(std::string(what) + " must look like start:stop:count");
  }
  return linspace(start, stop, static_cast<std::size_t>(count));
}

std::string join(const std::vector<std::size_t>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::vector<OrthonormalBasis> mub_bases(std::size_t d) {
  // At d = 3 the quartet is the canonical printed family.
  return d == 3 ? mub_d3_quartet() : mub_family_prime(d);
}

Family build_family(const RunConfig& cfg) {
  Family f;
  f.name = cfg.family;
  f.dim = cfg.dim;
  auto need_dim = [&](std::size_t min) {
    if (cfg.dim < min) throw ConfigError("--dim must be at least " + std::to_string(min) + " for family " + f.name);
  };
  if (f.name == "standard") {
    need_dim(1);
    f.bases = {standard_basis(cfg.dim)};
  } else if (f.name == "fourier") {
    need_dim(2);
    f.bases = {fourier_basis(cfg.dim)};
  } else if (f.name == "mub") {
    need_dim(2);
    f.bases = mub_bases(cfg.dim);
  } else if (f.name == "mbb") {
    need_dim(2);
    f.bases = mbb_family(cfg.dim);
  } else if (f.name == "mum") {
    need_dim(2);
    if (!cfg.s) throw ConfigError("family mum needs --s");
    auto mum = mum_from_mubs(mub_bases(cfg.dim), *cfg.s);
    f.sets = std::move(mum.sets);
    f.kappa = mum.kappa;
    f.s = cfg.s;
    return f;
  } else if (f.name == "helstrom" || f.name == "b92" || f.name == "discrimination") {
    if (cfg.dim != 0 && cfg.dim != 2) throw ConfigError("family " + f.name + " is two-dimensional");
    f.dim = 2;
    if (f.name != "helstrom") {
      if (!cfg.eta) throw ConfigError("family " + f.name + " needs --eta");
      f.eta = cfg.eta;
    }
    if (f.name != "b92") f.sets.push_back(helstrom_povm());
    if (f.name != "helstrom") f.sets.push_back(b92_povm(DiscriminationPair::limit(*cfg.eta)));
    return f;
  } else {
    throw ConfigError("unknown family '" + f.name + "'");
  }
  for (const auto& b : f.bases) f.sets.push_back(b.measurement());
  return f;
}

Json family_to_json(const Family& f) {
  Json doc{{"family", f.name}, {"dim", f.dim}};
  if (!f.bases.empty()) doc["bases"] = f.bases;
  doc["measurement_sets"] = f.sets;
  if (f.kappa) doc["kappa"] = *f.kappa;
  if (f.s) doc["s"] = *f.s;
  if (f.eta) doc["eta"] = *f.eta;
  return doc;
}

Family load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open input file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw ConfigError("invalid JSON in '" + path + "': " + e.what());
  }
  Family f;
  try {
    f.name = doc.value("family", std::string{});
    if (doc.contains("measurement_sets")) {
      f.sets = doc.at("measurement_sets").get<std::vector<MeasurementSet>>();
    } else if (doc.contains("elements")) {
      f.sets = {doc.get<MeasurementSet>()};
    } else if (doc.contains("bases")) {
      for (const auto& b : doc.at("bases")) f.sets.push_back(basis_from_json(b).measurement());
    } else if (doc.contains("vectors")) {
      f.sets = {basis_from_json(doc).measurement()};
    } else {
      throw ConfigError("input holds no measurement sets");
    }
    if (doc.contains("kappa")) f.kappa = doc.at("kappa").get<double>();
    if (doc.contains("s")) f.s = doc.at("s").get<double>();
    if (doc.contains("eta")) f.eta = doc.at("eta").get<double>();
  } catch (const Json::exception& e) {
    throw ConfigError("malformed measurement file '" + path + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError("malformed measurement file '" + path + "': " + e.what());
  }
  if (f.sets.empty()) throw ConfigError("input holds no measurement sets");
  f.dim = f.sets.front().dim;
  for (std::size_t t = 0; t < f.sets.size(); ++t) {
    const auto report = validate_povm(f.sets[t], tol::completeness);
    if (!report.passed()) {
      throw ConfigError("measurement set " + std::to_string(t) + " fails POVM validation (max residual " +
                        format_double(report.max_residual()) + ")");
    }
  }
  return f;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ConfigError("cannot open output file '" + cfg.output + "'");
  file << text;
}

Normalization resolve_normalization(const RunConfig& cfg, const Family& f) {
  if (cfg.normalization == "per-element") return Normalization::per_element_norm;
  if (cfg.normalization == "weight-sum") return Normalization::weight_sum;
  if (cfg.normalization == "auto") return f.name == "mum" ? Normalization::weight_sum : Normalization::per_element_norm;
  throw ConfigError("--normalization must be auto, per-element or weight-sum");
}

std::optional<double> closed_form_for(const Family& f, const std::vector<std::size_t>& set_ids,
                                      const OutcomeSelection& sel, Normalization norm) {
  const std::size_t n = set_ids.size();
  const bool equal = sel.equal_weights();
  const std::set<std::size_t> distinct(set_ids.begin(), set_ids.end());
  if (distinct.size() != n || !equal) return std::nullopt;
  if (f.name == "mub" && f.dim >= 2) return mub_closed_bound(f.dim, n);
  if (f.name == "mum" && f.kappa && norm == Normalization::weight_sum) return mum_closed_bound(f.dim, n, *f.kappa);
  if (f.name == "mbb" && n == f.dim && is_permutation_selection(sel, f.dim)) return mbb_closed_bound(f.dim);
  if (f.name == "discrimination" && f.eta && n == 2 && set_ids[0] == 0 && set_ids[1] == 1 &&
      sel.outcomes[0] < 2) {
    const std::size_t h = sel.outcomes[0];
    const std::size_t b = sel.outcomes[1];
    if (b == 2) return bound_inconclusive(*f.eta).value;
    if (b == h) return bound_matched(*f.eta).value;
    return bound_mismatched(*f.eta).value;
  }
  return std::nullopt;
}

std::string csv_optional(std::optional<double> x) { return x ? format_double(*x) : std::string{}; }

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family.empty()) throw ConfigError("construct needs --family");
  const auto f = build_family(cfg);
  emit(cfg, out, family_to_json(f).dump(2) + "\n");
  return kExitOk;
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  Family f;
  if (!cfg.input.empty()) {
    f = load_family(cfg.input);
  } else if (!cfg.family.empty()) {
    f = build_family(cfg);
  } else {
    throw ConfigError("bound needs --input or --family");
  }
  const auto norm = resolve_normalization(cfg, f);

  std::vector<std::size_t> set_ids;
  if (cfg.sets.empty()) {
    for (std::size_t t = 0; t < f.sets.size(); ++t) set_ids.push_back(t);
  } else {
    set_ids = parse_list<std::size_t>(cfg.sets, "--sets");
  }
  std::vector<MeasurementSet> chosen;
  for (std::size_t id : set_ids) {
    if (id >= f.sets.size()) throw ConfigError("--sets index " + std::to_string(id) + " out of range");
    chosen.push_back(f.sets[id]);
  }
  std::vector<double> weights;
  if (!cfg.weights.empty()) weights = parse_list<double>(cfg.weights, "--weights");

  if (cfg.all) {
    std::size_t total = 1;
    for (const auto& s : chosen) {
      total *= s.size();
      if (total > 1000000) throw ConfigError("--all would enumerate more than 10^6 selections");
    }
    std::ostringstream csv;
    Json rows = Json::array();
    csv << "selection,exact,closed_form,slack\n";
    for (std::size_t code = 0; code < total; ++code) {
      OutcomeSelection sel{{}, weights};
      std::size_t c = code;
      for (const auto& s : chosen) {
        sel.outcomes.push_back(c % s.size());
        c /= s.size();
      }
      const double exact = exact_fg_value(chosen, sel, norm);
      const auto closed = closed_form_for(f, set_ids, sel, norm);
      const std::optional<double> slack = closed ? std::optional(*closed - exact) : std::nullopt;
      csv << join(sel.outcomes, ' ') << ',' << format_double(exact) << ',' << csv_optional(closed) << ','
          << csv_optional(slack) << '\n';
      Json row{{"selection", sel.outcomes}, {"exact", exact}};
      if (closed) row["closed_form"] = *closed;
      if (slack) row["slack"] = *slack;
      rows.push_back(std::move(row));
    }
    emit(cfg, out, cfg.format == "csv" ? csv.str() : rows.dump(2) + "\n");
    return kExitOk;
  }

  if (cfg.selection.empty()) throw ConfigError("bound needs --selection (or --all)");
  const OutcomeSelection sel{parse_list<std::size_t>(cfg.selection, "--selection"), weights};
  validate_selection(chosen, sel);
  const auto result = exact_fg_bound(chosen, sel, norm);
  const auto closed = closed_form_for(f, set_ids, sel, norm);

  if (cfg.format == "csv") {
    std::ostringstream csv;
    csv << "selection,exact,closed_form,slack\n"
        << join(sel.outcomes, ' ') << ',' << format_double(result.value) << ',' << csv_optional(closed) << ','
        << csv_optional(closed ? std::optional(*closed - result.value) : std::nullopt) << '\n';
    emit(cfg, out, csv.str());
    return kExitOk;
  }
  Json doc = bound_to_json(result);
  doc["closed_form"] = closed ? Json(*closed) : Json(nullptr);
  doc["selection"] = sel.outcomes;
  doc["sets"] = set_ids;
  doc["normalization"] = norm == Normalization::weight_sum ? "weight-sum" : "per-element";
  if (!f.name.empty()) doc["family"] = f.name;
  emit(cfg, out, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  std::ostringstream csv;
  if (!cfg.scenario.empty()) {
    if (cfg.eta_grid.empty()) throw ConfigError("sweep --scenario needs --eta-grid start:stop:count");
    const auto scenario = parse_scenario(cfg.scenario);
    const auto grid = parse_grid(cfg.eta_grid, "--eta-grid");
    for (double eta : grid) {
      if (!(eta >= 0.0 && eta <= 1.0)) throw ConfigError("--eta-grid values must lie in [0, 1]");
    }
    csv << "eta,closed_form,exact,residual\n";
    for (const auto& row : scenario_sweep(scenario, grid)) {
      csv << format_double(row.eta) << ',' << format_double(row.closed_form) << ',' << format_double(row.exact)
          << ',' << format_double(row.residual) << '\n';
    }
  } else if (cfg.family == "mum") {
    if (cfg.s_grid.empty()) throw ConfigError("sweep --family mum needs --s-grid start:stop:count");
    if (!is_prime(cfg.dim)) throw ConfigError("sweep --family mum needs a prime --dim");
    const std::size_t n = cfg.n.value_or(cfg.dim + 1);
    if (n < 1 || n > cfg.dim + 1) throw ConfigError("--n must lie in 1..dim+1");
    SweepOptions opt;
    opt.seed = cfg.seed;
    opt.s_grid = parse_grid(cfg.s_grid, "--s-grid");
    for (double s : opt.s_grid) {
      if (!(s > 0.0 && s <= 1.0)) throw ConfigError("--s-grid values must lie in (0, 1]");
    }
    const std::vector<std::size_t> dims{cfg.dim};
    const auto sweep = proposition_sweep(Proposition::mum, dims, opt);
    csv << "s,kappa,closed_form,exact_max,slack\n";
    for (const auto& row : sweep.rows) {
      if (row.n != n) continue;
      csv << format_double(row.s) << ',' << format_double(row.kappa) << ',' << format_double(row.closed_form)
          << ',' << format_double(row.max_exact) << ',' << format_double(row.worst_slack) << '\n';
    }
  } else {
    throw ConfigError("sweep needs --scenario or --family mum");
  }
  emit(cfg, out, csv.str());
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  if (!cfg.base_order.empty()) {
    const auto v = parse_list<std::size_t>(cfg.base_order, "--base-order");
    if (v.size() != 4) throw ConfigError("--base-order needs four entries");
    std::copy(v.begin(), v.end(), order.begin());
  }
  TripletCensus census;
  try {
    census = enumerate_d3_triplets(order);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  std::ostringstream csv;
  csv << "case,bases,vectors,determinant,trace,minor_sum,bound,closed_form,class\n";
  for (std::size_t i = 0; i < census.cases.size(); ++i) {
    const auto& c = census.cases[i];
    const std::vector<std::size_t> bases{c.picks[0].basis, c.picks[1].basis, c.picks[2].basis};
    const std::vector<std::size_t> vectors{c.picks[0].vector, c.picks[1].vector, c.picks[2].vector};
    csv << i << ',' << join(bases, ' ') << ',' << join(vectors, ' ') << ',' << format_double(c.determinant) << ','
        << format_double(c.trace) << ',' << format_double(c.minor_sum) << ',' << format_double(c.bound) << ','
        << format_double(c.closed_form) << ',' << (c.cls == TripletClass::singular ? "det0" : "det1/3") << '\n';
  }
  emit(cfg, out, csv.str());
  return census.report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(cfg.suite);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");
  const auto report = run_suite(suite, SuiteOptions{cfg.seed, cfg.samples});
  Json doc = report;
  doc["suite"] = cfg.suite;
  doc["seed"] = cfg.seed;
  doc["samples"] = cfg.samples;
  emit(cfg, out, doc.dump(2) + "\n");
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FGU_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("FGU_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 1;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("--format must be json or csv");
    if (cfg.subcommand == "construct") return cmd_construct(cfg, out);
    if (cfg.subcommand == "bound") return cmd_bound(cfg, out);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg, out);
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg, out);
    if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
    throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg.seed = default_seed();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }

  CLI::App app{"Fine-grained uncertainty bounds for quantum measurement families", "fgu"};
  app.require_subcommand(1);

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "standard|fourier|mub|mbb|mum|helstrom|b92|discrimination");
    sub->add_option("--dim", cfg.dim, "Hilbert-space dimension");
    sub->add_option("--s", cfg.s, "Projector weight of the depolarized MUB measurements, (0, 1]");
    sub->add_option("--eta", cfg.eta, "Overlap cos(2 theta) of the discriminated states, [0, 1]");
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--out", cfg.output, "Write to FILE instead of stdout"); };

  auto* construct = app.add_subcommand("construct", "Emit a measurement family as JSON");
  add_family(construct);
  add_output(construct);

  auto* bound = app.add_subcommand("bound", "Exact bound for an outcome selection");
  add_family(bound);
  add_output(bound);
  bound->add_option("--input", cfg.input, "Measurement-family JSON written by construct");
  bound->add_option("--selection", cfg.selection, "Outcome index per measurement, e.g. 0,1,2");
  bound->add_option("--sets", cfg.sets, "Measurement indices to use (default: all)");
  bound->add_option("--weights", cfg.weights, "Nonnegative weight per measurement");
  bound->add_flag("--all", cfg.all, "Enumerate every selection");
  bound->add_option("--normalization", cfg.normalization, "auto|per-element|weight-sum");
  bound->add_option("--format", cfg.format, "json|csv");

  auto* sweep = app.add_subcommand("sweep", "Closed form against exact bound on a parameter grid (CSV)");
  add_family(sweep);
  add_output(sweep);
  sweep->add_option("--scenario", cfg.scenario, "inconclusive|matched|mismatched");
  sweep->add_option("--eta-grid", cfg.eta_grid, "start:stop:count");
  sweep->add_option("--s-grid", cfg.s_grid, "start:stop:count");
  sweep->add_option("--n", cfg.n, "Number of measurements (default dim+1)");
  sweep->add_option("--seed", cfg.seed, "Seed for sampled selections");

  auto* enumerate = app.add_subcommand("enumerate", "Census of d=3 MUB triplets (CSV)");
  add_output(enumerate);
  enumerate->add_option("--base-order", cfg.base_order, "Permutation of 0,1,2,3");

  auto* verify = app.add_subcommand("verify", "Run verification suites (JSON report)");
  add_output(verify);
  verify->add_option("--suite", cfg.suite, "props|discrimination|d3-census|all");
  verify->add_option("--seed", cfg.seed, "Base seed (default $FGU_SEED or 1)");
  verify->add_option("--samples", cfg.samples, "Haar samples per oracle check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  }
  for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();
  return run(cfg, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"fgu"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace fgu::cli
