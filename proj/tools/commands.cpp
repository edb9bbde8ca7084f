// Copyright 2026 The hidcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hidcorr/random.hpp"

namespace hidcorr::cli {

namespace {

using io::Json;

Json number_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

Json matrix_json(const DensityMatrix<double>& d) { return io::to_json(d.matrix()); }

Json direction_json(const Direction& d) {
  return Json{{"theta", d.theta}, {"phi", d.phi}, {"psi", d.psi}};
}

std::string q_label(double q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::pair<Index, Index> parse_given(const std::string& s) {
  const auto eq = s.find('=');
  if (eq == std::string::npos) throw UsageError("--given expects AXIS=VALUE, got '" + s + "'");
  try {
    return {std::stoll(s.substr(0, eq)), std::stoll(s.substr(eq + 1))};
  } catch (const std::exception&) {
    throw UsageError("--given expects AXIS=VALUE, got '" + s + "'");
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string(flag) + " is required");
}

// Judges each Tsallis subadditivity verdict; only q > 1 is guaranteed.
void add_tsallis_check(Report& report, const std::string& name, double q, double slack,
                       bool holds, double tolerance) {
  report.add_check(name + "(q=" + q_label(q) + ")", slack, holds, tolerance, q > 1);
}

}  // namespace

Json request_echo(const AnalysisRequest& r) {
  Json j;
  j["subcommand"] = r.subcommand;
  if (!r.input.empty()) j["input"] = r.input;
  if (!r.dims.empty()) j["dims"] = r.dims;
  if (r.subcommand == "analyze-prob" || r.subcommand == "analyze-dm") j["split"] = r.split;
  if (!r.qs.empty()) j["q"] = r.qs;
  if (!r.given.empty()) j["given"] = r.given;
  if (!r.grid.empty()) j["grid"] = r.grid;
  if (r.subcommand == "fuzz") j["count"] = r.count;
  return j;
}

Report::Report(const AnalysisRequest& request) {
  head_["tool"] = "hidcorr";
  head_["version"] = kToolVersion;
  head_["request"] = request_echo(request);
  head_["seed"] = request.seed;
  head_["units"] = "nats";
}

void Report::add_check(const std::string& name, double value, bool holds, double tolerance,
                       bool guaranteed, bool infinite) {
  Json c;
  c["name"] = name;
  c["value"] = number_or_null(value);
  if (infinite) c["infinite"] = true;
  c["holds"] = holds;
  c["tolerance"] = tolerance;
  c["guaranteed"] = guaranteed;
  checks_.push_back(std::move(c));
  if (guaranteed && !holds) ok_ = false;
}

Json Report::to_json() const {
  Json j = head_;
  for (const auto& [k, v] : body_.items()) j[k] = v;
  j["checks"] = checks_;
  j["all_hold"] = ok_;
  return j;
}

CommandResult Report::finish() const {
  return {to_json().dump(2) + "\n", "", ok_ ? 0 : 1};
}

CommandResult analyze_prob(const AnalysisRequest& req) {
  require(req.input, "--input");
  require(req.dims, "--dims");
  const Factorization f = io::parse_dims(req.dims);
  const auto p = io::read_probability_vector(req.input);
  const JointView<double> view(p, f);

  Report report(req);
  report.section("factorization") = io::to_json(f);
  report.section("distribution") = io::to_json(p);
  Json& marginals = report.section("marginals");
  for (Index k = 1; k <= f.rank(); ++k) {
    marginals["axis_" + std::to_string(k)] = io::to_json(marginal(view, {k}));
  }

  if (!req.given.empty()) {
    std::vector<Index> axes, values, targets;
    for (const auto& g : req.given) {
      const auto [axis, value] = parse_given(g);
      axes.push_back(axis);
      values.push_back(value);
    }
    for (Index k = 1; k <= f.rank(); ++k) {
      if (std::find(axes.begin(), axes.end(), k) == axes.end()) targets.push_back(k);
    }
    Json c;
    c["given_axes"] = axes;
    c["given_values"] = values;
    c["target_axes"] = targets;
    c["distribution"] = io::to_json(conditional(view, axes, targets, values));
    report.section("conditional") = std::move(c);
  }

  // Sections live in an ordered map: hold no references across insertions.
  report.section("tsallis") = Json::array();
  Json ts = Json::array();
  if (f.trivial()) {
    report.section("shannon") = Json{{"S_joint", shannon_entropy(p)}};
    for (double q : req.qs) {
      ts.push_back(Json{{"q", q}, {"S_q", tsallis_entropy(p, TsallisParam(q))}});
    }
    report.section("tsallis") = std::move(ts);
    return report.finish();
  }

  const QuditSplit split(f, req.split);
  const auto sr = subadditivity_report(view, split);
  const auto left = marginal(view, detail::axis_range(1, split.s()));
  const auto right = marginal(view, detail::axis_range(split.s() + 1, f.rank()));
  report.section("block_marginals") =
      Json{{"left", io::to_json(left)}, {"right", io::to_json(right)}};
  report.section("shannon") = Json{{"S_left", sr.entropy_left},
                                   {"S_right", sr.entropy_right},
                                   {"S_joint", sr.entropy_joint},
                                   {"mutual_info", sr.mutual_info},
                                   {"holds", sr.holds},
                                   {"tolerance", sr.tolerance}};
  report.add_check("subadditivity", sr.mutual_info, sr.holds, sr.tolerance);

  for (double q : req.qs) {
    const TsallisParam tq(q);
    const double sl = tsallis_entropy(left, tq);
    const double sr_q = tsallis_entropy(right, tq);
    const double sj = tsallis_entropy(p, tq);
    const bool holds = sl + sr_q - sj >= -tol::kInequality;
    ts.push_back(Json{{"q", q},
                      {"S_q_left", sl},
                      {"S_q_right", sr_q},
                      {"S_q", sj},
                      {"holds", holds},
                      {"tolerance", tol::kInequality}});
    add_tsallis_check(report, "tsallis_subadditivity", q, sl + sr_q - sj, holds,
                      tol::kInequality);
  }

  report.section("tsallis") = std::move(ts);

  if (f.rank() >= 3) {
    const auto ssa = classical_ssa_check(view, 1, f.rank() - 1);
    Json blocks = Json::array();
    blocks.push_back(detail::axis_range(1, 1));
    blocks.push_back(detail::axis_range(2, f.rank() - 1));
    blocks.push_back(detail::axis_range(f.rank(), f.rank()));
    report.section("strong_subadditivity") = Json{{"blocks", std::move(blocks)},
                                                  {"lhs", ssa.lhs},
                                                  {"rhs", ssa.rhs},
                                                  {"holds", ssa.holds},
                                                  {"tolerance", ssa.tolerance}};
    report.add_check("strong_subadditivity", ssa.lhs - ssa.rhs, ssa.holds, ssa.tolerance);
  }
  return report.finish();
}

CommandResult analyze_dm(const AnalysisRequest& req) {
  require(req.input, "--input");
  require(req.dims, "--dims");
  const Factorization f = io::parse_dims(req.dims);
  const auto d = validate<double>(io::read_matrix(req.input));
  const ReshapedState<double> rs(d, f);

  Report report(req);
  report.section("factorization") = io::to_json(f);
  const double s_total = von_neumann_entropy(d);
  report.section("state") = Json{{"dim", d.dim()},
                                 {"eigenvalues", io::to_json(d.eigenvalues())},
                                 {"S", s_total}};
  report.add_check("entropy_bounds", s_total,
                   s_total >= -tol::kEigenvalue &&
                       s_total <= std::log(double(d.dim())) + tol::kEigenvalue,
                   tol::kEigenvalue);

  if (!f.trivial()) {
    const QuditSplit split(f, req.split);
    const auto rho1 = partial_trace_right(rs, split);
    const auto rho2 = partial_trace_left(rs, split);
    const double s1 = von_neumann_entropy(rho1);
    const double s2 = von_neumann_entropy(rho2);
    const double iq = s1 + s2 - s_total;
    report.section("reduced") = Json{{"rho1", matrix_json(rho1)}, {"rho2", matrix_json(rho2)}};
    report.section("entropies") = Json{{"S", s_total},
                                       {"S1", s1},
                                       {"S2", s2},
                                       {"I_q", iq},
                                       {"I_q_convention", "S1 + S2 - S"}};
    report.add_check("quantum_subadditivity", iq, iq >= -tol::kQuantumSubadditivity,
                     tol::kQuantumSubadditivity);
    report.section("linear_entropy") = linear_entropy(rs, split);
    const auto sep = separability_test(rs, split);
    report.section("separability") = Json{{"status", to_string(sep.status)},
                                          {"witness_value", sep.witness_value},
                                          {"criterion", "partial transpose"},
                                          {"tolerance", tol::kEigenvalue}};
    if (split.dim_left() == 2 && split.dim_right() == 2) {
      const double chsh = chsh_max(rs, split);
      report.section("bell") =
          Json{{"chsh_max", chsh}, {"classical_bound", 2.0}, {"violated", chsh > 2.0}};
    }
  }

  if (d.dim() == 2) {
    const auto zx = qubit_inequality_zx(d);
    const auto xy = qubit_inequality_xy(d);
    const auto xy_printed = qubit_inequality_xy(d, InequalityForm::Printed);
    report.section("qubit") =
        Json{{"probabilities", io::to_json(probabilities_from_qubit(d))},
             {"inequality_zx", number_or_null(zx.value)},
             {"inequality_xy", number_or_null(xy.value)},
             {"inequality_xy_printed", number_or_null(xy_printed.value)}};
    report.add_check("qubit_inequality_zx", zx.value, zx.holds, zx.tolerance, true, zx.infinite);
    report.add_check("qubit_inequality_xy", xy.value, xy.holds, xy.tolerance, true, xy.infinite);
  }
  if (d.dim() == 3) {
    const auto sh = qutrit_inequality_shannon(d);
    const auto printed = qutrit_inequality_shannon(d, InequalityForm::Printed);
    Json qutrit{{"inequality_shannon", number_or_null(sh.value)},
                {"inequality_shannon_printed", number_or_null(printed.value)}};
    report.add_check("qutrit_inequality_shannon", sh.value, sh.holds, sh.tolerance, true,
                     sh.infinite);
    Json tsallis = Json::array();
    std::vector<double> qs = req.qs;
    if (qs.empty()) qs.push_back(2.0);
    for (double q : qs) {
      if (q <= 1) continue;
      const auto c = qutrit_inequality_tsallis(d, TsallisParam(q));
      tsallis.push_back(Json{{"q", q}, {"value", number_or_null(c.value)}});
      report.add_check("qutrit_inequality_tsallis(q=" + q_label(q) + ")", c.value, c.holds,
                       c.tolerance, true, c.infinite);
    }
    qutrit["inequality_tsallis"] = std::move(tsallis);
    report.section("qutrit") = std::move(qutrit);
  }
  return report.finish();
}

CommandResult tomogram_sweep(const AnalysisRequest& req) {
  require(req.input, "--input");
  require(req.dims, "--dims");
  require(req.grid, "--grid");
  const Factorization f = io::parse_dims(req.dims);
  const auto d = validate<double>(io::read_matrix(req.input));
  if (f.total() != d.dim()) {
    throw UsageError("dimension mismatch: density matrix is " + std::to_string(d.dim()) +
                     "-dimensional, factorization " + to_string(f) + " has N = " +
                     std::to_string(f.total()));
  }
  const SpinRep<double> rep(static_cast<int>(d.dim() - 1));
  const auto grid = io::read_directions(req.grid);
  std::vector<TsallisParam> qs;
  for (double q : req.qs) qs.emplace_back(q);

  const auto records = direction_sweep(d, rep, f, grid, qs);
  std::string out;
  bool ok = true;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    Json line;
    line["index"] = i;
    line["direction"] = direction_json(r.tomogram.direction);
    line["w"] = io::to_json(r.tomogram.values);
    line["mutual_info"] = r.mutual_info;
    line["holds"] = r.mutual_info_holds;
    line["tolerance"] = tol::kInequality;
    ok = ok && r.mutual_info_holds;
    Json ts = Json::array();
    for (const auto& [q, t] : r.tsallis) {
      ts.push_back(Json{{"q", q},
                        {"S_q1", t.tsallis_first},
                        {"S_q2", t.tsallis_second},
                        {"S_q", t.tsallis_joint},
                        {"holds", t.subadditivity_holds},
                        {"tolerance", t.tolerance},
                        {"guaranteed", q > 1}});
      if (q > 1) ok = ok && t.subadditivity_holds;
    }
    line["tsallis"] = std::move(ts);
    out += line.dump() + "\n";
  }
  return {out, "", ok ? 0 : 1};
}

CommandResult demo_four_level(const AnalysisRequest& req) {
  const Factorization f{2, 2};
  Report report(req);
  report.section("partition") = Json{{"N", f.total()}, {"M", f.rank()}, {"dims", f.dims()}};

  Json compose_table = Json::array();
  for (Index x2 = 1; x2 <= 2; ++x2) {
    for (Index x1 = 1; x1 <= 2; ++x1) {
      compose_table.push_back(Json{{"x1", x1}, {"x2", x2}, {"y", compose(f, {x1, x2})}});
    }
  }
  Json x1_of_y = Json::array(), x2_of_y = Json::array();
  for (Index y = 1; y <= f.total(); ++y) {
    const auto x = decompose(y, f);
    x1_of_y.push_back(x.coords[0]);
    x2_of_y.push_back(x.coords[1]);
  }
  report.section("index_tables") =
      Json{{"y_of_x", std::move(compose_table)}, {"x1_of_y", x1_of_y}, {"x2_of_y", x2_of_y}};

  // Spin-3/2 projections relabelled m = -3/2 -> 1, ..., 3/2 -> 4.
  const char* labels[] = {"-3/2", "-1/2", "1/2", "3/2"};
  Json relabel = Json::array();
  for (Index y = 1; y <= 4; ++y) relabel.push_back(Json{{"m", labels[y - 1]}, {"y", y}});
  report.section("spin_relabeling") = std::move(relabel);

  // |psi> = 2^{-1/2} (|3/2> + |-3/2>) lands on y = 4 and y = 1.
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(4);
  psi(0) = psi(3) = 1.0 / std::numbers::sqrt2;
  const auto d = validate<double>(psi * psi.adjoint());
  const ReshapedState<double> rs(d, f);
  const QuditSplit split(f, 1);
  report.section("state") = Json{{"description", "2^{-1/2}(|3/2> + |-3/2>)"},
                                 {"amplitudes", io::to_json(Eigen::VectorXd(psi.real()))},
                                 {"rho", matrix_json(d)}};

  const auto rho1 = partial_trace_right(rs, split);
  const auto rho2 = partial_trace_left(rs, split);
  report.section("reduced") = Json{{"rho1", matrix_json(rho1)}, {"rho2", matrix_json(rho2)}};

  const double s = von_neumann_entropy(d);
  const double s1 = von_neumann_entropy(rho1);
  const double s2 = von_neumann_entropy(rho2);
  const double info = s1 + s2 - s;
  report.section("entropies") =
      Json{{"S", s}, {"S1", s1}, {"S2", s2}, {"I", info}, {"I_convention", "S1 + S2 - S"}};
  report.add_check("quantum_subadditivity", info, info >= -tol::kQuantumSubadditivity,
                   tol::kQuantumSubadditivity);
  report.add_check("mutual_information_is_2ln2", info - 2 * std::numbers::ln2,
                   std::abs(info - 2 * std::numbers::ln2) <= tol::kInequality, tol::kInequality);

  const double lin = linear_entropy(rs, split);
  report.section("linear_entropy") = lin;

  const auto sep = separability_test(rs, split);
  report.section("separability") = Json{{"status", to_string(sep.status)},
                                        {"witness_value", sep.witness_value},
                                        {"criterion", "partial transpose"},
                                        {"tolerance", tol::kEigenvalue}};

  const double chsh = chsh_max(rs, split);
  report.section("bell") = Json{{"chsh_max", chsh},
                                {"classical_bound", 2.0},
                                {"violated", chsh > 2.0},
                                {"verdict", chsh > 2.0 ? "Bell inequality violated"
                                                       : "Bell inequality satisfied"}};

  const SpinRep<double> rep(3);
  const auto t = tomogram(d, rep, Direction{});
  const double tinfo = mutual_tomographic_information(t, f);
  report.section("tomogram_z") = Json{{"direction", direction_json(t.direction)},
                                      {"w", io::to_json(t.values)},
                                      {"mutual_info", tinfo}};
  report.add_check("tomographic_mutual_information", tinfo, tinfo >= -tol::kInequality,
                   tol::kInequality);
  return report.finish();
}

namespace {

struct Sweep {
  std::string name;
  double tolerance;
  Index samples = 0;
  Index infinite = 0;
  double min_margin = std::numeric_limits<double>::infinity();

  void record(double margin, bool is_infinite = false) {
    ++samples;
    if (is_infinite) {
      ++infinite;
      return;
    }
    min_margin = std::min(min_margin, margin);
  }
  bool holds() const { return !(min_margin < -tolerance); }
};

}  // namespace

CommandResult fuzz(const AnalysisRequest& req) {
  if (req.count < 1) throw UsageError("--count must be positive");
  std::mt19937_64 rng(req.seed);
  Report report(req);

  std::vector<Sweep> sweeps = {
      {"classical_subadditivity", tol::kInequality},
      {"relative_entropy_shannon", tol::kInequality},
      {"relative_entropy_tsallis(q=2)", tol::kInequality},
      {"qubit_inequality_zx", tol::kInequality},
      {"qubit_inequality_xy", tol::kInequality},
      {"quantum_subadditivity", tol::kQuantumSubadditivity},
      {"qutrit_inequality_shannon", tol::kInequality},
      {"qutrit_inequality_tsallis(q=1.5)", tol::kInequality},
      {"qutrit_inequality_tsallis(q=2)", tol::kInequality},
      {"qutrit_inequality_tsallis(q=3)", tol::kInequality},
      {"tomographic_mutual_information", tol::kInequality},
  };

  std::vector<Index> composites;
  for (Index n = 4; n <= 64; ++n) {
    for (Index k = 2; k * k <= n; ++k) {
      if (n % k == 0) {
        composites.push_back(n);
        break;
      }
    }
  }
  std::uniform_int_distribution<std::size_t> pick_n(0, composites.size() - 1);
  std::uniform_int_distribution<Index> pick_len(2, 8);
  const Factorization two_by_two{2, 2};
  const SpinRep<double> spin32(3);

  for (Index i = 0; i < req.count; ++i) {
    const Factorization f = random::random_split_factorization(rng, composites[pick_n(rng)]);
    std::uniform_int_distribution<Index> pick_s(1, f.rank() - 1);
    const JointView<double> view(random::dirichlet_uniform(rng, f.total()), f);
    sweeps[0].record(subadditivity_report(view, QuditSplit(f, pick_s(rng))).mutual_info);

    const Index len = pick_len(rng);
    const auto p = random::dirichlet_uniform(rng, len);
    const auto r = random::dirichlet_uniform(rng, len);
    const auto ds = relative_entropy_shannon(p, r);
    sweeps[1].record(ds.value, ds.infinite);
    const auto dt = relative_entropy_tsallis(p, r, TsallisParam(2.0));
    sweeps[2].record(dt.value, dt.infinite);

    const auto qubit = qubit_from_probabilities(random::bloch_ball_uniform(rng));
    const auto zx = qubit_inequality_zx(qubit);
    sweeps[3].record(zx.value, zx.infinite);
    const auto xy = qubit_inequality_xy(qubit);
    sweeps[4].record(xy.value, xy.infinite);

    const ReshapedState<double> rs(random::ginibre_state(rng, 4), two_by_two);
    sweeps[5].record(mutual_quantum_information(rs, QuditSplit(two_by_two, 1)));

    const auto qutrit = random::ginibre_state(rng, 3);
    const auto sh = qutrit_inequality_shannon(qutrit);
    sweeps[6].record(sh.value, sh.infinite);
    const double qs[] = {1.5, 2.0, 3.0};
    for (int k = 0; k < 3; ++k) {
      const auto c = qutrit_inequality_tsallis(qutrit, TsallisParam(qs[k]));
      sweeps[7 + k].record(c.value, c.infinite);
    }

    const auto spin_state = random::ginibre_state(rng, 4);
    const auto t = tomogram(spin_state, spin32, random::random_direction(rng));
    sweeps[10].record(mutual_tomographic_information(t, two_by_two));
  }

  Json& out = report.section("sweeps");
  out = Json::array();
  for (const auto& s : sweeps) {
    out.push_back(Json{{"name", s.name},
                       {"samples", s.samples},
                       {"infinite", s.infinite},
                       {"min_margin", number_or_null(s.min_margin)},
                       {"tolerance", s.tolerance},
                       {"holds", s.holds()}});
    report.add_check(s.name, s.min_margin, s.holds(), s.tolerance);
  }
  return report.finish();
}

CommandResult run(const AnalysisRequest& req) {
  try {
    if (req.subcommand == "analyze-prob") return analyze_prob(req);
    if (req.subcommand == "analyze-dm") return analyze_dm(req);
    if (req.subcommand == "tomogram-sweep") return tomogram_sweep(req);
    if (req.subcommand == "demo-four-level") return demo_four_level(req);
    if (req.subcommand == "fuzz") return fuzz(req);
    throw UsageError("unknown subcommand '" + req.subcommand + "'");
  } catch (const InvalidDensityMatrix& e) {
    return {"", std::string("invalid density matrix: ") + e.what(), 2};
  } catch (const std::logic_error& e) {  // UsageError
    return {"", e.what(), 2};
  } catch (const std::runtime_error& e) {  // DomainError, json errors
    return {"", e.what(), 2};
  } catch (const nlohmann::json::exception& e) {
    return {"", e.what(), 2};
  }
}

}  // namespace hidcorr::cli
